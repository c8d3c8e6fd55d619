#include <cmath>

#include "doctest.h"
#include "qge/analysis.hpp"
#include "qge/errors.hpp"
#include "qge/studies.hpp"

using namespace qge;

namespace {

void check_orders_recompute(const ConvergenceTable& t, OrderAxis axis) {
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    // Rows of the same method are paired with the nearest earlier row.
    std::size_t j = i;
    while (j-- > 0 && t.info[j].method != t.info[i].method) {}
    if (j >= i) continue;
    const auto& prev = t.rows[j];
    const auto& row = t.rows[i];
    const double sp = axis == OrderAxis::coarse_size ? prev.H : prev.h;
    const double sc = axis == OrderAxis::coarse_size ? row.H : row.h;
    REQUIRE(row.order_H2.has_value());
    CHECK(std::abs(*row.order_H2 - *observed_order(prev.e_H2, row.e_H2, sp, sc)) <= 1e-12);
    CHECK(std::abs(*row.order_L2 - *observed_order(prev.e_L2, row.e_L2, sp, sc)) <= 1e-12);
  }
}

}  // namespace

TEST_CASE("efficiency study on small meshes") {
  ExperimentConfig c;
  c.h_list = {1.0 / 4, 1.0 / 8};
  c.workers = 2;
  const StudyResult r = run_efficiency_study(c);
  REQUIRE(r.table.rows.size() == 4);
  CHECK(r.table.info[0].method == "one-level");
  CHECK(r.table.info[1].method == "two-level");
  CHECK(r.all_converged);
  CHECK(r.table.rows[1].H == doctest::Approx(2 * r.table.rows[1].h));
  CHECK(r.table.rows[0].dofs_h == r.table.rows[1].dofs_h);
  CHECK(r.table.rows[1].dofs_H < r.table.rows[1].dofs_h);
  for (double d : r.energy_defects) CHECK(d <= 1e-8);
  check_orders_recompute(r.table, OrderAxis::fine_size);
  const auto checks = check_study("efficiency", c, r);
  CHECK(checks.size() == 5);
}

TEST_CASE("H sweep orders are in H") {
  ExperimentConfig c;
  c.h_list = {1.0 / 8};
  c.coarse_list = {1.0 / 2, 1.0 / 4};
  const StudyResult r = run_H_sweep(c);
  REQUIRE(r.table.rows.size() == 2);
  CHECK(r.table.rows[0].h == r.table.rows[1].h);
  check_orders_recompute(r.table, OrderAxis::coarse_size);

  c.h_list = {1.0 / 8, 1.0 / 16};
  CHECK_THROWS_AS(run_H_sweep(c), InvalidArgument);
  c.h_list = {0.1};
  CHECK_THROWS_AS(run_H_sweep(c), InvalidArgument);  // H / h not a power of two
}

TEST_CASE("single h gives one row without an order; empty list gives no rows") {
  ExperimentConfig c;
  c.h_list = {1.0 / 4};
  const StudyResult one = run_h_sweep(c);
  REQUIRE(one.table.rows.size() == 1);
  CHECK_FALSE(one.table.rows[0].order_H2.has_value());
  c.h_list.clear();
  CHECK(run_h_sweep(c).table.rows.empty());
  CHECK(run_solve(c).table.rows.empty());
}

TEST_CASE("one-level solve study reports realized mesh sizes") {
  ExperimentConfig c;
  c.method = "one-level";
  c.h_list = {1.0 / 4};
  const StudyResult r = run_solve(c);
  REQUIRE(r.table.rows.size() == 1);
  CHECK(r.table.rows[0].h == doctest::Approx(std::sqrt(2.0) / 4));
  CHECK(r.table.rows[0].H == r.table.rows[0].h);
}

TEST_CASE("self checks pass") {
  for (const auto& c : run_self_checks()) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("study JSON carries config, metadata and rows") {
  ExperimentConfig c;
  c.h_list = {1.0 / 4};
  const StudyResult r = run_h_sweep(c);
  const nlohmann::json j = study_json("sweep-h", c, r);
  CHECK(j["study"] == "sweep-h");
  CHECK(j["rows"].size() == 1);
  CHECK(j["config"]["problem"] == "sine-squared");
  CHECK(j["metadata"]["workers"].get<int>() >= 1);
  CHECK(parse_config(j["config"]["text"].get<std::string>()) == c);
}
