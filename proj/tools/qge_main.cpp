// Command-line driver for the one-level and two-level solvers and the studies.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "qge/convergence_io.hpp"
#include "qge/errors.hpp"
#include "qge/studies.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSolver = 2;
constexpr int kExitAcceptance = 3;

struct Overrides {
  std::string config_path;
  std::optional<std::string> problem;
  std::optional<double> re, ro;
  std::optional<std::string> method;
  std::optional<std::string> h_list, coarse_list;
  std::optional<double> ratio;
  std::optional<int> quad_degree;
  std::optional<double> newton_tol;
  std::optional<int> workers;
  std::optional<std::string> out;
  std::optional<std::string> mesh_dump;
  bool check = false;
  bool gnuplot = false;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "Sectioned key = value config file");
  cmd->add_option("--problem", o.problem, "sine-squared | boundary-layer | zero");
  cmd->add_option("--re", o.re, "Reynolds number");
  cmd->add_option("--ro", o.ro, "Rossby number");
  cmd->add_option("--method", o.method, "one-level | two-level");
  cmd->add_option("--h-list", o.h_list, "Fine mesh sizes, e.g. 1/16,1/32");
  cmd->add_option("--H-list", o.coarse_list, "Coarse mesh sizes for sweep-H");
  cmd->add_option("--ratio", o.ratio, "H / h for paired runs (power of two)");
  cmd->add_option("--quad-degree", o.quad_degree, "Quadrature exactness degree, 1..20");
  cmd->add_option("--newton-tol", o.newton_tol, "Absolute Newton tolerance on ||r||_2");
  cmd->add_option("--workers", o.workers, "OpenMP threads for element loops (0: default)");
  cmd->add_option("--out", o.out, "Output stem for .csv/.json files");
  cmd->add_flag("--check", o.check, "Gate the exit code on the acceptance thresholds");
  cmd->add_flag("--gnuplot", o.gnuplot, "Also write two-column plot data files");
}

qge::ExperimentConfig resolve(const std::string& study, const Overrides& o) {
  qge::ExperimentConfig c;
  const bool from_file = !o.config_path.empty();
  if (from_file) c = qge::load_config(o.config_path);
  if (o.problem) c.problem = *o.problem;
  if (!from_file && c.problem == "boundary-layer") {
    c.reynolds = 5.0;
    c.rossby = 1e-4;
  }
  if (o.re) c.reynolds = *o.re;
  if (o.ro) c.rossby = *o.ro;
  if (o.method) c.method = *o.method;
  if (o.h_list) c.h_list = qge::parse_size_list(*o.h_list);
  if (o.coarse_list) c.coarse_list = qge::parse_size_list(*o.coarse_list);
  if (o.ratio) c.ratio = *o.ratio;
  if (o.quad_degree) c.quad_degree = *o.quad_degree;
  if (o.newton_tol) c.abs_tol = *o.newton_tol;
  if (o.workers) c.workers = *o.workers;
  if (o.out) c.out = *o.out;
  c.check = c.check || o.check;
  c.gnuplot = c.gnuplot || o.gnuplot;

  if (c.h_list.empty() && !from_file && !o.h_list) {
    if (study == "sweep-H") {
      c.h_list = {1.0 / 64};
    } else if (c.problem == "boundary-layer") {
      c.h_list = {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64};
    } else {
      c.h_list = {1.0 / 16, 1.0 / 32, 1.0 / 64};
    }
  }
  if (study == "sweep-H" && c.coarse_list.empty() && !from_file && !o.coarse_list) {
    c.coarse_list = {1.0 / 4, 1.0 / 8, 1.0 / 16, 1.0 / 32};
  }
  c.validate();
  return c;
}

void print_checks(const std::vector<qge::CheckOutcome>& checks, bool& all_passed) {
  for (const auto& c : checks) {
    std::printf("%s  %s: %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
    all_passed = all_passed && c.passed;
  }
}

int run_study(const std::string& study, const Overrides& o) {
  const qge::ExperimentConfig config = resolve(study, o);
  qge::StudyResult result;
  if (study == "solve") result = qge::run_solve(config);
  else if (study == "efficiency") result = qge::run_efficiency_study(config);
  else if (study == "sweep-H") result = qge::run_H_sweep(config);
  else result = qge::run_h_sweep(config);

  qge::write_csv(std::cout, result.table.rows);
  for (const auto& path : qge::emit_outputs(study, config, result)) {
    std::fprintf(stderr, "wrote %s\n", path.c_str());
  }
  if (o.mesh_dump && !config.h_list.empty()) {
    std::ofstream os(*o.mesh_dump);
    if (!os) throw qge::IoFailure("cannot open '" + *o.mesh_dump + "'");
    const auto exact = qge::solution_by_id(config.problem);
    qge::write_mesh(os, qge::generate_rect_mesh(exact.domain(), config.h_list.back()));
  }
  if (!result.all_converged) return kExitSolver;
  if (config.check) {
    bool passed = true;
    print_checks(qge::check_study(study, config, result), passed);
    if (!passed) return kExitAcceptance;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Argyris finite element solver for the stationary quasi-geostrophic equations"};
  app.require_subcommand(1);
  Overrides o;
  const std::pair<const char*, const char*> studies[] = {
      {"solve", "Solve on each h with the chosen method"},
      {"efficiency", "One-level at h against two-level at (ratio * h, h)"},
      {"sweep-H", "Two-level over coarse sizes at one fine size; orders in H"},
      {"sweep-h", "Two-level at (ratio * h, h) over fine sizes; orders in h"}};
  for (const auto& [name, help] : studies) {
    auto* cmd = app.add_subcommand(name, help);
    add_common(cmd, o);
    if (std::string(name) == "solve") {
      cmd->add_option("--mesh-dump", o.mesh_dump, "Write the finest mesh as v/t/b lines");
    }
  }
  app.add_subcommand("check", "Quadrature, element and parent-lookup self-checks");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }
  const std::string study = app.get_subcommands().front()->get_name();
  try {
    if (study == "check") {
      bool passed = true;
      print_checks(qge::run_self_checks(), passed);
      return passed ? kExitOk : kExitAcceptance;
    }
    return run_study(study, o);
  } catch (const qge::InvalidArgument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const qge::IoFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return kExitSolver;
  }
}
