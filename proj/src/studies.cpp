#include "qge/studies.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qge/argyris.hpp"
#include "qge/convergence_io.hpp"
#include "qge/errors.hpp"
#include "qge/parent_lookup.hpp"
#include "qge/quadrature.hpp"

namespace qge {

namespace {

struct RowOutcome {
  ConvergenceRecord record;
  RowInfo info;
  double energy_defect = 0.0;
  double lookup_fraction = 0.0;
};

int dyadic_levels(double H, double h) {
  const int levels = static_cast<int>(std::lround(std::log2(H / h)));
  if (levels < 0 || std::abs(std::ldexp(h, levels) - H) > 1e-9 * H) {
    throw InvalidArgument("H / h must be a power of two for nested red refinement");
  }
  return levels;
}

double energy_defect(const Solution& psi, const ScalarField& forcing, const FlowParams& params,
                     int workers) {
  const double a = eval_a(psi, params, {workers});
  const double l = eval_load(psi, forcing, params, {workers});
  if (a == 0.0 && l == 0.0) return 0.0;
  return std::abs(a - l) / std::max(std::abs(a), std::abs(l));
}

RowOutcome one_level_row(const ExperimentConfig& cfg, double h) {
  const ManufacturedSolution exact = solution_by_id(cfg.problem);
  const FlowParams params = cfg.flow();
  const ScalarField forcing = forcing_field(exact, params);
  auto mesh = std::make_shared<const Mesh>(generate_rect_mesh(exact.domain(), h));
  SolveResult r = solve_one_level_robust(mesh, params, forcing, cfg.newton(), cfg.solver_options());
  const ErrorNorms e = error_norms(r.solution, exact, {cfg.workers});
  RowOutcome out;
  const auto& disc = r.solution.discretization();
  out.record.H = out.record.h = disc.mesh().mesh_size();
  out.record.dofs_H = out.record.dofs_h = disc.num_free();
  out.record.e_L2 = e.l2;
  out.record.e_H1 = e.h1;
  out.record.e_H2 = e.h2;
  out.record.time_s = r.report.wall_time;
  out.info = {"one-level", r.report.converged, r.report.iterations};
  out.energy_defect = energy_defect(r.solution, forcing, params, cfg.workers);
  return out;
}

RowOutcome two_level_row(const ExperimentConfig& cfg, double H, double h) {
  const ManufacturedSolution exact = solution_by_id(cfg.problem);
  const FlowParams params = cfg.flow();
  const ScalarField forcing = forcing_field(exact, params);
  const int levels = dyadic_levels(H, h);
  const Mesh coarse = generate_rect_mesh(exact.domain(), H);
  auto fine = std::make_shared<const Mesh>(refine_levels(coarse, levels).fine);
  TwoLevelResult r = solve_two_level(std::make_shared<const Mesh>(coarse), fine, params, forcing,
                                     cfg.newton(), cfg.solver_options());
  const Solution& psi = r.fine.solution;
  const ErrorNorms e = error_norms(psi, exact, {cfg.workers});
  RowOutcome out;
  out.record.H = r.coarse.solution.discretization().mesh().mesh_size();
  out.record.h = psi.discretization().mesh().mesh_size();
  out.record.dofs_H = r.coarse.solution.discretization().num_free();
  out.record.dofs_h = psi.discretization().num_free();
  out.record.e_L2 = e.l2;
  out.record.e_H1 = e.h1;
  out.record.e_H2 = e.h2;
  out.record.time_s = r.total.wall_time;
  out.info = {"two-level", r.total.converged, r.total.iterations};
  out.energy_defect = energy_defect(psi, forcing, params, cfg.workers);
  out.lookup_fraction = r.total.assembly_time > 0.0 ? r.total.lookup_time / r.total.assembly_time : 0.0;
  return out;
}

void append(StudyResult& s, const RowOutcome& row) {
  s.table.add(row.record, row.info);
  s.energy_defects.push_back(row.energy_defect);
  s.lookup_fraction.push_back(row.info.method == "two-level" ? row.lookup_fraction : 0.0);
  s.all_converged = s.all_converged && row.info.converged;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

CheckOutcome in_range(const std::string& name, const std::optional<double>& v, double lo, double hi) {
  CheckOutcome c{name, false, "undefined"};
  if (v) {
    c.passed = *v >= lo && *v <= hi;
    c.detail = num(*v) + " in [" + num(lo) + ", " + num(hi) + "]";
  }
  return c;
}

CheckOutcome convergence_check(const StudyResult& r) {
  return {"all rows converged", r.all_converged, std::to_string(r.table.rows.size()) + " rows"};
}

CheckOutcome energy_check(const StudyResult& r) {
  double worst = 0.0;
  for (double d : r.energy_defects) worst = std::max(worst, d);
  return {"energy identity", worst <= 1e-8, "max relative defect " + num(worst) + " <= 1e-8"};
}

}  // namespace

StudyResult run_solve(const ExperimentConfig& config) {
  config.validate();
  StudyResult s;
  for (double h : config.h_list) {
    append(s, config.method == "one-level" ? one_level_row(config, h)
                                           : two_level_row(config, config.ratio * h, h));
  }
  fill_orders(s.table, OrderAxis::fine_size);
  return s;
}

StudyResult run_efficiency_study(const ExperimentConfig& config) {
  config.validate();
  StudyResult s;
  for (double h : config.h_list) {
    append(s, one_level_row(config, h));
    append(s, two_level_row(config, config.ratio * h, h));
  }
  fill_orders(s.table, OrderAxis::fine_size);
  return s;
}

StudyResult run_H_sweep(const ExperimentConfig& config) {
  config.validate();
  if (config.h_list.size() != 1) throw InvalidArgument("sweep-H needs exactly one fine size");
  StudyResult s;
  for (double H : config.coarse_list) append(s, two_level_row(config, H, config.h_list.front()));
  fill_orders(s.table, OrderAxis::coarse_size);
  return s;
}

StudyResult run_h_sweep(const ExperimentConfig& config) {
  config.validate();
  StudyResult s;
  for (double h : config.h_list) append(s, two_level_row(config, config.ratio * h, h));
  fill_orders(s.table, OrderAxis::fine_size);
  return s;
}

std::vector<CheckOutcome> check_study(const std::string& study, const ExperimentConfig& config,
                                      const StudyResult& result) {
  std::vector<CheckOutcome> out{convergence_check(result), energy_check(result)};
  const auto& rows = result.table.rows;
  if (study == "efficiency") {
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
      const double one = rows[i].e_H2, two = rows[i + 1].e_H2;
      const double rel = std::abs(two - one) / one;
      out.push_back({"H2 parity at h=" + num(rows[i].h), rel <= 0.05, num(rel) + " <= 0.05"});
    }
    if (rows.size() >= 2) {
      const auto& one = rows[rows.size() - 2];
      const auto& two = rows.back();
      const double speedup = one.time_s / two.time_s;
      out.push_back({"two-level speedup at largest pair", speedup >= 1.2,
                     num(one.time_s) + " s / " + num(two.time_s) + " s = " + num(speedup) +
                         " >= 1.2"});
    }
  } else if (study == "sweep-H") {
    // Mid-range: orders other than the first (pre-asymptotic) and the last (h-term plateau).
    for (std::size_t i = 2; i + 1 < rows.size(); ++i) {
      out.push_back(in_range("H2 order at H=" + num(rows[i].H), rows[i].order_H2, 4.3, 5.7));
    }
  } else if (study == "sweep-h" && rows.size() >= 2) {
    if (config.problem == "boundary-layer") {
      for (std::size_t i = rows.size() >= 2 ? rows.size() - 2 : 0; i < rows.size(); ++i) {
        if (i == 0) continue;
        out.push_back(in_range("H2 order at h=" + num(rows[i].h), rows[i].order_H2, 3.5, 5.0));
      }
    } else {
      out.push_back(in_range("final H2 order", rows.back().order_H2, 3.5, 4.7));
    }
  } else if (study == "solve" && rows.size() >= 2 && config.problem == "sine-squared") {
    out.push_back({"final H2 order >= 3.5",
                   rows.back().order_H2 && *rows.back().order_H2 >= 3.5,
                   rows.back().order_H2 ? num(*rows.back().order_H2) : "undefined"});
  }
  return out;
}

std::vector<CheckOutcome> run_self_checks() {
  std::vector<CheckOutcome> out;
  double worst = 0.0;
  for (int d = 1; d <= kMaxQuadratureDegree; ++d) {
    const QuadratureRule& rule = rule_for_degree(d);
    for (int a = 0; a <= d; ++a) {
      for (int b = 0; a + b <= d; ++b) {
        double s = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q) {
          s += rule.weights[q] * std::pow(rule.points[q].x, a) * std::pow(rule.points[q].y, b);
        }
        const double exact = reference_monomial_integral(a, b);
        worst = std::max(worst, std::abs(s - exact) / exact);
      }
    }
  }
  out.push_back({"quadrature exactness", worst <= 1e-13, "max relative error " + num(worst)});

  const auto dofs = argyris_dofs();
  const std::array<Point2, 3> ref{{{0, 0}, {1, 0}, {0, 1}}};
  const std::array<Point2, 3> normals{{{0, -1}, {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}, {-1, 0}}};
  double kron = 0.0;
  for (int i = 0; i < kArgyrisDofs; ++i) {
    const auto& d = dofs[i];
    BasisEval b;
    if (d.kind == DofKind::edge_normal_derivative) {
      const int e = d.location;
      b = reference_basis(0.5 * (ref[e] + ref[(e + 1) % 3]));
    } else {
      b = reference_basis(ref[d.location]);
    }
    for (int j = 0; j < kArgyrisDofs; ++j) {
      double v = 0.0;
      if (d.kind == DofKind::edge_normal_derivative) {
        v = normals[d.location].x * b.dx(j) + normals[d.location].y * b.dy(j);
      } else {
        v = b.jet(j, static_cast<int>(d.kind));
      }
      kron = std::max(kron, std::abs(v - (i == j ? 1.0 : 0.0)));
    }
  }
  out.push_back({"Argyris Kronecker property", kron <= 1e-10, "max deviation " + num(kron)});

  const MeshHierarchy hier = refine_levels(generate_rect_mesh(Rectangle::unit_square(), 0.5), 3);
  const ParentLocator locator(hier.coarse);
  const auto found = locate_parents(hier.fine, locator);
  std::size_t agree = 0;
  for (std::size_t t = 0; t < found.size(); ++t) agree += found[t] == hier.parent_of[t];
  out.push_back({"parent lookup agreement", agree == found.size(),
                 std::to_string(agree) + "/" + std::to_string(found.size())});
  return out;
}

nlohmann::json study_json(const std::string& study, const ExperimentConfig& config,
                          const StudyResult& result) {
  nlohmann::json doc = table_to_json(result.table);
  doc["study"] = study;
  doc["config"] = {{"problem", config.problem},
                   {"reynolds", config.reynolds},
                   {"rossby", config.rossby},
                   {"method", config.method},
                   {"h_list", config.h_list},
                   {"coarse_list", config.coarse_list},
                   {"ratio", config.ratio},
                   {"quad_degree", config.quad_degree},
                   {"abs_tol", config.abs_tol},
                   {"rel_tol", config.rel_tol},
                   {"max_iters", config.max_iters},
                   {"workers", config.workers},
                   {"text", emit_config(config)}};
  doc["metadata"] = {
      {"workers", config.workers > 0 ? config.workers : omp_get_max_threads()},
      {"quadrature_degree", config.quad_degree},
      {"newton_abs_tol", config.abs_tol},
      {"newton_rel_tol", config.rel_tol},
      {"newton_max_iters", config.max_iters},
      {"timing", "wall time of discretization setup, assembly and linear solves; excludes mesh "
                 "generation and error computation"},
      {"sizes", "H and h are realized mesh sizes (longest triangle edge)"}};
  doc["energy_defects"] = result.energy_defects;
  doc["all_converged"] = result.all_converged;
  return doc;
}

std::vector<std::string> emit_outputs(const std::string& study, const ExperimentConfig& config,
                                      const StudyResult& result) {
  std::vector<std::string> written;
  if (config.out.empty()) return written;
  std::ostringstream csv;
  write_csv(csv, result.table.rows);
  write_text_file(config.out + ".csv", csv.str());
  written.push_back(config.out + ".csv");
  write_text_file(config.out + ".json", study_json(study, config, result).dump(2) + "\n");
  written.push_back(config.out + ".json");
  if (config.gnuplot) {
    for (const auto& p : write_gnuplot(config.out, result.table)) written.push_back(p.string());
  }
  return written;
}

}  // namespace qge
