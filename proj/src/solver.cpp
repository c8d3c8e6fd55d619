#include "qge/solver.hpp"

#include <chrono>
#include <cmath>

#include "qge/errors.hpp"
#include "qge/parent_lookup.hpp"
#include "qge/sparse_solver.hpp"

namespace qge {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

void NewtonSettings::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iters < 1) {
    throw InvalidArgument("Newton tolerances must be positive and max_iters >= 1");
  }
}

SolveResult solve_one_level(std::shared_ptr<const Discretization> disc, const FlowParams& params,
                            const ScalarField& forcing, const NewtonSettings& settings,
                            const AssemblyOptions& opts) {
  settings.validate();
  params.validate();
  const auto t_start = Clock::now();
  SolveReport report;

  auto t0 = Clock::now();
  const LinearParts parts = assemble_linear_parts(*disc, forcing, params, opts);
  const SparseOperator& a = parts.biharmonic;
  const SparseOperator& c = parts.beta;
  const Eigen::VectorXd& load = parts.load;
  report.assembly_time += seconds_since(t0);

  Eigen::VectorXd psi = Eigen::VectorXd::Zero(disc->num_free());
  if (settings.initial_guess) {
    if (settings.initial_guess->size() != psi.size()) {
      throw InvalidArgument("initial guess does not match the free DoF count");
    }
    psi = *settings.initial_guess;
  }

  for (int k = 0;; ++k) {
    t0 = Clock::now();
    NewtonSystem sys = newton_system(Solution(disc, psi), a, c, load, opts);
    report.assembly_time += seconds_since(t0);
    const double rn = sys.residual.norm();
    report.residual_history.push_back(rn);
    if (k == 0) report.initial_residual = rn;
    report.final_residual = rn;
    if (!std::isfinite(rn)) break;
    if (rn <= settings.abs_tol || rn <= settings.rel_tol * report.initial_residual) {
      report.converged = true;
      break;
    }
    if (k == settings.max_iters) break;
    t0 = Clock::now();
    psi += sparse_direct_solve(sys.jacobian, sys.residual);
    report.solve_time += seconds_since(t0);
    ++report.linear_solves;
    report.iterations = k + 1;
  }
  report.wall_time = seconds_since(t_start);
  return {Solution(std::move(disc), std::move(psi)), report};
}

SolveResult solve_one_level(std::shared_ptr<const Mesh> mesh, const FlowParams& params,
                            const ScalarField& forcing, const NewtonSettings& settings,
                            const SolverOptions& opts) {
  const auto t0 = Clock::now();
  auto disc = std::make_shared<const Discretization>(std::move(mesh), opts.quad_degree);
  const double setup = seconds_since(t0);
  SolveResult r = solve_one_level(std::move(disc), params, forcing, settings, {opts.workers});
  r.report.setup_time = setup;
  r.report.wall_time += setup;
  return r;
}

SolveResult solve_with_continuation(std::shared_ptr<const Discretization> disc,
                                    const FlowParams& params, const ScalarField& forcing,
                                    const NewtonSettings& settings, int steps,
                                    const AssemblyOptions& opts) {
  if (steps < 1) throw InvalidArgument("continuation needs at least one step");
  params.validate();
  const double start = 1.0;
  NewtonSettings stage = settings;
  SolveReport total;
  std::optional<SolveResult> last;
  for (int k = 0; k <= steps; ++k) {
    FlowParams p = params;
    p.rossby = k == steps ? params.rossby
                          : start * std::pow(params.rossby / start, static_cast<double>(k) / steps);
    SolveResult r = solve_one_level(disc, p, forcing, stage, opts);
    total.iterations += r.report.iterations;
    total.linear_solves += r.report.linear_solves;
    total.assembly_time += r.report.assembly_time;
    total.solve_time += r.report.solve_time;
    total.wall_time += r.report.wall_time;
    total.residual_history.insert(total.residual_history.end(), r.report.residual_history.begin(),
                                  r.report.residual_history.end());
    total.initial_residual = r.report.initial_residual;
    total.final_residual = r.report.final_residual;
    total.converged = r.report.converged;
    stage.initial_guess = r.solution.coefficients();
    last.emplace(std::move(r));
  }
  last->report = total;
  return std::move(*last);
}

SolveResult solve_one_level_robust(std::shared_ptr<const Mesh> mesh, const FlowParams& params,
                                   const ScalarField& forcing, const NewtonSettings& settings,
                                   const SolverOptions& opts) {
  SolveResult r = solve_one_level(std::move(mesh), params, forcing, settings, opts);
  if (r.report.converged) return r;
  const double setup = r.report.setup_time;
  const double spent = r.report.wall_time;
  NewtonSettings cold = settings;
  cold.initial_guess.reset();
  SolveResult c = solve_with_continuation(r.solution.shared_discretization(), params, forcing, cold,
                                          3, {opts.workers});
  c.report.setup_time = setup;
  c.report.wall_time += spent;
  return c;
}

SolveResult solve_fine_linear(const Solution& coarse, std::shared_ptr<const Mesh> fine,
                              const FlowParams& params, const ScalarField& forcing,
                              const SolverOptions& opts) {
  params.validate();
  const AssemblyOptions aopts{opts.workers};
  const auto t_start = Clock::now();
  SolveReport report;

  auto t0 = Clock::now();
  auto disc = std::make_shared<const Discretization>(std::move(fine), opts.quad_degree);
  report.setup_time = seconds_since(t0);

  t0 = Clock::now();
  const ParentLocator locator(coarse.discretization().mesh());
  const std::vector<int> parents = locate_parents(disc->mesh(), locator);
  report.lookup_time = seconds_since(t0);

  t0 = Clock::now();
  const std::vector<double> lap = sample_laplacian(coarse, *disc, parents, aopts);
  report.sampling_time = seconds_since(t0);

  t0 = Clock::now();
  const LinearSystem sys = assemble_frozen_system(*disc, lap, forcing, params, aopts);
  const SparseOperator& op = sys.op;
  const Eigen::VectorXd& load = sys.rhs;
  report.assembly_time = seconds_since(t0) + report.sampling_time;

  t0 = Clock::now();
  Eigen::VectorXd psi = sparse_direct_solve(op, load);
  report.solve_time = seconds_since(t0);
  report.linear_solves = 1;
  report.initial_residual = load.norm();
  report.final_residual = (load - op.apply(psi)).norm();
  report.residual_history = {report.initial_residual, report.final_residual};
  report.converged = true;
  report.wall_time = seconds_since(t_start);
  return {Solution(std::move(disc), std::move(psi)), report};
}

TwoLevelResult solve_two_level(std::shared_ptr<const Mesh> coarse, std::shared_ptr<const Mesh> fine,
                               const FlowParams& params, const ScalarField& forcing,
                               const NewtonSettings& settings, const SolverOptions& opts) {
  SolveResult c = solve_one_level_robust(std::move(coarse), params, forcing, settings, opts);
  SolveResult f = solve_fine_linear(c.solution, std::move(fine), params, forcing, opts);
  SolveReport total;
  total.iterations = c.report.iterations;
  total.linear_solves = c.report.linear_solves + f.report.linear_solves;
  total.initial_residual = c.report.initial_residual;
  total.final_residual = f.report.final_residual;
  total.residual_history = c.report.residual_history;
  total.converged = c.report.converged && f.report.converged;
  total.wall_time = c.report.wall_time + f.report.wall_time;
  total.setup_time = c.report.setup_time + f.report.setup_time;
  total.assembly_time = c.report.assembly_time + f.report.assembly_time;
  total.solve_time = c.report.solve_time + f.report.solve_time;
  total.lookup_time = f.report.lookup_time;
  total.sampling_time = f.report.sampling_time;
  return {std::move(c), std::move(f), total};
}

}  // namespace qge
