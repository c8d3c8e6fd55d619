#pragma once

#include <Eigen/Core>
#include <memory>
#include <optional>
#include <vector>

#include "qge/discretization.hpp"
#include "qge/forms.hpp"
#include "qge/solution.hpp"

namespace qge {

struct NewtonSettings {
  double abs_tol = 1e-11;             // on the residual 2-norm
  double rel_tol = 1e-10;             // on ||r_k|| / ||r_0||
  int max_iters = 25;
  std::optional<Eigen::VectorXd> initial_guess;  // zero when empty

  /// Throws InvalidArgument for nonpositive tolerances or max_iters < 1.
  void validate() const;
};

struct SolverOptions {
  int quad_degree = kDefaultQuadratureDegree;
  int workers = 0;
};

/// Times in seconds. wall_time covers discretization setup, assembly and linear
/// solves; it excludes mesh generation and error computation.
struct SolveReport {
  int iterations = 0;
  int linear_solves = 0;
  double initial_residual = 0.0;
  double final_residual = 0.0;
  std::vector<double> residual_history;
  bool converged = false;
  double wall_time = 0.0;
  double setup_time = 0.0;
  double assembly_time = 0.0;
  double solve_time = 0.0;
  double lookup_time = 0.0;
  double sampling_time = 0.0;
};

struct SolveResult {
  Solution solution;
  SolveReport report;
};

/// Newton iteration for a(psi, chi) + b(psi; psi, chi) + c(psi, chi) = l(chi) until
/// ||r|| <= abs_tol or ||r|| <= rel_tol ||r_0||. Non-convergence is reported, not
/// thrown; a singular factorization throws NumericalFailure.
SolveResult solve_one_level(std::shared_ptr<const Mesh> mesh, const FlowParams& params,
                            const ScalarField& forcing, const NewtonSettings& settings,
                            const SolverOptions& opts = {});

/// Same on a prebuilt discretization (no setup time recorded).
SolveResult solve_one_level(std::shared_ptr<const Discretization> disc, const FlowParams& params,
                            const ScalarField& forcing, const NewtonSettings& settings,
                            const AssemblyOptions& opts = {});

/// Starts from Ro' = 1 and lowers Ro geometrically in `steps` stages to the target,
/// with fixed forcing, seeding each stage with the previous solution.
SolveResult solve_with_continuation(std::shared_ptr<const Discretization> disc,
                                    const FlowParams& params, const ScalarField& forcing,
                                    const NewtonSettings& settings, int steps = 3,
                                    const AssemblyOptions& opts = {});

/// One-level solve that falls back to continuation when Newton from the given
/// start does not converge.
SolveResult solve_one_level_robust(std::shared_ptr<const Mesh> mesh, const FlowParams& params,
                                   const ScalarField& forcing, const NewtonSettings& settings,
                                   const SolverOptions& opts = {});

/// Linear fine-level step: (A + B(psi_H) + C) psi_h = L on `fine`, with lap(psi_H)
/// sampled at the fine quadrature points through centroid parent lookup.
SolveResult solve_fine_linear(const Solution& coarse, std::shared_ptr<const Mesh> fine,
                              const FlowParams& params, const ScalarField& forcing,
                              const SolverOptions& opts = {});

struct TwoLevelResult {
  SolveResult coarse;
  SolveResult fine;
  SolveReport total;  // aggregated timings; iterations from the coarse stage
};

/// Nonlinear coarse solve followed by the linear fine step. The fine mesh must be
/// nested in the coarse one.
TwoLevelResult solve_two_level(std::shared_ptr<const Mesh> coarse, std::shared_ptr<const Mesh> fine,
                               const FlowParams& params, const ScalarField& forcing,
                               const NewtonSettings& settings, const SolverOptions& opts = {});

}  // namespace qge
