#pragma once

#include <string>
#include <vector>

#include "qge/discretization.hpp"
#include "qge/solver.hpp"

namespace qge {

/// Everything a study needs. Sizes are target mesh sizes; reported sizes are the
/// realized mesh_size values.
struct ExperimentConfig {
  std::string problem = "sine-squared";
  double reynolds = 1.0;
  double rossby = 1.0;
  std::string method = "two-level";     // one-level | two-level
  std::vector<double> h_list;           // fine sizes, decreasing
  std::vector<double> coarse_list;      // coarse sizes for sweep-H, decreasing
  double ratio = 2.0;                   // H / h for paired studies
  int quad_degree = kDefaultQuadratureDegree;
  double abs_tol = 1e-11;
  double rel_tol = 1e-10;
  int max_iters = 25;
  int workers = 0;
  std::string out;                      // output stem; empty: stdout only
  bool gnuplot = false;
  bool check = false;

  FlowParams flow() const { return {reynolds, rossby}; }
  NewtonSettings newton() const;
  SolverOptions solver_options() const { return {quad_degree, workers}; }

  /// Throws InvalidArgument on unknown problems or methods, nonpositive or
  /// non-decreasing sizes, or bad solver settings.
  void validate() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Sectioned key = value text:
///   [problem] id, reynolds, rossby
///   [mesh]    h_list, coarse_list, ratio
///   [solver]  method, quad_degree, abs_tol, rel_tol, max_iters, workers
///   [output]  out, gnuplot, check
/// Strings are double quoted, lists are [a, b], '#' starts a comment.
/// Throws InvalidArgument on syntax errors or unknown keys.
ExperimentConfig parse_config(const std::string& text);
std::string emit_config(const ExperimentConfig& config);

ExperimentConfig load_config(const std::string& path);

/// Parses a positive size such as "0.25", "1/16" or "2.5e-2"; throws InvalidArgument.
double parse_size(const std::string& token);

/// Comma separated sizes.
std::vector<double> parse_size_list(const std::string& text);

}  // namespace qge
