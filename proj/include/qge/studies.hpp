#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qge/analysis.hpp"
#include "qge/config.hpp"

namespace qge {

/// Outcome of one study: the table plus per-row solver detail for checks.
struct StudyResult {
  ConvergenceTable table;
  std::vector<double> energy_defects;  // |a(psi, psi) - l(psi)| / |l(psi)| per row
  std::vector<double> lookup_fraction; // lookup time / two-level assembly time, two-level rows
  bool all_converged = true;
};

/// Rows for each h in config.h_list with config.method (two-level at H = ratio * h).
StudyResult run_solve(const ExperimentConfig& config);

/// For each h: one-level at h, then two-level at (ratio * h, h).
StudyResult run_efficiency_study(const ExperimentConfig& config);

/// Two-level at each H in config.coarse_list with h = config.h_list.front(); orders in H.
StudyResult run_H_sweep(const ExperimentConfig& config);

/// Two-level at (ratio * h, h) for each h; orders in h.
StudyResult run_h_sweep(const ExperimentConfig& config);

/// One pass/fail line of a threshold check.
struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Thresholds for the study named `study` ("solve", "efficiency", "sweep-H", "sweep-h").
std::vector<CheckOutcome> check_study(const std::string& study, const ExperimentConfig& config,
                                      const StudyResult& result);

/// Fast library self-tests: quadrature exactness, Argyris Kronecker property,
/// parent lookup against refinement parentage.
std::vector<CheckOutcome> run_self_checks();

/// JSON document: config echo, metadata, rows.
nlohmann::json study_json(const std::string& study, const ExperimentConfig& config,
                          const StudyResult& result);

/// Writes <out>.csv, <out>.json and optional gnuplot files; returns paths written.
std::vector<std::string> emit_outputs(const std::string& study, const ExperimentConfig& config,
                                      const StudyResult& result);

}  // namespace qge
