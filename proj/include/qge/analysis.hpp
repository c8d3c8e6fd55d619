#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qge/forms.hpp"
#include "qge/manufactured.hpp"
#include "qge/solution.hpp"

namespace qge {

struct ErrorNorms {
  double l2 = 0.0;  // ||e||_L2
  double h1 = 0.0;  // |e|_1, gradient seminorm
  double h2 = 0.0;  // |e|_2, Frobenius norm of the Hessian
};

/// Errors of `numeric` against an exact jet, by quadrature on the solution's mesh.
ErrorNorms error_norms(const Solution& numeric, const std::function<Jet2(Point2)>& exact,
                       const AssemblyOptions& opts = {});

ErrorNorms error_norms(const Solution& numeric, const ManufacturedSolution& exact,
                       const AssemblyOptions& opts = {});

/// log(e_prev / e_curr) / log(h_prev / h_curr); empty when either error is not
/// positive. Throws InvalidArgument unless h_prev > h_curr > 0.
std::optional<double> observed_order(double e_prev, double e_curr, double h_prev, double h_curr);

/// One table row. One-level rows carry H = h and dofs_H = dofs_h.
struct ConvergenceRecord {
  double H = 0.0;
  double h = 0.0;
  long dofs_H = 0;
  long dofs_h = 0;
  double e_L2 = 0.0;
  std::optional<double> order_L2;
  double e_H1 = 0.0;
  std::optional<double> order_H1;
  double e_H2 = 0.0;
  std::optional<double> order_H2;
  double time_s = 0.0;

  friend bool operator==(const ConvergenceRecord&, const ConvergenceRecord&) = default;
};

/// Row metadata kept beside the table.
struct RowInfo {
  std::string method;  // "one-level" or "two-level"
  bool converged = true;
  int iterations = 0;

  friend bool operator==(const RowInfo&, const RowInfo&) = default;
};

struct ConvergenceTable {
  std::vector<ConvergenceRecord> rows;
  std::vector<RowInfo> info;

  void add(const ConvergenceRecord& row, const RowInfo& meta) {
    rows.push_back(row);
    info.push_back(meta);
  }
};

enum class OrderAxis { coarse_size, fine_size };

/// Fills the order columns from consecutive rows of the same method, measured
/// against H or h.
void fill_orders(ConvergenceTable& table, OrderAxis axis);

}  // namespace qge
