#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <memory>
#include <span>
#include <vector>

#include "qge/dof_map.hpp"

namespace qge {

/// Row-major (CSR) structure over free DoFs, column indices sorted within a row.
struct SparsityPattern {
  int dimension = 0;
  std::vector<int> row_ptr;
  std::vector<int> col_idx;

  /// Position of (row, col) in col_idx, or -1.
  int find(int row, int col) const;
  std::size_t nonzeros() const { return col_idx.size(); }
};

/// Couples every pair of free DoFs that share a triangle.
std::shared_ptr<const SparsityPattern> build_sparsity_pattern(const DofMap& dofs);

/// Square operator over free DoFs on a shared, fixed pattern.
class SparseOperator {
 public:
  SparseOperator() = default;
  explicit SparseOperator(std::shared_ptr<const SparsityPattern> pattern);

  int dimension() const { return pattern_ ? pattern_->dimension : 0; }
  const SparsityPattern& pattern() const { return *pattern_; }
  const std::shared_ptr<const SparsityPattern>& shared_pattern() const { return pattern_; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  /// Entry (row, col); zero outside the pattern.
  double coeff(int row, int col) const;
  /// Throws InvalidArgument outside the pattern.
  void add(int row, int col, double v);
  void set_zero();

  bool symmetric() const { return symmetric_; }
  void set_symmetric(bool s) { symmetric_ = s; }

  /// Operands must share the pattern object.
  SparseOperator& operator+=(const SparseOperator& other);
  SparseOperator& operator*=(double s);

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  double max_abs() const;
  Eigen::MatrixXd to_dense() const;
  Eigen::SparseMatrix<double> to_eigen() const;

 private:
  std::shared_ptr<const SparsityPattern> pattern_;
  std::vector<double> values_;
  bool symmetric_ = false;
};

SparseOperator operator+(SparseOperator a, const SparseOperator& b);

}  // namespace qge
