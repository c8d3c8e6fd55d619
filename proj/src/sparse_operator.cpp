#include "qge/sparse_operator.hpp"

#include <algorithm>
#include <cmath>

#include "qge/errors.hpp"

namespace qge {

int SparsityPattern::find(int row, int col) const {
  const auto first = col_idx.begin() + row_ptr[row];
  const auto last = col_idx.begin() + row_ptr[row + 1];
  const auto it = std::lower_bound(first, last, col);
  return (it != last && *it == col) ? static_cast<int>(it - col_idx.begin()) : -1;
}

std::shared_ptr<const SparsityPattern> build_sparsity_pattern(const DofMap& dofs) {
  const int n = dofs.num_free();
  std::vector<std::vector<int>> rows(n);
  for (int t = 0; t < dofs.num_triangles(); ++t) {
    const auto f = dofs.element_free(t);
    for (int i : f) {
      if (i < 0) continue;
      for (int j : f) {
        if (j >= 0) rows[i].push_back(j);
      }
    }
  }
  auto p = std::make_shared<SparsityPattern>();
  p->dimension = n;
  p->row_ptr.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    auto& r = rows[i];
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    p->row_ptr[i + 1] = p->row_ptr[i] + static_cast<int>(r.size());
  }
  p->col_idx.reserve(p->row_ptr[n]);
  for (auto& r : rows) p->col_idx.insert(p->col_idx.end(), r.begin(), r.end());
  return p;
}

SparseOperator::SparseOperator(std::shared_ptr<const SparsityPattern> pattern)
    : pattern_(std::move(pattern)), values_(pattern_->nonzeros(), 0.0) {}

double SparseOperator::coeff(int row, int col) const {
  const int k = pattern_->find(row, col);
  return k < 0 ? 0.0 : values_[k];
}

void SparseOperator::add(int row, int col, double v) {
  const int k = pattern_->find(row, col);
  if (k < 0) throw InvalidArgument("entry outside the sparsity pattern");
  values_[k] += v;
}

void SparseOperator::set_zero() { std::fill(values_.begin(), values_.end(), 0.0); }

SparseOperator& SparseOperator::operator+=(const SparseOperator& other) {
  if (pattern_ != other.pattern_) throw InvalidArgument("operators do not share a pattern");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  symmetric_ = symmetric_ && other.symmetric_;
  return *this;
}

SparseOperator& SparseOperator::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

SparseOperator operator+(SparseOperator a, const SparseOperator& b) {
  a += b;
  return a;
}

Eigen::VectorXd SparseOperator::apply(const Eigen::VectorXd& x) const {
  const int n = dimension();
  if (x.size() != n) throw InvalidArgument("operator/vector size mismatch");
  Eigen::VectorXd y(n);
  const auto& p = *pattern_;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int k = p.row_ptr[i]; k < p.row_ptr[i + 1]; ++k) s += values_[k] * x[p.col_idx[k]];
    y[i] = s;
  }
  return y;
}

double SparseOperator::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

Eigen::MatrixXd SparseOperator::to_dense() const {
  const int n = dimension();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  const auto& p = *pattern_;
  for (int i = 0; i < n; ++i) {
    for (int k = p.row_ptr[i]; k < p.row_ptr[i + 1]; ++k) d(i, p.col_idx[k]) = values_[k];
  }
  return d;
}

Eigen::SparseMatrix<double> SparseOperator::to_eigen() const {
  const int n = dimension();
  const auto& p = *pattern_;
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(values_.size());
  for (int i = 0; i < n; ++i) {
    for (int k = p.row_ptr[i]; k < p.row_ptr[i + 1]; ++k) trip.emplace_back(i, p.col_idx[k], values_[k]);
  }
  Eigen::SparseMatrix<double> m(n, n);
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

}  // namespace qge
