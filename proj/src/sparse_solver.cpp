#include "qge/sparse_solver.hpp"

#include <umfpack.h>

#include <Eigen/OrderingMethods>
#include <Eigen/SparseLU>
#include <memory>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "qge/errors.hpp"

namespace qge {

namespace {

constexpr double kResidualBound = 1e-10;
constexpr int kMaxRefinements = 4;

// UMFPACK factorization of a CSR operator. CSR arrays read as CSC describe the
// transpose, so solves use UMFPACK_At.
class UmfpackLu {
 public:
  explicit UmfpackLu(const SparseOperator& op) : op_(op) {
    const auto& p = op.pattern();
    umfpack_di_defaults(control_);
    const int n = op.dimension();
    void* symbolic = nullptr;
    int status = umfpack_di_symbolic(n, n, p.row_ptr.data(), p.col_idx.data(), op.values().data(),
                                     &symbolic, control_, nullptr);
    if (status != UMFPACK_OK) fail("symbolic analysis", status);
    status = umfpack_di_numeric(p.row_ptr.data(), p.col_idx.data(), op.values().data(), symbolic,
                                &numeric_, control_, nullptr);
    umfpack_di_free_symbolic(&symbolic);
    if (status != UMFPACK_OK) {
      if (numeric_) umfpack_di_free_numeric(&numeric_);
      fail("numeric factorization", status);
    }
  }
  UmfpackLu(const UmfpackLu&) = delete;
  UmfpackLu& operator=(const UmfpackLu&) = delete;
  ~UmfpackLu() {
    if (numeric_) umfpack_di_free_numeric(&numeric_);
  }

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const {
    const auto& p = op_.pattern();
    Eigen::VectorXd x(rhs.size());
    const int status = umfpack_di_solve(UMFPACK_At, p.row_ptr.data(), p.col_idx.data(),
                                        op_.values().data(), x.data(), rhs.data(), numeric_,
                                        control_, nullptr);
    if (status != UMFPACK_OK) fail("solve", status);
    return x;
  }

 private:
  [[noreturn]] static void fail(const char* stage, int status) {
    throw NumericalFailure(std::string("UMFPACK ") + stage + " failed with status " +
                           std::to_string(status));
  }

  const SparseOperator& op_;
  double control_[UMFPACK_CONTROL];
  void* numeric_ = nullptr;
};

class EigenLu {
 public:
  explicit EigenLu(const SparseOperator& op) : m_(op.to_eigen()) {
    lu_.compute(m_);
    if (lu_.info() != Eigen::Success) {
      throw NumericalFailure("SparseLU factorization failed: " + lu_.lastErrorMessage());
    }
  }
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) {
    Eigen::VectorXd x = lu_.solve(rhs);
    if (lu_.info() != Eigen::Success) throw NumericalFailure("SparseLU solve failed");
    return x;
  }

 private:
  Eigen::SparseMatrix<double> m_;
  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu_;
};

// Dense, diagonally dominant, nonsymmetric: large enough that UMFPACK's frontal
// kernels go through level-3 BLAS.
bool umfpack_probe_passes() {
  constexpr int n = 64;
  auto pattern = std::make_shared<SparsityPattern>();
  pattern->dimension = n;
  for (int i = 0; i <= n; ++i) pattern->row_ptr.push_back(i * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) pattern->col_idx.push_back(j);
  }
  SparseOperator op(pattern);
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) op.add(i, j, next() + (i == j ? n : 0.0));
  }
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = next();
  try {
    const Eigen::VectorXd y = UmfpackLu(op).solve(op.apply(x));
    return (y - x).norm() <= 1e-12 * x.norm();
  } catch (const NumericalFailure&) {
    return false;
  }
}

}  // namespace

LinearBackend active_linear_backend() {
  static const LinearBackend backend =
      umfpack_probe_passes() ? LinearBackend::umfpack : LinearBackend::eigen_sparse_lu;
  return backend;
}

const char* backend_name(LinearBackend backend) {
  return backend == LinearBackend::umfpack ? "umfpack" : "eigen-sparselu";
}

Eigen::VectorXd sparse_direct_solve(const SparseOperator& op, const Eigen::VectorXd& rhs) {
  return sparse_direct_solve(op, rhs, active_linear_backend());
}

Eigen::VectorXd sparse_direct_solve(const SparseOperator& op, const Eigen::VectorXd& rhs,
                                    LinearBackend backend) {
  if (rhs.size() != op.dimension()) throw InvalidArgument("right-hand side size mismatch");
  if (op.dimension() == 0) return Eigen::VectorXd();
  const double rhs_norm = rhs.norm();
  if (rhs_norm == 0.0) return Eigen::VectorXd::Zero(rhs.size());

  std::unique_ptr<UmfpackLu> umf;
  std::unique_ptr<EigenLu> eig;
  if (backend == LinearBackend::umfpack) {
    umf = std::make_unique<UmfpackLu>(op);
  } else {
    eig = std::make_unique<EigenLu>(op);
  }
  auto solve = [&](const Eigen::VectorXd& b) { return umf ? umf->solve(b) : eig->solve(b); };

  Eigen::VectorXd x = solve(rhs);
  Eigen::VectorXd r = rhs - op.apply(x);
  for (int k = 0; k < kMaxRefinements && !(r.norm() <= kResidualBound * rhs_norm); ++k) {
    x += solve(r);
    r = rhs - op.apply(x);
  }
  const double rel = r.norm() / rhs_norm;
  if (!std::isfinite(rel) || rel > kResidualBound) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", rel);
    throw NumericalFailure(std::string("linear solve residual ") + buf +
                           " exceeds the 1e-10 relative bound");
  }
  return x;
}

}  // namespace qge
