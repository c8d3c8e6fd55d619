#pragma once

#include <Eigen/Core>

#include "qge/sparse_operator.hpp"

namespace qge {

enum class LinearBackend { umfpack, eigen_sparse_lu };

/// UMFPACK unless a one-time probe solve through it is inaccurate (a miscompiled
/// or mis-dispatched BLAS underneath), in which case Eigen's SparseLU.
LinearBackend active_linear_backend();
const char* backend_name(LinearBackend backend);

/// LU solve with iterative refinement until ||op x - rhs|| <= 1e-10 ||rhs||.
/// Throws NumericalFailure on a singular factorization or when refinement cannot
/// meet the residual bound.
Eigen::VectorXd sparse_direct_solve(const SparseOperator& op, const Eigen::VectorXd& rhs);
Eigen::VectorXd sparse_direct_solve(const SparseOperator& op, const Eigen::VectorXd& rhs,
                                    LinearBackend backend);

}  // namespace qge
