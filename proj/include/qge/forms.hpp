#pragma once

#include <Eigen/Core>
#include <functional>
#include <span>
#include <vector>

#include "qge/discretization.hpp"
#include "qge/solution.hpp"
#include "qge/sparse_operator.hpp"

namespace qge {

using ScalarField = std::function<double(Point2)>;

/// Element loops run on `workers` OpenMP threads (0: the OpenMP default). Local
/// contributions are merged in triangle order, so results do not depend on the
/// worker count.
struct AssemblyOptions {
  int workers = 0;
};

/// A[i][j] = Re^-1 * int lap(phi_j) lap(phi_i).
SparseOperator assemble_biharmonic(const Discretization& disc, const FlowParams& params,
                                   const AssemblyOptions& opts = {});

/// C[i][j] = -Ro^-1 * int d_x(phi_j) phi_i.
SparseOperator assemble_beta(const Discretization& disc, const FlowParams& params,
                             const AssemblyOptions& opts = {});

/// B[i][j] = int lap(zeta) (d_y phi_j d_x phi_i - d_x phi_j d_y phi_i), with lap(zeta)
/// given at every quadrature point, indexed tri * rule_size + q.
SparseOperator assemble_jacobian_form(const Discretization& disc,
                                      std::span<const double> zeta_laplacian,
                                      const AssemblyOptions& opts = {});

/// Same, for zeta on the same discretization.
SparseOperator assemble_jacobian_form(const Solution& zeta, const AssemblyOptions& opts = {});

/// lap(zeta) of a coarse solution at the quadrature points of `fine`; `parent_of`
/// maps fine triangles to coarse triangles containing them.
std::vector<double> sample_laplacian(const Solution& coarse, const Discretization& fine,
                                     std::span<const int> parent_of,
                                     const AssemblyOptions& opts = {});

/// L[i] = Ro^-1 * int F phi_i.
Eigen::VectorXd assemble_load(const Discretization& disc, const ScalarField& forcing,
                              const FlowParams& params, const AssemblyOptions& opts = {});

/// A, C and L from a single element pass.
struct LinearParts {
  SparseOperator biharmonic;
  SparseOperator beta;
  Eigen::VectorXd load;
};

LinearParts assemble_linear_parts(const Discretization& disc, const ScalarField& forcing,
                                  const FlowParams& params, const AssemblyOptions& opts = {});

/// op = A + B(zeta) + C and rhs = L from a single element pass, with lap(zeta) laid
/// out as for assemble_jacobian_form.
struct LinearSystem {
  SparseOperator op;
  Eigen::VectorXd rhs;
};

LinearSystem assemble_frozen_system(const Discretization& disc,
                                    std::span<const double> zeta_laplacian,
                                    const ScalarField& forcing, const FlowParams& params,
                                    const AssemblyOptions& opts = {});

struct NewtonSystem {
  SparseOperator jacobian;
  Eigen::VectorXd residual;
};

/// J = A + B(psi) + B'(psi) + C and r = L - (A + B(psi) + C) psi, where
/// B'[i][j] = int lap(phi_j) (psi_y d_x phi_i - psi_x d_y phi_i).
NewtonSystem newton_system(const Solution& current, const SparseOperator& a,
                           const SparseOperator& c, const Eigen::VectorXd& load,
                           const AssemblyOptions& opts = {});

/// b0(xi; chi, psi) = int (xi_y chi_xy - xi_x chi_yy) psi_y - (xi_x chi_xy - xi_y chi_xx) psi_x.
double eval_b0(const Solution& xi, const Solution& chi, const Solution& psi,
               const AssemblyOptions& opts = {});

/// b(zeta; psi, chi) = int lap(zeta) (psi_y chi_x - psi_x chi_y).
double eval_b(const Solution& zeta, const Solution& psi, const Solution& chi,
              const AssemblyOptions& opts = {});

/// Re^-1 * int lap(psi)^2.
double eval_a(const Solution& psi, const FlowParams& params, const AssemblyOptions& opts = {});

/// Ro^-1 * int F psi.
double eval_load(const Solution& psi, const ScalarField& forcing, const FlowParams& params,
                 const AssemblyOptions& opts = {});

/// Serial assembly straight from physical_basis, kept as the oracle for the
/// parallel element loops.
namespace reference {

SparseOperator assemble_biharmonic(const Discretization& disc, const FlowParams& params);
SparseOperator assemble_beta(const Discretization& disc, const FlowParams& params);
SparseOperator assemble_jacobian_form(const Discretization& disc,
                                      std::span<const double> zeta_laplacian);
Eigen::VectorXd assemble_load(const Discretization& disc, const ScalarField& forcing,
                              const FlowParams& params);
NewtonSystem newton_system(const Solution& current, const SparseOperator& a,
                           const SparseOperator& c, const Eigen::VectorXd& load);

}  // namespace reference

}  // namespace qge
