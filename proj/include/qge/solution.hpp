#pragma once

#include <Eigen/Core>
#include <array>
#include <functional>
#include <memory>

#include "qge/discretization.hpp"
#include "qge/parent_lookup.hpp"

namespace qge {

/// Streamfunction coefficients over the free DoFs of a discretization; constrained
/// DoFs are implicitly zero.
class Solution {
 public:
  Solution(std::shared_ptr<const Discretization> disc, Eigen::VectorXd coefficients);

  static Solution zero(std::shared_ptr<const Discretization> disc);

  /// Nodal interpolant of f; constrained functionals are dropped.
  static Solution interpolate(std::shared_ptr<const Discretization> disc,
                              const std::function<Jet2(Point2)>& f);

  const Discretization& discretization() const { return *disc_; }
  const std::shared_ptr<const Discretization>& shared_discretization() const { return disc_; }
  const Eigen::VectorXd& coefficients() const { return coefficients_; }

  /// Coefficients of the 21 oriented local basis functions of a triangle.
  std::array<double, kArgyrisDofs> local_coefficients(int tri) const;

  /// Value through second derivatives at x, which must lie in the closed triangle.
  Jet2 evaluate(int tri, Point2 x) const;

 private:
  std::shared_ptr<const Discretization> disc_;
  Eigen::VectorXd coefficients_;
};

/// Evaluates a solution anywhere in its domain through parent-triangle search.
class SolutionProbe {
 public:
  explicit SolutionProbe(const Solution& solution);

  /// Throws LookupFailure outside the mesh.
  Jet2 operator()(Point2 x) const;

 private:
  const Solution* solution_;
  ParentLocator locator_;
};

/// Contracts an oriented basis evaluation with local coefficients.
Jet2 contract(const BasisEval& basis, const std::array<double, kArgyrisDofs>& coeffs);

}  // namespace qge
