#pragma once

#include <vector>

#include "qge/mesh.hpp"

namespace qge {

/// Rule on the reference triangle (0,0), (1,0), (0,1). Weights sum to 1/2.
struct QuadratureRule {
  std::vector<Point2> points;
  std::vector<double> weights;
  int degree = 0;

  std::size_t size() const { return points.size(); }
};

inline constexpr int kMaxQuadratureDegree = 20;
inline constexpr int kDefaultQuadratureDegree = 14;

/// Symmetric rule with exactness degree >= d, for 1 <= d <= 20.
///
/// Degrees whose Dunavant rule has points outside the triangle (11, 15, 16, 18)
/// are served by the next admissible rule. Degree 20 uses the orbit
/// symmetrization of an 11 x 11 collapsed Gauss-Jacobi product rule.
/// Throws UnsupportedDegree outside [1, 20].
const QuadratureRule& rule_for_degree(int d);

/// Exact integral of x^a y^b over the reference triangle: a! b! / (a+b+2)!.
double reference_monomial_integral(int a, int b);

}  // namespace qge
