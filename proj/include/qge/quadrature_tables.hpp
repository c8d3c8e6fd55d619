#pragma once

#include <span>

namespace qge::quadrature::detail {

enum class OrbitKind { centroid, s21, s111 };

/// One symmetry orbit in barycentric form: centroid (1/3,1/3,1/3), S21 (a,a,1-2a),
/// or S111 (a,b,1-a-b) with all permutations. Weights sum to 1/2 over the rule.
struct Orbit {
  OrbitKind kind;
  double a;
  double b;
  double weight;
};

/// Empty span when no admissible tabulated rule of exactly this degree exists.
const std::span<const Orbit> tabulated_rule(int degree);

}  // namespace qge::quadrature::detail
