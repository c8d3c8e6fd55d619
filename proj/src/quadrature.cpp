#include "qge/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <string>

#include "qge/errors.hpp"
#include "qge/quadrature_tables.hpp"

namespace qge {

namespace {

using quadrature::detail::Orbit;
using quadrature::detail::OrbitKind;

// Barycentric (l0, l1, l2) -> reference (l1, l2).
void push(QuadratureRule& rule, double l1, double l2, double w) {
  rule.points.push_back({l1, l2});
  rule.weights.push_back(w);
}

QuadratureRule expand(std::span<const Orbit> orbits, int degree) {
  QuadratureRule rule;
  rule.degree = degree;
  for (const auto& o : orbits) {
    switch (o.kind) {
      case OrbitKind::centroid:
        push(rule, 1.0 / 3.0, 1.0 / 3.0, o.weight);
        break;
      case OrbitKind::s21: {
        const double a = o.a, c = 1.0 - 2.0 * a;
        push(rule, a, c, o.weight);
        push(rule, a, a, o.weight);
        push(rule, c, a, o.weight);
        break;
      }
      case OrbitKind::s111: {
        const double a = o.a, b = o.b, c = 1.0 - a - b;
        push(rule, b, c, o.weight);
        push(rule, c, b, o.weight);
        push(rule, a, c, o.weight);
        push(rule, c, a, o.weight);
        push(rule, a, b, o.weight);
        push(rule, b, a, o.weight);
        break;
      }
    }
  }
  return rule;
}

// Golub-Welsch for Gauss-Jacobi on [-1, 1] with weight (1-x)^alpha (1+x)^beta.
void gauss_jacobi(int n, double alpha, double beta, std::vector<double>& x,
                  std::vector<double>& w) {
  Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double ab = alpha + beta, d = 2.0 * k + ab;
    jm(k, k) = (k == 0 && ab == 0.0) ? (beta - alpha) / (ab + 2.0)
                                     : (beta * beta - alpha * alpha) / (d * (d + 2.0));
    if (k + 1 < n) {
      const double kk = k + 1.0, dd = 2.0 * kk + ab;
      const double off = std::sqrt(4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab) /
                                   (dd * dd * (dd + 1.0) * (dd - 1.0)));
      jm(k, k + 1) = jm(k + 1, k) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jm);
  const double mu0 = std::pow(2.0, alpha + beta + 1.0) * std::tgamma(alpha + 1.0) *
                     std::tgamma(beta + 1.0) / std::tgamma(alpha + beta + 2.0);
  x.resize(n);
  w.resize(n);
  for (int k = 0; k < n; ++k) {
    x[k] = es.eigenvalues()(k);
    const double v0 = es.eigenvectors()(0, k);
    w[k] = mu0 * v0 * v0;
  }
}

// Collapsed (Duffy) product rule, exact to degree 2n-1, then averaged over the six
// vertex permutations so the result is fully symmetric.
QuadratureRule symmetrized_conical_rule(int n) {
  std::vector<double> xj, wj, xg, wg;
  gauss_jacobi(n, 1.0, 0.0, xj, wj);
  gauss_jacobi(n, 0.0, 0.0, xg, wg);
  QuadratureRule rule;
  rule.degree = 2 * n - 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double u = 0.5 * (1.0 + xj[i]);
      const double v = 0.5 * (1.0 + xg[j]);
      const double x = u, y = (1.0 - u) * v;
      const double w = wj[i] * wg[j] / 8.0 / 6.0;
      const std::array<double, 3> l{1.0 - x - y, x, y};
      constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      for (const auto& p : perms) push(rule, l[p[1]], l[p[2]], w);
    }
  }
  return rule;
}

// Smallest admissible tabulated degree >= d.
int admissible_degree(int d) {
  for (int k = d; k <= kMaxQuadratureDegree; ++k) {
    if (!quadrature::detail::tabulated_rule(k).empty()) return k;
  }
  return -1;
}

QuadratureRule build_rule(int d) {
  const int k = admissible_degree(d);
  if (k < 0) return symmetrized_conical_rule(11);
  return expand(quadrature::detail::tabulated_rule(k), k);
}

}  // namespace

const QuadratureRule& rule_for_degree(int d) {
  if (d < 1 || d > kMaxQuadratureDegree) {
    throw UnsupportedDegree("quadrature degree " + std::to_string(d) +
                            " outside supported range [1, 20]");
  }
  static const auto rules = [] {
    std::array<QuadratureRule, kMaxQuadratureDegree + 1> all;
    for (int k = 1; k <= kMaxQuadratureDegree; ++k) all[k] = build_rule(k);
    return all;
  }();
  return rules[d];
}

double reference_monomial_integral(int a, int b) {
  // a! b! / (a+b+2)! = 1 / ((a+b+2)(a+b+1) C(a+b, a))
  long double binom = 1.0L;
  for (int k = 1; k <= b; ++k) binom = binom * (a + k) / k;
  return static_cast<double>(1.0L / ((a + b + 2.0L) * (a + b + 1.0L) * binom));
}

}  // namespace qge
