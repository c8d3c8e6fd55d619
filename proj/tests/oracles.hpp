#pragma once

// Independent oracles shared by the unit tests and the acceptance run. They use
// closed forms and the definition of the nodal functionals, never the library's
// transform or assembly paths.

#include <cmath>
#include <functional>
#include <random>

#include "qge/argyris.hpp"
#include "qge/solution.hpp"

namespace qge::oracles {

using JetFn = std::function<Jet2(Point2)>;

// Closed-form jet of x^a y^b.
inline Jet2 monomial_jet(int a, int b, Point2 p) {
  auto pw = [](double x, int n) { return n < 0 ? 0.0 : std::pow(x, n); };
  Jet2 j;
  j.value = pw(p.x, a) * pw(p.y, b);
  j.grad = {a * pw(p.x, a - 1) * pw(p.y, b), b * pw(p.x, a) * pw(p.y, b - 1)};
  j.hess = {a * (a - 1) * pw(p.x, a - 2) * pw(p.y, b), a * b * pw(p.x, a - 1) * pw(p.y, b - 1),
            b * (b - 1) * pw(p.x, a) * pw(p.y, b - 2)};
  return j;
}

// Oracle functionals: jets at the vertices, outward normal derivative at edge midpoints.
inline std::array<double, kArgyrisDofs> functionals(const std::array<Point2, 3>& v, const JetFn& f) {
  std::array<double, kArgyrisDofs> out{};
  for (int k = 0; k < 3; ++k) {
    const Jet2 j = f(v[k]);
    const double vals[6] = {j.value, j.grad[0], j.grad[1], j.hess[0], j.hess[1], j.hess[2]};
    for (int c = 0; c < 6; ++c) out[6 * k + c] = vals[c];
  }
  for (int e = 0; e < 3; ++e) {
    const Point2 a = v[e], b = v[(e + 1) % 3];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    const double nx = (b.y - a.y) / len, ny = -(b.x - a.x) / len;
    const Jet2 j = f(0.5 * (a + b));
    out[18 + e] = nx * j.grad[0] + ny * j.grad[1];
  }
  return out;
}

inline Jet2 interpolate_at(const ElementMap& map, const std::array<double, kArgyrisDofs>& c, Point2 x) {
  return contract(physical_basis(map, x), c);
}

inline Point2 random_interior(const std::array<Point2, 3>& v, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double s = u(rng), t = u(rng);
  if (s + t > 1.0) s = 1.0 - s, t = 1.0 - t;
  return v[0] + s * (v[1] - v[0]) + t * (v[2] - v[0]);
}

inline std::array<Point2, 3> random_triangle(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    std::array<Point2, 3> v{{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}}};
    const double area = (v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[2].x - v[0].x) * (v[1].y - v[0].y);
    if (std::abs(area) < 0.1) continue;
    if (area < 0) std::swap(v[1], v[2]);
    return v;
  }
}

inline double jet_error(const Jet2& a, const Jet2& b) {
  double e = std::abs(a.value - b.value);
  for (int k = 0; k < 2; ++k) e = std::max(e, std::abs(a.grad[k] - b.grad[k]));
  for (int k = 0; k < 3; ++k) e = std::max(e, std::abs(a.hess[k] - b.hess[k]));
  return e;
}

inline double jet_scale(const Jet2& a) {
  double s = std::abs(a.value);
  for (double g : a.grad) s = std::max(s, std::abs(g));
  for (double h : a.hess) s = std::max(s, std::abs(h));
  return std::max(s, 1.0);
}

inline double kronecker_deviation(const std::array<Point2, 3>& v) {
  const ElementMap map(v);
  double worst = 0.0;
  for (int j = 0; j < kArgyrisDofs; ++j) {
    const auto row = functionals(v, [&](Point2 x) {
      const BasisEval b = physical_basis(map, x);
      return Jet2{b.value(j), {b.dx(j), b.dy(j)}, {b.dxx(j), b.dxy(j), b.dyy(j)}};
    });
    for (int i = 0; i < kArgyrisDofs; ++i) {
      worst = std::max(worst, std::abs(row[i] - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

inline Jet2 product(const Jet2& u, const Jet2& g) {
  Jet2 j;
  j.value = u.value * g.value;
  j.grad = {u.grad[0] * g.value + u.value * g.grad[0], u.grad[1] * g.value + u.value * g.grad[1]};
  j.hess = {u.hess[0] * g.value + 2 * u.grad[0] * g.grad[0] + u.value * g.hess[0],
            u.hess[1] * g.value + u.grad[0] * g.grad[1] + u.grad[1] * g.grad[0] + u.value * g.hess[1],
            u.hess[2] * g.value + 2 * u.grad[1] * g.grad[1] + u.value * g.hess[2]};
  return j;
}

// (x (1 - x) y (1 - y))^2, clamped on the unit square.
inline Jet2 bubble(Point2 p) {
  const double gx = p.x * (1 - p.x), gy = p.y * (1 - p.y), dx = 1 - 2 * p.x, dy = 1 - 2 * p.y;
  return {gx * gx * gy * gy,
          {2 * gx * dx * gy * gy, 2 * gy * dy * gx * gx},
          {(2 * dx * dx - 4 * gx) * gy * gy, 4 * gx * dx * gy * dy, (2 * dy * dy - 4 * gy) * gx * gx}};
}

inline Jet2 factor_linear(Point2 p) { return {1.0 + p.x, {1.0, 0.0}, {0.0, 0.0, 0.0}}; }
inline Jet2 factor_quadratic(Point2 p) { return {p.y - 2 * p.x * p.x, {-4 * p.x, 1.0}, {-4.0, 0.0, 0.0}}; }
inline Jet2 factor_exp(Point2 p) {
  const double e = std::exp(p.x - 0.5 * p.y);
  return {e, {e, -0.5 * e}, {e, -0.5 * e, 0.25 * e}};
}

}  // namespace qge::oracles
