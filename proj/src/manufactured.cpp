#include "qge/manufactured.hpp"

#include <cmath>
#include <numbers>

#include "qge/errors.hpp"

namespace qge {

namespace {

constexpr double kPi = std::numbers::pi;

// sin^2(k t) and its derivatives.
Profile sine_squared(double k) {
  return [k](double t) -> std::array<double, 5> {
    const double s = std::sin(k * t), s2 = std::sin(2.0 * k * t), c2 = std::cos(2.0 * k * t);
    return {s * s, k * s2, 2.0 * k * k * c2, -4.0 * k * k * k * s2, -8.0 * k * k * k * k * c2};
  };
}

// ((1 - x/3)(1 - exp(-20 x)))^2 and its derivatives.
std::array<double, 5> layer_profile(double x) {
  const double e = std::exp(-20.0 * x);
  const double u = 1.0 - x / 3.0, du = -1.0 / 3.0;
  const std::array<double, 5> v = {1.0 - e, 20.0 * e, -400.0 * e, 8000.0 * e, -160000.0 * e};
  std::array<double, 5> p{};
  p[0] = u * v[0];
  for (int n = 1; n <= 4; ++n) p[n] = u * v[n] + n * du * v[n - 1];
  return {p[0] * p[0], 2.0 * p[0] * p[1], 2.0 * (p[1] * p[1] + p[0] * p[2]),
          2.0 * (3.0 * p[1] * p[2] + p[0] * p[3]),
          2.0 * (3.0 * p[2] * p[2] + 4.0 * p[1] * p[3] + p[0] * p[4])};
}

}  // namespace

ManufacturedSolution::ManufacturedSolution(std::string id, Rectangle domain, Profile fx, Profile gy)
    : id_(std::move(id)), domain_(domain), fx_(std::move(fx)), gy_(std::move(gy)) {}

double ManufacturedSolution::derivative(int i, int j, Point2 p) const {
  if (i < 0 || j < 0 || i + j > 4) throw InvalidArgument("derivative order above 4");
  return fx_(p.x)[i] * gy_(p.y)[j];
}

Jet2 ManufacturedSolution::jet(Point2 p) const {
  const auto f = fx_(p.x), g = gy_(p.y);
  return {f[0] * g[0], {f[1] * g[0], f[0] * g[1]}, {f[2] * g[0], f[1] * g[1], f[0] * g[2]}};
}

ManufacturedSolution zero_solution(Rectangle domain) {
  const Profile zero = [](double) { return std::array<double, 5>{}; };
  return {"zero", domain, zero, zero};
}

ManufacturedSolution sine_squared_solution() {
  return {"sine-squared", Rectangle::unit_square(), sine_squared(4.0 * kPi), sine_squared(4.0 * kPi)};
}

ManufacturedSolution boundary_layer_solution() {
  return {"boundary-layer", Rectangle{0.0, 0.0, 3.0, 1.0}, layer_profile, sine_squared(kPi)};
}

std::vector<std::string> registered_problems() { return {"zero", "sine-squared", "boundary-layer"}; }

ManufacturedSolution solution_by_id(const std::string& id) {
  if (id == "zero") return zero_solution();
  if (id == "sine-squared") return sine_squared_solution();
  if (id == "boundary-layer") return boundary_layer_solution();
  throw InvalidArgument("unknown problem '" + id + "'");
}

double manufactured_forcing(const ManufacturedSolution& sol, const FlowParams& params, Point2 p,
                            const ForcingTerms& terms) {
  params.validate();
  const auto [fx, gy] = sol.profiles(p);
  const auto d = [&](int i, int j) { return fx[i] * gy[j]; };
  double f = 0.0;
  if (terms.biharmonic) {
    f += params.rossby / params.reynolds * (d(4, 0) + 2.0 * d(2, 2) + d(0, 4));
  }
  if (terms.jacobian) {
    const double lap_x = d(3, 0) + d(1, 2), lap_y = d(2, 1) + d(0, 3);
    f += params.rossby * (d(1, 0) * lap_y - d(0, 1) * lap_x);
  }
  if (terms.beta) f -= d(1, 0);
  return f;
}

std::function<double(Point2)> forcing_field(const ManufacturedSolution& sol,
                                            const FlowParams& params) {
  return [sol, params](Point2 p) { return manufactured_forcing(sol, params, p); };
}

}  // namespace qge
