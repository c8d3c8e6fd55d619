#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qge/forms.hpp"
#include "qge/quadrature.hpp"

using namespace qge;
using namespace qge::oracles;

namespace {

std::shared_ptr<const Discretization> square(double h) {
  return make_discretization(generate_rect_mesh(Rectangle::unit_square(), h));
}

Eigen::VectorXd random_vector(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = u(rng);
  return v;
}

double max_abs_diff(const SparseOperator& a, const SparseOperator& b) {
  return (a.to_dense() - b.to_dense()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("biharmonic operator is symmetric positive definite and scales with 1/Re") {
  for (double h : {0.5, 0.25}) {
    auto disc = square(h);
    const SparseOperator a = assemble_biharmonic(*disc, {1.0, 1.0});
    const Eigen::MatrixXd d = a.to_dense();
    CHECK((d - d.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * a.max_abs());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (d + d.transpose()));
    CHECK(es.eigenvalues().minCoeff() > 0.0);
    CHECK(a.symmetric());

    const SparseOperator a2 = assemble_biharmonic(*disc, {2.0, 1.0});
    CHECK((0.5 * d - a2.to_dense()).cwiseAbs().maxCoeff() <= 1e-15 * a.max_abs());
  }
}

TEST_CASE("beta operator is skew and scales with 1/Ro") {
  auto disc = square(0.25);
  const SparseOperator c = assemble_beta(*disc, {1.0, 1.0});
  const Eigen::MatrixXd d = c.to_dense();
  CHECK((d + d.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * c.max_abs());
  const Eigen::VectorXd chi = random_vector(disc->num_free(), 1);
  CHECK(std::abs(chi.dot(c.apply(chi))) <= 1e-10 * chi.cwiseAbs().dot(d.cwiseAbs() * chi.cwiseAbs()));
  const SparseOperator c2 = assemble_beta(*disc, {1.0, 2.0});
  CHECK((0.5 * d - c2.to_dense()).cwiseAbs().maxCoeff() <= 1e-15 * c.max_abs());
}

TEST_CASE("jacobian form vanishes for zero zeta and on the diagonal") {
  auto disc = square(0.25);
  const SparseOperator zero = assemble_jacobian_form(Solution::zero(disc));
  CHECK(zero.max_abs() == 0.0);

  const Solution zeta(disc, random_vector(disc->num_free(), 2));
  const SparseOperator b = assemble_jacobian_form(zeta);
  const Eigen::MatrixXd d = b.to_dense();
  for (unsigned seed : {3u, 4u, 5u}) {
    const Eigen::VectorXd chi = random_vector(disc->num_free(), seed);
    const double scale = chi.cwiseAbs().dot(d.cwiseAbs() * chi.cwiseAbs());
    CHECK(std::abs(chi.dot(b.apply(chi))) <= 1e-10 * scale);
  }
}

// Moving the Laplacian off psi by parts gives b(psi; xi, chi) = -int grad psi . grad w with
// w = xi_y chi_x - xi_x chi_y, and that integral is b0(xi; chi, psi) - b0(chi; xi, psi).
TEST_CASE("trilinear permutation identity b(psi; xi, chi) = b0(chi; xi, psi) - b0(xi; chi, psi)") {
  auto disc = square(0.25);
  const Solution psi = Solution::interpolate(disc, [](Point2 p) { return product(bubble(p), factor_linear(p)); });
  const Solution xi = Solution::interpolate(disc, [](Point2 p) { return product(bubble(p), factor_quadratic(p)); });
  const Solution chi = Solution::interpolate(disc, [](Point2 p) { return product(bubble(p), factor_exp(p)); });
  const double lhs = eval_b(psi, xi, chi);
  const double rhs = eval_b0(chi, xi, psi) - eval_b0(xi, chi, psi);
  CHECK(std::abs(lhs) > 1e-8);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
  CHECK(eval_b0(Solution::zero(disc), chi, psi) == 0.0);
}

TEST_CASE("b0 agrees with a dense centroid Riemann sum") {
  auto disc = square(0.25);
  const Solution psi = Solution::interpolate(disc, [](Point2 p) { return product(bubble(p), factor_linear(p)); });
  const Solution xi = Solution::interpolate(disc, [](Point2 p) { return product(bubble(p), factor_quadratic(p)); });
  const Solution chi = Solution::interpolate(disc, [](Point2 p) { return product(bubble(p), factor_exp(p)); });
  const double by_quadrature = eval_b0(xi, chi, psi);

  // Each triangle is split into m^2 congruent pieces sampled at their centroids:
  // 32 * 177^2 ~ 1e6 points.
  const int m = 177;
  const Mesh& mesh = disc->mesh();
  long double sum = 0.0L;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const ElementMap map = element_map(mesh, t);
    const auto cx = xi.local_coefficients(t), cc = chi.local_coefficients(t),
               cp = psi.local_coefficients(t);
    const double w = map.det_jacobian() * 0.5 / (static_cast<double>(m) * m);
    auto sample = [&](double r, double s) {
      BasisEval b;
      oriented_basis(disc->dofs(), t, map, reference_basis({r, s}), b);
      const Jet2 x = contract(b, cx), c = contract(b, cc), p = contract(b, cp);
      const double f = (x.grad[1] * c.hess[1] - x.grad[0] * c.hess[2]) * p.grad[1] -
                       (x.grad[0] * c.hess[1] - x.grad[1] * c.hess[0]) * p.grad[0];
      sum += w * f;
    };
    for (int i = 0; i < m; ++i) {
      for (int j = 0; i + j < m; ++j) {
        sample((i + 1.0 / 3.0) / m, (j + 1.0 / 3.0) / m);
        if (i + j < m - 1) sample((i + 2.0 / 3.0) / m, (j + 2.0 / 3.0) / m);
      }
    }
  }
  CHECK(by_quadrature == doctest::Approx(static_cast<double>(sum)).epsilon(1e-4));
}

TEST_CASE("load vector: zero forcing, Rossby scaling and exact polynomial integrals") {
  auto disc = square(0.25);
  const FlowParams p{1.0, 1.0};
  CHECK(assemble_load(*disc, [](Point2) { return 0.0; }, p).cwiseAbs().maxCoeff() == 0.0);

  const ScalarField one = [](Point2) { return 1.0; };
  const Eigen::VectorXd l1 = assemble_load(*disc, one, p);
  const Eigen::VectorXd l2 = assemble_load(*disc, one, {1.0, 2.0});
  CHECK((0.5 * l1 - l2).cwiseAbs().maxCoeff() <= 1e-15 * l1.cwiseAbs().maxCoeff());

  // Oracle: integrate each element's quintic through its monomial coefficients
  // with the factorial formula.
  const Solution chi(disc, random_vector(disc->num_free(), 6));
  long double exact = 0.0L;
  const Mesh& mesh = disc->mesh();
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const ElementMap map = element_map(mesh, t);
    auto c = chi.local_coefficients(t);
    const auto& s = disc->dofs().edge_signs(t);
    for (int e = 0; e < 3; ++e) c[18 + e] *= s[e];
    const MonomialCoefficients poly = reference_polynomial(map, c);
    int k = 0;
    for (int n = 0; n <= 5; ++n) {
      for (int a = n; a >= 0; --a, ++k) {
        long double fa = 1, fb = 1, fn = 1;
        for (int i = 2; i <= a; ++i) fa *= i;
        for (int i = 2; i <= n - a; ++i) fb *= i;
        for (int i = 2; i <= n + 2; ++i) fn *= i;
        exact += map.det_jacobian() * poly(k) * fa * fb / fn;
      }
    }
  }
  CHECK(l1.dot(chi.coefficients()) == doctest::Approx(static_cast<double>(exact)).epsilon(1e-10));

  // Interpolated bubble: integral 1/900 up to the O(h^6) interpolation error.
  const Solution b = Solution::interpolate(disc, bubble);
  CHECK(l1.dot(b.coefficients()) == doctest::Approx(1.0 / 900.0).epsilon(1e-2));
}

TEST_CASE("Newton jacobian matches finite differences of the residual") {
  auto disc = square(0.25);
  const FlowParams p{1.0, 1.0};
  const LinearParts lin = assemble_linear_parts(*disc, [](Point2 x) { return std::sin(3 * x.x) + x.y; }, p);
  const Eigen::VectorXd psi = random_vector(disc->num_free(), 7);
  const Eigen::VectorXd delta = random_vector(disc->num_free(), 8);
  const NewtonSystem base = newton_system(Solution(disc, psi), lin.biharmonic, lin.beta, lin.load);
  const Eigen::VectorXd jd = base.jacobian.apply(delta);

  std::vector<double> remainder;
  const std::vector<double> eps = {1e-3, 1e-4, 1e-5};
  for (double e : eps) {
    const NewtonSystem moved =
        newton_system(Solution(disc, psi + e * delta), lin.biharmonic, lin.beta, lin.load);
    remainder.push_back((moved.residual - base.residual + e * jd).norm());
  }
  for (std::size_t k = 1; k < eps.size(); ++k) {
    const double order = std::log(remainder[k - 1] / remainder[k]) / std::log(eps[k - 1] / eps[k]);
    CAPTURE(k);
    CHECK(order >= 1.9);
  }
}

TEST_CASE("at psi = 0 the Newton jacobian is the linear part") {
  auto disc = square(0.25);
  const FlowParams p{2.0, 0.5};
  const LinearParts lin = assemble_linear_parts(*disc, [](Point2) { return 1.0; }, p);
  const NewtonSystem sys = newton_system(Solution::zero(disc), lin.biharmonic, lin.beta, lin.load);
  CHECK(max_abs_diff(sys.jacobian, lin.biharmonic + lin.beta) == 0.0);
  CHECK((sys.residual - lin.load).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("parallel element loops match the serial reference assembly") {
  auto disc = square(0.125);
  const FlowParams p{3.0, 0.7};
  const ScalarField f = [](Point2 x) { return std::cos(x.x) * x.y; };
  const Solution zeta(disc, random_vector(disc->num_free(), 9));

  const auto rel = [](const SparseOperator& a, const SparseOperator& b) {
    return max_abs_diff(a, b) / b.max_abs();
  };
  const SparseOperator a = assemble_biharmonic(*disc, p, {4});
  const SparseOperator c = assemble_beta(*disc, p, {4});
  CHECK(rel(a, reference::assemble_biharmonic(*disc, p)) <= 1e-13);
  CHECK(rel(c, reference::assemble_beta(*disc, p)) <= 1e-13);

  const int nq = static_cast<int>(disc->quadrature().size());
  std::vector<double> lap(static_cast<std::size_t>(nq) * disc->mesh().num_triangles());
  std::mt19937 rng(10);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (double& v : lap) v = u(rng);
  CHECK(rel(assemble_jacobian_form(*disc, lap, {4}), reference::assemble_jacobian_form(*disc, lap)) <=
        1e-13);

  const Eigen::VectorXd l = assemble_load(*disc, f, p, {4});
  const Eigen::VectorXd lref = reference::assemble_load(*disc, f, p);
  CHECK((l - lref).cwiseAbs().maxCoeff() <= 1e-13 * lref.cwiseAbs().maxCoeff());

  const NewtonSystem par = newton_system(zeta, a, c, l, {4});
  const NewtonSystem ser = reference::newton_system(zeta, a, c, l);
  CHECK(rel(par.jacobian, ser.jacobian) <= 1e-13);
  CHECK((par.residual - ser.residual).cwiseAbs().maxCoeff() <=
        1e-12 * ser.residual.cwiseAbs().maxCoeff());
}

TEST_CASE("assembly is bitwise independent of the worker count") {
  auto disc = square(1.0 / 16);
  const FlowParams p{1.0, 1.0};
  const ScalarField f = [](Point2 x) { return x.x * x.y; };
  const LinearParts one = assemble_linear_parts(*disc, f, p, {1});
  for (int w : {2, 3, 8}) {
    const LinearParts many = assemble_linear_parts(*disc, f, p, {w});
    CHECK(max_abs_diff(one.biharmonic, many.biharmonic) == 0.0);
    CHECK(max_abs_diff(one.beta, many.beta) == 0.0);
    CHECK((one.load - many.load).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("fused passes equal the separate assemblers") {
  auto disc = square(0.125);
  const FlowParams p{2.0, 0.3};
  const ScalarField f = [](Point2 x) { return std::exp(x.x) - x.y; };
  const LinearParts lin = assemble_linear_parts(*disc, f, p);
  const SparseOperator a = assemble_biharmonic(*disc, p), c = assemble_beta(*disc, p);
  const Eigen::VectorXd l = assemble_load(*disc, f, p);
  CHECK(max_abs_diff(lin.biharmonic, a) <= 1e-14 * a.max_abs());
  CHECK(max_abs_diff(lin.beta, c) <= 1e-14 * c.max_abs());
  CHECK((lin.load - l).cwiseAbs().maxCoeff() <= 1e-14 * l.cwiseAbs().maxCoeff());

  const int nq = static_cast<int>(disc->quadrature().size());
  std::vector<double> lap(static_cast<std::size_t>(nq) * disc->mesh().num_triangles(), 0.0);
  for (std::size_t i = 0; i < lap.size(); ++i) lap[i] = std::sin(0.1 * static_cast<double>(i));
  const LinearSystem frozen = assemble_frozen_system(*disc, lap, f, p);
  const SparseOperator sum = a + assemble_jacobian_form(*disc, lap) + c;
  CHECK(max_abs_diff(frozen.op, sum) <= 1e-13 * sum.max_abs());
  CHECK((frozen.rhs - l).cwiseAbs().maxCoeff() <= 1e-14 * l.cwiseAbs().maxCoeff());
}

TEST_CASE("sampled coarse Laplacian matches direct evaluation") {
  auto coarse_disc = square(0.25);
  const MeshHierarchy h = refine_levels(coarse_disc->mesh(), 2);
  auto fine = make_discretization(h.fine);
  const Solution zeta(coarse_disc, random_vector(coarse_disc->num_free(), 12));
  const auto lap = sample_laplacian(zeta, *fine, h.parent_of);
  const QuadratureRule& rule = fine->quadrature();
  const int nq = static_cast<int>(rule.size());
  double worst = 0.0, scale = 0.0;
  for (int t = 0; t < fine->mesh().num_triangles(); ++t) {
    const ElementMap fm = element_map(fine->mesh(), t);
    for (int q = 0; q < nq; ++q) {
      const Jet2 j = zeta.evaluate(h.parent_of[t], fm.to_physical(rule.points[q]));
      const double direct = j.hess[0] + j.hess[2];
      worst = std::max(worst, std::abs(direct - lap[static_cast<std::size_t>(t) * nq + q]));
      scale = std::max(scale, std::abs(direct));
    }
  }
  CHECK(worst <= 1e-11 * scale);
}
