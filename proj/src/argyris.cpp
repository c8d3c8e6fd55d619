#include "qge/argyris.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <limits>
#include <array>
#include <cmath>
#include <utility>

#include "qge/errors.hpp"

namespace qge {

namespace {

struct Monomial {
  int a;
  int b;
};

constexpr std::array<Monomial, kArgyrisDofs> kMonomials = [] {
  std::array<Monomial, kArgyrisDofs> m{};
  int k = 0;
  for (int n = 0; n <= 5; ++n) {
    for (int a = n; a >= 0; --a) m[k++] = {a, n - a};
  }
  return m;
}();

template <typename T>
T ipow(T x, int n) {
  if (n < 0) return T(0);
  T r(1);
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

/// d^(i+j)/dx^i dy^j of x^a y^b at (x, y).
template <typename T>
T monomial_derivative(const Monomial& m, int i, int j, T x, T y) {
  if (i > m.a || j > m.b) return T(0);
  T c(1);
  for (int k = 0; k < i; ++k) c *= T(m.a - k);
  for (int k = 0; k < j; ++k) c *= T(m.b - k);
  return c * ipow(x, m.a - i) * ipow(y, m.b - j);
}

constexpr std::array<std::pair<int, int>, kJetSize> kJetOrders = {
    {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};

constexpr std::array<Point2, 3> kReferenceVertices = {{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}};

Point2 outward_normal(Point2 a, Point2 b) {
  const double len = std::hypot(b.x - a.x, b.y - a.y);
  return {(b.y - a.y) / len, -(b.x - a.x) / len};
}

Eigen::Matrix<double, kArgyrisDofs, kArgyrisDofs> build_reference_coefficients() {
  using LD = long double;
  std::array<std::array<LD, kArgyrisDofs>, kArgyrisDofs> v{};  // v[functional][monomial]
  for (int m = 0; m < kArgyrisDofs; ++m) {
    const auto& mono = kMonomials[m];
    for (int vert = 0; vert < 3; ++vert) {
      const LD x = kReferenceVertices[vert].x, y = kReferenceVertices[vert].y;
      for (int k = 0; k < kJetSize; ++k) {
        v[6 * vert + k][m] = monomial_derivative<LD>(mono, kJetOrders[k].first,
                                                     kJetOrders[k].second, x, y);
      }
    }
    for (int e = 0; e < 3; ++e) {
      const Point2 a = kReferenceVertices[e], b = kReferenceVertices[(e + 1) % 3];
      const LD mx = (LD(a.x) + LD(b.x)) / 2, my = (LD(a.y) + LD(b.y)) / 2;
      const LD len = std::sqrt((LD(b.x) - a.x) * (LD(b.x) - a.x) + (LD(b.y) - a.y) * (LD(b.y) - a.y));
      const LD nx = (LD(b.y) - a.y) / len, ny = -(LD(b.x) - a.x) / len;
      v[18 + e][m] = nx * monomial_derivative<LD>(mono, 1, 0, mx, my) +
                     ny * monomial_derivative<LD>(mono, 0, 1, mx, my);
    }
  }

  // Gauss-Jordan inverse with partial pivoting in extended precision.
  std::array<std::array<LD, kArgyrisDofs>, kArgyrisDofs> inv{};
  for (int i = 0; i < kArgyrisDofs; ++i) inv[i][i] = 1;
  for (int col = 0; col < kArgyrisDofs; ++col) {
    int pivot = col;
    for (int r = col + 1; r < kArgyrisDofs; ++r) {
      if (std::fabs(v[r][col]) > std::fabs(v[pivot][col])) pivot = r;
    }
    std::swap(v[col], v[pivot]);
    std::swap(inv[col], inv[pivot]);
    const LD p = v[col][col];
    for (int c = 0; c < kArgyrisDofs; ++c) {
      v[col][c] /= p;
      inv[col][c] /= p;
    }
    for (int r = 0; r < kArgyrisDofs; ++r) {
      if (r == col || v[r][col] == 0) continue;
      const LD f = v[r][col];
      for (int c = 0; c < kArgyrisDofs; ++c) {
        v[r][c] -= f * v[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  // V * C = I, so C = V^-1 with C(m, j) the coefficient of monomial m in phi_j.
  Eigen::Matrix<double, kArgyrisDofs, kArgyrisDofs> coeffs;
  for (int m = 0; m < kArgyrisDofs; ++m) {
    for (int j = 0; j < kArgyrisDofs; ++j) coeffs(m, j) = static_cast<double>(inv[m][j]);
  }
  return coeffs;
}

// Jet map for the affine change of variables with inverse Jacobian k:
// gradient k^T g, Hessian k^T H k.
ElementMap::JetMap build_jet_map(const Eigen::Matrix2d& k) {
  ElementMap::JetMap m = ElementMap::JetMap::Zero();
  m(kValue, kValue) = 1.0;
  for (int a = 0; a < 2; ++a) {
    m(kDx + a, kDx) = k(0, a);
    m(kDx + a, kDy) = k(1, a);
  }
  constexpr int hess_row[2][2] = {{kDxx, kDxy}, {kDxy, kDyy}};
  for (int a = 0; a < 2; ++a) {
    for (int b = a; b < 2; ++b) {
      const int row = hess_row[a][b];
      m(row, kDxx) = k(0, a) * k(0, b);
      m(row, kDxy) = k(0, a) * k(1, b) + k(1, a) * k(0, b);
      m(row, kDyy) = k(1, a) * k(1, b);
    }
  }
  return m;
}

}  // namespace

std::array<DofDescriptor, kArgyrisDofs> argyris_dofs() {
  std::array<DofDescriptor, kArgyrisDofs> d{};
  constexpr DofKind kinds[6] = {DofKind::vertex_value, DofKind::vertex_dx,  DofKind::vertex_dy,
                                DofKind::vertex_dxx,   DofKind::vertex_dxy, DofKind::vertex_dyy};
  for (int v = 0; v < 3; ++v) {
    for (int k = 0; k < 6; ++k) d[6 * v + k] = {kinds[k], v};
  }
  for (int e = 0; e < 3; ++e) d[18 + e] = {DofKind::edge_normal_derivative, e};
  return d;
}

const Eigen::Matrix<double, kArgyrisDofs, kArgyrisDofs>& reference_coefficients() {
  static const auto coeffs = build_reference_coefficients();
  return coeffs;
}

BasisEval reference_basis(Point2 ref) {
  Eigen::Matrix<double, kArgyrisDofs, kJetSize> mono;
  for (int m = 0; m < kArgyrisDofs; ++m) {
    for (int k = 0; k < kJetSize; ++k) {
      mono(m, k) = monomial_derivative<double>(kMonomials[m], kJetOrders[k].first,
                                               kJetOrders[k].second, ref.x, ref.y);
    }
  }
  BasisEval out;
  out.jet.noalias() = reference_coefficients().transpose() * mono;
  return out;
}

ElementMap::ElementMap(const std::array<Point2, 3>& vertices) : vertices_(vertices) {
  const Point2 e1 = vertices[1] - vertices[0];
  const Point2 e2 = vertices[2] - vertices[0];
  jacobian_ << e1.x, e2.x, e1.y, e2.y;
  det_ = jacobian_.determinant();
  const double scale = std::max({e1.x * e1.x + e1.y * e1.y, e2.x * e2.x + e2.y * e2.y,
                                 std::numeric_limits<double>::min()});
  if (!(det_ > 1e-13 * scale) || !std::isfinite(det_)) {
    throw InvalidArgument("element map requires a nondegenerate counterclockwise triangle");
  }
  inverse_ = jacobian_.inverse();
  jet_map_ = build_jet_map(inverse_);
  // Inverse of the jet map: the same construction with J in place of K = J^-1.
  const JetMap jet_inverse = build_jet_map(jacobian_);

  // B maps reference nodal values of f o F to physical nodal values of f:
  // B = [[D, 0], [E, diag(alpha)]] with D = blockdiag(jet_map_), so M = B^-T is
  // [[D^-T, -D^-T E^T diag(1/alpha)], [0, diag(1/alpha)]].
  Eigen::Matrix<double, 3, 18> e_rows = Eigen::Matrix<double, 3, 18>::Zero();
  std::array<double, 3> alpha{};
  for (int e = 0; e < 3; ++e) {
    const int va = e, vb = (e + 1) % 3;
    const Point2 ra = kReferenceVertices[va], rb = kReferenceVertices[vb];
    const Point2 edge = rb - ra;
    const double ref_len = std::hypot(edge.x, edge.y);
    const Point2 ref_n = outward_normal(ra, rb);
    const Point2 ref_t{edge.x / ref_len, edge.y / ref_len};

    const Point2 n = edge_outward_normal(e);
    const Eigen::Vector2d w = inverse_ * Eigen::Vector2d(n.x, n.y);
    alpha[e] = w.x() * ref_n.x + w.y() * ref_n.y;
    const double beta = w.x() * ref_t.x + w.y() * ref_t.y;

    // Tangential derivative at the midpoint from the quintic Hermite trace:
    // g'(1/2) = 15/8 (g1 - g0) - 7/16 (g0' + g1') + 1/32 (g1'' - g0'').
    const double s = beta / ref_len;
    const double ex = edge.x, ey = edge.y;
    auto add_endpoint = [&](int vert, double c0, double c1, double c2) {
      e_rows(e, 6 * vert + kValue) += s * c0;
      e_rows(e, 6 * vert + kDx) += s * c1 * ex;
      e_rows(e, 6 * vert + kDy) += s * c1 * ey;
      e_rows(e, 6 * vert + kDxx) += s * c2 * ex * ex;
      e_rows(e, 6 * vert + kDxy) += s * c2 * 2.0 * ex * ey;
      e_rows(e, 6 * vert + kDyy) += s * c2 * ey * ey;
    };
    add_endpoint(va, -15.0 / 8.0, -7.0 / 16.0, -1.0 / 32.0);
    add_endpoint(vb, 15.0 / 8.0, -7.0 / 16.0, 1.0 / 32.0);
  }

  transform_.setZero();
  for (int v = 0; v < 3; ++v) {
    transform_.block<kJetSize, kJetSize>(6 * v, 6 * v) = jet_inverse.transpose();
    for (int e = 0; e < 3; ++e) {
      if (e != v && (e + 1) % 3 != v) continue;
      transform_.block<kJetSize, 1>(6 * v, 18 + e) =
          -(jet_inverse.transpose() * e_rows.block<1, kJetSize>(e, 6 * v).transpose()) / alpha[e];
    }
  }
  for (int e = 0; e < 3; ++e) transform_(18 + e, 18 + e) = 1.0 / alpha[e];

  entries_.clear();
  entries_.reserve(96);
  for (int r = 0; r < kArgyrisDofs; ++r) {
    for (int c = 0; c < kArgyrisDofs; ++c) {
      if (transform_(r, c) != 0.0) entries_.push_back({r, c, transform_(r, c)});
    }
  }
}

Point2 ElementMap::to_physical(Point2 ref) const {
  return {vertices_[0].x + jacobian_(0, 0) * ref.x + jacobian_(0, 1) * ref.y,
          vertices_[0].y + jacobian_(1, 0) * ref.x + jacobian_(1, 1) * ref.y};
}

Point2 ElementMap::to_reference(Point2 x) const {
  const Eigen::Vector2d r = inverse_ * Eigen::Vector2d(x.x - vertices_[0].x, x.y - vertices_[0].y);
  return {r.x(), r.y()};
}

Point2 ElementMap::edge_midpoint(int e) const {
  return 0.5 * (vertices_[e] + vertices_[(e + 1) % 3]);
}

Point2 ElementMap::edge_outward_normal(int e) const {
  return outward_normal(vertices_[e], vertices_[(e + 1) % 3]);
}

std::array<double, kArgyrisDofs> ElementMap::nodal_values(
    const std::function<Jet2(Point2)>& f) const {
  std::array<double, kArgyrisDofs> out{};
  for (int v = 0; v < 3; ++v) {
    const Jet2 j = f(vertices_[v]);
    out[6 * v + kValue] = j.value;
    out[6 * v + kDx] = j.grad[0];
    out[6 * v + kDy] = j.grad[1];
    out[6 * v + kDxx] = j.hess[0];
    out[6 * v + kDxy] = j.hess[1];
    out[6 * v + kDyy] = j.hess[2];
  }
  for (int e = 0; e < 3; ++e) {
    const Jet2 j = f(edge_midpoint(e));
    const Point2 n = edge_outward_normal(e);
    out[18 + e] = n.x * j.grad[0] + n.y * j.grad[1];
  }
  return out;
}

void ElementMap::transform(const BasisEval& reference, BasisEval& physical) const {
  physical.jet.noalias() = transform_ * reference.jet * jet_map_.transpose();
}

ElementMap build_element_map(const std::array<Point2, 3>& vertices) {
  return ElementMap(vertices);
}

BasisEval physical_basis(const ElementMap& map, Point2 x) {
  const BasisEval ref = reference_basis(map.to_reference(x));
  BasisEval out;
  map.transform(ref, out);
  return out;
}

Jet2 ElementMap::physical_jet(const Eigen::Matrix<double, kJetSize, 1>& reference) const {
  const Eigen::Matrix<double, kJetSize, 1> p = jet_map_ * reference;
  return {p(kValue), {p(kDx), p(kDy)}, {p(kDxx), p(kDxy), p(kDyy)}};
}

MonomialCoefficients reference_polynomial(const ElementMap& map,
                                          const std::array<double, kArgyrisDofs>& local) {
  // sum_k c_k phi_k o F = sum_j (M^T c)_j phi_hat_j.
  Eigen::Matrix<double, kArgyrisDofs, 1> hat = Eigen::Matrix<double, kArgyrisDofs, 1>::Zero();
  for (const auto& t : map.transform_entries()) hat(t.col) += t.value * local[t.row];
  return reference_coefficients() * hat;
}

Eigen::Matrix<double, kJetSize, 1> polynomial_jet(const MonomialCoefficients& coeffs, Point2 ref) {
  Eigen::Matrix<double, kJetSize, 1> out = Eigen::Matrix<double, kJetSize, 1>::Zero();
  for (int m = 0; m < kArgyrisDofs; ++m) {
    if (coeffs(m) == 0.0) continue;
    for (int k = 0; k < kJetSize; ++k) {
      out(k) += coeffs(m) * monomial_derivative<double>(kMonomials[m], kJetOrders[k].first,
                                                        kJetOrders[k].second, ref.x, ref.y);
    }
  }
  return out;
}

}  // namespace qge
