#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "qge/mesh.hpp"

namespace qge {

inline constexpr int kArgyrisDofs = 21;

enum class DofKind : std::uint8_t {
  vertex_value,
  vertex_dx,
  vertex_dy,
  vertex_dxx,
  vertex_dxy,
  vertex_dyy,
  edge_normal_derivative,
};

/// Local numbering: 6 * vertex + {value, dx, dy, dxx, dxy, dyy}, then 18 + edge.
/// Edge e joins local vertices e and (e + 1) % 3.
struct DofDescriptor {
  DofKind kind;
  int location;
};

std::array<DofDescriptor, kArgyrisDofs> argyris_dofs();

/// Columns of a jet: value, d/dx, d/dy, d2/dx2, d2/dxdy, d2/dy2.
enum JetColumn : int { kValue = 0, kDx, kDy, kDxx, kDxy, kDyy, kJetSize };

/// Value and derivatives through second order of the 21 shape functions at one point.
struct BasisEval {
  Eigen::Matrix<double, kArgyrisDofs, kJetSize> jet;

  double value(int i) const { return jet(i, kValue); }
  double dx(int i) const { return jet(i, kDx); }
  double dy(int i) const { return jet(i, kDy); }
  double dxx(int i) const { return jet(i, kDxx); }
  double dxy(int i) const { return jet(i, kDxy); }
  double dyy(int i) const { return jet(i, kDyy); }
  double laplacian(int i) const { return jet(i, kDxx) + jet(i, kDyy); }
};

/// Pointwise value, gradient and Hessian (dxx, dxy, dyy) of a scalar field.
struct Jet2 {
  double value = 0.0;
  std::array<double, 2> grad{};
  std::array<double, 3> hess{};
};

/// Shape functions on the reference triangle (0,0), (1,0), (0,1) at a reference point.
/// Edge functionals use the reference outward unit normals.
BasisEval reference_basis(Point2 ref);

/// Monomial coefficients of the reference basis: shape function j is
/// sum_m coefficients(m, j) x^a_m y^b_m, monomials ordered by total degree then
/// descending power of x.
const Eigen::Matrix<double, kArgyrisDofs, kArgyrisDofs>& reference_coefficients();

/// Affine map from the reference triangle plus the Argyris DoF transformation.
///
/// Argyris is not affine-equivalent: the physical normal derivative at an edge
/// midpoint pulls back to a mix of the reference normal derivative and the
/// reference tangential derivative, and the latter is expressed through the
/// vertex data of the edge (the trace of a quintic on an edge is fixed by its
/// value, first and second tangential derivatives at the endpoints).
/// `dof_transform()` is the matrix M with phi_k = sum_j M(k, j) (phi_hat_j o F^-1).
/// Physical edge functionals use the outward unit normal of this triangle.
class ElementMap {
 public:
  using Matrix21 = Eigen::Matrix<double, kArgyrisDofs, kArgyrisDofs>;
  using JetMap = Eigen::Matrix<double, kJetSize, kJetSize>;

  /// Nonzero (row, col, value) of dof_transform(), row-major.
  struct Entry {
    int row;
    int col;
    double value;
  };

  /// Throws InvalidArgument for degenerate or clockwise triangles.
  explicit ElementMap(const std::array<Point2, 3>& vertices);

  const std::array<Point2, 3>& vertices() const { return vertices_; }
  const Eigen::Matrix2d& jacobian() const { return jacobian_; }
  double det_jacobian() const { return det_; }
  const Matrix21& dof_transform() const { return transform_; }
  const std::vector<Entry>& transform_entries() const { return entries_; }
  /// Physical jet = jet_map() * reference jet, for any smooth function composed with the map.
  const JetMap& jet_map() const { return jet_map_; }

  Point2 to_physical(Point2 ref) const;
  Point2 to_reference(Point2 x) const;

  Point2 edge_midpoint(int e) const;
  Point2 edge_outward_normal(int e) const;

  /// Physical nodal functionals applied to f.
  std::array<double, kArgyrisDofs> nodal_values(const std::function<Jet2(Point2)>& f) const;

  /// Physical basis from a reference evaluation taken at to_reference(x).
  void transform(const BasisEval& reference, BasisEval& physical) const;

  /// Physical jet from the reference jet (value, dx, dy, dxx, dxy, dyy) of f o F.
  Jet2 physical_jet(const Eigen::Matrix<double, kJetSize, 1>& reference) const;

 private:
  std::array<Point2, 3> vertices_;
  Eigen::Matrix2d jacobian_;
  Eigen::Matrix2d inverse_;
  double det_ = 0.0;
  JetMap jet_map_;
  Matrix21 transform_;
  std::vector<Entry> entries_;
};

ElementMap build_element_map(const std::array<Point2, 3>& vertices);

BasisEval physical_basis(const ElementMap& map, Point2 x);

using MonomialCoefficients = Eigen::Matrix<double, kArgyrisDofs, 1>;

/// Monomial coefficients, in reference coordinates, of sum_k local[k] phi_k o F.
MonomialCoefficients reference_polynomial(const ElementMap& map,
                                          const std::array<double, kArgyrisDofs>& local);

/// Reference jet of a quintic given by monomial coefficients.
Eigen::Matrix<double, kJetSize, 1> polynomial_jet(const MonomialCoefficients& coeffs, Point2 ref);

}  // namespace qge
