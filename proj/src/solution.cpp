#include "qge/solution.hpp"

#include "qge/errors.hpp"

namespace qge {

Solution::Solution(std::shared_ptr<const Discretization> disc, Eigen::VectorXd coefficients)
    : disc_(std::move(disc)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != disc_->num_free()) {
    throw InvalidArgument("coefficient vector does not match the free DoF count");
  }
}

Solution Solution::zero(std::shared_ptr<const Discretization> disc) {
  const int n = disc->num_free();
  return Solution(std::move(disc), Eigen::VectorXd::Zero(n));
}

Solution Solution::interpolate(std::shared_ptr<const Discretization> disc,
                               const std::function<Jet2(Point2)>& f) {
  const Mesh& mesh = disc->mesh();
  const DofMap& dofs = disc->dofs();
  Eigen::VectorXd c = Eigen::VectorXd::Zero(dofs.num_free());
  for (int v = 0; v < dofs.num_vertices(); ++v) {
    const Jet2 j = f(mesh.vertices()[v]);
    const double vals[6] = {j.value, j.grad[0], j.grad[1], j.hess[0], j.hess[1], j.hess[2]};
    for (int k = 0; k < 6; ++k) {
      const int fi = dofs.free_index(6 * v + k);
      if (fi >= 0) c[fi] = vals[k];
    }
  }
  const int base = 6 * dofs.num_vertices();
  for (int e = 0; e < dofs.num_edges(); ++e) {
    const int fi = dofs.free_index(base + e);
    if (fi < 0) continue;
    const auto& ev = dofs.edge_vertices(e);
    const Point2 mid = 0.5 * (mesh.vertices()[ev[0]] + mesh.vertices()[ev[1]]);
    const Point2 n = global_edge_normal(mesh, dofs, e);
    const Jet2 j = f(mid);
    c[fi] = n.x * j.grad[0] + n.y * j.grad[1];
  }
  return Solution(std::move(disc), std::move(c));
}

std::array<double, kArgyrisDofs> Solution::local_coefficients(int tri) const {
  std::array<double, kArgyrisDofs> out{};
  const auto f = disc_->dofs().element_free(tri);
  for (int i = 0; i < kArgyrisDofs; ++i) out[i] = f[i] >= 0 ? coefficients_[f[i]] : 0.0;
  return out;
}

Jet2 Solution::evaluate(int tri, Point2 x) const {
  const ElementMap map = element_map(disc_->mesh(), tri);
  BasisEval basis;
  oriented_basis(disc_->dofs(), tri, map, reference_basis(map.to_reference(x)), basis);
  return contract(basis, local_coefficients(tri));
}

Jet2 contract(const BasisEval& basis, const std::array<double, kArgyrisDofs>& coeffs) {
  const Eigen::Matrix<double, 1, kJetSize> j =
      Eigen::Map<const Eigen::Matrix<double, 1, kArgyrisDofs>>(coeffs.data()) * basis.jet;
  return {j[kValue], {j[kDx], j[kDy]}, {j[kDxx], j[kDxy], j[kDyy]}};
}

SolutionProbe::SolutionProbe(const Solution& solution)
    : solution_(&solution), locator_(solution.discretization().mesh()) {}

Jet2 SolutionProbe::operator()(Point2 x) const {
  return solution_->evaluate(locator_.find_parent(x), x);
}

}  // namespace qge
