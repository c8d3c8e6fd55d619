#include "qge/discretization.hpp"

#include <cmath>

#include "qge/errors.hpp"

namespace qge {

void FlowParams::validate() const {
  if (!(std::isfinite(reynolds) && reynolds > 0.0) || !(std::isfinite(rossby) && rossby > 0.0)) {
    throw InvalidArgument("Reynolds and Rossby numbers must be positive");
  }
}

Discretization::Discretization(std::shared_ptr<const Mesh> mesh, int quad_degree)
    : mesh_(std::move(mesh)),
      dofs_(*mesh_),
      rule_(&rule_for_degree(quad_degree)),
      pattern_(build_sparsity_pattern(dofs_)) {
  reference_.reserve(rule_->size());
  for (const Point2& p : rule_->points) reference_.push_back(reference_basis(p));
  const int nq = static_cast<int>(rule_->size());
  for (int k = 0; k < kJetSize; ++k) {
    components_[k].resize(kArgyrisDofs, nq);
    for (int q = 0; q < nq; ++q) components_[k].col(q) = reference_[q].jet.col(k);
  }
}

std::shared_ptr<const Discretization> make_discretization(Mesh mesh, int quad_degree) {
  return std::make_shared<const Discretization>(std::make_shared<const Mesh>(std::move(mesh)),
                                                quad_degree);
}

void oriented_basis(const DofMap& dofs, int tri, const ElementMap& map, const BasisEval& reference,
                    BasisEval& out) {
  map.transform(reference, out);
  const auto& s = dofs.edge_signs(tri);
  for (int e = 0; e < 3; ++e) {
    if (s[e] < 0) out.jet.row(18 + e) *= -1.0;
  }
}

ElementMap element_map(const Mesh& mesh, int tri) { return ElementMap(mesh.corners(tri)); }

}  // namespace qge
