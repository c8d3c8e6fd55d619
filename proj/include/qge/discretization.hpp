#pragma once

#include <array>
#include <memory>
#include <vector>

#include "qge/argyris.hpp"
#include "qge/dof_map.hpp"
#include "qge/mesh.hpp"
#include "qge/quadrature.hpp"
#include "qge/sparse_operator.hpp"

namespace qge {

/// Reynolds and Rossby numbers; both strictly positive.
struct FlowParams {
  double reynolds = 1.0;
  double rossby = 1.0;

  /// Throws InvalidArgument unless both are finite and positive.
  void validate() const;
};

/// Mesh, Argyris DoF map, sparsity pattern and quadrature rule bundled for assembly.
/// Immutable; share through std::shared_ptr.
class Discretization {
 public:
  Discretization(std::shared_ptr<const Mesh> mesh, int quad_degree = kDefaultQuadratureDegree);

  const Mesh& mesh() const { return *mesh_; }
  const std::shared_ptr<const Mesh>& shared_mesh() const { return mesh_; }
  const DofMap& dofs() const { return dofs_; }
  const QuadratureRule& quadrature() const { return *rule_; }
  const std::shared_ptr<const SparsityPattern>& pattern() const { return pattern_; }
  int num_free() const { return dofs_.num_free(); }

  /// Reference basis at each quadrature point.
  const std::vector<BasisEval>& reference_table() const { return reference_; }

  /// Jet component k of the reference basis, one row per shape function and one
  /// column per quadrature point.
  using ComponentTable = Eigen::Matrix<double, kArgyrisDofs, Eigen::Dynamic, Eigen::RowMajor>;
  const ComponentTable& reference_component(int k) const { return components_[k]; }

 private:
  std::shared_ptr<const Mesh> mesh_;
  DofMap dofs_;
  const QuadratureRule* rule_;
  std::shared_ptr<const SparsityPattern> pattern_;
  std::vector<BasisEval> reference_;
  std::array<ComponentTable, kJetSize> components_;
};

std::shared_ptr<const Discretization> make_discretization(
    Mesh mesh, int quad_degree = kDefaultQuadratureDegree);

/// Physical basis of triangle `tri` with edge rows flipped to the global edge orientation.
void oriented_basis(const DofMap& dofs, int tri, const ElementMap& map, const BasisEval& reference,
                    BasisEval& out);

ElementMap element_map(const Mesh& mesh, int tri);

}  // namespace qge
