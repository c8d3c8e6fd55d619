#include "qge/errors.hpp"
#include "qge/forms.hpp"

namespace qge::reference {

namespace {

// Calls f(tri, free ids, physical basis, physical point, weight) at every quadrature point.
template <class F>
void for_each_point(const Discretization& disc, F&& f) {
  const Mesh& mesh = disc.mesh();
  const QuadratureRule& rule = disc.quadrature();
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const ElementMap map = build_element_map(mesh.corners(t));
    const auto free = disc.dofs().element_free(t);
    const auto& signs = disc.dofs().edge_signs(t);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const Point2 x = map.to_physical(rule.points[q]);
      BasisEval b = physical_basis(map, x);
      for (int e = 0; e < 3; ++e) b.jet.row(18 + e) *= signs[e];
      f(t, free, b, x, rule.weights[q] * map.det_jacobian(), static_cast<int>(q));
    }
  }
}

template <class Entry>
SparseOperator assemble(const Discretization& disc, Entry&& entry) {
  SparseOperator op(disc.pattern());
  for_each_point(disc, [&](int t, auto free, const BasisEval& b, Point2, double w, int q) {
    for (int i = 0; i < kArgyrisDofs; ++i) {
      if (free[i] < 0) continue;
      for (int j = 0; j < kArgyrisDofs; ++j) {
        if (free[j] < 0) continue;
        op.add(free[i], free[j], w * entry(t, q, b, i, j));
      }
    }
  });
  return op;
}

}  // namespace

SparseOperator assemble_biharmonic(const Discretization& disc, const FlowParams& params) {
  params.validate();
  auto op = assemble(disc, [&](int, int, const BasisEval& b, int i, int j) {
    return b.laplacian(i) * b.laplacian(j) / params.reynolds;
  });
  op.set_symmetric(true);
  return op;
}

SparseOperator assemble_beta(const Discretization& disc, const FlowParams& params) {
  params.validate();
  return assemble(disc, [&](int, int, const BasisEval& b, int i, int j) {
    return -b.dx(j) * b.value(i) / params.rossby;
  });
}

SparseOperator assemble_jacobian_form(const Discretization& disc,
                                      std::span<const double> zeta_laplacian) {
  const std::size_t nq = disc.quadrature().size();
  if (zeta_laplacian.size() != nq * disc.mesh().num_triangles()) {
    throw InvalidArgument("sampled field does not match the quadrature layout");
  }
  return assemble(disc, [&](int t, int q, const BasisEval& b, int i, int j) {
    return zeta_laplacian[t * nq + q] * (b.dy(j) * b.dx(i) - b.dx(j) * b.dy(i));
  });
}

Eigen::VectorXd assemble_load(const Discretization& disc, const ScalarField& forcing,
                              const FlowParams& params) {
  params.validate();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(disc.num_free());
  for_each_point(disc, [&](int, auto free, const BasisEval& b, Point2 x, double w, int) {
    const double fx = forcing(x) / params.rossby;
    for (int i = 0; i < kArgyrisDofs; ++i) {
      if (free[i] >= 0) out[free[i]] += w * fx * b.value(i);
    }
  });
  return out;
}

NewtonSystem newton_system(const Solution& current, const SparseOperator& a,
                           const SparseOperator& c, const Eigen::VectorXd& load) {
  const Discretization& disc = current.discretization();
  SparseOperator convective(disc.pattern());
  SparseOperator linearized(disc.pattern());
  for_each_point(disc, [&](int t, auto free, const BasisEval& b, Point2, double w, int) {
    const Jet2 psi = contract(b, current.local_coefficients(t));
    const double lap = psi.hess[0] + psi.hess[2];
    for (int i = 0; i < kArgyrisDofs; ++i) {
      if (free[i] < 0) continue;
      for (int j = 0; j < kArgyrisDofs; ++j) {
        if (free[j] < 0) continue;
        convective.add(free[i], free[j], w * lap * (b.dy(j) * b.dx(i) - b.dx(j) * b.dy(i)));
        linearized.add(free[i], free[j],
                       w * b.laplacian(j) * (psi.grad[1] * b.dx(i) - psi.grad[0] * b.dy(i)));
      }
    }
  });
  const Eigen::VectorXd& psi = current.coefficients();
  NewtonSystem sys;
  sys.residual = load - a.apply(psi) - convective.apply(psi) - c.apply(psi);
  sys.jacobian = a;
  sys.jacobian += convective;
  sys.jacobian += linearized;
  sys.jacobian += c;
  return sys;
}

}  // namespace qge::reference
