#include "qge/forms.hpp"

#include "element_loop.hpp"
#include "qge/errors.hpp"

namespace qge {

using detail::ElementFrame;
using detail::LocalMatrix;
using detail::LocalVector;

namespace {

void require_same(const Solution& a, const Solution& b) {
  if (&a.discretization() != &b.discretization()) {
    throw InvalidArgument("solutions live on different discretizations");
  }
}

// Field values at the quadrature points of one triangle.
struct FieldAtPoints {
  Eigen::RowVectorXd value, dx, dy, dxx, dxy, dyy;

  FieldAtPoints(const Solution& s, int tri, const ElementFrame& f) {
    const auto c = detail::coefficient_row(s.local_coefficients(tri));
    value = c * f.value;
    dx = c * f.dx;
    dy = c * f.dy;
    dxx = c * f.dxx;
    dxy = c * f.dxy;
    dyy = c * f.dyy;
  }
  Eigen::RowVectorXd lap() const { return dxx + dyy; }
};

// Physical Laplacian of a reference quintic, as a cubic in reference coordinates.
class LaplacianCubic {
 public:
  LaplacianCubic(const ElementMap& map, const MonomialCoefficients& c) {
    const auto& t = map.jet_map();
    const double wxx = t(kDxx, kDxx) + t(kDyy, kDxx);
    const double wxy = t(kDxx, kDxy) + t(kDyy, kDxy);
    const double wyy = t(kDxx, kDyy) + t(kDyy, kDyy);
    coeffs_.fill(0.0);
    // Monomials are ordered by total degree n, then a = n, n-1, ..., 0 with b = n - a.
    int m = 0;
    for (int n = 0; n <= 5; ++n) {
      for (int a = n; a >= 0; --a, ++m) {
        const int b = n - a;
        if (a >= 2) coeffs_[index(a - 2, b)] += wxx * a * (a - 1) * c(m);
        if (a >= 1 && b >= 1) coeffs_[index(a - 1, b - 1)] += wxy * a * b * c(m);
        if (b >= 2) coeffs_[index(a, b - 2)] += wyy * b * (b - 1) * c(m);
      }
    }
  }

  double operator()(Point2 r) const {
    const double xp[4] = {1.0, r.x, r.x * r.x, r.x * r.x * r.x};
    const double yp[4] = {1.0, r.y, r.y * r.y, r.y * r.y * r.y};
    double s = 0.0;
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; a + b <= 3; ++b) s += coeffs_[index(a, b)] * xp[a] * yp[b];
    }
    return s;
  }

 private:
  static int index(int a, int b) { return 4 * a + b; }
  std::array<double, 16> coeffs_;
};

}  // namespace

SparseOperator assemble_biharmonic(const Discretization& disc, const FlowParams& params,
                                   const AssemblyOptions& opts) {
  params.validate();
  const double s = 1.0 / params.reynolds;
  auto op = detail::assemble_matrix(disc, opts.workers,
                                    [s](int, const ElementFrame& f, LocalMatrix& local) {
                                      local.noalias() = s * (f.lap * f.weight.asDiagonal()) *
                                                        f.lap.transpose();
                                    });
  op.set_symmetric(true);
  return op;
}

SparseOperator assemble_beta(const Discretization& disc, const FlowParams& params,
                             const AssemblyOptions& opts) {
  params.validate();
  const double s = -1.0 / params.rossby;
  return detail::assemble_matrix(disc, opts.workers,
                                 [s](int, const ElementFrame& f, LocalMatrix& local) {
                                   local.noalias() = s * (f.value * f.weight.asDiagonal()) *
                                                     f.dx.transpose();
                                 });
}

SparseOperator assemble_jacobian_form(const Discretization& disc,
                                      std::span<const double> zeta_laplacian,
                                      const AssemblyOptions& opts) {
  const int nq = static_cast<int>(disc.quadrature().size());
  if (zeta_laplacian.size() != static_cast<std::size_t>(nq) * disc.mesh().num_triangles()) {
    throw InvalidArgument("sampled field does not match the quadrature layout");
  }
  return detail::assemble_matrix(
      disc, opts.workers, [&](int tri, const ElementFrame& f, LocalMatrix& local) {
        const Eigen::Map<const Eigen::VectorXd> lz(zeta_laplacian.data() + nq * tri, nq);
        const Eigen::VectorXd wz = f.weight.cwiseProduct(lz);
        local.noalias() = (f.dx * wz.asDiagonal()) * f.dy.transpose();
        local.noalias() -= (f.dy * wz.asDiagonal()) * f.dx.transpose();
      });
}

SparseOperator assemble_jacobian_form(const Solution& zeta, const AssemblyOptions& opts) {
  return detail::assemble_matrix(
      zeta.discretization(), opts.workers,
      [&](int tri, const ElementFrame& f, LocalMatrix& local) {
        const Eigen::RowVectorXd lz = FieldAtPoints(zeta, tri, f).lap();
        const Eigen::VectorXd wz = f.weight.cwiseProduct(lz.transpose());
        local.noalias() = (f.dx * wz.asDiagonal()) * f.dy.transpose();
        local.noalias() -= (f.dy * wz.asDiagonal()) * f.dx.transpose();
      });
}

std::vector<double> sample_laplacian(const Solution& coarse, const Discretization& fine,
                                     std::span<const int> parent_of,
                                     const AssemblyOptions& opts) {
  const Mesh& fm = fine.mesh();
  const int nt = fm.num_triangles();
  if (parent_of.size() != static_cast<std::size_t>(nt)) {
    throw InvalidArgument("parent map does not match the fine mesh");
  }
  const QuadratureRule& rule = fine.quadrature();
  const int nq = static_cast<int>(rule.size());
  const Discretization& cd = coarse.discretization();
  std::vector<double> out(static_cast<std::size_t>(nt) * nq);
#pragma omp parallel for schedule(static) num_threads(detail::resolve_workers(opts.workers))
  for (int t = 0; t < nt; ++t) {
    const int parent = parent_of[t];
    const ElementMap fine_map = element_map(fm, t);
    const ElementMap coarse_map = element_map(cd.mesh(), parent);
    auto local = coarse.local_coefficients(parent);
    const auto& signs = cd.dofs().edge_signs(parent);
    for (int e = 0; e < 3; ++e) local[18 + e] *= signs[e];
    const LaplacianCubic lap(coarse_map, reference_polynomial(coarse_map, local));
    for (int q = 0; q < nq; ++q) {
      const Point2 r = coarse_map.to_reference(fine_map.to_physical(rule.points[q]));
      out[static_cast<std::size_t>(t) * nq + q] = lap(r);
    }
  }
  return out;
}

Eigen::VectorXd assemble_load(const Discretization& disc, const ScalarField& forcing,
                              const FlowParams& params, const AssemblyOptions& opts) {
  params.validate();
  const double s = 1.0 / params.rossby;
  return detail::assemble_vector(disc, opts.workers,
                                 [&](int, const ElementFrame& f, LocalVector& local) {
                                   Eigen::VectorXd wf(f.size());
                                   for (int q = 0; q < f.size(); ++q) {
                                     wf[q] = s * f.weight[q] * forcing(f.points[q]);
                                   }
                                   local.noalias() = f.value * wf;
                                 });
}

LinearParts assemble_linear_parts(const Discretization& disc, const ScalarField& forcing,
                                  const FlowParams& params, const AssemblyOptions& opts) {
  params.validate();
  const double re = 1.0 / params.reynolds, ro = 1.0 / params.rossby;
  LinearParts out{SparseOperator(disc.pattern()), SparseOperator(disc.pattern()),
                  Eigen::VectorXd::Zero(disc.num_free())};
  struct Local {
    LocalMatrix a, c;
    LocalVector l;
  };
  detail::blocked_element_loop<Local>(
      disc, opts.workers,
      [&](int, const ElementFrame& f, Local& local) {
        local.a.noalias() = re * (f.lap * f.weight.asDiagonal()) * f.lap.transpose();
        local.c.noalias() = -ro * (f.value * f.weight.asDiagonal()) * f.dx.transpose();
        Eigen::VectorXd wf(f.size());
        for (int q = 0; q < f.size(); ++q) wf[q] = ro * f.weight[q] * forcing(f.points[q]);
        local.l.noalias() = f.value * wf;
      },
      [&](int tri, const Local& local) {
        detail::scatter_matrix(disc.dofs(), tri, local.a, out.biharmonic);
        detail::scatter_matrix(disc.dofs(), tri, local.c, out.beta);
        detail::scatter_vector(disc.dofs(), tri, local.l, out.load);
      });
  out.biharmonic.set_symmetric(true);
  return out;
}

LinearSystem assemble_frozen_system(const Discretization& disc,
                                    std::span<const double> zeta_laplacian,
                                    const ScalarField& forcing, const FlowParams& params,
                                    const AssemblyOptions& opts) {
  params.validate();
  const int nq = static_cast<int>(disc.quadrature().size());
  if (zeta_laplacian.size() != static_cast<std::size_t>(nq) * disc.mesh().num_triangles()) {
    throw InvalidArgument("sampled field does not match the quadrature layout");
  }
  const double re = 1.0 / params.reynolds, ro = 1.0 / params.rossby;
  LinearSystem out{SparseOperator(disc.pattern()), Eigen::VectorXd::Zero(disc.num_free())};
  struct Local {
    LocalMatrix m;
    LocalVector l;
  };
  detail::blocked_element_loop<Local>(
      disc, opts.workers,
      [&](int tri, const ElementFrame& f, Local& local) {
        const Eigen::Map<const Eigen::VectorXd> lz(zeta_laplacian.data() + nq * tri, nq);
        const Eigen::VectorXd wz = f.weight.cwiseProduct(lz);
        // Summed in the same order as A + B + C from the separate assemblers.
        local.m.noalias() = re * (f.lap * f.weight.asDiagonal()) * f.lap.transpose();
        LocalMatrix b;
        b.noalias() = (f.dx * wz.asDiagonal()) * f.dy.transpose();
        b.noalias() -= (f.dy * wz.asDiagonal()) * f.dx.transpose();
        local.m += b;
        local.m.noalias() -= ro * (f.value * f.weight.asDiagonal()) * f.dx.transpose();
        Eigen::VectorXd wf(f.size());
        for (int q = 0; q < f.size(); ++q) wf[q] = ro * f.weight[q] * forcing(f.points[q]);
        local.l.noalias() = f.value * wf;
      },
      [&](int tri, const Local& local) {
        detail::scatter_matrix(disc.dofs(), tri, local.m, out.op);
        detail::scatter_vector(disc.dofs(), tri, local.l, out.rhs);
      });
  return out;
}

NewtonSystem newton_system(const Solution& current, const SparseOperator& a,
                           const SparseOperator& c, const Eigen::VectorXd& load,
                           const AssemblyOptions& opts) {
  const Discretization& disc = current.discretization();
  SparseOperator convective(disc.pattern());
  SparseOperator linearized(disc.pattern());
  struct Pair {
    LocalMatrix b, bprime;
  };
  detail::blocked_element_loop<Pair>(
      disc, opts.workers,
      [&](int tri, const ElementFrame& f, Pair& local) {
        const FieldAtPoints psi(current, tri, f);
        const Eigen::VectorXd wz = f.weight.cwiseProduct(psi.lap().transpose());
        local.b.noalias() = (f.dx * wz.asDiagonal()) * f.dy.transpose();
        local.b.noalias() -= (f.dy * wz.asDiagonal()) * f.dx.transpose();
        const Eigen::VectorXd wy = f.weight.cwiseProduct(psi.dy.transpose());
        const Eigen::VectorXd wx = f.weight.cwiseProduct(psi.dx.transpose());
        local.bprime.noalias() = (f.dx * wy.asDiagonal() - f.dy * wx.asDiagonal()) * f.lap.transpose();
      },
      [&](int tri, const Pair& local) {
        detail::scatter_matrix(disc.dofs(), tri, local.b, convective);
        detail::scatter_matrix(disc.dofs(), tri, local.bprime, linearized);
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

double eval_b0(const Solution& xi, const Solution& chi, const Solution& psi,
               const AssemblyOptions& opts) {
  require_same(xi, chi);
  require_same(xi, psi);
  return detail::integrate(xi.discretization(), opts.workers,
                           [&](int tri, const ElementFrame& f, double& out) {
                             const FieldAtPoints x(xi, tri, f), c(chi, tri, f), p(psi, tri, f);
                             const Eigen::RowVectorXd integrand =
                                 (x.dy.cwiseProduct(c.dxy) - x.dx.cwiseProduct(c.dyy))
                                     .cwiseProduct(p.dy) -
                                 (x.dx.cwiseProduct(c.dxy) - x.dy.cwiseProduct(c.dxx))
                                     .cwiseProduct(p.dx);
                             out = integrand.dot(f.weight);
                           });
}

double eval_b(const Solution& zeta, const Solution& psi, const Solution& chi,
              const AssemblyOptions& opts) {
  require_same(zeta, psi);
  require_same(zeta, chi);
  return detail::integrate(zeta.discretization(), opts.workers,
                           [&](int tri, const ElementFrame& f, double& out) {
                             const FieldAtPoints z(zeta, tri, f), p(psi, tri, f), c(chi, tri, f);
                             const Eigen::RowVectorXd integrand = z.lap().cwiseProduct(
                                 p.dy.cwiseProduct(c.dx) - p.dx.cwiseProduct(c.dy));
                             out = integrand.dot(f.weight);
                           });
}

double eval_a(const Solution& psi, const FlowParams& params, const AssemblyOptions& opts) {
  params.validate();
  return detail::integrate(psi.discretization(), opts.workers,
                           [&](int tri, const ElementFrame& f, double& out) {
                             const Eigen::RowVectorXd l = FieldAtPoints(psi, tri, f).lap();
                             out = l.cwiseProduct(l).dot(f.weight) / params.reynolds;
                           });
}

double eval_load(const Solution& psi, const ScalarField& forcing, const FlowParams& params,
                 const AssemblyOptions& opts) {
  params.validate();
  return detail::integrate(psi.discretization(), opts.workers,
                           [&](int tri, const ElementFrame& f, double& out) {
                             const FieldAtPoints p(psi, tri, f);
                             double s = 0.0;
                             for (int q = 0; q < f.size(); ++q) {
                               s += f.weight[q] * forcing(f.points[q]) * p.value[q];
                             }
                             out = s / params.rossby;
                           });
}

}  // namespace qge
