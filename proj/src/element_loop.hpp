#pragma once

#include <omp.h>

#include <Eigen/Core>
#include <Eigen/StdVector>
#include <algorithm>
#include <array>
#include <vector>

#include "qge/discretization.hpp"

namespace qge::detail {

using LocalMatrix = Eigen::Matrix<double, kArgyrisDofs, kArgyrisDofs>;
using LocalVector = Eigen::Matrix<double, kArgyrisDofs, 1>;
using BasisColumns = Eigen::Matrix<double, kArgyrisDofs, Eigen::Dynamic, Eigen::RowMajor>;

inline int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

/// Oriented physical basis of one triangle at every quadrature point, one column per point.
struct ElementFrame {
  BasisColumns value, dx, dy, dxx, dxy, dyy, lap;
  Eigen::VectorXd weight;  // reference weight * det J
  std::vector<Point2> points;
  std::array<BasisColumns, kJetSize> pulled;  // reference basis with the jet map applied

  explicit ElementFrame(int nq)
      : value(kArgyrisDofs, nq), dx(kArgyrisDofs, nq), dy(kArgyrisDofs, nq),
        dxx(kArgyrisDofs, nq), dxy(kArgyrisDofs, nq), dyy(kArgyrisDofs, nq),
        lap(kArgyrisDofs, nq), weight(nq), points(nq) {
    for (auto& p : pulled) p.resize(kArgyrisDofs, nq);
  }

  int size() const { return static_cast<int>(weight.size()); }
};

/// Same values as oriented_basis at each quadrature point, computed componentwise:
/// the jet map acts on reference components, then the sparse DoF transform acts on rows.
inline void fill_frame(const Discretization& disc, int tri, ElementFrame& f) {
  const ElementMap map = element_map(disc.mesh(), tri);
  const QuadratureRule& rule = disc.quadrature();
  const auto& t = map.jet_map();
  auto r = [&](int k) -> const auto& { return disc.reference_component(k); };

  f.pulled[kValue] = r(kValue);
  for (int k = kDx; k <= kDy; ++k) f.pulled[k].noalias() = t(k, kDx) * r(kDx) + t(k, kDy) * r(kDy);
  for (int k = kDxx; k <= kDyy; ++k) {
    f.pulled[k].noalias() = t(k, kDxx) * r(kDxx) + t(k, kDxy) * r(kDxy) + t(k, kDyy) * r(kDyy);
  }

  BasisColumns* out[kJetSize] = {&f.value, &f.dx, &f.dy, &f.dxx, &f.dxy, &f.dyy};
  for (BasisColumns* o : out) o->setZero();
  for (const auto& e : map.transform_entries()) {
    for (int k = 0; k < kJetSize; ++k) out[k]->row(e.row) += e.value * f.pulled[k].row(e.col);
  }
  const auto& s = disc.dofs().edge_signs(tri);
  for (int e = 0; e < 3; ++e) {
    if (s[e] > 0) continue;
    for (BasisColumns* o : out) o->row(18 + e) *= -1.0;
  }
  f.lap = f.dxx + f.dyy;
  for (int q = 0; q < f.size(); ++q) {
    f.weight[q] = rule.weights[q] * map.det_jacobian();
    f.points[q] = map.to_physical(rule.points[q]);
  }
}

inline constexpr int kElementBlock = 512;

/// Computes per-element results in parallel, one block at a time, then hands them to
/// `merge` serially in triangle order.
template <class Local, class Compute, class Merge>
void blocked_element_loop(const Discretization& disc, int workers, Compute&& compute,
                          Merge&& merge) {
  const int nt = disc.mesh().num_triangles();
  const int nq = static_cast<int>(disc.quadrature().size());
  const int threads = resolve_workers(workers);
  std::vector<Local, Eigen::aligned_allocator<Local>> buffer(std::min(kElementBlock, nt));
  for (int start = 0; start < nt; start += kElementBlock) {
    const int count = std::min(kElementBlock, nt - start);
#pragma omp parallel num_threads(threads)
    {
      ElementFrame frame(nq);
#pragma omp for schedule(static)
      for (int i = 0; i < count; ++i) {
        fill_frame(disc, start + i, frame);
        compute(start + i, frame, buffer[i]);
      }
    }
    for (int i = 0; i < count; ++i) merge(start + i, buffer[i]);
  }
}

inline void scatter_matrix(const DofMap& dofs, int tri, const LocalMatrix& local,
                           SparseOperator& out) {
  const auto f = dofs.element_free(tri);
  const auto& p = out.pattern();
  auto values = out.values();
  for (int i = 0; i < kArgyrisDofs; ++i) {
    if (f[i] < 0) continue;
    for (int j = 0; j < kArgyrisDofs; ++j) {
      if (f[j] < 0) continue;
      values[p.find(f[i], f[j])] += local(i, j);
    }
  }
}

inline void scatter_vector(const DofMap& dofs, int tri, const LocalVector& local,
                           Eigen::VectorXd& out) {
  const auto f = dofs.element_free(tri);
  for (int i = 0; i < kArgyrisDofs; ++i) {
    if (f[i] >= 0) out[f[i]] += local[i];
  }
}

template <class Compute>
SparseOperator assemble_matrix(const Discretization& disc, int workers, Compute&& compute) {
  SparseOperator out(disc.pattern());
  blocked_element_loop<LocalMatrix>(
      disc, workers, compute,
      [&](int tri, const LocalMatrix& local) { scatter_matrix(disc.dofs(), tri, local, out); });
  return out;
}

template <class Compute>
Eigen::VectorXd assemble_vector(const Discretization& disc, int workers, Compute&& compute) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(disc.num_free());
  blocked_element_loop<LocalVector>(
      disc, workers, compute,
      [&](int tri, const LocalVector& local) { scatter_vector(disc.dofs(), tri, local, out); });
  return out;
}

/// Sum of per-element scalars in triangle order.
template <class Compute>
double integrate(const Discretization& disc, int workers, Compute&& compute) {
  double total = 0.0;
  blocked_element_loop<double>(disc, workers, compute,
                               [&](int, const double& v) { total += v; });
  return total;
}

/// Local coefficients as an Eigen row for contraction with frame columns.
inline Eigen::Matrix<double, 1, kArgyrisDofs> coefficient_row(
    const std::array<double, kArgyrisDofs>& c) {
  return Eigen::Map<const Eigen::Matrix<double, 1, kArgyrisDofs>>(c.data());
}

}  // namespace qge::detail
