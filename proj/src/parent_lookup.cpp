#include "qge/parent_lookup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qge/errors.hpp"

namespace qge {

ParentLocator::ParentLocator(const Mesh& coarse) : coarse_(&coarse) {
  const int n = coarse.num_triangles();
  std::vector<double> cx(n);
  for (int t = 0; t < n; ++t) cx[t] = coarse.centroid(t).x;
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return cx[a] < cx[b]; });
  sorted_x_.resize(n);
  for (int i = 0; i < n; ++i) sorted_x_[i] = cx[order_[i]];
  // Slack covers rounding in the centroid and in the query point.
  window_ = (2.0 / 3.0) * coarse.max_x_extent() * (1.0 + 1e-9) + 1e-14;
}

int ParentLocator::find_parent(Point2 p) const {
  Stats scratch;
  return find_parent(p, scratch);
}

int ParentLocator::find_parent(Point2 p, Stats& stats) const {
  ++stats.queries;
  // First index with centroid x > p.x - window.
  const double lo_x = p.x - window_;
  std::size_t lo = 0, hi = sorted_x_.size();
  while (lo < hi) {
    ++stats.binary_probes;
    const std::size_t mid = lo + (hi - lo) / 2;
    if (sorted_x_[mid] <= lo_x) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  const double hi_x = p.x + window_;
  std::size_t end = lo;
  while (end < sorted_x_.size() && sorted_x_[end] < hi_x) ++end;

  const std::size_t n_candidates = end - lo;
  stats.candidates += n_candidates;
  stats.max_candidates = std::max(stats.max_candidates, n_candidates);

  const auto tris = coarse_->triangles();
  for (std::size_t i = lo; i < end; ++i) {
    ++stats.containment_tests;
    const int t = order_[i];
    if (point_in_triangle(p, tris[t], *coarse_)) return t;
  }
  std::ostringstream msg;
  msg << "no coarse triangle contains (" << p.x << ", " << p.y << ")";
  throw LookupFailure(msg.str());
}

std::vector<int> locate_parents(const Mesh& fine, const ParentLocator& locator) {
  std::vector<int> parents(fine.num_triangles());
  for (int t = 0; t < fine.num_triangles(); ++t) {
    parents[t] = locator.find_parent(fine.centroid(t));
  }
  return parents;
}

}  // namespace qge
