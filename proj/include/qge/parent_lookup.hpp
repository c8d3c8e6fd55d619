#pragma once

#include <cstddef>
#include <vector>

#include "qge/mesh.hpp"

namespace qge {

/// Centroid-sorted search structure over a coarse mesh.
///
/// Coarse triangles are sorted once by centroid x. A query binary-searches for
/// the strip of triangles whose centroid x lies within `window` of the query
/// x, then scans that strip with point-in-triangle tests. The window is 2/3
/// of the largest triangle x-extent, the tightest value for which the
/// containing triangle is always inside the strip.
class ParentLocator {
 public:
  struct Stats {
    std::size_t queries = 0;
    std::size_t binary_probes = 0;
    std::size_t candidates = 0;
    std::size_t max_candidates = 0;
    std::size_t containment_tests = 0;
  };

  explicit ParentLocator(const Mesh& coarse);

  /// Throws LookupFailure when no coarse triangle contains p.
  int find_parent(Point2 p) const;

  /// Same search, with instrumentation.
  int find_parent(Point2 p, Stats& stats) const;

  double window() const { return window_; }
  const Mesh& coarse() const { return *coarse_; }

 private:
  const Mesh* coarse_;
  std::vector<int> order_;
  std::vector<double> sorted_x_;
  double window_ = 0.0;
};

/// Parent of every fine triangle by centroid lookup.
std::vector<int> locate_parents(const Mesh& fine, const ParentLocator& locator);

}  // namespace qge
