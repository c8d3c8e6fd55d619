#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qge/argyris.hpp"
#include "qge/mesh.hpp"

namespace qge {

/// Global Argyris numbering with clamped constraints.
///
/// Vertex v owns global ids 6v .. 6v+5 (value, dx, dy, dxx, dxy, dyy); edge k owns
/// 6 * num_vertices + k. The global functional of an edge is the derivative along
/// (t_y, -t_x), t the unit tangent from the lower to the higher vertex id; a local
/// edge whose outward normal disagrees carries sign -1.
///
/// Constrained set: at a boundary vertex the value, both first derivatives, the
/// tangential second derivative and the mixed second derivative; at corners all
/// six; the normal derivative of every boundary edge. Free DoFs are numbered in
/// increasing global id.
class DofMap {
 public:
  explicit DofMap(const Mesh& mesh);

  int num_dofs() const { return static_cast<int>(free_index_.size()); }
  int num_free() const { return static_cast<int>(free_to_global_.size()); }
  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_triangles() const { return static_cast<int>(signs_.size()); }

  /// Global ids of the 21 local DoFs of a triangle.
  std::span<const int, kArgyrisDofs> element_dofs(int tri) const {
    return std::span<const int, kArgyrisDofs>(global_.data() + kArgyrisDofs * tri, kArgyrisDofs);
  }
  /// Free indices of the 21 local DoFs, -1 where constrained.
  std::span<const int, kArgyrisDofs> element_free(int tri) const {
    return std::span<const int, kArgyrisDofs>(free_.data() + kArgyrisDofs * tri, kArgyrisDofs);
  }
  /// +1 or -1 for each local edge of a triangle.
  const std::array<std::int8_t, 3>& edge_signs(int tri) const { return signs_[tri]; }

  bool constrained(int global) const { return free_index_[global] < 0; }
  int free_index(int global) const { return free_index_[global]; }
  int global_of_free(int free) const { return free_to_global_[free]; }

  /// Endpoints (lower id first) of global edge k.
  const std::array<int, 2>& edge_vertices(int k) const { return edges_[k]; }

 private:
  int num_vertices_ = 0;
  std::vector<std::array<int, 2>> edges_;
  std::vector<int> global_;
  std::vector<int> free_;
  std::vector<std::array<std::int8_t, 3>> signs_;
  std::vector<int> free_index_;
  std::vector<int> free_to_global_;
};

DofMap build_dof_map(const Mesh& mesh);

/// Unit global edge normal of edge k.
Point2 global_edge_normal(const Mesh& mesh, const DofMap& dofs, int k);

}  // namespace qge
