#include "qge/dof_map.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace qge {

namespace {

// Bits of the constrained vertex DoFs, by side count and orientation.
constexpr std::uint8_t kAllVertexDofs = 0b111111;
constexpr std::uint8_t kVerticalSide = 0b110111;    // x = const: dxx free
constexpr std::uint8_t kHorizontalSide = 0b011111;  // y = const: dyy free

std::uint8_t vertex_constraint_mask(std::uint8_t sides) {
  if (sides == 0) return 0;
  const bool vertical = sides & ((1u << int(BoundarySide::left)) | (1u << int(BoundarySide::right)));
  const bool horizontal =
      sides & ((1u << int(BoundarySide::bottom)) | (1u << int(BoundarySide::top)));
  if (vertical && horizontal) return kAllVertexDofs;
  return vertical ? kVerticalSide : kHorizontalSide;
}

std::pair<int, int> edge_key(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

DofMap::DofMap(const Mesh& mesh) : num_vertices_(mesh.num_vertices()) {
  const int nt = mesh.num_triangles();
  std::map<std::pair<int, int>, int> edge_id;
  std::vector<std::array<int, 3>> tri_edges(nt);
  signs_.resize(nt);
  for (int t = 0; t < nt; ++t) {
    const auto& v = mesh.triangles()[t].v;
    for (int e = 0; e < 3; ++e) {
      const int a = v[e], b = v[(e + 1) % 3];
      const auto key = edge_key(a, b);
      auto [it, inserted] = edge_id.try_emplace(key, static_cast<int>(edges_.size()));
      if (inserted) edges_.push_back({key.first, key.second});
      tri_edges[t][e] = it->second;
      signs_[t][e] = a < b ? 1 : -1;
    }
  }

  const int total = 6 * num_vertices_ + num_edges();
  std::vector<bool> fixed(total, false);
  for (int v = 0; v < num_vertices_; ++v) {
    const std::uint8_t mask = vertex_constraint_mask(mesh.vertex_sides(v));
    for (int k = 0; k < 6; ++k) fixed[6 * v + k] = (mask >> k) & 1u;
  }
  for (const auto& be : mesh.boundary_edges()) {
    fixed[6 * num_vertices_ + edge_id.at(edge_key(be.v[0], be.v[1]))] = true;
  }

  free_index_.assign(total, -1);
  for (int g = 0; g < total; ++g) {
    if (fixed[g]) continue;
    free_index_[g] = static_cast<int>(free_to_global_.size());
    free_to_global_.push_back(g);
  }

  global_.resize(static_cast<std::size_t>(kArgyrisDofs) * nt);
  free_.resize(global_.size());
  for (int t = 0; t < nt; ++t) {
    const auto& v = mesh.triangles()[t].v;
    int* g = global_.data() + kArgyrisDofs * t;
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 6; ++k) g[6 * i + k] = 6 * v[i] + k;
    }
    for (int e = 0; e < 3; ++e) g[18 + e] = 6 * num_vertices_ + tri_edges[t][e];
    for (int i = 0; i < kArgyrisDofs; ++i) free_[kArgyrisDofs * t + i] = free_index_[g[i]];
  }
}

DofMap build_dof_map(const Mesh& mesh) { return DofMap(mesh); }

Point2 global_edge_normal(const Mesh& mesh, const DofMap& dofs, int k) {
  const auto& ev = dofs.edge_vertices(k);
  const Point2 d = mesh.vertices()[ev[1]] - mesh.vertices()[ev[0]];
  const double len = std::hypot(d.x, d.y);
  return {d.y / len, -d.x / len};
}

}  // namespace qge
