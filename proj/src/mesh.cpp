#include "qge/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <unordered_map>
#include <utility>

#include "qge/errors.hpp"

namespace qge {

namespace {

double distance(Point2 a, Point2 b) { return std::hypot(b.x - a.x, b.y - a.y); }

double cross(Point2 a, Point2 b, Point2 c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

std::uint64_t edge_key(int a, int b) {
  const auto lo = static_cast<std::uint64_t>(std::min(a, b));
  const auto hi = static_cast<std::uint64_t>(std::max(a, b));
  return (lo << 32) | hi;
}

}  // namespace

double Rectangle::diameter() const { return std::hypot(width(), height()); }

Mesh::Mesh(Rectangle domain, std::vector<Point2> vertices, std::vector<Triangle> triangles,
           std::vector<BoundaryEdge> boundary_edges)
    : domain_(domain),
      vertices_(std::move(vertices)),
      triangles_(std::move(triangles)),
      boundary_edges_(std::move(boundary_edges)),
      vertex_sides_(vertices_.size(), 0) {
  for (int t = 0; t < num_triangles(); ++t) {
    const auto c = corners(t);
    if (!(cross(c[0], c[1], c[2]) > 0.0)) {
      throw InvalidArgument("mesh triangle " + std::to_string(t) +
                            " is degenerate or clockwise");
    }
    for (int k = 0; k < 3; ++k) {
      mesh_size_ = std::max(mesh_size_, distance(c[k], c[(k + 1) % 3]));
    }
    const auto [lo, hi] = std::minmax({c[0].x, c[1].x, c[2].x});
    max_x_extent_ = std::max(max_x_extent_, hi - lo);
  }
  for (const auto& e : boundary_edges_) {
    for (int v : e.v) {
      vertex_sides_[v] |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(e.side));
    }
  }
}

std::array<Point2, 3> Mesh::corners(int tri) const {
  const auto& t = triangles_[tri];
  return {vertices_[t.v[0]], vertices_[t.v[1]], vertices_[t.v[2]]};
}

Point2 Mesh::centroid(int tri) const {
  const auto c = corners(tri);
  return {(c[0].x + c[1].x + c[2].x) / 3.0, (c[0].y + c[1].y + c[2].y) / 3.0};
}

double Mesh::signed_area(int tri) const {
  const auto c = corners(tri);
  return 0.5 * cross(c[0], c[1], c[2]);
}

Mesh generate_rect_mesh(const Rectangle& domain, double target_h) {
  if (!(target_h > 0.0) || !std::isfinite(target_h)) {
    throw InvalidArgument("target_h must be positive");
  }
  if (!(domain.width() > 0.0) || !(domain.height() > 0.0)) {
    throw InvalidArgument("rectangle must have positive width and height");
  }
  // The 1e-9 slack keeps exact divisors (e.g. 1 / (1/4)) from rounding up.
  const int nx = std::max(1, static_cast<int>(std::ceil(domain.width() / target_h - 1e-9)));
  const int ny = std::max(1, static_cast<int>(std::ceil(domain.height() / target_h - 1e-9)));

  std::vector<Point2> vertices;
  vertices.reserve(static_cast<std::size_t>(nx + 1) * (ny + 1));
  for (int j = 0; j <= ny; ++j) {
    for (int i = 0; i <= nx; ++i) {
      const double x = i == nx ? domain.x1 : domain.x0 + domain.width() * i / nx;
      const double y = j == ny ? domain.y1 : domain.y0 + domain.height() * j / ny;
      vertices.push_back({x, y});
    }
  }
  auto vid = [nx](int i, int j) { return j * (nx + 1) + i; };

  std::vector<Triangle> triangles;
  triangles.reserve(2 * static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int v00 = vid(i, j), v10 = vid(i + 1, j), v11 = vid(i + 1, j + 1), v01 = vid(i, j + 1);
      triangles.push_back({{v00, v10, v11}});
      triangles.push_back({{v00, v11, v01}});
    }
  }

  std::vector<BoundaryEdge> boundary;
  for (int i = 0; i < nx; ++i) {
    boundary.push_back({{vid(i, 0), vid(i + 1, 0)}, BoundarySide::bottom});
    boundary.push_back({{vid(i + 1, ny), vid(i, ny)}, BoundarySide::top});
  }
  for (int j = 0; j < ny; ++j) {
    boundary.push_back({{vid(0, j + 1), vid(0, j)}, BoundarySide::left});
    boundary.push_back({{vid(nx, j), vid(nx, j + 1)}, BoundarySide::right});
  }
  return Mesh(domain, std::move(vertices), std::move(triangles), std::move(boundary));
}

MeshHierarchy red_refine(const Mesh& mesh) {
  std::vector<Point2> vertices(mesh.vertices().begin(), mesh.vertices().end());
  std::unordered_map<std::uint64_t, int> midpoint;
  midpoint.reserve(static_cast<std::size_t>(mesh.num_triangles()) * 2);
  auto mid = [&](int a, int b) {
    const auto key = edge_key(a, b);
    if (auto it = midpoint.find(key); it != midpoint.end()) return it->second;
    const int id = static_cast<int>(vertices.size());
    vertices.push_back(0.5 * (vertices[a] + vertices[b]));
    midpoint.emplace(key, id);
    return id;
  };

  std::vector<Triangle> triangles;
  triangles.reserve(4 * static_cast<std::size_t>(mesh.num_triangles()));
  std::vector<int> parent_of;
  parent_of.reserve(triangles.capacity());
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto [a, b, c] = mesh.triangles()[t].v;
    const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
    triangles.push_back({{a, ab, ca}});
    triangles.push_back({{ab, b, bc}});
    triangles.push_back({{ca, bc, c}});
    triangles.push_back({{ab, bc, ca}});
    parent_of.insert(parent_of.end(), 4, t);
  }

  std::vector<BoundaryEdge> boundary;
  boundary.reserve(2 * mesh.boundary_edges().size());
  for (const auto& e : mesh.boundary_edges()) {
    const int m = midpoint.at(edge_key(e.v[0], e.v[1]));
    boundary.push_back({{e.v[0], m}, e.side});
    boundary.push_back({{m, e.v[1]}, e.side});
  }

  MeshHierarchy h;
  h.coarse = mesh;
  h.fine = Mesh(mesh.domain(), std::move(vertices), std::move(triangles), std::move(boundary));
  h.parent_of = std::move(parent_of);
  h.levels = 1;
  return h;
}

MeshHierarchy refine_levels(const Mesh& coarse, int levels) {
  if (levels < 0) throw InvalidArgument("refinement level count must be nonnegative");
  MeshHierarchy h;
  h.coarse = coarse;
  h.fine = coarse;
  h.parent_of.resize(coarse.num_triangles());
  for (int t = 0; t < coarse.num_triangles(); ++t) h.parent_of[t] = t;
  for (int l = 0; l < levels; ++l) {
    auto step = red_refine(h.fine);
    std::vector<int> composed(step.parent_of.size());
    for (std::size_t t = 0; t < composed.size(); ++t) {
      composed[t] = h.parent_of[step.parent_of[t]];
    }
    h.fine = std::move(step.fine);
    h.parent_of = std::move(composed);
  }
  h.levels = levels;
  return h;
}

bool point_in_triangle(Point2 p, const Triangle& t, const Mesh& mesh) {
  const auto verts = mesh.vertices();
  const Point2 a = verts[t.v[0]], b = verts[t.v[1]], c = verts[t.v[2]];
  const double area = cross(a, b, c);
  const double tol = -1e-12 * std::abs(area);
  return cross(p, b, c) >= tol && cross(a, p, c) >= tol && cross(a, b, p) >= tol;
}

int count_conformity_violations(const Mesh& mesh) {
  std::map<std::uint64_t, int> incidence;
  for (const auto& t : mesh.triangles()) {
    for (int k = 0; k < 3; ++k) ++incidence[edge_key(t.v[k], t.v[(k + 1) % 3])];
  }
  std::map<std::uint64_t, int> on_boundary;
  for (const auto& e : mesh.boundary_edges()) ++on_boundary[edge_key(e.v[0], e.v[1])];

  int violations = 0;
  for (const auto& [key, count] : incidence) {
    const bool boundary = on_boundary.contains(key);
    if (count != (boundary ? 1 : 2)) ++violations;
  }
  for (const auto& [key, count] : on_boundary) {
    if (count != 1 || !incidence.contains(key)) ++violations;
  }
  return violations;
}

void write_mesh(std::ostream& os, const Mesh& mesh) {
  const auto old_precision = os.precision(17);
  for (const auto& v : mesh.vertices()) os << "v " << v.x << ' ' << v.y << '\n';
  for (const auto& t : mesh.triangles()) {
    os << "t " << t.v[0] << ' ' << t.v[1] << ' ' << t.v[2] << '\n';
  }
  for (const auto& e : mesh.boundary_edges()) os << "b " << e.v[0] << ' ' << e.v[1] << '\n';
  os.precision(old_precision);
}

}  // namespace qge
