#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace qge {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point2 a, Point2 b) = default;
};

/// Axis-aligned rectangle [x0, x1] x [y0, y1].
struct Rectangle {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 1.0;
  double y1 = 1.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  double diameter() const;

  static Rectangle unit_square() { return {}; }
};

/// Vertex ids are counterclockwise.
struct Triangle {
  std::array<int, 3> v{};
};

enum class BoundarySide : std::uint8_t { left, right, bottom, top };

struct BoundaryEdge {
  std::array<int, 2> v{};
  BoundarySide side = BoundarySide::bottom;
};

/// Conforming triangulation of a rectangle. Immutable after construction.
class Mesh {
 public:
  Mesh() = default;
  Mesh(Rectangle domain, std::vector<Point2> vertices, std::vector<Triangle> triangles,
       std::vector<BoundaryEdge> boundary_edges);

  const Rectangle& domain() const { return domain_; }
  std::span<const Point2> vertices() const { return vertices_; }
  std::span<const Triangle> triangles() const { return triangles_; }
  std::span<const BoundaryEdge> boundary_edges() const { return boundary_edges_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }

  /// Maximum over triangles of the longest edge.
  double mesh_size() const { return mesh_size_; }

  /// Largest x-extent of any triangle; bounds |x - centroid.x| for points inside.
  double max_x_extent() const { return max_x_extent_; }

  std::array<Point2, 3> corners(int tri) const;
  Point2 centroid(int tri) const;
  double signed_area(int tri) const;

  /// Which rectangle sides each vertex lies on (bit i set for BoundarySide i).
  std::uint8_t vertex_sides(int vertex) const { return vertex_sides_[vertex]; }

 private:
  Rectangle domain_;
  std::vector<Point2> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<BoundaryEdge> boundary_edges_;
  std::vector<std::uint8_t> vertex_sides_;
  double mesh_size_ = 0.0;
  double max_x_extent_ = 0.0;
};

struct MeshHierarchy {
  Mesh coarse;
  Mesh fine;
  /// fine triangle id -> coarse triangle id
  std::vector<int> parent_of;
  int levels = 0;
};

/// Structured right-triangle mesh: ceil(width/h) x ceil(height/h) cells, each split
/// along its (lower-left, upper-right) diagonal.
Mesh generate_rect_mesh(const Rectangle& domain, double target_h);

/// One level of red refinement. Children of triangle t are 4t .. 4t+3.
MeshHierarchy red_refine(const Mesh& mesh);

/// `levels` successive red refinements with composed parentage; levels == 0 gives
/// the identity hierarchy.
MeshHierarchy refine_levels(const Mesh& coarse, int levels);

/// Closed-triangle containment with a relative tolerance on the signed areas.
bool point_in_triangle(Point2 p, const Triangle& t, const Mesh& mesh);

/// Checks that every interior edge has two incident triangles and every boundary
/// edge one. Returns the number of violations.
int count_conformity_violations(const Mesh& mesh);

/// Plain-text dump: "v x y", "t i j k", "b i j".
void write_mesh(std::ostream& os, const Mesh& mesh);

}  // namespace qge
