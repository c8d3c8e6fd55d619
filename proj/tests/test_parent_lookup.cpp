#include <random>

#include "doctest.h"
#include "qge/errors.hpp"
#include "qge/parent_lookup.hpp"

using namespace qge;

namespace {

// Oracle: every coarse triangle containing p, by exhaustive scan.
std::vector<int> containing(const Mesh& coarse, Point2 p) {
  std::vector<int> out;
  for (int t = 0; t < coarse.num_triangles(); ++t) {
    if (point_in_triangle(p, coarse.triangles()[t], coarse)) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("two-triangle mesh: a query below the diagonal lands in the lower triangle") {
  const Mesh m = generate_rect_mesh(Rectangle::unit_square(), 1.0);
  REQUIRE(m.num_triangles() == 2);
  const ParentLocator loc(m);
  for (const Point2 p : {Point2{0.1, 0.05}, Point2{0.9, 0.05}}) {
    const int t = loc.find_parent(p);
    // The lower triangle is the one with the corner (1, 0).
    bool lower = false;
    for (const Point2& c : m.corners(t)) lower = lower || (c.x == 1.0 && c.y == 0.0);
    CHECK(lower);
  }
  // On the shared diagonal either triangle is a valid parent.
  const Point2 diag{0.1, 0.1};
  CHECK(containing(m, diag).size() == 2);
  CHECK(point_in_triangle(diag, m.triangles()[loc.find_parent(diag)], m));
}

TEST_CASE("centroid lookup matches exhaustive search and stored parentage") {
  const Mesh coarse = generate_rect_mesh(Rectangle::unit_square(), 0.5);
  const MeshHierarchy h = red_refine(coarse);
  const ParentLocator loc(coarse);
  for (int t = 0; t < h.fine.num_triangles(); ++t) {
    const Point2 c = h.fine.centroid(t);
    const auto all = containing(coarse, c);
    REQUIRE(all.size() == 1);
    CHECK(loc.find_parent(c) == all.front());
    CHECK(loc.find_parent(c) == h.parent_of[t]);
  }
}

TEST_CASE("lookup agrees with parentage across four-level hierarchies") {
  for (const Rectangle& r : {Rectangle::unit_square(), Rectangle{0.0, 0.0, 3.0, 1.0}}) {
    const Mesh coarse = generate_rect_mesh(r, 0.25);
    const MeshHierarchy h = refine_levels(coarse, 4);
    const ParentLocator loc(coarse);
    const auto found = locate_parents(h.fine, loc);
    int agree = 0;
    for (int t = 0; t < h.fine.num_triangles(); ++t) agree += found[t] == h.parent_of[t];
    CHECK(agree == h.fine.num_triangles());
  }
}

TEST_CASE("candidate strips stay within three cell columns") {
  const int ny = 16;
  const Mesh coarse = generate_rect_mesh(Rectangle::unit_square(), 1.0 / ny);
  const MeshHierarchy h = refine_levels(coarse, 2);
  const ParentLocator loc(coarse);
  ParentLocator::Stats stats;
  for (int t = 0; t < h.fine.num_triangles(); ++t) loc.find_parent(h.fine.centroid(t), stats);
  CHECK(stats.max_candidates <= static_cast<std::size_t>(3 * (ny + 2)));
  // Binary search: about log2(n) probes per query.
  CHECK(stats.binary_probes <= stats.queries * 10);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const Point2 p{u(rng), u(rng)};
    const int t = loc.find_parent(p, stats);
    CHECK(point_in_triangle(p, coarse.triangles()[t], coarse));
  }
  CHECK(stats.max_candidates <= static_cast<std::size_t>(3 * (ny + 2)));
}

TEST_CASE("points outside the mesh raise a lookup failure") {
  const Mesh m = generate_rect_mesh(Rectangle::unit_square(), 0.25);
  const ParentLocator loc(m);
  CHECK_THROWS_AS(loc.find_parent({2.0, 2.0}), LookupFailure);
  CHECK_THROWS_AS(loc.find_parent({0.5, -0.1}), LookupFailure);
}
