#include "mvwave/scene.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <sstream>

using namespace mvwave;

namespace {

const DisplayConfig kDefault{};

std::set<Voxel> transform(const std::set<Voxel>& voxels, int size, bool swap_xy, bool mirror_x,
                          bool mirror_y) {
  std::set<Voxel> out;
  for (Voxel v : voxels) {
    if (swap_xy) std::swap(v.cx, v.cy);
    if (mirror_x) v.cx = size - 1 - v.cx;
    if (mirror_y) v.cy = size - 1 - v.cy;
    out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("segment rasterization basics") {
  SECTION("degenerate segment") {
    const VoxelSet s = rasterize_segment_3d({0, 0, 1}, {0, 0, 1});
    CHECK(s.voxels == std::set<Voxel>{{0, 0, 1}});
    CHECK(s.cells_x == 1);
    CHECK(s.cells_y == 1);
  }

  SECTION("axis-aligned segment") {
    const VoxelSet s = rasterize_segment_3d({0, 0, 1}, {3, 0, 1});
    CHECK(s.voxels == std::set<Voxel>{{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {3, 0, 1}});
  }

  SECTION("full diagonal through the plane ladder skips plane 0") {
    const VoxelSet s = rasterize_segment_3d({0, 0, -4}, {7, 7, 4});
    const std::set<Voxel> expected{{0, 0, -4}, {1, 1, -3}, {2, 2, -2}, {3, 3, -1},
                                   {4, 4, 1},  {5, 5, 2},  {6, 6, 3},  {7, 7, 4}};
    CHECK(s.voxels == expected);
    CHECK(s.skipped_zero_plane == 1);
  }

  SECTION("endpoints on plane 0 are rejected") {
    CHECK_THROWS_AS(rasterize_segment_3d({0, 0, 0}, {1, 1, 1}), ArgumentError);
    CHECK_THROWS_AS(rasterize_segment_3d({-1, 0, 1}, {1, 1, 1}), ArgumentError);
  }
}

TEST_CASE("segment rasterization properties") {
  std::mt19937 rng(7031);
  const auto coord = [&rng] { return static_cast<int>(rng() % 13); };
  const auto plane = [&rng] {
    const int k = 1 + static_cast<int>(rng() % 6);
    return rng() % 2 ? k : -k;
  };

  for (int trial = 0; trial < 200; ++trial) {
    const Voxel a{coord(), coord(), plane()};
    const Voxel b{coord(), coord(), plane()};
    CAPTURE(trial, a.cx, a.cy, a.k, b.cx, b.cy, b.k);
    const VoxelSet forward = rasterize_segment_3d(a, b);

    // direction independence
    CHECK(rasterize_segment_3d(b, a).voxels == forward.voxels);

    // endpoint inclusion (unless an endpoint was never placed, which cannot
    // happen: endpoints are exact and nonzero)
    CHECK(forward.voxels.count(a) == 1);
    CHECK(forward.voxels.count(b) == 1);

    // one voxel per line step, minus the dropped plane-0 steps
    const int n = std::max({std::abs(a.cx - b.cx), std::abs(a.cy - b.cy), std::abs(a.k - b.k)});
    CHECK(static_cast<int>(forward.voxels.size()) + forward.skipped_zero_plane == n + 1);

    // 26-connectivity, checked along the strictly monotone driving axis when
    // no plane-0 step interrupts the walk
    if (forward.skipped_zero_plane == 0 && !forward.voxels.empty()) {
      std::vector<Voxel> path(forward.voxels.begin(), forward.voxels.end());
      const int dx = std::abs(a.cx - b.cx), dy = std::abs(a.cy - b.cy), dk = std::abs(a.k - b.k);
      const auto axis_of = [&](const Voxel& v) {
        if (dx >= dy && dx >= dk) return v.cx;
        if (dy >= dk) return v.cy;
        return v.k;
      };
      std::sort(path.begin(), path.end(),
                [&](const Voxel& l, const Voxel& r) { return axis_of(l) < axis_of(r); });
      for (std::size_t i = 1; i < path.size(); ++i) {
        CHECK(std::abs(path[i].cx - path[i - 1].cx) <= 1);
        CHECK(std::abs(path[i].cy - path[i - 1].cy) <= 1);
        CHECK(std::abs(path[i].k - path[i - 1].k) <= 1);
      }
    }
  }
}

TEST_CASE("cube diagonals") {
  SECTION("size 8: four diagonals of eight voxels each") {
    const VoxelSet cube = cube_diagonals(8, kDefault);
    CHECK(cube.voxels.size() == 32);
    CHECK(cube.cells_x == 8);
    CHECK(cube.cells_y == 8);
    for (int k = -4; k <= 4; ++k) {
      if (k == 0) continue;
      CAPTURE(k);
      const auto count = std::count_if(cube.voxels.begin(), cube.voxels.end(),
                                       [k](const Voxel& v) { return v.k == k; });
      CHECK(count == 4);
    }
  }

  SECTION("size 2 degenerates to the eight corners") {
    const VoxelSet cube = cube_diagonals(2, kDefault);
    CHECK(cube.voxels.size() == 8);
    for (const Voxel& v : cube.voxels) {
      CHECK((v.cx == 0 || v.cx == 1));
      CHECK((v.cy == 0 || v.cy == 1));
      CHECK((v.k == -1 || v.k == 1));
    }
  }

  SECTION("invariant under the lateral symmetries that permute the diagonals") {
    const VoxelSet cube = cube_diagonals(8, kDefault);
    CHECK(transform(cube.voxels, 8, true, false, false) == cube.voxels);
    CHECK(transform(cube.voxels, 8, false, true, false) == cube.voxels);
    CHECK(transform(cube.voxels, 8, false, false, true) == cube.voxels);
  }

  SECTION("odd or oversized cubes are rejected") {
    CHECK_THROWS_AS(cube_diagonals(7, kDefault), ConfigError);
    CHECK_THROWS_AS(cube_diagonals(0, kDefault), ConfigError);
    CHECK_THROWS_AS(cube_diagonals(16, kDefault), InvalidPlaneError);
  }
}

TEST_CASE("tetrahedron wireframe") {
  const VoxelSet tetra = tetrahedron_edges(kDefault);

  SECTION("bounding volume is 40 x 40 x 9") {
    CHECK(tetra.cells_x == 40);
    CHECK(tetra.cells_y == 40);
    int min_x = 40, max_x = -1, min_y = 40, max_y = -1;
    std::set<int> planes;
    for (const Voxel& v : tetra.voxels) {
      min_x = std::min(min_x, v.cx);
      max_x = std::max(max_x, v.cx);
      min_y = std::min(min_y, v.cy);
      max_y = std::max(max_y, v.cy);
      planes.insert(v.k);
    }
    CHECK(min_x == 0);
    CHECK(max_x == 39);
    CHECK(min_y == 0);
    CHECK(max_y == 39);
    CHECK(planes == std::set<int>{-5, -4, -3, -2, -1, 1, 2, 3, 4});
    CHECK(40 * 40 * 9 == 14400);
  }

  SECTION("the corner markers on plane -5 are present") {
    CHECK(tetra.voxels.count({39, 39, -5}) == 1);
    CHECK(tetra.voxels.count({39, 0, -5}) == 1);
  }

  SECTION("needs a deep enough plane ladder") {
    CHECK_THROWS_AS(tetrahedron_edges(DisplayConfig{60, 256, 4}), InvalidPlaneError);
  }
}

TEST_CASE("edge-list rasterization") {
  SECTION("isolated vertices are kept") {
    EdgeList shape;
    shape.vertices = {{2, 3, 1}};
    const VoxelSet s = from_edge_list(shape);
    CHECK(s.voxels == std::set<Voxel>{{2, 3, 1}});
    CHECK(s.cells_x == 3);
    CHECK(s.cells_y == 4);
  }

  SECTION("edges sharing a vertex union without duplicates") {
    EdgeList shape;
    shape.vertices = {{0, 0, 1}, {3, 0, 1}, {0, 3, 1}};
    shape.edges = {{0, 1}, {0, 2}};
    const VoxelSet s = from_edge_list(shape);
    CHECK(s.voxels.size() == 7);  // 4 + 4 sharing the origin
  }

  SECTION("invalid shapes are rejected") {
    EdgeList bad_index;
    bad_index.vertices = {{0, 0, 1}};
    bad_index.edges = {{0, 1}};
    CHECK_THROWS_AS(from_edge_list(bad_index), FormatError);

    EdgeList self_loop;
    self_loop.vertices = {{0, 0, 1}, {1, 1, 1}};
    self_loop.edges = {{1, 1}};
    CHECK_THROWS_AS(from_edge_list(self_loop), FormatError);

    EdgeList zero_plane;
    zero_plane.vertices = {{0, 0, 0}};
    CHECK_THROWS_AS(from_edge_list(zero_plane), FormatError);
  }
}

TEST_CASE("object text format") {
  SECTION("vertices, edges and comments") {
    std::istringstream in(
        "# a single segment\n"
        "v 0 0 1\n"
        "v 3 0 1  # far end\n"
        "\n"
        "e 0 1\n");
    const EdgeList shape = parse_object_text(in);
    REQUIRE(shape.vertices.size() == 2);
    REQUIRE(shape.edges.size() == 1);
    const VoxelSet s = from_edge_list(shape);
    CHECK(s.voxels.size() == 4);
  }

  SECTION("malformed records carry the line number") {
    std::istringstream bad_tag("q 1 2 3\n");
    CHECK_THROWS_WITH(parse_object_text(bad_tag), Catch::Matchers::ContainsSubstring("line 1"));

    std::istringstream short_vertex("v 1 2\n");
    CHECK_THROWS_AS(parse_object_text(short_vertex), FormatError);

    std::istringstream trailing("v 1 2 3 4\n");
    CHECK_THROWS_AS(parse_object_text(trailing), FormatError);
  }
}
