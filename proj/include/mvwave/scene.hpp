#pragma once

#include "mvwave/core.hpp"

#include <array>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

namespace mvwave {

// Integer 3D point / voxel anchor: lateral cell coordinates plus a signed
// depth-plane index.
struct Voxel {
  int cx = 0;
  int cy = 0;
  int k = 0;

  auto operator<=>(const Voxel&) const = default;
};

struct VoxelSet {
  std::set<Voxel> voxels;
  int cells_x = 0;  // lateral extents; every voxel satisfies 0 <= cx < cells_x
  int cells_y = 0;
  int skipped_zero_plane = 0;  // line steps dropped at the excluded plane 0
};

// Wireframe description: vertices plus vertex-index edge pairs (0-based).
// Vertices that appear on no edge are still rasterized as single voxels.
struct EdgeList {
  std::vector<Voxel> vertices;
  std::vector<std::pair<int, int>> edges;
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  // b > 0
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

// Nearest integer to q/n with exact-half ties rounded up (toward +inf) or
// down (toward -inf); n > 0.
inline std::int64_t round_half(std::int64_t q, std::int64_t n, bool up) {
  return up ? floor_div(2 * q + n, 2 * n) : floor_div(2 * q + n - 1, 2 * n);
}

}  // namespace detail

// Straight 3D line walk from a to b, both endpoints included. The driving
// axis is the one with the largest |delta|; the other coordinates are the
// nearest integers to the exact line, with half ties rounded toward b.
// Endpoints are canonicalized first, so the result is direction-independent.
// Steps that land on plane 0 are dropped and counted in the result.
inline VoxelSet rasterize_segment_3d(Voxel a, Voxel b) {
  if (a.k == 0 || b.k == 0) throw ArgumentError("segment endpoints must lie on a nonzero plane");
  if (a.cx < 0 || a.cy < 0 || b.cx < 0 || b.cy < 0)
    throw ArgumentError("lateral cell coordinates must be non-negative");
  if (b < a) std::swap(a, b);

  const int dx = b.cx - a.cx;
  const int dy = b.cy - a.cy;
  const int dk = b.k - a.k;
  const int n = std::max({dx < 0 ? -dx : dx, dy < 0 ? -dy : dy, dk < 0 ? -dk : dk});

  VoxelSet out;
  out.cells_x = std::max(a.cx, b.cx) + 1;
  out.cells_y = std::max(a.cy, b.cy) + 1;
  if (n == 0) {
    out.voxels.insert(a);
    return out;
  }
  for (int t = 0; t <= n; ++t) {
    const Voxel v{
        a.cx + static_cast<int>(detail::round_half(std::int64_t(dx) * t, n, dx > 0)),
        a.cy + static_cast<int>(detail::round_half(std::int64_t(dy) * t, n, dy > 0)),
        a.k + static_cast<int>(detail::round_half(std::int64_t(dk) * t, n, dk > 0)),
    };
    if (v.k == 0) {
      ++out.skipped_zero_plane;
      continue;
    }
    out.voxels.insert(v);
  }
  return out;
}

// Rasterizes every edge and every vertex of a wireframe into one voxel set.
inline VoxelSet from_edge_list(const EdgeList& shape) {
  const int count = static_cast<int>(shape.vertices.size());
  for (const Voxel& v : shape.vertices) {
    if (v.k == 0) throw FormatError("vertex on plane 0 is not representable");
    if (v.cx < 0 || v.cy < 0) throw FormatError("vertex lateral coordinates must be non-negative");
  }
  for (const auto& [i, j] : shape.edges) {
    if (i < 0 || i >= count || j < 0 || j >= count)
      throw FormatError("edge references vertex " + std::to_string(i < 0 || i >= count ? i : j) +
                        " out of range");
    if (i == j) throw FormatError("self-loop edge at vertex " + std::to_string(i));
  }

  VoxelSet out;
  for (const Voxel& v : shape.vertices) {
    out.voxels.insert(v);
    out.cells_x = std::max(out.cells_x, v.cx + 1);
    out.cells_y = std::max(out.cells_y, v.cy + 1);
  }
  for (const auto& [i, j] : shape.edges) {
    VoxelSet segment = rasterize_segment_3d(shape.vertices[i], shape.vertices[j]);
    out.voxels.insert(segment.voxels.begin(), segment.voxels.end());
    out.skipped_zero_plane += segment.skipped_zero_plane;
  }
  return out;
}

// The four space diagonals of a size^3 cube. Lateral cells span size x size;
// the depth positions map onto the plane ladder {-size/2 .. -1, 1 .. size/2}
// (plane 0 does not exist, so size must be even for a symmetric ladder).
inline EdgeList cube_diagonal_edges(int size) {
  const int far = size - 1;
  const int top = size / 2;
  EdgeList shape;
  shape.vertices = {
      {0, 0, -top},     {far, far, top},  // main-diagonal pair
      {far, 0, -top},   {0, far, top},
      {0, far, -top},   {far, 0, top},
      {far, far, -top}, {0, 0, top},
  };
  shape.edges = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  return shape;
}

inline VoxelSet cube_diagonals(int size, const DisplayConfig& cfg) {
  if (size < 2 || size % 2 != 0) throw ConfigError("cube size must be even and at least 2");
  if (size / 2 > cfg.max_abs_plane)
    throw InvalidPlaneError("cube of size " + std::to_string(size) + " needs planes up to +-" +
                            std::to_string(size / 2));
  VoxelSet out = from_edge_list(cube_diagonal_edges(size));
  out.cells_x = size;
  out.cells_y = size;
  return out;
}

// Wireframe tetrahedron filling a 40 x 40 x 9 bounding volume: base triangle
// on the deepest plane -5 with vertices at lateral corners, apex centred on
// the shallowest plane +4, plus two isolated marker points in corners of the
// -5 plane. Vertex order: base (0,0), (39,0), (0,39); apex; the two markers.
// The base-corner-to-apex edge along the main diagonal (vertices 0 -> 3) is
// the one the per-plane wavelet maxima track.
inline EdgeList tetrahedron_edge_list() {
  EdgeList shape;
  shape.vertices = {
      {0, 0, -5}, {39, 0, -5}, {0, 39, -5},  // base triangle
      {20, 20, 4},                           // apex
      {39, 39, -5}, {39, 0, -5},             // corner markers
  };
  shape.edges = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
  return shape;
}

inline VoxelSet tetrahedron_edges(const DisplayConfig& cfg) {
  if (cfg.max_abs_plane < 5) throw InvalidPlaneError("tetrahedron needs planes down to -5");
  VoxelSet out = from_edge_list(tetrahedron_edge_list());
  out.cells_x = 40;
  out.cells_y = 40;
  return out;
}

// Plain-text wireframe format: `v <cx> <cy> <k>` vertex lines, then
// `e <i> <j>` edges over 0-based vertex indices; `#` starts a comment.
inline EdgeList parse_object_text(std::istream& in) {
  EdgeList shape;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    const std::string where = "object text line " + std::to_string(line_no);
    if (tag == "v") {
      Voxel v;
      if (!(fields >> v.cx >> v.cy >> v.k)) throw FormatError(where + ": expected `v <cx> <cy> <k>`");
      shape.vertices.push_back(v);
    } else if (tag == "e") {
      int i = 0, j = 0;
      if (!(fields >> i >> j)) throw FormatError(where + ": expected `e <i> <j>`");
      shape.edges.emplace_back(i, j);
    } else {
      throw FormatError(where + ": unknown record `" + tag + "`");
    }
    std::string extra;
    if (fields >> extra) throw FormatError(where + ": trailing tokens after record");
  }
  return shape;
}

}  // namespace mvwave
