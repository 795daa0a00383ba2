#pragma once

#include "mvwave/reffun.hpp"
#include "mvwave/scene.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace mvwave {

// Multiview image: a grid of 8-bit intensities whose extents are whole
// cells, together with the geometry it was built for.
struct MultiviewImage {
  Grid<std::uint8_t> pixels;
  DisplayConfig cfg;

  int width_px() const { return pixels.width(); }
  int height_px() const { return pixels.height(); }
  int cells_x() const { return pixels.width() / cfg.cell_pitch; }
  int cells_y() const { return pixels.height() / cfg.cell_pitch; }
};

struct RenderResult {
  MultiviewImage image;
  std::vector<int> planes_used;  // distinct plane indices, ascending
  int margin_cells = 0;          // extra cells on the right/bottom edges
};

// Renders a voxel set: each voxel stamps its full-scale 2D reference pattern
// at its anchor cell, composed by saturating max (binary OR for binary
// objects), so overlapping patterns never erase each other. The canvas gets
// a margin of max|k| extra cells on the right and bottom because patterns
// extend from their anchor toward increasing cells.
inline RenderResult render(const VoxelSet& scene, const DisplayConfig& cfg) {
  std::map<int, Kernel2D> kernels;
  for (const Voxel& v : scene.voxels)
    if (!kernels.count(v.k)) kernels.emplace(v.k, raster_2d(PlaneIndex(v.k), cfg));

  int margin = 0;
  for (const auto& [k, kernel] : kernels) margin = std::max(margin, kernel.side_cells);

  const int p = cfg.cell_pitch;
  const std::uint8_t full = static_cast<std::uint8_t>(cfg.gray_levels - 1);
  RenderResult out;
  out.margin_cells = margin;
  out.image.cfg = cfg;
  out.image.pixels = Grid<std::uint8_t>((scene.cells_x + margin) * p, (scene.cells_y + margin) * p);
  for (const auto& [k, kernel] : kernels) out.planes_used.push_back(k);

  Grid<std::uint8_t>& img = out.image.pixels;
  for (const Voxel& v : scene.voxels) {
    const Kernel2D& kernel = kernels.at(v.k);
    const int side = kernel.values.width();
    const int bx = v.cx * p;
    const int by = v.cy * p;
    if (bx < 0 || by < 0 || bx + side > img.width() || by + side > img.height())
      throw InternalError("voxel pattern exceeds the canvas");
    for (int y = 0; y < side; ++y) {
      const auto src = kernel.values.row(y);
      auto dst = img.row(by + y);
      for (int x = 0; x < side; ++x)
        if (src[x] != 0) dst[bx + x] = std::max(dst[bx + x], full);
    }
  }
  return out;
}

namespace detail {

// Unbiased uniform draw in [0, n] by rejecting the biased top of the 32-bit
// range; keeps outputs identical across standard libraries.
inline std::uint32_t uniform_u32(std::mt19937& rng, std::uint32_t n) {
  const std::uint64_t span = std::uint64_t(n) + 1;
  const std::uint32_t limit = static_cast<std::uint32_t>((1ull << 32) - ((1ull << 32) % span));
  for (;;) {
    const std::uint32_t x = rng();
    if (limit == 0 || x < limit) return static_cast<std::uint32_t>(x % span);
  }
}

}  // namespace detail

// Adds independent uniform integer background noise in [0, amplitude] to
// every pixel, clamped to the gray-level ceiling. Deterministic per seed.
inline MultiviewImage add_noise(const MultiviewImage& img, int amplitude, std::uint32_t seed) {
  if (amplitude < 0 || amplitude >= img.cfg.gray_levels)
    throw ArgumentError("noise amplitude must be in [0, gray levels)");
  MultiviewImage out = img;
  const int ceiling = img.cfg.gray_levels - 1;
  std::mt19937 rng(seed);
  for (int y = 0; y < out.pixels.height(); ++y) {
    auto row = out.pixels.row(y);
    for (auto& px : row) {
      const int noisy = px + static_cast<int>(detail::uniform_u32(rng, static_cast<std::uint32_t>(amplitude)));
      px = static_cast<std::uint8_t>(std::min(noisy, ceiling));
    }
  }
  return out;
}

}  // namespace mvwave
