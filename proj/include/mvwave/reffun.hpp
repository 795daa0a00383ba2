#pragma once

#include "mvwave/core.hpp"

namespace mvwave {

// One rectangular pulse of a 1D reference pattern, relative to the anchor.
//
// A plane-k pattern spans |k| consecutive cells and carries one pulse of
// width w = p/|k| per cell. The intra-cell offset advances by w per cell,
// ascending for k > 0 and descending for k < 0. This staircase is the
// layout for which copies of the pattern anchored at every cell tile the
// line with exactly one pulse per pixel (partition of unity), which in turn
// makes the detection peak independent of the plane.
struct PulseSpec {
  int cell_offset = 0;  // cell i within the support, 0-based from the anchor
  int left_edge = 0;    // pulse start inside its cell, pixels
  int width = 0;        // p / |k| pixels
  Rational center;      // pulse centre in pixels from the anchor; half-integer when width is odd
};

// Sampled 1D kernel, one value per pixel.
// Reference rasters hold {0, 1} and sum to the cell pitch for every plane;
// wavelet rasters hold {-1, 0, +1} and sum to zero.
struct Kernel1D {
  std::vector<int> values;
  int support_cells = 0;  // |k|; 0 for kernels not tied to the cell grid
  int plane = 0;          // signed plane index; 0 for plane-free kernels
};

// Sampled 2D kernel, always the outer product of a 1D kernel with itself.
struct Kernel2D {
  Grid<int> values;
  int side_cells = 0;
  int plane = 0;
};

// Pitch/plane compatibility checks shared by every kernel builder.
inline void check_cell_geometry(PlaneIndex k, const DisplayConfig& cfg) {
  if (cfg.cell_pitch < 2) throw ConfigError("cell pitch must be at least 2 pixels");
  if (cfg.gray_levels < 2) throw ConfigError("gray-level count must be at least 2");
  if (cfg.max_abs_plane < 1) throw ConfigError("max |plane| must be at least 1");
  if (k.magnitude() > cfg.max_abs_plane)
    throw InvalidPlaneError("plane " + std::to_string(k.value()) + " exceeds max |plane| " +
                            std::to_string(cfg.max_abs_plane));
  if (cfg.cell_pitch % k.magnitude() != 0)
    throw ConfigError("cell pitch " + std::to_string(cfg.cell_pitch) + " is not divisible by |" +
                      std::to_string(k.value()) + "|; fractional pulse widths are not rasterized");
}

inline std::vector<PulseSpec> pulse_layout(PlaneIndex k, const DisplayConfig& cfg) {
  check_cell_geometry(k, cfg);
  const int m = k.magnitude();
  const int p = cfg.cell_pitch;
  const int w = p / m;
  std::vector<PulseSpec> pulses;
  pulses.reserve(m);
  for (int i = 0; i < m; ++i) {
    const int left = (k.value() > 0 ? i : m - 1 - i) * w;
    pulses.push_back({i, left, w, Rational(2 * (i * p + left) + w, 2)});
  }
  return pulses;
}

// Binary raster of the plane-k reference pattern: 1 inside any pulse, 0
// elsewhere. Length |k| * p, sum p for every plane.
inline Kernel1D raster_1d(PlaneIndex k, const DisplayConfig& cfg) {
  const auto pulses = pulse_layout(k, cfg);
  const int p = cfg.cell_pitch;
  Kernel1D out{std::vector<int>(static_cast<std::size_t>(k.magnitude()) * p, 0), k.magnitude(),
               k.value()};
  for (const PulseSpec& pulse : pulses) {
    const int start = pulse.cell_offset * p + pulse.left_edge;
    for (int x = start; x < start + pulse.width; ++x) out.values[x] = 1;
  }
  return out;
}

// The same raster assembled as a sum of shifted Haar box functions, one per
// pulse, evaluated pixel by pixel from the pulse centres. A pixel sampled at
// its centre x = j + 1/2 lies inside the box of the pulse centred at c with
// width w exactly when -w <= 2j + 1 - 2c < w; the comparison is kept in
// doubled-pixel integers so half-integer centres stay exact. Must equal
// raster_1d pointwise; the two construction routes are kept independent.
inline Kernel1D raster_1d_haar_form(PlaneIndex k, const DisplayConfig& cfg) {
  const auto pulses = pulse_layout(k, cfg);
  const int p = cfg.cell_pitch;
  const int len = k.magnitude() * p;
  Kernel1D out{std::vector<int>(static_cast<std::size_t>(len), 0), k.magnitude(), k.value()};
  for (int j = 0; j < len; ++j) {
    int value = 0;
    for (const PulseSpec& pulse : pulses) {
      assert(pulse.center.den == 1 || pulse.center.den == 2);
      const std::int64_t two_c = pulse.center.den == 1 ? 2 * pulse.center.num : pulse.center.num;
      const std::int64_t d = 2 * j + 1 - two_c;
      if (d >= -pulse.width && d < pulse.width) ++value;
    }
    out.values[j] = value;
  }
  return out;
}

// Full-parallax reference pattern: outer product of the 1D raster with
// itself. Sum p^2 for every plane.
inline Kernel2D raster_2d(PlaneIndex k, const DisplayConfig& cfg) {
  const Kernel1D f = raster_1d(k, cfg);
  const int n = static_cast<int>(f.values.size());
  Kernel2D out{Grid<int>(n, n), f.support_cells, f.plane};
  for (int y = 0; y < n; ++y) {
    const int fy = f.values[y];
    auto row = out.values.row(y);
    for (int x = 0; x < n; ++x) row[x] = fy * f.values[x];
  }
  return out;
}

}  // namespace mvwave
