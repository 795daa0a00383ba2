#pragma once

#include "mvwave/reffun.hpp"

namespace mvwave {

// Wavelet kernels share the sampled-kernel representation; values are in
// {-1, 0, +1} and every kernel sums to zero.
using WaveletKernel1D = Kernel1D;
using WaveletKernel2D = Kernel2D;

// The mother Haar wavelet over a pixel span: +1 on the first half, -1 on
// the second. Odd widths cannot split into equal halves and are rejected.
inline Kernel1D haar_mother(int width_px) {
  if (width_px < 2 || width_px % 2 != 0)
    throw ConfigError("Haar width must be even and at least 2, got " + std::to_string(width_px));
  Kernel1D out{std::vector<int>(static_cast<std::size_t>(width_px)), 0, 0};
  for (int x = 0; x < width_px; ++x) out.values[x] = x < width_px / 2 ? 1 : -1;
  return out;
}

// Plane-k wavelet: every pulse of the reference pattern is replaced by a
// Haar wavelet over the same span, so the wavelet lives exactly on the
// scaling pattern's support and sums to zero.
//
// When the pulse width is odd (p = 60, |k| = 4 gives w = 15) an equal split
// is impossible; the pulse becomes (w-1)/2 positive samples, one zero centre
// sample, (w-1)/2 negative samples (15 -> 7/1/7), which keeps the zero mean
// exact at the cost of a hole in the support.
inline WaveletKernel1D wavelet_1d(PlaneIndex k, const DisplayConfig& cfg) {
  const auto pulses = pulse_layout(k, cfg);
  const int p = cfg.cell_pitch;
  WaveletKernel1D out{std::vector<int>(static_cast<std::size_t>(k.magnitude()) * p, 0),
                      k.magnitude(), k.value()};
  for (const PulseSpec& pulse : pulses) {
    const int start = pulse.cell_offset * p + pulse.left_edge;
    const int w = pulse.width;
    if (w % 2 == 0) {
      for (int x = 0; x < w; ++x) out.values[start + x] = x < w / 2 ? 1 : -1;
    } else {
      const int half = (w - 1) / 2;
      for (int x = 0; x < half; ++x) out.values[start + x] = 1;
      for (int x = half + 1; x < w; ++x) out.values[start + x] = -1;
    }
  }
  return out;
}

inline WaveletKernel2D wavelet_2d(PlaneIndex k, const DisplayConfig& cfg) {
  const WaveletKernel1D w = wavelet_1d(k, cfg);
  const int n = static_cast<int>(w.values.size());
  WaveletKernel2D out{Grid<int>(n, n), w.support_cells, w.plane};
  for (int y = 0; y < n; ++y) {
    const int wy = w.values[y];
    auto row = out.values.row(y);
    for (int x = 0; x < n; ++x) row[x] = wy * w.values[x];
  }
  return out;
}

// Exact sample sum; 0 for every correctly built wavelet.
inline std::int64_t admissibility(const Kernel1D& kernel) {
  std::int64_t sum = 0;
  for (const int v : kernel.values) sum += v;
  return sum;
}

inline std::int64_t admissibility(const Kernel2D& kernel) {
  std::int64_t sum = 0;
  for (int y = 0; y < kernel.values.height(); ++y)
    for (const int v : kernel.values.row(y)) sum += v;
  return sum;
}

}  // namespace mvwave
