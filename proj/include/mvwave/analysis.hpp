#pragma once

#include "mvwave/synth.hpp"
#include "mvwave/wavelet.hpp"

namespace mvwave {

// Exact correlation scores over the valid anchor region: anchor (u, v) is
// scored only if the whole kernel support fits inside the image, so there is
// no padding and no artificial edge response.
struct ResponseMap {
  Grid<std::int64_t> scores;
  int plane = 0;
};

struct Detection {
  int cx = 0;
  int cy = 0;
  int k = 0;
  std::int64_t score = 0;
};

// Per-cell plane map. Gray levels rise strictly with the plane index; 0 is
// reserved for background.
struct DepthMap {
  Grid<std::uint8_t> cells;
  std::vector<std::pair<int, int>> legend;  // plane -> gray, ascending plane
  static constexpr std::uint8_t background = 0;
};

// Working detection peak: a lone full-scale voxel correlated with its own
// unit-amplitude pattern scores (L-1) * p^2 at its anchor. The constant
// pattern area makes this independent of the plane, which is what allows a
// single threshold across all planes.
inline std::int64_t threshold_value(const DisplayConfig& cfg) {
  return std::int64_t(cfg.gray_levels - 1) * cfg.cell_pitch * cfg.cell_pitch;
}

// The classical threshold estimate with both the image and the pattern at
// full gray scale: p^2 * L^2, quoted in units of 1e8. Exposed for reporting;
// detection thresholds use threshold_value, which matches the unit-amplitude
// kernels actually built here.
inline Rational threshold_units(const DisplayConfig& cfg) {
  const std::int64_t p = cfg.cell_pitch;
  const std::int64_t l = cfg.gray_levels;
  return Rational(p * p * l * l, 100000000);
}

namespace detail {

struct Taps {
  std::vector<int> offset;
  std::vector<std::int64_t> weight;
  int length = 0;
};

inline Taps taps_of(const Kernel1D& k) {
  Taps taps;
  taps.length = static_cast<int>(k.values.size());
  for (int i = 0; i < taps.length; ++i)
    if (k.values[i] != 0) {
      taps.offset.push_back(i);
      taps.weight.push_back(k.values[i]);
    }
  return taps;
}

inline void check_kernel_fit(const MultiviewImage& img, const Taps& tx, const Taps& ty) {
  if (tx.length == 0 || ty.length == 0) throw ArgumentError("correlation kernel is empty");
  if (tx.length > img.width_px() || ty.length > img.height_px())
    throw ArgumentError("correlation kernel exceeds the image");
}

// Shared two-pass evaluation: a horizontal pass at the requested anchor
// stride, then a vertical pass over the row scores. Exact integers
// throughout; stride 1 gives the full map, stride p the cell anchors.
inline Grid<std::int64_t> correlate_strided(const MultiviewImage& img, const Kernel1D& kx,
                                            const Kernel1D& ky, int stride_x, int stride_y) {
  const auto tx = taps_of(kx);
  const auto ty = taps_of(ky);
  check_kernel_fit(img, tx, ty);

  const int anchors_x = (img.width_px() - tx.length) / stride_x + 1;
  const int anchors_y = (img.height_px() - ty.length) / stride_y + 1;

  Grid<std::int64_t> rows(anchors_x, img.height_px());
  for (int y = 0; y < img.height_px(); ++y) {
    const auto src = img.pixels.row(y);
    auto dst = rows.row(y);
    for (int i = 0; i < anchors_x; ++i) {
      const int u = i * stride_x;
      std::int64_t sum = 0;
      for (std::size_t t = 0; t < tx.offset.size(); ++t)
        sum += std::int64_t(src[u + tx.offset[t]]) * tx.weight[t];
      dst[i] = sum;
    }
  }

  Grid<std::int64_t> scores(anchors_x, anchors_y);
  for (int j = 0; j < anchors_y; ++j) {
    const int v = j * stride_y;
    auto dst = scores.row(j);
    for (std::size_t t = 0; t < ty.offset.size(); ++t) {
      const auto src = rows.row(v + ty.offset[t]);
      const std::int64_t w = ty.weight[t];
      for (int i = 0; i < anchors_x; ++i) dst[i] += src[i] * w;
    }
  }
  return scores;
}

}  // namespace detail

// Separable cross-correlation of the image with the kernel ky(y) * kx(x):
// scores[v][u] = sum over (x, y) of img[v+y][u+x] * ky[y] * kx[x], evaluated
// as a row pass followed by a column pass.
inline ResponseMap correlate_separable(const MultiviewImage& img, const Kernel1D& kx,
                                       const Kernel1D& ky) {
  ResponseMap out;
  out.scores = detail::correlate_strided(img, kx, ky, 1, 1);
  out.plane = kx.plane == ky.plane ? kx.plane : 0;
  return out;
}

// Same arithmetic restricted to cell-grid anchors (u, v multiples of the
// pitch), where voxel patterns live.
inline Grid<std::int64_t> correlate_cell_anchors(const MultiviewImage& img, const Kernel1D& kx,
                                                 const Kernel1D& ky) {
  return detail::correlate_strided(img, kx, ky, img.cfg.cell_pitch, img.cfg.cell_pitch);
}

// All cell anchors whose plane-k pattern correlation reaches the given
// fraction of the full-scale peak. The comparison is exact: score >=
// fraction * threshold_value cross-multiplied in integers.
inline std::vector<Detection> detect_plane(const MultiviewImage& img, PlaneIndex k,
                                           Rational fraction = Rational(7, 10)) {
  if (fraction.num <= 0 || fraction.num > fraction.den)
    throw ArgumentError("detection fraction must be in (0, 1]");
  const Kernel1D f = raster_1d(k, img.cfg);
  const Grid<std::int64_t> scores = correlate_cell_anchors(img, f, f);
  const std::int64_t peak = threshold_value(img.cfg);
  std::vector<Detection> out;
  for (int cy = 0; cy < scores.height(); ++cy) {
    const auto row = scores.row(cy);
    for (int cx = 0; cx < scores.width(); ++cx)
      if (row[cx] * fraction.den >= fraction.num * peak)
        out.push_back({cx, cy, k.value(), row[cx]});
  }
  return out;
}

inline std::vector<std::pair<int, int>> make_depth_legend(int max_abs_plane) {
  if (max_abs_plane < 1) throw ArgumentError("legend needs at least one plane");
  const int count = 2 * max_abs_plane;
  std::vector<std::pair<int, int>> legend;
  legend.reserve(count);
  int idx = 0;
  for (int k = -max_abs_plane; k <= max_abs_plane; ++k) {
    if (k == 0) continue;
    legend.emplace_back(k, 1 + idx * 254 / (count - 1));
    ++idx;
  }
  return legend;
}

struct AnalysisResult {
  std::vector<Detection> detections;  // every above-threshold (cell, plane) hit
  VoxelSet voxels;                    // the detections as a voxel set
  DepthMap depth;                     // one plane per cell, best-score winner
  std::vector<int> planes_analyzed;   // ladder entries whose kernel fits the image
  std::vector<int> planes_skipped;    // ladder entries too large to score
};

// Runs detect_plane over the whole ladder +-1..+-max_abs_plane. Detections
// for different planes at the same cell all survive (a wireframe may thread
// several planes through one lateral cell); only the depth map, which holds
// a single value per cell, resolves conflicts: highest score wins, ties go
// to the larger |k|, then to the negative plane.
inline AnalysisResult detect_all(const MultiviewImage& img, Rational fraction = Rational(7, 10)) {
  const DisplayConfig& cfg = img.cfg;
  AnalysisResult out;
  for (int k = -cfg.max_abs_plane; k <= cfg.max_abs_plane; ++k) {
    if (k == 0) continue;
    const int side = (k < 0 ? -k : k) * cfg.cell_pitch;
    if (side > img.width_px() || side > img.height_px()) {
      out.planes_skipped.push_back(k);
      continue;
    }
    out.planes_analyzed.push_back(k);
    const auto hits = detect_plane(img, PlaneIndex(k), fraction);
    out.detections.insert(out.detections.end(), hits.begin(), hits.end());
  }

  out.voxels.cells_x = img.cells_x();
  out.voxels.cells_y = img.cells_y();
  for (const Detection& d : out.detections) out.voxels.voxels.insert({d.cx, d.cy, d.k});

  const auto preferred = [](const Detection& a, const Detection& b) {
    if (a.score != b.score) return a.score > b.score;
    const int ma = a.k < 0 ? -a.k : a.k;
    const int mb = b.k < 0 ? -b.k : b.k;
    if (ma != mb) return ma > mb;
    return a.k < b.k;
  };
  Grid<const Detection*> winner(img.cells_x(), img.cells_y(), nullptr);
  for (const Detection& d : out.detections) {
    const Detection*& slot = winner(d.cx, d.cy);
    if (slot == nullptr || preferred(d, *slot)) slot = &d;
  }

  out.depth.legend = make_depth_legend(cfg.max_abs_plane);
  out.depth.cells = Grid<std::uint8_t>(img.cells_x(), img.cells_y(), DepthMap::background);
  for (int cy = 0; cy < img.cells_y(); ++cy)
    for (int cx = 0; cx < img.cells_x(); ++cx)
      if (const Detection* d = winner(cx, cy)) {
        for (const auto& [plane, gray] : out.depth.legend)
          if (plane == d->k) out.depth.cells(cx, cy) = static_cast<std::uint8_t>(gray);
      }
  return out;
}

// Wavelet transform of the image at family index n: cross-correlation with
// the plane-n 2D wavelet at every pixel translation (the scale is fixed by
// n, the translation is continuous at pixel granularity).
inline ResponseMap cwt_plane(const MultiviewImage& img, PlaneIndex n) {
  const WaveletKernel1D w = wavelet_1d(n, img.cfg);
  ResponseMap out = correlate_separable(img, w, w);
  out.plane = n.value();
  return out;
}

struct PixelArgmax {
  int u = 0;
  int v = 0;
  std::int64_t score = 0;
};

// Position of the maximum response; ties resolve to the smallest (v, u).
inline PixelArgmax cwt_argmax(const ResponseMap& map) {
  if (map.scores.width() == 0 || map.scores.height() == 0)
    throw ArgumentError("empty response map");
  PixelArgmax best{0, 0, map.scores(0, 0)};
  for (int v = 0; v < map.scores.height(); ++v) {
    const auto row = map.scores.row(v);
    for (int u = 0; u < map.scores.width(); ++u)
      if (row[u] > best.score) best = {u, v, row[u]};
  }
  return best;
}

}  // namespace mvwave
