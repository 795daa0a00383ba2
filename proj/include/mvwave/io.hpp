#pragma once

#include "mvwave/synth.hpp"

#include <filesystem>
#include <fstream>
#include <limits>

namespace mvwave {

// Binary 8-bit PGM writer. Header is exactly `P5\n<width> <height>\n255\n`
// followed by row-major pixel bytes, so identical grids produce identical
// files byte for byte.
inline void write_pgm(const Grid<std::uint8_t>& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open for writing: " + path.string());
  out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
  for (int y = 0; y < img.height(); ++y) {
    const auto row = img.row(y);
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }
  if (!out) throw FormatError("short write: " + path.string());
}

inline void write_pgm(const MultiviewImage& img, const std::filesystem::path& path) {
  write_pgm(img.pixels, path);
}

namespace detail {

// Reads one PNM header integer, skipping whitespace and `#` comments, and
// reports the byte offset of anything unexpected.
inline int read_pnm_int(std::istream& in, const std::string& name, const std::string& file) {
  for (;;) {
    const int c = in.peek();
    if (c == std::char_traits<char>::eof())
      throw FormatError(file + ": missing " + name + " at byte " + std::to_string(in.tellg()));
    if (c == '#') {
      in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
      continue;
    }
    if (std::isspace(c)) {
      in.get();
      continue;
    }
    break;
  }
  const auto offset = in.tellg();
  int value = 0;
  if (!(in >> value))
    throw FormatError(file + ": malformed " + name + " at byte " + std::to_string(offset));
  return value;
}

}  // namespace detail

inline Grid<std::uint8_t> read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open: " + path.string());
  const std::string file = path.string();

  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (in.gcount() != 2 || magic[0] != 'P' || magic[1] != '5')
    throw FormatError(file + ": not a binary PGM (expected magic P5 at byte 0)");

  const int width = detail::read_pnm_int(in, "width", file);
  const int height = detail::read_pnm_int(in, "height", file);
  const int maxval = detail::read_pnm_int(in, "maxval", file);
  if (width < 0 || height < 0) throw FormatError(file + ": negative image extent");
  if (maxval != 255)
    throw FormatError(file + ": unsupported maxval " + std::to_string(maxval) +
                      " (only 8-bit images with maxval 255 are handled)");
  if (in.get() == std::char_traits<char>::eof())
    throw FormatError(file + ": missing pixel data at byte " + std::to_string(in.tellg()));

  Grid<std::uint8_t> img(width, height);
  for (int y = 0; y < height; ++y) {
    auto row = img.row(y);
    in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row.size()));
    if (in.gcount() != static_cast<std::streamsize>(row.size())) {
      const std::int64_t expected = std::int64_t(width) * height;
      const std::int64_t got = std::int64_t(y) * width + in.gcount();
      throw FormatError(file + ": truncated pixel data at byte " + std::to_string(in.tellg()) +
                        " (expected " + std::to_string(expected) + " pixel bytes, got " +
                        std::to_string(got) + ")");
    }
  }
  return img;
}

// Reads a PGM as a multiview image under the given geometry: extents must be
// whole cells and every intensity must fit the configured gray-level range.
inline MultiviewImage read_multiview_pgm(const std::filesystem::path& path,
                                         const DisplayConfig& cfg) {
  MultiviewImage img{read_pgm(path), cfg};
  if (cfg.cell_pitch < 2) throw ConfigError("cell pitch must be at least 2 pixels");
  if (img.width_px() % cfg.cell_pitch != 0 || img.height_px() % cfg.cell_pitch != 0)
    throw ArgumentError(path.string() + ": extents " + std::to_string(img.width_px()) + "x" +
                        std::to_string(img.height_px()) + " are not whole cells of pitch " +
                        std::to_string(cfg.cell_pitch));
  if (cfg.gray_levels < 256)
    for (int y = 0; y < img.height_px(); ++y)
      for (const std::uint8_t px : img.pixels.row(y))
        if (px >= cfg.gray_levels)
          throw ArgumentError(path.string() + ": intensity " + std::to_string(px) +
                              " exceeds the configured " + std::to_string(cfg.gray_levels) +
                              " gray levels");
  return img;
}

// CSV export: one row per grid line, comma-separated exact integers.
template <typename T>
inline void write_csv(const Grid<T>& grid, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open for writing: " + path.string());
  for (int y = 0; y < grid.height(); ++y) {
    const auto row = grid.row(y);
    for (int x = 0; x < grid.width(); ++x) {
      if (x) out << ',';
      out << static_cast<std::int64_t>(row[x]);
    }
    out << '\n';
  }
  if (!out) throw FormatError("short write: " + path.string());
}

inline void write_csv(const std::vector<int>& row, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open for writing: " + path.string());
  for (std::size_t x = 0; x < row.size(); ++x) {
    if (x) out << ',';
    out << row[x];
  }
  out << '\n';
  if (!out) throw FormatError("short write: " + path.string());
}

struct PreviewScale {
  std::int64_t min = 0;
  std::int64_t max = 0;
};

// Min-max normalization of a score map to 8 bits for preview images; the
// applied scale is returned so the mapping can be recorded alongside.
// A flat map normalizes to all zeros.
inline std::pair<Grid<std::uint8_t>, PreviewScale> normalize_preview(
    const Grid<std::int64_t>& scores) {
  PreviewScale scale;
  if (!scores.empty()) {
    scale.min = scale.max = scores(0, 0);
    for (int y = 0; y < scores.height(); ++y)
      for (const std::int64_t s : scores.row(y)) {
        scale.min = std::min(scale.min, s);
        scale.max = std::max(scale.max, s);
      }
  }
  Grid<std::uint8_t> img(scores.width(), scores.height());
  const std::int64_t span = scale.max - scale.min;
  if (span > 0)
    for (int y = 0; y < scores.height(); ++y) {
      const auto src = scores.row(y);
      auto dst = img.row(y);
      for (int x = 0; x < scores.width(); ++x)
        dst[x] = static_cast<std::uint8_t>((src[x] - scale.min) * 255 / span);
    }
  return {std::move(img), scale};
}

}  // namespace mvwave
