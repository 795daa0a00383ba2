#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvwave {

inline constexpr const char* kVersion = "0.1.0";

// Error taxonomy. The CLI maps each class to a distinct exit code:
// argument 2, format 3, configuration 4, anything else 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Display geometry that cannot be rasterized exactly (pitch/plane
// divisibility, unsupported pulse widths).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Plane index outside the supported ladder, or the excluded plane 0.
class InvalidPlaneError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

// Exact rational value. Normalized: den > 0, gcd(|num|, den) == 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw ArgumentError("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;

  // Parses a plain decimal such as "0.7" or "-1.25".
  static Rational from_decimal(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
    std::int64_t num = 0;
    std::int64_t den = 1;
    int digits = 0;
    bool in_fraction = false;
    for (; i < text.size(); ++i) {
      if (text[i] == '.' && !in_fraction) {
        in_fraction = true;
        continue;
      }
      if (text[i] < '0' || text[i] > '9') throw ArgumentError("not a decimal number: " + text);
      if (++digits > 18) throw ArgumentError("decimal too long: " + text);
      num = num * 10 + (text[i] - '0');
      if (in_fraction) den *= 10;
    }
    if (digits == 0) throw ArgumentError("not a decimal number: " + text);
    return Rational(negative ? -num : num, den);
  }
};

// Global display geometry contract: pixels per elemental-image cell, the
// gray-level count, and the largest |plane| the kernel builders accept.
// Validation happens where kernels are built, so configs that are only
// used for threshold arithmetic stay unconstrained.
struct DisplayConfig {
  int cell_pitch = 60;
  int gray_levels = 256;
  int max_abs_plane = 6;
};

// Signed depth-plane index. Plane 0 (the screen plane) has no pattern and
// is rejected outright. The sign is a display convention: patterns that are
// positive for a barrier display become negative for a lenticular one.
class PlaneIndex {
 public:
  explicit PlaneIndex(int k) : k_(k) {
    if (k == 0) throw InvalidPlaneError("plane index 0 has no pattern");
  }

  int value() const { return k_; }
  int magnitude() const { return k_ < 0 ? -k_ : k_; }

  friend bool operator==(PlaneIndex, PlaneIndex) = default;

 private:
  int k_;
};

// Row-major 2D array indexed as (x, y).
template <typename T>
class Grid {
 public:
  Grid() = default;

  Grid(int width, int height, T fill = T{}) {
    if (width < 0 || height < 0) throw ArgumentError("grid extents must be non-negative");
    width_ = width;
    height_ = height;
    cells_.assign(static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_), fill);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return cells_.empty(); }

  T& operator()(int x, int y) {
    assert(x >= 0 && x < width_ && y >= 0 && y < height_);
    return cells_[static_cast<std::size_t>(y) * width_ + x];
  }

  const T& operator()(int x, int y) const {
    assert(x >= 0 && x < width_ && y >= 0 && y < height_);
    return cells_[static_cast<std::size_t>(y) * width_ + x];
  }

  std::span<T> row(int y) {
    assert(y >= 0 && y < height_);
    return {cells_.data() + static_cast<std::size_t>(y) * width_, static_cast<std::size_t>(width_)};
  }

  std::span<const T> row(int y) const {
    assert(y >= 0 && y < height_);
    return {cells_.data() + static_cast<std::size_t>(y) * width_, static_cast<std::size_t>(width_)};
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> cells_;
};

}  // namespace mvwave
