#include "mvwave/wavelet.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mvwave;

namespace {
const DisplayConfig kDefault{};
}

TEST_CASE("mother Haar wavelet") {
  CHECK(haar_mother(2).values == std::vector<int>{1, -1});

  const Kernel1D h = haar_mother(60);
  REQUIRE(h.values.size() == 60);
  for (int x = 0; x < 60; ++x) CHECK(h.values[x] == (x < 30 ? 1 : -1));
  CHECK(admissibility(h) == 0);

  CHECK_THROWS_AS(haar_mother(15), ConfigError);
  CHECK_THROWS_AS(haar_mother(0), ConfigError);
  CHECK_THROWS_AS(haar_mother(1), ConfigError);
}

TEST_CASE("1D multiview wavelets") {
  SECTION("k = 1 reduces to the plain Haar wavelet over one cell") {
    CHECK(wavelet_1d(PlaneIndex(1), kDefault).values == haar_mother(60).values);
    CHECK(wavelet_1d(PlaneIndex(-1), kDefault).values == haar_mother(60).values);
  }

  SECTION("k = 2 splits each pulse in place") {
    const WaveletKernel1D w = wavelet_1d(PlaneIndex(2), kDefault);
    REQUIRE(w.values.size() == 120);
    for (int x = 0; x < 120; ++x) {
      int expected = 0;
      if ((x >= 0 && x < 15) || (x >= 90 && x < 105)) expected = 1;
      if ((x >= 15 && x < 30) || (x >= 105 && x < 120)) expected = -1;
      CAPTURE(x);
      CHECK(w.values[x] == expected);
    }
  }

  SECTION("odd pulse width gets a zero centre sample (w = 15 -> 7/1/7)") {
    const WaveletKernel1D w = wavelet_1d(PlaneIndex(4), kDefault);
    const Kernel1D f = raster_1d(PlaneIndex(4), kDefault);
    REQUIRE(w.values.size() == 240);
    for (const auto& pulse : pulse_layout(PlaneIndex(4), kDefault)) {
      const int start = pulse.cell_offset * 60 + pulse.left_edge;
      REQUIRE(pulse.width == 15);
      for (int x = 0; x < 7; ++x) CHECK(w.values[start + x] == 1);
      CHECK(w.values[start + 7] == 0);
      for (int x = 8; x < 15; ++x) CHECK(w.values[start + x] == -1);
    }
    // support stays inside the reference pattern, minus the centre holes
    for (std::size_t x = 0; x < w.values.size(); ++x)
      if (w.values[x] != 0) REQUIRE(f.values[x] == 1);
  }

  SECTION("zero mean for every plane, both signs") {
    for (int k = -6; k <= 6; ++k) {
      if (k == 0) continue;
      CAPTURE(k);
      CHECK(admissibility(wavelet_1d(PlaneIndex(k), kDefault)) == 0);
    }
  }

  SECTION("support matches the reference raster exactly when pulses split evenly") {
    for (int k : {-6, -5, -3, -2, -1, 1, 2, 3, 5, 6}) {
      CAPTURE(k);
      const WaveletKernel1D w = wavelet_1d(PlaneIndex(k), kDefault);
      const Kernel1D f = raster_1d(PlaneIndex(k), kDefault);
      for (std::size_t x = 0; x < w.values.size(); ++x)
        REQUIRE((w.values[x] != 0) == (f.values[x] == 1));
    }
  }

  SECTION("two-scale form: difference of half-width pulse rasters") {
    for (int k : {-6, -5, -3, -2, -1, 1, 2, 3, 5, 6}) {
      CAPTURE(k);
      const WaveletKernel1D w = wavelet_1d(PlaneIndex(k), kDefault);
      std::vector<int> combined(w.values.size(), 0);
      for (const auto& pulse : pulse_layout(PlaneIndex(k), kDefault)) {
        const int start = pulse.cell_offset * 60 + pulse.left_edge;
        const int half = pulse.width / 2;
        for (int x = 0; x < half; ++x) {
          combined[start + x] += 1;         // half-width pulse at the pulse position
          combined[start + half + x] -= 1;  // minus its copy shifted by half a width
        }
      }
      CHECK(w.values == combined);
    }
  }
}

TEST_CASE("2D multiview wavelets") {
  SECTION("k = 1 sign pattern") {
    const WaveletKernel2D w = wavelet_2d(PlaneIndex(1), kDefault);
    CHECK(w.values(0, 0) == 1);
    CHECK(w.values(30, 0) == -1);
    CHECK(w.values(0, 30) == -1);
    CHECK(w.values(30, 30) == 1);
  }

  SECTION("zero mean for every plane") {
    for (int k = -6; k <= 6; ++k) {
      if (k == 0) continue;
      CAPTURE(k);
      CHECK(admissibility(wavelet_2d(PlaneIndex(k), kDefault)) == 0);
    }
  }

  SECTION("k = 2 support equals the 2D reference support") {
    const WaveletKernel2D w = wavelet_2d(PlaneIndex(2), kDefault);
    const Kernel2D f = raster_2d(PlaneIndex(2), kDefault);
    for (int y = 0; y < 120; ++y)
      for (int x = 0; x < 120; ++x) REQUIRE((w.values(x, y) != 0) == (f.values(x, y) == 1));
  }
}

TEST_CASE("admissibility is the exact sample sum") {
  CHECK(admissibility(wavelet_1d(PlaneIndex(3), kDefault)) == 0);
  CHECK(admissibility(haar_mother(60)) == 0);

  WaveletKernel1D corrupted = wavelet_1d(PlaneIndex(3), kDefault);
  const auto first_positive = std::find(corrupted.values.begin(), corrupted.values.end(), 1);
  REQUIRE(first_positive != corrupted.values.end());
  *first_positive = -1;
  CHECK(admissibility(corrupted) == -2);
}
