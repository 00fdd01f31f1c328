#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cdva {

enum class Colorspace : std::uint8_t { RGB = 0, YCbCr = 1 };

std::string to_string(Colorspace cs);
Colorspace colorspace_from_string(const std::string& s);

// One decoded video frame: three full-resolution 8-bit planes in the
// colorspace declared by the manifest. Minimum size 64x64.
struct Frame {
  std::uint32_t index = 0;
  double timestamp_s = 0.0;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  Colorspace colorspace = Colorspace::RGB;
  std::array<std::vector<std::uint8_t>, 3> planes;

  std::uint8_t at(int plane, std::uint32_t x, std::uint32_t y) const {
    return planes[plane][static_cast<std::size_t>(y) * width + x];
  }
  std::uint8_t& at(int plane, std::uint32_t x, std::uint32_t y) {
    return planes[plane][static_cast<std::size_t>(y) * width + x];
  }

  // Luma plane as floats in [0,1]. For RGB uses BT.601 weights, for YCbCr
  // plane 0 is already luma.
  std::vector<float> luma() const;

  // Lossless right-angle rotation, quarter_turns in {0,1,2,3} (CCW).
  Frame rotated90(int quarter_turns) const;
};

constexpr int kHistogramBins = 64;

// Per-channel 64-bin sample histogram, each channel L1-normalized.
struct ColorHistogram {
  std::array<float, 3 * kHistogramBins> bins{};
};

ColorHistogram color_histogram(const Frame& frame);

// Histogram intersection distance: 1 - mean over channels of the bin-wise
// minimum sum. Symmetric, in [0,1], 0 iff identical.
double histogram_distance(const ColorHistogram& a, const ColorHistogram& b);

}  // namespace cdva
