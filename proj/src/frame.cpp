#include "cdva/frame.hpp"

#include <algorithm>

#include "cdva/errors.hpp"

namespace cdva {

std::string to_string(Colorspace cs) { return cs == Colorspace::RGB ? "RGB" : "YCbCr"; }

Colorspace colorspace_from_string(const std::string& s) {
  if (s == "RGB") return Colorspace::RGB;
  if (s == "YCbCr") return Colorspace::YCbCr;
  throw InvalidConfig("unknown colorspace: " + s);
}

std::vector<float> Frame::luma() const {
  std::vector<float> out(static_cast<std::size_t>(width) * height);
  const std::size_t n = out.size();
  if (colorspace == Colorspace::YCbCr) {
    for (std::size_t i = 0; i < n; ++i) out[i] = planes[0][i] * (1.0f / 255.0f);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = (0.299f * planes[0][i] + 0.587f * planes[1][i] + 0.114f * planes[2][i]) *
               (1.0f / 255.0f);
    }
  }
  return out;
}

Frame Frame::rotated90(int quarter_turns) const {
  int q = ((quarter_turns % 4) + 4) % 4;
  if (q == 0) return *this;
  Frame out;
  out.index = index;
  out.timestamp_s = timestamp_s;
  out.colorspace = colorspace;
  bool swap = (q == 1 || q == 3);
  out.width = swap ? height : width;
  out.height = swap ? width : height;
  for (int p = 0; p < 3; ++p) {
    out.planes[p].resize(planes[p].size());
    for (std::uint32_t y = 0; y < height; ++y) {
      for (std::uint32_t x = 0; x < width; ++x) {
        std::uint32_t nx, ny;
        switch (q) {
          case 1: nx = y; ny = width - 1 - x; break;           // 90 CCW
          case 2: nx = width - 1 - x; ny = height - 1 - y; break;
          default: nx = height - 1 - y; ny = x; break;         // 270 CCW
        }
        out.planes[p][static_cast<std::size_t>(ny) * out.width + nx] = at(p, x, y);
      }
    }
  }
  return out;
}

ColorHistogram color_histogram(const Frame& frame) {
  ColorHistogram h;
  const std::size_t n = static_cast<std::size_t>(frame.width) * frame.height;
  for (int p = 0; p < 3; ++p) {
    float* bins = h.bins.data() + p * kHistogramBins;
    for (std::size_t i = 0; i < n; ++i) bins[frame.planes[p][i] >> 2] += 1.0f;
    const float inv = 1.0f / static_cast<float>(n);
    for (int b = 0; b < kHistogramBins; ++b) bins[b] *= inv;
  }
  return h;
}

double histogram_distance(const ColorHistogram& a, const ColorHistogram& b) {
  double inter = 0.0;
  for (std::size_t i = 0; i < a.bins.size(); ++i) inter += std::min(a.bins[i], b.bins[i]);
  double d = 1.0 - inter / 3.0;
  return std::clamp(d, 0.0, 1.0);
}

}  // namespace cdva
