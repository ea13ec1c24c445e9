#pragma once

// Escape-time pictures of parameter slices and dynamical planes. Each pixel
// averages the colours of the two critical orbits.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mcmullen/dynamics.hpp"

namespace mcmullen {

struct Rgb8 {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb8&, const Rgb8&) = default;
};

/// Rectangle of the complex plane sampled at pixel centres; row 0 is the top
/// (largest imaginary part).
struct Viewport {
  double re_min, re_max, im_min, im_max;
  int width, height;

  Viewport(double re_min, double re_max, double im_min, double im_max, int width, int height);
  Complex pixel_center(int col, int row) const;
};

struct FixedC {
  Complex c;
};
struct FixedA {
  Complex a;
};
struct Diagonal {
  Complex t;
};
struct Dynamical {
  MapParams params;
};
using SliceSpec = std::variant<FixedC, FixedA, Diagonal, Dynamical>;

/// Throws DomainError for a = 0 in FixedA or t = 0 in Diagonal.
void validate_slice(const SliceSpec& slice);

struct RenderConfig {
  int max_iter = kRenderMaxIter;
  Rgb8 color_plus{255, 0, 0};
  Rgb8 color_minus{0, 0, 255};
  Rgb8 bounded_color{0, 0, 0};
  /// Worker threads; 0 uses every hardware thread. Never changes the output.
  int threads = 0;
};

struct Image {
  int width = 0;
  int height = 0;
  std::vector<Rgb8> pixels;

  Image() = default;
  Image(int w, int h);
  Rgb8& at(int col, int row) { return pixels[static_cast<std::size_t>(row) * width + col]; }
  const Rgb8& at(int col, int row) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
};

/// Colour of one point. For parameter slices `point` is the free parameter;
/// for Dynamical it is the starting point and n must match the map.
Rgb8 classify_pixel(int n, const SliceSpec& slice, Complex point, const RenderConfig& cfg);

Image render_slice(int n, const SliceSpec& slice, const Viewport& vp, const RenderConfig& cfg);

/// Recolours the nearest pixel of every in-view curve point.
Image draw_overlay(Image img, const Viewport& vp, const std::vector<Complex>& curve, Rgb8 color);

/// Binary P6 with maxval 255.
std::vector<std::uint8_t> encode_ppm(const Image& img);

/// Throws IoError when the file cannot be written.
void write_ppm(const std::string& path, const Image& img);

}  // namespace mcmullen
