#include "mcmullen/render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "mcmullen/error.hpp"
#include "mcmullen/parallel.hpp"
#include "mcmullen/simd/kernels.hpp"

namespace mcmullen {

Viewport::Viewport(double re_lo, double re_hi, double im_lo, double im_hi, int w, int h)
    : re_min(re_lo), re_max(re_hi), im_min(im_lo), im_max(im_hi), width(w), height(h) {
  if (!(re_min < re_max) || !(im_min < im_max)) throw DomainError("viewport bounds must be increasing");
  if (width < 1 || height < 1) throw DomainError("viewport size must be at least 1x1");
}

Complex Viewport::pixel_center(int col, int row) const {
  return {re_min + (col + 0.5) * (re_max - re_min) / width,
          im_max - (row + 0.5) * (im_max - im_min) / height};
}

Image::Image(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h) {
  if (w < 0 || h < 0) throw DomainError("image size must be non-negative");
}

void validate_slice(const SliceSpec& slice) {
  if (auto* fa = std::get_if<FixedA>(&slice); fa && std::abs(fa->a) == 0.0)
    throw DomainError("FixedA slice needs a != 0");
  if (auto* d = std::get_if<Diagonal>(&slice); d && std::abs(d->t) == 0.0)
    throw DomainError("Diagonal slice needs t != 0");
}

namespace {

struct Lanes {
  std::vector<double> zr, zi, ar, ai, cr, ci, thr;
  std::vector<std::int32_t> iters;
  std::vector<std::uint8_t> esc;
  std::vector<double> fin;

  void push(Complex z, Complex a, Complex c, double threshold) {
    zr.push_back(z.real());
    zi.push_back(z.imag());
    ar.push_back(a.real());
    ai.push_back(a.imag());
    cr.push_back(c.real());
    ci.push_back(c.imag());
    thr.push_back(threshold * threshold);
  }
  void run(int n, int max_iter) {
    const std::size_t m = zr.size();
    iters.assign(m, 0);
    esc.assign(m, 0);
    fin.assign(m, 0.0);
    simd::escape_orbits(n, max_iter, {zr, zi, ar, ai, cr, ci, thr}, {iters, esc, fin});
  }
};

// Parameters (a, c) of the map at a parameter-slice point; false for a = 0.
bool resolve(const SliceSpec& slice, Complex point, Complex& a, Complex& c) {
  if (auto* fc = std::get_if<FixedC>(&slice)) {
    a = point;
    c = fc->c;
  } else if (auto* fa = std::get_if<FixedA>(&slice)) {
    a = fa->a;
    c = point;
  } else {
    const Complex t = std::get<Diagonal>(slice).t;
    a = point;
    c = t * point;
  }
  return a != Complex(0.0);
}

void push_parameter_pixel(Lanes& lanes, int n, Complex a, Complex c) {
  const MapParams p(n, a, c);
  const CriticalValues cv = critical_values(p);
  const double s = escape_radius(p);
  lanes.push(cv.v_plus, a, c, s);
  lanes.push(cv.v_minus, a, c, s);
}

// Linear shading by escape time.
double channel_of(std::uint8_t base, std::uint8_t bounded, bool escaped, int m, int max_iter) {
  return escaped ? base * (static_cast<double>(m) / max_iter) : bounded;
}

std::uint8_t to_byte(double x) {
  double r = std::round(x);
  return static_cast<std::uint8_t>(r < 0 ? 0 : (r > 255 ? 255 : r));
}

// An escaped pixel may round to the bounded colour; bump the escaping orbit's
// strongest channel by one so bounded_color stays reserved for bounded pixels.
Rgb8 keep_distinct(Rgb8 px, const Rgb8& bounded, const Rgb8& hint) {
  if (!(px == bounded)) return px;
  std::uint8_t* ch[3] = {&px.r, &px.g, &px.b};
  const std::uint8_t base[3] = {hint.r, hint.g, hint.b};
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (base[i] > base[best]) best = i;
  }
  *ch[best] = *ch[best] < 255 ? *ch[best] + 1 : *ch[best] - 1;
  return px;
}

Rgb8 combine(const RenderConfig& cfg, bool esc_p, int m_p, bool esc_m, int m_m) {
  if (!esc_p && !esc_m) return cfg.bounded_color;
  const std::uint8_t bp[3] = {cfg.color_plus.r, cfg.color_plus.g, cfg.color_plus.b};
  const std::uint8_t bm[3] = {cfg.color_minus.r, cfg.color_minus.g, cfg.color_minus.b};
  const std::uint8_t bb[3] = {cfg.bounded_color.r, cfg.bounded_color.g, cfg.bounded_color.b};
  std::uint8_t out[3];
  for (int i = 0; i < 3; ++i) {
    const double x = channel_of(bp[i], bb[i], esc_p, m_p, cfg.max_iter);
    const double y = channel_of(bm[i], bb[i], esc_m, m_m, cfg.max_iter);
    out[i] = to_byte((x + y) / 2.0);
  }
  return keep_distinct({out[0], out[1], out[2]}, cfg.bounded_color,
                       esc_p ? cfg.color_plus : cfg.color_minus);
}

Rgb8 gray(const RenderConfig& cfg, bool escaped, int m) {
  if (!escaped) return cfg.bounded_color;
  const std::uint8_t g = to_byte(255.0 * m / cfg.max_iter);
  return keep_distinct({g, g, g}, cfg.bounded_color, {255, 255, 255});
}

void check_config(int n, const SliceSpec& slice, const RenderConfig& cfg) {
  if (cfg.max_iter < 1) throw DomainError("max_iter must be >= 1");
  validate_slice(slice);
  if (auto* d = std::get_if<Dynamical>(&slice); d && d->params.n() != n)
    throw DomainError("dynamical slice degree does not match n");
  if (n < 3) throw DomainError("n must be >= 3");
}

// Colours one row of points; parameter points with a = 0 get bounded_color.
void classify_points(int n, const SliceSpec& slice, const std::vector<Complex>& pts,
                     const RenderConfig& cfg, Rgb8* out) {
  Lanes lanes;
  if (auto* d = std::get_if<Dynamical>(&slice)) {
    const MapParams& p = d->params;
    const double s = escape_radius(p);
    for (const Complex& z : pts) lanes.push(z, p.a(), p.c(), s);
    lanes.run(n, cfg.max_iter);
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = gray(cfg, lanes.esc[i], lanes.iters[i]);
    return;
  }
  std::vector<std::ptrdiff_t> lane_of(pts.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Complex a, c;
    if (!resolve(slice, pts[i], a, c)) continue;
    lane_of[i] = static_cast<std::ptrdiff_t>(lanes.zr.size());
    push_parameter_pixel(lanes, n, a, c);
  }
  lanes.run(n, cfg.max_iter);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::ptrdiff_t l = lane_of[i];
    if (l < 0) {
      out[i] = cfg.bounded_color;
      continue;
    }
    out[i] = combine(cfg, lanes.esc[l], lanes.iters[l], lanes.esc[l + 1], lanes.iters[l + 1]);
  }
}

}  // namespace

Rgb8 classify_pixel(int n, const SliceSpec& slice, Complex point, const RenderConfig& cfg) {
  check_config(n, slice, cfg);
  Rgb8 px;
  classify_points(n, slice, {point}, cfg, &px);
  return px;
}

Image render_slice(int n, const SliceSpec& slice, const Viewport& vp, const RenderConfig& cfg) {
  check_config(n, slice, cfg);
  Image img(vp.width, vp.height);
  parallel_for(static_cast<std::size_t>(vp.height), cfg.threads, [&](std::size_t b, std::size_t e) {
    std::vector<Complex> pts(vp.width);
    for (std::size_t row = b; row < e; ++row) {
      for (int col = 0; col < vp.width; ++col) pts[col] = vp.pixel_center(col, static_cast<int>(row));
      classify_points(n, slice, pts, cfg, &img.at(0, static_cast<int>(row)));
    }
  });
  return img;
}

Image draw_overlay(Image img, const Viewport& vp, const std::vector<Complex>& curve, Rgb8 color) {
  if (img.width != vp.width || img.height != vp.height) throw DomainError("overlay viewport does not match image");
  for (const Complex& z : curve) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("overlay point is not finite");
    const double fx = (z.real() - vp.re_min) / (vp.re_max - vp.re_min) * vp.width;
    const double fy = (vp.im_max - z.imag()) / (vp.im_max - vp.im_min) * vp.height;
    if (fx < 0 || fy < 0 || fx >= vp.width || fy >= vp.height) continue;
    img.at(static_cast<int>(fx), static_cast<int>(fy)) = color;
  }
  return img;
}

std::vector<std::uint8_t> encode_ppm(const Image& img) {
  if (img.width < 0 || img.height < 0 ||
      img.pixels.size() != static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height)) {
    throw DomainError("image pixel count does not match width * height");
  }
  const std::string header = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.reserve(header.size() + 3 * img.pixels.size());
  for (const Rgb8& p : img.pixels) {
    bytes.push_back(p.r);
    bytes.push_back(p.g);
    bytes.push_back(p.b);
  }
  return bytes;
}

void write_ppm(const std::string& path, const Image& img) {
  const std::vector<std::uint8_t> bytes = encode_ppm(img);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw IoError("failed writing " + path);
}

}  // namespace mcmullen
