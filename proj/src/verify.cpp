#include "mcmullen/verify.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <limits>

#include "mcmullen/error.hpp"
#include "mcmullen/parallel.hpp"
#include "mcmullen/simd/kernels.hpp"
#include "mcmullen/spine.hpp"

namespace mcmullen {

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

namespace {

std::string fmt_real(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string map_params_text(const MapParams& p) {
  return "n=" + std::to_string(p.n()) + ";a=" + format_complex(p.a()) + ";c=" + format_complex(p.c());
}

HalfSign parity_half(int k) { return k % 2 == 0 ? HalfSign::Plus : HalfSign::Minus; }

void finish(VerificationReport& r) {
  r.pass = r.failures == 0;
  if (!std::isfinite(r.worst_margin)) r.worst_margin = r.worst_margin > 0 ? DBL_MAX : -DBL_MAX;
}

// Margin of an escape decision relative to the threshold.
double escape_margin(double norm2, double threshold) {
  double m = (std::sqrt(norm2) - threshold) / threshold;
  if (std::isnan(m) || m > DBL_MAX) return DBL_MAX;
  return m;
}

}  // namespace

std::string report_csv_row(const VerificationReport& r) {
  return r.check_name + "," + r.params + "," + std::to_string(r.samples) + "," +
         std::to_string(r.failures) + "," + fmt_real(r.worst_margin) + "," +
         (r.pass ? "true" : "false");
}

VerificationReport verify_image_ellipse(const MapParams& p, int k, int samples) {
  return verify_image_ellipse(p, k, samples, ellipse_spec(p, HalfSign::Full));
}

VerificationReport verify_image_ellipse(const MapParams& p, int k, int samples,
                                        const HalfEllipseSpec& ellipse) {
  if (samples < 16) throw DomainError("verify_image_ellipse: samples must be >= 16");
  const PolarRect rect = u_prime_rect(p, k);
  const double half = static_cast<int>(parity_half(k));
  const double A = ellipse.semi_major;
  const double B = ellipse.semi_minor;

  VerificationReport r;
  r.check_name = "image-ellipse";
  r.params = map_params_text(p) + ";k=" + std::to_string(k);
  r.detail_name = "max_deviation";
  double worst = 0.0;

  const double lo = rect.arg_center - rect.arg_halfwidth;
  const double hi = rect.arg_center + rect.arg_halfwidth;
  for (int piece = 0; piece < 4; ++piece) {
    for (int i = 0; i < samples; ++i) {
      const double s = static_cast<double>(i) / (samples - 1);
      Complex z;
      bool arc = piece % 2 == 0;
      if (piece == 0) z = std::polar(rect.r_outer, lo + s * (hi - lo));
      if (piece == 1) z = std::polar(rect.r_inner + s * (rect.r_outer - rect.r_inner), hi);
      if (piece == 2) z = std::polar(rect.r_inner, lo + s * (hi - lo));
      if (piece == 3) z = std::polar(rect.r_inner + s * (rect.r_outer - rect.r_inner), lo);
      const Complex q = ellipse_frame(ellipse, eval_map(p, z));
      double dev;
      if (arc) {
        dev = std::abs(std::hypot(q.real() / A, q.imag() / B) - 1.0);
      } else {
        dev = (std::abs(q.real()) + std::max(0.0, std::abs(q.imag()) - B)) / A;
      }
      dev = std::max(dev, std::max(0.0, -q.real() * half) / A);
      if (!(dev <= kImageTolerance)) ++r.failures;
      if (std::isnan(dev)) dev = DBL_MAX;
      worst = std::max(worst, dev);
      ++r.samples;
    }
  }
  r.detail = worst;
  r.worst_margin = kImageTolerance - worst;
  finish(r);
  return r;
}

VerificationReport verify_containment(const MapParams& p, int k, int samples) {
  if (samples < 16) throw DomainError("verify_containment: samples must be >= 16");
  const PolarRect rect = u_prime_rect(p, k);
  const HalfEllipseSpec target = ellipse_spec(p, parity_half(k));

  std::vector<Complex> pts = polar_boundary(rect, std::max(4, samples / 4));
  const int g = std::max(4, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(samples)))));
  for (int i = 0; i < g; ++i) {
    const double r = rect.r_inner + (i + 0.5) / g * (rect.r_outer - rect.r_inner);
    for (int j = 0; j < g; ++j) {
      const double th = rect.arg_center - rect.arg_halfwidth + (j + 0.5) / g * 2.0 * rect.arg_halfwidth;
      pts.push_back(std::polar(r, th));
    }
  }

  VerificationReport r;
  r.check_name = "containment";
  r.params = map_params_text(p) + ";k=" + std::to_string(k);
  r.worst_margin = std::numeric_limits<double>::infinity();
  for (const Complex& z : pts) {
    if (!half_ellipse_contains(target, z)) ++r.failures;
    r.worst_margin = std::min(r.worst_margin, half_ellipse_margin(target, z));
    ++r.samples;
  }
  r.detail_name = "min_margin";
  r.detail = r.worst_margin;
  finish(r);
  return r;
}

double winding_turns(std::span<const Complex> values, std::span<const Complex> centers) {
  if (values.size() != centers.size()) throw DomainError("winding_turns: length mismatch");
  if (values.empty()) return 0.0;
  const std::size_t m = values.size();
  double total = 0.0;
  double prev = principal_arg(values[0] - centers[0]);
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t idx = i % m;
    const double cur = principal_arg(values[idx] - centers[idx]);
    const double inc = wrap_angle(cur - prev);
    if (!(std::abs(inc) < kPi / 2)) {
      throw UnderSamplingError("argument jumped by " + std::to_string(inc) +
                               " between samples; use more samples");
    }
    total += inc;
    prev = cur;
  }
  return total / kTwoPi;
}

VerificationReport verify_winding(const WRegionSpec& w, int boundary_samples) {
  if (boundary_samples < 256) throw DomainError("verify_winding: boundary_samples must be >= 256");
  const std::vector<Complex> path = polar_boundary(v_rect(w), boundary_samples / 4);

  VerificationReport r;
  r.check_name = "winding";
  r.params = "n=" + std::to_string(w.n) + ";c=" + format_complex(w.c) + ";j=" + std::to_string(w.j) +
             ";a_j=" + format_complex(w.a_j) + ";k=" + std::to_string(w.k);
  r.worst_margin = std::numeric_limits<double>::infinity();

  std::vector<Complex> values, centers;
  values.reserve(path.size());
  centers.reserve(path.size());
  for (const Complex& z : path) {
    const Complex a = pullback_to_parameter(w.c, z);
    const MapParams p(w.n, a, w.c);
    const int k = principal_index(w, a);
    const Complex v = tracked_critical_value(w, a);
    if (std::abs(v - z) > 1e-9 * (1.0 + std::abs(z))) {
      throw InconsistencyError("tracked critical value left the pulled-back boundary");
    }
    const Complex xi = critical_point(p, k, p.psi());
    values.push_back(v);
    centers.push_back(xi);

    const HalfEllipseSpec u = ellipse_spec(p, parity_half(k));
    const PolarRect u_prime = u_prime_rect(p, k);
    const bool in_u = half_ellipse_contains(u, v);
    const bool in_u_prime = polar_contains(u_prime, v);
    double margin;
    if (!in_u) {
      margin = half_ellipse_margin(u, v);
    } else if (in_u_prime) {
      margin = -polar_boundary_distance(u_prime, v);
    } else {
      margin = std::min(half_ellipse_margin(u, v), polar_boundary_distance(u_prime, v));
    }
    if (!in_u || in_u_prime) ++r.failures;
    r.worst_margin = std::min(r.worst_margin, margin);
    ++r.samples;
  }

  const double turns = winding_turns(values, centers);
  const long long rounded = std::llround(turns);
  if (std::abs(turns - rounded) >= 0.01) {
    throw UnderSamplingError("winding total is not close to an integer");
  }
  r.winding = rounded;
  r.detail_name = "winding";
  r.detail = turns;
  if (rounded != 1) ++r.failures;
  finish(r);
  return r;
}

VerificationReport verify_annulus_escape(const MapParams& p, int grid, int max_iter, int threads) {
  if (grid < 8) throw DomainError("verify_annulus_escape: grid must be >= 8");
  if (max_iter < 1) throw DomainError("verify_annulus_escape: max_iter must be >= 1");
  const double s = escape_radius(p);
  const double t_in = inner_radius(p);
  const int inner_rows = grid / 2;
  const int outer_rows = grid - inner_rows;

  const std::size_t count = static_cast<std::size_t>(grid) * grid;
  std::vector<double> zr(count), zi(count), ar(count, p.a().real()), ai(count, p.a().imag()),
      cr(count, p.c().real()), ci(count, p.c().imag()), thr(count, s * s);
  for (int i = 0; i < grid; ++i) {
    double radius;
    if (i < inner_rows) {
      radius = t_in * (1.0 - kBoundaryDilation) * (i + 0.5) / inner_rows;
    } else {
      const int m = i - inner_rows;
      radius = s * (1.0 + kBoundaryDilation) * (1.0 + 3.0 * m / std::max(1, outer_rows - 1));
    }
    for (int j = 0; j < grid; ++j) {
      const Complex z = std::polar(radius, kTwoPi * (j + 0.5) / grid);
      zr[i * grid + j] = z.real();
      zi[i * grid + j] = z.imag();
    }
  }
  std::vector<std::int32_t> iters(count);
  std::vector<std::uint8_t> esc(count);
  std::vector<double> fin(count);
  parallel_for(count, threads, [&](std::size_t b, std::size_t e) {
    const std::size_t len = e - b;
    simd::OrbitBatch in{{zr.data() + b, len}, {zi.data() + b, len}, {ar.data() + b, len},
                        {ai.data() + b, len}, {cr.data() + b, len}, {ci.data() + b, len},
                        {thr.data() + b, len}};
    simd::OrbitOutput out{{iters.data() + b, len}, {esc.data() + b, len}, {fin.data() + b, len}};
    simd::escape_orbits(p.n(), max_iter, in, out);
  });

  VerificationReport r;
  r.check_name = "annulus";
  r.params = map_params_text(p) + ";grid=" + std::to_string(grid) + ";max_iter=" + std::to_string(max_iter);
  r.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count; ++i) {
    if (!esc[i]) ++r.failures;
    r.worst_margin = std::min(r.worst_margin, escape_margin(fin[i], s));
  }
  r.samples = static_cast<long long>(count);
  r.detail_name = "worst_relative_excess";
  r.detail = r.worst_margin;
  finish(r);
  return r;
}

VerificationReport verify_spine_locus(int n, Complex t, double eps, int grid, int max_iter, int threads) {
  if (n < 3) throw DomainError("verify_spine_locus: n must be >= 3");
  if (!(eps > 0.0)) throw DomainError("verify_spine_locus: eps must be positive");
  if (grid < 32) throw DomainError("verify_spine_locus: grid must be >= 32");
  if (max_iter < 1) throw DomainError("verify_spine_locus: max_iter must be >= 1");
  const SpineSpec spec(t);
  const SpineRadii radii = spine_radii(t);
  const double r_lo = std::max(0.0, radii.l - eps);
  const double r_hi = radii.u + eps;

  std::vector<double> qr, qi;
  for (int row = 0; row < grid; ++row) {
    const double y = r_hi - (row + 0.5) * 2.0 * r_hi / grid;
    for (int col = 0; col < grid; ++col) {
      const double x = -r_hi + (col + 0.5) * 2.0 * r_hi / grid;
      const double m = std::hypot(x, y);
      if (m > r_lo && m < r_hi && m > 0.0) {
        qr.push_back(x);
        qi.push_back(y);
      }
    }
  }
  const std::size_t count = qr.size();
  const SpineCloud cloud = spine_cloud(spec);
  std::vector<double> d2(count);
  parallel_for(count, threads, [&](std::size_t b, std::size_t e) {
    simd::min_distance2(cloud.re, cloud.im, {qr.data() + b, e - b}, {qi.data() + b, e - b},
                        {d2.data() + b, e - b});
  });

  // Two lanes per candidate: the orbits of v_plus and v_minus.
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < count; ++i) {
    if (std::sqrt(d2[i]) > eps) cand.push_back(i);
  }
  const std::size_t lanes = 2 * cand.size();
  std::vector<double> zr(lanes), zi(lanes), ar(lanes), ai(lanes), cr(lanes), ci(lanes), thr(lanes);
  for (std::size_t m = 0; m < cand.size(); ++m) {
    const Complex a(qr[cand[m]], qi[cand[m]]);
    const MapParams p(n, a, t * a);
    const CriticalValues cv = critical_values(p);
    const double s = escape_radius(p);
    for (int b = 0; b < 2; ++b) {
      const std::size_t l = 2 * m + b;
      const Complex z = b == 0 ? cv.v_plus : cv.v_minus;
      zr[l] = z.real();
      zi[l] = z.imag();
      ar[l] = a.real();
      ai[l] = a.imag();
      cr[l] = p.c().real();
      ci[l] = p.c().imag();
      thr[l] = s * s;
    }
  }
  std::vector<std::int32_t> iters(lanes);
  std::vector<std::uint8_t> esc(lanes);
  std::vector<double> fin(lanes);
  parallel_for(lanes, threads, [&](std::size_t b, std::size_t e) {
    const std::size_t len = e - b;
    simd::OrbitBatch in{{zr.data() + b, len}, {zi.data() + b, len}, {ar.data() + b, len},
                        {ai.data() + b, len}, {cr.data() + b, len}, {ci.data() + b, len},
                        {thr.data() + b, len}};
    simd::OrbitOutput out{{iters.data() + b, len}, {esc.data() + b, len}, {fin.data() + b, len}};
    simd::escape_orbits(n, max_iter, in, out);
  });

  VerificationReport r;
  r.check_name = "spine-locus";
  r.params = "n=" + std::to_string(n) + ";t=" + format_complex(t) + ";eps=" + fmt_real(eps) +
             ";grid=" + std::to_string(grid) + ";max_iter=" + std::to_string(max_iter);
  r.worst_margin = cand.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < cand.size(); ++m) {
    const double excess = std::sqrt(d2[cand[m]]) - eps;
    const bool ok = esc[2 * m] && esc[2 * m + 1];
    if (!ok) ++r.failures;
    r.worst_margin = std::min(r.worst_margin, ok ? excess : -excess);
  }
  r.samples = static_cast<long long>(cand.size());
  r.detail_name = "lattice_points";
  r.detail = static_cast<double>(count);
  finish(r);
  return r;
}

double vminus_threshold(int n) { return std::pow(0.25, static_cast<double>(n) / (n - 1)); }

VminusRegime vminus_regime(int n, double a, double c) {
  const double a_star = vminus_threshold(n);
  if (a > a_star && a < 4.0) return VminusRegime::LargeA;
  if (a < a_star) {
    if (c < 2.0 * std::sqrt(a)) return VminusRegime::SmallCBelow;
    if (c < std::pow(a, 1.0 / n) / 4.0) return VminusRegime::SmallCAbove;
  }
  return VminusRegime::None;
}

VerificationReport verify_vminus_sign(int n, double a, double c) {
  if (n < 3) throw DomainError("verify_vminus_sign: n must be >= 3");
  if (!(a > 0.0 && a <= 4.0)) throw HypothesisError("verify_vminus_sign: need 0 < a <= 4");
  if (!(c > 0.0)) throw HypothesisError("verify_vminus_sign: need c > 0");
  const double s = std::max({4.0, a, c});
  if (!(c < std::pow(a, 1.0 / n) / s)) {
    throw HypothesisError("verify_vminus_sign: need c < a^{1/n}/max{4, a, c}");
  }
  const double v_minus = c - 2.0 * std::sqrt(a);
  const VminusRegime regime = vminus_regime(n, a, c);

  VerificationReport r;
  r.check_name = "vminus-sign";
  r.params = "n=" + std::to_string(n) + ";a=" + fmt_real(a) + ";c=" + fmt_real(c) +
             ";regime=" + std::to_string(static_cast<int>(regime));
  r.detail_name = "v_minus";
  r.detail = v_minus;
  if (regime != VminusRegime::None) {
    r.samples = 1;
    const bool claim_positive = regime != VminusRegime::SmallCAbove;
    const bool holds = claim_positive ? v_minus > 0.0 : v_minus <= 0.0;
    if (!holds) r.failures = 1;
    r.worst_margin = holds ? std::abs(v_minus) : -std::abs(v_minus);
  }
  finish(r);
  return r;
}

}  // namespace mcmullen
