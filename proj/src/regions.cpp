#include "mcmullen/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mcmullen/error.hpp"

namespace mcmullen {
namespace {

int positive_mod(long long x, int m) {
  const long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  double t = len2 > 0.0 ? ((p - a) * std::conj(ab)).real() / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

double distance_to_arc(Complex p, double radius, double center, double halfwidth) {
  const double mod = std::abs(p);
  if (mod > 0.0 && std::abs(wrap_angle(principal_arg(p) - center)) <= halfwidth)
    return std::abs(mod - radius);
  return std::min(std::abs(p - std::polar(radius, center - halfwidth)),
                  std::abs(p - std::polar(radius, center + halfwidth)));
}

// Root of F(s) = (r0 z0/(s + r0))^2 + (z1/(s + 1))^2 - 1 by bisection; the
// bracket comes from Eberly's point-to-ellipse construction.
double ellipse_root(double r0, double z0, double z1, double g) {
  const double n0 = r0 * z0;
  double s0 = z1 - 1.0;
  double s1 = g < 0.0 ? 0.0 : std::hypot(n0, z1) - 1.0;
  double s = 0.0;
  for (int i = 0; i < 2200; ++i) {
    s = 0.5 * (s0 + s1);
    if (s == s0 || s == s1) break;
    const double ratio0 = n0 / (s + r0);
    const double ratio1 = z1 / (s + 1.0);
    g = ratio0 * ratio0 + ratio1 * ratio1 - 1.0;
    if (g > 0.0) {
      s0 = s;
    } else if (g < 0.0) {
      s1 = s;
    } else {
      break;
    }
  }
  return s;
}

// Distance from (y0, y1), both >= 0, to the ellipse with semi-axes e0 >= e1.
double first_quadrant_distance(double e0, double e1, double y0, double y1) {
  if (y1 > 0.0) {
    if (y0 > 0.0) {
      const double z0 = y0 / e0;
      const double z1 = y1 / e1;
      const double g = z0 * z0 + z1 * z1 - 1.0;
      if (g == 0.0) return 0.0;
      const double r0 = (e0 / e1) * (e0 / e1);
      const double sbar = ellipse_root(r0, z0, z1, g);
      const double x0 = r0 * y0 / (sbar + r0);
      const double x1 = y1 / (sbar + 1.0);
      return std::hypot(x0 - y0, x1 - y1);
    }
    return std::abs(y1 - e1);
  }
  const double numer0 = e0 * y0;
  const double denom0 = e0 * e0 - e1 * e1;
  if (numer0 < denom0) {
    const double xde0 = numer0 / denom0;
    const double x0 = e0 * xde0;
    const double x1 = e1 * std::sqrt(1.0 - xde0 * xde0);
    return std::hypot(x0 - y0, x1);
  }
  return std::abs(y0 - e0);
}

}  // namespace

bool polar_contains(const PolarRect& rect, Complex z) {
  const double mod = std::abs(z);
  if (mod == 0.0) return rect.closed && rect.r_inner == 0.0;
  const double dev = std::abs(wrap_angle(principal_arg(z) - rect.arg_center));
  if (rect.closed)
    return rect.r_inner <= mod && mod <= rect.r_outer && dev <= rect.arg_halfwidth;
  return rect.r_inner < mod && mod < rect.r_outer && dev < rect.arg_halfwidth;
}

double polar_boundary_distance(const PolarRect& rect, Complex z) {
  const double lo = rect.arg_center - rect.arg_halfwidth;
  const double hi = rect.arg_center + rect.arg_halfwidth;
  double d = std::min(distance_to_arc(z, rect.r_outer, rect.arg_center, rect.arg_halfwidth),
                      distance_to_arc(z, rect.r_inner, rect.arg_center, rect.arg_halfwidth));
  if (rect.arg_halfwidth < kPi) {
    d = std::min(d, distance_to_segment(z, std::polar(rect.r_inner, lo), std::polar(rect.r_outer, lo)));
    d = std::min(d, distance_to_segment(z, std::polar(rect.r_inner, hi), std::polar(rect.r_outer, hi)));
  }
  return d;
}

std::vector<Complex> polar_boundary(const PolarRect& rect, int per_piece) {
  if (per_piece < 2) throw DomainError("polar_boundary: need at least two samples per piece");
  const double lo = rect.arg_center - rect.arg_halfwidth;
  const double hi = rect.arg_center + rect.arg_halfwidth;
  const double last = per_piece - 1;
  std::vector<Complex> pts;
  pts.reserve(4 * per_piece);
  for (int i = 0; i < per_piece; ++i) pts.push_back(std::polar(rect.r_outer, lo + (hi - lo) * i / last));
  for (int i = 0; i < per_piece; ++i)
    pts.push_back(std::polar(rect.r_outer + (rect.r_inner - rect.r_outer) * i / last, hi));
  for (int i = 0; i < per_piece; ++i) pts.push_back(std::polar(rect.r_inner, hi + (lo - hi) * i / last));
  for (int i = 0; i < per_piece; ++i)
    pts.push_back(std::polar(rect.r_inner + (rect.r_outer - rect.r_inner) * i / last, lo));
  return pts;
}

HalfEllipseSpec ellipse_spec(const MapParams& p, HalfSign half, double psi) {
  const double pow2n = std::ldexp(1.0, p.n());
  const double abs_a = std::abs(p.a());
  return {p.c(), psi / 2.0, pow2n + abs_a / pow2n, pow2n - abs_a / pow2n, half};
}

HalfEllipseSpec ellipse_spec(const MapParams& p, HalfSign half) { return ellipse_spec(p, half, p.psi()); }

Complex ellipse_frame(const HalfEllipseSpec& spec, Complex z) {
  return std::polar(1.0, -spec.rotation) * (z - spec.center);
}

bool half_ellipse_contains(const HalfEllipseSpec& spec, Complex z) {
  const Complex q = ellipse_frame(spec, z);
  const double u = q.real() / spec.semi_major;
  const double v = q.imag() / spec.semi_minor;
  if (!(u * u + v * v < 1.0)) return false;
  if (spec.half == HalfSign::Full) return true;
  return q.real() * static_cast<int>(spec.half) >= 0.0;
}

double ellipse_curve_distance(const HalfEllipseSpec& spec, Complex z) {
  const Complex q = ellipse_frame(spec, z);
  return first_quadrant_distance(spec.semi_major, spec.semi_minor, std::abs(q.real()), std::abs(q.imag()));
}

double half_ellipse_margin(const HalfEllipseSpec& spec, Complex z) {
  const Complex q = ellipse_frame(spec, z);
  const double u = q.real() / spec.semi_major;
  const double v = q.imag() / spec.semi_minor;
  const bool inside_full = u * u + v * v < 1.0;
  const double d_curve = ellipse_curve_distance(spec, z);
  if (spec.half == HalfSign::Full) return inside_full ? d_curve : -d_curve;
  const double side = q.real() * static_cast<int>(spec.half);
  if (inside_full && side >= 0.0) return std::min(d_curve, side);
  return -std::max(inside_full ? 0.0 : d_curve, std::max(0.0, -side));
}

PolarRect u_prime_rect(const MapParams& p, int k, double psi) {
  const int two_n = 2 * p.n();
  if (k < 0 || k >= two_n) throw DomainError("u_prime_rect: k must lie in [0, 2n)");
  const double r_inner = std::pow(std::abs(p.a()), 1.0 / p.n()) / 2.0;
  if (!(r_inner < 2.0)) throw DegenerateRegionError("u_prime_rect: |a| >= 4^n leaves an empty annulus");
  return {r_inner, 2.0, wrap_angle((psi + kTwoPi * k) / two_n), kPi / two_n, false};
}

PolarRect u_prime_rect(const MapParams& p, int k) { return u_prime_rect(p, k, p.psi()); }

PolarRect l_c_rect(Complex c, double eps) {
  const double mod = std::abs(c);
  if (!(eps > 0.0)) throw HypothesisError("l_c_rect: eps must be positive");
  if (!(mod > 1.0 + eps)) {
    std::ostringstream msg;
    msg << "l_c_rect: need |c| > 1 + eps, got |c| = " << mod << ", eps = " << eps;
    throw HypothesisError(msg.str());
  }
  const double lo = mod - (1.0 + eps);
  const double hi = mod + (1.0 + eps);
  return {lo * lo / 4.0, hi * hi / 4.0, wrap_angle(2.0 * principal_arg(c)),
          2.0 * std::asin((1.0 + eps) / mod), true};
}

int k_of_j(const WRegionSpec& w) {
  const int two_n = 2 * w.n;
  const double psi_j = principal_arg(w.a_j);
  const double q = (two_n * principal_arg(w.w) - psi_j) / kTwoPi;
  const double r = std::round(q);
  if (std::abs(q - r) > 0.25) {
    std::ostringstream msg;
    msg << "k_of_j: w_j and a_j disagree (quotient " << q << " is not near an integer)";
    throw InconsistencyError(msg.str());
  }
  return positive_mod(static_cast<long long>(r), two_n);
}

PolarRect v_rect(const WRegionSpec& w) {
  return {0.5, 2.0, principal_arg(w.w), kPi / (2 * w.n), true};
}

Complex w_boundary_point(const WRegionSpec& w, int segment, double param) {
  const Complex half_c = w.c / 2.0;
  const double edge = kPi / (2 * w.n);
  Complex z;
  switch (segment) {
    case 1:
      z = std::polar(0.25, param) - half_c;
      break;
    case 2:
      z = std::polar(1.0, param) - half_c;
      break;
    case 3:
      z = std::polar(param / 2.0, principal_arg(w.w) + edge) - half_c;
      break;
    case 4:
      z = std::polar(param / 2.0, principal_arg(w.w) - edge) - half_c;
      break;
    default:
      throw DomainError("w_boundary_point: segment must be 1..4");
  }
  return z * z;
}

Complex pullback_to_parameter(Complex c, Complex z) {
  const Complex h = (z - c) / 2.0;
  return h * h;
}

bool w_region_contains(const WRegionSpec& w, Complex a) {
  const PolarRect v = v_rect(w);
  const Complex root = 2.0 * principal_sqrt(a);
  return polar_contains(v, w.c + root) || polar_contains(v, w.c - root);
}

double continued_psi(const WRegionSpec& w, Complex a) {
  const double psi_j = principal_arg(w.a_j);
  return psi_j + wrap_angle(principal_arg(a) - psi_j);
}

int principal_index(const WRegionSpec& w, Complex a) {
  const double shift = (continued_psi(w, a) - principal_arg(a)) / kTwoPi;
  return positive_mod(w.k + static_cast<long long>(std::llround(shift)), 2 * w.n);
}

Complex tracked_critical_value(const WRegionSpec& w, Complex a) {
  const Complex root = std::polar(std::sqrt(std::abs(a)), continued_psi(w, a) / 2.0);
  return w.k % 2 == 0 ? w.c + 2.0 * root : w.c - 2.0 * root;
}

}  // namespace mcmullen
