#include "mcmullen/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mcmullen/complex_arith.hpp"
#include "mcmullen/error.hpp"

namespace mcmullen {

double wrap_angle(double theta) {
  double r = std::remainder(theta, kTwoPi);  // [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  return r;
}

double principal_arg(Complex z) {
  const double t = std::atan2(z.imag(), z.real());
  return t == -kPi ? kPi : t;
}

Complex principal_sqrt(Complex z) {
  // std::sqrt honours the sign of a zero imaginary part; normalise it so the
  // negative real axis maps to the positive imaginary axis.
  return std::sqrt(Complex(z.real(), z.imag() == 0.0 ? 0.0 : z.imag()));
}

Complex principal_root(Complex z, int m) {
  if (m == 2) return principal_sqrt(z);
  return std::polar(std::pow(std::abs(z), 1.0 / m), principal_arg(z) / m);
}

MapParams::MapParams(int n, Complex a, Complex c) : n_(n), a_(a), c_(c), psi_(principal_arg(a)) {
  if (n < 3) throw DomainError("map degree n must be at least 3, got " + std::to_string(n));
  if (a == Complex(0.0, 0.0)) throw DomainError("pole coefficient a must be non-zero");
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(c.real()) ||
      !std::isfinite(c.imag()))
    throw DomainError("map parameters must be finite");
}

Complex eval_map(const MapParams& p, Complex z) {
  if (z == Complex(0.0, 0.0)) throw PoleError();
  return arith::to_std(
      arith::step(arith::from_std(z), arith::from_std(p.a()), arith::from_std(p.c()), p.n()));
}

Complex critical_point(const MapParams& p, int k, double psi) {
  const int two_n = 2 * p.n();
  return std::polar(std::pow(std::abs(p.a()), 1.0 / two_n), (psi + kTwoPi * k) / two_n);
}

std::vector<Complex> critical_points(const MapParams& p) {
  std::vector<Complex> pts;
  pts.reserve(2 * p.n());
  for (int k = 0; k < 2 * p.n(); ++k) pts.push_back(critical_point(p, k, p.psi()));
  return pts;
}

CriticalValues critical_values(const MapParams& p) {
  const Complex root = principal_sqrt(p.a());
  return {p.c() + 2.0 * root, p.c() - 2.0 * root};
}

double escape_radius(const MapParams& p) {
  return std::max({4.0, std::abs(p.c()), std::abs(p.a())});
}

double inner_radius(const MapParams& p) {
  return std::pow(std::abs(p.a()), 1.0 / p.n()) / escape_radius(p);
}

Complex involute(const MapParams& p, Complex z) {
  if (z == Complex(0.0, 0.0)) throw PoleError();
  return principal_root(p.a(), p.n()) / z;
}

OrbitResult iterate_orbit(const MapParams& p, Complex z0, int max_iter, double threshold) {
  if (max_iter < 1) throw DomainError("iterate_orbit: max_iter must be at least 1");
  const arith::Cplx a = arith::from_std(p.a());
  const arith::Cplx c = arith::from_std(p.c());
  const double thr2 = threshold * threshold;

  arith::Cplx z = arith::from_std(z0);
  for (int m = 1; m <= max_iter; ++m) {
    if (z.re == 0.0 && z.im == 0.0)
      return {true, m, std::numeric_limits<double>::infinity()};
    z = arith::step(z, a, c, p.n());
    const double r2 = arith::norm2(z);
    if (!(r2 <= thr2)) {
      const double mod = std::sqrt(r2);
      return {true, m, std::isnan(mod) ? std::numeric_limits<double>::infinity() : mod};
    }
  }
  return {false, max_iter, std::abs(arith::to_std(z))};
}

}  // namespace mcmullen
