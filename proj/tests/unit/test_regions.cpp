#include <doctest.h>

#include <cmath>
#include <random>

#include "mcmullen/error.hpp"
#include "mcmullen/regions.hpp"
#include "mcmullen/solvers.hpp"

using namespace mcmullen;

namespace {

// Dense polyline oracle for the distance to an ellipse curve.
double brute_ellipse_distance(const HalfEllipseSpec& e, Complex z) {
  double best = INFINITY;
  const int m = 200000;
  for (int i = 0; i < m; ++i) {
    const double t = kTwoPi * i / m;
    Complex p = e.center + std::polar(1.0, e.rotation) * Complex(e.semi_major * std::cos(t), e.semi_minor * std::sin(t));
    best = std::min(best, std::abs(p - z));
  }
  return best;
}

double brute_polar_distance(const PolarRect& r, Complex z) {
  double best = INFINITY;
  for (const Complex& p : polar_boundary(r, 20000)) best = std::min(best, std::abs(p - z));
  return best;
}

}  // namespace

TEST_CASE("polar rectangle membership") {
  PolarRect open{1.0, 2.0, 0.0, 0.5, false};
  CHECK(polar_contains(open, 1.5));
  CHECK_FALSE(polar_contains(open, 1.0));
  CHECK_FALSE(polar_contains(open, 2.5));
  CHECK_FALSE(polar_contains(open, std::polar(1.5, 0.6)));
  PolarRect closed = open;
  closed.closed = true;
  CHECK(polar_contains(closed, 1.0));
  CHECK(polar_contains(closed, 2.0));
  // Sectors straddling the negative real axis.
  PolarRect back{1.0, 2.0, kPi, 0.3, false};
  CHECK(polar_contains(back, std::polar(1.5, kPi - 0.2)));
  CHECK(polar_contains(back, std::polar(1.5, -kPi + 0.2)));
  CHECK_FALSE(polar_contains(back, 1.5));
}

TEST_CASE("polar boundary distance matches a dense sampling") {
  PolarRect r{0.7, 2.0, 2.9, 0.4, false};
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 50; ++i) {
    Complex z(u(rng), u(rng));
    CHECK(polar_boundary_distance(r, z) == doctest::Approx(brute_polar_distance(r, z)).epsilon(1e-3));
  }
}

TEST_CASE("polar boundary walk is closed and counter-clockwise") {
  PolarRect r{0.5, 2.0, 1.0, 0.3, true};
  auto pts = polar_boundary(r, 10);
  REQUIRE(pts.size() == 40);
  CHECK(std::abs(pts.front() - std::polar(2.0, 0.7)) < 1e-15);
  CHECK(std::abs(pts[9] - pts[10]) < 1e-15);
  CHECK(std::abs(pts.back() - pts.front()) < 1e-15);
  double area = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Complex p = pts[i], q = pts[(i + 1) % pts.size()];
    area += p.real() * q.imag() - q.real() * p.imag();
  }
  CHECK(area > 0);
}

TEST_CASE("ellipse of the map") {
  MapParams p(4, Complex(0, 6), Complex(0, 6));
  auto e = ellipse_spec(p, HalfSign::Plus);
  CHECK(e.semi_major == doctest::Approx(16 + 6.0 / 16));
  CHECK(e.semi_minor == doctest::Approx(16 - 6.0 / 16));
  CHECK(e.rotation == doctest::Approx(kPi / 4));
  CHECK(e.center == Complex(0, 6));
  // Foci are the critical values.
  const double focal = std::sqrt(e.semi_major * e.semi_major - e.semi_minor * e.semi_minor);
  auto v = critical_values(p);
  CHECK(std::abs(v.v_plus - (e.center + std::polar(focal, e.rotation))) < 1e-12);
  CHECK(half_ellipse_contains(e, v.v_plus));
  CHECK_FALSE(half_ellipse_contains(e, v.v_minus));
  CHECK(half_ellipse_contains(ellipse_spec(p, HalfSign::Minus), v.v_minus));
}

TEST_CASE("ellipse curve distance matches a dense sampling") {
  HalfEllipseSpec e{Complex(1, -2), 0.7, 5.0, 2.0, HalfSign::Full};
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-8, 8);
  for (int i = 0; i < 40; ++i) {
    Complex z(1 + u(rng), -2 + u(rng));
    CHECK(ellipse_curve_distance(e, z) == doctest::Approx(brute_ellipse_distance(e, z)).epsilon(1e-6));
  }
  CHECK(ellipse_curve_distance(e, e.center) == doctest::Approx(2.0));
}

TEST_CASE("half-ellipse margin sign agrees with membership") {
  HalfEllipseSpec e{Complex(0, 0), 0.3, 4.0, 3.0, HalfSign::Minus};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-6, 6);
  for (int i = 0; i < 2000; ++i) {
    Complex z(u(rng), u(rng));
    const double m = half_ellipse_margin(e, z);
    if (half_ellipse_contains(e, z)) {
      CHECK(m >= 0);
    } else {
      CHECK(m <= 0);
    }
  }
}

TEST_CASE("U' rectangle") {
  MapParams p(3, 1.0, 0.2);
  PolarRect r = u_prime_rect(p, 3);
  CHECK(r.r_inner == doctest::Approx(0.5));
  CHECK(r.r_outer == 2.0);
  CHECK(r.arg_center == doctest::Approx(kPi));
  CHECK(r.arg_halfwidth == doctest::Approx(kPi / 6));
  CHECK_FALSE(r.closed);
  CHECK_THROWS_AS(u_prime_rect(p, 6), DomainError);
  CHECK_THROWS_AS(u_prime_rect(MapParams(3, 100.0, 0.0), 0), DegenerateRegionError);
  // The k-th critical point sits on the centre ray of U'_{a,k}.
  auto xi = critical_points(p);
  for (int k = 0; k < 6; ++k) {
    CHECK(std::abs(wrap_angle(principal_arg(xi[k]) - u_prime_rect(p, k).arg_center)) < 1e-12);
  }
}

TEST_CASE("L_c rectangle") {
  PolarRect r = l_c_rect(-2.0, 0.5);
  CHECK(r.r_inner == doctest::Approx(0.0625));
  CHECK(r.r_outer == doctest::Approx(3.0625));
  CHECK(std::abs(wrap_angle(r.arg_center)) < 1e-12);
  CHECK(r.arg_halfwidth == doctest::Approx(2 * std::asin(0.75)));
  CHECK(r.closed);
  CHECK_THROWS_AS(l_c_rect(1.2, 0.5), HypothesisError);
  CHECK_THROWS_AS(l_c_rect(3.0, 0.0), HypothesisError);
  // Every a with |c +- 2 sqrt(a)| < 1 + eps lies in L_c.
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-4, 4);
  Complex c(3, 2);
  PolarRect lc = l_c_rect(c, 0.3);
  int hits = 0;
  for (int i = 0; i < 20000; ++i) {
    Complex a(u(rng), u(rng));
    Complex r2 = 2.0 * principal_sqrt(a);
    if (std::abs(c + r2) < 1.3 || std::abs(c - r2) < 1.3) {
      ++hits;
      CHECK(polar_contains(lc, a));
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("W-region data from the fixed critical points") {
  auto specs = fixed_critical_params(4, Complex(0, 6));
  REQUIRE(specs.size() == 4);
  for (const auto& w : specs) {
    MapParams p(4, w.a_j, w.c);
    CHECK(std::abs(critical_points(p)[w.k] - w.w) < 1e-12);
    CHECK(std::abs(w.w) > 0.5);
    CHECK(std::abs(w.w) < 2.0);
    CHECK(w_region_contains(w, w.a_j));
    CHECK(principal_index(w, w.a_j) == w.k);
    CHECK(std::abs(tracked_critical_value(w, w.a_j) - w.w) < 1e-12);
    PolarRect v = v_rect(w);
    CHECK(v.r_inner == 0.5);
    CHECK(v.r_outer == 2.0);
    CHECK(v.arg_halfwidth == doctest::Approx(kPi / 8));
    // Boundary curves are pull-backs of the boundary of V.
    for (double th : {0.0, 1.0, 4.0}) {
      CHECK(std::abs(w_boundary_point(w, 1, th) - pullback_to_parameter(w.c, std::polar(0.5, th))) < 1e-12);
      CHECK(std::abs(w_boundary_point(w, 2, th) - pullback_to_parameter(w.c, std::polar(2.0, th))) < 1e-12);
    }
    const Complex corner = std::polar(2.0, principal_arg(w.w) + kPi / 8);
    CHECK(std::abs(w_boundary_point(w, 3, 2.0) - pullback_to_parameter(w.c, corner)) < 1e-12);
    CHECK_THROWS_AS(w_boundary_point(w, 5, 0.0), DomainError);
  }
}

TEST_CASE("k_of_j rejects inconsistent data") {
  WRegionSpec w{Complex(0, 6), 4, 1, std::polar(1.0, 0.1), std::polar(1.0, 0.1 * 8 + 3.0), 0};
  CHECK_THROWS_AS(k_of_j(w), InconsistencyError);
}

TEST_CASE("branch continuation across the negative real axis") {
  // a_j just above the cut, a just below: Arg jumps by -2pi, the index moves by one.
  WRegionSpec w{Complex(-7, 0), 3, 1, std::polar(1.0, (kPi - 0.01) / 6), std::polar(1.0, kPi - 0.01), 0};
  w.k = k_of_j(w);
  CHECK(w.k == 0);
  Complex a = std::polar(1.0, -kPi + 0.01);
  CHECK(continued_psi(w, a) == doctest::Approx(kPi + 0.01));
  CHECK(principal_index(w, a) == 1);
  MapParams p(3, a, w.c);
  CHECK(std::abs(critical_points(p)[1] - critical_point(p, 0, continued_psi(w, a))) < 1e-12);
  CHECK(std::abs(tracked_critical_value(w, a) - critical_values(p).v_minus) < 1e-12);
}
