#include <doctest.h>

#include <cmath>
#include <random>

#include "mcmullen/dynamics.hpp"
#include "mcmullen/error.hpp"

using namespace mcmullen;

namespace {
bool near(Complex x, Complex y, double tol) { return std::abs(x - y) <= tol; }

Complex random_complex(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> r(lo, hi), th(-kPi, kPi);
  return std::polar(r(rng), th(rng));
}
}  // namespace

TEST_CASE("map parameters are validated") {
  CHECK_THROWS_AS(MapParams(2, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(MapParams(3, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(MapParams(3, {NAN, 0.0}, 0.0), DomainError);
  MapParams p(3, -1.0, 0.0);
  CHECK(p.psi() == doctest::Approx(kPi));
  // -1 with a negative zero imaginary part still sits at +pi
  CHECK(MapParams(3, Complex(-1.0, -0.0), 0.0).psi() == doctest::Approx(kPi));
}

TEST_CASE("eval_map examples") {
  CHECK(near(eval_map(MapParams(3, 1.0, 0.0), 1.0), 2.0, 1e-15));
  CHECK(near(eval_map(MapParams(3, 1.0, 0.0), Complex(0, 1)), 0.0, 1e-15));
  CHECK(near(eval_map(MapParams(5, 0.25, 0.2), 1.0), 1.45, 1e-15));
  CHECK_THROWS_AS(eval_map(MapParams(3, 1.0, 0.0), 0.0), PoleError);
}

TEST_CASE("critical points") {
  auto pts = critical_points(MapParams(3, 1.0, 0.0));
  REQUIRE(pts.size() == 6);
  CHECK(near(pts[0], 1.0, 1e-15));
  CHECK(near(pts[3], -1.0, 1e-15));
  auto q = critical_points(MapParams(4, Complex(0, 6), 0.0));
  CHECK(near(q[0], std::polar(std::pow(6.0, 1.0 / 8), kPi / 16), 1e-14));
  CHECK(near(eval_map(MapParams(4, Complex(0, 6), 0.0), q[0]), critical_values(MapParams(4, Complex(0, 6), 0.0)).v_plus, 1e-12));
}

TEST_CASE("critical values") {
  auto v = critical_values(MapParams(3, 1.0, 0.0));
  CHECK(near(v.v_plus, 2.0, 0) );
  CHECK(near(v.v_minus, -2.0, 0));
  v = critical_values(MapParams(3, 4.0, 6.0));
  CHECK(near(v.v_plus, 10.0, 0));
  CHECK(near(v.v_minus, 2.0, 0));
  v = critical_values(MapParams(3, -1.0, 0.0));
  CHECK(near(v.v_plus, Complex(0, 2), 1e-15));
  CHECK(near(v.v_minus, Complex(0, -2), 1e-15));
}

TEST_CASE("escape and inner radii") {
  CHECK(escape_radius(MapParams(3, 1.0, 0.0)) == 4.0);
  CHECK(escape_radius(MapParams(3, 2.0, 6.0)) == 6.0);
  CHECK(escape_radius(MapParams(3, 9.0, Complex(0, 6))) == 9.0);
  CHECK(inner_radius(MapParams(3, 1.0, 0.0)) == doctest::Approx(0.25));
  CHECK(inner_radius(MapParams(3, 8.0, 0.0)) == doctest::Approx(0.25));
  CHECK(inner_radius(MapParams(5, 1.0, 6.0)) == doctest::Approx(1.0 / 6));
}

TEST_CASE("involute examples") {
  CHECK(near(involute(MapParams(3, 1.0, 0.0), 2.0), 0.5, 1e-15));
  CHECK(near(involute(MapParams(3, 8.0, 0.0), 2.0), 1.0, 1e-15));
  CHECK(near(involute(MapParams(4, Complex(0, 6), 0.0), 1.0), std::polar(std::pow(6.0, 0.25), kPi / 8), 1e-14));
  CHECK_THROWS_AS(involute(MapParams(3, 1.0, 0.0), 0.0), PoleError);
}

TEST_CASE("iterate_orbit examples") {
  MapParams p(3, 1.0, 0.0);
  auto r = iterate_orbit(p, 4.0, 100, 4.0);
  CHECK(r.escaped);
  CHECK(r.iterations == 1);
  CHECK(r.final_modulus == doctest::Approx(64.015625));
  r = iterate_orbit(p, 0.1, 100, 4.0);
  CHECK(r.escaped);
  r = iterate_orbit(p, 0.0, 100, 4.0);
  CHECK(r.escaped);
  CHECK(r.iterations == 1);
  CHECK(std::isinf(r.final_modulus));
  CHECK_THROWS_AS(iterate_orbit(p, 1.0, 0, 4.0), DomainError);
}

TEST_CASE("a fixed critical point stays bounded") {
  // w = -1 solves 2w^3 - w + c = 0 for c = 1, with a = w^6 = 1.
  MapParams p(3, 1.0, 1.0);
  CHECK(near(eval_map(p, -1.0), -1.0, 1e-15));
  auto r = iterate_orbit(p, -1.0, 5000, escape_radius(p));
  CHECK_FALSE(r.escaped);
  CHECK(r.iterations == 5000);
}

TEST_CASE("property: involution symmetry") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> nd(3, 12);
  for (int i = 0; i < 2000; ++i) {
    MapParams p(nd(rng), random_complex(rng, 0.01, 20), random_complex(rng, 0, 20));
    Complex z = random_complex(rng, 0.05, 3);
    Complex fz = eval_map(p, z);
    CHECK(std::abs(fz - eval_map(p, involute(p, z))) <= 1e-10 * (1 + std::abs(fz)));
  }
}

TEST_CASE("property: even critical points map to v_plus, odd to v_minus") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> nd(3, 10);
  for (int i = 0; i < 500; ++i) {
    MapParams p(nd(rng), random_complex(rng, 0.01, 20), random_complex(rng, 0, 20));
    auto v = critical_values(p);
    auto pts = critical_points(p);
    for (int k = 0; k < 2 * p.n(); ++k) {
      Complex target = k % 2 == 0 ? v.v_plus : v.v_minus;
      CHECK(std::abs(eval_map(p, pts[k]) - target) <= 1e-9 * (1 + std::abs(target)));
      CHECK(std::abs(pts[k]) == doctest::Approx(std::pow(std::abs(p.a()), 1.0 / (2 * p.n()))));
    }
  }
}

TEST_CASE("property: outside the escape radius orbits grow past s^m") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> nd(3, 8);
  for (int i = 0; i < 500; ++i) {
    MapParams p(nd(rng), random_complex(rng, 0.01, 10), random_complex(rng, 0, 10));
    const double s = escape_radius(p);
    Complex z = random_complex(rng, s, 2 * s);
    // Stop before z^n would overflow.
    for (int m = 1; m <= 3 && p.n() * std::log10(std::abs(z)) < 300; ++m) {
      z = eval_map(p, z);
      CHECK(std::abs(z) > std::pow(s, m));
    }
  }
}

TEST_CASE("angle helpers") {
  CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(3 * kPi / 2) == doctest::Approx(-kPi / 2));
  CHECK(principal_arg(Complex(-1, -0.0)) == kPi);
  CHECK(principal_sqrt(Complex(-4, -0.0)) == Complex(0, 2));
  CHECK(near(principal_root(Complex(-8, 0), 3), std::polar(2.0, kPi / 3), 1e-14));
}
