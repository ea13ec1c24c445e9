#include <doctest.h>

#include <cmath>
#include <random>

#include "mcmullen/error.hpp"
#include "mcmullen/spine.hpp"

using namespace mcmullen;

namespace {
double identity_residual(Complex t, Complex a) {
  const Complex r = 2.0 * principal_sqrt(a);
  return std::min(std::abs(std::abs(t * a + r) - 1.0), std::abs(std::abs(t * a - r) - 1.0));
}
}  // namespace

TEST_CASE("spine point examples") {
  SpineSpec s(1.0);
  Complex up = spine_point(s, 0.0, 1);
  CHECK(std::abs(up - (3 + 2 * std::sqrt(2.0))) < 1e-14);
  CHECK(std::abs(std::abs(up - 2.0 * std::sqrt(up)) - 1.0) < 1e-14);
  Complex down = spine_point(s, 0.0, -1);
  CHECK(std::abs(down - (3 - 2 * std::sqrt(2.0))) < 1e-14);
  CHECK(std::abs(std::abs(down + 2.0 * std::sqrt(down)) - 1.0) < 1e-14);

  SpineSpec s2(2.0);
  CHECK(std::abs(spine_point(s2, kPi, 1) - Complex(0, 0.5)) < 1e-14);
  CHECK(std::abs(spine_point(s2, kPi, -1) - Complex(0, -0.5)) < 1e-14);
  CHECK_THROWS_AS(spine_point(s, 0.0, 0), DomainError);
  CHECK_THROWS_AS(SpineSpec(0.0), DomainError);
  CHECK_THROWS_AS(SpineSpec(1.0, 8), DomainError);
}

TEST_CASE("spine radii") {
  auto r = spine_radii(1.0);
  CHECK(std::abs(r.l - (3 - 2 * std::sqrt(2.0))) < 1e-12);
  CHECK(std::abs(r.u - (3 + 2 * std::sqrt(2.0))) < 1e-12);
  r = spine_radii(2.0);
  CHECK(r.l == doctest::Approx(1 - 0.5 * std::sqrt(3.0)));
  CHECK(r.u == doctest::Approx(1 + 0.5 * std::sqrt(3.0)));
  CHECK(spine_radii(Complex(0, 2)).u == r.u);
  for (double m : {0.01, 0.3, 1.0, 5.0, 100.0}) {
    auto q = spine_radii(m);
    CHECK(q.l > 0);
    CHECK(q.l < q.u);
  }
}

TEST_CASE("property: defining identity and annulus containment") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> th(0, kTwoPi), mod(0.2, 4), arg(-kPi, kPi);
  for (int i = 0; i < 1024; ++i) {
    const Complex t = std::polar(mod(rng), arg(rng));
    SpineSpec s(t);
    const Complex a = spine_point(s, th(rng), i % 2 ? 1 : -1);
    CHECK(identity_residual(t, a) <= 1e-10);
    auto r = spine_radii(t);
    CHECK(std::abs(a) >= r.l - 1e-10);
    CHECK(std::abs(a) <= r.u + 1e-10);
  }
}

TEST_CASE("spine distance examples") {
  SpineSpec s(1.0);
  CHECK(spine_distance(s, 3 + 2 * std::sqrt(2.0)) <= 1e-3);
  CHECK(spine_distance(s, 0.0) >= spine_radii(1.0).l - 1e-3);
  CHECK(spine_distance(SpineSpec(2.0), 100.0) >= 98);
}

TEST_CASE("spine distance matches a direct minimum") {
  SpineSpec s(Complex(0.8, 0.3), 512);
  auto cloud = spine_cloud(s);
  REQUIRE(cloud.re.size() == 1024);
  std::vector<Complex> q{{0.5, 0.5}, {3, -1}, {-2, 2}};
  auto d = spine_distances(cloud, q);
  for (std::size_t i = 0; i < q.size(); ++i) {
    double best = INFINITY;
    for (int b : {1, -1}) {
      for (int k = 0; k < 512; ++k) best = std::min(best, std::abs(q[i] - spine_point(s, kTwoPi * k / 512, b)));
    }
    CHECK(d[i] == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("spine splits into two curves for t below one") {
  SpineSpec s(0.8, 2048);
  auto cloud = spine_cloud(s);
  double best = INFINITY;
  for (int i = 0; i < 2048; ++i) {
    for (int j = 2048; j < 4096; ++j) {
      best = std::min(best, std::hypot(cloud.re[i] - cloud.re[j], cloud.im[i] - cloud.im[j]));
    }
  }
  CHECK(best > 0.01);
}
