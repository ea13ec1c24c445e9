#include <doctest.h>

#include <cmath>
#include <vector>

#include "mcmullen/error.hpp"
#include "mcmullen/solvers.hpp"
#include "mcmullen/verify.hpp"

using namespace mcmullen;

TEST_CASE("image of U' lies on the ellipse") {
  auto r = verify_image_ellipse(MapParams(3, 1.0, 0.0), 0, 1000);
  CHECK(r.pass);
  CHECK(r.samples == 4000);
  CHECK(r.detail <= 1e-9);
  CHECK(r.worst_margin > 0);

  r = verify_image_ellipse(MapParams(4, Complex(0, 6), Complex(0, 6)), 1, 1000);
  CHECK(r.pass);
  CHECK(r.detail <= 1e-8);
}

TEST_CASE("image check fails with the |a|/2 semi-axes") {
  MapParams p(3, 1.0, 0.0);
  HalfEllipseSpec wrong = ellipse_spec(p, HalfSign::Full);
  wrong.semi_major = 8 + 0.5;
  wrong.semi_minor = 8 - 0.5;
  auto r = verify_image_ellipse(p, 0, 1000, wrong);
  CHECK_FALSE(r.pass);
  CHECK(r.failures > 0);
  CHECK(r.worst_margin < 0);
  CHECK_THROWS_AS(verify_image_ellipse(p, 0, 8), DomainError);
}

TEST_CASE("containment examples") {
  CHECK(verify_containment(MapParams(3, 1.0, 0.2), 3, 2000).pass);
  CHECK(verify_containment(MapParams(7, 1.0, -2.0), 0, 2000).pass);
  for (const auto& w : fixed_critical_params(4, Complex(0, 6))) {
    auto r = verify_containment(MapParams(4, w.a_j, w.c), w.k, 2000);
    CHECK(r.pass);
    CHECK(r.worst_margin > 0);
  }
  // Wrong half: U'_{a,3} is not in the v_plus half.
  auto bad = verify_containment(MapParams(3, 1.0, 0.2), 2, 2000);
  CHECK_FALSE(bad.pass);
}

TEST_CASE("winding turns of simple loops") {
  std::vector<Complex> circle, centers, constant;
  for (int i = 0; i < 64; ++i) {
    circle.push_back(std::polar(1.0, kTwoPi * i / 64));
    centers.push_back(0.0);
    constant.push_back(Complex(2, 1));
  }
  CHECK(winding_turns(circle, centers) == doctest::Approx(1.0));
  CHECK(winding_turns(constant, centers) == doctest::Approx(0.0));
  std::vector<Complex> coarse{1.0, Complex(-1, 0.01), Complex(0, -1)};
  CHECK_THROWS_AS(winding_turns(coarse, std::vector<Complex>(3, 0.0)), UnderSamplingError);
}

TEST_CASE("winding around the W-regions at c = 6i, n = 4") {
  for (const auto& w : fixed_critical_params(4, Complex(0, 6))) {
    auto r = verify_winding(w, 4096);
    REQUIRE(r.winding.has_value());
    CHECK(*r.winding == 1);
    CHECK(std::abs(r.detail - 1.0) < 0.01);
    CHECK(r.samples == 4096);
    CHECK(r.pass == (r.failures == 0));
    // Parts of the pulled-back boundary put v(a) inside U'_{a,k}, so the
    // membership clause does not hold at these parameters.
    CHECK(r.failures > 0);
  }
  CHECK_THROWS_AS(verify_winding(fixed_critical_params(4, Complex(0, 6))[0], 100), DomainError);
}

TEST_CASE("winding at n = 8, c = 6") {
  for (const auto& w : fixed_critical_params(8, 6.0)) {
    auto r = verify_winding(w, 4096);
    CHECK(*r.winding == 1);
  }
}

TEST_CASE("annulus escape") {
  auto r = verify_annulus_escape(MapParams(3, 1.0, 0.0), 64, 100);
  CHECK(r.pass);
  CHECK(r.samples == 64 * 64);
  CHECK(r.worst_margin > 0);
  CHECK(verify_annulus_escape(MapParams(5, Complex(0, 6), Complex(-6, 6)), 64, 100).pass);
  CHECK_THROWS_AS(verify_annulus_escape(MapParams(3, 1.0, 0.0), 4, 100), DomainError);
}

TEST_CASE("spine locus") {
  auto r = verify_spine_locus(20, 1.0, 0.25, 200, 200);
  CHECK(r.pass);
  CHECK(r.samples > 1000);
  auto neg = verify_spine_locus(6, 1.0, 0.01, 200, 200);
  CHECK(neg.failures > 0);
  CHECK_FALSE(neg.pass);
  CHECK(neg.worst_margin < 0);
  CHECK_THROWS_AS(verify_spine_locus(20, 1.0, 0.0, 200, 200), DomainError);
}

TEST_CASE("reports do not depend on the thread count") {
  auto a = verify_spine_locus(10, Complex(0.9, 0.1), 0.1, 64, 100, 1);
  auto b = verify_spine_locus(10, Complex(0.9, 0.1), 0.1, 64, 100, 3);
  CHECK(report_csv_row(a) == report_csv_row(b));
  auto c = verify_annulus_escape(MapParams(4, 2.0, 1.0), 32, 50, 1);
  auto d = verify_annulus_escape(MapParams(4, 2.0, 1.0), 32, 50, 4);
  CHECK(report_csv_row(c) == report_csv_row(d));
}

TEST_CASE("v_minus sign against the stated regimes") {
  auto r = verify_vminus_sign(3, 2.0, 0.3);
  CHECK(r.detail == doctest::Approx(0.3 - 2 * std::sqrt(2.0)));
  CHECK(vminus_regime(3, 2.0, 0.3) == VminusRegime::LargeA);
  CHECK(r.failures == 1);

  CHECK_THROWS_AS(verify_vminus_sign(3, 0.001, 0.15), HypothesisError);

  r = verify_vminus_sign(3, 0.0001, 0.01);
  CHECK(vminus_regime(3, 0.0001, 0.01) == VminusRegime::SmallCBelow);
  CHECK(r.detail < 0);
  CHECK(r.failures == 1);

  r = verify_vminus_sign(3, 1e-6, 0.0022);
  CHECK(vminus_regime(3, 1e-6, 0.0022) == VminusRegime::SmallCAbove);
  CHECK(r.detail > 0);
  CHECK(r.failures == 1);

  CHECK(vminus_threshold(3) == doctest::Approx(0.125));
  CHECK_THROWS_AS(verify_vminus_sign(3, 5.0, 0.1), HypothesisError);
  CHECK_THROWS_AS(verify_vminus_sign(3, 1.0, -0.1), HypothesisError);
}

TEST_CASE("CSV report row") {
  VerificationReport r;
  r.check_name = "annulus";
  r.params = "n=3";
  r.samples = 10;
  r.failures = 0;
  r.worst_margin = 0.5;
  r.pass = true;
  CHECK(report_csv_row(r) == "annulus,n=3,10,0,0.5,true");
  CHECK(std::string(kReportCsvHeader) == "check,params,samples,failures,worst_margin,pass");
  CHECK(format_complex(Complex(1.5, -2)) == "1.5-2i");
}
