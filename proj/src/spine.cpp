#include "mcmullen/spine.hpp"

#include <cmath>

#include "mcmullen/error.hpp"
#include "mcmullen/simd/kernels.hpp"

namespace mcmullen {

SpineSpec::SpineSpec(Complex slope, int sample_count) : t(slope), samples(sample_count) {
  if (slope == Complex(0.0, 0.0)) throw DomainError("spine slope t must be non-zero");
  if (sample_count < 16) throw DomainError("spine needs at least 16 samples");
}

Complex spine_point(const SpineSpec& s, double theta, int branch) {
  if (branch != 1 && branch != -1) throw DomainError("spine branch must be +1 or -1");
  const Complex e = std::polar(1.0, theta);
  const Complex two_over_t2 = 2.0 / (s.t * s.t);
  return two_over_t2 + e / s.t + static_cast<double>(branch) * two_over_t2 * principal_sqrt(1.0 + s.t * e);
}

SpineRadii spine_radii(Complex t) {
  if (t == Complex(0.0, 0.0)) throw DomainError("spine slope t must be non-zero");
  const double m = std::abs(t);
  const double base = 2.0 / (m * m) + 1.0 / m;
  const double spread = 2.0 / (m * m) * std::sqrt(1.0 + m);
  return {base - spread, base + spread};
}

SpineCloud spine_cloud(const SpineSpec& s) {
  SpineCloud cloud;
  cloud.re.reserve(2 * s.samples);
  cloud.im.reserve(2 * s.samples);
  for (int branch : {1, -1}) {
    for (int i = 0; i < s.samples; ++i) {
      const Complex a = spine_point(s, kTwoPi * i / s.samples, branch);
      cloud.re.push_back(a.real());
      cloud.im.push_back(a.imag());
    }
  }
  return cloud;
}

std::vector<double> spine_distances(const SpineCloud& cloud, const std::vector<Complex>& points) {
  std::vector<double> qr(points.size()), qi(points.size()), d2(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    qr[i] = points[i].real();
    qi[i] = points[i].imag();
  }
  simd::min_distance2(cloud.re, cloud.im, qr, qi, d2);
  for (double& d : d2) d = std::sqrt(d);
  return d2;
}

double spine_distance(const SpineSpec& s, Complex a) {
  return spine_distances(spine_cloud(s), {a}).front();
}

}  // namespace mcmullen
