#pragma once

// The spine of a diagonal slice c = t a: the a-values where a critical value
// of R_{n,a,ta} lies on the unit circle, |t a +- 2 sqrt(a)| = 1.

#include <vector>

#include "mcmullen/dynamics.hpp"

namespace mcmullen {

inline constexpr int kDefaultSpineSamples = 8192;

struct SpineSpec {
  Complex t;
  int samples = kDefaultSpineSamples;

  SpineSpec(Complex slope, int sample_count = kDefaultSpineSamples);
};

/// a = 2/t^2 + e^{i theta}/t + branch (2/t^2) sqrt(1 + t e^{i theta}), branch = +1 or -1.
Complex spine_point(const SpineSpec& s, double theta, int branch);

struct SpineRadii {
  double l;
  double u;
};

/// Radii of the annulus that holds the spine; only |t| matters.
SpineRadii spine_radii(Complex t);

/// Sampled spine: both branches at `samples` equally spaced theta in [0, 2pi).
struct SpineCloud {
  std::vector<double> re;
  std::vector<double> im;
};
SpineCloud spine_cloud(const SpineSpec& s);

/// Sampled distance from a to the spine. An over-estimate of the true
/// distance by at most half the local spacing between samples.
double spine_distance(const SpineSpec& s, Complex a);

/// Batched spine_distance against a precomputed cloud.
std::vector<double> spine_distances(const SpineCloud& cloud, const std::vector<Complex>& points);

}  // namespace mcmullen
