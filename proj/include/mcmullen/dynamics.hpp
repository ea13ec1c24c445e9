#pragma once

// The family z -> z^n + a / z^n + c: evaluation, critical points and values,
// escape radii and escape-time orbits.

#include <array>
#include <complex>
#include <vector>

namespace mcmullen {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Maps an angle to (-pi, pi].
double wrap_angle(double theta);

/// Arg(z) in (-pi, pi]; a negative zero imaginary part still gives +pi.
double principal_arg(Complex z);

/// Square root with the branch cut on the negative real axis, Arg in (-pi/2, pi/2].
Complex principal_sqrt(Complex z);

/// |z|^(1/m) e^{i Arg(z)/m}.
Complex principal_root(Complex z, int m);

/// One member of the family. Construction enforces n >= 3 and a != 0.
class MapParams {
 public:
  MapParams(int n, Complex a, Complex c);

  int n() const noexcept { return n_; }
  Complex a() const noexcept { return a_; }
  Complex c() const noexcept { return c_; }
  /// Arg(a) in (-pi, pi].
  double psi() const noexcept { return psi_; }

 private:
  int n_;
  Complex a_;
  Complex c_;
  double psi_;
};

struct CriticalValues {
  Complex v_plus;
  Complex v_minus;
};

struct OrbitResult {
  bool escaped = false;
  int iterations = 0;
  double final_modulus = 0.0;
};

inline constexpr int kRenderMaxIter = 256;
inline constexpr int kVerifyMaxIter = 1000;

/// z^n + a/z^n + c. Throws PoleError at z = 0.
Complex eval_map(const MapParams& p, Complex z);

/// xi_k = |a|^{1/2n} exp(i (psi + 2 k pi) / 2n) for k = 0..2n-1. Even k map to
/// v_plus, odd k to v_minus.
std::vector<Complex> critical_points(const MapParams& p);

/// The k-th critical point, computed for an explicit branch of Arg(a).
Complex critical_point(const MapParams& p, int k, double psi);

CriticalValues critical_values(const MapParams& p);

/// s = max{4, |c|, |a|}; orbits with |z| >= s escape.
double escape_radius(const MapParams& p);

/// |a|^{1/n} / s; orbits with |z| <= this escape.
double inner_radius(const MapParams& p);

/// a^{1/n} / z, under which the map is symmetric. Throws PoleError at z = 0.
Complex involute(const MapParams& p, Complex z);

/// Iterates from z0 until |z| > threshold or max_iter steps. Hitting the pole
/// or a non-finite value counts as escape at that step.
OrbitResult iterate_orbit(const MapParams& p, Complex z0, int max_iter, double threshold);

}  // namespace mcmullen
