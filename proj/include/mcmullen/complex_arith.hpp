#pragma once

// Explicit complex arithmetic shared by the scalar and SIMD orbit kernels.
// std::complex multiplication and division are allowed to take different
// code paths (scaling, NaN recovery), which would break lane-for-lane
// agreement with the vector kernels, so the iteration uses these instead.

#include <complex>

namespace mcmullen::arith {

struct Cplx {
  double re;
  double im;
};

inline Cplx mul(Cplx x, Cplx y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

/// Textbook quotient without scaling; overflow and underflow surface as
/// non-finite values, which the escape test treats as escape.
inline Cplx div(Cplx x, Cplx y) {
  const double d = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / d, (x.im * y.re - x.re * y.im) / d};
}

/// z^n by n - 1 successive multiplications (n >= 1).
inline Cplx pow_n(Cplx z, int n) {
  Cplx r = z;
  for (int i = 1; i < n; ++i) r = mul(r, z);
  return r;
}

inline double norm2(Cplx z) { return z.re * z.re + z.im * z.im; }

/// One step of z -> z^n + a / z^n + c.
inline Cplx step(Cplx z, Cplx a, Cplx c, int n) {
  const Cplx zn = pow_n(z, n);
  const Cplx q = div(a, zn);
  return {zn.re + q.re + c.re, zn.im + q.im + c.im};
}

inline Cplx from_std(std::complex<double> z) { return {z.real(), z.imag()}; }
inline std::complex<double> to_std(Cplx z) { return {z.re, z.im}; }

}  // namespace mcmullen::arith
