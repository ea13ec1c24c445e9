#pragma once

// Polynomial roots and the parameters a whose map has a fixed critical point.

#include <utility>
#include <vector>

#include "mcmullen/dynamics.hpp"
#include "mcmullen/regions.hpp"

namespace mcmullen {

/// Coefficients in ascending order: coeffs[i] multiplies z^i.
class PolyCoeffs {
 public:
  explicit PolyCoeffs(std::vector<Complex> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  Complex operator()(Complex z) const;
  double max_coeff_modulus() const;

 private:
  std::vector<Complex> coeffs_;
};

inline constexpr double kRootTol = 1e-12;
inline constexpr int kRootMaxIter = 200;
inline constexpr double kDedupeTol = 1e-9;

/// Acceptance bound on |p(r)|: tol (1 + max |coeff|) max(1, |r|)^d. Outside
/// the unit disk the power keeps the bound above the rounding error of
/// evaluating p in double precision.
double root_residual_bound(const PolyCoeffs& p, Complex r, double tol = kRootTol);

/// All d roots, with multiplicity, sorted by (Re, Im). Every root r satisfies
/// |p(r)| <= root_residual_bound(p, r, tol); otherwise SolverError.
std::vector<Complex> poly_roots(const PolyCoeffs& p, double tol = kRootTol,
                                int max_iter = kRootMaxIter);

/// Roots w of 2w^n - w + c, lifted to a = w^{2n} and deduplicated in a.
/// j counts from 1 in root order. For |c| >= 1 the count must equal n.
std::vector<WRegionSpec> fixed_critical_params(int n, Complex c, double dedupe_tol = kDedupeTol);

struct DiagonalCenter {
  Complex w;
  Complex a;
};

/// Fixed critical points on the slice c = t a: roots w of
/// t w^{2n-1} + 2 w^{n-1} - 1, with a = w^{2n}, deduplicated in a.
std::vector<DiagonalCenter> diagonal_fixed_params(int n, Complex t, double dedupe_tol = kDedupeTol);

/// |R(w) - w| for the given parameters.
double fixed_point_residual(const MapParams& p, Complex w);

}  // namespace mcmullen
