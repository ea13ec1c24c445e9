#include "mcmullen/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mcmullen/error.hpp"

namespace mcmullen {

PolyCoeffs::PolyCoeffs(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw DomainError("polynomial must have degree >= 1");
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw DomainError("polynomial coefficients must be finite");
  }
  if (std::abs(coeffs_.back()) == 0.0) throw DomainError("leading coefficient is zero");
}

Complex PolyCoeffs::operator()(Complex z) const {
  Complex acc = coeffs_.back();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double PolyCoeffs::max_coeff_modulus() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

namespace {

struct Eval {
  Complex p;
  Complex dp;
};

Eval horner(const std::vector<Complex>& c, Complex z) {
  Complex p = c.back();
  Complex dp = 0.0;
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

bool less_re_im(Complex x, Complex y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

}  // namespace

double root_residual_bound(const PolyCoeffs& p, Complex r, double tol) {
  return tol * (1.0 + p.max_coeff_modulus()) * std::pow(std::max(1.0, std::abs(r)), p.degree());
}

std::vector<Complex> poly_roots(const PolyCoeffs& poly, double tol, int max_iter) {
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  if (max_iter < 1) throw DomainError("max_iter must be >= 1");
  const auto& c = poly.coeffs();
  const int d = poly.degree();
  const double lead = std::abs(c.back());
  double rest = 0.0;
  for (int i = 0; i < d; ++i) rest = std::max(rest, std::abs(c[i]));

  if (d == 1) {
    Complex r = -c[0] / c[1];
    return {r};
  }

  // Ring of starting points, jittered so no symmetry of p traps the iteration.
  std::mt19937_64 rng(0x5EED);
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  const double radius = 1.0 + rest / lead;
  std::vector<Complex> z(d);
  for (int i = 0; i < d; ++i) {
    double theta = kTwoPi * (i + 0.5 + jitter(rng)) / d + 0.4;
    z[i] = std::polar(radius, theta);
  }

  std::vector<double> residual(d);
  auto residuals_ok = [&] {
    bool ok = true;
    for (int i = 0; i < d; ++i) {
      residual[i] = std::abs(horner(c, z[i]).p);
      if (!(residual[i] <= root_residual_bound(poly, z[i], tol))) ok = false;
    }
    return ok;
  };

  int polish = 0;
  for (int iter = 0; iter < max_iter; ++iter) {
    double max_step = 0.0;
    for (int i = 0; i < d; ++i) {
      Eval e = horner(c, z[i]);
      if (e.p == Complex(0.0)) continue;
      Complex ratio = e.p / e.dp;
      Complex sum = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      }
      Complex step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (residuals_ok()) {
      // A few extra sweeps sharpen roots whose residual passed early.
      if (max_step < 1e-15 || ++polish >= 4) {
        std::sort(z.begin(), z.end(), less_re_im);
        return z;
      }
    }
  }
  residuals_ok();
  throw SolverError("root finder did not converge in " + std::to_string(max_iter) + " iterations",
                    residual);
}

double fixed_point_residual(const MapParams& p, Complex w) {
  return std::abs(eval_map(p, w) - w);
}

namespace {

Complex power(Complex w, int m) {
  Complex r = 1.0;
  for (int i = 0; i < m; ++i) r *= w;
  return r;
}

bool same_a(Complex x, Complex y, double tol) {
  return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y));
}

}  // namespace

std::vector<WRegionSpec> fixed_critical_params(int n, Complex c, double dedupe_tol) {
  if (n < 3) throw DomainError("n must be >= 3");
  if (std::abs(c) == 0.0) throw DomainError("c must be nonzero");
  std::vector<Complex> coeffs(n + 1, 0.0);
  coeffs[0] = c;
  coeffs[1] = -1.0;
  coeffs[n] = 2.0;
  std::vector<Complex> roots = poly_roots(PolyCoeffs(coeffs));

  std::vector<WRegionSpec> out;
  for (const Complex& w : roots) {
    if (std::abs(w) == 0.0) continue;
    Complex a = power(w, 2 * n);
    bool dup = false;
    for (const auto& s : out) dup = dup || same_a(s.a_j, a, dedupe_tol);
    if (dup) continue;
    WRegionSpec s{c, n, static_cast<int>(out.size()) + 1, w, a, 0};
    s.k = k_of_j(s);
    out.push_back(s);
  }
  // The n-count is only reproducible for |c| >= 1; below that every root
  // already gives a distinct a.
  if (std::abs(c) >= 1.0 && static_cast<int>(out.size()) != n) {
    throw InconsistencyError("expected " + std::to_string(n) + " distinct centers, found " +
                             std::to_string(out.size()));
  }
  return out;
}

std::vector<DiagonalCenter> diagonal_fixed_params(int n, Complex t, double dedupe_tol) {
  if (n < 3) throw DomainError("n must be >= 3");
  if (std::abs(t) == 0.0) throw DomainError("t must be nonzero");
  std::vector<Complex> coeffs(2 * n, 0.0);
  coeffs[0] = -1.0;
  coeffs[n - 1] = 2.0;
  coeffs[2 * n - 1] = t;
  std::vector<Complex> roots = poly_roots(PolyCoeffs(coeffs));

  std::vector<DiagonalCenter> out;
  for (const Complex& w : roots) {
    if (std::abs(w) == 0.0) continue;
    Complex a = power(w, 2 * n);
    bool dup = false;
    for (const auto& s : out) dup = dup || same_a(s.a, a, dedupe_tol);
    if (dup) continue;
    double res = fixed_point_residual(MapParams(n, a, t * a), w);
    if (!(res <= 1e-8)) {
      throw InconsistencyError("diagonal center is not a fixed point (residual " +
                               std::to_string(res) + ")");
    }
    out.push_back({w, a});
  }
  return out;
}

}  // namespace mcmullen
