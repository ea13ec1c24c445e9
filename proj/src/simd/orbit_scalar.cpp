#include <algorithm>
#include <cstddef>
#include <limits>

#include "mcmullen/complex_arith.hpp"
#include "mcmullen/simd/kernels.hpp"

namespace mcmullen::simd::detail {

void escape_orbits_scalar(int n, int max_iter, const OrbitBatch& in, const OrbitOutput& out) {
  const std::size_t lanes = in.z_re.size();
  for (std::size_t i = 0; i < lanes; ++i) {
    arith::Cplx z{in.z_re[i], in.z_im[i]};
    const arith::Cplx a{in.a_re[i], in.a_im[i]};
    const arith::Cplx c{in.c_re[i], in.c_im[i]};
    const double thr2 = in.threshold2[i];

    std::int32_t iters = max_iter;
    std::uint8_t escaped = 0;
    double last = arith::norm2(z);
    for (int m = 1; m <= max_iter; ++m) {
      if (z.re == 0.0 && z.im == 0.0) {
        iters = m;
        escaped = 1;
        last = std::numeric_limits<double>::infinity();
        break;
      }
      z = arith::step(z, a, c, n);
      last = arith::norm2(z);
      // NaN compares false, so non-finite values count as escaped.
      if (!(last <= thr2)) {
        iters = m;
        escaped = 1;
        break;
      }
    }
    if (escaped && last != last) last = std::numeric_limits<double>::infinity();
    out.iterations[i] = iters;
    out.escaped[i] = escaped;
    out.final_norm2[i] = last;
  }
}

void min_distance2_scalar(std::span<const double> cloud_re, std::span<const double> cloud_im,
                          std::span<const double> q_re, std::span<const double> q_im,
                          std::span<double> out) {
  for (std::size_t q = 0; q < q_re.size(); ++q) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cloud_re.size(); ++i) {
      const double dx = cloud_re[i] - q_re[q];
      const double dy = cloud_im[i] - q_im[q];
      best = std::min(best, dx * dx + dy * dy);
    }
    out[q] = best;
  }
}

}  // namespace mcmullen::simd::detail
