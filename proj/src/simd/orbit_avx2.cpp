// AVX2 variants, four double lanes per register. Compiled with -mavx2 only;
// the dispatcher guards every call with a CPU check.

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>

#include "mcmullen/simd/kernels.hpp"

namespace mcmullen::simd::detail {
namespace {

struct V2 {
  __m256d re;
  __m256d im;
};

inline V2 vmul(V2 x, V2 y) {
  return {_mm256_sub_pd(_mm256_mul_pd(x.re, y.re), _mm256_mul_pd(x.im, y.im)),
          _mm256_add_pd(_mm256_mul_pd(x.re, y.im), _mm256_mul_pd(x.im, y.re))};
}

inline V2 vdiv(V2 x, V2 y) {
  const __m256d d = _mm256_add_pd(_mm256_mul_pd(y.re, y.re), _mm256_mul_pd(y.im, y.im));
  const __m256d re = _mm256_add_pd(_mm256_mul_pd(x.re, y.re), _mm256_mul_pd(x.im, y.im));
  const __m256d im = _mm256_sub_pd(_mm256_mul_pd(x.im, y.re), _mm256_mul_pd(x.re, y.im));
  return {_mm256_div_pd(re, d), _mm256_div_pd(im, d)};
}

inline __m256d vnorm2(V2 z) {
  return _mm256_add_pd(_mm256_mul_pd(z.re, z.re), _mm256_mul_pd(z.im, z.im));
}

constexpr std::size_t kLanes = 4;

// Runs one block of exactly four lanes (padded by the caller).
void orbit_block(int n, int max_iter, const double* zr, const double* zi, const double* ar,
                 const double* ai, const double* cr, const double* ci, const double* t2,
                 std::int32_t* iters_out, std::uint8_t* esc_out, double* norm_out) {
  V2 z{_mm256_loadu_pd(zr), _mm256_loadu_pd(zi)};
  const V2 a{_mm256_loadu_pd(ar), _mm256_loadu_pd(ai)};
  const V2 c{_mm256_loadu_pd(cr), _mm256_loadu_pd(ci)};
  const __m256d thr2 = _mm256_loadu_pd(t2);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());

  __m256d done = zero;  // all-ones bits in lanes that have decided
  __m256d last = vnorm2(z);
  __m256d iters = _mm256_set1_pd(static_cast<double>(max_iter));

  for (int m = 1; m <= max_iter; ++m) {
    const __m256d step_no = _mm256_set1_pd(static_cast<double>(m));

    const __m256d pole = _mm256_and_pd(_mm256_cmp_pd(z.re, zero, _CMP_EQ_OQ),
                                       _mm256_cmp_pd(z.im, zero, _CMP_EQ_OQ));
    const __m256d new_pole = _mm256_andnot_pd(done, pole);
    last = _mm256_blendv_pd(last, inf, new_pole);
    iters = _mm256_blendv_pd(iters, step_no, new_pole);
    done = _mm256_or_pd(done, new_pole);

    V2 zn = z;
    for (int k = 1; k < n; ++k) zn = vmul(zn, z);
    const V2 q = vdiv(a, zn);
    const V2 next{_mm256_add_pd(_mm256_add_pd(zn.re, q.re), c.re),
                  _mm256_add_pd(_mm256_add_pd(zn.im, q.im), c.im)};
    const __m256d nn = vnorm2(next);

    // Lanes already decided keep their state.
    z.re = _mm256_blendv_pd(next.re, z.re, done);
    z.im = _mm256_blendv_pd(next.im, z.im, done);
    last = _mm256_blendv_pd(nn, last, done);

    const __m256d inside = _mm256_cmp_pd(nn, thr2, _CMP_LE_OQ);
    const __m256d new_escape = _mm256_andnot_pd(done, _mm256_andnot_pd(inside, _mm256_castsi256_pd(
                                                                           _mm256_set1_epi64x(-1))));
    iters = _mm256_blendv_pd(iters, step_no, new_escape);
    done = _mm256_or_pd(done, new_escape);

    if (_mm256_movemask_pd(done) == 0xF) break;
  }

  alignas(32) std::array<double, kLanes> it{}, nm{};
  _mm256_store_pd(it.data(), iters);
  _mm256_store_pd(nm.data(), last);
  const int done_mask = _mm256_movemask_pd(done);
  for (std::size_t l = 0; l < kLanes; ++l) {
    iters_out[l] = static_cast<std::int32_t>(it[l]);
    esc_out[l] = static_cast<std::uint8_t>((done_mask >> l) & 1);
    norm_out[l] = (esc_out[l] && nm[l] != nm[l]) ? std::numeric_limits<double>::infinity() : nm[l];
  }
}

}  // namespace

void escape_orbits_avx2(int n, int max_iter, const OrbitBatch& in, const OrbitOutput& out) {
  const std::size_t lanes = in.z_re.size();
  std::size_t i = 0;
  for (; i + kLanes <= lanes; i += kLanes) {
    orbit_block(n, max_iter, &in.z_re[i], &in.z_im[i], &in.a_re[i], &in.a_im[i], &in.c_re[i],
                &in.c_im[i], &in.threshold2[i], &out.iterations[i], &out.escaped[i],
                &out.final_norm2[i]);
  }
  if (i == lanes) return;

  // Tail: pad with copies of the last real lane and discard the extras.
  std::array<double, kLanes> zr, zi, ar, ai, cr, ci, t2;
  for (std::size_t l = 0; l < kLanes; ++l) {
    const std::size_t src = std::min(i + l, lanes - 1);
    zr[l] = in.z_re[src];
    zi[l] = in.z_im[src];
    ar[l] = in.a_re[src];
    ai[l] = in.a_im[src];
    cr[l] = in.c_re[src];
    ci[l] = in.c_im[src];
    t2[l] = in.threshold2[src];
  }
  std::array<std::int32_t, kLanes> it;
  std::array<std::uint8_t, kLanes> es;
  std::array<double, kLanes> nm;
  orbit_block(n, max_iter, zr.data(), zi.data(), ar.data(), ai.data(), cr.data(), ci.data(),
              t2.data(), it.data(), es.data(), nm.data());
  for (std::size_t l = 0; i + l < lanes; ++l) {
    out.iterations[i + l] = it[l];
    out.escaped[i + l] = es[l];
    out.final_norm2[i + l] = nm[l];
  }
}

void min_distance2_avx2(std::span<const double> cloud_re, std::span<const double> cloud_im,
                        std::span<const double> q_re, std::span<const double> q_im,
                        std::span<double> out) {
  const std::size_t m = cloud_re.size();
  const std::size_t body = m - m % kLanes;
  for (std::size_t q = 0; q < q_re.size(); ++q) {
    const __m256d qx = _mm256_set1_pd(q_re[q]);
    const __m256d qy = _mm256_set1_pd(q_im[q]);
    __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < body; i += kLanes) {
      const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(&cloud_re[i]), qx);
      const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(&cloud_im[i]), qy);
      best = _mm256_min_pd(best, _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
    }
    alignas(32) std::array<double, kLanes> lanes{};
    _mm256_store_pd(lanes.data(), best);
    double b = std::min(std::min(lanes[0], lanes[1]), std::min(lanes[2], lanes[3]));
    for (std::size_t i = body; i < m; ++i) {
      const double dx = cloud_re[i] - q_re[q];
      const double dy = cloud_im[i] - q_im[q];
      b = std::min(b, dx * dx + dy * dy);
    }
    out[q] = b;
  }
}

}  // namespace mcmullen::simd::detail
