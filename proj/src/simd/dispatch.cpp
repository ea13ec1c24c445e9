#include <cstdlib>
#include <string>

#include "mcmullen/error.hpp"
#include "mcmullen/simd/kernels.hpp"

namespace mcmullen::simd {
namespace {

bool cpu_has_avx2() {
#if defined(MCMULLEN_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Level resolve_active() {
  if (const char* env = std::getenv("MCMULLEN_SIMD")) {
    const std::string name(env);
    if (name == "scalar") return Level::Scalar;
    if (name == "avx2" && cpu_has_avx2()) return Level::Avx2;
  }
  return detected_level();
}

void check_orbit_spans(const OrbitBatch& in, const OrbitOutput& out) {
  const std::size_t n = in.z_re.size();
  const bool ok = in.z_im.size() == n && in.a_re.size() == n && in.a_im.size() == n &&
                  in.c_re.size() == n && in.c_im.size() == n && in.threshold2.size() == n &&
                  out.iterations.size() == n && out.escaped.size() == n &&
                  out.final_norm2.size() == n;
  if (!ok) throw DomainError("escape_orbits: span lengths differ");
}

}  // namespace

std::string_view level_name(Level level) {
  switch (level) {
    case Level::Scalar:
      return "scalar";
    case Level::Avx2:
      return "avx2";
  }
  return "unknown";
}

Level detected_level() { return cpu_has_avx2() ? Level::Avx2 : Level::Scalar; }

Level active_level() {
  static const Level level = resolve_active();
  return level;
}

bool level_available(Level level) { return level == Level::Scalar || cpu_has_avx2(); }

void escape_orbits(Level level, int n, int max_iter, const OrbitBatch& in, const OrbitOutput& out) {
  check_orbit_spans(in, out);
#if defined(MCMULLEN_BUILD_AVX2)
  if (level == Level::Avx2 && cpu_has_avx2()) {
    detail::escape_orbits_avx2(n, max_iter, in, out);
    return;
  }
#endif
  (void)level;
  detail::escape_orbits_scalar(n, max_iter, in, out);
}

void min_distance2(Level level, std::span<const double> cloud_re, std::span<const double> cloud_im,
                   std::span<const double> q_re, std::span<const double> q_im,
                   std::span<double> out) {
  if (cloud_re.size() != cloud_im.size() || q_re.size() != q_im.size() || q_re.size() != out.size())
    throw DomainError("min_distance2: span lengths differ");
#if defined(MCMULLEN_BUILD_AVX2)
  if (level == Level::Avx2 && cpu_has_avx2()) {
    detail::min_distance2_avx2(cloud_re, cloud_im, q_re, q_im, out);
    return;
  }
#endif
  (void)level;
  detail::min_distance2_scalar(cloud_re, cloud_im, q_re, q_im, out);
}

}  // namespace mcmullen::simd
