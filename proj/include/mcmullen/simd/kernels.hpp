#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference and, where
// the build and CPU allow, an AVX2 variant; the variants produce identical
// results (same operation order, no fused multiply-add) and are selected at
// runtime.

#include <cstdint>
#include <span>
#include <string_view>

namespace mcmullen::simd {

enum class Level { Scalar, Avx2 };

std::string_view level_name(Level level);

/// Best level compiled in and supported by this CPU.
Level detected_level();

/// Level used by default: detected_level(), unless the MCMULLEN_SIMD
/// environment variable names a supported level ("scalar" or "avx2").
Level active_level();

/// True if `level` can run on this machine.
bool level_available(Level level);

/// Structure-of-arrays batch of independent orbits of z -> z^n + a/z^n + c.
/// Each lane has its own start point, coefficients and squared threshold.
struct OrbitBatch {
  std::span<const double> z_re, z_im;
  std::span<const double> a_re, a_im;
  std::span<const double> c_re, c_im;
  std::span<const double> threshold2;
};

struct OrbitOutput {
  std::span<std::int32_t> iterations;
  std::span<std::uint8_t> escaped;
  /// |z|^2 at the decision step; +inf on a pole hit.
  std::span<double> final_norm2;
};

/// Escape-time iteration for every lane. Lane semantics match
/// mcmullen::iterate_orbit exactly.
void escape_orbits(Level level, int n, int max_iter, const OrbitBatch& in, const OrbitOutput& out);
inline void escape_orbits(int n, int max_iter, const OrbitBatch& in, const OrbitOutput& out) {
  escape_orbits(active_level(), n, max_iter, in, out);
}

/// For each query point, the minimum squared distance to the point cloud.
void min_distance2(Level level, std::span<const double> cloud_re, std::span<const double> cloud_im,
                   std::span<const double> q_re, std::span<const double> q_im,
                   std::span<double> out);
inline void min_distance2(std::span<const double> cloud_re, std::span<const double> cloud_im,
                          std::span<const double> q_re, std::span<const double> q_im,
                          std::span<double> out) {
  min_distance2(active_level(), cloud_re, cloud_im, q_re, q_im, out);
}

namespace detail {
void escape_orbits_scalar(int n, int max_iter, const OrbitBatch& in, const OrbitOutput& out);
void min_distance2_scalar(std::span<const double> cloud_re, std::span<const double> cloud_im,
                          std::span<const double> q_re, std::span<const double> q_im,
                          std::span<double> out);
#if defined(MCMULLEN_BUILD_AVX2)
void escape_orbits_avx2(int n, int max_iter, const OrbitBatch& in, const OrbitOutput& out);
void min_distance2_avx2(std::span<const double> cloud_re, std::span<const double> cloud_im,
                        std::span<const double> q_re, std::span<const double> q_im,
                        std::span<double> out);
#endif
}  // namespace detail

}  // namespace mcmullen::simd
