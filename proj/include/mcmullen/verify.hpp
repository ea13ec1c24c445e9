#pragma once

// Sampled checks of the hypotheses behind the polynomial-like restrictions.
// Each check counts failing samples instead of stopping at the first one.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcmullen/dynamics.hpp"
#include "mcmullen/regions.hpp"

namespace mcmullen {

struct VerificationReport {
  std::string check_name;
  std::string params;
  long long samples = 0;
  long long failures = 0;
  /// Signed distance of the worst sample from the asserted boundary;
  /// positive means every sample passed with that much room.
  double worst_margin = 0.0;
  bool pass = false;
  /// Check-specific headline number (max deviation, winding turns, ...).
  std::string detail_name;
  double detail = 0.0;
  std::optional<long long> winding;
};

inline constexpr const char* kReportCsvHeader = "check,params,samples,failures,worst_margin,pass";
std::string report_csv_row(const VerificationReport& r);

inline constexpr double kImageTolerance = 1e-8;
inline constexpr double kBoundaryDilation = 1e-6;

/// Images of the four boundary pieces of U'_{a,k}: the arcs must land on the
/// ellipse curve and the rays on its minor axis, each piece on the half picked
/// by the parity of k. `samples` points per piece. detail = max deviation
/// relative to the semi-major axis; worst_margin = tolerance - that.
VerificationReport verify_image_ellipse(const MapParams& p, int k, int samples);

/// Same against an explicit ellipse (for negative controls).
VerificationReport verify_image_ellipse(const MapParams& p, int k, int samples,
                                        const HalfEllipseSpec& ellipse);

/// closure(U'_{a,k}) inside the half ellipse of parity k: boundary points plus
/// an interior polar grid.
VerificationReport verify_containment(const MapParams& p, int k, int samples);

/// Winding of v(a) - xi(a) as a runs once around the boundary of W_{c,j}, and
/// membership of v(a) in U_{a,k} minus closure(U'_{a,k}) along the way.
/// Throws UnderSamplingError if consecutive samples turn by pi/2 or more.
VerificationReport verify_winding(const WRegionSpec& w, int boundary_samples);

/// Total turning of values[i] - centers[i] along a closed sampled path, in
/// full turns. Throws UnderSamplingError on an increment of pi/2 or more.
double winding_turns(std::span<const Complex> values, std::span<const Complex> centers);

/// Points outside the annulus A(t_inner, s) escape under the threshold s.
VerificationReport verify_annulus_escape(const MapParams& p, int grid, int max_iter,
                                         int threads = 0);

/// Parameters a of the diagonal slice c = t a, farther than eps from the
/// spine, have both critical orbits escaping.
VerificationReport verify_spine_locus(int n, Complex t, double eps, int grid, int max_iter,
                                      int threads = 0);

/// The a* = (1/4)^{n/(n-1)} threshold of the v_minus sign regimes.
double vminus_threshold(int n);

enum class VminusRegime { None = 0, LargeA = 1, SmallCBelow = 2, SmallCAbove = 3 };

VminusRegime vminus_regime(int n, double a, double c);

/// Direct sign of v_minus = c - 2 sqrt(a) against the regime's claim.
/// Throws HypothesisError outside 0 < a <= 4, 0 < c < a^{1/n}/max{4, a, c}.
VerificationReport verify_vminus_sign(int n, double a, double c);

/// "1.5+2i"-style text with round-trip precision.
std::string format_complex(Complex z);

}  // namespace mcmullen
