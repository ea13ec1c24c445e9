#pragma once

// Exact geometry of the regions used to certify polynomial-like behaviour:
// the polar rectangles U'_{a,k}, V_{c,j} and L_c, the ellipse E with its
// halves U^+ and U^-, and the parameter regions W_{c,j}.

#include "mcmullen/dynamics.hpp"

namespace mcmullen {

/// Annular sector {r_inner < |z| < r_outer, |wrap(Arg z - arg_center)| < arg_halfwidth};
/// inequalities are non-strict when `closed`.
struct PolarRect {
  double r_inner = 0.0;
  double r_outer = 0.0;
  double arg_center = 0.0;
  double arg_halfwidth = 0.0;
  bool closed = false;
};

bool polar_contains(const PolarRect& rect, Complex z);

/// Euclidean distance from z to the boundary of the sector (two arcs, two
/// radial segments).
double polar_boundary_distance(const PolarRect& rect, Complex z);

/// Points on the boundary, walked counter-clockwise: outer arc forward, far
/// ray inward, inner arc backward, near ray outward. `per_piece` samples per
/// piece, endpoints included.
std::vector<Complex> polar_boundary(const PolarRect& rect, int per_piece);

enum class HalfSign : int { Minus = -1, Full = 0, Plus = 1 };

/// Ellipse centred at `center`, major axis rotated by `rotation`. A half is
/// cut along the minor axis; the minor axis belongs to both halves.
struct HalfEllipseSpec {
  Complex center;
  double rotation = 0.0;
  double semi_major = 0.0;
  double semi_minor = 0.0;
  HalfSign half = HalfSign::Full;
};

/// The ellipse E of the map: center c, rotation psi/2, semi-axes 2^n +- |a|/2^n.
/// Plus selects the half holding v_plus, Minus the half holding v_minus.
HalfEllipseSpec ellipse_spec(const MapParams& p, HalfSign half);

/// Same, for an explicit branch psi of Arg(a) (psi may leave (-pi, pi] when a
/// is continued across the negative real axis).
HalfEllipseSpec ellipse_spec(const MapParams& p, HalfSign half, double psi);

/// Coordinates of z in the ellipse's own frame (major axis along +x).
Complex ellipse_frame(const HalfEllipseSpec& spec, Complex z);

bool half_ellipse_contains(const HalfEllipseSpec& spec, Complex z);

/// Exact Euclidean distance from z to the ellipse curve.
double ellipse_curve_distance(const HalfEllipseSpec& spec, Complex z);

/// Signed distance to the boundary of the (half-)ellipse region: positive
/// inside, negative outside. Exact inside; outside it is a lower bound on the
/// true distance in magnitude.
double half_ellipse_margin(const HalfEllipseSpec& spec, Complex z);

/// U'_{a,k}: {|a|^{1/n}/2 < |z| < 2, |Arg z - (psi + 2 k pi)/2n| < pi/2n}, open.
/// Throws DegenerateRegionError when |a| >= 4^n.
PolarRect u_prime_rect(const MapParams& p, int k);
PolarRect u_prime_rect(const MapParams& p, int k, double psi);

/// Polar rectangle in the a-plane that holds the boundedness locus for large n
/// when |c| > 1 + eps. Throws HypothesisError otherwise.
PolarRect l_c_rect(Complex c, double eps);

/// Data for one fixed critical point: a_j = w_j^{2n}, R_{n,a_j,c}(w_j) = w_j and
/// w_j = xi_k for a_j.
struct WRegionSpec {
  Complex c;
  int n = 0;
  int j = 0;
  Complex w;
  Complex a_j;
  int k = 0;
};

/// k such that Arg(w_j) = (Arg(a_j) + 2 k pi)/2n modulo full turns. Throws
/// InconsistencyError when the quotient is not within 0.25 of an integer.
int k_of_j(const WRegionSpec& w);

/// V_{c,j} = {1/2 <= |z| <= 2, |Arg z - Arg w_j| <= pi/2n}.
PolarRect v_rect(const WRegionSpec& w);

/// Boundary curves of W_{c,j}:
///   1: (e^{i param}/4 - c/2)^2           param = theta in [0, 2pi]
///   2: (e^{i param} - c/2)^2             param = theta in [0, 2pi]
///   3: ((param/2) e^{i(Arg w_j + pi/2n)} - c/2)^2,  param = r in [1/2, 2]
///   4: ((param/2) e^{i(Arg w_j - pi/2n)} - c/2)^2,  param = r in [1/2, 2]
Complex w_boundary_point(const WRegionSpec& w, int segment, double param);

/// Pull-back of z in the dynamical plane to the parameter a with c +- 2 sqrt(a) = z.
Complex pullback_to_parameter(Complex c, Complex z);

/// a is in closure(W_{c,j}) iff one of its critical values lies in closure(V_{c,j}).
bool w_region_contains(const WRegionSpec& w, Complex a);

/// Branch of Arg(a) continued from Arg(a_j): psi_j + wrap(Arg a - psi_j).
double continued_psi(const WRegionSpec& w, Complex a);

/// Index of U'_{a,k(j)} after continuation, expressed for the principal branch of
/// Arg(a): the same set as U'_{a,k} with the continued psi.
int principal_index(const WRegionSpec& w, Complex a);

/// The critical value that the k(j)-th critical point maps to, with sqrt(a)
/// continued from a_j: c + (-1)^k 2 sqrt(a).
Complex tracked_critical_value(const WRegionSpec& w, Complex a);

}  // namespace mcmullen
