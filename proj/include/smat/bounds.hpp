#pragma once

#include "smat/poly.hpp"

namespace smat {

/// Magnitude bracket for every root of a polynomial: lower <= |root| <= upper,
/// rho = ceil(lg upper) (the exponent fed into division/evaluation plans).
/// degenerate marks a vanishing constant term (a root at 0, lower = 0).
struct RootBounds {
  PrecFloat lower;
  PrecFloat upper;
  long rho = 0;
  bool degenerate = false;
};

// ceil(lg x) for x > 0.
long ceil_lg(const PrecFloat& x);

/// Root magnitude bracket |a_0|/||f||_2 <= |root| <= ||f||_2/|a_d|, sharpened
/// to 2^{-t-1} <= |root| <= 2^{t+1} when all coefficients are (complex)
/// integers of magnitude <= 2^t. Throws ZeroLeadingCoefficient; a vanishing
/// a_0 yields a degenerate lower bound of 0 instead of failing.
RootBounds root_magnitude_bounds(const ApproxPoly& f);

/// Lower bound B with prod_{(i,j) in Omega} |gamma_i - gamma_j| >= B for any
/// set Omega of k root pairs of the square-free f, given |disc(f)| > 0.
/// The Mahler measure is replaced by its 2-norm upper bound throughout.
PrecFloat aggregate_separation_lower_bound(const ApproxPoly& f,
                                           const PrecFloat& discriminant_magnitude,
                                           long k);

/// Lower bound on |f(L)| from the distance of L to the closest root and the
/// aggregate local separations of f (lg prod Delta_i supplied by the caller).
PrecFloat eval_lower_bound(const ApproxPoly& f, const PrecFloat& dist_to_closest_root,
                           double lg_prod_delta);

}  // namespace smat
