#include "smat/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "smat/errors.hpp"

namespace smat {

namespace {

constexpr long kBoundPrec = 128;

bool is_complex_integer(const ComplexApprox& c) {
  return mpfr_integer_p(c.re.raw()) != 0 && mpfr_integer_p(c.im.raw()) != 0;
}

bool all_integer(const ApproxPoly& f) {
  for (const auto& c : f.coeffs)
    if (!is_complex_integer(c)) return false;
  return true;
}

// |z| rounded down / up.
PrecFloat cabs_dir(const ComplexApprox& z, mpfr_rnd_t rnd) {
  PrecFloat r(kBoundPrec);
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), rnd);
  return r;
}

}  // namespace

long ceil_lg(const PrecFloat& x) {
  long e = x.exp2_of();  // 2^{e-1} <= x < 2^e
  PrecFloat p = PrecFloat::pow2(e - 1, x.prec());
  return (x == p) ? e - 1 : e;
}

RootBounds root_magnitude_bounds(const ApproxPoly& f) {
  if (f.zero || f.coeffs.back().is_zero()) throw ZeroLeadingCoefficient();

  RootBounds rb;
  PrecFloat n2u = f.norm2_upper(kBoundPrec);
  PrecFloat n2d = f.norm2_lower(kBoundPrec);
  PrecFloat ad_lo = cabs_dir(f.coeffs.back(), MPFR_RNDD);

  rb.upper = PrecFloat(kBoundPrec);
  mpfr_div(rb.upper.raw(), n2u.raw(), ad_lo.raw(), MPFR_RNDU);

  const ComplexApprox& a0 = f.coeffs.front();
  if (a0.is_zero()) {
    rb.degenerate = true;
    rb.lower = PrecFloat(kBoundPrec);  // 0
  } else {
    PrecFloat a0_lo = cabs_dir(a0, MPFR_RNDD);
    rb.lower = PrecFloat(kBoundPrec);
    mpfr_div(rb.lower.raw(), a0_lo.raw(), n2u.raw(), MPFR_RNDD);
  }
  (void)n2d;

  if (all_integer(f)) {
    long t = f.tau;
    PrecFloat up_z = PrecFloat::pow2(t + 1, kBoundPrec);
    if (up_z < rb.upper) rb.upper = up_z;
    if (!rb.degenerate) {
      PrecFloat lo_z = PrecFloat::pow2(-t - 1, kBoundPrec);
      if (lo_z > rb.lower) rb.lower = lo_z;
    }
  }

  rb.rho = ceil_lg(rb.upper);
  return rb;
}

PrecFloat aggregate_separation_lower_bound(const ApproxPoly& f,
                                           const PrecFloat& discriminant_magnitude,
                                           long k) {
  if (!(discriminant_magnitude > PrecFloat(0.0, 64))) throw NonPositiveDiscriminant();
  const long d = f.degree;
  const long p = kBoundPrec;

  // 2^{k - d - d(d-1)/2} * |a0|^k * ||f||_2^{1-d-k} * sqrt|disc|, rounded down.
  PrecFloat b = PrecFloat::pow2(k - d - d * (d - 1) / 2, p);

  PrecFloat a0 = cabs_dir(f.coeffs.front(), MPFR_RNDD);
  PrecFloat a0k(p);
  mpfr_pow_si(a0k.raw(), a0.raw(), k, MPFR_RNDD);
  mpfr_mul(b.raw(), b.raw(), a0k.raw(), MPFR_RNDD);

  PrecFloat n2 = f.norm2_upper(p);  // exponent 1-d-k <= 0: upper bound rounds the result down
  PrecFloat n2p(p);
  mpfr_pow_si(n2p.raw(), n2.raw(), 1 - d - k, MPFR_RNDD);
  mpfr_mul(b.raw(), b.raw(), n2p.raw(), MPFR_RNDD);

  PrecFloat sq(p);
  mpfr_sqrt(sq.raw(), discriminant_magnitude.raw(), MPFR_RNDD);
  mpfr_mul(b.raw(), b.raw(), sq.raw(), MPFR_RNDD);

  if (all_integer(f) && d >= 1) {
    // - lg prod <= 3d^2 + 3d tau + 4d lg d for integer inputs.
    double lgd = d > 1 ? std::log2(static_cast<double>(d)) : 0.0;
    long e = static_cast<long>(3.0 * d * d + 3.0 * d * std::max(f.tau, 0L) + 4.0 * d * lgd) + 1;
    PrecFloat bz = PrecFloat::pow2(-e, p);
    if (bz > b) b = bz;
  }
  return b;
}

PrecFloat eval_lower_bound(const ApproxPoly& f, const PrecFloat& dist_to_closest_root,
                           double lg_prod_delta) {
  const long p = kBoundPrec;
  if (dist_to_closest_root.is_zero()) return PrecFloat(p);

  PrecFloat b(p);
  PrecFloat ad = cabs_dir(f.coeffs.back(), MPFR_RNDD);
  mpfr_pow_ui(b.raw(), ad.raw(), 7, MPFR_RNDD);

  PrecFloat d6(p);
  mpfr_pow_ui(d6.raw(), dist_to_closest_root.raw(), 6, MPFR_RNDD);
  mpfr_mul(b.raw(), b.raw(), d6.raw(), MPFR_RNDD);

  PrecFloat n2 = f.norm2_upper(p);
  PrecFloat m6(p);
  mpfr_pow_si(m6.raw(), n2.raw(), -6, MPFR_RNDD);
  mpfr_mul(b.raw(), b.raw(), m6.raw(), MPFR_RNDD);

  PrecFloat sc(p);
  mpfr_set_d(sc.raw(), lg_prod_delta - 6.0, MPFR_RNDD);
  mpfr_exp2(sc.raw(), sc.raw(), MPFR_RNDD);
  mpfr_mul(b.raw(), b.raw(), sc.raw(), MPFR_RNDD);
  return b;
}

}  // namespace smat
