#pragma once

#include "smat/prec.hpp"

namespace smat {

/// Rectangular complex interval [re_lo, re_hi] + i[im_lo, im_hi].
/// Endpoints round outward, so any chain of box operations keeps the exact
/// value of the underlying scalar computation inside the box.
struct ComplexBox {
  PrecFloat re_lo, re_hi, im_lo, im_hi;

  ComplexBox() = default;
  explicit ComplexBox(long prec) : re_lo(prec), re_hi(prec), im_lo(prec), im_hi(prec) {}

  // Degenerate (point) box around z.
  static ComplexBox point(const ComplexApprox& z, long prec);
  // Box of half-width 2^-acc around z in both axes.
  static ComplexBox around(const ComplexApprox& z, long halfwidth_exp, long prec);

  long prec() const { return std::max(std::max(re_lo.prec(), re_hi.prec()), std::max(im_lo.prec(), im_hi.prec())); }

  bool valid() const { return re_lo <= re_hi && im_lo <= im_hi; }

  // wid = max extent over the two axes, rounded up.
  PrecFloat wid() const;

  bool contains_zero() const {
    return re_lo.sign() <= 0 && re_hi.sign() >= 0 && im_lo.sign() <= 0 && im_hi.sign() >= 0;
  }
  bool contains(const ComplexApprox& z) const {
    return re_lo <= z.re && z.re <= re_hi && im_lo <= z.im && z.im <= im_hi;
  }

  ComplexApprox midpoint(long prec) const;

  // Scale by 2^e; exact, containment preserved exactly.
  ComplexBox scaled_pow2(long e) const {
    ComplexBox b = *this;
    b.re_lo.mul_2si(e);
    b.re_hi.mul_2si(e);
    b.im_lo.mul_2si(e);
    b.im_hi.mul_2si(e);
    return b;
  }

  // Exponent tau with |z| <= 2^tau for every z in the box.
  long mag_exp_upper() const;
  // Exponent -nu with |z| >= 2^-nu for every z in the box; requires the box
  // to exclude the origin in at least one axis.
  long mag_exp_lower() const;
};

// Containment of {a+b}; wid(out) <= 2 wid(I) + 2 wid(J).
ComplexBox box_add(const ComplexBox& I, const ComplexBox& J, long prec);
// Containment of {a-b}; same width bound as box_add.
ComplexBox box_sub(const ComplexBox& I, const ComplexBox& J, long prec);
// Containment of {a*b}; wid(out) <= 2^{tau+1} wid(J) + 2^{sigma+1} wid(I)
// for |I| <= 2^tau, |J| <= 2^sigma.
ComplexBox box_mul(const ComplexBox& I, const ComplexBox& J, long prec);
// Containment of {1/a}; throws ZeroInBox if the origin may lie in I.
// wid(out) <= 2^{4 nu + 2 tau + 3} wid(I) for 2^-nu <= |I| <= 2^tau.
ComplexBox box_recip(const ComplexBox& I, long prec);

}  // namespace smat
