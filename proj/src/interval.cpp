#include "smat/interval.hpp"

#include "smat/errors.hpp"

namespace smat {

namespace {

struct RealIv {
  PrecFloat lo, hi;
};

RealIv iv_add(const RealIv& a, const RealIv& b, long prec) {
  RealIv r{PrecFloat(prec), PrecFloat(prec)};
  mpfr_add(r.lo.raw(), a.lo.raw(), b.lo.raw(), MPFR_RNDD);
  mpfr_add(r.hi.raw(), a.hi.raw(), b.hi.raw(), MPFR_RNDU);
  return r;
}

RealIv iv_sub(const RealIv& a, const RealIv& b, long prec) {
  RealIv r{PrecFloat(prec), PrecFloat(prec)};
  mpfr_sub(r.lo.raw(), a.lo.raw(), b.hi.raw(), MPFR_RNDD);
  mpfr_sub(r.hi.raw(), a.hi.raw(), b.lo.raw(), MPFR_RNDU);
  return r;
}

RealIv iv_mul(const RealIv& a, const RealIv& b, long prec) {
  RealIv r{PrecFloat(prec), PrecFloat(prec)};
  PrecFloat t(prec);
  mpfr_mul(r.lo.raw(), a.lo.raw(), b.lo.raw(), MPFR_RNDD);
  mpfr_mul(t.raw(), a.lo.raw(), b.hi.raw(), MPFR_RNDD);
  mpfr_min(r.lo.raw(), r.lo.raw(), t.raw(), MPFR_RNDD);
  mpfr_mul(t.raw(), a.hi.raw(), b.lo.raw(), MPFR_RNDD);
  mpfr_min(r.lo.raw(), r.lo.raw(), t.raw(), MPFR_RNDD);
  mpfr_mul(t.raw(), a.hi.raw(), b.hi.raw(), MPFR_RNDD);
  mpfr_min(r.lo.raw(), r.lo.raw(), t.raw(), MPFR_RNDD);

  mpfr_mul(r.hi.raw(), a.lo.raw(), b.lo.raw(), MPFR_RNDU);
  mpfr_mul(t.raw(), a.lo.raw(), b.hi.raw(), MPFR_RNDU);
  mpfr_max(r.hi.raw(), r.hi.raw(), t.raw(), MPFR_RNDU);
  mpfr_mul(t.raw(), a.hi.raw(), b.lo.raw(), MPFR_RNDU);
  mpfr_max(r.hi.raw(), r.hi.raw(), t.raw(), MPFR_RNDU);
  mpfr_mul(t.raw(), a.hi.raw(), b.hi.raw(), MPFR_RNDU);
  mpfr_max(r.hi.raw(), r.hi.raw(), t.raw(), MPFR_RNDU);
  return r;
}

// Square; lower endpoint clamps at 0 when the interval straddles it.
RealIv iv_sqr(const RealIv& a, long prec) {
  RealIv r{PrecFloat(prec), PrecFloat(prec)};
  PrecFloat t(prec);
  mpfr_sqr(r.hi.raw(), a.lo.raw(), MPFR_RNDU);
  mpfr_sqr(t.raw(), a.hi.raw(), MPFR_RNDU);
  mpfr_max(r.hi.raw(), r.hi.raw(), t.raw(), MPFR_RNDU);
  if (a.lo.sign() <= 0 && a.hi.sign() >= 0) {
    mpfr_set_zero(r.lo.raw(), 1);
  } else {
    mpfr_sqr(r.lo.raw(), a.lo.raw(), MPFR_RNDD);
    mpfr_sqr(t.raw(), a.hi.raw(), MPFR_RNDD);
    mpfr_min(r.lo.raw(), r.lo.raw(), t.raw(), MPFR_RNDD);
  }
  return r;
}

// a/b for b strictly positive.
RealIv iv_div_pos(const RealIv& a, const RealIv& b, long prec) {
  RealIv r{PrecFloat(prec), PrecFloat(prec)};
  PrecFloat t(prec);
  mpfr_div(r.lo.raw(), a.lo.raw(), b.lo.raw(), MPFR_RNDD);
  mpfr_div(t.raw(), a.lo.raw(), b.hi.raw(), MPFR_RNDD);
  mpfr_min(r.lo.raw(), r.lo.raw(), t.raw(), MPFR_RNDD);

  mpfr_div(r.hi.raw(), a.hi.raw(), b.lo.raw(), MPFR_RNDU);
  mpfr_div(t.raw(), a.hi.raw(), b.hi.raw(), MPFR_RNDU);
  mpfr_max(r.hi.raw(), r.hi.raw(), t.raw(), MPFR_RNDU);
  return r;
}

RealIv re_of(const ComplexBox& b) { return {b.re_lo, b.re_hi}; }
RealIv im_of(const ComplexBox& b) { return {b.im_lo, b.im_hi}; }

ComplexBox make_box(RealIv re, RealIv im) {
  ComplexBox b;
  b.re_lo = std::move(re.lo);
  b.re_hi = std::move(re.hi);
  b.im_lo = std::move(im.lo);
  b.im_hi = std::move(im.hi);
  return b;
}

}  // namespace

ComplexBox ComplexBox::point(const ComplexApprox& z, long prec) {
  ComplexBox b(prec);
  mpfr_set(b.re_lo.raw(), z.re.raw(), MPFR_RNDD);
  mpfr_set(b.re_hi.raw(), z.re.raw(), MPFR_RNDU);
  mpfr_set(b.im_lo.raw(), z.im.raw(), MPFR_RNDD);
  mpfr_set(b.im_hi.raw(), z.im.raw(), MPFR_RNDU);
  return b;
}

ComplexBox ComplexBox::around(const ComplexApprox& z, long halfwidth_exp, long prec) {
  ComplexBox b(prec);
  PrecFloat h = PrecFloat::pow2(-halfwidth_exp, prec);
  mpfr_sub(b.re_lo.raw(), z.re.raw(), h.raw(), MPFR_RNDD);
  mpfr_add(b.re_hi.raw(), z.re.raw(), h.raw(), MPFR_RNDU);
  mpfr_sub(b.im_lo.raw(), z.im.raw(), h.raw(), MPFR_RNDD);
  mpfr_add(b.im_hi.raw(), z.im.raw(), h.raw(), MPFR_RNDU);
  return b;
}

PrecFloat ComplexBox::wid() const {
  long p = prec();
  PrecFloat wr(p), wi(p);
  mpfr_sub(wr.raw(), re_hi.raw(), re_lo.raw(), MPFR_RNDU);
  mpfr_sub(wi.raw(), im_hi.raw(), im_lo.raw(), MPFR_RNDU);
  mpfr_max(wr.raw(), wr.raw(), wi.raw(), MPFR_RNDU);
  return wr;
}

ComplexApprox ComplexBox::midpoint(long prec) const {
  ComplexApprox m(prec);
  mpfr_add(m.re.raw(), re_lo.raw(), re_hi.raw(), MPFR_RNDN);
  mpfr_div_2si(m.re.raw(), m.re.raw(), 1, MPFR_RNDN);
  mpfr_add(m.im.raw(), im_lo.raw(), im_hi.raw(), MPFR_RNDN);
  mpfr_div_2si(m.im.raw(), m.im.raw(), 1, MPFR_RNDN);
  return m;
}

long ComplexBox::mag_exp_upper() const {
  long p = 64;
  PrecFloat mre(p), mim(p), h(p);
  mpfr_abs(mre.raw(), re_lo.raw(), MPFR_RNDU);
  mpfr_abs(h.raw(), re_hi.raw(), MPFR_RNDU);
  mpfr_max(mre.raw(), mre.raw(), h.raw(), MPFR_RNDU);
  mpfr_abs(mim.raw(), im_lo.raw(), MPFR_RNDU);
  mpfr_abs(h.raw(), im_hi.raw(), MPFR_RNDU);
  mpfr_max(mim.raw(), mim.raw(), h.raw(), MPFR_RNDU);
  mpfr_hypot(h.raw(), mre.raw(), mim.raw(), MPFR_RNDU);
  if (mpfr_zero_p(h.raw())) return LONG_MIN;
  return mpfr_get_exp(h.raw());
}

long ComplexBox::mag_exp_lower() const {
  long p = 64;
  // Per-axis distance from the interval to 0, then hypot of the two.
  PrecFloat dre(p), dim(p), t(p);
  if (re_lo.sign() <= 0 && re_hi.sign() >= 0) {
    mpfr_set_zero(dre.raw(), 1);
  } else {
    mpfr_abs(dre.raw(), re_lo.raw(), MPFR_RNDD);
    mpfr_abs(t.raw(), re_hi.raw(), MPFR_RNDD);
    mpfr_min(dre.raw(), dre.raw(), t.raw(), MPFR_RNDD);
  }
  if (im_lo.sign() <= 0 && im_hi.sign() >= 0) {
    mpfr_set_zero(dim.raw(), 1);
  } else {
    mpfr_abs(dim.raw(), im_lo.raw(), MPFR_RNDD);
    mpfr_abs(t.raw(), im_hi.raw(), MPFR_RNDD);
    mpfr_min(dim.raw(), dim.raw(), t.raw(), MPFR_RNDD);
  }
  mpfr_hypot(t.raw(), dre.raw(), dim.raw(), MPFR_RNDD);
  if (mpfr_zero_p(t.raw())) return LONG_MIN;
  return mpfr_get_exp(t.raw()) - 1;
}

ComplexBox box_add(const ComplexBox& I, const ComplexBox& J, long prec) {
  return make_box(iv_add(re_of(I), re_of(J), prec), iv_add(im_of(I), im_of(J), prec));
}

ComplexBox box_sub(const ComplexBox& I, const ComplexBox& J, long prec) {
  return make_box(iv_sub(re_of(I), re_of(J), prec), iv_sub(im_of(I), im_of(J), prec));
}

ComplexBox box_mul(const ComplexBox& I, const ComplexBox& J, long prec) {
  // (a+bi)(c+di): re = ac - bd, im = ad + bc.
  RealIv a = re_of(I), b = im_of(I), c = re_of(J), d = im_of(J);
  RealIv re = iv_sub(iv_mul(a, c, prec), iv_mul(b, d, prec), prec);
  RealIv im = iv_add(iv_mul(a, d, prec), iv_mul(b, c, prec), prec);
  return make_box(std::move(re), std::move(im));
}

ComplexBox box_recip(const ComplexBox& I, long prec) {
  if (I.contains_zero()) throw ZeroInBox("box straddles the origin in both axes");
  // 1/z = conj(z) / |z|^2
  RealIv a = re_of(I), b = im_of(I);
  RealIv d = iv_add(iv_sqr(a, prec), iv_sqr(b, prec), prec);
  if (d.lo.sign() <= 0) throw ZeroInBox("modulus lower bound is not positive");
  RealIv re = iv_div_pos(a, d, prec);
  RealIv nb{-b.hi, -b.lo};
  RealIv im = iv_div_pos(nb, d, prec);
  return make_box(std::move(re), std::move(im));
}

}  // namespace smat
