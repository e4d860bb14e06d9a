#include "smat/prec.hpp"

#include <cstdio>
#include <cstdlib>

namespace smat {

std::string PrecFloat::str(size_t digits) const {
  char* s = nullptr;
  int n = digits == 0 ? mpfr_asprintf(&s, "%Re", v_)
                      : mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits), v_);
  if (n < 0) return "<fmt-error>";
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

PrecFloat sqrt(const PrecFloat& a, long prec, mpfr_rnd_t rnd) {
  PrecFloat r(prec);
  mpfr_sqrt(r.raw(), a.raw(), rnd);
  return r;
}

PrecFloat hypot(const PrecFloat& x, const PrecFloat& y, long prec, mpfr_rnd_t rnd) {
  PrecFloat r(prec);
  mpfr_hypot(r.raw(), x.raw(), y.raw(), rnd);
  return r;
}

double ComplexApprox::lg_abs() const {
  if (is_zero()) return -1e300;
  PrecFloat h = hypot(re, im, 64, MPFR_RNDU);
  return h.lg_abs();
}

ComplexApprox cadd(const ComplexApprox& a, const ComplexApprox& b, long prec) {
  ComplexApprox r(prec);
  mpfr_add(r.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_add(r.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
  return r;
}

ComplexApprox csub(const ComplexApprox& a, const ComplexApprox& b, long prec) {
  ComplexApprox r(prec);
  mpfr_sub(r.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_sub(r.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
  return r;
}

ComplexApprox cmul(const ComplexApprox& a, const ComplexApprox& b, long prec) {
  ComplexApprox r(prec);
  // re = a.re*b.re - a.im*b.im, im = a.re*b.im + a.im*b.re
  mpfr_fmms(r.re.raw(), a.re.raw(), b.re.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_fmma(r.im.raw(), a.re.raw(), b.im.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
  return r;
}

ComplexApprox cdiv(const ComplexApprox& a, const ComplexApprox& b, long prec) {
  // a/b = a * conj(b) / |b|^2
  PrecFloat d(prec);
  mpfr_fmma(d.raw(), b.re.raw(), b.re.raw(), b.im.raw(), b.im.raw(), MPFR_RNDN);
  ComplexApprox r(prec);
  mpfr_fmma(r.re.raw(), a.re.raw(), b.re.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_fmms(r.im.raw(), a.im.raw(), b.re.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_div(r.re.raw(), r.re.raw(), d.raw(), MPFR_RNDN);
  mpfr_div(r.im.raw(), r.im.raw(), d.raw(), MPFR_RNDN);
  return r;
}

PrecFloat cabs(const ComplexApprox& a, long prec) {
  return hypot(a.re, a.im, prec, MPFR_RNDN);
}

PrecFloat cdist(const ComplexApprox& a, const ComplexApprox& b, long prec) {
  PrecFloat dr(prec), di(prec);
  mpfr_sub(dr.raw(), a.re.raw(), b.re.raw(), MPFR_RNDA);
  mpfr_sub(di.raw(), a.im.raw(), b.im.raw(), MPFR_RNDA);
  return hypot(dr, di, prec, MPFR_RNDU);
}

}  // namespace smat
