#include "smat/poly.hpp"

#include <algorithm>
#include <cassert>

namespace smat {

namespace {
const ComplexApprox& zero_coeff() {
  static const ComplexApprox z(64);
  return z;
}
}  // namespace

ApproxPoly::ApproxPoly() : coeffs(1, ComplexApprox(64)) {}

ApproxPoly::ApproxPoly(std::vector<ComplexApprox> c, long lambda_in)
    : coeffs(std::move(c)), lambda(std::max(1L, lambda_in)) {
  if (coeffs.empty()) coeffs.emplace_back(64);
  degree = static_cast<long>(coeffs.size()) - 1;
  refresh_magnitude();
}

ApproxPoly ApproxPoly::from_doubles(std::initializer_list<double> c, long prec, long lambda_in) {
  std::vector<ComplexApprox> v;
  v.reserve(c.size());
  for (double x : c) v.emplace_back(x, 0.0, prec);
  return ApproxPoly(std::move(v), lambda_in);
}

ApproxPoly ApproxPoly::zero_poly(long prec) {
  return ApproxPoly(std::vector<ComplexApprox>{ComplexApprox(prec)});
}

ApproxPoly ApproxPoly::constant(const ComplexApprox& c, long lambda_in) {
  return ApproxPoly(std::vector<ComplexApprox>{c}, lambda_in);
}

long ApproxPoly::prec() const {
  long p = kMinPrec;
  for (const auto& c : coeffs) p = std::max(p, c.prec());
  return p;
}

ApproxPoly ApproxPoly::at_prec(long p) const {
  ApproxPoly r = *this;
  for (auto& c : r.coeffs) c = c.at_prec(p);
  return r;
}

const ComplexApprox& ApproxPoly::coeff(size_t i) const {
  if (i < coeffs.size()) return coeffs[i];
  return zero_coeff();
}

void ApproxPoly::refresh_magnitude() {
  zero = true;
  long m = LONG_MIN;
  for (const auto& c : coeffs) {
    if (!c.is_zero()) {
      zero = false;
      m = std::max(m, c.mag_exp_upper());
    }
  }
  tau = zero ? 0 : m;
}

PrecFloat ApproxPoly::norm2_upper(long prec) const {
  PrecFloat s(prec);
  for (const auto& c : coeffs) {
    mpfr_fma(s.raw(), c.re.raw(), c.re.raw(), s.raw(), MPFR_RNDU);
    mpfr_fma(s.raw(), c.im.raw(), c.im.raw(), s.raw(), MPFR_RNDU);
  }
  mpfr_sqrt(s.raw(), s.raw(), MPFR_RNDU);
  return s;
}

PrecFloat ApproxPoly::norm2_lower(long prec) const {
  PrecFloat s(prec);
  for (const auto& c : coeffs) {
    mpfr_fma(s.raw(), c.re.raw(), c.re.raw(), s.raw(), MPFR_RNDD);
    mpfr_fma(s.raw(), c.im.raw(), c.im.raw(), s.raw(), MPFR_RNDD);
  }
  mpfr_sqrt(s.raw(), s.raw(), MPFR_RNDD);
  return s;
}

double ApproxPoly::norm_inf_lg() const {
  double m = -1e300;
  for (const auto& c : coeffs) m = std::max(m, c.lg_abs());
  return m;
}

ComplexApprox ApproxPoly::eval_horner(const ComplexApprox& x, long prec) const {
  ComplexApprox acc = coeffs.back().at_prec(prec);
  for (size_t i = coeffs.size(); i-- > 1;) {
    acc = cmul(acc, x, prec);
    acc = cadd(acc, coeffs[i - 1], prec);
  }
  return acc;
}

ApproxPoly ApproxPoly::derivative(long prec) const {
  if (degree == 0) {
    ApproxPoly r = ApproxPoly::zero_poly(prec);
    r.lambda = lambda;
    return r;
  }
  std::vector<ComplexApprox> d;
  d.reserve(coeffs.size() - 1);
  for (size_t i = 1; i < coeffs.size(); ++i) {
    ComplexApprox c(prec);
    mpfr_mul_ui(c.re.raw(), coeffs[i].re.raw(), static_cast<unsigned long>(i), MPFR_RNDN);
    mpfr_mul_ui(c.im.raw(), coeffs[i].im.raw(), static_cast<unsigned long>(i), MPFR_RNDN);
    d.push_back(std::move(c));
  }
  ApproxPoly r(std::move(d), lambda);
  return r;
}

long ApproxPoly::effective_degree() const {
  for (size_t i = coeffs.size(); i-- > 0;)
    if (!coeffs[i].is_zero()) return static_cast<long>(i);
  return 0;
}

ApproxPoly poly_add(const ApproxPoly& a, const ApproxPoly& b, long prec, long lambda_out) {
  size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  std::vector<ComplexApprox> c;
  c.reserve(n);
  for (size_t i = 0; i < n; ++i) c.push_back(cadd(a.coeff(i), b.coeff(i), prec));
  return ApproxPoly(std::move(c), lambda_out);
}

PrecFloat coeff_dist_inf(const ApproxPoly& a, const ApproxPoly& b, long prec) {
  size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  PrecFloat m(prec);
  for (size_t i = 0; i < n; ++i) {
    PrecFloat d = cdist(a.coeff(i), b.coeff(i), prec);
    mpfr_max(m.raw(), m.raw(), d.raw(), MPFR_RNDU);
  }
  return m;
}

}  // namespace smat
