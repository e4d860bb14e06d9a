#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

namespace smat {

// Values are "known up to 2^-lambda"; this sentinel marks exact (dyadic) data.
inline constexpr long kExactLambda = 1L << 40;

inline constexpr long kMinPrec = 16;

/// Arbitrary-precision binary floating-point value at a stated precision
/// (significand bits), round-to-nearest unless a directed mode is requested.
/// Any finite value is a dyadic rational, so conversions to exact rationals
/// are lossless.
class PrecFloat {
 public:
  PrecFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit PrecFloat(long prec) {
    mpfr_init2(v_, std::max(prec, kMinPrec));
    mpfr_set_zero(v_, 1);
  }
  PrecFloat(double x, long prec) {
    mpfr_init2(v_, std::max(prec, kMinPrec));
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  PrecFloat(const PrecFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  PrecFloat(PrecFloat&& o) noexcept {
    mpfr_init2(v_, kMinPrec);
    mpfr_swap(v_, o.v_);
  }
  PrecFloat& operator=(const PrecFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  PrecFloat& operator=(PrecFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~PrecFloat() { mpfr_clear(v_); }

  static PrecFloat from_si(long x, long prec) {
    PrecFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  // 2^e, exact at any precision.
  static PrecFloat pow2(long e, long prec = 64) {
    PrecFloat r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  long prec() const { return mpfr_get_prec(v_); }

  // Re-round to `prec`; raising the precision is exact.
  PrecFloat at_prec(long prec, mpfr_rnd_t rnd = MPFR_RNDN) const {
    PrecFloat r(prec);
    mpfr_set(r.v_, v_, rnd);
    return r;
  }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Exponent e with 2^{e-1} <= |x| < 2^e for nonzero finite x.
  long exp2_of() const { return is_zero() ? LONG_MIN : mpfr_get_exp(v_); }

  // log2 of the magnitude as a double (model-level bookkeeping only).
  double lg_abs() const {
    if (is_zero()) return -1e300;
    PrecFloat t(64);
    mpfr_abs(t.v_, v_, MPFR_RNDN);
    mpfr_log2(t.v_, t.v_, MPFR_RNDN);
    return t.to_double();
  }

  PrecFloat operator-() const {
    PrecFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  PrecFloat abs() const {
    PrecFloat r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend PrecFloat operator+(const PrecFloat& a, const PrecFloat& b) {
    PrecFloat r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend PrecFloat operator-(const PrecFloat& a, const PrecFloat& b) {
    PrecFloat r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend PrecFloat operator*(const PrecFloat& a, const PrecFloat& b) {
    PrecFloat r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend PrecFloat operator/(const PrecFloat& a, const PrecFloat& b) {
    PrecFloat r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const PrecFloat& a, const PrecFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const PrecFloat& a, const PrecFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const PrecFloat& a, const PrecFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const PrecFloat& a, const PrecFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const PrecFloat& a, const PrecFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const PrecFloat& a, const PrecFloat& b) { return !(a == b); }

  // Scale by 2^e in place; exact.
  void mul_2si(long e) { mpfr_mul_2si(v_, v_, e, MPFR_RNDN); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  std::string str(size_t digits = 0) const;

 private:
  mpfr_t v_;
};

PrecFloat sqrt(const PrecFloat& a, long prec, mpfr_rnd_t rnd = MPFR_RNDN);
PrecFloat hypot(const PrecFloat& x, const PrecFloat& y, long prec, mpfr_rnd_t rnd = MPFR_RNDN);

/// A complex scalar; both parts share the owning operation's working precision.
struct ComplexApprox {
  PrecFloat re, im;

  ComplexApprox() = default;
  explicit ComplexApprox(long prec) : re(prec), im(prec) {}
  ComplexApprox(double r, double i, long prec) : re(r, prec), im(i, prec) {}
  ComplexApprox(PrecFloat r, PrecFloat i) : re(std::move(r)), im(std::move(i)) {}

  long prec() const { return std::max(re.prec(), im.prec()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  ComplexApprox at_prec(long prec) const { return {re.at_prec(prec), im.at_prec(prec)}; }

  // Exponent e with |z| <= 2^e: lg|z| <= max(lg|re|, lg|im|) + 1.
  long mag_exp_upper() const {
    if (is_zero()) return LONG_MIN;
    long er = re.is_zero() ? LONG_MIN : re.exp2_of();
    long ei = im.is_zero() ? LONG_MIN : im.exp2_of();
    return std::max(er, ei) + 1;
  }
  // Exponent e with |z| >= 2^e.
  long mag_exp_lower() const {
    if (is_zero()) return LONG_MIN;
    long er = re.is_zero() ? LONG_MIN : re.exp2_of();
    long ei = im.is_zero() ? LONG_MIN : im.exp2_of();
    return std::max(er, ei) - 1;
  }

  double lg_abs() const;

  ComplexApprox operator-() const { return {-re, -im}; }

  friend bool operator==(const ComplexApprox& a, const ComplexApprox& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// Arithmetic at an explicit working precision (round-to-nearest).
ComplexApprox cadd(const ComplexApprox& a, const ComplexApprox& b, long prec);
ComplexApprox csub(const ComplexApprox& a, const ComplexApprox& b, long prec);
ComplexApprox cmul(const ComplexApprox& a, const ComplexApprox& b, long prec);
ComplexApprox cdiv(const ComplexApprox& a, const ComplexApprox& b, long prec);
PrecFloat cabs(const ComplexApprox& a, long prec);
// |a - b| rounded up; the workhorse of all error measurements.
PrecFloat cdist(const ComplexApprox& a, const ComplexApprox& b, long prec);

}  // namespace smat
