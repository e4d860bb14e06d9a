#include "smat/fft.hpp"

#include <map>
#include <mutex>

#include "smat/checks.hpp"
#include "smat/errors.hpp"

namespace smat {

namespace {

struct TwiddleTable {
  long K = 1;
  long prec = 0;
  std::vector<ComplexApprox> w;  // w[i] = exp(2*pi*i/K * sqrt(-1))
};

// Twiddles are computed once per (K, precision) at lg K extra bits so their
// error stays below the butterfly rounding floor, then shared immutably.
std::shared_ptr<const TwiddleTable> twiddles(long K, long prec) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, std::shared_ptr<const TwiddleTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(K, prec);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto t = std::make_shared<TwiddleTable>();
  t->K = K;
  long tp = prec + lgc(K) + 8;
  t->prec = tp;
  t->w.reserve(K);
  PrecFloat two_pi(tp), theta(tp);
  mpfr_const_pi(two_pi.raw(), MPFR_RNDN);
  mpfr_mul_2si(two_pi.raw(), two_pi.raw(), 1, MPFR_RNDN);
  for (long i = 0; i < K; ++i) {
    ComplexApprox z(tp);
    if (i == 0) {
      mpfr_set_ui(z.re.raw(), 1, MPFR_RNDN);
    } else if (4 * i == K) {
      mpfr_set_ui(z.im.raw(), 1, MPFR_RNDN);
    } else if (2 * i == K) {
      mpfr_set_si(z.re.raw(), -1, MPFR_RNDN);
    } else if (4 * i == 3 * K) {
      mpfr_set_si(z.im.raw(), -1, MPFR_RNDN);
    } else {
      mpfr_mul_si(theta.raw(), two_pi.raw(), i, MPFR_RNDN);
      mpfr_div_2si(theta.raw(), theta.raw(), lgc(K), MPFR_RNDN);  // exact: K = 2^k
      mpfr_sin_cos(z.im.raw(), z.re.raw(), theta.raw(), MPFR_RNDN);
    }
    t->w.push_back(std::move(z));
  }
  cache[key] = t;
  return t;
}

void bit_reverse(std::vector<ComplexApprox>& a) {
  size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

// In-place radix-2 transform; inverse uses conjugate twiddles and divides by
// K at the end (exact, K a power of two).
void fft_in_place(std::vector<ComplexApprox>& a, const TwiddleTable& tw, bool inverse, long prec) {
  const long K = static_cast<long>(a.size());
  bit_reverse(a);
  ComplexApprox t(prec), u(prec);
  for (long len = 2; len <= K; len <<= 1) {
    const long half = len >> 1;
    const long step = K / len;
    for (long base = 0; base < K; base += len) {
      for (long j = 0; j < half; ++j) {
        long wi = j * step;
        if (inverse && wi != 0) wi = K - wi;
        const ComplexApprox& w = tw.w[wi];
        ComplexApprox& lo = a[base + j];
        ComplexApprox& hi = a[base + j + half];
        // t = w * hi
        mpfr_fmms(t.re.raw(), w.re.raw(), hi.re.raw(), w.im.raw(), hi.im.raw(), MPFR_RNDN);
        mpfr_fmma(t.im.raw(), w.re.raw(), hi.im.raw(), w.im.raw(), hi.re.raw(), MPFR_RNDN);
        // hi = lo - t, lo = lo + t
        mpfr_sub(u.re.raw(), lo.re.raw(), t.re.raw(), MPFR_RNDN);
        mpfr_sub(u.im.raw(), lo.im.raw(), t.im.raw(), MPFR_RNDN);
        mpfr_add(lo.re.raw(), lo.re.raw(), t.re.raw(), MPFR_RNDN);
        mpfr_add(lo.im.raw(), lo.im.raw(), t.im.raw(), MPFR_RNDN);
        std::swap(hi, u);
      }
    }
  }
  if (inverse) {
    const long k = lgc(K);
    for (auto& z : a) {
      z.re.mul_2si(-k);
      z.im.mul_2si(-k);
    }
  }
}

}  // namespace

namespace detail {

long pow2_at_least(long x) {
  long K = 1;
  while (K < x) K <<= 1;
  return K;
}

std::vector<ComplexApprox> dft_points(const ApproxPoly& A, long K, long prec) {
  std::vector<ComplexApprox> a;
  a.reserve(K);
  for (long i = 0; i < K; ++i)
    a.push_back(i <= A.degree ? A.coeffs[i].at_prec(prec) : ComplexApprox(prec));
  auto tw = twiddles(K, prec);
  fft_in_place(a, *tw, false, prec);
  return a;
}

ApproxPoly idft_poly(const std::vector<ComplexApprox>& values, long prec, long out_lambda) {
  const long K = static_cast<long>(values.size());
  if (K <= 0 || (K & (K - 1)) != 0) throw DimensionMismatch("value count must be a power of two");
  std::vector<ComplexApprox> a;
  a.reserve(K);
  for (const auto& v : values) a.push_back(v.at_prec(prec));
  auto tw = twiddles(K, prec);
  fft_in_place(a, *tw, true, prec);
  return ApproxPoly(std::move(a), out_lambda);
}

ApproxPoly mul_at(const ApproxPoly& A, const ApproxPoly& B, long prec, long out_lambda) {
  if (A.zero || B.zero) {
    ApproxPoly z = ApproxPoly::zero_poly(prec);
    return z;
  }
  // Products by constants are exact scalings; this also keeps padding moduli
  // (the constant 1) bit-neutral in the subproduct trees.
  if (A.degree == 0 || B.degree == 0) {
    const ApproxPoly& c = A.degree == 0 ? A : B;
    const ApproxPoly& P = A.degree == 0 ? B : A;
    const ComplexApprox& s = c.coeffs[0];
    bool is_one = mpfr_cmp_ui(s.re.raw(), 1) == 0 && s.im.is_zero();
    std::vector<ComplexApprox> out;
    out.reserve(P.coeffs.size());
    for (const auto& x : P.coeffs)
      out.push_back(is_one ? x.at_prec(prec) : cmul(x, s, prec));
    ApproxPoly r(std::move(out), out_lambda);
    return r;
  }

  const long dOut = A.degree + B.degree;
  const long K = pow2_at_least(dOut + 1);
  auto fa = dft_points(A, K, prec);
  auto fb = dft_points(B, K, prec);
  for (long i = 0; i < K; ++i) fa[i] = cmul(fa[i], fb[i], prec);
  auto tw = twiddles(K, prec);
  fft_in_place(fa, *tw, true, prec);
  fa.resize(dOut + 1, ComplexApprox(prec));
  ApproxPoly C(std::move(fa), out_lambda);

  // Stated product norm bound, widened by the accuracy of the computed value.
  checks::expect_le("mul.norm", C.norm_inf_lg(),
                    checks::logadd2(static_cast<double>(A.tau + B.tau + 2 * lgc(K)),
                                    static_cast<double>(-out_lambda + 1)));
  return C;
}

}  // namespace detail

std::vector<ComplexApprox> fft_eval_unity(const ApproxPoly& A, long k, long ell,
                                          const FftOptions& opt) {
  const long K = 1L << k;
  if (K < A.degree + 1) throw DimensionMismatch("fft size below coefficient count");
  PlanParams pp;
  pp.ell = ell;
  pp.tau = A.tau;
  pp.k = k;
  PrecisionPlan plan = plan_precision(Formula::FftEval, pp);
  if (A.lambda < plan.lambda)
    throw InsufficientInputAccuracy("fft_eval_unity", plan.lambda, A.lambda);

  const long prec = opt.exec_prec.value_or(plan.working_p);
  auto vals = detail::dft_points(A, K, prec);
  if (checks::enabled() && !A.zero) {
    double bound = checks::logadd2(static_cast<double>(A.tau + k), -static_cast<double>(ell));
    for (const auto& v : vals) checks::expect_le("fft.value", v.lg_abs(), bound);
  }
  return vals;
}

ApproxPoly fft_interpolate_unity(const std::vector<ComplexApprox>& values, long ell,
                                 const FftOptions& opt) {
  long tau = LONG_MIN;
  for (const auto& v : values)
    if (!v.is_zero()) tau = std::max(tau, v.mag_exp_upper());
  if (tau == LONG_MIN) tau = 0;
  const long K = static_cast<long>(values.size());
  const long prec = opt.exec_prec.value_or(exec_prec_fft(ell, std::max(tau, 0L), lgc(std::max(K, 1L))));
  return detail::idft_poly(values, prec, ell);
}

ApproxPoly poly_mul(const ApproxPoly& A, const ApproxPoly& B, long ell, const FftOptions& opt) {
  PlanParams pp;
  pp.ell = ell;
  pp.tau1 = A.tau;
  pp.tau2 = B.tau;
  pp.d = std::max({A.degree, B.degree, 1L});
  pp.k = lgc(std::max(A.degree + B.degree + 1, 2L));
  PrecisionPlan plan = plan_precision(opt.strict ? Formula::MulStrict : Formula::Mul, pp);
  if (A.lambda < plan.lambda || B.lambda < plan.lambda)
    throw InsufficientInputAccuracy("poly_mul", plan.lambda, std::min(A.lambda, B.lambda));

  const long prec = opt.exec_prec.value_or(plan.working_p);
  return detail::mul_at(A, B, prec, ell);
}

ApproxPoly scale_to_unit_disc(const ApproxPoly& F, long rho) {
  ApproxPoly r = F;
  for (size_t i = 1; i < r.coeffs.size(); ++i) {
    r.coeffs[i].re.mul_2si(rho * static_cast<long>(i));
    r.coeffs[i].im.mul_2si(rho * static_cast<long>(i));
  }
  if (rho > 0) r.lambda = std::max(1L, F.lambda - rho * F.degree);
  r.refresh_magnitude();
  return r;
}

ApproxPoly unscale_from_unit_disc(const ApproxPoly& F, long rho) {
  return scale_to_unit_disc(F, -rho);
}

}  // namespace smat
