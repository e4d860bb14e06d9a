#include "smat/toeplitz.hpp"

#include <algorithm>

#include "smat/bounds.hpp"
#include "smat/checks.hpp"
#include "smat/errors.hpp"

namespace smat {

namespace {

// Root-magnitude exponent of the polynomial associated with a first column
// (diagonal entry first): t(x) = sum_i col[n-i] x^i, monic when col[0] = 1.
long rho_of_column(const std::vector<ComplexApprox>& col) {
  std::vector<ComplexApprox> t(col.rbegin(), col.rend());
  ApproxPoly tp(std::move(t));
  if (tp.zero || tp.coeffs.back().is_zero()) return 0;
  return std::max(root_magnitude_bounds(tp).rho, 0L);
}

long vec_tau(const std::vector<ComplexApprox>& v) {
  long m = LONG_MIN;
  for (const auto& z : v)
    if (!z.is_zero()) m = std::max(m, z.mag_exp_upper());
  return m == LONG_MIN ? 0 : m;
}

}  // namespace

ToeplitzMatrix::ToeplitzMatrix(std::vector<ComplexApprox> col, std::vector<ComplexApprox> row,
                               long lambda_in)
    : first_col(std::move(col)), first_row(std::move(row)), lambda(std::max(1L, lambda_in)) {
  if (first_col.size() != first_row.size() || first_col.empty())
    throw DimensionMismatch("toeplitz column/row lengths");
  if (!(first_col[0] == first_row[0]))
    throw DimensionMismatch("toeplitz corner entry differs between column and row");
}

ToeplitzMatrix ToeplitzMatrix::identity(long n, long prec) {
  std::vector<ComplexApprox> col(n, ComplexApprox(prec)), row(n, ComplexApprox(prec));
  col[0] = ComplexApprox(1.0, 0.0, prec);
  row[0] = col[0];
  return ToeplitzMatrix(std::move(col), std::move(row));
}

std::vector<ComplexApprox> toeplitz_vec_mul(const ToeplitzMatrix& T, const VecApprox& v,
                                            long ell, const ToeplitzOptions& opt) {
  const long n = T.n();
  if (static_cast<long>(v.size()) != n) throw DimensionMismatch("toeplitz_vec_mul vector length");

  // Fused diagonal polynomial U: U_k = c_{k-(n-1)}, k = 0 .. 2n-2.
  std::vector<ComplexApprox> u;
  u.reserve(2 * n - 1);
  for (long k = n - 1; k >= 1; --k) u.push_back(T.first_row[k]);
  for (long k = 0; k <= n - 1; ++k) u.push_back(T.first_col[k]);
  ApproxPoly U(std::move(u), T.lambda);
  ApproxPoly V(v.values, v.lambda);

  PlanParams pp;
  pp.ell = ell;
  pp.tau1 = U.tau;
  pp.tau2 = V.tau;
  pp.d = std::max(2 * n - 2, 1L);
  pp.k = lgc(std::max(3 * n - 2, 2L));
  PrecisionPlan plan = plan_precision(opt.strict ? Formula::MulStrict : Formula::Mul, pp);
  if (T.lambda < plan.lambda || v.lambda < plan.lambda)
    throw InsufficientInputAccuracy("toeplitz_vec_mul", plan.lambda, std::min(T.lambda, v.lambda));

  const long prec = opt.exec_prec.value_or(plan.working_p);
  ApproxPoly W = detail::mul_at(U, V, prec, ell);
  std::vector<ComplexApprox> out;
  out.reserve(n);
  for (long i = 0; i < n; ++i) out.push_back(W.coeff(n - 1 + i));
  return out;
}

std::vector<ComplexApprox> hankel_vec_mul(const HankelMatrix& H, const VecApprox& v,
                                          long ell, const ToeplitzOptions& opt) {
  const long n = H.n();
  if (static_cast<long>(v.size()) != n) throw DimensionMismatch("hankel_vec_mul vector length");
  if (static_cast<long>(H.skew.size()) != 2 * n - 1)
    throw DimensionMismatch("hankel skew-diagonal length");

  // (Hv)_i = sum_j h_{i+j} v_j: same window trick with the vector reversed.
  ApproxPoly U(H.skew, H.lambda);
  std::vector<ComplexApprox> vr(v.values.rbegin(), v.values.rend());
  ApproxPoly V(std::move(vr), v.lambda);

  PlanParams pp;
  pp.ell = ell;
  pp.tau1 = U.tau;
  pp.tau2 = V.tau;
  pp.d = std::max(2 * n - 2, 1L);
  pp.k = lgc(std::max(3 * n - 2, 2L));
  PrecisionPlan plan = plan_precision(opt.strict ? Formula::MulStrict : Formula::Mul, pp);
  if (H.lambda < plan.lambda || v.lambda < plan.lambda)
    throw InsufficientInputAccuracy("hankel_vec_mul", plan.lambda, std::min(H.lambda, v.lambda));

  const long prec = opt.exec_prec.value_or(plan.working_p);
  ApproxPoly W = detail::mul_at(U, V, prec, ell);
  std::vector<ComplexApprox> out;
  out.reserve(n);
  for (long i = 0; i < n; ++i) out.push_back(W.coeff(n - 1 + i));
  return out;
}

namespace detail {

std::vector<ComplexApprox> invert_unit_series(std::span<const ComplexApprox> u,
                                              size_t out_len, long prec, long out_lambda) {
  size_t gamma = 1;
  while (gamma < out_len) gamma *= 2;

  std::vector<ComplexApprox> w;
  w.reserve(gamma);
  w.emplace_back(1.0, 0.0, prec);

  for (size_t s = 1; s < gamma; s *= 2) {
    // U = u[1 .. 2s-1] (zero padded); v = coeffs [s-1 .. 2s-2] of U*w.
    std::vector<ComplexApprox> uc;
    uc.reserve(2 * s - 1);
    for (size_t i = 1; i <= 2 * s - 1; ++i)
      uc.push_back(i < u.size() ? u[i].at_prec(prec) : ComplexApprox(prec));
    ApproxPoly U(std::move(uc));
    ApproxPoly P(w);
    ApproxPoly A = mul_at(U, P, prec, out_lambda);

    std::vector<ComplexApprox> vc;
    vc.reserve(s);
    for (size_t i = 0; i < s; ++i) vc.push_back(A.coeff(s - 1 + i));
    ApproxPoly V(std::move(vc));
    ApproxPoly B = mul_at(P, V, prec, out_lambda);

    // Stated bound for the squared-factor product pattern behind this step.
    if (checks::enabled() && s >= 2 && !B.zero) {
      double bound = 2.0 * P.norm_inf_lg() + std::max(U.norm_inf_lg(), 0.0) +
                     6.0 * lgc(static_cast<long>(s - 1)) + 8.0;
      checks::expect_le("tri_inverse.step", B.norm_inf_lg(),
                        checks::logadd2(bound, static_cast<double>(-out_lambda + 1)));
    }

    w.resize(2 * s, ComplexApprox(prec));
    for (size_t i = 0; i < s; ++i) w[s + i] = -B.coeff(i);
  }
  w.resize(out_len, ComplexApprox(prec));
  return w;
}

namespace {

// Shared tail: q_rev = window of W * rev(s), then r = s - t q.
std::pair<ApproxPoly, ApproxPoly> qr_with_inverse(const ApproxPoly& s, const ApproxPoly& t_monic,
                                                  std::span<const ComplexApprox> w, long prec,
                                                  long rho) {
  const long m = s.degree, n = t_monic.degree;
  std::vector<ComplexApprox> srev;
  srev.reserve(m - n + 1);
  for (long i = 0; i <= m - n; ++i) srev.push_back(s.coeff(m - i));
  ApproxPoly S(std::move(srev), s.lambda);
  std::vector<ComplexApprox> wv(w.begin(), w.begin() + std::min<size_t>(w.size(), m - n + 1));
  ApproxPoly W(std::move(wv));
  ApproxPoly QR = mul_at(W, S, prec, s.lambda);

  std::vector<ComplexApprox> q;
  q.reserve(m - n + 1);
  for (long i = m - n; i >= 0; --i) q.push_back(QR.coeff(i));
  ApproxPoly Q(std::move(q), s.lambda);

  ApproxPoly TQ = mul_at(t_monic, Q, prec, s.lambda);
  std::vector<ComplexApprox> r;
  r.reserve(std::max(n, 1L));
  for (long i = 0; i < std::max(n, 1L); ++i) r.push_back(csub(s.coeff(i), TQ.coeff(i), prec));
  ApproxPoly R(std::move(r), s.lambda);

  if (checks::enabled()) {
    auto [bq, br] = quotient_remainder_norm_bounds(std::max(m, 1L), std::max(n, 1L), rho,
                                                   PrecFloat::pow2(s.tau, 64));
    double acc = static_cast<double>(s.lambda >= kExactLambda ? -1e9 : -s.lambda + 1);
    checks::expect_le("divide.quotient_norm", Q.norm_inf_lg(), checks::logadd2(bq.lg_abs(), acc));
    checks::expect_le("divide.remainder_norm", R.norm_inf_lg(), checks::logadd2(br.lg_abs(), acc));
  }
  return {std::move(Q), std::move(R)};
}

}  // namespace

ApproxPoly remainder_with_inverse(const ApproxPoly& s, const ApproxPoly& t_monic,
                                  std::span<const ComplexApprox> w, long prec, long rho) {
  if (s.degree < t_monic.degree) return s.at_prec(prec);
  return qr_with_inverse(s, t_monic, w, prec, rho).second;
}

std::pair<ApproxPoly, ApproxPoly> divide_core(const ApproxPoly& s, const ApproxPoly& t_monic,
                                              long prec, long rho) {
  const long m = s.degree, n = t_monic.degree;
  if (m < n) {
    return {ApproxPoly::zero_poly(prec), s.at_prec(prec)};
  }
  std::vector<ComplexApprox> u;
  u.reserve(m - n + 1);
  u.emplace_back(1.0, 0.0, prec);
  for (long k = 1; k <= m - n; ++k)
    u.push_back(n - k >= 0 ? t_monic.coeff(n - k).at_prec(prec) : ComplexApprox(prec));
  auto w = invert_unit_series(u, m - n + 1, prec, s.lambda);
  return qr_with_inverse(s, t_monic, w, prec, rho);
}

}  // namespace detail

TriToeplitz tri_toeplitz_inverse(const TriToeplitz& T, long ell, const ToeplitzOptions& opt) {
  const auto& col = T.col.coeffs;
  if (col.empty()) throw DimensionMismatch("empty triangular Toeplitz column");
  ComplexApprox one(1.0, 0.0, 64);
  if (!(col[0] == one))
    throw Error(ErrorCode::Generic, "tri_toeplitz_inverse: diagonal entry must be 1");

  const long dim = static_cast<long>(col.size());
  const long gamma = detail::pow2_at_least(dim);
  std::vector<ComplexApprox> sub(col.begin() + 1, col.end());
  const long tau_sub = vec_tau(sub);
  const long rho = opt.rho.value_or(rho_of_column(col));

  PlanParams pp;
  pp.ell = ell;
  pp.tau = tau_sub;
  pp.rho = rho;
  pp.n = gamma - 1;
  PrecisionPlan plan = plan_precision(Formula::TriInverse, pp);
  if (T.col.lambda < plan.lambda)
    throw InsufficientInputAccuracy("tri_toeplitz_inverse", plan.lambda, T.col.lambda);

  const long prec = opt.exec_prec.value_or(exec_prec_tri_inverse(ell, gamma, tau_sub, rho));
  auto w = detail::invert_unit_series(std::span<const ComplexApprox>(col.data(), col.size()),
                                      static_cast<size_t>(dim), prec, ell);

  TriToeplitz inv;
  inv.col = ApproxPoly(std::move(w), ell);
  inv.normalized = true;

  double bound = static_cast<double>((rho + 1) * (gamma - 1) + lgc(std::max(gamma - 1, 1L)) + 1);
  checks::expect_le("tri_inverse.entries", inv.col.norm_inf_lg(),
                    checks::logadd2(bound, static_cast<double>(-ell + 1)));
  return inv;
}

DivisionResult poly_divide(const ApproxPoly& s, const ApproxPoly& t, long ell,
                           const ToeplitzOptions& opt) {
  const long m = s.degree, n = t.degree;
  if (m < n || n < 1) throw DimensionMismatch("poly_divide requires deg s >= deg t >= 1");
  if (t.zero || t.coeffs.back().is_zero()) throw ZeroLeadingCoefficient();

  // Normalizing by a leading coefficient below the declared accuracy would
  // destroy the contract on t's coefficients.
  const ComplexApprox& tn = t.coeffs.back();
  if (tn.mag_exp_upper() < -t.lambda)
    throw LeadingCoefficientTooSmall("|t_n| < 2^-lambda");

  bool monic = mpfr_cmp_ui(tn.re.raw(), 1) == 0 && tn.im.is_zero();

  PlanParams pp;
  pp.ell = ell;
  pp.tau1 = s.tau;
  pp.tau2 = t.tau;
  pp.n = std::max({n, m - n, 1L});
  PrecisionPlan plan;
  long rho;
  {
    ApproxPoly tm = t;  // provisional monic form for the root bound
    if (!monic) {
      for (auto& c : tm.coeffs) c = cdiv(c, tn, std::max(t.prec(), 96L));
      tm.refresh_magnitude();
    }
    rho = opt.rho.value_or(std::max(root_magnitude_bounds(tm).rho, 0L));
  }
  pp.rho = rho;
  plan = plan_precision(opt.strict ? Formula::DivideStrict : Formula::Divide, pp);
  if (s.lambda < plan.lambda || t.lambda < plan.lambda)
    throw InsufficientInputAccuracy("poly_divide", plan.lambda, std::min(s.lambda, t.lambda));

  const long prec = opt.exec_prec.value_or(exec_prec_divide(ell, m, n, s.tau, t.tau, rho));

  ApproxPoly tm = t.at_prec(prec);
  if (!monic) {
    for (auto& c : tm.coeffs) c = cdiv(c, tn, prec);
    tm.refresh_magnitude();
  }

  auto [qh, r] = detail::divide_core(s.at_prec(prec), tm, prec, rho);

  ApproxPoly q = std::move(qh);
  if (!monic) {
    for (auto& c : q.coeffs) c = cdiv(c, tn, prec);
    q.refresh_magnitude();
  }
  q.lambda = ell;
  r.lambda = ell;
  r.refresh_magnitude();

  return DivisionResult{std::move(q), std::move(r), plan};
}

std::pair<PrecFloat, PrecFloat> quotient_remainder_norm_bounds(long m, long n, long rho,
                                                               const PrecFloat& norm_F) {
  long p = std::max(norm_F.prec(), 96L);
  PrecFloat bq = PrecFloat::pow2(m + lgc(m) + m * std::max(rho, 0L), p);
  PrecFloat br = PrecFloat::pow2(m + n + lgc(m) + m * std::max(rho, 0L), p);
  return {bq * norm_F, br * norm_F};
}

}  // namespace smat
