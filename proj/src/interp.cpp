#include "smat/interp.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

#include "smat/bounds.hpp"
#include "smat/checks.hpp"
#include "smat/errors.hpp"

namespace smat {

namespace {

double dpos(long x) { return x > 0 ? static_cast<double>(x) : 0.0; }

// Certified complex division through interval arithmetic: boxes around the
// computed numerator/denominator, reciprocal, product, midpoint. The box
// width certifies the division step; callers size half-widths so the result
// lands within the requested accuracy.
ComplexApprox certified_div(const ComplexBox& num, const ComplexBox& den, long prec,
                            long ell, const char* where) {
  ComplexBox q = box_mul(num, box_recip(den, prec), prec);
  PrecFloat w = q.wid();
  if (!w.is_zero() && w.lg_abs() > static_cast<double>(-ell))
    throw Error(ErrorCode::Generic,
                std::string(where) + ": certified width exceeds the accuracy target");
  return q.midpoint(prec);
}

// lg of an a-priori upper bound on |P(x)| over |x| <= 2^tau_x.
double lg_eval_bound(double lg_norm, long deg, long tau_x) {
  return lg_norm + dpos(deg) * dpos(tau_x) + lgc(std::max(deg + 1, 1L)) + 1;
}

}  // namespace

InterpProblem::InterpProblem(NodeSet k, VecApprox y) : knots(std::move(k)), values(std::move(y)) {
  if (knots.size() != static_cast<long>(values.size()))
    throw DimensionMismatch("knot/value counts differ");
  tau2 = values.tau();
}

CauchySpec::CauchySpec(NodeSet s_in, NodeSet t_in) : s(std::move(s_in)), t(std::move(t_in)) {
  if (s.size() != t.size()) throw DimensionMismatch("cauchy node families differ in size");
  const long n = s.size();
  const long prec = 96;
  lg_row_s.assign(n, 0.0);
  lg_row_t.assign(n, 1e300);

  std::vector<PrecFloat> row_s(n, PrecFloat(prec)), row_t(n, PrecFloat(prec));
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    PrecFloat best(prec);
    bool have = false;
    for (long j = 0; j < n; ++j) {
      PrecFloat dr(prec), di(prec);
      mpfr_sub(dr.raw(), s.nodes()[i].re.raw(), t.nodes()[j].re.raw(), MPFR_RNDZ);
      mpfr_sub(di.raw(), s.nodes()[i].im.raw(), t.nodes()[j].im.raw(), MPFR_RNDZ);
      PrecFloat d = hypot(dr, di, prec, MPFR_RNDD);
      if (!have || d < best) {
        best = d;
        have = true;
      }
    }
    row_s[i] = best;
  }
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < n; ++j) {
    PrecFloat best(prec);
    bool have = false;
    for (long i = 0; i < n; ++i) {
      PrecFloat dr(prec), di(prec);
      mpfr_sub(dr.raw(), t.nodes()[j].re.raw(), s.nodes()[i].re.raw(), MPFR_RNDZ);
      mpfr_sub(di.raw(), t.nodes()[j].im.raw(), s.nodes()[i].im.raw(), MPFR_RNDZ);
      PrecFloat d = hypot(dr, di, prec, MPFR_RNDD);
      if (!have || d < best) {
        best = d;
        have = true;
      }
    }
    row_t[j] = best;
  }

  delta_st = row_s[0];
  for (long i = 0; i < n; ++i) {
    lg_row_s[i] = row_s[i].lg_abs();
    lg_row_t[i] = row_t[i].lg_abs();
    if (row_s[i] < delta_st) delta_st = row_s[i];
  }
  lg_delta_st = delta_st.lg_abs();

  long lam = std::min(s.lambda(), t.lambda());
  if (delta_st.is_zero() || delta_st < PrecFloat::pow2(-std::min(lam, kExactLambda) + 2, 64))
    throw CoincidentNodes("min |s_i - t_j| below 2^(-lambda+2)");
}

Separations node_separations(const std::vector<ComplexApprox>& nodes, long lambda) {
  Separations sep = separations_of(nodes);
  if (sep.min_delta.is_zero() ||
      sep.min_delta < PrecFloat::pow2(-std::min(lambda, kExactLambda), 64))
    throw DuplicateNodes("some Delta_i below 2^-lambda");
  return sep;
}

ApproxPoly lagrange_interpolate(const InterpProblem& prob, long ell, const InterpOptions& opt) {
  const NodeSet& ns = prob.knots;
  const long n = ns.size();
  const long tau1 = ns.tau(), tau2 = prob.tau2;
  const auto& sep = ns.separations();

  PlanParams pp;
  pp.ell = ell;
  pp.tau1 = tau1;
  pp.tau2 = tau2;
  pp.n = n;
  pp.lg_prod_delta = n >= 2 ? sep.lg_prod : 0.0;
  PrecisionPlan plan = plan_precision(Formula::Interpolate, pp);
  if (ns.lambda() < plan.lambda || prob.values.lambda < plan.lambda)
    throw InsufficientInputAccuracy("lagrange_interpolate", plan.lambda,
                                    std::min(ns.lambda(), prob.values.lambda));

  if (n == 1) {
    long prec1 = opt.exec_prec.value_or(ell + 64);
    return ApproxPoly::constant(prob.values.values[0].at_prec(prec1), ell);
  }

  // Working budget: fan-in + derivative fan-out + certified reciprocal
  // amplification + the rational-sum rounding growth.
  const double T = lg_eval_bound(2.0 * n * dpos(tau1) + 8 * n - 4, 0, 0);  // |B'(x_i)| upper
  double nu_max = 0.0;
  for (long i = 0; i < n; ++i) nu_max = std::max(nu_max, -(sep.lg_prod - sep.lg_deltas[i]));
  const double rs_round = n * dpos(tau1) + 4.0 * n + lgc(n) + 8;
  const long fanin_p = exec_prec_fan_in(0, n, tau1);
  const long fanout_p =
      exec_prec_fan_out(0, detail::pow2_at_least(n), 1,
                        static_cast<long>(n * dpos(tau1) + 8 * n), ns.rho());
  const long prec = opt.exec_prec.value_or(
      ell + fanin_p + fanout_p +
      static_cast<long>(std::ceil(4 * nu_max + 2 * T + rs_round)) + 128);

  // L1/L2: B and B'.
  auto tree = ns.tree(prec - 64, prec);
  ApproxPoly Bp = tree->root().derivative(prec);
  checks::expect_le("interp.derivative_norm", Bp.norm_inf_lg(),
                    tree->root().norm_inf_lg() + lgc(std::max(n, 2L)));

  // L3: evaluate B' at the knots.
  auto bvals = detail::fan_out_remainders(*tree, Bp, prec, ns.rho());

  // L4: w_i = y_i / B'(x_i), certified through boxes with the separation
  // product as the lower bound on the denominator.
  const long hw = ell + static_cast<long>(std::ceil(4 * nu_max + 2 * T + rs_round)) + 64;
  std::vector<std::pair<ApproxPoly, ApproxPoly>> terms(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    ComplexBox ybox = ComplexBox::around(prob.values.values[i].at_prec(prec), hw, prec);
    ComplexBox bbox = ComplexBox::around(bvals[i].coeff(0), hw, prec);
    ComplexApprox w = certified_div(ybox, bbox, prec, ell + static_cast<long>(rs_round) + 8,
                                    "lagrange_interpolate");
    std::vector<ComplexApprox> den{(-ns.nodes()[i]).at_prec(prec), ComplexApprox(1.0, 0.0, prec)};
    terms[i] = {ApproxPoly::constant(w, prec), ApproxPoly(std::move(den), prec)};
  }

  // L5: the numerator of sum w_i/(x - x_i) is the interpolant.
  MultipointOptions mopt;
  mopt.exec_prec = prec;
  auto [A, B2] = sum_rational(terms, ell, mopt);
  (void)B2;
  A.lambda = ell;
  return A;
}

ApproxPoly vandermonde_solve(const InterpProblem& prob, long ell, const InterpOptions& opt) {
  return lagrange_interpolate(prob, ell, opt);
}

namespace {

// Shared C1-C4 pipeline; outputs P(s_i)/Q(s_i) for P/Q = sum v_k/(x - t_k).
std::vector<ComplexApprox> cauchy_mul_core(const NodeSet& s, const NodeSet& t,
                                           const std::vector<double>& lg_row_st,
                                           const VecApprox& v, long ell, long prec_override,
                                           bool have_prec) {
  const long n = s.size();
  const long tau1 = s.tau(), tau2 = t.tau(), tau3 = v.tau();
  const auto& sept = t.separations();

  // A-priori magnitude/lower-bound exponents for the budget.
  const double lgQ = n * dpos(tau2) + 4.0 * n;  // ||Q||, Q = prod (x - t_k)
  const double lgP = dpos(tau3) + (n - 1) * dpos(tau2) + 4.0 * n + lgc(n);
  const double T = std::max(lg_eval_bound(lgP, n - 1, tau1), lg_eval_bound(lgQ, n, tau1));
  const double lgQ2 = lgQ + 0.5 * lgc(n + 1) + 1;  // lg ||Q||_2
  double nu_max = 0.0;
  for (long i = 0; i < n; ++i) {
    double lgB = 6.0 * lg_row_st[i] - 6.0 * lgQ2 + (n >= 2 ? sept.lg_prod : 0.0) - 6.0;
    nu_max = std::max(nu_max, -lgB);
  }
  const double rs_round = n * dpos(tau2) + 4.0 * n + lgc(n) + 8;
  const long fanout_p = exec_prec_fan_out(0, detail::pow2_at_least(n), 1,
                                          static_cast<long>(lgQ), s.rho());
  const long prec = have_prec
                        ? prec_override
                        : ell + exec_prec_fan_in(0, n, tau2) + fanout_p +
                              static_cast<long>(std::ceil(4 * nu_max + 2 * T + rs_round)) + 128;

  // C1+C2: one fraction for sum v_k/(x - t_k).
  std::vector<std::pair<ApproxPoly, ApproxPoly>> terms(n);
  for (long k = 0; k < n; ++k) {
    std::vector<ComplexApprox> den{(-t.nodes()[k]).at_prec(prec), ComplexApprox(1.0, 0.0, prec)};
    terms[k] = {ApproxPoly::constant(v.values[k].at_prec(prec), prec),
                ApproxPoly(std::move(den), prec)};
  }
  MultipointOptions mopt;
  mopt.exec_prec = prec;
  auto [P, Q] = sum_rational(terms, ell, mopt);

  // C3: evaluate both at the s nodes.
  auto stree = s.tree(prec - 64, prec);
  auto pvals = detail::fan_out_remainders(*stree, P.at_prec(prec), prec, s.rho());
  auto qvals = detail::fan_out_remainders(*stree, Q.at_prec(prec), prec, s.rho());

  // C4: certified fractions; the evaluation lower bound feeds nu.
  const long hw = ell + static_cast<long>(std::ceil(4 * nu_max + 2 * T)) + 64;
  std::vector<ComplexApprox> out(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    ComplexBox pb = ComplexBox::around(pvals[i].coeff(0), hw, prec);
    ComplexBox qb = ComplexBox::around(qvals[i].coeff(0), hw, prec);
    out[i] = certified_div(pb, qb, prec, ell + 2, "cauchy_vec_mul");
  }
  return out;
}

}  // namespace

std::vector<ComplexApprox> cauchy_vec_mul(const CauchySpec& spec, const VecApprox& v, long ell,
                                          const InterpOptions& opt) {
  const long n = spec.n();
  if (static_cast<long>(v.size()) != n) throw DimensionMismatch("cauchy_vec_mul vector length");

  PlanParams pp;
  pp.ell = ell;
  pp.tau1 = spec.s.tau();
  pp.tau2 = spec.t.tau();
  pp.tau3 = v.tau();
  pp.n = n;
  pp.lg_delta_st = spec.lg_delta_st;
  pp.lg_prod_delta_t = n >= 2 ? spec.t.separations().lg_prod : 0.0;
  PrecisionPlan plan = plan_precision(Formula::CauchyMul, pp);
  long lam = std::min({spec.s.lambda(), spec.t.lambda(), v.lambda});
  if (lam < plan.lambda) throw InsufficientInputAccuracy("cauchy_vec_mul", plan.lambda, lam);

  return cauchy_mul_core(spec.s, spec.t, spec.lg_row_s, v, ell,
                         opt.exec_prec.value_or(0), opt.exec_prec.has_value());
}

std::vector<ComplexApprox> trummer(const NodeSet& s_nodes, const VecApprox& v, long ell,
                                   const InterpOptions& opt) {
  const long n = s_nodes.size();
  if (static_cast<long>(v.size()) != n) throw DimensionMismatch("trummer vector length");
  const long tau1 = s_nodes.tau(), tau3 = v.tau();
  const auto& sep = s_nodes.separations();

  PlanParams pp;
  pp.ell = ell;
  pp.tau1 = tau1;
  pp.tau3 = tau3;
  pp.n = n;
  pp.lg_prod_delta_s = n >= 2 ? sep.lg_prod : 0.0;
  PrecisionPlan plan = plan_precision(Formula::Trummer, pp);
  long lam = std::min(s_nodes.lambda(), v.lambda);
  if (lam < plan.lambda) throw InsufficientInputAccuracy("trummer", plan.lambda, lam);

  if (n == 1) return {ComplexApprox(opt.exec_prec.value_or(64))};

  const double lgQ = n * dpos(tau1) + 4.0 * n;
  const double lgP = dpos(tau3) + (n - 1) * dpos(tau1) + 4.0 * n + lgc(n);
  const double T =
      std::max(lg_eval_bound(lgP + lgc(n), n - 2, tau1), lg_eval_bound(lgQ + 2 * lgc(n), n - 2, tau1)) +
      dpos(tau3) + 2;
  double nu_max = 0.0;
  for (long i = 0; i < n; ++i) nu_max = std::max(nu_max, -(sep.lg_prod - sep.lg_deltas[i]) + 1);
  const double rs_round = n * dpos(tau1) + 4.0 * n + lgc(n) + 8;
  const long fanout_p = exec_prec_fan_out(0, detail::pow2_at_least(n), 1,
                                          static_cast<long>(lgQ + 2 * lgc(n)), s_nodes.rho());
  const long prec = opt.exec_prec.value_or(
      ell + exec_prec_fan_in(0, n, tau1) + fanout_p +
      static_cast<long>(std::ceil(4 * nu_max + 2 * T + rs_round)) + 128);

  // Q = prod (x - s_k); P = numerator of sum v_k/(x - s_k).
  auto tree = s_nodes.tree(prec - 64, prec);
  const ApproxPoly& Q = tree->root();
  std::vector<std::pair<ApproxPoly, ApproxPoly>> terms(n);
  for (long k = 0; k < n; ++k) {
    std::vector<ComplexApprox> den{(-s_nodes.nodes()[k]).at_prec(prec),
                                   ComplexApprox(1.0, 0.0, prec)};
    terms[k] = {ApproxPoly::constant(v.values[k].at_prec(prec), prec),
                ApproxPoly(std::move(den), prec)};
  }
  MultipointOptions mopt;
  mopt.exec_prec = prec;
  auto [P, Qdup] = sum_rational(terms, ell, mopt);
  (void)Qdup;

  ApproxPoly Pp = P.derivative(prec);
  ApproxPoly Qp = Q.derivative(prec);
  ApproxPoly Qpp = Qp.derivative(prec);
  checks::expect_le("trummer.P1_norm", Pp.norm_inf_lg(), P.norm_inf_lg() + lgc(std::max(n, 2L)));
  checks::expect_le("trummer.Q2_norm", Qpp.norm_inf_lg(),
                    Q.norm_inf_lg() + 2.0 * lgc(std::max(n, 2L)));

  auto pvals = detail::fan_out_remainders(*tree, Pp, prec, s_nodes.rho());
  auto qpvals = detail::fan_out_remainders(*tree, Qp, prec, s_nodes.rho());
  auto qppvals = detail::fan_out_remainders(*tree, Qpp, prec, s_nodes.rho());

  const long hw = ell + static_cast<long>(std::ceil(4 * nu_max + 2 * T)) + 64;
  std::vector<ComplexApprox> out(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    // (2 P'(s_i) - v_i Q''(s_i)) / (2 Q'(s_i))
    ComplexBox p1 = ComplexBox::around(pvals[i].coeff(0), hw, prec).scaled_pow2(1);
    ComplexBox vq = box_mul(ComplexBox::around(v.values[i].at_prec(prec), hw, prec),
                            ComplexBox::around(qppvals[i].coeff(0), hw, prec), prec);
    ComplexBox num = box_sub(p1, vq, prec);
    ComplexBox den = ComplexBox::around(qpvals[i].coeff(0), hw, prec).scaled_pow2(1);
    out[i] = certified_div(num, den, prec, ell + 2, "trummer");
  }
  return out;
}

std::vector<ComplexApprox> cauchy_solve(const CauchySpec& spec, const VecApprox& r, long ell,
                                        const InterpOptions& opt) {
  const long n = spec.n();
  if (static_cast<long>(r.size()) != n) throw DimensionMismatch("cauchy_solve vector length");
  const long tau1 = spec.s.tau(), tau2 = spec.t.tau(), tau3 = r.tau();
  const auto& seps = spec.s.separations();
  const auto& sept = spec.t.separations();

  PlanParams pp;
  pp.ell = ell;
  pp.tau1 = tau1;
  pp.tau2 = tau2;
  pp.tau3 = tau3;
  pp.n = n;
  pp.lg_delta_st = spec.lg_delta_st;
  pp.lg_prod_delta_s = n >= 2 ? seps.lg_prod : 0.0;
  pp.lg_prod_delta_t = n >= 2 ? sept.lg_prod : 0.0;
  PrecisionPlan plan = plan_precision(Formula::CauchySolve, pp);
  long lam = std::min({spec.s.lambda(), spec.t.lambda(), r.lambda});
  if (lam < plan.lambda) throw InsufficientInputAccuracy("cauchy_solve", plan.lambda, lam);

  // Budget: two diagonal stages (certified divisions against the separation
  // products) around one Cauchy product with roles swapped.
  const double lgps = n * dpos(tau1) + 4.0 * n;
  const double lgpt = n * dpos(tau2) + 4.0 * n;
  const double Td = std::max(lg_eval_bound(lgpt, n, tau1), lg_eval_bound(lgps, n, tau2)) + lgc(n);
  double nu_s = 0.0, nu_t = 0.0;
  for (long i = 0; i < n; ++i) {
    if (n >= 2) {
      nu_s = std::max(nu_s, -(seps.lg_prod - seps.lg_deltas[i]));
      nu_t = std::max(nu_t, -(sept.lg_prod - sept.lg_deltas[i]));
    }
  }
  const double stage_amp = 4 * std::max(nu_s, nu_t) + 2 * Td + dpos(tau3) - std::min(spec.lg_delta_st, 0.0) + lgc(n);
  const long fanout_p = exec_prec_fan_out(0, detail::pow2_at_least(n), 1,
                                          static_cast<long>(std::max(lgps, lgpt)),
                                          std::max(spec.s.rho(), spec.t.rho()));
  const long prec = opt.exec_prec.value_or(
      ell + exec_prec_fan_in(0, n, std::max(tau1, tau2)) + 2 * fanout_p +
      3 * static_cast<long>(std::ceil(stage_amp)) + 256);

  auto stree = spec.s.tree(prec - 64, prec);
  auto ttree = spec.t.tree(prec - 64, prec);
  const ApproxPoly& ps = stree->root();
  const ApproxPoly& pt = ttree->root();
  ApproxPoly psp = ps.derivative(prec);
  ApproxPoly ptp = pt.derivative(prec);

  // Step 1: diagonal data p_t(s_i), p_s'(s_i), p_s(t_i), p_t'(t_i).
  auto pt_at_s = detail::fan_out_remainders(*stree, pt.at_prec(prec), prec, spec.s.rho());
  auto psp_at_s = detail::fan_out_remainders(*stree, psp, prec, spec.s.rho());
  auto ps_at_t = detail::fan_out_remainders(*ttree, ps.at_prec(prec), prec, spec.t.rho());
  auto ptp_at_t = detail::fan_out_remainders(*ttree, ptp, prec, spec.t.rho());

  const long hw = ell + static_cast<long>(std::ceil(stage_amp)) + 96;

  // Step 2: r1 = D2 r with D2_i = p_t(s_i)/p_s'(s_i).
  std::vector<ComplexApprox> r1(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    ComplexBox num = box_mul(ComplexBox::around(pt_at_s[i].coeff(0), hw, prec),
                             ComplexBox::around(r.values[i].at_prec(prec), hw, prec), prec);
    ComplexBox den = ComplexBox::around(psp_at_s[i].coeff(0), hw, prec);
    r1[i] = certified_div(num, den, prec, ell + 2, "cauchy_solve.D2");
  }

  // Step 3: r2 = C(t,s) r1.
  VecApprox r1v(std::move(r1), prec);
  auto r2 = cauchy_mul_core(spec.t, spec.s, spec.lg_row_t, r1v, ell, prec, true);

  // Step 4: v = D1 r2 with D1_i = p_s(t_i)/p_t'(t_i).
  std::vector<ComplexApprox> out(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    ComplexBox num = box_mul(ComplexBox::around(ps_at_t[i].coeff(0), hw, prec),
                             ComplexBox::around(r2[i], hw, prec), prec);
    ComplexBox den = ComplexBox::around(ptp_at_t[i].coeff(0), hw, prec);
    out[i] = certified_div(num, den, prec, ell + 2, "cauchy_solve.D1");
  }
  return out;
}

}  // namespace smat
