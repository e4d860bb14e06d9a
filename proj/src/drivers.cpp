#include "smat/drivers.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "smat/checks.hpp"
#include "smat/errors.hpp"
#include "smat/instances.hpp"
#include "smat/interp.hpp"
#include "smat/io.hpp"
#include "smat/naive.hpp"
#include "smat/oracle.hpp"

namespace smat::drivers {

namespace {

using oracle::ExactVec;
using oracle::to_exact;

std::uint64_t trial_seed(std::uint64_t seed, long trial) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Sizes biased toward small instances with occasional draws at the cap.
long draw_size(gen::Rng& rng, long nmax, long nmin) {
  long e = rng.uniform(0, 6);
  long hi = std::max(nmin, nmax >> e);
  return rng.uniform(nmin, hi);
}

constexpr long kPrec = 64;  // instance storage precision (values are 21-bit dyadics)

// One verify trial; returns the lg error vs the exact oracle.
double run_trial(const std::string& task, gen::Rng& rng, long nmax, long tau_cap, long ell,
                 bool strict) {
  const long tau = rng.uniform(0, tau_cap);
  FftOptions fopt;
  fopt.strict = strict;
  ToeplitzOptions topt;
  topt.strict = strict;

  if (task == "mul") {
    ApproxPoly A = rng.poly(draw_size(rng, nmax, 1), tau, kPrec);
    ApproxPoly B = rng.poly(draw_size(rng, nmax, 1), tau, kPrec);
    ApproxPoly C = poly_mul(A, B, ell, fopt);
    return oracle::lg_dist_inf(oracle::exact_convolution(to_exact(A), to_exact(B)), C);
  }
  if (task == "divide") {
    long ds = draw_size(rng, nmax, 2);
    long dt = rng.uniform(1, std::max(ds / 2, 1L));
    ApproxPoly s = rng.poly(ds, tau, kPrec);
    ApproxPoly t = rng.poly(dt, tau, kPrec);
    DivisionResult dr = poly_divide(s, t, ell, topt);
    auto [q, r] = oracle::exact_divide(to_exact(s), to_exact(t));
    return std::max(oracle::lg_dist_inf(q, dr.quotient), oracle::lg_dist_inf(r, dr.remainder));
  }
  if (task == "tri-inverse") {
    long dim = draw_size(rng, nmax, 1);
    std::vector<ComplexApprox> col;
    col.emplace_back(1.0, 0.0, kPrec);
    for (long i = 1; i < dim; ++i) col.push_back(rng.dyadic_complex(tau, kPrec));
    TriToeplitz T{ApproxPoly(col), true};
    TriToeplitz inv = tri_toeplitz_inverse(T, ell, topt);
    return oracle::lg_dist_inf(oracle::exact_tri_toeplitz_inverse(to_exact(col)), inv.col);
  }
  if (task == "tree") {
    long n = draw_size(rng, nmax, 1);
    NodeSet ns(rng.distinct_nodes(n, tau, kPrec));
    auto tree = build_tree(ns, ell);
    return oracle::lg_dist_inf(oracle::exact_from_roots(to_exact(ns.nodes())), tree->root());
  }
  if (task == "multipoint") {
    long n = draw_size(rng, nmax, 1);
    long dp = rng.uniform(0, rng.uniform(0, 4) == 0 ? 2 * n + 4 : std::max(n - 1, 0L));
    ApproxPoly p = rng.poly(dp, tau, kPrec);
    NodeSet ns(rng.distinct_nodes(n, tau, kPrec));
    auto vals = multipoint_eval(p, ns, ell);
    ExactVec truth = oracle::naive_vandermonde_mul(to_exact(ns.nodes()), to_exact(p));
    return oracle::lg_dist_inf(truth, vals);
  }
  if (task == "vandermonde") {
    long n = draw_size(rng, nmax, 1);
    NodeSet ns(rng.distinct_nodes(n, tau, kPrec));
    VecApprox p(rng.dyadic_vector(n, tau, kPrec));
    auto vals = vandermonde_vec_mul(ns, p, ell);
    return oracle::lg_dist_inf(oracle::naive_vandermonde_mul(to_exact(ns.nodes()),
                                                             to_exact(p.values)),
                               vals);
  }
  if (task == "toeplitz") {
    long n = draw_size(rng, nmax, 1);
    auto col = rng.dyadic_vector(n, tau, kPrec);
    auto row = rng.dyadic_vector(n, tau, kPrec);
    row[0] = col[0];
    ToeplitzMatrix T(col, row);
    VecApprox v(rng.dyadic_vector(n, tau, kPrec));
    auto out = toeplitz_vec_mul(T, v, ell, topt);
    return oracle::lg_dist_inf(
        oracle::naive_toeplitz_mul(to_exact(col), to_exact(row), to_exact(v.values)), out);
  }
  if (task == "hankel") {
    long n = draw_size(rng, nmax, 1);
    auto skew = rng.dyadic_vector(2 * n - 1, tau, kPrec);
    HankelMatrix H(skew);
    VecApprox v(rng.dyadic_vector(n, tau, kPrec));
    auto out = hankel_vec_mul(H, v, ell, topt);
    return oracle::lg_dist_inf(oracle::naive_hankel_mul(to_exact(skew), to_exact(v.values)), out);
  }
  if (task == "mul-many") {
    long m = draw_size(rng, std::max(nmax / 4, 2L), 1);
    std::vector<ApproxPoly> polys;
    ExactVec prod{oracle::ExactComplex(1, 0)};
    for (long j = 0; j < m; ++j) {
      polys.push_back(rng.poly(rng.uniform(1, 4), tau, kPrec));
      prod = oracle::exact_convolution(prod, to_exact(polys.back()));
    }
    ApproxPoly P = mul_many(polys, ell);
    return oracle::lg_dist_inf(prod, P);
  }
  if (task == "rational-sum") {
    long m = draw_size(rng, std::max(nmax / 4, 2L), 1);
    std::vector<std::pair<ApproxPoly, ApproxPoly>> terms;
    std::vector<std::pair<ExactVec, ExactVec>> eterms;
    for (long j = 0; j < m; ++j) {
      long dp = rng.uniform(1, 2);
      ApproxPoly P = rng.monic_poly(dp, tau, kPrec);
      ApproxPoly Q = rng.poly(rng.uniform(0, dp - 1), tau, kPrec);
      eterms.emplace_back(to_exact(Q), to_exact(P));
      terms.emplace_back(std::move(Q), std::move(P));
    }
    auto [Q, P] = sum_rational(terms, ell);
    auto [eq, ep] = oracle::exact_sum_rational(eterms);
    return std::max(oracle::lg_dist_inf(eq, Q), oracle::lg_dist_inf(ep, P));
  }
  if (task == "modular") {
    long m = rng.uniform(1, 4);
    long nm = rng.uniform(1, 3);
    std::vector<ApproxPoly> mods;
    for (long j = 0; j < m; ++j) mods.push_back(rng.monic_poly(nm, tau, kPrec));
    ApproxPoly F = rng.poly(rng.uniform(0, 2 * m * nm), tau, kPrec);
    auto rems = modular_reduce_many(F, mods, ell);
    double worst = -1e300;
    for (long j = 0; j < m; ++j) {
      auto [q, r] = oracle::exact_divide(to_exact(F), to_exact(mods[j]));
      (void)q;
      worst = std::max(worst, oracle::lg_dist_inf(r, rems[j]));
    }
    return worst;
  }
  if (task == "interp") {
    long n = draw_size(rng, nmax, 1);
    NodeSet ns(rng.distinct_nodes(n, tau, kPrec));
    VecApprox y(rng.dyadic_vector(n, tau, kPrec));
    ExactVec truth = oracle::exact_lagrange_interpolate(to_exact(ns.nodes()), to_exact(y.values));
    InterpProblem prob(std::move(ns), std::move(y));
    ApproxPoly A = lagrange_interpolate(prob, ell);
    return oracle::lg_dist_inf(truth, A);
  }
  if (task == "cauchy") {
    long n = draw_size(rng, nmax, 1);
    auto s = rng.distinct_nodes(n, tau, kPrec);
    auto t = rng.distinct_nodes_away(n, tau, kPrec, s);
    VecApprox v(rng.dyadic_vector(n, tau, kPrec));
    CauchySpec spec{NodeSet(s), NodeSet(t)};
    auto out = cauchy_vec_mul(spec, v, ell);
    return oracle::lg_dist_inf(oracle::naive_cauchy_mul(to_exact(s), to_exact(t),
                                                        to_exact(v.values)),
                               out);
  }
  if (task == "trummer") {
    long n = draw_size(rng, nmax, 1);
    auto s = rng.distinct_nodes(n, tau, kPrec);
    VecApprox v(rng.dyadic_vector(n, tau, kPrec));
    auto out = trummer(NodeSet(s), v, ell);
    return oracle::lg_dist_inf(oracle::naive_trummer(to_exact(s), to_exact(v.values)), out);
  }
  if (task == "cauchy-solve") {
    long n = draw_size(rng, nmax, 1);
    auto s = rng.distinct_nodes(n, tau, kPrec);
    auto t = rng.distinct_nodes_away(n, tau, kPrec, s);
    VecApprox r(rng.dyadic_vector(n, tau, kPrec));
    CauchySpec spec{NodeSet(s), NodeSet(t)};
    auto out = cauchy_solve(spec, r, ell);
    return oracle::lg_dist_inf(oracle::exact_cauchy_solve(to_exact(s), to_exact(t),
                                                          to_exact(r.values)),
                               out);
  }
  throw UnknownFormula(task);
}

}  // namespace

const std::vector<std::string>& verify_tasks() {
  static const std::vector<std::string> tasks = {
      "mul",      "divide",       "tri-inverse", "tree",   "multipoint",
      "vandermonde", "toeplitz",  "hankel",      "mul-many", "rational-sum",
      "modular",  "interp",       "cauchy",      "trummer", "cauchy-solve"};
  return tasks;
}

VerifyResult verify_task(const std::string& task, long n, long tau, long ell, long trials,
                         std::uint64_t seed, bool strict) {
  VerifyResult res;
  res.task = task;
  res.trials = trials;
  if (std::find(verify_tasks().begin(), verify_tasks().end(), task) == verify_tasks().end())
    throw UnknownFormula(task);
  if (trials == 0) {
    res.pass = true;
    res.note = "0 trials: vacuous pass";
    return res;
  }

  std::uint64_t violations_before = checks::violations();
  static const long ell_cycle[3] = {32, 64, 96};

  std::vector<double> margins(trials, -1e300), errs(trials, -1e300);
  std::vector<std::string> errors(trials);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < trials; ++i) {
    long ell_i = ell > 0 ? ell : ell_cycle[i % 3];
    gen::Rng rng(trial_seed(seed, i));
    try {
      double lg = run_trial(task, rng, n, tau, ell_i, strict);
      errs[i] = lg;
      margins[i] = lg + static_cast<double>(ell_i);
    } catch (const std::exception& e) {
      errors[i] = e.what();
      margins[i] = 1e300;
    }
  }

  for (long i = 0; i < trials; ++i) {
    res.max_lg_err = std::max(res.max_lg_err, errs[i]);
    res.worst_margin = std::max(res.worst_margin, margins[i]);
    if (margins[i] > 0) {
      ++res.failures;
      if (res.note.empty() && !errors[i].empty()) res.note = errors[i];
    }
  }
  res.bound_violations = checks::violations() - violations_before;
  res.pass = res.failures == 0 && res.bound_violations == 0;
  return res;
}

// --- plan sufficiency -------------------------------------------------------

namespace {

struct Probe {
  // Exact instance data (fixed per formula).
  std::vector<ApproxPoly> polys;
  std::vector<std::vector<ComplexApprox>> vecs;
  ExactVec truth_vec;
  std::vector<ExactVec> truth_polys;
  std::vector<ComplexApprox> truth_values;  // for fft (non-rational truth)
  long lambda = 0;
};

double lg_vec_dist(const std::vector<ComplexApprox>& a, const std::vector<ComplexApprox>& b) {
  double worst = -1e300;
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, cdist(a[i], b[i], 96).lg_abs());
  return worst;
}

}  // namespace

const std::vector<Formula>& plan_check_formulas() {
  static const std::vector<Formula> fs = {
      Formula::FftEval,     Formula::Mul,          Formula::MulStrict,
      Formula::TriInverseStep, Formula::TriInverse, Formula::Divide,
      Formula::DivideStrict, Formula::FanIn,       Formula::FanOut,
      Formula::ProductMany, Formula::RationalSum,  Formula::ModularReduce,
      Formula::Interpolate, Formula::CauchyMul,    Formula::Trummer,
      Formula::CauchySolve};
  return fs;
}

PlanCheckResult plan_sufficiency(Formula f, long trials, long ell, std::uint64_t seed) {
  PlanCheckResult res;
  res.formula = f;
  res.trials = trials;
  res.lg_tol = static_cast<double>(-ell);

  gen::Rng setup(seed ^ 0xabcdef12345ULL);
  const long tau = 2;
  const long n = 8;

  // Fixed exact instance per formula.
  ApproxPoly A = setup.poly(7, tau, kPrec);
  ApproxPoly B = setup.poly(7, tau, kPrec);
  ApproxPoly P0 = setup.poly(4, tau, kPrec);
  ApproxPoly P1 = setup.poly(8, tau, kPrec);
  std::vector<ComplexApprox> col;
  col.emplace_back(1.0, 0.0, kPrec);
  for (long i = 1; i < n; ++i) col.push_back(setup.dyadic_complex(tau, kPrec));
  ApproxPoly S8 = setup.poly(8, tau, kPrec);
  ApproxPoly T4 = setup.monic_poly(4, tau, kPrec);
  auto nodes = setup.distinct_nodes(n, tau, kPrec);
  auto nodes2 = setup.distinct_nodes_away(n, tau, kPrec, nodes);
  auto yvals = setup.dyadic_vector(n, tau, kPrec);
  std::vector<ApproxPoly> many;
  for (long j = 0; j < 4; ++j) many.push_back(setup.poly(4, tau, kPrec));
  std::vector<std::pair<ApproxPoly, ApproxPoly>> rterms;
  for (long j = 0; j < 4; ++j)
    rterms.emplace_back(setup.poly(1, tau, kPrec), setup.monic_poly(2, tau, kPrec));
  std::vector<ApproxPoly> mods;
  for (long j = 0; j < 4; ++j) mods.push_back(setup.monic_poly(2, tau, kPrec));
  ApproxPoly F16 = setup.poly(16, tau, kPrec);

  PlanParams pp;
  pp.ell = ell;

  // Instance-specific certificate and truth.
  ExactVec truth_vec;
  std::vector<ExactVec> truth_polys;
  std::vector<ComplexApprox> fft_truth;
  switch (f) {
    case Formula::FftEval: {
      pp.tau = A.tau;
      pp.k = 3;
      fft_truth = detail::dft_points(A, 8, 2048);
      break;
    }
    case Formula::Mul:
    case Formula::MulStrict: {
      pp.tau1 = A.tau;
      pp.tau2 = B.tau;
      pp.d = 7;
      pp.k = lgc(15L);
      truth_polys.push_back(oracle::exact_convolution(to_exact(A), to_exact(B)));
      break;
    }
    case Formula::TriInverseStep: {
      pp.tau1 = P0.tau;
      pp.tau2 = P1.tau;
      pp.d = 4;
      truth_polys.push_back(oracle::exact_convolution(
          oracle::exact_convolution(to_exact(P0), to_exact(P0)), to_exact(P1)));
      break;
    }
    case Formula::TriInverse: {
      std::vector<ComplexApprox> sub(col.begin() + 1, col.end());
      pp.tau = VecApprox(sub).tau();
      pp.n = n - 1;
      pp.rho = tau + 2;
      truth_polys.push_back(oracle::exact_tri_toeplitz_inverse(to_exact(col)));
      break;
    }
    case Formula::Divide:
    case Formula::DivideStrict: {
      pp.tau1 = S8.tau;
      pp.tau2 = T4.tau;
      pp.n = 4;
      pp.rho = tau + 2;
      auto [q, r] = oracle::exact_divide(to_exact(S8), to_exact(T4));
      truth_polys.push_back(q);
      truth_polys.push_back(r);
      break;
    }
    case Formula::FanIn: {
      pp.tau = NodeSet(nodes).tau();
      pp.n = n;
      truth_polys.push_back(oracle::exact_from_roots(to_exact(nodes)));
      break;
    }
    case Formula::FanOut: {
      pp.tau1 = A.tau;
      pp.rho = NodeSet(nodes).rho();
      pp.n = n;
      truth_vec = oracle::naive_vandermonde_mul(to_exact(nodes), to_exact(A));
      break;
    }
    case Formula::ProductMany: {
      long t = 0;
      for (auto& P : many) t = std::max(t, P.tau);
      pp.tau = t;
      pp.n = 4;
      pp.m = 4;
      ExactVec prod{oracle::ExactComplex(1, 0)};
      for (auto& P : many) prod = oracle::exact_convolution(prod, to_exact(P));
      truth_polys.push_back(prod);
      break;
    }
    case Formula::RationalSum: {
      long t1 = 0, t2 = 0;
      for (auto& [Q, P] : rterms) {
        t1 = std::max(t1, Q.tau);
        t2 = std::max(t2, P.tau);
      }
      pp.tau1 = t1;
      pp.tau2 = t2;
      pp.n = 2;
      pp.m = 4;
      std::vector<std::pair<ExactVec, ExactVec>> et;
      for (auto& [Q, P] : rterms) et.emplace_back(to_exact(Q), to_exact(P));
      auto [eq, ep] = oracle::exact_sum_rational(et);
      truth_polys.push_back(eq);
      truth_polys.push_back(ep);
      break;
    }
    case Formula::ModularReduce: {
      pp.tau1 = F16.tau;
      pp.n = 2;
      pp.m = 4;
      pp.rho = tau + 2;
      for (auto& mj : mods)
        truth_polys.push_back(oracle::exact_divide(to_exact(F16), to_exact(mj)).second);
      break;
    }
    case Formula::Interpolate: {
      NodeSet ns(nodes);
      pp.tau1 = ns.tau();
      pp.tau2 = VecApprox(yvals).tau();
      pp.n = n;
      pp.lg_prod_delta = ns.separations().lg_prod;
      truth_polys.push_back(oracle::exact_lagrange_interpolate(to_exact(nodes), to_exact(yvals)));
      break;
    }
    case Formula::CauchyMul: {
      CauchySpec spec{NodeSet(nodes), NodeSet(nodes2)};
      pp.tau1 = spec.s.tau();
      pp.tau2 = spec.t.tau();
      pp.tau3 = VecApprox(yvals).tau();
      pp.n = n;
      pp.lg_delta_st = spec.lg_delta_st;
      pp.lg_prod_delta_t = spec.t.separations().lg_prod;
      truth_vec = oracle::naive_cauchy_mul(to_exact(nodes), to_exact(nodes2), to_exact(yvals));
      break;
    }
    case Formula::Trummer: {
      NodeSet ns(nodes);
      pp.tau1 = ns.tau();
      pp.tau3 = VecApprox(yvals).tau();
      pp.n = n;
      pp.lg_prod_delta_s = ns.separations().lg_prod;
      truth_vec = oracle::naive_trummer(to_exact(nodes), to_exact(yvals));
      break;
    }
    case Formula::CauchySolve: {
      CauchySpec spec{NodeSet(nodes), NodeSet(nodes2)};
      pp.tau1 = spec.s.tau();
      pp.tau2 = spec.t.tau();
      pp.tau3 = VecApprox(yvals).tau();
      pp.n = n;
      pp.lg_delta_st = spec.lg_delta_st;
      pp.lg_prod_delta_s = spec.s.separations().lg_prod;
      pp.lg_prod_delta_t = spec.t.separations().lg_prod;
      truth_vec = oracle::exact_cauchy_solve(to_exact(nodes), to_exact(nodes2), to_exact(yvals));
      break;
    }
  }

  PrecisionPlan plan = plan_precision(f, pp);
  res.lambda = plan.lambda;
  const long lam = plan.lambda;

  for (long trial = 0; trial < trials; ++trial) {
    gen::Rng rng(trial_seed(seed, trial));
    double lg = 1e300;
    switch (f) {
      case Formula::FftEval: {
        ApproxPoly Ap = gen::perturb_poly(rng, A, lam);
        auto vals = fft_eval_unity(Ap, 3, ell);
        lg = lg_vec_dist(fft_truth, vals);
        break;
      }
      case Formula::Mul:
      case Formula::MulStrict: {
        FftOptions o;
        o.strict = f == Formula::MulStrict;
        ApproxPoly Ap = gen::perturb_poly(rng, A, lam);
        ApproxPoly Bp = gen::perturb_poly(rng, B, lam);
        lg = oracle::lg_dist_inf(truth_polys[0], poly_mul(Ap, Bp, ell, o));
        break;
      }
      case Formula::TriInverseStep: {
        ApproxPoly P0p = gen::perturb_poly(rng, P0, lam);
        ApproxPoly P1p = gen::perturb_poly(rng, P1, lam);
        ApproxPoly sq = detail::mul_at(P0p, P0p, plan.working_p, lam);
        ApproxPoly prod = detail::mul_at(sq, P1p, plan.working_p, ell);
        lg = oracle::lg_dist_inf(truth_polys[0], prod);
        break;
      }
      case Formula::TriInverse: {
        std::vector<ComplexApprox> cp = gen::perturb(rng, col, lam);
        cp[0] = ComplexApprox(1.0, 0.0, kPrec);  // unit diagonal is structural
        TriToeplitz T{ApproxPoly(cp, lam), true};
        lg = oracle::lg_dist_inf(truth_polys[0], tri_toeplitz_inverse(T, ell).col);
        break;
      }
      case Formula::Divide:
      case Formula::DivideStrict: {
        ToeplitzOptions o;
        o.strict = f == Formula::DivideStrict;
        ApproxPoly sp = gen::perturb_poly(rng, S8, lam);
        ApproxPoly tp = gen::perturb_poly(rng, T4, lam);
        DivisionResult dr = poly_divide(sp, tp, ell, o);
        lg = std::max(oracle::lg_dist_inf(truth_polys[0], dr.quotient),
                      oracle::lg_dist_inf(truth_polys[1], dr.remainder));
        break;
      }
      case Formula::FanIn: {
        NodeSet ns(gen::perturb(rng, nodes, lam), lam);
        auto tree = build_tree(ns, ell);
        lg = oracle::lg_dist_inf(truth_polys[0], tree->root());
        break;
      }
      case Formula::FanOut: {
        NodeSet ns(gen::perturb(rng, nodes, lam), lam);
        ApproxPoly Ap = gen::perturb_poly(rng, A, lam);
        lg = oracle::lg_dist_inf(truth_vec, multipoint_eval(Ap, ns, ell));
        break;
      }
      case Formula::ProductMany: {
        std::vector<ApproxPoly> ps;
        for (auto& P : many) ps.push_back(gen::perturb_poly(rng, P, lam));
        lg = oracle::lg_dist_inf(truth_polys[0], mul_many(ps, ell));
        break;
      }
      case Formula::RationalSum: {
        std::vector<std::pair<ApproxPoly, ApproxPoly>> ts;
        for (auto& [Q, P] : rterms)
          ts.emplace_back(gen::perturb_poly(rng, Q, lam), gen::perturb_poly(rng, P, lam));
        auto [Qo, Po] = sum_rational(ts, ell);
        lg = std::max(oracle::lg_dist_inf(truth_polys[0], Qo),
                      oracle::lg_dist_inf(truth_polys[1], Po));
        break;
      }
      case Formula::ModularReduce: {
        std::vector<ApproxPoly> ms;
        for (auto& mj : mods) ms.push_back(gen::perturb_poly(rng, mj, lam));
        ApproxPoly Fp = gen::perturb_poly(rng, F16, lam);
        auto rems = modular_reduce_many(Fp, ms, ell);
        lg = -1e300;
        for (size_t j = 0; j < rems.size(); ++j)
          lg = std::max(lg, oracle::lg_dist_inf(truth_polys[j], rems[j]));
        break;
      }
      case Formula::Interpolate: {
        NodeSet ns(gen::perturb(rng, nodes, lam), lam);
        VecApprox y(gen::perturb(rng, yvals, lam), lam);
        InterpProblem prob(std::move(ns), std::move(y));
        lg = oracle::lg_dist_inf(truth_polys[0], lagrange_interpolate(prob, ell));
        break;
      }
      case Formula::CauchyMul: {
        CauchySpec spec{NodeSet(gen::perturb(rng, nodes, lam), lam),
                        NodeSet(gen::perturb(rng, nodes2, lam), lam)};
        VecApprox v(gen::perturb(rng, yvals, lam), lam);
        lg = oracle::lg_dist_inf(truth_vec, cauchy_vec_mul(spec, v, ell));
        break;
      }
      case Formula::Trummer: {
        NodeSet ns(gen::perturb(rng, nodes, lam), lam);
        VecApprox v(gen::perturb(rng, yvals, lam), lam);
        lg = oracle::lg_dist_inf(truth_vec, trummer(ns, v, ell));
        break;
      }
      case Formula::CauchySolve: {
        CauchySpec spec{NodeSet(gen::perturb(rng, nodes, lam), lam),
                        NodeSet(gen::perturb(rng, nodes2, lam), lam)};
        VecApprox rv(gen::perturb(rng, yvals, lam), lam);
        lg = oracle::lg_dist_inf(truth_vec, cauchy_solve(spec, rv, ell));
        break;
      }
    }
    res.max_lg_err = std::max(res.max_lg_err, lg);
    if (lg > static_cast<double>(-ell)) ++res.violations;
  }
  res.pass = res.violations == 0;
  return res;
}

// --- benchmark --------------------------------------------------------------

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::uint64_t digest_values(const std::vector<ComplexApprox>& v) {
  std::ostringstream os;
  for (const auto& z : v) os << format_value(z.re) << "," << format_value(z.im) << ";";
  return gen::fnv1a(os.str());
}

}  // namespace

std::vector<BenchRow> bench_task(const std::string& task, const std::vector<long>& ns, long ell,
                                 long tau, std::uint64_t seed, long* prec_out) {
  std::vector<BenchRow> rows;
  bool checks_were_on = checks::enabled();
  checks::set_enabled(false);

  for (long n : ns) {
    gen::Rng rng(trial_seed(seed, n));
    const long prec = ell + std::max(tau, 0L) + 6 * lgc(std::max(n, 2L)) + 64;
    if (prec_out) *prec_out = prec;
    BenchRow row;
    row.n = n;

    MultipointOptions mopt;
    mopt.exec_prec = prec;
    ToeplitzOptions topt;
    topt.exec_prec = prec;
    InterpOptions iopt;
    iopt.exec_prec = prec;
    FftOptions fopt;
    fopt.exec_prec = prec;

    if (task == "multipoint" || task == "vandermonde") {
      ApproxPoly p = rng.poly(n - 1, tau, kPrec);
      NodeSet nsod(rng.distinct_nodes(n, tau, kPrec));
      row.digest = digest_values(nsod.nodes()) ^ digest_values(p.coeffs);
      auto t0 = std::chrono::steady_clock::now();
      auto fast = multipoint_eval(p, nsod, ell, mopt);
      row.fast_ms = ms_since(t0);
      t0 = std::chrono::steady_clock::now();
      auto slow = naive::multipoint_eval(p, nsod.nodes(), prec);
      row.naive_ms = ms_since(t0);
      (void)fast;
      (void)slow;
    } else if (task == "mul") {
      ApproxPoly A = rng.poly(n, tau, kPrec), B = rng.poly(n, tau, kPrec);
      row.digest = digest_values(A.coeffs) ^ digest_values(B.coeffs);
      auto t0 = std::chrono::steady_clock::now();
      auto fast = poly_mul(A, B, ell, fopt);
      row.fast_ms = ms_since(t0);
      t0 = std::chrono::steady_clock::now();
      // schoolbook reference
      std::vector<ComplexApprox> c(2 * n + 1, ComplexApprox(prec));
      PrecFloat tr(prec), ti(prec);
      for (long i = 0; i <= n; ++i)
        for (long j = 0; j <= n; ++j) {
          mpfr_fmms(tr.raw(), A.coeffs[i].re.raw(), B.coeffs[j].re.raw(), A.coeffs[i].im.raw(),
                    B.coeffs[j].im.raw(), MPFR_RNDN);
          mpfr_fmma(ti.raw(), A.coeffs[i].re.raw(), B.coeffs[j].im.raw(), A.coeffs[i].im.raw(),
                    B.coeffs[j].re.raw(), MPFR_RNDN);
          mpfr_add(c[i + j].re.raw(), c[i + j].re.raw(), tr.raw(), MPFR_RNDN);
          mpfr_add(c[i + j].im.raw(), c[i + j].im.raw(), ti.raw(), MPFR_RNDN);
        }
      row.naive_ms = ms_since(t0);
      (void)fast;
    } else if (task == "toeplitz") {
      auto col = rng.dyadic_vector(n, tau, kPrec);
      auto rowv = rng.dyadic_vector(n, tau, kPrec);
      rowv[0] = col[0];
      ToeplitzMatrix T(col, rowv);
      VecApprox v(rng.dyadic_vector(n, tau, kPrec));
      row.digest = digest_values(col) ^ digest_values(v.values);
      auto t0 = std::chrono::steady_clock::now();
      auto fast = toeplitz_vec_mul(T, v, ell, topt);
      row.fast_ms = ms_since(t0);
      t0 = std::chrono::steady_clock::now();
      auto slow = naive::toeplitz_mul(T, v.values, prec);
      row.naive_ms = ms_since(t0);
      (void)fast;
      (void)slow;
    } else if (task == "hankel") {
      auto skew = rng.dyadic_vector(2 * n - 1, tau, kPrec);
      HankelMatrix H(skew);
      VecApprox v(rng.dyadic_vector(n, tau, kPrec));
      row.digest = digest_values(skew) ^ digest_values(v.values);
      auto t0 = std::chrono::steady_clock::now();
      auto fast = hankel_vec_mul(H, v, ell, topt);
      row.fast_ms = ms_since(t0);
      t0 = std::chrono::steady_clock::now();
      auto slow = naive::hankel_mul(H, v.values, prec);
      row.naive_ms = ms_since(t0);
      (void)fast;
      (void)slow;
    } else if (task == "cauchy") {
      auto s = rng.distinct_nodes(n, tau, kPrec);
      auto t = rng.distinct_nodes_away(n, tau, kPrec, s);
      VecApprox v(rng.dyadic_vector(n, tau, kPrec));
      CauchySpec spec{NodeSet(s), NodeSet(t)};
      row.digest = digest_values(s) ^ digest_values(t) ^ digest_values(v.values);
      auto t0 = std::chrono::steady_clock::now();
      auto fast = cauchy_vec_mul(spec, v, ell, iopt);
      row.fast_ms = ms_since(t0);
      t0 = std::chrono::steady_clock::now();
      auto slow = naive::cauchy_mul(s, t, v.values, prec);
      row.naive_ms = ms_since(t0);
      (void)fast;
      (void)slow;
    } else if (task == "trummer") {
      auto s = rng.distinct_nodes(n, tau, kPrec);
      VecApprox v(rng.dyadic_vector(n, tau, kPrec));
      NodeSet nsod(s);
      row.digest = digest_values(s) ^ digest_values(v.values);
      auto t0 = std::chrono::steady_clock::now();
      auto fast = trummer(nsod, v, ell, iopt);
      row.fast_ms = ms_since(t0);
      t0 = std::chrono::steady_clock::now();
      auto slow = naive::trummer(s, v.values, prec);
      row.naive_ms = ms_since(t0);
      (void)fast;
      (void)slow;
    } else if (task == "interp") {
      NodeSet nsod(rng.distinct_nodes(n, tau, kPrec));
      VecApprox y(rng.dyadic_vector(n, tau, kPrec));
      row.digest = digest_values(nsod.nodes()) ^ digest_values(y.values);
      InterpProblem prob(nsod, y);
      auto t0 = std::chrono::steady_clock::now();
      auto fast = lagrange_interpolate(prob, ell, iopt);
      row.fast_ms = ms_since(t0);
      t0 = std::chrono::steady_clock::now();
      // Newton divided differences at the same precision as the reference.
      std::vector<ComplexApprox> coef = y.values;
      for (long j = 1; j < n; ++j)
        for (long i = n - 1; i >= j; --i) {
          ComplexApprox num = csub(coef[i], coef[i - 1], prec);
          ComplexApprox den = csub(nsod.nodes()[i], nsod.nodes()[i - j], prec);
          coef[i] = cdiv(num, den, prec);
        }
      row.naive_ms = ms_since(t0);
      (void)fast;
    } else {
      checks::set_enabled(checks_were_on);
      throw UnknownFormula(task);
    }
    rows.push_back(row);
  }
  checks::set_enabled(checks_were_on);
  return rows;
}

}  // namespace smat::drivers
