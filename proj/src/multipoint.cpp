#include "smat/multipoint.hpp"

#include <omp.h>

#include <algorithm>
#include <mutex>

#include "smat/bounds.hpp"
#include "smat/checks.hpp"
#include "smat/errors.hpp"

namespace smat {

namespace {

bool is_pad(const ApproxPoly& p) {
  return p.degree == 0 && !p.zero && mpfr_cmp_ui(p.coeffs[0].re.raw(), 1) == 0 &&
         p.coeffs[0].im.is_zero();
}

ApproxPoly pad_one(long prec) {
  ApproxPoly p = ApproxPoly::constant(ComplexApprox(1.0, 0.0, prec));
  return p;
}

// Fan-in over arbitrary monic leaves (padded with ones); shared by the node
// tree and the modular-reduction tree.
std::shared_ptr<SubproductTree> build_leaf_tree(std::vector<ApproxPoly> leaves, long real_count,
                                                long ell, long prec, double fan_in_lg_bound) {
  auto tree = std::make_shared<SubproductTree>();
  tree->real_leaves = real_count;
  tree->built_ell = ell;
  tree->built_prec = prec;
  long K = detail::pow2_at_least(std::max<long>(1, static_cast<long>(leaves.size())));
  while (static_cast<long>(leaves.size()) < K) leaves.push_back(pad_one(prec));
  tree->padded = K;
  tree->levels.push_back(std::move(leaves));

  while (static_cast<long>(tree->levels.back().size()) > 1) {
    const auto& cur = tree->levels.back();
    std::vector<ApproxPoly> next(cur.size() / 2);
    const long count = static_cast<long>(next.size());
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < count; ++j) {
      const ApproxPoly& L = cur[2 * j];
      const ApproxPoly& R = cur[2 * j + 1];
      if (is_pad(L)) {
        next[j] = R;
      } else if (is_pad(R)) {
        next[j] = L;
      } else {
        next[j] = detail::mul_at(L, R, prec, ell);
        checks::expect_le("fan_in.norm", next[j].norm_inf_lg(),
                          checks::logadd2(fan_in_lg_bound, static_cast<double>(-ell + 1)));
      }
    }
    tree->levels.push_back(std::move(next));
  }
  return tree;
}

}  // namespace

Separations separations_of(const std::vector<ComplexApprox>& nodes) {
  const long n = static_cast<long>(nodes.size());
  if (n < 2) throw DimensionMismatch("separations need at least two nodes");
  const long prec = 96;

  Separations sep;
  sep.deltas.assign(n, PrecFloat(prec));
  std::vector<double> lgs(n, 1e300);

#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    PrecFloat best(prec);
    bool have = false;
    for (long j = 0; j < n; ++j) {
      if (j == i) continue;
      PrecFloat dr(prec), di(prec);
      mpfr_sub(dr.raw(), nodes[i].re.raw(), nodes[j].re.raw(), MPFR_RNDZ);
      mpfr_sub(di.raw(), nodes[i].im.raw(), nodes[j].im.raw(), MPFR_RNDZ);
      PrecFloat d = hypot(dr, di, prec, MPFR_RNDD);
      if (!have || d < best) {
        best = d;
        have = true;
      }
    }
    sep.deltas[i] = best;
    lgs[i] = best.lg_abs();
  }

  sep.min_delta = sep.deltas[0];
  sep.lg_prod = 0.0;
  sep.lg_deltas = lgs;
  for (long i = 0; i < n; ++i) {
    if (sep.deltas[i] < sep.min_delta) sep.min_delta = sep.deltas[i];
    sep.lg_prod += lgs[i];
  }
  return sep;
}

NodeSet::NodeSet(std::vector<ComplexApprox> nodes, long lambda)
    : nodes_(std::move(nodes)), lambda_(std::max(1L, lambda)) {
  if (nodes_.empty()) throw DimensionMismatch("empty node set");
  long m = LONG_MIN;
  for (const auto& z : nodes_)
    if (!z.is_zero()) m = std::max(m, z.mag_exp_upper());
  tau_ = (m == LONG_MIN) ? 0 : m;
  rho_ = std::max(tau_, 0L);
  if (size() >= 2) {
    sep_ = separations_of(nodes_);
    if (sep_.min_delta.is_zero() ||
        sep_.min_delta < PrecFloat::pow2(-std::min(lambda_, kExactLambda), 64))
      throw DuplicateNodes("minimum pairwise distance below the input accuracy");
  } else {
    sep_.lg_prod = 0.0;
    sep_.min_delta = PrecFloat::pow2(0, 64);
  }
}

std::shared_ptr<const SubproductTree> NodeSet::tree(long ell, long prec) const {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (tree_ && tree_->built_ell >= ell && tree_->built_prec >= prec) return tree_;
  tree_ = detail::build_tree_at(nodes_, ell, prec, tau_);
  return tree_;
}

namespace detail {

std::shared_ptr<SubproductTree> build_tree_at(const std::vector<ComplexApprox>& nodes, long ell,
                                              long prec, long node_tau) {
  const long n = static_cast<long>(nodes.size());
  std::vector<ApproxPoly> leaves;
  leaves.reserve(n);
  for (const auto& x : nodes) {
    std::vector<ComplexApprox> c{(-x).at_prec(prec), ComplexApprox(1.0, 0.0, prec)};
    leaves.emplace_back(std::move(c));
  }
  // Stated supermoduli norm bound (tau is a positive integer there).
  double bound = static_cast<double>(n) * std::max<double>(node_tau, 1.0) + 8.0 * n -
                 2.0 * lgc(std::max(n, 1L)) - 8.0;
  return build_leaf_tree(std::move(leaves), n, ell, prec, bound);
}

std::vector<ApproxPoly> fan_out_remainders(const SubproductTree& tree, const ApproxPoly& F,
                                           long prec, long rho) {
  const long k = tree.height();

  // Root step: bring the dividend below the root degree so every descent
  // division fits the cached inverse length.
  ApproxPoly top = F.at_prec(prec);
  const ApproxPoly& root = tree.root();
  if (!is_pad(root) && top.degree >= root.degree) {
    top = divide_core(top, root, prec, rho).second;
  }

  std::vector<ApproxPoly> cur{std::move(top)};
  for (long h = k; h-- > 0;) {
    const auto& mods = tree.levels[h];
    std::vector<ApproxPoly> next(mods.size());
    const long count = static_cast<long>(mods.size());
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < count; ++j) {
      const ApproxPoly& mj = mods[j];
      if (is_pad(mj)) continue;
      const ApproxPoly& parent = cur[j / 2];
      if (parent.degree < mj.degree) {
        next[j] = parent;
        continue;
      }
      // Inverse series of the reversed modulus, sized for dividends of
      // degree < 2 deg(mj).
      std::vector<ComplexApprox> u;
      u.reserve(mj.degree);
      for (long i = 0; i < mj.degree; ++i) u.push_back(mj.coeff(mj.degree - i).at_prec(prec));
      long need = std::min<long>(mj.degree, parent.degree - mj.degree + 1);
      auto w = invert_unit_series(u, static_cast<size_t>(need), prec, parent.lambda);
      next[j] = remainder_with_inverse(parent, mj, w, prec, rho);
    }
    cur = std::move(next);
  }

  cur.resize(tree.real_leaves);
  return cur;
}

}  // namespace detail

std::shared_ptr<const SubproductTree> build_tree(const NodeSet& ns, long ell,
                                                 const MultipointOptions& opt) {
  PlanParams pp;
  pp.ell = ell;
  pp.n = ns.size();
  pp.tau = ns.tau();
  PrecisionPlan plan = plan_precision(Formula::FanIn, pp);
  if (ns.lambda() < plan.lambda)
    throw InsufficientInputAccuracy("build_tree", plan.lambda, ns.lambda());

  const long prec = opt.exec_prec.value_or(exec_prec_fan_in(ell, ns.size(), ns.tau()));
  return ns.tree(ell, prec);
}

std::vector<ComplexApprox> multipoint_eval(const ApproxPoly& p, const NodeSet& ns, long ell,
                                           const MultipointOptions& opt) {
  const long n = ns.size();
  const long rho = opt.rho.value_or(ns.rho());

  if (p.zero) return std::vector<ComplexApprox>(n, ComplexApprox(64));

  // Many more nodes than coefficients: evaluate in node batches.
  if (n > 2 * (p.degree + 1)) {
    const long batch = 2 * (p.degree + 1);
    std::vector<ComplexApprox> out;
    out.reserve(n);
    for (long at = 0; at < n; at += batch) {
      long len = std::min(batch, n - at);
      std::vector<ComplexApprox> part(ns.nodes().begin() + at, ns.nodes().begin() + at + len);
      if (len == 1) {
        long prec1 = opt.exec_prec.value_or(ell + std::max(p.tau, 0L) +
                                            rho * std::max(p.degree, 1L) +
                                            2 * lgc(p.degree + 1) + 64);
        out.push_back(p.eval_horner(part[0], prec1));
        continue;
      }
      NodeSet sub(std::move(part), ns.lambda());
      auto vals = multipoint_eval(p, sub, ell, opt);
      out.insert(out.end(), vals.begin(), vals.end());
    }
    return out;
  }

  PlanParams pp;
  pp.ell = ell;
  pp.tau1 = p.tau;
  pp.rho = rho;
  pp.n = n;
  PrecisionPlan plan = plan_precision(Formula::FanOut, pp);
  if (p.lambda < plan.lambda || ns.lambda() < plan.lambda)
    throw InsufficientInputAccuracy("multipoint_eval", plan.lambda,
                                    std::min(p.lambda, ns.lambda()));

  long prec = opt.exec_prec.value_or(exec_prec_fan_out(ell, detail::pow2_at_least(n), 1, p.tau, rho) +
                                     exec_prec_fan_in(0, n, ns.tau()));

  auto tree = ns.tree(ell, prec);

  ApproxPoly reduced = p;
  if (p.degree >= 2 * n) {
    // Pre-reduce against the tree root once, then descend.
    reduced = detail::divide_core(p.at_prec(prec), tree->root(), prec, rho).second;
  }

  auto rems = detail::fan_out_remainders(*tree, reduced, prec, rho);
  std::vector<ComplexApprox> out;
  out.reserve(n);
  for (const auto& r : rems) out.push_back(r.coeff(0));
  return out;
}

std::vector<ComplexApprox> vandermonde_vec_mul(const NodeSet& ns, const VecApprox& p, long ell,
                                               const MultipointOptions& opt) {
  ApproxPoly poly(p.values, p.lambda);
  return multipoint_eval(poly, ns, ell, opt);
}

ApproxPoly mul_many(const std::vector<ApproxPoly>& polys, long ell, const MultipointOptions& opt) {
  if (polys.empty()) return ApproxPoly::constant(ComplexApprox(1.0, 0.0, 64));
  const long m = static_cast<long>(polys.size());
  long tau = LONG_MIN, maxdeg = 1;
  for (const auto& P : polys) {
    tau = std::max(tau, P.tau);
    maxdeg = std::max(maxdeg, P.degree);
  }
  if (tau == LONG_MIN) tau = 0;

  PlanParams pp;
  pp.ell = ell;
  pp.tau = tau;
  pp.n = maxdeg;
  pp.m = m;
  PrecisionPlan plan = plan_precision(Formula::ProductMany, pp);
  for (const auto& P : polys)
    if (P.lambda < plan.lambda)
      throw InsufficientInputAccuracy("mul_many", plan.lambda, P.lambda);

  const long prec = opt.exec_prec.value_or(plan.working_p);
  std::vector<ApproxPoly> cur;
  cur.reserve(polys.size());
  for (const auto& P : polys) cur.push_back(P.at_prec(prec));
  while (cur.size() > 1) {
    std::vector<ApproxPoly> next((cur.size() + 1) / 2);
    const long count = static_cast<long>(cur.size()) / 2;
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < count; ++j) next[j] = detail::mul_at(cur[2 * j], cur[2 * j + 1], prec, ell);
    if (cur.size() % 2) next.back() = std::move(cur.back());
    cur = std::move(next);
  }

  double bound = static_cast<double>(m) * tau + (m - 1.0) * lgc(maxdeg) + 4.0 * m - lgc(m) - 4.0;
  checks::expect_le("product_many.norm", cur[0].norm_inf_lg(),
                    checks::logadd2(bound, static_cast<double>(-ell + 1)));
  ApproxPoly out = std::move(cur[0]);
  out.lambda = ell;
  return out;
}

std::pair<ApproxPoly, ApproxPoly> sum_rational(
    const std::vector<std::pair<ApproxPoly, ApproxPoly>>& terms, long ell,
    const MultipointOptions& opt) {
  if (terms.empty()) throw DimensionMismatch("sum_rational with no terms");
  const long m = static_cast<long>(terms.size());
  long tau1 = LONG_MIN, tau2 = LONG_MIN, maxdeg = 1;
  for (const auto& [Q, P] : terms) {
    if (Q.degree >= P.degree)
      throw DimensionMismatch("sum_rational requires deg Q_j < deg P_j");
    tau1 = std::max(tau1, Q.tau);
    tau2 = std::max(tau2, P.tau);
    maxdeg = std::max(maxdeg, P.degree);
  }
  if (tau1 == LONG_MIN) tau1 = 0;
  if (tau2 == LONG_MIN) tau2 = 0;

  PlanParams pp;
  pp.ell = ell;
  pp.tau1 = tau1;
  pp.tau2 = tau2;
  pp.n = maxdeg;
  pp.m = m;
  PrecisionPlan plan = plan_precision(Formula::RationalSum, pp);
  for (const auto& [Q, P] : terms) {
    if (Q.lambda < plan.lambda || P.lambda < plan.lambda)
      throw InsufficientInputAccuracy("sum_rational", plan.lambda, std::min(Q.lambda, P.lambda));
  }

  const long prec = opt.exec_prec.value_or(plan.working_p);
  std::vector<std::pair<ApproxPoly, ApproxPoly>> cur;
  cur.reserve(terms.size());
  for (const auto& [Q, P] : terms) cur.emplace_back(Q.at_prec(prec), P.at_prec(prec));

  while (cur.size() > 1) {
    std::vector<std::pair<ApproxPoly, ApproxPoly>> next((cur.size() + 1) / 2);
    const long count = static_cast<long>(cur.size()) / 2;
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < count; ++j) {
      const auto& [Q1, P1] = cur[2 * j];
      const auto& [Q2, P2] = cur[2 * j + 1];
      ApproxPoly qa = detail::mul_at(Q1, P2, prec, ell);
      ApproxPoly qb = detail::mul_at(Q2, P1, prec, ell);
      next[j] = {poly_add(qa, qb, prec, ell), detail::mul_at(P1, P2, prec, ell)};
    }
    if (cur.size() % 2) next.back() = std::move(cur.back());
    cur = std::move(next);
  }

  auto& [Q, P] = cur[0];
  double lgn = lgc(maxdeg);
  double qbound = static_cast<double>(tau1) + (m - 1.0) * (tau2 + lgn) + 5.0 * m - lgc(m) - 4.0;
  double pbound = static_cast<double>(m) * tau2 + (m - 1.0) * lgn + 4.0 * m - lgc(m) - 4.0;
  checks::expect_le("rational_sum.numerator_norm", Q.norm_inf_lg(),
                    checks::logadd2(qbound, static_cast<double>(-ell + 1)));
  checks::expect_le("rational_sum.denominator_norm", P.norm_inf_lg(),
                    checks::logadd2(pbound, static_cast<double>(-ell + 1)));
  Q.lambda = ell;
  P.lambda = ell;
  return {std::move(Q), std::move(P)};
}

std::vector<ApproxPoly> modular_reduce_many(const ApproxPoly& F,
                                            const std::vector<ApproxPoly>& moduli, long ell,
                                            const MultipointOptions& opt) {
  if (moduli.empty()) return {};
  const long m = static_cast<long>(moduli.size());
  long nmod = 1, tau2 = LONG_MIN;
  for (const auto& P : moduli) {
    if (P.degree < 1 || P.zero) throw DimensionMismatch("modulus must have degree >= 1");
    nmod = std::max(nmod, P.degree);
    tau2 = std::max(tau2, P.tau);
  }
  if (tau2 == LONG_MIN) tau2 = 0;

  // Monic normalization shares the remainder, so all descent runs on monic moduli.
  long rho = 0;
  std::vector<ApproxPoly> monic;
  monic.reserve(moduli.size());
  for (const auto& P : moduli) {
    const ComplexApprox& lead = P.coeffs.back();
    if (lead.is_zero()) throw ZeroLeadingCoefficient();
    if (lead.mag_exp_upper() < -P.lambda)
      throw LeadingCoefficientTooSmall("modulus leading coefficient below its accuracy");
    ApproxPoly Pm = P;
    bool is_one = mpfr_cmp_ui(lead.re.raw(), 1) == 0 && lead.im.is_zero();
    if (!is_one) {
      for (auto& c : Pm.coeffs) c = cdiv(c, lead, std::max(P.prec(), 96L));
      Pm.refresh_magnitude();
    }
    rho = std::max(rho, opt.rho.value_or(std::max(root_magnitude_bounds(Pm).rho, 0L)));
    monic.push_back(std::move(Pm));
  }

  PlanParams pp;
  pp.ell = ell;
  pp.tau1 = F.tau;
  pp.n = nmod;
  pp.m = m;
  pp.rho = rho;
  PrecisionPlan plan = plan_precision(Formula::ModularReduce, pp);
  if (F.lambda < plan.lambda)
    throw InsufficientInputAccuracy("modular_reduce_many", plan.lambda, F.lambda);
  for (const auto& P : moduli)
    if (P.lambda < plan.lambda)
      throw InsufficientInputAccuracy("modular_reduce_many", plan.lambda, P.lambda);

  const long prec =
      opt.exec_prec.value_or(exec_prec_fan_out(ell, m, nmod, F.tau, rho) +
                             exec_prec_fan_in(0, std::max(m * nmod, 2L), std::max(tau2, rho)));

  for (auto& P : monic) P = P.at_prec(prec);
  double fanin_bound = static_cast<double>(m) * nmod * std::max<double>(rho, 1.0) + 8.0 * m * nmod;
  auto tree = build_leaf_tree(std::move(monic), m, ell, prec, fanin_bound);
  auto rems = detail::fan_out_remainders(*tree, F.at_prec(prec), prec, rho);

  double out_bound = static_cast<double>(F.tau) + (rho + 1.0) * m * nmod + nmod +
                     lgc(std::max(m * nmod, 1L));
  for (auto& r : rems) {
    r.lambda = ell;
    checks::expect_le("modular.remainder_norm", r.norm_inf_lg(),
                      checks::logadd2(out_bound, static_cast<double>(-ell + 1)));
  }
  return rems;
}

}  // namespace smat
