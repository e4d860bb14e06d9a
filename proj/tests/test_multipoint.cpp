#include <doctest.h>

#include "smat/errors.hpp"
#include "smat/instances.hpp"
#include "smat/multipoint.hpp"
#include "smat/oracle.hpp"

using namespace smat;

namespace {
constexpr long P = 64;

std::vector<ComplexApprox> reals(std::initializer_list<double> xs) {
  std::vector<ComplexApprox> v;
  for (double x : xs) v.emplace_back(x, 0.0, P);
  return v;
}
}  // namespace

TEST_CASE("build_tree on {0,1,2,3}: supermoduli by hand") {
  NodeSet ns(reals({0.0, 1.0, 2.0, 3.0}));
  auto tree = build_tree(ns, 48);
  REQUIRE(tree->levels.size() == 3);

  // level 1: x^2 - x and x^2 - 5x + 6
  const ApproxPoly& l0 = tree->levels[1][0];
  const ApproxPoly& l1 = tree->levels[1][1];
  PrecFloat tol = PrecFloat::pow2(-48, 64);
  CHECK(cabs(l0.coeffs[0], 96) <= tol);
  CHECK(cdist(l0.coeffs[1], ComplexApprox(-1.0, 0.0, P), 96) <= tol);
  CHECK(cdist(l1.coeffs[0], ComplexApprox(6.0, 0.0, P), 96) <= tol);
  CHECK(cdist(l1.coeffs[1], ComplexApprox(-5.0, 0.0, P), 96) <= tol);

  // root: x^4 - 6x^3 + 11x^2 - 6x
  double want[5] = {0.0, -6.0, 11.0, -6.0, 1.0};
  for (int i = 0; i < 5; ++i)
    CHECK(cdist(tree->root().coeff(i), ComplexApprox(want[i], 0.0, P), 96) <= tol);
}

TEST_CASE("build_tree: single node and duplicate rejection") {
  NodeSet one(reals({2.5}));
  auto t = build_tree(one, 40);
  CHECK(t->root().degree == 1);
  CHECK(cdist(t->root().coeffs[0], ComplexApprox(-2.5, 0.0, P), 96) <= PrecFloat::pow2(-40, 64));

  CHECK_THROWS_AS(NodeSet(reals({1.0, 1.0})), DuplicateNodes);
}

TEST_CASE("build_tree: random roots match the exact expansion") {
  gen::Rng rng(19);
  for (int it = 0; it < 10; ++it) {
    long n = rng.uniform(2, 16);
    NodeSet ns(rng.distinct_nodes(n, 3, P));
    long ell = 32 + 32 * (it % 3);
    auto tree = build_tree(ns, ell);
    auto exact = oracle::exact_from_roots(oracle::to_exact(ns.nodes()));
    CHECK(oracle::lg_dist_inf(exact, tree->root()) <= -double(ell));
  }
}

TEST_CASE("padding neutrality: a late node never disturbs the early subtree") {
  auto nodes5 = reals({0.0, 1.0, 2.0, 3.0, 5.0});
  std::vector<ComplexApprox> nodes4(nodes5.begin(), nodes5.begin() + 4);
  NodeSet a(nodes4), b(nodes5);
  auto ta = build_tree(a, 48);
  auto tb = build_tree(b, 48);
  // the {0,1,2,3} product appears bit-for-bit in the padded 8-leaf tree
  const ApproxPoly& ra = ta->root();
  const ApproxPoly& rb = tb->levels[2][0];
  REQUIRE(ra.degree == rb.degree);
  for (long i = 0; i <= ra.degree; ++i) CHECK(ra.coeffs[i] == rb.coeffs[i]);
}

TEST_CASE("deterministic rebuild yields identical supermoduli") {
  gen::Rng rng(31);
  auto nodes = rng.distinct_nodes(6, 3, P);
  auto t1 = detail::build_tree_at(nodes, 40, 256, 3);
  auto t2 = detail::build_tree_at(nodes, 40, 256, 3);
  for (size_t h = 0; h < t1->levels.size(); ++h)
    for (size_t j = 0; j < t1->levels[h].size(); ++j)
      for (size_t i = 0; i < t1->levels[h][j].coeffs.size(); ++i)
        CHECK(t1->levels[h][j].coeffs[i] == t2->levels[h][j].coeffs[i]);
}

TEST_CASE("multipoint_eval: hand cases") {
  ApproxPoly x2 = ApproxPoly::from_doubles({0.0, 0.0, 1.0}, P);
  NodeSet ns(reals({0.0, 1.0, 2.0}));
  auto vals = multipoint_eval(x2, ns, 48);
  double want[3] = {0.0, 1.0, 4.0};
  for (int i = 0; i < 3; ++i)
    CHECK(cdist(vals[i], ComplexApprox(want[i], 0.0, P), 96) <= PrecFloat::pow2(-48, 64));

  ApproxPoly c = ApproxPoly::from_doubles({7.25}, P);
  auto cv = multipoint_eval(c, ns, 48);
  for (int i = 0; i < 3; ++i)
    CHECK(cdist(cv[i], ComplexApprox(7.25, 0.0, P), 96) <= PrecFloat::pow2(-48, 64));
}

TEST_CASE("multipoint_eval matches Horner on random instances") {
  gen::Rng rng(37);
  for (int it = 0; it < 12; ++it) {
    long n = rng.uniform(1, 16);
    long dp = rng.uniform(0, 15);
    ApproxPoly p = rng.poly(dp, 4, P);
    NodeSet ns(rng.distinct_nodes(n, 4, P));
    long ell = 32 + 32 * (it % 3);
    auto vals = multipoint_eval(p, ns, ell);
    auto truth = oracle::naive_vandermonde_mul(oracle::to_exact(ns.nodes()), oracle::to_exact(p));
    CHECK(oracle::lg_dist_inf(truth, vals) <= -double(ell));
  }
}

TEST_CASE("multipoint_eval: degree much larger than node count (pre-reduction)") {
  gen::Rng rng(41);
  NodeSet ns(rng.distinct_nodes(4, 2, P));
  ApproxPoly p = rng.poly(19, 2, P);  // deg >= 2n triggers the root reduction
  auto vals = multipoint_eval(p, ns, 40);
  auto truth = oracle::naive_vandermonde_mul(oracle::to_exact(ns.nodes()), oracle::to_exact(p));
  CHECK(oracle::lg_dist_inf(truth, vals) <= -40.0);
}

TEST_CASE("multipoint_eval: many more nodes than coefficients (batching)") {
  gen::Rng rng(43);
  NodeSet ns(rng.distinct_nodes(23, 2, P));
  ApproxPoly p = rng.poly(2, 2, P);  // 23 > 2(deg+1) = 6
  auto vals = multipoint_eval(p, ns, 40);
  auto truth = oracle::naive_vandermonde_mul(oracle::to_exact(ns.nodes()), oracle::to_exact(p));
  CHECK(oracle::lg_dist_inf(truth, vals) <= -40.0);
}

TEST_CASE("vandermonde_vec_mul: trivial rows and the naive oracle") {
  NodeSet one(reals({1.0}));
  VecApprox p(reals({1.0, 2.0, 3.0}));
  auto v1 = vandermonde_vec_mul(one, p, 40);
  CHECK(cdist(v1[0], ComplexApprox(6.0, 0.0, P), 96) <= PrecFloat::pow2(-40, 64));

  NodeSet zero(reals({0.0}));
  auto v0 = vandermonde_vec_mul(zero, p, 40);
  CHECK(cdist(v0[0], ComplexApprox(1.0, 0.0, P), 96) <= PrecFloat::pow2(-40, 64));

  gen::Rng rng(47);
  NodeSet ns(rng.distinct_nodes(16, 3, P));
  VecApprox pv(rng.dyadic_vector(16, 3, P));
  auto vals = vandermonde_vec_mul(ns, pv, 48);
  auto truth = oracle::naive_vandermonde_mul(oracle::to_exact(ns.nodes()),
                                             oracle::to_exact(pv.values));
  CHECK(oracle::lg_dist_inf(truth, vals) <= -48.0);
}

TEST_CASE("mul_many: hand and identity cases") {
  ApproxPoly a = ApproxPoly::from_doubles({-1.0, 1.0}, P);
  ApproxPoly b = ApproxPoly::from_doubles({1.0, 1.0}, P);
  ApproxPoly prod = mul_many({a, b}, 48);
  CHECK(prod.degree == 2);
  CHECK(cdist(prod.coeffs[0], ComplexApprox(-1.0, 0.0, P), 96) <= PrecFloat::pow2(-48, 64));
  CHECK(cabs(prod.coeffs[1], 96) <= PrecFloat::pow2(-48, 64));

  ApproxPoly single = mul_many({a}, 48);
  CHECK(coeff_dist_inf(single, a, 96).lg_abs() <= -48.0);
}

TEST_CASE("mul_many: eight random linear factors vs exact expansion") {
  gen::Rng rng(53);
  std::vector<ApproxPoly> fs;
  oracle::ExactVec prod{oracle::ExactComplex(1, 0)};
  for (int j = 0; j < 8; ++j) {
    fs.push_back(rng.poly(1, 3, P));
    prod = oracle::exact_convolution(prod, oracle::to_exact(fs.back()));
  }
  ApproxPoly fast = mul_many(fs, 64);
  CHECK(oracle::lg_dist_inf(prod, fast) <= -64.0);
}

TEST_CASE("sum_rational: hand example 1/(x-1) + 1/(x+1)") {
  ApproxPoly q1 = ApproxPoly::from_doubles({1.0}, P);
  ApproxPoly p1 = ApproxPoly::from_doubles({-1.0, 1.0}, P);
  ApproxPoly q2 = ApproxPoly::from_doubles({1.0}, P);
  ApproxPoly p2 = ApproxPoly::from_doubles({1.0, 1.0}, P);
  auto [Q, Pd] = sum_rational({{q1, p1}, {q2, p2}}, 48);
  // (2x, x^2 - 1)
  PrecFloat tol = PrecFloat::pow2(-48, 64);
  CHECK(cabs(Q.coeffs[0], 96) <= tol);
  CHECK(cdist(Q.coeff(1), ComplexApprox(2.0, 0.0, P), 96) <= tol);
  CHECK(cdist(Pd.coeffs[0], ComplexApprox(-1.0, 0.0, P), 96) <= tol);
  CHECK(cabs(Pd.coeffs[1], 96) <= tol);
  CHECK(cdist(Pd.coeffs[2], ComplexApprox(1.0, 0.0, P), 96) <= tol);

  // single term: unchanged
  auto [Qs, Ps] = sum_rational({{q1, p1}}, 48);
  CHECK(coeff_dist_inf(Qs, q1, 96).lg_abs() <= -48.0);
  CHECK(coeff_dist_inf(Ps, p1, 96).lg_abs() <= -48.0);
}

TEST_CASE("sum_rational: random terms vs exact rational sum") {
  gen::Rng rng(59);
  for (int it = 0; it < 8; ++it) {
    long m = rng.uniform(1, 4);
    std::vector<std::pair<ApproxPoly, ApproxPoly>> terms;
    std::vector<std::pair<oracle::ExactVec, oracle::ExactVec>> eterms;
    for (long j = 0; j < m; ++j) {
      long dp = rng.uniform(1, 2);
      ApproxPoly Pj = rng.monic_poly(dp, 3, P);
      ApproxPoly Qj = rng.poly(dp - 1, 3, P);
      eterms.emplace_back(oracle::to_exact(Qj), oracle::to_exact(Pj));
      terms.emplace_back(std::move(Qj), std::move(Pj));
    }
    auto [Q, Pd] = sum_rational(terms, 64);
    auto [eq, ep] = oracle::exact_sum_rational(eterms);
    CHECK(oracle::lg_dist_inf(eq, Q) <= -64.0);
    CHECK(oracle::lg_dist_inf(ep, Pd) <= -64.0);
  }
}

TEST_CASE("sum_rational rejects deg Q >= deg P") {
  ApproxPoly q = ApproxPoly::from_doubles({1.0, 1.0}, P);
  ApproxPoly p = ApproxPoly::from_doubles({-1.0, 1.0}, P);
  CHECK_THROWS_AS(sum_rational({{q, p}}, 40), DimensionMismatch);
}

TEST_CASE("modular_reduce_many: hand cases") {
  // x^2 + 1 mod (x - 1) = 2
  ApproxPoly F = ApproxPoly::from_doubles({1.0, 0.0, 1.0}, P);
  ApproxPoly m1 = ApproxPoly::from_doubles({-1.0, 1.0}, P);
  auto r = modular_reduce_many(F, {m1}, 48);
  REQUIRE(r.size() == 1);
  CHECK(cdist(r[0].coeffs[0], ComplexApprox(2.0, 0.0, P), 96) <= PrecFloat::pow2(-48, 64));

  // deg F < deg P: unchanged
  ApproxPoly small = ApproxPoly::from_doubles({3.0, 1.0}, P);
  ApproxPoly m2 = ApproxPoly::from_doubles({0.0, 0.0, 0.0, 1.0}, P);
  auto r2 = modular_reduce_many(small, {m2}, 48);
  CHECK(coeff_dist_inf(r2[0], small, 96).lg_abs() <= -48.0);
}

TEST_CASE("modular_reduce_many vs schoolbook remainders") {
  gen::Rng rng(61);
  for (int it = 0; it < 8; ++it) {
    long m = rng.uniform(1, 4);
    std::vector<ApproxPoly> mods;
    for (long j = 0; j < m; ++j) mods.push_back(rng.monic_poly(2, 3, P));
    ApproxPoly F = rng.poly(rng.uniform(0, 4 * m), 3, P);
    auto rems = modular_reduce_many(F, mods, 48);
    for (long j = 0; j < m; ++j) {
      auto [q, r] = oracle::exact_divide(oracle::to_exact(F), oracle::to_exact(mods[j]));
      (void)q;
      CHECK(oracle::lg_dist_inf(r, rems[j]) <= -48.0);
    }
  }
}

TEST_CASE("tree product identity holds level by level") {
  gen::Rng rng(67);
  NodeSet ns(rng.distinct_nodes(8, 3, P));
  long ell = 48;
  auto tree = build_tree(ns, ell);
  for (size_t h = 0; h + 1 < tree->levels.size(); ++h) {
    for (size_t j = 0; j < tree->levels[h + 1].size(); ++j) {
      auto prod = oracle::exact_convolution(oracle::to_exact(tree->levels[h][2 * j]),
                                            oracle::to_exact(tree->levels[h][2 * j + 1]));
      CHECK(oracle::lg_dist_inf(prod, tree->levels[h + 1][j]) <= -double(ell));
    }
  }
}
