#include <doctest.h>

#include "smat/checks.hpp"
#include "smat/errors.hpp"
#include "smat/instances.hpp"
#include "smat/oracle.hpp"
#include "smat/toeplitz.hpp"

using namespace smat;

namespace {
constexpr long P = 64;
}

TEST_CASE("toeplitz_vec_mul: identity and the 2x2 hand example") {
  ToeplitzMatrix I = ToeplitzMatrix::identity(4, P);
  VecApprox v(std::vector<ComplexApprox>{ComplexApprox(1.0, 0.0, P), ComplexApprox(2.5, 0.0, P),
                                         ComplexApprox(-3.0, 1.0, P), ComplexApprox(0.0, 0.0, P)});
  auto out = toeplitz_vec_mul(I, v, 48);
  for (size_t i = 0; i < v.size(); ++i)
    CHECK(cdist(out[i], v.values[i], 96) <= PrecFloat::pow2(-48, 64));

  // T = [[1,0],[2,1]], v = (1,1) -> (1,3)
  std::vector<ComplexApprox> col{ComplexApprox(1.0, 0.0, P), ComplexApprox(2.0, 0.0, P)};
  std::vector<ComplexApprox> row{ComplexApprox(1.0, 0.0, P), ComplexApprox(0.0, 0.0, P)};
  ToeplitzMatrix T(col, row);
  VecApprox ones(std::vector<ComplexApprox>{ComplexApprox(1.0, 0.0, P), ComplexApprox(1.0, 0.0, P)});
  auto r = toeplitz_vec_mul(T, ones, 48);
  CHECK(cdist(r[0], ComplexApprox(1.0, 0.0, P), 96) <= PrecFloat::pow2(-48, 64));
  CHECK(cdist(r[1], ComplexApprox(3.0, 0.0, P), 96) <= PrecFloat::pow2(-48, 64));
}

TEST_CASE("toeplitz/hankel match the naive oracle") {
  gen::Rng rng(3);
  for (int it = 0; it < 25; ++it) {
    long n = rng.uniform(1, 16);
    long ell = 32 + 32 * (it % 3);
    auto col = rng.dyadic_vector(n, 4, P);
    auto row = rng.dyadic_vector(n, 4, P);
    row[0] = col[0];
    ToeplitzMatrix T(col, row);
    VecApprox v(rng.dyadic_vector(n, 4, P));
    auto fast = toeplitz_vec_mul(T, v, ell);
    auto exact = oracle::naive_toeplitz_mul(oracle::to_exact(col), oracle::to_exact(row),
                                            oracle::to_exact(v.values));
    CHECK(oracle::lg_dist_inf(exact, fast) <= -double(ell));

    auto skew = rng.dyadic_vector(2 * n - 1, 4, P);
    HankelMatrix H(skew);
    auto hfast = hankel_vec_mul(H, v, ell);
    auto hexact = oracle::naive_hankel_mul(oracle::to_exact(skew), oracle::to_exact(v.values));
    CHECK(oracle::lg_dist_inf(hexact, hfast) <= -double(ell));
  }
}

TEST_CASE("hankel hand examples") {
  // h = (1,0,0): H = [[1,0],[0,0]], v=(1,1) -> (1,0)
  std::vector<ComplexApprox> h{ComplexApprox(1.0, 0.0, P), ComplexApprox(0.0, 0.0, P),
                               ComplexApprox(0.0, 0.0, P)};
  HankelMatrix H(h);
  VecApprox v(std::vector<ComplexApprox>{ComplexApprox(1.0, 0.0, P), ComplexApprox(1.0, 0.0, P)});
  auto out = hankel_vec_mul(H, v, 48);
  CHECK(cdist(out[0], ComplexApprox(1.0, 0.0, P), 96) <= PrecFloat::pow2(-48, 64));
  CHECK(cabs(out[1], 96) <= PrecFloat::pow2(-48, 64));

  // all-ones H: every output = sum v_j
  std::vector<ComplexApprox> ones(3, ComplexApprox(1.0, 0.0, P));
  HankelMatrix H1(ones);
  auto s = hankel_vec_mul(H1, v, 48);
  CHECK(cdist(s[0], ComplexApprox(2.0, 0.0, P), 96) <= PrecFloat::pow2(-48, 64));
  CHECK(cdist(s[1], ComplexApprox(2.0, 0.0, P), 96) <= PrecFloat::pow2(-48, 64));
}

TEST_CASE("tri_toeplitz_inverse: identity, geometric series, errors") {
  // identity
  std::vector<ComplexApprox> e{ComplexApprox(1.0, 0.0, P), ComplexApprox(0.0, 0.0, P),
                               ComplexApprox(0.0, 0.0, P), ComplexApprox(0.0, 0.0, P)};
  TriToeplitz I{ApproxPoly(e), true};
  TriToeplitz invI = tri_toeplitz_inverse(I, 48);
  CHECK(cdist(invI.col.coeffs[0], ComplexApprox(1.0, 0.0, P), 96) <= PrecFloat::pow2(-48, 64));
  for (int i = 1; i < 4; ++i) CHECK(cabs(invI.col.coeffs[i], 96) <= PrecFloat::pow2(-48, 64));

  // first column (1,1,0,0) -> inverse column (1,-1,1,-1)
  std::vector<ComplexApprox> g{ComplexApprox(1.0, 0.0, P), ComplexApprox(1.0, 0.0, P),
                               ComplexApprox(0.0, 0.0, P), ComplexApprox(0.0, 0.0, P)};
  TriToeplitz G{ApproxPoly(g), true};
  TriToeplitz invG = tri_toeplitz_inverse(G, 48);
  double expect[4] = {1.0, -1.0, 1.0, -1.0};
  for (int i = 0; i < 4; ++i)
    CHECK(cdist(invG.col.coeffs[i], ComplexApprox(expect[i], 0.0, P), 96) <=
          PrecFloat::pow2(-48, 64));

  std::vector<ComplexApprox> bad{ComplexApprox(2.0, 0.0, P), ComplexApprox(1.0, 0.0, P)};
  TriToeplitz B{ApproxPoly(bad), false};
  CHECK_THROWS_AS(tri_toeplitz_inverse(B, 48), Error);
}

TEST_CASE("tri_toeplitz_inverse matches the exact recursion on random input") {
  gen::Rng rng(7);
  for (int it = 0; it < 20; ++it) {
    long dim = rng.uniform(1, 16);
    std::vector<ComplexApprox> col;
    col.emplace_back(1.0, 0.0, P);
    for (long i = 1; i < dim; ++i) col.push_back(rng.dyadic_complex(3, P));
    long ell = 32 + 32 * (it % 3);
    TriToeplitz T{ApproxPoly(col), true};
    TriToeplitz inv = tri_toeplitz_inverse(T, ell);
    auto exact = oracle::exact_tri_toeplitz_inverse(oracle::to_exact(col));
    CHECK(oracle::lg_dist_inf(exact, inv.col) <= -double(ell));
  }
}

TEST_CASE("4x4 base case reproduces the symbolic block") {
  using oracle::ExactComplex;
  gen::Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    // random rationals t0, t1, t2
    mpq_class t0(rng.uniform(-99, 99), rng.uniform(1, 40));
    mpq_class t1(rng.uniform(-99, 99), rng.uniform(1, 40));
    mpq_class t2(rng.uniform(-99, 99), rng.uniform(1, 40));
    t0.canonicalize();
    t1.canonicalize();
    t2.canonicalize();
    oracle::ExactVec u{ExactComplex(mpq_class(1), mpq_class(0)), ExactComplex(t2, mpq_class(0)),
                       ExactComplex(t1, mpq_class(0)), ExactComplex(t0, mpq_class(0))};
    auto w = oracle::exact_tri_toeplitz_inverse(u);
    // displayed block: [[t2^2-t1, -t2], [-t2^3+2 t1 t2-t0, t2^2-t1]]
    CHECK(w[1].re == -t2);
    CHECK(w[2].re == t2 * t2 - t1);
    CHECK(w[3].re == -t2 * t2 * t2 + 2 * t1 * t2 - t0);
    CHECK(w[0].re == 1);
  }
}

TEST_CASE("inverse identity residual bound") {
  gen::Rng rng(13);
  for (int it = 0; it < 10; ++it) {
    long dim = rng.uniform(2, 12);
    std::vector<ComplexApprox> col;
    col.emplace_back(1.0, 0.0, P);
    for (long i = 1; i < dim; ++i) col.push_back(rng.dyadic_complex(2, P));
    long ell = 48;
    TriToeplitz T{ApproxPoly(col), true};
    TriToeplitz inv = tri_toeplitz_inverse(T, ell);
    // exact T * computed inverse vs I, as full triangular Toeplitz product
    auto tcol = oracle::to_exact(col);
    auto icol = oracle::to_exact(inv.col);
    auto prod = oracle::exact_convolution(tcol, icol);  // first column of T * Inv
    double worst = -1e300;
    for (long i = 0; i < dim; ++i) {
      oracle::ExactComplex want = i == 0 ? oracle::ExactComplex(1, 0) : oracle::ExactComplex();
      oracle::ExactComplex diff = prod[i] - want;
      ComplexApprox d = oracle::from_exact(diff, 128);
      if (!d.is_zero()) worst = std::max(worst, d.lg_abs());
    }
    // ||T (T~)^{-1} - I||_max <= 2^{-ell + n(rho+1) + lg n + 2}
    ApproxPoly tp(col);
    std::vector<ComplexApprox> rev(col.rbegin(), col.rend());
    long rho = std::max(root_magnitude_bounds(ApproxPoly(rev)).rho, 0L);
    double bound = -double(ell) + (dim - 1) * (rho + 1) + lgc(dim - 1) + 2;
    CHECK(worst <= bound);
  }
}

TEST_CASE("poly_divide: hand cases") {
  // (x^2 - 1) / (x - 1) = x + 1 r 0
  ApproxPoly s = ApproxPoly::from_doubles({-1.0, 0.0, 1.0}, P);
  ApproxPoly t = ApproxPoly::from_doubles({-1.0, 1.0}, P);
  DivisionResult d = poly_divide(s, t, 48);
  CHECK(d.quotient.degree == 1);
  CHECK(cdist(d.quotient.coeffs[0], ComplexApprox(1.0, 0.0, P), 96) <= PrecFloat::pow2(-48, 64));
  CHECK(cdist(d.quotient.coeffs[1], ComplexApprox(1.0, 0.0, P), 96) <= PrecFloat::pow2(-48, 64));
  CHECK(d.remainder.degree < t.degree);
  CHECK(cabs(d.remainder.coeffs[0], 96) <= PrecFloat::pow2(-47, 64));

  // x^3 / (x + 1) = x^2 - x + 1 r -1
  ApproxPoly s2 = ApproxPoly::from_doubles({0.0, 0.0, 0.0, 1.0}, P);
  ApproxPoly t2 = ApproxPoly::from_doubles({1.0, 1.0}, P);
  DivisionResult d2 = poly_divide(s2, t2, 48);
  double q2[3] = {1.0, -1.0, 1.0};
  for (int i = 0; i < 3; ++i)
    CHECK(cdist(d2.quotient.coeffs[i], ComplexApprox(q2[i], 0.0, P), 96) <=
          PrecFloat::pow2(-48, 64));
  CHECK(cdist(d2.remainder.coeffs[0], ComplexApprox(-1.0, 0.0, P), 96) <= PrecFloat::pow2(-48, 64));
}

TEST_CASE("poly_divide matches the schoolbook oracle; residual bound holds") {
  gen::Rng rng(17);
  for (int it = 0; it < 25; ++it) {
    long dt = rng.uniform(1, 4);
    long ds = rng.uniform(dt, 8);
    ApproxPoly s = rng.poly(ds, 4, P);
    ApproxPoly t = rng.poly(dt, 4, P);
    long ell = 32 + 32 * (it % 3);
    DivisionResult d = poly_divide(s, t, ell);
    auto [q, r] = oracle::exact_divide(oracle::to_exact(s), oracle::to_exact(t));
    CHECK(oracle::lg_dist_inf(q, d.quotient) <= -double(ell));
    CHECK(oracle::lg_dist_inf(r, d.remainder) <= -double(ell));
    CHECK(d.remainder.degree < t.degree);

    // exact residual s - t q~ - r~
    auto tq = oracle::exact_convolution(oracle::to_exact(t), oracle::to_exact(d.quotient));
    auto se = oracle::to_exact(s);
    auto re = oracle::to_exact(d.remainder);
    double worst = -1e300;
    for (size_t i = 0; i < tq.size() || i < se.size(); ++i) {
      oracle::ExactComplex v = (i < se.size() ? se[i] : oracle::ExactComplex()) -
                               (i < tq.size() ? tq[i] : oracle::ExactComplex()) -
                               (i < re.size() ? re[i] : oracle::ExactComplex());
      ComplexApprox dd = oracle::from_exact(v, 128);
      if (!dd.is_zero()) worst = std::max(worst, dd.lg_abs());
    }
    CHECK(worst <= -double(ell) + 1);
  }
}

TEST_CASE("poly_divide rejects bad inputs") {
  ApproxPoly s = ApproxPoly::from_doubles({1.0, 2.0, 1.0}, P);
  ApproxPoly c = ApproxPoly::from_doubles({1.0}, P);
  CHECK_THROWS_AS(poly_divide(c, s, 48), DimensionMismatch);
  ApproxPoly weak = ApproxPoly::from_doubles({1.0, 1.0}, P, 4);
  CHECK_THROWS_AS(poly_divide(s, weak, 64), InsufficientInputAccuracy);
}

TEST_CASE("quotient/remainder norm bounds") {
  auto [bq, br] = quotient_remainder_norm_bounds(2, 1, 0, PrecFloat(1.0, 96));
  CHECK(bq.to_double() == doctest::Approx(8.0));   // 2^{2+1+0}
  CHECK(br.to_double() == doctest::Approx(16.0));  // 2^{2+1+1+0}

  // monotone in rho
  auto [bq1, br1] = quotient_remainder_norm_bounds(4, 2, 1, PrecFloat(1.0, 96));
  auto [bq2, br2] = quotient_remainder_norm_bounds(4, 2, 3, PrecFloat(1.0, 96));
  CHECK(bq1 <= bq2);
  CHECK(br1 <= br2);

  // 200 random divisions never violate them (monic divisors: the lemma's form)
  gen::Rng rng(23);
  for (int it = 0; it < 200; ++it) {
    long dt = rng.uniform(1, 3);
    long ds = rng.uniform(dt, 6);
    ApproxPoly s = rng.poly(ds, 3, P);
    ApproxPoly t = rng.monic_poly(dt, 3, P);
    auto [q, r] = oracle::exact_divide(oracle::to_exact(s), oracle::to_exact(t));
    std::vector<ComplexApprox> rev(t.coeffs.rbegin(), t.coeffs.rend());
    long rho = std::max(root_magnitude_bounds(t).rho, 0L);
    PrecFloat nf = PrecFloat::pow2(s.tau, 96);
    auto [bQ, bR] = quotient_remainder_norm_bounds(std::max(ds, 1L), dt, rho, nf);
    CHECK(oracle::dist_inf(q, std::vector<ComplexApprox>{}) <= bQ);
    CHECK(oracle::dist_inf(r, std::vector<ComplexApprox>{}) <= bR);
  }
}

TEST_CASE("runtime norm checks stay quiet on ordinary instances") {
  checks::reset();
  gen::Rng rng(29);
  for (int it = 0; it < 10; ++it) {
    ApproxPoly s = rng.poly(6, 3, P);
    ApproxPoly t = rng.poly(3, 3, P);
    poly_divide(s, t, 40);
  }
  CHECK(checks::violations() == 0);
}
