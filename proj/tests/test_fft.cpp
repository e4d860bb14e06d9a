#include <doctest.h>

#include <cmath>

#include "smat/errors.hpp"
#include "smat/fft.hpp"
#include "smat/instances.hpp"
#include "smat/oracle.hpp"

using namespace smat;

namespace {
constexpr long P = 64;

double lg_val_dist(const std::vector<ComplexApprox>& a, const std::vector<ComplexApprox>& b) {
  double worst = -1e300;
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, cdist(a[i], b[i], 128).lg_abs());
  return worst;
}
}  // namespace

TEST_CASE("plan_precision frozen values") {
  PlanParams pp;
  pp.ell = 50;
  pp.tau1 = 0;
  pp.tau2 = 0;
  pp.d = 7;
  CHECK(plan_precision(Formula::Mul, pp).lambda == 83);  // 50 + 6*3 + 15

  PlanParams fo;
  fo.ell = 40;
  fo.tau1 = 0;
  fo.rho = 0;
  fo.n = 8;
  CHECK(plan_precision(Formula::FanOut, fo).lambda == 7240);  // 40 + 300*8*3

  PlanParams z;
  z.ell = 0;
  z.d = 1;
  CHECK(plan_precision(Formula::Mul, z).lambda == 15);  // the constant overhead alone
  CHECK(plan_precision(Formula::Mul, z).working_p == 47);

  CHECK_THROWS_AS(formula_from_name("no-such-formula"), UnknownFormula);
  CHECK(formula_from_name("fan-out") == Formula::FanOut);
}

TEST_CASE("fft_eval_unity: A = x at the 4th roots of unity") {
  ApproxPoly A = ApproxPoly::from_doubles({0.0, 1.0}, P);
  auto vals = fft_eval_unity(A, 2, 48);
  REQUIRE(vals.size() == 4);
  CHECK(cdist(vals[0], ComplexApprox(1.0, 0.0, P), 96) <= PrecFloat::pow2(-48, 64));
  CHECK(cdist(vals[1], ComplexApprox(0.0, 1.0, P), 96) <= PrecFloat::pow2(-48, 64));
  CHECK(cdist(vals[2], ComplexApprox(-1.0, 0.0, P), 96) <= PrecFloat::pow2(-48, 64));
  CHECK(cdist(vals[3], ComplexApprox(0.0, -1.0, P), 96) <= PrecFloat::pow2(-48, 64));
}

TEST_CASE("fft_eval_unity: constants and size checks") {
  ApproxPoly c = ApproxPoly::from_doubles({2.5}, P);
  auto vals = fft_eval_unity(c, 3, 40);
  for (const auto& v : vals) CHECK(cdist(v, ComplexApprox(2.5, 0.0, P), 96) <= PrecFloat::pow2(-40, 64));

  ApproxPoly big = ApproxPoly::from_doubles({1, 1, 1, 1, 1}, P);
  CHECK_THROWS_AS(fft_eval_unity(big, 2, 40), DimensionMismatch);

  ApproxPoly weak = ApproxPoly::from_doubles({1.0, 1.0}, P, 8);
  CHECK_THROWS_AS(fft_eval_unity(weak, 2, 40), InsufficientInputAccuracy);
}

TEST_CASE("fft matches high-precision Horner at the roots of unity") {
  gen::Rng rng(5);
  for (int it = 0; it < 10; ++it) {
    ApproxPoly A = rng.poly(7, 3, P);
    long ell = 60;
    auto vals = fft_eval_unity(A, 3, ell);
    // Horner oracle at 4x working precision with its own twiddles
    long hp = 4 * plan_precision(Formula::FftEval, [&] {
                PlanParams q;
                q.ell = ell;
                q.tau = A.tau;
                q.k = 3;
                return q;
              }()).working_p;
    auto ref = detail::dft_points(A, 8, hp);
    CHECK(lg_val_dist(vals, ref) <= -double(ell));
  }
}

TEST_CASE("Parseval identity within the stated slack") {
  gen::Rng rng(9);
  ApproxPoly A = rng.poly(15, 2, P);
  long ell = 50;
  auto vals = fft_eval_unity(A, 4, ell);
  PrecFloat lhs(0.0, 256), rhs(0.0, 256);
  for (const auto& v : vals) {
    PrecFloat m = cabs(v, 256);
    lhs = lhs + m * m;
  }
  for (const auto& c : A.coeffs) {
    PrecFloat m = cabs(c, 256);
    rhs = rhs + m * m;
  }
  rhs = rhs * PrecFloat(16.0, 256);
  PrecFloat rel = (lhs - rhs).abs() / rhs;
  CHECK(rel.lg_abs() <= -double(ell) + 4 + A.tau + 8);
}

TEST_CASE("fft_interpolate_unity: constants and the x round trip") {
  std::vector<ComplexApprox> vals(8, ComplexApprox(1.25, 0.0, P));
  ApproxPoly c = fft_interpolate_unity(vals, 40);
  CHECK(cdist(c.coeffs[0], ComplexApprox(1.25, 0.0, P), 96) <= PrecFloat::pow2(-40, 64));
  for (size_t i = 1; i < c.coeffs.size(); ++i)
    CHECK(cabs(c.coeffs[i], 96) <= PrecFloat::pow2(-40, 64));

  std::vector<ComplexApprox> xv{ComplexApprox(1.0, 0.0, P), ComplexApprox(0.0, 1.0, P),
                                ComplexApprox(-1.0, 0.0, P), ComplexApprox(0.0, -1.0, P)};
  ApproxPoly x = fft_interpolate_unity(xv, 40);
  CHECK(cdist(x.coeffs[1], ComplexApprox(1.0, 0.0, P), 96) <= PrecFloat::pow2(-40, 64));

  std::vector<ComplexApprox> bad(3, ComplexApprox(P));
  CHECK_THROWS_AS(fft_interpolate_unity(bad, 40), DimensionMismatch);
}

TEST_CASE("eval/interpolate round trip") {
  gen::Rng rng(21);
  for (int it = 0; it < 10; ++it) {
    ApproxPoly A = rng.poly(7, 2, P);
    long ell = 52;
    auto vals = fft_eval_unity(A, 3, ell + 10);
    ApproxPoly back = fft_interpolate_unity(vals, ell);
    CHECK(coeff_dist_inf(A, back, 128).lg_abs() <= -double(ell));
  }
}

TEST_CASE("poly_mul: hand products") {
  ApproxPoly a = ApproxPoly::from_doubles({1.0, 1.0}, P);   // 1 + x
  ApproxPoly b = ApproxPoly::from_doubles({1.0, -1.0}, P);  // 1 - x
  ApproxPoly c = poly_mul(a, b, 50);
  CHECK(c.degree == 2);
  CHECK(cdist(c.coeffs[0], ComplexApprox(1.0, 0.0, P), 96) <= PrecFloat::pow2(-50, 64));
  CHECK(cabs(c.coeffs[1], 96) <= PrecFloat::pow2(-50, 64));
  CHECK(cdist(c.coeffs[2], ComplexApprox(-1.0, 0.0, P), 96) <= PrecFloat::pow2(-50, 64));

  ApproxPoly sq = poly_mul(a, a, 50);  // (x+1)^2
  CHECK(cdist(sq.coeffs[1], ComplexApprox(2.0, 0.0, P), 96) <= PrecFloat::pow2(-50, 64));
}

TEST_CASE("poly_mul matches the exact convolution oracle") {
  gen::Rng rng(33);
  for (int it = 0; it < 40; ++it) {
    long da = rng.uniform(0, 7), db = rng.uniform(0, 7);
    ApproxPoly A = rng.poly(da, 4, P), B = rng.poly(db, 4, P);
    long ell = 32 + 32 * (it % 3);
    ApproxPoly C = poly_mul(A, B, ell);
    CHECK(C.degree == da + db);
    auto exact = oracle::exact_convolution(oracle::to_exact(A), oracle::to_exact(B));
    CHECK(oracle::lg_dist_inf(exact, C) <= -double(ell));
  }
}

TEST_CASE("poly_mul zero handling and accuracy precondition") {
  ApproxPoly z = ApproxPoly::zero_poly(P);
  ApproxPoly a = ApproxPoly::from_doubles({3.0, 2.0}, P);
  CHECK(poly_mul(z, a, 40).zero);
  ApproxPoly weak = ApproxPoly::from_doubles({1.0, 1.0}, P, 10);
  CHECK_THROWS_AS(poly_mul(weak, a, 64), InsufficientInputAccuracy);
}

TEST_CASE("scale_to_unit_disc: x - 4 with rho = 2, identity at rho = 0") {
  ApproxPoly f = ApproxPoly::from_doubles({-4.0, 1.0}, P);
  ApproxPoly g = scale_to_unit_disc(f, 2);
  CHECK(g.coeffs[0].re.to_double() == doctest::Approx(-4.0));
  CHECK(g.coeffs[1].re.to_double() == doctest::Approx(4.0));  // 4x - 4, root at 1

  ApproxPoly id = scale_to_unit_disc(f, 0);
  CHECK(coeff_dist_inf(f, id, 96).is_zero());

  ApproxPoly back = unscale_from_unit_disc(g, 2);
  CHECK(coeff_dist_inf(f, back, 96).is_zero());  // dyadic scaling is exact
}

TEST_CASE("scale_to_unit_disc pulls constructed roots into the unit disc") {
  gen::Rng rng(55);
  for (int it = 0; it < 20; ++it) {
    long d = rng.uniform(1, 5);
    auto roots = rng.distinct_nodes(d, 3, P);  // |root| <= 8
    ApproxPoly f = oracle::poly_from_exact(oracle::exact_from_roots(oracle::to_exact(roots)), 256);
    ApproxPoly g = scale_to_unit_disc(f, 3);
    // roots of g are roots/8
    for (const auto& r : roots) {
      ComplexApprox scaled = r;
      scaled.re.mul_2si(-3);
      scaled.im.mul_2si(-3);
      ComplexApprox v = g.eval_horner(scaled, 256);
      CHECK(cabs(v, 128).lg_abs() <= -180.0);  // still a root
      CHECK(cabs(scaled, 96) <= PrecFloat(1.0, 96));
    }
  }
}
