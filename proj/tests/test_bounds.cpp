#include <doctest.h>

#include <cmath>

#include "smat/bounds.hpp"
#include "smat/errors.hpp"
#include "smat/instances.hpp"
#include "smat/multipoint.hpp"
#include "smat/oracle.hpp"

using namespace smat;

TEST_CASE("root_magnitude_bounds on x^2 - 1") {
  ApproxPoly f = ApproxPoly::from_doubles({-1.0, 0.0, 1.0}, 96);
  RootBounds rb = root_magnitude_bounds(f);
  // lower = 1/sqrt(2), upper min(sqrt(2), integer-case 2^{t+1}); roots +-1 inside
  CHECK(rb.lower.to_double() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(rb.upper.to_double() >= 1.0);
  CHECK(rb.lower.to_double() <= 1.0);
  CHECK(rb.rho >= 0);
  CHECK_FALSE(rb.degenerate);
}

TEST_CASE("root_magnitude_bounds single root and degenerate constant term") {
  ApproxPoly f = ApproxPoly::from_doubles({-1.0, 1.0}, 96);  // x - 1
  RootBounds rb = root_magnitude_bounds(f);
  CHECK(rb.lower.to_double() <= 1.0);
  CHECK(rb.upper.to_double() >= 1.0);

  ApproxPoly g = ApproxPoly::from_doubles({0.0, 1.0}, 96);  // x
  RootBounds rg = root_magnitude_bounds(g);
  CHECK(rg.degenerate);
  CHECK(rg.lower.is_zero());

  ApproxPoly z = ApproxPoly::from_doubles({1.0, 0.0}, 96);  // zero leading coeff
  CHECK_THROWS_AS(root_magnitude_bounds(z), ZeroLeadingCoefficient);
}

TEST_CASE("integer polynomials get the 2^{tau+1} bracket") {
  // tau = 5 (coefficients up to 32), degree 6: 2-norm bound would exceed 2^6
  ApproxPoly f = ApproxPoly::from_doubles({32.0, 3.0, -17.0, 32.0, 5.0, 1.0, 7.0}, 96);
  RootBounds rb = root_magnitude_bounds(f);
  CHECK(rb.upper <= PrecFloat::pow2(6, 96));
  CHECK(rb.lower >= PrecFloat::pow2(-6, 96));
}

TEST_CASE("random constructed roots stay inside the bracket") {
  gen::Rng rng(41);
  for (int it = 0; it < 50; ++it) {
    long d = rng.uniform(1, 6);
    auto roots = rng.distinct_nodes(d, 2, 96);
    oracle::ExactVec p = oracle::exact_from_roots(oracle::to_exact(roots));
    ApproxPoly f = oracle::poly_from_exact(p, 256);
    if (f.coeffs.front().is_zero()) continue;
    RootBounds rb = root_magnitude_bounds(f);
    for (const auto& r : roots) {
      PrecFloat m = cabs(r, 128);
      CHECK(m <= rb.upper);
      if (!m.is_zero()) CHECK(rb.lower <= m);
    }
  }
}

TEST_CASE("aggregate separation lower bound: x^2 - 1, k = 1") {
  ApproxPoly f = ApproxPoly::from_doubles({-1.0, 0.0, 1.0}, 96);
  PrecFloat disc(4.0, 96);
  PrecFloat B = aggregate_separation_lower_bound(f, disc, 1);
  // 2^{1-2-1} * 1 * (sqrt 2)^{-2} * 2 = 1/4, below the true |1 - (-1)| = 2.
  // (The formula value; the integer-case refinement can only raise it.)
  CHECK(B.to_double() >= 0.25 - 1e-12);
  CHECK(B.to_double() <= 2.0);

  CHECK_THROWS_AS(aggregate_separation_lower_bound(f, PrecFloat(0.0, 64), 1),
                  NonPositiveDiscriminant);
}

TEST_CASE("aggregate separation: integer case exponent 3d^2+3dtau+4dlgd") {
  // d = 2, tau = 1: bound says -lg prod <= 26
  ApproxPoly f = ApproxPoly::from_doubles({-2.0, 1.0, 1.0}, 96);
  PrecFloat disc(9.0, 96);
  PrecFloat B = aggregate_separation_lower_bound(f, disc, 1);
  CHECK(B >= PrecFloat::pow2(-27, 96));
  // roots 1 and -2: separation 3 >= B
  CHECK(B.to_double() <= 3.0);
}

TEST_CASE("aggregate separation with k = 0 stays below the empty product") {
  ApproxPoly f = ApproxPoly::from_doubles({-1.0, 0.0, 1.0}, 96);
  PrecFloat B = aggregate_separation_lower_bound(f, PrecFloat(4.0, 96), 0);
  CHECK(B.to_double() <= 1.0);
}

TEST_CASE("eval lower bound: frozen example and the root case") {
  ApproxPoly f = ApproxPoly::from_doubles({-1.0, 0.0, 1.0}, 96);
  PrecFloat b = eval_lower_bound(f, PrecFloat(1.0, 96), 2.0);
  CHECK(b.to_double() == doctest::Approx(std::exp2(-7.0)).epsilon(1e-9));
  CHECK(b.to_double() <= 1.0);  // |f(0)| = 1

  CHECK(eval_lower_bound(f, PrecFloat(0.0, 96), 2.0).is_zero());
}

TEST_CASE("eval lower bound never exceeds |f(L)| on sampled instances") {
  gen::Rng rng(43);
  for (int it = 0; it < 60; ++it) {
    long d = rng.uniform(1, 8);
    auto roots = rng.distinct_nodes(d, 2, 96);
    oracle::ExactVec pf = oracle::exact_from_roots(oracle::to_exact(roots));
    ApproxPoly f = oracle::poly_from_exact(pf, 256);

    Separations sep;
    double lg_prod = 0.0;
    if (d >= 2) {
      sep = separations_of(roots);
      lg_prod = sep.lg_prod;
    }
    ComplexApprox L = rng.dyadic_complex(3, 96);
    PrecFloat dist(1e300, 96);
    for (const auto& r : roots) {
      PrecFloat dd = cdist(L, r, 128);
      if (dd < dist) dist = dd;
    }
    PrecFloat bound = eval_lower_bound(f, dist, lg_prod);
    oracle::ExactComplex v = oracle::horner_eval(pf, oracle::to_exact(L));
    ComplexApprox va = oracle::from_exact(v, 256);
    PrecFloat mag = cabs(va, 256);
    CHECK(bound <= mag + PrecFloat::pow2(-200, 64));
  }
}
