#include <doctest.h>

#include "smat/prec.hpp"

using namespace smat;

TEST_CASE("PrecFloat basic arithmetic and precision") {
  PrecFloat a(1.5, 64), b(2.25, 64);
  CHECK((a + b).to_double() == doctest::Approx(3.75));
  CHECK((a * b).to_double() == doctest::Approx(3.375));
  CHECK((a - b).sign() < 0);
  CHECK(PrecFloat(0.0, 64).is_zero());
  CHECK(a.prec() == 64);
  CHECK(a.at_prec(256).prec() == 256);
  // raising precision is exact
  CHECK(a.at_prec(256) == a);
}

TEST_CASE("pow2 and exponent bookkeeping") {
  PrecFloat p = PrecFloat::pow2(-20, 64);
  CHECK(p.lg_abs() == doctest::Approx(-20.0));
  CHECK(p.exp2_of() == -19);  // 2^{e-1} <= x < 2^e
  PrecFloat q(3.0, 64);
  CHECK(q.exp2_of() == 2);
}

TEST_CASE("complex magnitude exponent invariant") {
  ComplexApprox z(3.0, -4.0, 64);
  // |z| = 5, lg|z| ~ 2.32; bound max(lg re, lg im) + 1 holds
  CHECK(z.mag_exp_upper() >= 3);
  CHECK(z.lg_abs() == doctest::Approx(std::log2(5.0)).epsilon(1e-9));
  CHECK(z.mag_exp_lower() <= 3);
}

TEST_CASE("complex ops at explicit precision") {
  ComplexApprox a(1.0, 2.0, 96), b(3.0, -1.0, 96);
  ComplexApprox p = cmul(a, b, 96);
  CHECK(p.re.to_double() == doctest::Approx(5.0));
  CHECK(p.im.to_double() == doctest::Approx(5.0));
  ComplexApprox q = cdiv(p, b, 96);
  CHECK(q.re.to_double() == doctest::Approx(1.0));
  CHECK(q.im.to_double() == doctest::Approx(2.0));
  CHECK(cdist(a, a, 96).is_zero());
}

TEST_CASE("relative rounding error stays within 2^{1-p}") {
  // 1/3 at precision p, then back-multiplied by 3.
  for (long p : {24L, 53L, 113L, 256L}) {
    PrecFloat one(1.0, p), three(3.0, p);
    PrecFloat t = one / three;
    PrecFloat back = t * three;
    PrecFloat err = (back - one).abs();
    CHECK(err <= PrecFloat::pow2(2 - p, 64));
  }
}
