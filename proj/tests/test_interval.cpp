#include <doctest.h>

#include "smat/errors.hpp"
#include "smat/instances.hpp"
#include "smat/interval.hpp"
#include "smat/oracle.hpp"

using namespace smat;

namespace {

constexpr long P = 128;

ComplexBox random_box(gen::Rng& rng, long tau, long wid_exp) {
  ComplexApprox c = rng.dyadic_complex(tau, P, true);
  return ComplexBox::around(c, wid_exp, P);
}

bool contains_exact(const ComplexBox& b, const oracle::ExactComplex& z) {
  using oracle::ExactComplex;
  auto q = [](const PrecFloat& v) {
    mpq_class out;
    mpfr_get_q(out.get_mpq_t(), v.raw());
    return out;
  };
  return q(b.re_lo) <= z.re && z.re <= q(b.re_hi) && q(b.im_lo) <= z.im && z.im <= q(b.im_hi);
}

}  // namespace

TEST_CASE("box_add: point boxes and width bound") {
  ComplexApprox one(1.0, 0.0, P), two(2.0, 0.0, P);
  ComplexBox s = box_add(ComplexBox::point(one, P), ComplexBox::point(two, P), P);
  CHECK(s.contains(ComplexApprox(3.0, 0.0, P)));
  CHECK(s.wid().is_zero());  // 1+2 exact at this precision

  gen::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    ComplexBox I = random_box(rng, 2, 20), J = random_box(rng, 2, 20);
    ComplexBox out = box_add(I, J, P);
    PrecFloat bound = (I.wid() + J.wid()) * PrecFloat(2.0, P);
    CHECK(out.wid() <= bound);
  }
}

TEST_CASE("box_mul: point product and the stated width bound") {
  ComplexApprox a(2.0, 0.0, P), b(3.0, 0.0, P);
  ComplexBox pbox = box_mul(ComplexBox::point(a, P), ComplexBox::point(b, P), P);
  CHECK(pbox.contains(ComplexApprox(6.0, 0.0, P)));
  CHECK(pbox.wid().is_zero());

  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    ComplexBox I = random_box(rng, 3, 30), J = random_box(rng, 1, 30);
    ComplexBox out = box_mul(I, J, P);
    long tau = I.mag_exp_upper(), sigma = J.mag_exp_upper();
    PrecFloat bound = PrecFloat::pow2(tau + 1, P) * J.wid() + PrecFloat::pow2(sigma + 1, P) * I.wid();
    CHECK(out.wid() <= bound);
  }
}

TEST_CASE("box_mul unit-magnitude example: wid 2^-30 inputs -> <= 2^-28") {
  gen::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    // centers on the unit circle-ish: tau = 0 regime
    ComplexApprox c(i % 2 ? 1.0 : -1.0, 0.0, P);
    ComplexBox I = ComplexBox::around(c, 31, P);  // wid 2^-30
    ComplexBox J = ComplexBox::around(c, 31, P);
    ComplexBox out = box_mul(I, J, P);
    CHECK(out.wid() <= PrecFloat::pow2(-28, P));
  }
}

TEST_CASE("box_recip: point, width bound, zero rejection") {
  ComplexBox half = box_recip(ComplexBox::point(ComplexApprox(2.0, 0.0, P), P), P);
  CHECK(half.contains(ComplexApprox(0.5, 0.0, P)));

  // box around 1 with wid 2^-40, nu = tau = 1 -> wid <= 2^-31
  ComplexBox I = ComplexBox::around(ComplexApprox(1.0, 0.0, P), 41, P);
  ComplexBox r = box_recip(I, P);
  CHECK(r.wid() <= PrecFloat::pow2(-31, P));

  ComplexBox z = ComplexBox::around(ComplexApprox(0.0, 0.0, P), 4, P);
  CHECK_THROWS_AS(box_recip(z, P), ZeroInBox);

  gen::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    ComplexBox b = random_box(rng, 2, 40);
    if (b.contains_zero()) continue;
    long nu = -b.mag_exp_lower(), tau = b.mag_exp_upper();
    ComplexBox out = box_recip(b, P);
    PrecFloat bound = PrecFloat::pow2(4 * nu + 2 * tau + 3, P) * b.wid();
    CHECK(out.wid() <= bound);
  }
}

TEST_CASE("containment sampling: exact scalar results stay inside") {
  gen::Rng rng(17);
  long violations = 0;
  for (int i = 0; i < 10000; ++i) {
    ComplexApprox az = rng.dyadic_complex(3, P), bz = rng.dyadic_complex(3, P);
    ComplexBox A = ComplexBox::around(az, 25, P), B = ComplexBox::around(bz, 25, P);
    // sample a point inside each box
    auto sample = [&](const ComplexBox& box, const ComplexApprox& c) {
      ComplexApprox p = c;
      PrecFloat d = PrecFloat::pow2(-26, P);
      mpfr_add(p.re.raw(), p.re.raw(), (rng.flip() ? d : -d).raw(), MPFR_RNDN);
      mpfr_add(p.im.raw(), p.im.raw(), (rng.flip() ? d : -d).raw(), MPFR_RNDN);
      REQUIRE(box.contains(p));
      return p;
    };
    ComplexApprox pa = sample(A, az), pb = sample(B, bz);
    oracle::ExactComplex ea = oracle::to_exact(pa), eb = oracle::to_exact(pb);
    if (!contains_exact(box_add(A, B, P), ea + eb)) ++violations;
    if (!contains_exact(box_mul(A, B, P), ea * eb)) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("monotonicity: higher working precision never widens boxes") {
  gen::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    ComplexBox I = random_box(rng, 2, 30), J = random_box(rng, 2, 30);
    ComplexBox lo = box_mul(I, J, 64), hi = box_mul(I, J, 256);
    CHECK(hi.wid() <= lo.wid());
  }
}
