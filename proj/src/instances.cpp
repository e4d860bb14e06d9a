#include "smat/instances.hpp"

#include <algorithm>

namespace smat::gen {

PrecFloat Rng::dyadic(long tau, long prec, bool nonzero) {
  long mant = 0;
  do {
    mant = uniform(-(1L << 20), (1L << 20));
  } while (nonzero && mant == 0);
  PrecFloat v = PrecFloat::from_si(mant, std::max(prec, 32L));
  v.mul_2si(tau - 21);
  return v;
}

ComplexApprox Rng::dyadic_complex(long tau, long prec, bool nonzero) {
  PrecFloat re = dyadic(tau, prec, nonzero);
  PrecFloat im = dyadic(tau, prec, false);
  return {std::move(re), std::move(im)};
}

std::vector<ComplexApprox> Rng::dyadic_vector(long n, long tau, long prec) {
  std::vector<ComplexApprox> v;
  v.reserve(n);
  for (long i = 0; i < n; ++i) v.push_back(dyadic_complex(tau, prec));
  return v;
}

namespace {
bool too_close(const ComplexApprox& a, const ComplexApprox& b, long tau) {
  PrecFloat d = cdist(a, b, 96);
  return d < PrecFloat::pow2(tau - 24, 64);
}
}  // namespace

std::vector<ComplexApprox> Rng::distinct_nodes(long n, long tau, long prec) {
  std::vector<ComplexApprox> nodes;
  nodes.reserve(n);
  while (static_cast<long>(nodes.size()) < n) {
    ComplexApprox c = dyadic_complex(tau, prec);
    bool ok = true;
    for (const auto& x : nodes)
      if (too_close(c, x, tau)) {
        ok = false;
        break;
      }
    if (ok) nodes.push_back(std::move(c));
  }
  return nodes;
}

std::vector<ComplexApprox> Rng::distinct_nodes_away(long n, long tau, long prec,
                                                    const std::vector<ComplexApprox>& other) {
  std::vector<ComplexApprox> nodes;
  nodes.reserve(n);
  while (static_cast<long>(nodes.size()) < n) {
    ComplexApprox c = dyadic_complex(tau, prec);
    bool ok = true;
    for (const auto& x : nodes)
      if (too_close(c, x, tau)) {
        ok = false;
        break;
      }
    for (const auto& x : other)
      if (ok && too_close(c, x, tau)) ok = false;
    if (ok) nodes.push_back(std::move(c));
  }
  return nodes;
}

ApproxPoly Rng::poly(long deg, long tau, long prec, bool nonzero_lead, bool nonzero_const) {
  std::vector<ComplexApprox> c;
  c.reserve(deg + 1);
  for (long i = 0; i <= deg; ++i) {
    bool nz = (i == deg && nonzero_lead) || (i == 0 && nonzero_const);
    c.push_back(dyadic_complex(tau, prec, nz));
  }
  return ApproxPoly(std::move(c));
}

ApproxPoly Rng::monic_poly(long deg, long tau, long prec) {
  std::vector<ComplexApprox> c;
  c.reserve(deg + 1);
  for (long i = 0; i < deg; ++i) c.push_back(dyadic_complex(tau, prec));
  c.emplace_back(1.0, 0.0, std::max(prec, 32L));
  return ApproxPoly(std::move(c));
}

std::vector<ComplexApprox> perturb(Rng& rng, const std::vector<ComplexApprox>& v, long lambda) {
  std::vector<ComplexApprox> out;
  out.reserve(v.size());
  for (const auto& z : v) {
    long prec = std::max(z.prec(), lambda + 48);
    ComplexApprox p = z.at_prec(prec);
    PrecFloat eps = PrecFloat::pow2(-lambda, prec);
    mpfr_add(p.re.raw(), p.re.raw(), (rng.flip() ? eps : -eps).raw(), MPFR_RNDN);
    mpfr_add(p.im.raw(), p.im.raw(), (rng.flip() ? eps : -eps).raw(), MPFR_RNDN);
    out.push_back(std::move(p));
  }
  return out;
}

ApproxPoly perturb_poly(Rng& rng, const ApproxPoly& p, long lambda) {
  ApproxPoly out(perturb(rng, p.coeffs, lambda), lambda);
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace smat::gen
