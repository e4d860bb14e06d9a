#include "smat/naive.hpp"

#include "smat/errors.hpp"

namespace smat::naive {

std::vector<ComplexApprox> toeplitz_mul(const ToeplitzMatrix& T,
                                        const std::vector<ComplexApprox>& v, long prec) {
  const long n = T.n();
  if (static_cast<long>(v.size()) != n) throw DimensionMismatch("naive toeplitz");
  std::vector<ComplexApprox> out(n, ComplexApprox(prec));
  PrecFloat tr(prec), ti(prec);
  for (long i = 0; i < n; ++i) {
    ComplexApprox acc(prec);
    for (long j = 0; j < n; ++j) {
      const ComplexApprox& e = i >= j ? T.first_col[i - j] : T.first_row[j - i];
      mpfr_fmms(tr.raw(), e.re.raw(), v[j].re.raw(), e.im.raw(), v[j].im.raw(), MPFR_RNDN);
      mpfr_fmma(ti.raw(), e.re.raw(), v[j].im.raw(), e.im.raw(), v[j].re.raw(), MPFR_RNDN);
      mpfr_add(acc.re.raw(), acc.re.raw(), tr.raw(), MPFR_RNDN);
      mpfr_add(acc.im.raw(), acc.im.raw(), ti.raw(), MPFR_RNDN);
    }
    out[i] = std::move(acc);
  }
  return out;
}

std::vector<ComplexApprox> hankel_mul(const HankelMatrix& H,
                                      const std::vector<ComplexApprox>& v, long prec) {
  const long n = H.n();
  if (static_cast<long>(v.size()) != n) throw DimensionMismatch("naive hankel");
  std::vector<ComplexApprox> out(n, ComplexApprox(prec));
  PrecFloat tr(prec), ti(prec);
  for (long i = 0; i < n; ++i) {
    ComplexApprox acc(prec);
    for (long j = 0; j < n; ++j) {
      const ComplexApprox& e = H.skew[i + j];
      mpfr_fmms(tr.raw(), e.re.raw(), v[j].re.raw(), e.im.raw(), v[j].im.raw(), MPFR_RNDN);
      mpfr_fmma(ti.raw(), e.re.raw(), v[j].im.raw(), e.im.raw(), v[j].re.raw(), MPFR_RNDN);
      mpfr_add(acc.re.raw(), acc.re.raw(), tr.raw(), MPFR_RNDN);
      mpfr_add(acc.im.raw(), acc.im.raw(), ti.raw(), MPFR_RNDN);
    }
    out[i] = std::move(acc);
  }
  return out;
}

std::vector<ComplexApprox> vandermonde_mul(const std::vector<ComplexApprox>& nodes,
                                           const std::vector<ComplexApprox>& p, long prec) {
  ApproxPoly poly(p);
  return multipoint_eval(poly, nodes, prec);
}

std::vector<ComplexApprox> multipoint_eval(const ApproxPoly& p,
                                           const std::vector<ComplexApprox>& nodes, long prec) {
  std::vector<ComplexApprox> out;
  out.reserve(nodes.size());
  for (const auto& x : nodes) out.push_back(p.eval_horner(x, prec));
  return out;
}

std::vector<ComplexApprox> cauchy_mul(const std::vector<ComplexApprox>& s,
                                      const std::vector<ComplexApprox>& t,
                                      const std::vector<ComplexApprox>& v, long prec) {
  const size_t n = v.size();
  if (s.size() != n || t.size() != n) throw DimensionMismatch("naive cauchy");
  std::vector<ComplexApprox> out(n, ComplexApprox(prec));
  for (size_t i = 0; i < n; ++i) {
    ComplexApprox acc(prec);
    for (size_t j = 0; j < n; ++j) {
      ComplexApprox d = csub(s[i], t[j], prec);
      acc = cadd(acc, cdiv(v[j], d, prec), prec);
    }
    out[i] = std::move(acc);
  }
  return out;
}

std::vector<ComplexApprox> trummer(const std::vector<ComplexApprox>& s,
                                   const std::vector<ComplexApprox>& v, long prec) {
  const size_t n = v.size();
  if (s.size() != n) throw DimensionMismatch("naive trummer");
  std::vector<ComplexApprox> out(n, ComplexApprox(prec));
  for (size_t i = 0; i < n; ++i) {
    ComplexApprox acc(prec);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      ComplexApprox d = csub(s[i], s[j], prec);
      acc = cadd(acc, cdiv(v[j], d, prec), prec);
    }
    out[i] = std::move(acc);
  }
  return out;
}

}  // namespace smat::naive
