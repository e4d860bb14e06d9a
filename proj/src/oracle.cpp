#include "smat/oracle.hpp"

#include <algorithm>
#include <cassert>

#include "smat/errors.hpp"

namespace smat::oracle {

namespace {

mpq_class q_from_mpfr(mpfr_srcptr x) {
  mpq_class q;
  if (mpfr_zero_p(x)) return q;
  mpfr_get_q(q.get_mpq_t(), x);
  q.canonicalize();
  return q;
}

ExactVec strip_leading_zeros(ExactVec v) {
  while (v.size() > 1 && v.back().is_zero()) v.pop_back();
  return v;
}

}  // namespace

ExactComplex to_exact(const ComplexApprox& z) {
  return {q_from_mpfr(z.re.raw()), q_from_mpfr(z.im.raw())};
}

ExactVec to_exact(const std::vector<ComplexApprox>& v) {
  ExactVec r;
  r.reserve(v.size());
  for (const auto& z : v) r.push_back(to_exact(z));
  return r;
}

ExactVec to_exact(const ApproxPoly& p) { return to_exact(p.coeffs); }

ComplexApprox from_exact(const ExactComplex& z, long prec) {
  ComplexApprox r(prec);
  mpfr_set_q(r.re.raw(), z.re.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(r.im.raw(), z.im.get_mpq_t(), MPFR_RNDN);
  return r;
}

ApproxPoly poly_from_exact(const ExactVec& c, long prec, long lambda) {
  std::vector<ComplexApprox> v;
  v.reserve(c.size());
  for (const auto& z : c) v.push_back(from_exact(z, prec));
  return ApproxPoly(std::move(v), lambda);
}

PrecFloat dist_inf(const ExactVec& exact, const std::vector<ComplexApprox>& approx) {
  const long prec = 128;
  PrecFloat m(prec), dr(prec), di(prec), qa(prec);
  size_t n = std::max(exact.size(), approx.size());
  for (size_t i = 0; i < n; ++i) {
    ExactComplex e = i < exact.size() ? exact[i] : ExactComplex();
    ComplexApprox a = i < approx.size() ? approx[i] : ComplexApprox(prec);
    mpfr_set_q(qa.raw(), e.re.get_mpq_t(), MPFR_RNDN);
    mpfr_sub(dr.raw(), qa.raw(), a.re.raw(), MPFR_RNDA);
    mpfr_set_q(qa.raw(), e.im.get_mpq_t(), MPFR_RNDN);
    mpfr_sub(di.raw(), qa.raw(), a.im.raw(), MPFR_RNDA);
    mpfr_hypot(dr.raw(), dr.raw(), di.raw(), MPFR_RNDU);
    mpfr_max(m.raw(), m.raw(), dr.raw(), MPFR_RNDU);
  }
  return m;
}

PrecFloat dist_inf(const ExactVec& exact, const ApproxPoly& approx) {
  return dist_inf(exact, approx.coeffs);
}

double lg_dist_inf(const ExactVec& exact, const std::vector<ComplexApprox>& approx) {
  return dist_inf(exact, approx).lg_abs();
}

double lg_dist_inf(const ExactVec& exact, const ApproxPoly& approx) {
  return dist_inf(exact, approx).lg_abs();
}

ExactVec exact_convolution(const ExactVec& a, const ExactVec& b) {
  if (a.empty() || b.empty()) return {ExactComplex()};
  ExactVec c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
  return c;
}

std::pair<ExactVec, ExactVec> exact_divide(const ExactVec& s, const ExactVec& t) {
  ExactVec T = strip_leading_zeros(t);
  if (T.back().is_zero()) throw ZeroLeadingCoefficient();
  long n = static_cast<long>(T.size()) - 1;
  ExactVec r = s;
  long m = static_cast<long>(r.size()) - 1;
  if (m < n) return {ExactVec{ExactComplex()}, r};
  ExactVec q(m - n + 1);
  for (long i = m; i >= n; --i) {
    ExactComplex c = r[i] / T[n];
    q[i - n] = c;
    if (!c.is_zero())
      for (long j = 0; j <= n; ++j) r[i - n + j] = r[i - n + j] - c * T[j];
  }
  r.resize(std::max<long>(n, 1));
  return {std::move(q), std::move(r)};
}

ExactComplex horner_eval(const ExactVec& p, const ExactComplex& x) {
  ExactComplex acc;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

ExactVec exact_derivative(const ExactVec& p) {
  if (p.size() <= 1) return {ExactComplex()};
  ExactVec d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i)
    d[i - 1] = ExactComplex(p[i].re * static_cast<long>(i), p[i].im * static_cast<long>(i));
  return d;
}

ExactVec exact_from_roots(const ExactVec& nodes) {
  ExactVec p{ExactComplex(1, 0)};
  for (const auto& x : nodes) p = exact_convolution(p, ExactVec{-x, ExactComplex(1, 0)});
  return p;
}

ExactVec naive_toeplitz_mul(const ExactVec& first_col, const ExactVec& first_row,
                            const ExactVec& v) {
  size_t n = v.size();
  if (first_col.size() != n || first_row.size() != n)
    throw DimensionMismatch("toeplitz oracle");
  ExactVec out(n);
  for (size_t i = 0; i < n; ++i) {
    ExactComplex acc;
    for (size_t j = 0; j < n; ++j) {
      const ExactComplex& e = i >= j ? first_col[i - j] : first_row[j - i];
      acc = acc + e * v[j];
    }
    out[i] = acc;
  }
  return out;
}

ExactVec naive_hankel_mul(const ExactVec& skew, const ExactVec& v) {
  size_t n = v.size();
  if (skew.size() != 2 * n - 1) throw DimensionMismatch("hankel oracle");
  ExactVec out(n);
  for (size_t i = 0; i < n; ++i) {
    ExactComplex acc;
    for (size_t j = 0; j < n; ++j) acc = acc + skew[i + j] * v[j];
    out[i] = acc;
  }
  return out;
}

ExactVec naive_vandermonde_mul(const ExactVec& nodes, const ExactVec& p) {
  ExactVec out(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) out[i] = horner_eval(p, nodes[i]);
  return out;
}

ExactVec naive_cauchy_mul(const ExactVec& s, const ExactVec& t, const ExactVec& v) {
  size_t n = v.size();
  if (s.size() != n || t.size() != n) throw DimensionMismatch("cauchy oracle");
  ExactVec out(n);
  for (size_t i = 0; i < n; ++i) {
    ExactComplex acc;
    for (size_t j = 0; j < n; ++j) acc = acc + v[j] / (s[i] - t[j]);
    out[i] = acc;
  }
  return out;
}

ExactVec naive_trummer(const ExactVec& s, const ExactVec& v) {
  size_t n = v.size();
  ExactVec out(n);
  for (size_t i = 0; i < n; ++i) {
    ExactComplex acc;
    for (size_t j = 0; j < n; ++j)
      if (j != i) acc = acc + v[j] / (s[i] - s[j]);
    out[i] = acc;
  }
  return out;
}

ExactVec naive_structured_mul(StructuredKind kind, const std::vector<ExactVec>& data,
                              const ExactVec& v) {
  switch (kind) {
    case StructuredKind::Toeplitz: return naive_toeplitz_mul(data.at(0), data.at(1), v);
    case StructuredKind::Hankel: return naive_hankel_mul(data.at(0), v);
    case StructuredKind::Vandermonde: return naive_vandermonde_mul(data.at(0), v);
    case StructuredKind::Cauchy: return naive_cauchy_mul(data.at(0), data.at(1), v);
  }
  throw DimensionMismatch("unknown structured kind");
}

ExactVec exact_gauss_solve(ExactMat C, ExactVec r) {
  size_t n = r.size();
  if (C.size() != n) throw DimensionMismatch("gauss oracle");
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && C[piv][col].is_zero()) ++piv;
    if (piv == n) throw DimensionMismatch("singular matrix in gauss oracle");
    std::swap(C[piv], C[col]);
    std::swap(r[piv], r[col]);
    for (size_t row = col + 1; row < n; ++row) {
      if (C[row][col].is_zero()) continue;
      ExactComplex f = C[row][col] / C[col][col];
      for (size_t j = col; j < n; ++j) C[row][j] = C[row][j] - f * C[col][j];
      r[row] = r[row] - f * r[col];
    }
  }
  ExactVec x(n);
  for (size_t i = n; i-- > 0;) {
    ExactComplex acc = r[i];
    for (size_t j = i + 1; j < n; ++j) acc = acc - C[i][j] * x[j];
    x[i] = acc / C[i][i];
  }
  return x;
}

ExactVec exact_cauchy_solve(const ExactVec& s, const ExactVec& t, const ExactVec& r) {
  size_t n = r.size();
  ExactVec ps = exact_from_roots(s), pt = exact_from_roots(t);
  ExactVec dps = exact_derivative(ps), dpt = exact_derivative(pt);
  // r1 = D2 r with D2 = diag(p_t(s_i)/p_s'(s_i))
  ExactVec r1(n);
  for (size_t i = 0; i < n; ++i)
    r1[i] = horner_eval(pt, s[i]) / horner_eval(dps, s[i]) * r[i];
  ExactVec r2 = naive_cauchy_mul(t, s, r1);
  ExactVec v(n);
  for (size_t i = 0; i < n; ++i)
    v[i] = horner_eval(ps, t[i]) / horner_eval(dpt, t[i]) * r2[i];
  return v;
}

ExactVec exact_lagrange_interpolate(const ExactVec& nodes, const ExactVec& values) {
  size_t n = nodes.size();
  if (values.size() != n) throw DimensionMismatch("interp oracle");
  ExactVec B = exact_from_roots(nodes);
  ExactVec out(n);
  for (size_t i = 0; i < n; ++i) {
    // B_i = B / (x - x_i) by synthetic division; weight y_i / B_i(x_i).
    ExactVec bi(n);
    ExactComplex carry = B[n];
    for (size_t j = n; j-- > 0;) {
      bi[j] = carry;
      carry = B[j] + carry * nodes[i];
    }
    ExactComplex w = values[i] / horner_eval(bi, nodes[i]);
    for (size_t j = 0; j < n; ++j) out[j] = out[j] + w * bi[j];
  }
  return out;
}

std::pair<ExactVec, ExactVec> exact_sum_rational(
    const std::vector<std::pair<ExactVec, ExactVec>>& terms) {
  ExactVec num{ExactComplex()};
  ExactVec den{ExactComplex(1, 0)};
  for (const auto& [q, p] : terms) {
    num = [&] {
      ExactVec a = exact_convolution(num, p);
      ExactVec b = exact_convolution(q, den);
      if (a.size() < b.size()) std::swap(a, b);
      for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
      return a;
    }();
    den = exact_convolution(den, p);
  }
  return {std::move(num), std::move(den)};
}

ExactVec exact_tri_toeplitz_inverse(const ExactVec& u) {
  size_t gamma = 1;
  while (gamma < u.size()) gamma *= 2;
  ExactVec uu = u;
  uu.resize(gamma);
  ExactVec w{ExactComplex(1, 0)};
  for (size_t s = 1; s < gamma; s *= 2) {
    // U = u[1 .. 2s-1]; v = coeffs [s-1 .. 2s-2] of U*w; next = [w | -(w*v)[0..s-1]].
    ExactVec U(uu.begin() + 1, uu.begin() + static_cast<long>(2 * s));
    ExactVec A = exact_convolution(U, w);
    ExactVec v(A.begin() + static_cast<long>(s - 1), A.begin() + static_cast<long>(2 * s - 1));
    ExactVec B = exact_convolution(w, v);
    ExactVec next = w;
    next.resize(2 * s);
    for (size_t i = 0; i < s; ++i) next[s + i] = -B[i];
    w = std::move(next);
  }
  w.resize(u.size());
  return w;
}

ExactRational exact_discriminant(const ExactVec& f) {
  ExactVec F = strip_leading_zeros(f);
  for (const auto& c : F)
    if (c.im != 0) throw DimensionMismatch("discriminant oracle is real-only");
  long d = static_cast<long>(F.size()) - 1;
  if (d < 1) return 0;
  ExactVec df = exact_derivative(F);
  df = strip_leading_zeros(df);
  long e = static_cast<long>(df.size()) - 1;
  if (df.back().is_zero()) return 0;

  // Resultant via the Sylvester matrix of f (rows of f': d of them; rows of f: e of them).
  long N = d + e;
  std::vector<std::vector<mpq_class>> M(N, std::vector<mpq_class>(N, mpq_class(0)));
  for (long i = 0; i < e; ++i)
    for (long j = 0; j <= d; ++j) M[i][i + j] = F[d - j].re;
  for (long i = 0; i < d; ++i)
    for (long j = 0; j <= e; ++j) M[e + i][i + j] = df[e - j].re;

  mpq_class det(1);
  for (long col = 0; col < N; ++col) {
    long piv = col;
    while (piv < N && M[piv][col] == 0) ++piv;
    if (piv == N) return 0;
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = -det;
    }
    det *= M[col][col];
    for (long row = col + 1; row < N; ++row) {
      if (M[row][col] == 0) continue;
      mpq_class fmul = M[row][col] / M[col][col];
      for (long j = col; j < N; ++j) M[row][j] -= fmul * M[col][j];
    }
  }

  mpq_class disc = det / F.back().re;
  if (((d * (d - 1) / 2) % 2) != 0) disc = -disc;
  return disc;
}

}  // namespace smat::oracle
