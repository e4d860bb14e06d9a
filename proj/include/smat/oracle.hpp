#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "smat/poly.hpp"

namespace smat::oracle {

// Exact reference implementations for tests and verification drivers; never
// on the fast path. All inputs are dyadic (every finite PrecFloat is), so the
// embeddings below are lossless.

using ExactRational = mpq_class;

struct ExactComplex {
  mpq_class re, im;

  ExactComplex() : re(0), im(0) {}
  ExactComplex(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
  ExactComplex(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    mpq_class d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  ExactComplex operator-() const { return {-re, -im}; }
};

using ExactVec = std::vector<ExactComplex>;
using ExactMat = std::vector<ExactVec>;

// --- lossless embeddings ----------------------------------------------------

ExactComplex to_exact(const ComplexApprox& z);
ExactVec to_exact(const std::vector<ComplexApprox>& v);
ExactVec to_exact(const ApproxPoly& p);
ComplexApprox from_exact(const ExactComplex& z, long prec);
ApproxPoly poly_from_exact(const ExactVec& c, long prec, long lambda = kExactLambda);

// max_i |exact_i - approx_i| as an upper-bounded PrecFloat.
PrecFloat dist_inf(const ExactVec& exact, const std::vector<ComplexApprox>& approx);
PrecFloat dist_inf(const ExactVec& exact, const ApproxPoly& approx);
double lg_dist_inf(const ExactVec& exact, const std::vector<ComplexApprox>& approx);
double lg_dist_inf(const ExactVec& exact, const ApproxPoly& approx);

// --- polynomial arithmetic ---------------------------------------------------

ExactVec exact_convolution(const ExactVec& a, const ExactVec& b);
// Schoolbook division s = t*q + r with deg r < deg t; t's leading coefficient
// must be nonzero.
std::pair<ExactVec, ExactVec> exact_divide(const ExactVec& s, const ExactVec& t);
ExactComplex horner_eval(const ExactVec& p, const ExactComplex& x);
ExactVec exact_derivative(const ExactVec& p);
// prod (x - nodes[i]), expanded.
ExactVec exact_from_roots(const ExactVec& nodes);

// --- structured products ------------------------------------------------------

enum class StructuredKind { Toeplitz, Hankel, Vandermonde, Cauchy };

ExactVec naive_toeplitz_mul(const ExactVec& first_col, const ExactVec& first_row,
                            const ExactVec& v);
ExactVec naive_hankel_mul(const ExactVec& skew, const ExactVec& v);
ExactVec naive_vandermonde_mul(const ExactVec& nodes, const ExactVec& p);
ExactVec naive_cauchy_mul(const ExactVec& s, const ExactVec& t, const ExactVec& v);
ExactVec naive_trummer(const ExactVec& s, const ExactVec& v);
// Dispatch on the four Table-1 kinds; `data` is the compressed representation
// (col|row fused for Toeplitz, skew for Hankel, nodes for Vandermonde, s|t for Cauchy).
ExactVec naive_structured_mul(StructuredKind kind, const std::vector<ExactVec>& data,
                              const ExactVec& v);

// --- solvers and bound oracles -----------------------------------------------

ExactVec exact_gauss_solve(ExactMat C, ExactVec r);
// Exact solution of the Cauchy system via the inverse factorization
// diag * C(t,s) * diag; O(n^2).
ExactVec exact_cauchy_solve(const ExactVec& s, const ExactVec& t, const ExactVec& r);
ExactVec exact_lagrange_interpolate(const ExactVec& nodes, const ExactVec& values);
// Numerator/denominator of sum q_j / p_j over a common denominator.
std::pair<ExactVec, ExactVec> exact_sum_rational(const std::vector<std::pair<ExactVec, ExactVec>>& terms);

// First column of the inverse of the unit lower-triangular Toeplitz matrix
// with first column u, run with the same divide-and-conquer windowing as the
// fast path but in exact arithmetic.
ExactVec exact_tri_toeplitz_inverse(const ExactVec& u);

// Discriminant of a real-coefficient polynomial: resultant of f and f' over
// the rationals up to the leading-coefficient factor. Throws on complex input.
ExactRational exact_discriminant(const ExactVec& f);

}  // namespace smat::oracle
