#pragma once

#include <optional>
#include <span>
#include <vector>

#include "smat/fft.hpp"
#include "smat/poly.hpp"

namespace smat {

/// n x n Toeplitz matrix (entry(i,j) = c[i-j]) compressed to its first column
/// and first row; the corner entry is shared and must agree.
struct ToeplitzMatrix {
  std::vector<ComplexApprox> first_col;
  std::vector<ComplexApprox> first_row;
  long lambda = kExactLambda;

  ToeplitzMatrix() = default;
  ToeplitzMatrix(std::vector<ComplexApprox> col, std::vector<ComplexApprox> row,
                 long lambda_in = kExactLambda);
  static ToeplitzMatrix identity(long n, long prec);

  long n() const { return static_cast<long>(first_col.size()); }
  ComplexApprox entry(long i, long j) const {
    return i >= j ? first_col[i - j] : first_row[j - i];
  }
};

/// n x n Hankel matrix (entry(i,j) = h[i+j]); skew has length 2n-1.
struct HankelMatrix {
  std::vector<ComplexApprox> skew;
  long lambda = kExactLambda;

  HankelMatrix() = default;
  explicit HankelMatrix(std::vector<ComplexApprox> h, long lambda_in = kExactLambda)
      : skew(std::move(h)), lambda(std::max(1L, lambda_in)) {}

  long n() const { return (static_cast<long>(skew.size()) + 1) / 2; }
};

/// Unit lower-triangular Toeplitz matrix, stored as its first column with the
/// diagonal entry first. col.coeffs[0] must be 1 (normalized).
struct TriToeplitz {
  ApproxPoly col;
  bool normalized = true;

  long dim() const { return static_cast<long>(col.coeffs.size()); }
};

struct DivisionResult {
  ApproxPoly quotient;
  ApproxPoly remainder;
  PrecisionPlan plan;
};

struct ToeplitzOptions {
  bool strict = false;
  std::optional<long> exec_prec;
  std::optional<long> rho;  // root-magnitude exponent override
};

/// T*v as the middle coefficient window of the product of the fused diagonal
/// polynomial with v; each entry within 2^-ell.
std::vector<ComplexApprox> toeplitz_vec_mul(const ToeplitzMatrix& T, const VecApprox& v,
                                            long ell, const ToeplitzOptions& opt = {});

/// H*v via the reversal reduction to a Toeplitz product.
std::vector<ComplexApprox> hankel_vec_mul(const HankelMatrix& H, const VecApprox& v,
                                          long ell, const ToeplitzOptions& opt = {});

/// First column of T^-1 by the divide-and-conquer block recursion, realized
/// as two windowed polynomial products per doubling step.
TriToeplitz tri_toeplitz_inverse(const TriToeplitz& T, long ell,
                                 const ToeplitzOptions& opt = {});

/// Quotient and remainder of s / t with q = T^-1 s through the triangular
/// Toeplitz system and r = s - t q.
DivisionResult poly_divide(const ApproxPoly& s, const ApproxPoly& t, long ell,
                           const ToeplitzOptions& opt = {});

/// The stated norm bounds for quotient and remainder of a division by a monic
/// divisor whose roots have magnitude <= 2^rho.
std::pair<PrecFloat, PrecFloat> quotient_remainder_norm_bounds(long m, long n, long rho,
                                                               const PrecFloat& norm_F);

namespace detail {

// First out_len coefficients of 1/u(x) for a power series with u[0] = 1,
// computed by the doubling recursion at precision prec.
std::vector<ComplexApprox> invert_unit_series(std::span<const ComplexApprox> u,
                                              size_t out_len, long prec, long out_lambda);

// Remainder of s mod the monic t, given the inverse series w of the reversed
// t (length >= deg s - deg t + 1). Uncertified; prec is the caller's budget.
ApproxPoly remainder_with_inverse(const ApproxPoly& s, const ApproxPoly& t_monic,
                                  std::span<const ComplexApprox> w, long prec, long rho);

// Quotient+remainder of s by monic t at an explicit precision.
std::pair<ApproxPoly, ApproxPoly> divide_core(const ApproxPoly& s, const ApproxPoly& t_monic,
                                              long prec, long rho);

}  // namespace detail

}  // namespace smat
