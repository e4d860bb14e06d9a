#pragma once

#include <initializer_list>
#include <vector>

#include "smat/prec.hpp"

namespace smat {

/// Complex polynomial with a declared degree (kept as-is, never trimmed by
/// arithmetic), a magnitude exponent tau with max|coeff| <= 2^tau, and the
/// accuracy lambda to which the coefficients are known (2^-lambda per
/// coefficient). The zero polynomial has degree 0, a single zero coefficient
/// and the zero flag set.
struct ApproxPoly {
  std::vector<ComplexApprox> coeffs;
  long degree = 0;
  long tau = 0;
  long lambda = kExactLambda;
  bool zero = true;

  ApproxPoly();
  explicit ApproxPoly(std::vector<ComplexApprox> c, long lambda_in = kExactLambda);
  // Real coefficients, constant term first.
  static ApproxPoly from_doubles(std::initializer_list<double> c, long prec,
                                 long lambda_in = kExactLambda);
  static ApproxPoly zero_poly(long prec = 64);
  static ApproxPoly constant(const ComplexApprox& c, long lambda_in = kExactLambda);

  long prec() const;
  ApproxPoly at_prec(long p) const;

  // Coefficient with implicit zeros beyond the stored degree.
  const ComplexApprox& coeff(size_t i) const;

  // Recompute tau / zero flag from the stored coefficients.
  void refresh_magnitude();

  // lg of the 2-norm of the coefficient vector, rounded up / down.
  PrecFloat norm2_upper(long prec = 96) const;
  PrecFloat norm2_lower(long prec = 96) const;
  double norm_inf_lg() const;

  ComplexApprox eval_horner(const ComplexApprox& x, long prec) const;
  ApproxPoly derivative(long prec) const;

  // Largest index with a nonzero coefficient (0 for the zero polynomial).
  long effective_degree() const;
};

// max_i |a_i - b_i| over the common (max) degree, rounded up.
PrecFloat coeff_dist_inf(const ApproxPoly& a, const ApproxPoly& b, long prec = 96);

// Coefficient-wise sum at an explicit precision; degree = max of the two.
ApproxPoly poly_add(const ApproxPoly& a, const ApproxPoly& b, long prec, long lambda_out);

/// A plain complex vector with its declared input accuracy.
struct VecApprox {
  std::vector<ComplexApprox> values;
  long lambda = kExactLambda;

  VecApprox() = default;
  explicit VecApprox(std::vector<ComplexApprox> v, long lambda_in = kExactLambda)
      : values(std::move(v)), lambda(std::max(1L, lambda_in)) {}

  size_t size() const { return values.size(); }

  // Exponent with max |v_i| <= 2^tau.
  long tau() const {
    long m = LONG_MIN;
    for (const auto& z : values)
      if (!z.is_zero()) m = std::max(m, z.mag_exp_upper());
    return m == LONG_MIN ? 0 : m;
  }
};

}  // namespace smat
