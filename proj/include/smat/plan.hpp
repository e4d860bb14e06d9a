#pragma once

#include <string>

namespace smat {

/// Input-accuracy formulas. Each value identifies the sufficiency bound a
/// computation instantiates: how accurately (2^-lambda) the inputs must be
/// known so the output is correct to 2^-ell.
enum class Formula {
  FftEval,
  Mul,
  MulStrict,
  TriInverseStep,  // the P0^2*P1 product pattern inside the inversion recursion
  TriInverse,
  Divide,        // default (tau2-free, root-bound based)
  DivideStrict,  // tau2-dependent variant
  FanIn,
  FanOut,
  ProductMany,
  RationalSum,
  ModularReduce,
  Interpolate,
  CauchyMul,
  Trummer,
  CauchySolve,
};

const char* formula_name(Formula f);
Formula formula_from_name(const std::string& name);  // throws UnknownFormula

struct PlanParams {
  long ell = 0;
  long tau = 0;   // generic magnitude exponent (nodes, matrix entries)
  long tau1 = 0;  // primary polynomial / numerator exponent
  long tau2 = 0;  // secondary polynomial / denominator exponent
  long tau3 = 0;  // vector entry exponent
  long rho = 0;   // root-magnitude exponent (roots <= 2^rho)
  long n = 1;
  long m = 1;
  long d = 1;  // degree, for the multiplication formulas
  long k = 0;  // lg K (K = FFT size), for fft/mul-strict
  double lg_delta_st = 0.0;      // lg min |s_i - t_j|
  double lg_prod_delta = 0.0;    // lg prod Delta_i over the primary node set
  double lg_prod_delta_s = 0.0;  // lg prod Delta_j(s)
  double lg_prod_delta_t = 0.0;  // lg prod Delta_j(t)
};

/// The certificate attached to every computation: requested output accuracy
/// ell, required input accuracy lambda (ceiling of the formula value, clamped
/// at ell+1), and working_p = lambda + 32 guard bits.
struct PrecisionPlan {
  long ell = 0;
  long lambda = 0;
  long working_p = 0;
  Formula formula = Formula::Mul;
};

PrecisionPlan plan_precision(Formula f, const PlanParams& p);

// ceil(lg x) for x >= 1 (0 for x = 1).
long lgc(long x);

// --- Internal working-precision budgets -----------------------------------
//
// The lambda certificates above bound how well the *inputs* must be known.
// The arithmetic itself runs at a precision sized so that rounding noise,
// after passing through the intermediate-norm growth of the algorithm, stays
// below 2^-ell. These budgets track the per-level norm bounds instead of the
// certificates' aggregated worst case, which keeps the precision linear in
// the problem size.

long exec_prec_mul(long ell, long tau1, long tau2, long d);
long exec_prec_fft(long ell, long tau, long k);
long exec_prec_tri_inverse(long ell, long gamma, long tau, long rho);
// m = dividend degree, n = divisor degree.
long exec_prec_divide(long ell, long m, long n, long tau1, long tau2, long rho);
// Remainder-tree descent over a subtree with leaf_count leaves of degree-1
// moduli (or moduli of degree modn), dividend exponent tau1.
long exec_prec_fan_out(long ell, long leaf_count, long modn, long tau1, long rho);
long exec_prec_fan_in(long ell, long n, long tau);

}  // namespace smat
