#pragma once

#include "smat/interval.hpp"
#include "smat/multipoint.hpp"

namespace smat {

/// Interpolation instance: knots x_i and target values y_i (|x| = |y|).
struct InterpProblem {
  NodeSet knots;
  VecApprox values;
  long tau2;  // |y_i| <= 2^tau2

  InterpProblem(NodeSet k, VecApprox y);
};

/// A Cauchy matrix C(s,t) = (1/(s_i - t_j)): two disjoint node families with
/// their pairwise separation data.
struct CauchySpec {
  NodeSet s, t;
  PrecFloat delta_st;  // min_{i,j} |s_i - t_j|
  double lg_delta_st = 0.0;
  std::vector<double> lg_row_s;  // lg Delta_j(s,t) = lg min_i |s_j - t_i|
  std::vector<double> lg_row_t;  // lg Delta_j(t,s)

  CauchySpec(NodeSet s_in, NodeSet t_in);

  long n() const { return s.size(); }
};

struct InterpOptions {
  std::optional<long> exec_prec;
};

/// Per-node separations Delta_i = min_{j != i} |x_i - x_j| (exact pairwise
/// scan) plus lg prod Delta_i. Throws DuplicateNodes below 2^-lambda.
Separations node_separations(const std::vector<ComplexApprox>& nodes,
                             long lambda = kExactLambda);

/// Coefficients of the degree n-1 polynomial through (x_i, y_i), within
/// 2^-ell: fan-in, derivative evaluation, certified reciprocals, then the
/// rational-function sum whose numerator is the interpolant.
ApproxPoly lagrange_interpolate(const InterpProblem& prob, long ell,
                                const InterpOptions& opt = {});

/// The Vandermonde system V a = y solved as interpolation.
ApproxPoly vandermonde_solve(const InterpProblem& prob, long ell,
                             const InterpOptions& opt = {});

/// C(s,t) v within 2^-ell per entry.
std::vector<ComplexApprox> cauchy_vec_mul(const CauchySpec& spec, const VecApprox& v, long ell,
                                          const InterpOptions& opt = {});

/// Trummer's problem: sum_{j != i} v_j/(s_i - s_j) for all i.
std::vector<ComplexApprox> trummer(const NodeSet& s_nodes, const VecApprox& v, long ell,
                                   const InterpOptions& opt = {});

/// Solve C(s,t) v = r through the inverse factorization D1 C(t,s) D2.
std::vector<ComplexApprox> cauchy_solve(const CauchySpec& spec, const VecApprox& r, long ell,
                                        const InterpOptions& opt = {});

}  // namespace smat
