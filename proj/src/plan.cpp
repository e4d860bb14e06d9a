#include "smat/plan.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "smat/errors.hpp"

namespace smat {

long lgc(long x) {
  long k = 0;
  while ((1L << k) < x) ++k;
  return k;
}

const char* formula_name(Formula f) {
  switch (f) {
    case Formula::FftEval: return "fft-eval";
    case Formula::Mul: return "mul";
    case Formula::MulStrict: return "mul-strict";
    case Formula::TriInverseStep: return "tri-inverse-step";
    case Formula::TriInverse: return "tri-inverse";
    case Formula::Divide: return "divide";
    case Formula::DivideStrict: return "divide-strict";
    case Formula::FanIn: return "fan-in";
    case Formula::FanOut: return "fan-out";
    case Formula::ProductMany: return "product-many";
    case Formula::RationalSum: return "rational-sum";
    case Formula::ModularReduce: return "modular-reduce";
    case Formula::Interpolate: return "interpolate";
    case Formula::CauchyMul: return "cauchy-mul";
    case Formula::Trummer: return "trummer";
    case Formula::CauchySolve: return "cauchy-solve";
  }
  return "?";
}

Formula formula_from_name(const std::string& name) {
  static const std::map<std::string, Formula> table = {
      {"fft-eval", Formula::FftEval},
      {"mul", Formula::Mul},
      {"mul-strict", Formula::MulStrict},
      {"tri-inverse-step", Formula::TriInverseStep},
      {"tri-inverse", Formula::TriInverse},
      {"divide", Formula::Divide},
      {"divide-strict", Formula::DivideStrict},
      {"fan-in", Formula::FanIn},
      {"fan-out", Formula::FanOut},
      {"product-many", Formula::ProductMany},
      {"rational-sum", Formula::RationalSum},
      {"modular-reduce", Formula::ModularReduce},
      {"interpolate", Formula::Interpolate},
      {"cauchy-mul", Formula::CauchyMul},
      {"trummer", Formula::Trummer},
      {"cauchy-solve", Formula::CauchySolve},
  };
  auto it = table.find(name);
  if (it == table.end()) throw UnknownFormula(name);
  return it->second;
}

namespace {

// A bigger tau is still a valid magnitude bound; negative declared exponents
// must not shrink a certificate.
double pos(long tau) { return static_cast<double>(std::max(tau, 0L)); }

double sq(double x) { return x * x; }

}  // namespace

PrecisionPlan plan_precision(Formula f, const PlanParams& p) {
  const double ell = static_cast<double>(p.ell);
  const double n = static_cast<double>(std::max(p.n, 1L));
  const double m = static_cast<double>(std::max(p.m, 1L));
  const double lgn = static_cast<double>(lgc(std::max(p.n, 1L)));
  const double lgm = static_cast<double>(lgc(std::max(p.m, 1L)));
  const double rho = pos(p.rho);
  double v = 0.0;

  switch (f) {
    case Formula::FftEval:
      v = ell + pos(p.tau) + p.k + 3;
      break;
    case Formula::Mul:
      v = ell + 2 * pos(p.tau1) + 2 * pos(p.tau2) + 6 * lgc(std::max(p.d, 1L)) + 15;
      break;
    case Formula::MulStrict:
      v = ell + 2 * pos(p.tau1) + 2 * pos(p.tau2) + 5.1 * p.k + 4;
      break;
    case Formula::TriInverseStep:
      v = ell + 8 * pos(p.tau1) + 2 * pos(p.tau2) + 15 * lgc(std::max(p.d, 1L)) + 40;
      break;
    case Formula::TriInverse:
      v = ell + 10 * pos(p.tau) * lgn + 70 * sq(lgn) + 8 * (rho + 1) * n * lgn;
      break;
    case Formula::Divide:
      v = ell + pos(p.tau1) + 150 * (rho + 1) * n * lgn;
      break;
    case Formula::DivideStrict:
      v = ell + pos(p.tau1) + 12 * pos(p.tau2) * lgn + 80 * sq(lgn) + 10 * (rho + 1) * n * lgn + 30;
      break;
    case Formula::FanIn:
      v = ell + (4 * n - 4) * std::max(pos(p.tau), 1.0) + 32 * n - sq(lgn + 5) - 7;
      break;
    case Formula::FanOut:
      v = ell + 2 * pos(p.tau1) * lgn + 300 * (rho + 1) * n * lgn;
      break;
    case Formula::ProductMany:
      v = ell + (4 * m - 4) * pos(p.tau) + (4 * m + 2 * lgm - 4) * lgn + 32 * m;
      break;
    case Formula::RationalSum:
      v = ell + pos(p.tau1) + (4 * m - 4) * pos(p.tau2) + (5 * m + 2 * lgm - 4) * lgn + 32 * m;
      break;
    case Formula::ModularReduce:
      v = ell + pos(p.tau1) * lgm + 60 * n * m * (rho + 3) * lgc(std::max(p.m * p.n, 1L)) +
          60 * lgm * sq(lgc(std::max(p.m + p.n, 1L)));
      break;
    case Formula::Interpolate:
      v = ell + 68 * n * (pos(p.tau1) + 3) * lgn + 4 * n * pos(p.tau2) - 6 * p.lg_prod_delta +
          50 * n + 60 * lgn * sq(lgn) + 20;
      break;
    case Formula::CauchyMul:
      v = ell + 90 * n * (pos(p.tau1) + 3) * lgn + 32 * (n - 1) * pos(p.tau2) * lgn +
          30 * pos(p.tau3) * lgn - 35 - 24 * p.lg_delta_st - 4 * p.lg_prod_delta_t;
      break;
    case Formula::Trummer:
      v = ell + 70 * (pos(p.tau1) + 3) * n * lgn + 4 * pos(p.tau3) * lgn - 4 * p.lg_prod_delta_s;
      break;
    case Formula::CauchySolve:
      v = ell + 630 * (pos(p.tau1) + pos(p.tau2)) * n * lgn + 32 * pos(p.tau3) * lgn - 35 -
          35 * lgn * p.lg_prod_delta_s - 5 * p.lg_prod_delta_t - 25 * p.lg_delta_st;
      break;
  }

  PrecisionPlan plan;
  plan.ell = p.ell;
  plan.formula = f;
  plan.lambda = std::max(static_cast<long>(std::ceil(v)), p.ell + 1);
  plan.working_p = plan.lambda + 32;
  return plan;
}

// --- execution budgets ------------------------------------------------------

namespace {

// Entry bound 2^N of the inverse of a unit lower-triangular Toeplitz gamma x
// gamma matrix whose associated polynomial has roots of magnitude <= 2^rho.
double tri_entry_bound(long gamma, long rho) {
  double g = static_cast<double>(std::max(gamma, 2L));
  return (pos(rho) + 1) * g + lgc(gamma) + 1;
}

// Rounding-noise amplification through one inversion of size gamma, summing
// the per-level p^2*u pattern with level-size entry bounds.
double tri_amp(long gamma, long tau, long rho) {
  double amp = 0.0;
  for (long s = 2; s <= gamma; s *= 2)
    amp += 2 * tri_entry_bound(s, rho) + 2 * pos(tau) + 15 * lgc(s) + 40;
  return amp;
}

double div_amp(long m, long n, long tau1, long tau2, long rho) {
  long gamma = m - n + 1;
  double N = tri_entry_bound(gamma, rho);
  return tri_amp(gamma, tau2, rho) + 2 * N + pos(tau1) + 2 * pos(tau2) + 6 * lgc(std::max(m, 2L)) + 30;
}

}  // namespace

long exec_prec_mul(long ell, long tau1, long tau2, long d) {
  PlanParams p;
  p.ell = ell;
  p.tau1 = tau1;
  p.tau2 = tau2;
  p.d = std::max(d, 1L);
  return plan_precision(Formula::Mul, p).working_p;
}

long exec_prec_fft(long ell, long tau, long k) {
  PlanParams p;
  p.ell = ell;
  p.tau = tau;
  p.k = k;
  return plan_precision(Formula::FftEval, p).working_p;
}

long exec_prec_tri_inverse(long ell, long gamma, long tau, long rho) {
  return ell + static_cast<long>(std::ceil(tri_amp(gamma, tau, rho))) + 64;
}

long exec_prec_divide(long ell, long m, long n, long tau1, long tau2, long rho) {
  return ell + static_cast<long>(std::ceil(div_amp(m, n, tau1, tau2, rho))) + 64;
}

long exec_prec_fan_out(long ell, long leaf_count, long modn, long tau1, long rho) {
  double amp = 0.0;
  long t1 = std::max(tau1, 0L);
  for (long s = std::max(leaf_count, 2L); s >= 2; s /= 2) {
    long deg = s * std::max(modn, 1L);
    amp += div_amp(2 * deg - 1, deg, t1, static_cast<long>(tri_entry_bound(deg, rho)), rho);
  }
  return ell + static_cast<long>(std::ceil(amp)) + 64;
}

long exec_prec_fan_in(long ell, long n, long tau) {
  PlanParams p;
  p.ell = ell;
  p.n = std::max(n, 1L);
  p.tau = tau;
  return plan_precision(Formula::FanIn, p).lambda + 64;
}

}  // namespace smat
