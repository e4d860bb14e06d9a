#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smat/plan.hpp"

namespace smat::drivers {

// Task names accepted by verify/bench:
//   mul divide tri-inverse tree multipoint vandermonde toeplitz hankel
//   mul-many rational-sum modular interp cauchy trummer cauchy-solve
const std::vector<std::string>& verify_tasks();

struct VerifyResult {
  std::string task;
  long trials = 0;
  long failures = 0;
  double max_lg_err = -1e300;    // worst absolute lg error observed
  double worst_margin = -1e300;  // max over trials of (lg err + ell); <= 0 passes
  std::uint64_t bound_violations = 0;
  bool pass = false;
  std::string note;
};

// Seeded oracle-equivalence run. ell = 0 cycles the trial accuracy through
// {32, 64, 96}; n/tau cap the per-trial instance draws.
VerifyResult verify_task(const std::string& task, long n, long tau, long ell, long trials,
                         std::uint64_t seed, bool strict);

struct PlanCheckResult {
  Formula formula;
  long lambda = 0;  // certificate of the probed instance
  long trials = 0;
  long violations = 0;
  double max_lg_err = -1e300;
  double lg_tol = 0.0;
  bool pass = false;
};

// Criterion-style sufficiency probe: exact inputs perturbed by +-2^-lambda
// per coordinate with sampled sign patterns; output must stay within 2^-ell
// of the exact-input truth on every trial.
PlanCheckResult plan_sufficiency(Formula f, long trials, long ell, std::uint64_t seed);
const std::vector<Formula>& plan_check_formulas();

struct BenchRow {
  long n = 0;
  double fast_ms = 0.0;
  double naive_ms = 0.0;
  std::uint64_t digest = 0;  // instance fingerprint (seed-stable)
};

// Fixed-precision scaling measurement of the fast kernel vs the serial naive
// reference on identical instances. Returns the precision used via prec_out.
std::vector<BenchRow> bench_task(const std::string& task, const std::vector<long>& ns, long ell,
                                 long tau, std::uint64_t seed, long* prec_out);

}  // namespace smat::drivers
