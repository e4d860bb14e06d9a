#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "smat/poly.hpp"

namespace smat::gen {

/// Deterministic generator for dyadic test data. Draws go through explicit
/// modular reduction of the raw engine output, so streams are identical
/// across platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }
  long uniform(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool flip() { return (raw() & 1) != 0; }

  // Dyadic with a 21-bit mantissa scaled so |v| <= 2^tau.
  PrecFloat dyadic(long tau, long prec, bool nonzero = false);
  ComplexApprox dyadic_complex(long tau, long prec, bool nonzero = false);
  std::vector<ComplexApprox> dyadic_vector(long n, long tau, long prec);

  // Pairwise-distinct nodes with separations comfortably above 2^{tau-24}.
  std::vector<ComplexApprox> distinct_nodes(long n, long tau, long prec);
  // A second family, also kept away from the first (for Cauchy instances).
  std::vector<ComplexApprox> distinct_nodes_away(long n, long tau, long prec,
                                                 const std::vector<ComplexApprox>& other);

  ApproxPoly poly(long deg, long tau, long prec, bool nonzero_lead = true,
                  bool nonzero_const = false);
  ApproxPoly monic_poly(long deg, long tau, long prec);

 private:
  std::mt19937_64 eng_;
};

// v +- 2^-lambda on each coordinate of each entry, freshsign per coordinate.
std::vector<ComplexApprox> perturb(Rng& rng, const std::vector<ComplexApprox>& v, long lambda);
ApproxPoly perturb_poly(Rng& rng, const ApproxPoly& p, long lambda);

// FNV-1a of a string; instance digests in benchmark output.
std::uint64_t fnv1a(const std::string& s);

}  // namespace smat::gen
