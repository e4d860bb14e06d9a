#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "smat/plan.hpp"
#include "smat/poly.hpp"

namespace smat {

struct FftOptions {
  bool strict = false;               // exact-form multiplication certificate
  std::optional<long> exec_prec;     // fixed working precision (benchmark mode)
};

/// Values of A at 1, w, ..., w^{K-1} for the K-th root of unity, K = 2^k,
/// each within 2^-ell. Requires K >= deg A + 1 and input accuracy meeting
/// the fft-eval certificate.
std::vector<ComplexApprox> fft_eval_unity(const ApproxPoly& A, long k, long ell,
                                          const FftOptions& opt = {});

/// Inverse: coefficients of the degree K-1 polynomial taking the given values
/// at the K-th roots of unity, within 2^-ell. K must be a power of two.
ApproxPoly fft_interpolate_unity(const std::vector<ComplexApprox>& values, long ell,
                                 const FftOptions& opt = {});

/// FFT product A*B within 2^-ell per coefficient. Degrees add, never trimmed.
ApproxPoly poly_mul(const ApproxPoly& A, const ApproxPoly& B, long ell,
                    const FftOptions& opt = {});

/// x -> 2^rho x substitution: scale(F)(x) = F(2^rho x). Exact (dyadic), and
/// pulls every root of F inside the unit disc when 2^rho bounds them.
ApproxPoly scale_to_unit_disc(const ApproxPoly& F, long rho);
ApproxPoly unscale_from_unit_disc(const ApproxPoly& F, long rho);

namespace detail {

// Uncertified product at an explicit working precision; used inside composite
// algorithms whose plans cover the whole pipeline. Sets out.lambda = out_lambda.
ApproxPoly mul_at(const ApproxPoly& A, const ApproxPoly& B, long prec, long out_lambda);

// Pointwise values of A at all K-th roots of unity, at precision prec.
std::vector<ComplexApprox> dft_points(const ApproxPoly& A, long K, long prec);

ApproxPoly idft_poly(const std::vector<ComplexApprox>& values, long prec, long out_lambda);

long pow2_at_least(long x);

}  // namespace detail

}  // namespace smat
