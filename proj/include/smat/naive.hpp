#pragma once

#include "smat/toeplitz.hpp"

namespace smat::naive {

// Serial O(n^2) reference kernels at an explicit working precision. These are
// the comparison baseline for the benchmark driver and a secondary check in
// tests (the exact oracle remains the source of truth).

std::vector<ComplexApprox> toeplitz_mul(const ToeplitzMatrix& T,
                                        const std::vector<ComplexApprox>& v, long prec);

std::vector<ComplexApprox> hankel_mul(const HankelMatrix& H,
                                      const std::vector<ComplexApprox>& v, long prec);

// Horner per node.
std::vector<ComplexApprox> vandermonde_mul(const std::vector<ComplexApprox>& nodes,
                                           const std::vector<ComplexApprox>& p, long prec);

std::vector<ComplexApprox> multipoint_eval(const ApproxPoly& p,
                                           const std::vector<ComplexApprox>& nodes, long prec);

std::vector<ComplexApprox> cauchy_mul(const std::vector<ComplexApprox>& s,
                                      const std::vector<ComplexApprox>& t,
                                      const std::vector<ComplexApprox>& v, long prec);

std::vector<ComplexApprox> trummer(const std::vector<ComplexApprox>& s,
                                   const std::vector<ComplexApprox>& v, long prec);

}  // namespace smat::naive
