#pragma once

#include <cstdint>

namespace smat::checks {

// Runtime assertions of the stated norm bounds. Enabled by default; the
// benchmark driver turns them off. Violations are counted, never fatal --
// verification suites assert the counter is zero.
bool enabled();
void set_enabled(bool on);
std::uint64_t violations();
void reset();

// Records "lg_actual <= lg_bound" for the named bound.
void expect_le(const char* what, double lg_actual, double lg_bound);

// lg(2^a + 2^b), for widening a bound on a true value by the accuracy of the
// computed one.
double logadd2(double a, double b);

}  // namespace smat::checks
