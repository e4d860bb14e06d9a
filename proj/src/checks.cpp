#include "smat/checks.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>

namespace smat::checks {

namespace {
std::atomic<bool> g_enabled{true};
std::atomic<std::uint64_t> g_violations{0};
}  // namespace

bool enabled() { return g_enabled.load(std::memory_order_relaxed); }
void set_enabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }
std::uint64_t violations() { return g_violations.load(std::memory_order_relaxed); }
void reset() { g_violations.store(0, std::memory_order_relaxed); }

void expect_le(const char* what, double lg_actual, double lg_bound) {
  if (!enabled()) return;
  if (lg_actual <= lg_bound) return;
  g_violations.fetch_add(1, std::memory_order_relaxed);
  std::fprintf(stderr, "[smat] bound violated: %s lg_actual=%.3f > lg_bound=%.3f\n", what,
               lg_actual, lg_bound);
}

double logadd2(double a, double b) {
  double hi = a > b ? a : b;
  double lo = a > b ? b : a;
  if (lo < hi - 80.0) return hi;
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

}  // namespace smat::checks
