#include "isolat/config.hpp"

#include <atomic>
#include <cstdlib>

namespace isolat {
namespace {

double initial_tolerance() {
  if (const char* env = std::getenv("ISOLAT_TOLERANCE")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0 && v < 1e-2) return v;
  }
  return 1e-9;
}

std::atomic<double>& tol_slot() {
  static std::atomic<double> slot{initial_tolerance()};
  return slot;
}

std::atomic<int> g_n_cap{100};

}  // namespace

double tolerance() noexcept { return tol_slot().load(std::memory_order_relaxed); }
void set_tolerance(double tau) noexcept { tol_slot().store(tau, std::memory_order_relaxed); }

int n_cap() noexcept { return g_n_cap.load(std::memory_order_relaxed); }
void set_n_cap(int cap) noexcept { g_n_cap.store(cap, std::memory_order_relaxed); }

}  // namespace isolat
