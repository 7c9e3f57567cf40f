#include "neumann1/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>

namespace neumann1::kernels {

namespace {
std::atomic<bool> g_parallel{true};

bool env_disabled() {
  const char* e = std::getenv("NEUMANN1_SERIAL");
  return e != nullptr && e[0] != '\0' && e[0] != '0';
}
const bool g_env_serial = env_disabled();
}  // namespace

bool parallel_enabled() { return g_parallel.load() && !g_env_serial; }
void set_parallel_enabled(bool on) { g_parallel.store(on); }

double weighted_abs_diff_sum_serial(const int* a, const int* b, const double* w,
                                    size_t n, const double* u) {
  double s = 0.0;
  for (size_t e = 0; e < n; ++e) s += w[e] * std::abs(u[a[e]] - u[b[e]]);
  return s;
}

double weighted_abs_diff_sum_omp(const int* a, const int* b, const double* w,
                                 size_t n, const double* u) {
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
  for (long e = 0; e < static_cast<long>(n); ++e)
    s += w[e] * std::abs(u[a[e]] - u[b[e]]);
  return s;
}

double weighted_abs_diff_sum(const int* a, const int* b, const double* w,
                             size_t n, const double* u) {
  if (parallel_enabled() && n >= 4096)
    return weighted_abs_diff_sum_omp(a, b, w, n, u);
  return weighted_abs_diff_sum_serial(a, b, w, n, u);
}

double owner_weighted_sum_serial(const int* owner, const double* c, size_t n,
                                 const double* u) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += c[i] * u[owner[i]];
  return s;
}

double owner_weighted_sum_omp(const int* owner, const double* c, size_t n,
                              const double* u) {
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
  for (long i = 0; i < static_cast<long>(n); ++i) s += c[i] * u[owner[i]];
  return s;
}

double owner_weighted_sum(const int* owner, const double* c, size_t n,
                          const double* u) {
  if (parallel_enabled() && n >= 4096)
    return owner_weighted_sum_omp(owner, c, n, u);
  return owner_weighted_sum_serial(owner, c, n, u);
}

double box_gradient_step_serial(double* y, const double* x, const double* g,
                                double tau, double lo, double hi, size_t n) {
  double delta = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double v = std::clamp(x[i] - tau * g[i], lo, hi);
    delta = std::max(delta, std::abs(v - y[i]));
    y[i] = v;
  }
  return delta;
}

double box_gradient_step_omp(double* y, const double* x, const double* g,
                             double tau, double lo, double hi, size_t n) {
  double delta = 0.0;
#pragma omp parallel for schedule(static) reduction(max : delta)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    const double v = std::clamp(x[i] - tau * g[i], lo, hi);
    delta = std::max(delta, std::abs(v - y[i]));
    y[i] = v;
  }
  return delta;
}

double box_gradient_step(double* y, const double* x, const double* g,
                         double tau, double lo, double hi, size_t n) {
  if (parallel_enabled() && n >= 4096)
    return box_gradient_step_omp(y, x, g, tau, lo, hi, n);
  return box_gradient_step_serial(y, x, g, tau, lo, hi, n);
}

}  // namespace neumann1::kernels
