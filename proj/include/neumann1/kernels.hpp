#pragma once

#include <cstddef>

// Hot data-parallel loops, each with a serial reference implementation and an
// OpenMP variant. The serial versions stay as the comparison oracle for tests
// and the benchmark target.
namespace neumann1::kernels {

bool parallel_enabled();
void set_parallel_enabled(bool on);

// sum_e w[e] * |u[a[e]] - u[b[e]]|
double weighted_abs_diff_sum_serial(const int* a, const int* b, const double* w,
                                    size_t n, const double* u);
double weighted_abs_diff_sum_omp(const int* a, const int* b, const double* w,
                                 size_t n, const double* u);
double weighted_abs_diff_sum(const int* a, const int* b, const double* w,
                             size_t n, const double* u);

// sum_i c[i] * u[owner[i]]
double owner_weighted_sum_serial(const int* owner, const double* c, size_t n,
                                 const double* u);
double owner_weighted_sum_omp(const int* owner, const double* c, size_t n,
                              const double* u);
double owner_weighted_sum(const int* owner, const double* c, size_t n,
                          const double* u);

// y[i] = clamp(x[i] - tau * g[i], lo, hi); also reports max |y - x_prev| with
// x_prev = y's former contents.
double box_gradient_step_serial(double* y, const double* x, const double* g,
                                double tau, double lo, double hi, size_t n);
double box_gradient_step_omp(double* y, const double* x, const double* g,
                             double tau, double lo, double hi, size_t n);
double box_gradient_step(double* y, const double* x, const double* g,
                         double tau, double lo, double hi, size_t n);

}  // namespace neumann1::kernels
