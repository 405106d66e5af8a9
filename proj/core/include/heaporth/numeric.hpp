#pragma once

#include <functional>
#include <vector>

#include "heaporth/ortho_basis.hpp"

namespace heaporth {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  unsigned evaluations = 0;
};

// (a^{n+1} - b^{n+1}) / (a - b) with a, b = (x +- sqrt(x^2 + 4)) / 2.
double binet_eval(unsigned n, double x);

// P_n(x) from the exact polynomial, evaluated by Horner in rationals.
double fibonacci_exact_eval(unsigned n, double x);

// Adaptive Simpson on [a, b] to the absolute tolerance `tol`. Throws
// kAccuracy when a subinterval bottoms out at max_depth above its share
// of the tolerance.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                                  unsigned max_depth = 50);

// 4^{m+1}/(2 pi) * int_0^1 x^m sqrt((1-x)/x) dx, computed after x = sin^2(u).
QuadratureResult catalan_integral(unsigned m);

// Expands 1/(1 - x t - t^2) in t exactly and compares t^n coefficients
// with the Fibonacci P_n for n <= n_max.
bool gf_coeff_check(unsigned n_max);

// Cyclic Jacobi sweeps until the off-diagonal norm drops below 1e-12.
// Throws kNumeric after 100 sweeps.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a);

// min eigenvalue > 1e-9 for a rational Hankel matrix of size <= 12.
bool jacobi_eigen_positivity(const HankelMatrix& a);

}  // namespace heaporth
