#include "indpath/kernels.hpp"

#include <cmath>

// Reference kernels. Compiled with -ffp-contract=off so that axpy/scale keep
// plain mul+add semantics and the SIMD variants can match them exactly.

namespace indpath::kern::scalar {

double dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

std::size_t iamax(const double* x, std::size_t n) {
  std::size_t best = 0;
  double best_abs = std::fabs(x[0]);
  for (std::size_t i = 1; i < n; ++i) {
    const double a = std::fabs(x[i]);
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  return best;
}

}  // namespace indpath::kern::scalar
