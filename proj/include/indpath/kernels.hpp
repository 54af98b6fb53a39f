#pragma once

#include <cstddef>
#include <string_view>

namespace indpath::kern {

// Dense double-precision kernels backing the LP basis factorization and the
// triangular solves. One scalar reference implementation plus SIMD variants,
// selected once at runtime. axpy/scale are elementwise and agree bit-for-bit
// across variants; dot is a reduction and may differ by association order.
struct Ops {
  const char* name;
  // sum_i x[i]*y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y[i] += a*x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // x[i] *= a
  void (*scale)(double a, double* x, std::size_t n);
  // index of the first element attaining max_i |x[i]|; n > 0
  std::size_t (*iamax)(const double* x, std::size_t n);
};

// The active kernel table. Picked on first use: the INDPATH_KERNEL
// environment variable (scalar|avx2) overrides CPU detection.
const Ops& ops();

// Force a specific variant by name; false if it is not available here.
bool select(std::string_view name);

// Variants compiled into this binary, scalar first.
const Ops* variants(std::size_t* count);

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, double* x, std::size_t n);
std::size_t iamax(const double* x, std::size_t n);
}  // namespace scalar

}  // namespace indpath::kern
