#include "indpath/kernels.hpp"

#if defined(INDPATH_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>

// AVX2 variants. Elementwise ops use mul+add (no FMA) so they match the
// scalar reference bit-for-bit; dot keeps four independent accumulators and
// differs from scalar only by summation order.

namespace indpath::kern::avx2 {

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4)));
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  acc0 = _mm256_add_pd(acc0, acc1);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc0);
  double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

std::size_t iamax(const double* x, std::size_t n) {
  // Pass 1: the maximum magnitude; pass 2: its first position. |x| compares
  // exactly across passes, so the result matches the scalar kernel.
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d vmax = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    vmax = _mm256_max_pd(vmax, _mm256_and_pd(abs_mask, _mm256_loadu_pd(x + i)));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, vmax);
  double mx = lanes[0];
  for (int k = 1; k < 4; ++k) mx = lanes[k] > mx ? lanes[k] : mx;
  for (; i < n; ++i) {
    const double a = std::fabs(x[i]);
    mx = a > mx ? a : mx;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (std::fabs(x[j]) == mx) return j;
  return 0;
}

}  // namespace indpath::kern::avx2

#endif  // INDPATH_HAVE_AVX2
