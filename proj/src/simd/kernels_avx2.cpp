// Compiled with -mavx2. Only reached through the dispatch table after the
// CPU has reported AVX2 support.

#include "eqc/simd.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>

namespace eqc::simd::detail {

namespace {

bool row_le(const std::int32_t* row, const std::int32_t* v, std::size_t n) {
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + k));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + k));
    if (_mm256_movemask_epi8(_mm256_cmpgt_epi32(a, b)) != 0) return false;
  }
  for (; k < n; ++k) {
    if (row[k] > v[k]) return false;
  }
  return true;
}

bool any_row_le(const std::int32_t* rows, std::size_t count, std::size_t stride,
                const std::int32_t* v, std::size_t n) {
  for (std::size_t r = 0; r < count; ++r) {
    if (row_le(rows + r * stride, v, n)) return true;
  }
  return false;
}

void add_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    a = _mm256_add_epi64(a, b);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), a);
  }
  for (; k < n; ++k) dst[k] += src[k];
}

bool all_zero_i64(const std::int64_t* v, std::size_t n) {
  std::size_t k = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; k + 4 <= n; k += 4) {
    acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + k)));
  }
  if (!_mm256_testz_si256(acc, acc)) return false;
  for (; k < n; ++k) {
    if (v[k] != 0) return false;
  }
  return true;
}

double dot_f64(const double* a, const double* b, std::size_t n) {
  std::size_t k = 0;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  for (; k + 8 <= n; k += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(a + k + 4), _mm256_loadu_pd(b + k + 4)));
  }
  for (; k + 4 <= n; k += 4) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; k < n; ++k) acc += a[k] * b[k];
  return acc;
}

void axpy_f64(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d vy = _mm256_add_pd(_mm256_loadu_pd(y + k), _mm256_mul_pd(va, _mm256_loadu_pd(x + k)));
    _mm256_storeu_pd(y + k, vy);
  }
  for (; k < n; ++k) y[k] += alpha * x[k];
}

void mul_f64(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    _mm256_storeu_pd(out + k, _mm256_mul_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k)));
  }
  for (; k < n; ++k) out[k] = a[k] * b[k];
}

constexpr KernelTable kAvx2{"avx2", any_row_le, add_i64, all_zero_i64, dot_f64, axpy_f64, mul_f64};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2; }

}  // namespace eqc::simd::detail

#else

namespace eqc::simd::detail {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace eqc::simd::detail

#endif
