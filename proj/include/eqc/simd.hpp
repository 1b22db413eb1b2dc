#pragma once

// Inner-loop kernels with a scalar reference implementation and an AVX2
// variant chosen at runtime. Both variants must agree bit-for-bit on integer
// kernels; floating kernels agree up to summation order.

#include <cstddef>
#include <cstdint>

namespace eqc::simd {

struct KernelTable {
  const char* name;

  /// True iff some row r of `rows` (count x stride, row-major) satisfies
  /// rows[r][k] <= v[k] for every k < n.
  bool (*any_row_le)(const std::int32_t* rows, std::size_t count, std::size_t stride,
                     const std::int32_t* v, std::size_t n);

  /// dst[k] += src[k]
  void (*add_i64)(std::int64_t* dst, const std::int64_t* src, std::size_t n);

  /// True iff every v[k] == 0.
  bool (*all_zero_i64)(const std::int64_t* v, std::size_t n);

  /// sum_k a[k] * b[k]
  double (*dot_f64)(const double* a, const double* b, std::size_t n);

  /// y[k] += alpha * x[k]
  void (*axpy_f64)(double alpha, const double* x, double* y, std::size_t n);

  /// out[k] = a[k] * b[k]
  void (*mul_f64)(const double* a, const double* b, double* out, std::size_t n);
};

const KernelTable& scalar_kernels();

/// nullptr when the build lacks AVX2 support or the CPU does not report it.
const KernelTable* avx2_kernels();

/// Kernel table used by the solvers. AVX2 when available unless the
/// environment variable EQC_SIMD is set to "scalar".
const KernelTable& active_kernels();

}  // namespace eqc::simd
