#include "eqc/simd.hpp"

namespace eqc::simd {

namespace {

bool any_row_le(const std::int32_t* rows, std::size_t count, std::size_t stride,
                const std::int32_t* v, std::size_t n) {
  for (std::size_t r = 0; r < count; ++r) {
    const std::int32_t* row = rows + r * stride;
    bool le = true;
    for (std::size_t k = 0; k < n && le; ++k) le = row[k] <= v[k];
    if (le) return true;
  }
  return false;
}

void add_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) dst[k] += src[k];
}

bool all_zero_i64(const std::int64_t* v, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (v[k] != 0) return false;
  }
  return true;
}

double dot_f64(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += a[k] * b[k];
  return acc;
}

void axpy_f64(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) y[k] += alpha * x[k];
}

void mul_f64(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * b[k];
}

constexpr KernelTable kScalar{"scalar", any_row_le, add_i64, all_zero_i64, dot_f64, axpy_f64, mul_f64};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace eqc::simd
