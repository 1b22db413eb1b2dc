#include "eqc/linalg.hpp"

#include <algorithm>
#include <utility>

namespace eqc {

namespace {

using BigMatrix = Matrix<BigInt>;

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = BigInt(static_cast<long>(m(r, c)));
  return out;
}

struct Echelon {
  BigMatrix reduced;
  std::vector<std::size_t> pivot_cols;  // pivot column of row i
};

// Bareiss fraction-free elimination to row echelon form. Every division is
// exact; entries stay integral throughout.
Echelon bareiss(BigMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Echelon out;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(r, k), a(pivot, k));
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        BigInt value = a(r, c) * a(i, k) - a(i, c) * a(r, k);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), prev.get_mpz_t());
        a(i, k) = std::move(value);
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

void make_primitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return;
  std::size_t first = 0;
  while (first < v.size() && v[first] == 0) ++first;
  if (v[first] < 0) g = -g;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

std::vector<std::int64_t> multiply(const IntMatrix& m, std::span<const std::int64_t> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("multiply: dimension mismatch");
  std::vector<std::int64_t> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

std::size_t rank(const IntMatrix& m) { return bareiss(to_big(m)).pivot_cols.size(); }

std::vector<std::vector<BigInt>> integer_kernel_basis(const IntMatrix& m) {
  const Echelon e = bareiss(to_big(m));
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<BigInt>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    // Back substitution over the rationals on the integral echelon form.
    std::vector<Rational> x(cols, Rational(0));
    x[free] = Rational(1);
    for (std::size_t i = e.pivot_cols.size(); i-- > 0;) {
      const std::size_t pc = e.pivot_cols[i];
      Rational acc(0);
      for (std::size_t k = pc + 1; k < cols; ++k) {
        if (e.reduced(i, k) != 0 && !x[k].is_zero()) acc += Rational(e.reduced(i, k), 1) * x[k];
      }
      x[pc] = -acc / Rational(e.reduced(i, pc), 1);
    }
    BigInt lcm_den = 1;
    for (const auto& q : x) lcm_den = lcm(lcm_den, q.denominator());
    std::vector<BigInt> v(cols);
    for (std::size_t k = 0; k < cols; ++k) {
      v[k] = x[k].numerator() * (lcm_den / x[k].denominator());
    }
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& m,
                                                 std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_exact: dimension mismatch");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RationalMatrix a(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = m(r, c);
    a(r, cols) = b[r];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k <= cols; ++k) std::swap(a(r, k), a(p, k));
    }
    const Rational inv = Rational(1) / a(r, c);
    for (std::size_t k = c; k <= cols; ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t k = c; k <= cols; ++k) {
        if (!a(r, k).is_zero()) a(i, k) -= f * a(r, k);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!a(i, cols).is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a(i, cols);
  return x;
}

}  // namespace eqc
