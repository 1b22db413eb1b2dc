#include "eqc/lp.hpp"

#include <optional>
#include <stdexcept>

namespace eqc {

namespace {

struct Tableau {
  std::size_t rows;
  std::size_t cols;  // structural + artificial columns, rhs stored separately
  std::vector<std::vector<Rational>> t;
  std::vector<Rational> rhs;
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t col) {
    const Rational p = t[r][col];
    for (auto& x : t[r]) x /= p;
    rhs[r] /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || t[i][col].is_zero()) continue;
      const Rational f = t[i][col];
      for (std::size_t j = 0; j < cols; ++j) {
        if (!t[r][j].is_zero()) t[i][j] -= f * t[r][j];
      }
      rhs[i] -= f * rhs[r];
    }
    basis[r] = col;
  }
};

// Bland's rule iterations over columns [0, allowed). Returns false if unbounded.
bool run_simplex(Tableau& tab, const std::vector<Rational>& cost, std::size_t allowed) {
  for (;;) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < allowed && !entering; ++j) {
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < tab.rows; ++i) {
        if (!tab.t[i][j].is_zero()) reduced -= cost[tab.basis[i]] * tab.t[i][j];
      }
      if (reduced.sign() < 0) entering = j;
    }
    if (!entering) return true;
    std::optional<std::size_t> leaving;
    Rational best;
    for (std::size_t i = 0; i < tab.rows; ++i) {
      if (tab.t[i][*entering].sign() <= 0) continue;
      const Rational ratio = tab.rhs[i] / tab.t[i][*entering];
      if (!leaving || ratio < best || (ratio == best && tab.basis[i] < tab.basis[*leaving])) {
        leaving = i;
        best = ratio;
      }
    }
    if (!leaving) return false;
    tab.pivot(*leaving, *entering);
  }
}

}  // namespace

LpResult solve_lp(const RationalMatrix& a, std::span<const Rational> b,
                  std::span<const Rational> c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) throw std::invalid_argument("LP dimension mismatch");

  Tableau tab{m, n + m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(n + m)),
              std::vector<Rational>(m), std::vector<std::size_t>(m)};
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = flip ? -a(i, j) : a(i, j);
    tab.rhs[i] = flip ? -b[i] : b[i];
    tab.t[i][n + i] = Rational(1);
    tab.basis[i] = n + i;
  }

  std::vector<Rational> phase1(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = Rational(1);
  run_simplex(tab, phase1, n + m);
  Rational infeasibility;
  for (std::size_t i = 0; i < m; ++i) infeasibility += phase1[tab.basis[i]] * tab.rhs[i];
  LpResult out;
  if (infeasibility.sign() > 0) return out;

  // Drive artificial variables out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < tab.rows;) {
    if (tab.basis[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j) {
      if (!tab.t[i][j].is_zero()) col = j;
    }
    if (col) {
      tab.pivot(i, *col);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.rhs.erase(tab.rhs.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
      --tab.rows;
    }
  }

  std::vector<Rational> cost(n + m);
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  if (!run_simplex(tab, cost, n)) {
    out.status = LpStatus::unbounded;
    return out;
  }
  out.status = LpStatus::optimal;
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.rows; ++i) out.x[tab.basis[i]] = tab.rhs[i];
  for (std::size_t j = 0; j < n; ++j) out.value += c[j] * out.x[j];
  return out;
}

}  // namespace eqc
