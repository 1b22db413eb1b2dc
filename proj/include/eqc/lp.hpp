#pragma once

#include <span>
#include <vector>

#include "eqc/linalg.hpp"
#include "eqc/rational.hpp"

namespace eqc {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Exact two-phase simplex with Bland's rule for
///   minimize c.x  subject to  A x = b,  x >= 0.
LpResult solve_lp(const RationalMatrix& a, std::span<const Rational> b,
                  std::span<const Rational> c);

}  // namespace eqc
