#include <doctest.h>

#include "eqc/linalg.hpp"
#include "eqc/lp.hpp"

using namespace eqc;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::initializer_list<std::int64_t> v) {
  IntMatrix m(r, c);
  auto it = v.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = *it++;
  return m;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rank") {
    CHECK(rank(mat(2, 3, {1, 2, 3, 2, 4, 6})) == 1);
    CHECK(rank(mat(3, 3, {2, 1, 0, 0, 1, 0, 0, 0, 1})) == 3);
    CHECK(rank(IntMatrix(2, 2)) == 0);
  }

  TEST_CASE("integer kernel basis is primitive and annihilated") {
    // Conservation matrix of the worked example.
    const IntMatrix a = mat(3, 6, {2, 1, 0, 3, 0, 0, 0, 1, 0, 1, 2, 2, 0, 0, 1, 0, 2, 3});
    const auto k = integer_kernel_basis(a);
    CHECK(k.size() == 3);
    for (const auto& v : k) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        BigInt s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
        CHECK(s == 0);
      }
      BigInt g = 0;
      for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), BigInt(abs(x)).get_mpz_t());
      CHECK(g == 1);
    }
  }

  TEST_CASE("solve_exact") {
    const auto a = to_rational(mat(2, 2, {2, 0, 1, 1}));
    const std::vector<Rational> b{Rational(1), Rational(1)};
    const auto x = solve_exact(a, b);
    REQUIRE(x);
    CHECK((*x)[0] == Rational(1, 2));
    CHECK((*x)[1] == Rational(1, 2));
    const auto inconsistent = to_rational(mat(2, 1, {1, 1}));
    const std::vector<Rational> c{Rational(1), Rational(2)};
    CHECK_FALSE(solve_exact(inconsistent, c));
  }
}

TEST_SUITE("lp") {
  TEST_CASE("small optimum") {
    // min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6  -> x = 8/5, y = 6/5.
    const auto a = to_rational(mat(2, 4, {1, 2, 1, 0, 3, 1, 0, 1}));
    const std::vector<Rational> b{Rational(4), Rational(6)};
    const std::vector<Rational> c{Rational(-1), Rational(-1), Rational(0), Rational(0)};
    const auto r = solve_lp(a, b, c);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == Rational(-14, 5));
    CHECK(r.x[0] == Rational(8, 5));
    CHECK(r.x[1] == Rational(6, 5));
  }

  TEST_CASE("infeasible and unbounded") {
    const auto a = to_rational(mat(1, 2, {1, 1}));
    const std::vector<Rational> neg{Rational(-1)};
    const std::vector<Rational> c{Rational(1), Rational(1)};
    CHECK(solve_lp(a, neg, c).status == LpStatus::infeasible);
    const auto d = to_rational(mat(1, 2, {1, -1}));
    const std::vector<Rational> zero{Rational(0)};
    const std::vector<Rational> down{Rational(-1), Rational(0)};
    CHECK(solve_lp(d, zero, down).status == LpStatus::unbounded);
  }

  TEST_CASE("degenerate and redundant rows") {
    // Duplicate equality rows; degenerate vertex at the origin.
    const auto a = to_rational(mat(3, 3, {1, 1, 1, 1, 1, 1, 1, -1, 0}));
    const std::vector<Rational> b{Rational(1), Rational(1), Rational(0)};
    const std::vector<Rational> c{Rational(1), Rational(2), Rational(3)};
    const auto r = solve_lp(a, b, c);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == Rational(3, 2));
  }
}
