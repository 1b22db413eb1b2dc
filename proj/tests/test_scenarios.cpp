#include <doctest.h>

#include <cmath>

#include "eqc/bounds.hpp"
#include "eqc/scenarios.hpp"

using namespace eqc;

TEST_SUITE("scenarios") {
  TEST_CASE("worked example generator") {
    const Problem p = gen_example_51();
    const auto basis = canonical_basis(p.system, p.spec);
    CHECK(check_on_target(p.system, p.spec, basis.vectors).pass());
    CHECK(*check_stable(p.spec, basis).min_ratio == Rational(2));
    CHECK(check_tbn_closed(p.spec, basis).closed);
  }

  TEST_CASE("AND gate without inputs") {
    const Problem p = gen_and_gate(AndGateInputs::none);
    const auto& s = p.system;
    const ReactionVec alpha(s.conservation(), {1, 1, 1, -1, -1});
    CHECK(alpha.entropy_loss() == 1);
    const auto basis = canonical_basis(s, p.spec);
    CHECK(check_on_target(s, p.spec, basis.vectors).pass());
    const auto t = tbn_bound(p.spec, basis);
    CHECK(t.closed);
    CHECK(*t.mu1 == Rational(3, 2));
    const auto a = levelize(s, p.spec, basis);
    CHECK(*a.mu_bar(s.polymer_index("C")) == Rational(3, 2));
    CHECK(*a.mu_bar(s.polymer_index("G1")) == Rational(3, 2));
  }

  TEST_CASE("AND gate with input B") {
    const Problem p = gen_and_gate(AndGateInputs::b_only);
    const auto basis = canonical_basis(p.system, p.spec);
    CHECK(check_on_target(p.system, p.spec, basis.vectors).pass());
    const auto t = tbn_bound(p.spec, basis);
    CHECK(t.closed);
    CHECK(*t.mu1 == Rational(4, 3));
    REQUIRE(t.witness);
    CHECK(t.witness->render(p.system) == "B + X + Y + Z -> C + G2 + G3");
  }

  TEST_CASE("translator uniform bound") {
    Rational previous(0);
    for (int N = 2; N <= 12; ++N) {
      const auto sc = gen_translator({N, 2}, TranslatorMode::uniform);
      CHECK(sc.params.n() == 2 * (N + 1));
      const Problem p = sc.exact_problem();
      const auto basis = canonical_basis(p.system, p.spec);
      CHECK(check_on_target(p.system, p.spec, basis.vectors).pass());
      const auto t = tbn_bound(p.spec, basis);
      CHECK(t.closed);
      CHECK(*t.mu1 == Rational(N - 1, N + 3) + Rational(1));
      CHECK(previous < *t.mu1);
      CHECK(*t.mu1 < Rational(2));
      previous = *t.mu1;
    }
  }

  TEST_CASE("translator intended reaction balances") {
    const auto sc = gen_translator({3, 2}, TranslatorMode::with_input);
    const auto& s = sc.system;
    std::vector<std::int64_t> v(s.polymer_count(), 0);
    v[s.polymer_index("X0")] = 1;
    v[s.polymer_index("F1")] = 1;
    v[s.polymer_index("X1")] = -1;
    v[s.polymer_index("W1")] = -1;
    CHECK_NOTHROW(ReactionVec(s.conservation(), v));
    CHECK_THROWS_AS((void)sc.exact_problem(), std::invalid_argument);
    CHECK(sc.on_target.size() == s.polymer_count() - 1);
  }

  TEST_CASE("translator parameters") {
    CHECK_THROWS_AS(gen_translator({1, 2}, TranslatorMode::uniform), std::invalid_argument);
    CHECK_THROWS_AS(gen_translator({3, 0}, TranslatorMode::uniform), std::invalid_argument);
  }

  TEST_CASE("leak bound") {
    const TranslatorParams n3{3, 2};
    const double c = 0.0064;
    const auto r = translator_leak_bound(n3, c, c / 4);
    CHECK(r.k_beta_lower / r.n == doctest::Approx(0.25).epsilon(0.04));
    CHECK(std::fabs(r.k_beta_lower / r.n - 0.25) <= 0.01);
    CHECK(r.leak_exponent == doctest::Approx(r.k_beta_lower / 2));
    CHECK(r.n / 8.0 == doctest::Approx((3 + 1) / 4.0));

    const double y = 1e-9 * c;
    const auto lim = translator_leak_bound(n3, c, y);
    const double logc2 = std::log(2.0) / std::log(c);
    CHECK(lim.k_beta_lower == doctest::Approx(r.n * (1 + logc2) - r.n / 2.0).epsilon(1e-6));

    double last = -1e9;
    for (int N = 2; N <= 10; ++N) {
      const auto b = translator_leak_bound({N, 2}, c, c / 4);
      CHECK(b.leak_exponent > last);
      last = b.leak_exponent;
    }
    CHECK_THROWS_AS(translator_leak_bound(n3, c, c), std::domain_error);
    CHECK_THROWS_AS(translator_leak_bound(n3, 1.5, 0.1), std::domain_error);
  }

  TEST_CASE("domain admissibility") {
    CHECK(domain_admissible(parse_domain_polymer("d1 d2 | d1* d2*")));
    CHECK_FALSE(domain_admissible(parse_domain_polymer("d1*")));
    for (int N = 2; N <= 6; ++N) CHECK(domain_admissible(translator_fuel_domains(N, 1)));
  }
}
