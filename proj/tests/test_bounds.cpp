#include <doctest.h>

#include <random>

#include "eqc/bounds.hpp"
#include "eqc/scenarios.hpp"
#include "support/oracles.hpp"

using namespace eqc;

TEST_SUITE("bounds") {
  TEST_CASE("per-polymer bounds in the worked example") {
    const Problem p = gen_example_51();
    const auto basis = canonical_basis(p.system, p.spec);
    const auto partial = LevelAssignment::initial(p.spec);

    const auto z = per_polymer_bound(p.system, p.spec, 5, partial, basis, BoundMethod::basis_estimate);
    CHECK(z.value == Rational(3));
    CHECK_FALSE(z.certified_lower_bound_on_mu_bar);
    CHECK(z.level_context == 1);

    const auto x = per_polymer_bound(p.system, p.spec, 3, partial, basis, BoundMethod::enum_exact);
    CHECK(x.value == Rational(2));
    CHECK(x.certified_lower_bound_on_mu_bar);
    CHECK(x.witness->net() == std::vector<std::int64_t>{1, 1, 0, -1, 0, 0});

    for (std::size_t j : {3u, 4u, 5u}) {
      const auto lp = per_polymer_bound(p.system, p.spec, j, partial, basis, BoundMethod::lp_certified);
      const auto en = per_polymer_bound(p.system, p.spec, j, partial, basis, BoundMethod::enum_exact);
      CHECK(lp.certified_lower_bound_on_mu_bar);
      CHECK(lp.value <= en.value);
      CHECK(lp.value >= Rational(2));
      REQUIRE(lp.witness);
      CHECK(lp.witness->net()[j] < 0);
    }
    CHECK_THROWS_AS(per_polymer_bound(p.system, p.spec, 0, partial, basis, BoundMethod::lp_certified),
                    std::invalid_argument);
  }

  TEST_CASE("unproducible polymer has no bound") {
    const System s = parse_system("monomer a\nmonomer b\npolymer A = a\npolymer B = b");
    const OnTargetSpec spec = OnTargetSpec::uniform(2, std::vector<std::size_t>{0});
    const auto basis = canonical_basis(s, spec);
    CHECK_THROWS_AS(per_polymer_bound(s, spec, 1, LevelAssignment::initial(spec), basis,
                                      BoundMethod::basis_estimate),
                    NotProducibleError);
  }

  TEST_CASE("method names") {
    CHECK(parse_bound_method("lp") == BoundMethod::lp_certified);
    CHECK(parse_bound_method("enum") == BoundMethod::enum_exact);
    CHECK(parse_bound_method("basis") == BoundMethod::basis_estimate);
    CHECK(to_string(BoundMethod::enum_exact) == "enum_exact");
    CHECK_THROWS_AS(parse_bound_method("simplex"), std::invalid_argument);
  }

  TEST_CASE("shortcut assignment") {
    const Problem p = gen_example_51();
    const IntMatrix& a = p.system.conservation();
    LevelAssignment partial = LevelAssignment::initial(p.spec);
    const ReactionVec alpha(a, {1, 1, 0, -1, 0, 0});
    const Rational x = shortcut_assign(3, alpha, partial);
    CHECK(x == Rational(2));
    partial.assign(3, x);
    const Rational y = shortcut_assign(4, ReactionVec(a, {0, 3, 2, -1, -1, 0}), partial);
    CHECK(y == Rational(3));
    partial.assign(4, y);
    CHECK(shortcut_assign(5, ReactionVec(a, {0, 3, 3, -1, 0, -1}), partial) == Rational(4));

    const LevelAssignment fresh = LevelAssignment::initial(p.spec);
    CHECK_THROWS_AS(shortcut_assign(4, ReactionVec(a, {0, 3, 2, -1, -1, 0}), fresh), std::invalid_argument);

    // Agrees with the levelizer.
    const auto full = levelize(p.system, p.spec, canonical_basis(p.system, p.spec));
    CHECK(*full.mu_bar(3) == Rational(2));
    CHECK(*full.mu_bar(4) == Rational(3));
    CHECK(*full.mu_bar(5) == Rational(4));
  }

  TEST_CASE("TBN closure") {
    const Problem p = gen_example_51();
    const auto basis = canonical_basis(p.system, p.spec);
    const auto r = check_tbn_closed(p.spec, basis);
    CHECK(r.closed);
    CHECK(*r.min_entropy_loss == 1);
    for (const auto& h : basis) CHECK(h.entropy_loss() >= 1);

    // All polymers on target; 2A -> D loses one polymer.
    const System ad = parse_system("monomer a\npolymer A = a\npolymer D = a a");
    const OnTargetSpec both(2, {{0, Rational(1, 2)}, {1, Rational(1)}});
    const auto r2 = check_tbn_closed(both, canonical_basis(ad, both));
    CHECK_FALSE(r2.closed);
    REQUIRE(r2.witness);
    CHECK(r2.witness->entropy_loss() == -1);

    // A + B -> P + Q with no entropy loss.
    const System one = parse_system(
        "monomer a\nmonomer b\nmonomer c\nmonomer d\npolymer A = a b\npolymer B = c d\n"
        "polymer P = a c\npolymer Q = b d");
    const OnTargetSpec s4 = OnTargetSpec::uniform(4, std::vector<std::size_t>{0, 1});
    const auto r3 = check_tbn_closed(s4, canonical_basis(one, s4));
    CHECK_FALSE(r3.closed);
    CHECK(r3.witness->entropy_loss() == 0);
  }

  TEST_CASE("TBN bound agrees with the levelizer on uniform closed instances") {
    const Problem p = gen_example_51();
    const auto basis = canonical_basis(p.system, p.spec);
    CHECK(*tbn_bound(p.spec, basis).mu1 == Rational(2));

    std::mt19937_64 rng(41);
    int closed = 0;
    for (int i = 0; i < 80; ++i) {
      const Problem q = testing::random_problem(rng);
      const auto b = canonical_basis(q.system, q.spec);
      const auto t = tbn_bound(q.spec, b);
      if (!t.closed) continue;
      ++closed;
      const auto a = levelize(q.system, q.spec, b);
      CHECK(*t.mu1 == a.levels().front().mu);
      CHECK(*t.worst_ratio + Rational(1) == *t.mu1);
    }
    CHECK(closed > 0);
  }

  TEST_CASE("sandwich and LP dominance on random instances") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 40; ++i) {
      const Problem q = testing::random_problem(rng);
      const auto b = canonical_basis(q.system, q.spec);
      const auto full = levelize(q.system, q.spec, b);
      for (std::size_t level = 1; level <= full.levels().size(); ++level) {
        const auto partial = full.truncated(level - 1);
        const Rational mu_i = full.levels()[level - 1].mu;
        for (std::size_t j = 0; j < q.system.polymer_count(); ++j) {
          if (partial.is_assigned(j)) continue;
          const auto lp = per_polymer_bound(q.system, q.spec, j, partial, b, BoundMethod::lp_certified);
          const auto en = per_polymer_bound(q.system, q.spec, j, partial, b, BoundMethod::enum_exact);
          CHECK(lp.value <= en.value);
          CHECK(mu_i <= lp.value);
          CHECK(lp.value <= *full.mu_bar(j));
          CHECK(en.value <= *full.mu_bar(j));
        }
      }
    }
  }
}
