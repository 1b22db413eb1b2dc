#include <doctest.h>

#include <random>

#include "eqc/hilbert.hpp"
#include "eqc/model.hpp"
#include "eqc/scenarios.hpp"
#include "support/oracles.hpp"

using namespace eqc;

namespace {

const char* kExample = R"(# three monomers
monomer a
monomer b
monomer c
polymer A = a a
polymer B = a b
polymer C = c
polymer X = a a a b
polymer Y = b b c c
polymer Z = b b c c c
ontarget A mu=1
ontarget B mu=1
ontarget C mu=1/1
)";

std::vector<std::int64_t> column(const System& s, std::size_t j) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < s.monomer_count(); ++i) out.push_back(s.conservation()(i, j));
  return out;
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("parse the worked example") {
    const Problem p = parse_problem(kExample);
    REQUIRE(p.system.polymer_count() == 6);
    CHECK(column(p.system, 0) == std::vector<std::int64_t>{2, 0, 0});
    CHECK(column(p.system, 1) == std::vector<std::int64_t>{1, 1, 0});
    CHECK(column(p.system, 2) == std::vector<std::int64_t>{0, 0, 1});
    CHECK(column(p.system, 3) == std::vector<std::int64_t>{3, 1, 0});
    CHECK(column(p.system, 4) == std::vector<std::int64_t>{0, 2, 2});
    CHECK(column(p.system, 5) == std::vector<std::int64_t>{0, 2, 3});
    CHECK(p.spec.members() == std::vector<std::size_t>{0, 1, 2});
    CHECK(p.spec.is_uniform());
    CHECK(p.system == gen_example_51().system);
  }

  TEST_CASE("single polymer") {
    const System s = parse_system("monomer a\npolymer A = a a");
    CHECK(s.conservation()(0, 0) == 2);
  }

  TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char* text) {
      try {
        (void)parse_problem(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return std::size_t{0};
    };
    CHECK(line_of("polymer A = q") == 1);
    CHECK(line_of("monomer q\n\npolymer A = q z") == 3);
    CHECK(line_of("monomer a\nmonomer a\npolymer A = a") == 2);
    CHECK(line_of("monomer a\npolymer A = a\npolymer A = a a") == 3);
    CHECK(line_of("monomer a\npolymer A =") == 2);
    CHECK(line_of("monomer a\npolymer A = a\npolymer B = a") == 3);
    CHECK(line_of("monomer a\npolymer A a") == 2);
    CHECK(line_of("monomer a\nmonomer b\npolymer A = a") == 2);
    CHECK(line_of("monomer a\npolymer A = a\nontarget A mu=3/2") == 3);
    CHECK(line_of("monomer a\npolymer A = a\nontarget A mu=0") == 3);
    CHECK(line_of("monomer a\npolymer A = a\nontarget B mu=1") == 3);
    CHECK(line_of("monomer a\npolymer A = a\nfrobnicate") == 3);
  }

  TEST_CASE("multiset operations") {
    using M = Multiset<std::string>;
    const M m{"a", "a", "b", "c"};
    CHECK(m.cardinality() == 4);
    CHECK(m.intersect_set({"a", "c"}) == M{"a", "a", "c"});
    CHECK_FALSE(M{"a", "b"}.sub(M{"a", "a"}).has_value());
    const M other{"b", "d"};
    CHECK(m.add(other) == other.add(m));
    CHECK(m.add(other).sub(other) == m);
    CHECK(m.add(other).cardinality() == m.cardinality() + other.cardinality());
    CHECK(m.add(other).add(M{"e"}) == m.add(other.add(M{"e"})));
  }

  TEST_CASE("system validation") {
    std::vector<MonomerId> mons{{"a"}, {"b"}};
    CHECK_THROWS_AS(System::create(mons, {{"A", Polymer{{"a"}}}}), ModelError);
    CHECK_THROWS_AS(System::create(mons, {{"A", Polymer{{"a"}}}, {"B", Polymer{{"a"}}}, {"C", Polymer{{"b"}}}}),
                    ModelError);
    CHECK_THROWS_AS(System::create({{"a"}}, {{"A", Polymer{}}}), ModelError);
    CHECK_THROWS_AS(System::create({{"a"}}, {{"A", Polymer{{"z"}}}}), ModelError);
    CHECK_THROWS_AS(OnTargetSpec(1, {{0, Rational(2)}}), ModelError);
    CHECK_THROWS_AS(OnTargetSpec(1, {{0, Rational(0)}}), ModelError);
  }

  TEST_CASE("reaction vectors must conserve monomers") {
    const Problem p = gen_example_51();
    CHECK_NOTHROW(ReactionVec(p.system.conservation(), {1, 1, 0, -1, 0, 0}));
    CHECK_THROWS_AS(ReactionVec(p.system.conservation(), {1, 0, 0, -1, 0, 0}), ModelError);
    const ReactionVec beta(p.system.conservation(), {0, 3, 2, -1, -1, 0});
    CHECK(beta.render(p.system) == "3 B + 2 C -> X + Y");
    CHECK(beta.entropy_loss() == 3);
  }

  TEST_CASE("round trip through the text format") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
      const Problem p = testing::random_problem(rng);
      const Problem q = parse_problem(render_problem(p.system, p.spec));
      CHECK(q.system == p.system);
      CHECK(q.spec == p.spec);
    }
    const Problem e = gen_example_51();
    CHECK(parse_system(render_system(e.system)) == e.system);
  }

  TEST_CASE("on-target check") {
    const Problem p = gen_example_51();
    const auto basis = canonical_basis(p.system, p.spec);
    const auto r = check_on_target(p.system, p.spec, basis.vectors);
    CHECK(r.pass());
    CHECK(on_target_kernel(p.system, p.spec).empty());

    const System ad = parse_system("monomer a\npolymer A = a\npolymer D = a a");
    const OnTargetSpec both(2, {{0, Rational(1)}, {1, Rational(1)}});
    const auto bad = check_on_target(ad, both, canonical_basis(ad, both).vectors);
    CHECK(bad.producible);
    CHECK_FALSE(bad.balanced);
    REQUIRE(bad.violating_reaction);
    const auto& w = *bad.violating_reaction;
    CHECK(w[0] * 1 + w[1] * 1 != 0);
    CHECK(w[0] == -2 * w[1]);

    // The within-S balance verdict does not depend on the kernel basis.
    const std::vector<std::vector<BigInt>> other{{BigInt(-4), BigInt(2)}};
    CHECK_FALSE(check_on_target(ad, both, canonical_basis(ad, both).vectors, other).balanced);

    // S = all polymers with mu in the row space of A.
    const OnTargetSpec row(2, {{0, Rational(1, 2)}, {1, Rational(1)}});
    CHECK(check_on_target(ad, row, canonical_basis(ad, row).vectors).pass());
  }

  TEST_CASE("within-S balance is basis independent on random instances") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
      const Problem p = testing::random_problem(rng);
      const auto k = on_target_kernel(p.system, p.spec);
      std::vector<std::vector<BigInt>> mixed = k;
      if (k.size() >= 2) {
        for (std::size_t t = 0; t < k[0].size(); ++t) mixed[0][t] = 2 * k[0][t] + 3 * k[1][t];
      }
      const auto basis = canonical_basis(p.system, p.spec);
      CHECK(check_on_target(p.system, p.spec, basis.vectors).balanced ==
            check_on_target(p.system, p.spec, basis.vectors, mixed).balanced);
    }
  }
}
