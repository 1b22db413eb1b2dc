#include <doctest.h>

#include <algorithm>
#include <random>

#include "eqc/hilbert.hpp"
#include "eqc/levelize.hpp"
#include "eqc/scenarios.hpp"
#include "support/oracles.hpp"

using namespace eqc;

namespace {

bool contains(const GeneratingSet& basis, const std::vector<std::int64_t>& v) {
  return std::any_of(basis.begin(), basis.end(), [&](const ReactionVec& h) { return h.net() == v; });
}

}  // namespace

TEST_SUITE("hilbert") {
  TEST_CASE("cone of the worked example") {
    const Problem p = gen_example_51();
    const ConeSpec cone = build_cone(p.system, p.spec);
    CHECK(cone.equalities.rows() == 3);
    CHECK(cone.dimension() == 6);
    CHECK(cone.sign_constrained == std::vector<bool>{false, false, false, true, true, true});
  }

  TEST_CASE("single equality cone") {
    const System s = parse_system("monomer a\npolymer A = a\npolymer D = a a");
    const OnTargetSpec spec = OnTargetSpec::uniform(2, std::vector<std::size_t>{0});
    const auto basis = canonical_basis(s, spec);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].net() == std::vector<std::int64_t>{2, -1});
  }

  TEST_CASE("full kernel lattice when every polymer is on target") {
    const System s = parse_system("monomer a\npolymer A = a\npolymer D = a a");
    const OnTargetSpec spec(2, {{0, Rational(1, 2)}, {1, Rational(1)}});
    CHECK(build_cone(s, spec).sign_constrained == std::vector<bool>{false, false});
    const auto basis = canonical_basis(s, spec);
    CHECK(contains(basis, {2, -1}));
    CHECK(contains(basis, {-2, 1}));
  }

  TEST_CASE("trivial kernel gives an empty set") {
    const System s = parse_system("monomer a\nmonomer b\npolymer A = a\npolymer B = b");
    const OnTargetSpec spec = OnTargetSpec::uniform(2, std::vector<std::size_t>{0});
    CHECK(canonical_basis(s, spec).empty());
  }

  TEST_CASE("worked example generators") {
    const Problem p = gen_example_51();
    const auto basis = canonical_basis(p.system, p.spec);
    CHECK(contains(basis, {1, 1, 0, -1, 0, 0}));
    CHECK(contains(basis, {0, 3, 2, -1, -1, 0}));
    CHECK(contains(basis, {0, 3, 3, -1, 0, -1}));
    for (const auto& h : basis) CHECK(build_cone(p.system, p.spec).contains(h.net()));
    CHECK(producing_vectors(basis, 3).size() == 3);
    CHECK(producing_vectors(GeneratingSet{}, 3).empty());
    CHECK(std::is_sorted(basis.begin(), basis.end()));
    const std::string dump = dump_basis(p.system, basis);
    CHECK(dump.find("A + B -> X  [1 1 0 -1 0 0]") != std::string::npos);
  }

  TEST_CASE("deterministic output and scalar/AVX2 agreement") {
    std::mt19937_64 rng(3);
    HilbertBudget completion;
    completion.strategy = HilbertStrategy::completion;
    for (int i = 0; i < 30; ++i) {
      const Problem p = testing::random_problem(rng, {4, 5, 2});
      const auto a = canonical_basis(p.system, p.spec, completion);
      const auto b = canonical_basis(p.system, p.spec, completion);
      CHECK(a.vectors == b.vectors);
      setenv("EQC_SIMD", "scalar", 1);
      const auto c = canonical_basis(p.system, p.spec, completion);
      unsetenv("EQC_SIMD");
      CHECK(a.vectors == c.vectors);
    }
  }

  TEST_CASE("completion and enumeration agree") {
    std::mt19937_64 rng(11);
    HilbertBudget completion;
    completion.strategy = HilbertStrategy::completion;
    completion.max_vectors = 20'000;
    HilbertBudget enumeration;
    enumeration.strategy = HilbertStrategy::enumeration;
    int compared = 0;
    for (int i = 0; i < 60; ++i) {
      const Problem p = testing::random_problem(rng);
      const auto e = canonical_basis(p.system, p.spec, enumeration);
      CHECK(e.vectors == canonical_basis(p.system, p.spec).vectors);
      try {
        CHECK(canonical_basis(p.system, p.spec, completion).vectors == e.vectors);
        ++compared;
      } catch (const ResourceLimitError&) {
      }
    }
    CHECK(compared >= 50);
    const Problem ex = gen_example_51();
    CHECK(canonical_basis(ex.system, ex.spec, completion).vectors ==
          canonical_basis(ex.system, ex.spec, enumeration).vectors);
  }

  TEST_CASE("circuits of the worked example cone") {
    const Problem p = gen_example_51();
    const ConeSpec cone = build_cone(p.system, p.spec);
    const auto circuits = cone_circuits(cone);
    CHECK_FALSE(circuits.empty());
    for (const auto& c : circuits) CHECK(cone.contains(c.net()));
    // A + B -> X is a circuit; every circuit is itself a generator.
    const auto basis = canonical_basis(p.system, p.spec);
    for (const auto& c : circuits) CHECK(contains(basis, c.net()));
    CHECK(std::any_of(circuits.begin(), circuits.end(),
                      [](const ReactionVec& c) { return c.net() == std::vector<std::int64_t>{1, 1, 0, -1, 0, 0}; }));
  }

  TEST_CASE("budget exhaustion is reported") {
    const auto t = gen_translator({4, 2}, TranslatorMode::uniform).exact_problem();
    HilbertBudget tiny;
    tiny.max_vectors = 3;
    CHECK_THROWS_AS(canonical_basis(t.system, t.spec, tiny), ResourceLimitError);
    HilbertBudget shallow;
    shallow.max_norm = 2;
    CHECK_THROWS_AS(canonical_basis(t.system, t.spec, shallow), ResourceLimitError);
  }

  TEST_CASE("completeness against brute-force cone points") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
      const Problem p = testing::random_problem(rng);
      const auto basis = canonical_basis(p.system, p.spec);
      for (const auto& v : testing::cone_points(p.system, p.spec, 6)) {
        CHECK(testing::conformal_combination(v, basis.vectors));
      }
    }
  }

  TEST_CASE("mediant inequality on random cone points") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coef(0, 6);
    int draws = 0;
    for (int i = 0; i < 40 && draws < 300; ++i) {
      const Problem p = testing::random_problem(rng);
      const auto basis = canonical_basis(p.system, p.spec);
      const auto initial = LevelAssignment::initial(p.spec);
      std::vector<ReactionVec> novel;
      for (const auto& h : basis) {
        if (imbalance_novelty(h, initial).l != 0) novel.push_back(h);
      }
      if (novel.size() < 2) continue;
      std::uniform_int_distribution<std::size_t> pick(0, novel.size() - 1);
      for (int d = 0; d < 20; ++d, ++draws) {
        const auto& x = novel[pick(rng)];
        const auto& y = novel[pick(rng)];
        const int a = coef(rng);
        const int b = coef(rng);
        if (a == 0 && b == 0) continue;
        std::vector<std::int64_t> sum(x.size());
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] = a * x[j] + b * y[j];
        const ReactionVec z(p.system.conservation(), sum);
        const auto kx = imbalance_novelty(x, initial);
        const auto ky = imbalance_novelty(y, initial);
        const auto kz = imbalance_novelty(z, initial);
        const Rational rx = kx.k / Rational(kx.l);
        const Rational ry = ky.k / Rational(ky.l);
        const Rational rz = kz.k / Rational(kz.l);
        CHECK(rz >= std::min(rx, ry));
        if (a > 0 && b > 0 && rx != ry) CHECK(rz > std::min(rx, ry));
      }
    }
    CHECK(draws >= 100);
  }
}
