#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eqc/model.hpp"

namespace eqc {

Problem gen_example_51();

enum class AndGateInputs { none, b_only };

/// AND gate with constructed monomer composition; uniform S.
Problem gen_and_gate(AndGateInputs inputs);

struct TranslatorParams {
  int N = 3;       // bound domains per fuel, >= 2
  int layers = 2;  // composed translators, >= 1
  [[nodiscard]] int n() const { return layers * (N + 1); }
};

enum class TranslatorMode { uniform, with_input };

struct TranslatorScenario {
  TranslatorParams params;
  TranslatorMode mode = TranslatorMode::uniform;
  System system;
  std::vector<std::size_t> on_target;
  /// Exact spec; only in uniform mode. With input the fuel exponents are
  /// 1 + log_c 2, which is not rational.
  std::optional<OnTargetSpec> spec;

  /// The uniform problem; throws std::invalid_argument in with-input mode.
  [[nodiscard]] Problem exact_problem() const;
};

/// Signal strands s_i and bottom strands b_i as monomers; X_i = {s_i},
/// F_i = {s_i, b_i}, W_i = {s_{i-1}, b_i}, and the leak polymer
/// G = {s_1..s_N, b_1..b_{N+1}} of the first translator.
///
/// uniform: S = {F_1..F_n}, mu = 1. Polymers that cannot form without an
/// input (X_i for i <= N, W_i for i <= N+1, s_0) are left out.
/// with_input: every X_i, F_i, W_i and G; S is everything except G.
TranslatorScenario gen_translator(const TranslatorParams& params, TranslatorMode mode);

struct LeakBound {
  int n = 0;
  double k_beta_lower = 0;
  double ratio = 0;
  double leak_exponent = 0;
  bool quarter_regime = false;  // k_beta_lower >= n/4
};

/// k = n log_c(2c + 2y) - (n/2) log_c(c - 2y), ratio = k / 2.
/// Requires 0 < c < 1 and 0 < y <= c/4.
LeakBound translator_leak_bound(const TranslatorParams& params, double c, double y);

struct DomainToken {
  std::string name;
  bool star = false;
};

using Strand = std::vector<DomainToken>;

struct DomainPolymer {
  std::vector<Strand> strands;
};

/// Strands separated by '|', domains by whitespace, '*' suffix for complements.
DomainPolymer parse_domain_polymer(const std::string& text);

/// True iff for every domain name the starred count does not exceed the
/// unstarred count.
bool domain_admissible(const DomainPolymer& p);

/// Fuel F_i at domain level: top strand with N domains, bottom strand with
/// their complements.
DomainPolymer translator_fuel_domains(int N, int i);

}  // namespace eqc
