#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eqc/highfloat.hpp"
#include "eqc/hilbert.hpp"
#include "eqc/model.hpp"
#include "eqc/rational.hpp"

namespace eqc {

/// Some off-target polymer has no producing generator, so the levelizing
/// iteration cannot assign it.
class NotProducibleError : public std::runtime_error {
 public:
  NotProducibleError(std::size_t polymer, const std::string& message)
      : std::runtime_error(message), polymer_(polymer) {}
  [[nodiscard]] std::size_t polymer() const { return polymer_; }

 private:
  std::size_t polymer_;
};

struct Level {
  std::size_t index = 0;  // 1-based
  Rational mu;
  std::vector<std::size_t> members;
  std::vector<ReactionVec> levelizing;
};

/// Level sets S_1, S_2, ... on top of S_0 = S, and the extended exponent map.
/// A partial assignment covers S and the first few levels only.
class LevelAssignment {
 public:
  LevelAssignment() = default;
  static LevelAssignment initial(const OnTargetSpec& spec);

  [[nodiscard]] const std::vector<Level>& levels() const { return levels_; }
  [[nodiscard]] std::size_t polymer_count() const { return mu_bar_.size(); }
  [[nodiscard]] bool is_assigned(std::size_t j) const { return mu_bar_[j].has_value(); }
  [[nodiscard]] const std::optional<Rational>& mu_bar(std::size_t j) const { return mu_bar_[j]; }
  /// 0 for S, i for S_i; nullopt when unassigned.
  [[nodiscard]] std::optional<std::size_t> level_of(std::size_t j) const { return level_of_[j]; }
  [[nodiscard]] bool complete() const;
  /// Exponents as a dense vector; throws std::logic_error if incomplete.
  [[nodiscard]] std::vector<Rational> extended_mu() const;

  /// S together with the first `level_count` levels.
  [[nodiscard]] LevelAssignment truncated(std::size_t level_count) const;

  /// Appends the next level and assigns mu to its members.
  void push_level(Level level);
  /// Assigns a single polymer outside the level structure (shortcut use).
  void assign(std::size_t j, const Rational& mu);

 private:
  std::vector<std::optional<Rational>> mu_bar_;
  std::vector<std::optional<std::size_t>> level_of_;
  std::vector<Level> levels_;
};

struct ImbalanceNovelty {
  Rational k;
  std::int64_t l = 0;
};

/// k = exponent sum of reactants minus that of already-assigned products;
/// l = number of unassigned product copies. Reactants must be assigned.
ImbalanceNovelty imbalance_novelty(const ReactionVec& alpha, const LevelAssignment& partial);

/// Algorithm 1 over the finite generating set. Throws NotProducibleError.
LevelAssignment levelize(const System& system, const OnTargetSpec& spec,
                         const GeneratingSet& basis);

struct StabilityReport {
  bool stable = true;
  std::optional<Rational> min_ratio;
  std::optional<ReactionVec> witness;
};

StabilityReport check_stable(const OnTargetSpec& spec, const GeneratingSet& basis);

struct Concentrations {
  std::vector<HighFloat> polymer;
  std::vector<HighFloat> monomer;
};

/// c^mu_bar(P) per polymer and A * x per monomer, evaluated with `digits`
/// significant decimal digits. Requires 0 < c < 1 and a complete assignment.
Concentrations concentrations(const System& system, const LevelAssignment& assignment,
                              const Rational& c, unsigned digits = 50);

}  // namespace eqc
