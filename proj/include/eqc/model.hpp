#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eqc/linalg.hpp"
#include "eqc/rational.hpp"

namespace eqc {

/// Error raised when a System or OnTargetSpec would violate its invariants.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed system file. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Name token: nonempty, no whitespace, no '#', no '='.
bool is_valid_name(std::string_view name);

struct MonomerId {
  std::string name;
  friend auto operator<=>(const MonomerId&, const MonomerId&) = default;
};

/// Finite multiset over Key, stored as a count map with no zero entries.
template <typename Key>
class Multiset {
 public:
  Multiset() = default;
  Multiset(std::initializer_list<Key> items) {
    for (const auto& k : items) insert(k);
  }

  void insert(const Key& k, std::int64_t times = 1) {
    if (times < 0) throw std::invalid_argument("negative multiplicity");
    if (times > 0) counts_[k] += times;
  }

  [[nodiscard]] std::int64_t count(const Key& k) const {
    const auto it = counts_.find(k);
    return it == counts_.end() ? 0 : it->second;
  }
  [[nodiscard]] std::int64_t cardinality() const {
    std::int64_t n = 0;
    for (const auto& [k, c] : counts_) n += c;
    return n;
  }
  [[nodiscard]] bool empty() const { return counts_.empty(); }
  [[nodiscard]] const std::map<Key, std::int64_t>& counts() const { return counts_; }

  [[nodiscard]] Multiset add(const Multiset& other) const {
    Multiset out = *this;
    for (const auto& [k, c] : other.counts_) out.counts_[k] += c;
    return out;
  }

  /// Pointwise difference; nullopt when some count would go negative.
  [[nodiscard]] std::optional<Multiset> sub(const Multiset& other) const {
    Multiset out = *this;
    for (const auto& [k, c] : other.counts_) {
      const auto it = out.counts_.find(k);
      if (it == out.counts_.end() || it->second < c) return std::nullopt;
      it->second -= c;
      if (it->second == 0) out.counts_.erase(it);
    }
    return out;
  }

  /// Keeps the counts of elements in `keep`, zeroes all others.
  [[nodiscard]] Multiset intersect_set(const std::set<Key>& keep) const {
    Multiset out;
    for (const auto& [k, c] : counts_) {
      if (keep.contains(k)) out.counts_[k] = c;
    }
    return out;
  }

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset& a, const Multiset& b) { return a.counts_ <=> b.counts_; }

 private:
  std::map<Key, std::int64_t> counts_;
};

/// A polymer is its monomer multiset; names are display-only.
using Polymer = Multiset<MonomerId>;

struct NamedPolymer {
  std::string name;
  Polymer content;
};

/// Monomers, the polymer set, and the conservation matrix A
/// (A[i][j] = count of monomer i in polymer j).
class System {
 public:
  System() = default;

  /// Validates: names well-formed and unique, no empty or duplicate polymers,
  /// every polymer monomer declared, every monomer used. Throws ModelError.
  static System create(std::vector<MonomerId> monomers, std::vector<NamedPolymer> polymers);

  [[nodiscard]] std::size_t monomer_count() const { return monomers_.size(); }
  [[nodiscard]] std::size_t polymer_count() const { return polymers_.size(); }
  [[nodiscard]] const std::vector<MonomerId>& monomers() const { return monomers_; }
  [[nodiscard]] const std::vector<NamedPolymer>& polymers() const { return polymers_; }
  [[nodiscard]] const Polymer& polymer(std::size_t j) const { return polymers_[j].content; }
  [[nodiscard]] const std::string& polymer_name(std::size_t j) const { return polymers_[j].name; }
  [[nodiscard]] const IntMatrix& conservation() const { return conservation_; }

  [[nodiscard]] std::optional<std::size_t> find_polymer(std::string_view name) const;
  [[nodiscard]] std::optional<std::size_t> find_polymer(const Polymer& content) const;
  [[nodiscard]] std::size_t polymer_index(std::string_view name) const;  // throws ModelError
  [[nodiscard]] std::optional<std::size_t> find_monomer(std::string_view name) const;

  /// Equality ignores polymer display names.
  friend bool operator==(const System& a, const System& b);

 private:
  std::vector<MonomerId> monomers_;
  std::vector<NamedPolymer> polymers_;
  IntMatrix conservation_;
};

/// On-target set S with concentration exponents mu in (0,1].
class OnTargetSpec {
 public:
  OnTargetSpec() = default;
  /// Throws ModelError if an index is out of range or an exponent is outside (0,1].
  OnTargetSpec(std::size_t polymer_count, std::map<std::size_t, Rational> mu);

  static OnTargetSpec uniform(std::size_t polymer_count, std::span<const std::size_t> members);

  [[nodiscard]] bool contains(std::size_t j) const { return mu_.contains(j); }
  [[nodiscard]] const Rational& mu(std::size_t j) const;
  [[nodiscard]] const std::map<std::size_t, Rational>& exponents() const { return mu_; }
  [[nodiscard]] std::vector<std::size_t> members() const;
  [[nodiscard]] std::vector<std::size_t> off_target() const;
  [[nodiscard]] std::size_t polymer_count() const { return polymer_count_; }
  [[nodiscard]] bool is_uniform() const;

  friend bool operator==(const OnTargetSpec&, const OnTargetSpec&) = default;

 private:
  std::size_t polymer_count_ = 0;
  std::map<std::size_t, Rational> mu_;
};

/// Net reaction vector over the system's polymer order: positive entries are
/// reactants, negative entries products. Construction checks A * net = 0.
class ReactionVec {
 public:
  ReactionVec() = default;
  ReactionVec(const IntMatrix& conservation, std::vector<std::int64_t> net);

  [[nodiscard]] const std::vector<std::int64_t>& net() const { return net_; }
  [[nodiscard]] std::int64_t operator[](std::size_t j) const { return net_[j]; }
  [[nodiscard]] std::size_t size() const { return net_.size(); }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::int64_t reactant_count() const;  // sum of positive parts
  [[nodiscard]] std::int64_t product_count() const;   // sum of negative parts
  [[nodiscard]] std::int64_t entropy_loss() const;    // reactants minus products

  /// "3 B + 2 C -> X + Y" using the system's polymer names.
  [[nodiscard]] std::string render(const System& system) const;

  friend bool operator==(const ReactionVec&, const ReactionVec&) = default;
  friend auto operator<=>(const ReactionVec& a, const ReactionVec& b) { return a.net_ <=> b.net_; }

 private:
  std::vector<std::int64_t> net_;
};

/// A parsed system file: the system plus its on-target declarations.
struct Problem {
  System system;
  OnTargetSpec spec;
};

Problem parse_problem(std::string_view text);
System parse_system(std::string_view text);
std::string render_problem(const System& system, const OnTargetSpec& spec);
std::string render_system(const System& system);

struct ValidationReport {
  bool producible = true;  // every off-target polymer is produced by some basis vector
  std::vector<std::size_t> unproducible;
  bool balanced = true;  // mu is orthogonal to every within-S reaction
  std::optional<std::vector<std::int64_t>> violating_reaction;  // full-length kernel witness
  [[nodiscard]] bool pass() const { return producible && balanced; }
};

/// Checks both on-target conditions. `basis` is the canonical-reaction
/// generating set for (system, spec). `kernel_override`, when given, replaces
/// the internally computed kernel basis of the S-columns (used to test basis
/// independence).
ValidationReport check_on_target(
    const System& system, const OnTargetSpec& spec, std::span<const ReactionVec> basis,
    const std::optional<std::vector<std::vector<BigInt>>>& kernel_override = std::nullopt);

/// Integer kernel basis of A restricted to the S columns (length |S| vectors).
std::vector<std::vector<BigInt>> on_target_kernel(const System& system, const OnTargetSpec& spec);

}  // namespace eqc
