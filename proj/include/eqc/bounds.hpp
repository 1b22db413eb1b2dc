#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "eqc/hilbert.hpp"
#include "eqc/levelize.hpp"
#include "eqc/model.hpp"
#include "eqc/rational.hpp"

namespace eqc {

enum class BoundMethod { basis_estimate, lp_certified, enum_exact };

std::string to_string(BoundMethod method);
/// Accepts "basis", "lp", "enum" and the full method names.
BoundMethod parse_bound_method(const std::string& text);

struct BoundReport {
  std::size_t polymer = 0;
  std::size_t level_context = 1;  // i: the partial assignment covers S_0 .. S_{i-1}
  BoundMethod method = BoundMethod::basis_estimate;
  Rational value;
  bool certified_lower_bound_on_mu_bar = false;
  std::optional<ReactionVec> witness;
};

struct BoundOptions {
  std::size_t enum_max_size = 4;  // K: total coefficient of basis combinations
};

/// Lower-bound style estimate of the exponent of polymer `p` given the
/// partial assignment. `p` must be unassigned in `partial`.
///
/// basis_estimate: min k/l over producing generators (uncertified).
/// lp_certified: exact LP min of k(v) over the real cone with l(v) = 1 and
///   v[p] <= -eps, eps = 1 / max(1000, max(4, K) * L), L the largest
///   generator novelty. The scaled producing generator that levelizes `p`
///   is feasible, so the value never exceeds mu_bar(p).
/// enum_exact: min k/l over nonnegative integer combinations of at most K
///   generators that produce `p`. The levelizing generator of `p` is among
///   them, so the value never exceeds mu_bar(p) either.
///
/// Throws NotProducibleError if no generator produces `p`.
BoundReport per_polymer_bound(const System& system, const OnTargetSpec& spec, std::size_t p,
                              const LevelAssignment& partial, const GeneratingSet& basis,
                              BoundMethod method, const BoundOptions& options = {});

/// Exponent of the single unassigned product `p` of a non-interacting
/// reaction: reactant exponents minus the other products' exponents.
/// Throws std::invalid_argument unless `p` is the only unassigned product
/// copy and all reactants are assigned.
Rational shortcut_assign(std::size_t p, const ReactionVec& alpha, const LevelAssignment& partial);

struct TbnReport {
  bool closed = false;
  std::optional<std::int64_t> min_entropy_loss;  // over all generators
  std::optional<Rational> worst_ratio;           // min e/l over generators with l > 0
  std::optional<Rational> mu1;                   // worst_ratio + 1
  std::optional<ReactionVec> witness;            // closure violation, else the worst-ratio generator
};

/// Closure: e(h) >= 0 for every generator and e(h) >= 1 for every generator
/// with an off-target product.
TbnReport check_tbn_closed(const OnTargetSpec& spec, const GeneratingSet& basis);

/// check_tbn_closed plus mu1 = min e/l + 1.
TbnReport tbn_bound(const OnTargetSpec& spec, const GeneratingSet& basis);

}  // namespace eqc
