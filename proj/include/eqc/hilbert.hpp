#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqc/linalg.hpp"
#include "eqc/model.hpp"

namespace eqc {

/// Thrown when a completion exceeds its configured budget. The instance is
/// too large for desk-scale computation; the partial result is discarded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical-reaction cone {v : A v = 0, v[P] <= 0 for P not in S}.
struct ConeSpec {
  IntMatrix equalities;
  std::vector<bool> sign_constrained;  // per polymer: true iff v[P] <= 0 is imposed

  [[nodiscard]] std::size_t dimension() const { return sign_constrained.size(); }
  [[nodiscard]] bool contains(const std::vector<std::int64_t>& v) const;
};

enum class HilbertStrategy { automatic, completion, enumeration };

struct HilbertBudget {
  std::size_t max_vectors = 200'000;  // peak frontier size / collected cone points
  std::int64_t max_norm = 1'000'000;  // L1 norm reached by either strategy
  std::size_t max_enumeration = 4'000'000;  // automatic: enumerate only below this estimate
  HilbertStrategy strategy = HilbertStrategy::automatic;
};

/// Finite generating set of the cone's lattice points, sorted
/// lexicographically on net vectors. No zero vectors, no duplicates.
struct GeneratingSet {
  std::vector<ReactionVec> vectors;

  [[nodiscard]] std::size_t size() const { return vectors.size(); }
  [[nodiscard]] bool empty() const { return vectors.empty(); }
  [[nodiscard]] auto begin() const { return vectors.begin(); }
  [[nodiscard]] auto end() const { return vectors.end(); }
  const ReactionVec& operator[](std::size_t i) const { return vectors[i]; }
};

ConeSpec build_cone(const System& system, const OnTargetSpec& spec);

/// Primitive minimal-support vectors of ker A that lie in the cone, one per
/// support and sign. Enumerates column subsets; limited to 16 polymers.
std::vector<ReactionVec> cone_circuits(const ConeSpec& cone);

/// Generating set of the cone's integer points under nonnegative integer
/// combinations: the conformally minimal nonzero cone points.
///
/// Two exact strategies produce the same set.
///
/// Completion: each variable v[P] with P in S is split as p - q (p, q >= 0) and each
/// sign-constrained v[P] becomes -q. The minimal nonnegative solutions of the
/// split homogeneous system are found by breadth-first completion over the
/// L1 norm: a partial vector x is extended by e_j only when <Bx, Be_j> < 0,
/// and discarded when it dominates an already-found solution. Vectors with
/// both p and q positive for the same polymer are never formed, so the
/// projected set consists of the sign-compatible (conformally) minimal
/// elements of the cone lattice.
///
/// Enumeration: every conformally minimal point lies in the half-open
/// parallelepiped of at most d = dim ker A extreme rays of its orthant cone,
/// and extreme rays are circuits, so its L1 norm is below the sum of the d
/// largest circuit norms. All cone points within that bound are enumerated
/// through d free coordinates and filtered for minimality.
///
/// `automatic` enumerates when the polymer count is at most 12 and the
/// estimated point count is at most `max_enumeration`; otherwise it completes.
///
/// Throws ResourceLimitError when the budget is exceeded.
GeneratingSet hilbert_basis(const ConeSpec& cone, const HilbertBudget& budget = {});

/// Convenience: build_cone + hilbert_basis.
GeneratingSet canonical_basis(const System& system, const OnTargetSpec& spec,
                              const HilbertBudget& budget = {});

/// Basis vectors that net-produce polymer j (h[j] < 0).
std::vector<ReactionVec> producing_vectors(const GeneratingSet& basis, std::size_t j);

/// Debug dump: one line per vector, "reactants -> products  [raw vector]".
std::string dump_basis(const System& system, const GeneratingSet& basis);

}  // namespace eqc
