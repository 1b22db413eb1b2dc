#pragma once

// Independent brute-force oracles and random instances for the test suites.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "eqc/hilbert.hpp"
#include "eqc/model.hpp"

namespace eqc::testing {

struct RandomLimits {
  int max_monomers = 4;
  int max_polymers = 6;
  int max_entry = 3;
};

/// Random valid system with a random proper uniform on-target set that
/// passes check_on_target. Retries until one is found.
Problem random_problem(std::mt19937_64& rng, const RandomLimits& limits = {});

/// Every integer v != 0 with |v|_1 <= max_norm, A v = 0 and v[P] <= 0 off S.
std::vector<std::vector<std::int64_t>> cone_points(const System& system, const OnTargetSpec& spec,
                                                   int max_norm);

/// Whether v is a nonnegative integer combination of `gens` using only
/// generators sign-compatible with v (|g_j| <= |v_j|, same signs).
bool conformal_combination(const std::vector<std::int64_t>& v, const std::vector<ReactionVec>& gens);

/// Whether v is a nonnegative integer combination of at most `max_terms`
/// generators, without the sign-compatibility restriction.
bool bounded_combination(const std::vector<std::int64_t>& v, const std::vector<ReactionVec>& gens,
                         int max_terms);

}  // namespace eqc::testing
