#include "eqc/levelize.hpp"

#include <algorithm>
#include <set>

namespace eqc {

LevelAssignment LevelAssignment::initial(const OnTargetSpec& spec) {
  LevelAssignment a;
  a.mu_bar_.resize(spec.polymer_count());
  a.level_of_.resize(spec.polymer_count());
  for (const auto& [j, mu] : spec.exponents()) {
    a.mu_bar_[j] = mu;
    a.level_of_[j] = 0;
  }
  return a;
}

bool LevelAssignment::complete() const {
  return std::all_of(mu_bar_.begin(), mu_bar_.end(), [](const auto& m) { return m.has_value(); });
}

std::vector<Rational> LevelAssignment::extended_mu() const {
  std::vector<Rational> out;
  out.reserve(mu_bar_.size());
  for (const auto& m : mu_bar_) {
    if (!m) throw std::logic_error("level assignment is incomplete");
    out.push_back(*m);
  }
  return out;
}

LevelAssignment LevelAssignment::truncated(std::size_t level_count) const {
  LevelAssignment a;
  a.mu_bar_.resize(mu_bar_.size());
  a.level_of_.resize(mu_bar_.size());
  for (std::size_t j = 0; j < mu_bar_.size(); ++j) {
    if (level_of_[j] && *level_of_[j] == 0) {
      a.mu_bar_[j] = mu_bar_[j];
      a.level_of_[j] = 0;
    }
  }
  for (std::size_t i = 0; i < std::min(level_count, levels_.size()); ++i) a.push_level(levels_[i]);
  return a;
}

void LevelAssignment::push_level(Level level) {
  if (!levels_.empty() && !(levels_.back().mu < level.mu)) {
    throw std::logic_error("level exponents must strictly increase");
  }
  level.index = levels_.size() + 1;
  for (auto j : level.members) {
    if (mu_bar_[j]) throw std::logic_error("polymer assigned twice");
    mu_bar_[j] = level.mu;
    level_of_[j] = level.index;
  }
  levels_.push_back(std::move(level));
}

void LevelAssignment::assign(std::size_t j, const Rational& mu) {
  if (mu_bar_[j]) throw std::logic_error("polymer assigned twice");
  mu_bar_[j] = mu;
}

ImbalanceNovelty imbalance_novelty(const ReactionVec& alpha, const LevelAssignment& partial) {
  ImbalanceNovelty out;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    const std::int64_t v = alpha[j];
    if (v == 0) continue;
    const auto& mu = partial.mu_bar(j);
    if (mu) {
      out.k += *mu * Rational(v);
    } else if (v > 0) {
      throw std::logic_error("reactant without an assigned exponent");
    } else {
      out.l -= v;
    }
  }
  return out;
}

LevelAssignment levelize(const System& system, const OnTargetSpec& spec,
                         const GeneratingSet& basis) {
  if (spec.polymer_count() != system.polymer_count()) {
    throw ModelError("on-target spec does not match the system");
  }
  LevelAssignment a = LevelAssignment::initial(spec);
  while (!a.complete()) {
    std::optional<Rational> best;
    std::vector<std::size_t> achieving;
    for (std::size_t h = 0; h < basis.size(); ++h) {
      const auto kl = imbalance_novelty(basis[h], a);
      if (kl.l == 0) continue;
      const Rational ratio = kl.k / Rational(kl.l);
      if (!best || ratio < *best) {
        best = ratio;
        achieving.clear();
      }
      if (ratio == *best) achieving.push_back(h);
    }
    if (!best) {
      std::size_t j = 0;
      while (a.is_assigned(j)) ++j;
      throw NotProducibleError(j, "polymer " + system.polymer_name(j) +
                                      " is not produced by any canonical reaction");
    }
    Level level;
    level.mu = *best;
    std::set<std::size_t> members;
    for (auto h : achieving) {
      level.levelizing.push_back(basis[h]);
      for (std::size_t j = 0; j < basis[h].size(); ++j) {
        if (basis[h][j] < 0 && !a.is_assigned(j)) members.insert(j);
      }
    }
    level.members.assign(members.begin(), members.end());
    a.push_level(std::move(level));
  }
  return a;
}

StabilityReport check_stable(const OnTargetSpec& spec, const GeneratingSet& basis) {
  const LevelAssignment a = LevelAssignment::initial(spec);
  StabilityReport r;
  for (const auto& h : basis) {
    const auto kl = imbalance_novelty(h, a);
    if (kl.l == 0) continue;
    const Rational ratio = kl.k / Rational(kl.l);
    if (!r.min_ratio || ratio < *r.min_ratio) {
      r.min_ratio = ratio;
      r.witness = h;
    }
  }
  r.stable = !r.min_ratio || *r.min_ratio > Rational(1);
  return r;
}

Concentrations concentrations(const System& system, const LevelAssignment& assignment,
                              const Rational& c, unsigned digits) {
  if (!(Rational(0) < c && c < Rational(1))) {
    throw std::domain_error("base concentration must lie in (0, 1)");
  }
  const auto mu = assignment.extended_mu();
  if (mu.size() != system.polymer_count()) throw ModelError("assignment does not match the system");
  Concentrations out;
  const HighFloat base(c, digits);
  for (const auto& m : mu) out.polymer.push_back(base.pow(m));
  const IntMatrix& a = system.conservation();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    HighFloat acc(digits);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) acc += HighFloat(Rational(a(i, j)), digits) * out.polymer[j];
    }
    out.monomer.push_back(std::move(acc));
  }
  return out;
}

}  // namespace eqc
