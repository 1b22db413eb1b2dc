#include "eqc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "eqc/lp.hpp"

namespace eqc {

std::string to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::basis_estimate: return "basis_estimate";
    case BoundMethod::lp_certified: return "lp_certified";
    case BoundMethod::enum_exact: return "enum_exact";
  }
  return "unknown";
}

BoundMethod parse_bound_method(const std::string& text) {
  if (text == "basis" || text == "basis_estimate") return BoundMethod::basis_estimate;
  if (text == "lp" || text == "lp_certified") return BoundMethod::lp_certified;
  if (text == "enum" || text == "enum_exact") return BoundMethod::enum_exact;
  throw std::invalid_argument("unknown bound method: " + text);
}

namespace {

BoundReport basis_estimate(std::size_t p, const LevelAssignment& partial,
                           const GeneratingSet& basis) {
  BoundReport r;
  r.method = BoundMethod::basis_estimate;
  for (const auto& h : basis) {
    if (h[p] >= 0) continue;
    const auto kl = imbalance_novelty(h, partial);
    const Rational ratio = kl.k / Rational(kl.l);
    if (!r.witness || ratio < r.value) {
      r.value = ratio;
      r.witness = h;
    }
  }
  return r;
}

BoundReport enum_exact(const System& system, std::size_t p, const LevelAssignment& partial,
                       const GeneratingSet& basis, std::size_t max_size) {
  const std::size_t nb = basis.size();
  std::vector<Rational> k(nb);
  std::vector<std::int64_t> l(nb);
  std::vector<bool> produces(nb);
  for (std::size_t h = 0; h < nb; ++h) {
    const auto kl = imbalance_novelty(basis[h], partial);
    k[h] = kl.k;
    l[h] = kl.l;
    produces[h] = basis[h][p] < 0;
  }

  std::optional<Rational> best;
  std::vector<std::size_t> best_combo;
  std::vector<std::size_t> combo;
  // Nondecreasing index sequences enumerate each multiset once.
  auto visit = [&](auto&& self, std::size_t start, const Rational& ksum, std::int64_t lsum,
                   bool producing) -> void {
    if (producing && lsum > 0) {
      const Rational ratio = ksum / Rational(lsum);
      if (!best || ratio < *best) {
        best = ratio;
        best_combo = combo;
      }
    }
    if (combo.size() == max_size) return;
    for (std::size_t h = start; h < nb; ++h) {
      combo.push_back(h);
      self(self, h, ksum + k[h], lsum + l[h], producing || produces[h]);
      combo.pop_back();
    }
  };
  visit(visit, 0, Rational(0), 0, false);

  BoundReport r;
  r.method = BoundMethod::enum_exact;
  r.certified_lower_bound_on_mu_bar = true;
  if (best) {
    r.value = *best;
    std::vector<std::int64_t> net(system.polymer_count(), 0);
    for (auto h : best_combo)
      for (std::size_t j = 0; j < net.size(); ++j) net[j] += basis[h][j];
    r.witness = ReactionVec(system.conservation(), std::move(net));
  }
  return r;
}

BoundReport lp_certified(const System& system, const OnTargetSpec& spec, std::size_t p,
                         const LevelAssignment& partial, const GeneratingSet& basis,
                         std::size_t max_size) {
  const LevelAssignment initial = LevelAssignment::initial(spec);
  std::int64_t max_novelty = 1;
  for (const auto& h : basis) max_novelty = std::max(max_novelty, imbalance_novelty(h, initial).l);
  const std::int64_t scale =
      std::max<std::int64_t>(1000, static_cast<std::int64_t>(std::max<std::size_t>(4, max_size)) *
                                       max_novelty);
  const Rational eps(1, scale);

  // Columns: (p_j, q_j) per on-target polymer, w_j per off-target polymer.
  // v_j = p_j - q_j on target, v_j = -w_j off target; w_p is shifted by eps.
  const std::size_t np = system.polymer_count();
  const IntMatrix& a = system.conservation();
  std::vector<std::vector<std::pair<std::size_t, int>>> terms(np);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < np; ++j) {
    if (spec.contains(j)) {
      terms[j] = {{cols, +1}, {cols + 1, -1}};
      cols += 2;
    } else {
      terms[j] = {{cols, -1}};
      cols += 1;
    }
  }
  const std::size_t m = a.rows();
  RationalMatrix lp(m + 1, cols);
  std::vector<Rational> rhs(m + 1);
  std::vector<Rational> cost(cols);
  for (std::size_t j = 0; j < np; ++j) {
    for (auto [col, sign] : terms[j]) {
      for (std::size_t i = 0; i < m; ++i) lp(i, col) = Rational(sign * a(i, j));
      const auto& mu = partial.mu_bar(j);
      if (mu) {
        cost[col] = *mu * Rational(sign);
      } else {
        lp(m, col) = Rational(1);  // l(v) = sum of w over unassigned polymers
      }
    }
  }
  rhs[m] = Rational(1);
  // Substituting w_p = eps + w'_p moves eps * column into the right-hand side.
  const std::size_t wp = terms[p][0].first;
  for (std::size_t i = 0; i <= m; ++i) rhs[i] -= eps * lp(i, wp);
  const Rational cost_shift = eps * cost[wp];

  const LpResult res = solve_lp(lp, rhs, cost);
  BoundReport r;
  r.method = BoundMethod::lp_certified;
  if (res.status != LpStatus::optimal) {
    throw std::logic_error("bound LP did not reach an optimum");
  }
  r.value = res.value + cost_shift;
  r.certified_lower_bound_on_mu_bar = true;

  std::vector<Rational> v(np);
  for (std::size_t j = 0; j < np; ++j) {
    for (auto [col, sign] : terms[j]) {
      Rational x = res.x[col];
      if (col == wp) x += eps;
      v[j] += x * Rational(sign);
    }
  }
  BigInt lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<std::int64_t> net(np);
  bool fits = true;
  for (std::size_t j = 0; j < np; ++j) {
    const BigInt scaled = v[j].numerator() * (lcm / v[j].denominator());
    if (!scaled.fits_slong_p()) fits = false;
    else net[j] = scaled.get_si();
  }
  if (fits) r.witness = ReactionVec(a, std::move(net));
  return r;
}

}  // namespace

BoundReport per_polymer_bound(const System& system, const OnTargetSpec& spec, std::size_t p,
                              const LevelAssignment& partial, const GeneratingSet& basis,
                              BoundMethod method, const BoundOptions& options) {
  if (p >= system.polymer_count()) throw std::out_of_range("polymer index out of range");
  if (partial.is_assigned(p)) {
    throw std::invalid_argument("polymer " + system.polymer_name(p) +
                                " is already assigned in the partial assignment");
  }
  if (std::none_of(basis.begin(), basis.end(), [p](const ReactionVec& h) { return h[p] < 0; })) {
    throw NotProducibleError(p, "no canonical reaction produces " + system.polymer_name(p));
  }
  BoundReport r;
  switch (method) {
    case BoundMethod::basis_estimate: r = basis_estimate(p, partial, basis); break;
    case BoundMethod::lp_certified:
      r = lp_certified(system, spec, p, partial, basis, options.enum_max_size);
      break;
    case BoundMethod::enum_exact:
      r = enum_exact(system, p, partial, basis, options.enum_max_size);
      break;
  }
  r.polymer = p;
  r.level_context = partial.levels().size() + 1;
  return r;
}

Rational shortcut_assign(std::size_t p, const ReactionVec& alpha, const LevelAssignment& partial) {
  if (p >= alpha.size() || alpha[p] >= 0) {
    throw std::invalid_argument("reaction does not produce the polymer");
  }
  if (partial.is_assigned(p)) throw std::invalid_argument("polymer is already assigned");
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] > 0 && !partial.is_assigned(j)) {
      throw std::invalid_argument("reaction has an unassigned reactant");
    }
  }
  const auto kl = imbalance_novelty(alpha, partial);
  if (kl.l != 1) {
    throw std::invalid_argument("reaction has " + std::to_string(kl.l) +
                                " unassigned product copies; exactly one is required");
  }
  return kl.k;
}

TbnReport check_tbn_closed(const OnTargetSpec& spec, const GeneratingSet& basis) {
  TbnReport r;
  r.closed = true;
  for (const auto& h : basis) {
    const std::int64_t e = h.entropy_loss();
    if (!r.min_entropy_loss || e < *r.min_entropy_loss) r.min_entropy_loss = e;
    bool off_product = false;
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (h[j] < 0 && !spec.contains(j)) off_product = true;
    }
    if (r.closed && (e < 0 || (off_product && e < 1))) {
      r.closed = false;
      r.witness = h;
    }
  }
  return r;
}

TbnReport tbn_bound(const OnTargetSpec& spec, const GeneratingSet& basis) {
  TbnReport r = check_tbn_closed(spec, basis);
  const LevelAssignment initial = LevelAssignment::initial(spec);
  std::optional<ReactionVec> worst;
  for (const auto& h : basis) {
    const auto l = imbalance_novelty(h, initial).l;
    if (l == 0) continue;
    const Rational ratio = Rational(h.entropy_loss()) / Rational(l);
    if (!r.worst_ratio || ratio < *r.worst_ratio) {
      r.worst_ratio = ratio;
      worst = h;
    }
  }
  if (r.worst_ratio) r.mu1 = *r.worst_ratio + Rational(1);
  if (r.closed) r.witness = worst;
  return r;
}

}  // namespace eqc
