#include "eqc/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "eqc/simd.hpp"

namespace eqc {

bool ConeSpec::contains(const std::vector<std::int64_t>& v) const {
  if (v.size() != dimension()) return false;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sign_constrained[j] && v[j] > 0) return false;
  }
  const auto image = multiply(equalities, v);
  return std::all_of(image.begin(), image.end(), [](std::int64_t x) { return x == 0; });
}

ConeSpec build_cone(const System& system, const OnTargetSpec& spec) {
  if (spec.polymer_count() != system.polymer_count()) {
    throw ModelError("on-target spec does not match the system");
  }
  ConeSpec cone;
  cone.equalities = system.conservation();
  cone.sign_constrained.assign(system.polymer_count(), false);
  for (auto j : spec.off_target()) cone.sign_constrained[j] = true;
  return cone;
}

namespace {

// Split variable: v[polymer] += sign * z.
struct SplitVar {
  std::size_t polymer;
  int sign;
  std::ptrdiff_t partner;  // opposite-sign variable of the same polymer, or -1
};

// Flat storage for one breadth-first level.
struct Level {
  std::size_t vars = 0;
  std::size_t rows = 0;
  std::vector<std::int32_t> z;  // vars per node
  std::vector<std::int64_t> r;  // B z, rows per node
  std::vector<std::int64_t> g;  // B^T B z, vars per node
  std::size_t count = 0;

  const std::int32_t* z_at(std::size_t i) const { return z.data() + i * vars; }
  const std::int64_t* r_at(std::size_t i) const { return r.data() + i * rows; }
  const std::int64_t* g_at(std::size_t i) const { return g.data() + i * vars; }
};

struct ZHash {
  const std::vector<std::int32_t>* buffer;
  std::size_t vars;
  std::size_t operator()(std::size_t idx) const {
    std::uint64_t h = 1469598103934665603ULL;
    const std::int32_t* p = buffer->data() + idx * vars;
    for (std::size_t k = 0; k < vars; ++k) {
      h ^= static_cast<std::uint32_t>(p[k]);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

struct ZEq {
  const std::vector<std::int32_t>* buffer;
  std::size_t vars;
  bool operator()(std::size_t a, std::size_t b) const {
    const std::int32_t* pa = buffer->data() + a * vars;
    const std::int32_t* pb = buffer->data() + b * vars;
    return std::equal(pa, pa + vars, pb);
  }
};

GeneratingSet finish(const IntMatrix& a, const ConeSpec& cone, std::vector<std::vector<std::int64_t>> nets) {
  std::vector<ReactionVec> out;
  for (auto& v : nets) {
    ReactionVec rv(a, std::move(v));
    if (!rv.is_zero()) out.push_back(std::move(rv));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const auto& h : out) {
    if (!cone.contains(h.net())) throw std::logic_error("generating vector outside the cone");
  }
  return GeneratingSet{std::move(out)};
}

std::int64_t to_i64(const BigInt& x) {
  if (!x.fits_slong_p()) throw ResourceLimitError("Hilbert computation: coefficient exceeds 64 bits");
  return x.get_si();
}

std::int64_t l1(const std::vector<std::int64_t>& v) {
  std::int64_t s = 0;
  for (auto x : v) s += std::llabs(x);
  return s;
}

bool conformally_below(const std::vector<std::int64_t>& g, const std::vector<std::int64_t>& v) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (g[j] == 0) continue;
    if ((g[j] > 0) != (v[j] > 0) || std::llabs(g[j]) > std::llabs(v[j])) return false;
  }
  return true;
}

struct Circuit {
  std::uint32_t support;
  std::vector<std::int64_t> v;
};

std::vector<Circuit> circuits_of(const ConeSpec& cone) {
  const IntMatrix& a = cone.equalities;
  const std::size_t n = cone.dimension();
  if (n > 16) throw ResourceLimitError("circuit enumeration is limited to 16 polymers");
  const std::size_t r = rank(a);
  std::vector<Circuit> out;
  std::vector<std::size_t> cols;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > r + 1) continue;
    cols.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::uint32_t{1} << j)) cols.push_back(j);
    }
    const IntMatrix sub = a.select_columns(cols);
    if (rank(sub) + 1 != size) continue;
    const auto kernel = integer_kernel_basis(sub);
    const auto& k = kernel.front();
    if (std::any_of(k.begin(), k.end(), [](const BigInt& x) { return x == 0; })) continue;
    std::vector<std::int64_t> v(n, 0);
    for (std::size_t i = 0; i < size; ++i) v[cols[i]] = to_i64(k[i]);
    for (int sign : {1, -1}) {
      std::vector<std::int64_t> w(v);
      for (auto& x : w) x *= sign;
      if (cone.contains(w)) out.push_back({mask, std::move(w)});
    }
  }
  return out;
}

// Sum of the d largest circuit norms, one circuit per support.
std::int64_t parallelepiped_bound(const std::vector<Circuit>& circuits, std::size_t d) {
  std::vector<std::pair<std::uint32_t, std::int64_t>> by_support;
  for (const auto& c : circuits) by_support.emplace_back(c.support, l1(c.v));
  std::sort(by_support.begin(), by_support.end());
  by_support.erase(std::unique(by_support.begin(), by_support.end(),
                               [](const auto& x, const auto& y) { return x.first == y.first; }),
                   by_support.end());
  std::vector<std::int64_t> norms;
  for (const auto& [mask, norm] : by_support) norms.push_back(norm);
  std::sort(norms.rbegin(), norms.rend());
  std::int64_t bound = 0;
  for (std::size_t i = 0; i < std::min(d, norms.size()); ++i) bound += norms[i];
  return bound;
}

// Integer points of a d-dimensional L1 ball of radius b.
double ball_points(std::size_t d, std::int64_t b) {
  double total = 0;
  double binom_d = 1;
  double binom_b = 1;
  for (std::size_t k = 0; k <= d; ++k) {
    if (k > 0) {
      binom_d = binom_d * static_cast<double>(d - k + 1) / static_cast<double>(k);
      binom_b = binom_b * static_cast<double>(b - static_cast<std::int64_t>(k) + 1) / static_cast<double>(k);
      if (binom_b <= 0) break;
    }
    total += std::ldexp(binom_d * binom_b, static_cast<int>(k));
  }
  return total;
}

GeneratingSet enumeration_basis(const ConeSpec& cone, const HilbertBudget& budget, std::int64_t bound) {
  const IntMatrix& a = cone.equalities;
  const std::size_t n = cone.dimension();
  const auto kernel = integer_kernel_basis(a);
  const std::size_t d = kernel.size();
  if (d == 0 || bound == 0) return GeneratingSet{};
  if (bound > budget.max_norm) {
    throw ResourceLimitError("Hilbert enumeration bound " + std::to_string(bound) + " exceeds the norm budget of " +
                             std::to_string(budget.max_norm));
  }

  // Free coordinates F with K_F invertible; v = M t for t = v_F.
  IntMatrix k(d, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i, j) = to_i64(kernel[i][j]);
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n && free_cols.size() < d; ++j) {
    free_cols.push_back(j);
    if (rank(k.select_columns(free_cols)) != free_cols.size()) free_cols.pop_back();
  }
  RationalMatrix kft(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t c = 0; c < d; ++c) kft(c, i) = Rational(k(i, free_cols[c]));
  Matrix<Rational> m(n, d, Rational(0));
  BigInt den = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<Rational> unit(d, Rational(0));
    unit[c] = Rational(1);
    const auto lambda = solve_exact(kft, unit);
    if (!lambda) throw std::logic_error("free coordinates are not independent");
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc(0);
      for (std::size_t i = 0; i < d; ++i) acc += (*lambda)[i] * Rational(k(i, j));
      m(j, c) = acc;
      den = lcm(den, acc.denominator());
    }
  }
  const std::int64_t scale = to_i64(den);
  std::vector<std::int64_t> cols(d * n);  // column c of M * scale, contiguous
  std::int64_t max_entry = 1;
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational scaled = m(j, c) * Rational(den, 1);
      cols[c * n + j] = to_i64(scaled.numerator());
      max_entry = std::max<std::int64_t>(max_entry, std::llabs(cols[c * n + j]));
    }
  if (static_cast<double>(max_entry) * static_cast<double>(bound) > 1e17) {
    throw ResourceLimitError("Hilbert enumeration: coordinates too large");
  }

  std::vector<std::vector<std::int64_t>> points;
  std::vector<std::int64_t> acc(n, 0);
  std::vector<std::int64_t> v(n);
  auto leaf = [&] {
    std::int64_t norm = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (acc[j] % scale != 0) return;
      v[j] = acc[j] / scale;
      if (cone.sign_constrained[j] && v[j] > 0) return;
      norm += std::llabs(v[j]);
    }
    if (norm == 0 || norm > bound) return;
    points.push_back(v);
    if (points.size() > budget.max_vectors) {
      throw ResourceLimitError("Hilbert enumeration exceeded the budget of " + std::to_string(budget.max_vectors) +
                               " cone points");
    }
  };
  auto rec = [&](auto&& self, std::size_t c, std::int64_t remaining) -> void {
    if (c == d) {
      leaf();
      return;
    }
    const std::int64_t hi = cone.sign_constrained[free_cols[c]] ? 0 : remaining;
    const std::int64_t* col = cols.data() + c * n;
    for (std::size_t j = 0; j < n; ++j) acc[j] -= (remaining + 1) * col[j];
    for (std::int64_t x = -remaining; x <= hi; ++x) {
      for (std::size_t j = 0; j < n; ++j) acc[j] += col[j];
      self(self, c + 1, remaining - std::llabs(x));
    }
    for (std::size_t j = 0; j < n; ++j) acc[j] -= hi * col[j];
  };
  rec(rec, 0, bound);

  std::sort(points.begin(), points.end(), [](const auto& x, const auto& y) {
    const auto nx = l1(x), ny = l1(y);
    return nx != ny ? nx < ny : x < y;
  });
  std::vector<std::vector<std::int64_t>> minimal;
  for (auto& p : points) {
    const bool reducible = std::any_of(minimal.begin(), minimal.end(),
                                       [&](const auto& g) { return conformally_below(g, p); });
    if (!reducible) minimal.push_back(std::move(p));
  }
  return finish(a, cone, std::move(minimal));
}

GeneratingSet completion_basis(const ConeSpec& cone, const HilbertBudget& budget) {
  const auto& kernels = simd::active_kernels();
  const IntMatrix& a = cone.equalities;
  const std::size_t rows = a.rows();
  const std::size_t polymers = cone.dimension();
  if (a.cols() != polymers) throw std::invalid_argument("cone dimension mismatch");

  std::vector<SplitVar> vars;
  for (std::size_t j = 0; j < polymers; ++j) {
    if (!cone.sign_constrained[j]) {
      vars.push_back({j, +1, static_cast<std::ptrdiff_t>(vars.size() + 1)});
      vars.push_back({j, -1, static_cast<std::ptrdiff_t>(vars.size() - 1)});
    } else {
      vars.push_back({j, -1, -1});
    }
  }
  const std::size_t nv = vars.size();

  // Column j of B (rows entries) and row j of the Gram matrix B^T B.
  std::vector<std::int64_t> bcol(nv * rows);
  for (std::size_t j = 0; j < nv; ++j)
    for (std::size_t i = 0; i < rows; ++i) bcol[j * rows + i] = vars[j].sign * a(i, vars[j].polymer);
  std::vector<std::int64_t> gram(nv * nv);
  for (std::size_t j = 0; j < nv; ++j)
    for (std::size_t k = 0; k < nv; ++k) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < rows; ++i) acc += bcol[j * rows + i] * bcol[k * rows + i];
      gram[j * nv + k] = acc;
    }

  std::vector<std::int32_t> solutions;  // flat, nv per row
  std::size_t solution_count = 0;

  Level current{nv, rows, {}, {}, {}, 0};
  for (std::size_t j = 0; j < nv; ++j) {
    current.z.resize(current.z.size() + nv, 0);
    current.z[j * nv + j] = 1;
    current.r.insert(current.r.end(), bcol.begin() + j * rows, bcol.begin() + (j + 1) * rows);
    current.g.insert(current.g.end(), gram.begin() + j * nv, gram.begin() + (j + 1) * nv);
    ++current.count;
  }

  std::vector<std::int32_t> child(nv);
  for (std::int64_t norm = 1; current.count > 0; ++norm) {
    if (norm > budget.max_norm) {
      throw ResourceLimitError("Hilbert completion exceeded the norm budget of " +
                               std::to_string(budget.max_norm));
    }
    if (current.count > budget.max_vectors) {
      throw ResourceLimitError("Hilbert completion exceeded the budget of " +
                               std::to_string(budget.max_vectors) + " intermediate vectors");
    }
    std::vector<bool> is_solution(current.count, false);
    for (std::size_t n = 0; n < current.count; ++n) {
      if (kernels.all_zero_i64(current.r_at(n), rows)) {
        is_solution[n] = true;
        solutions.insert(solutions.end(), current.z_at(n), current.z_at(n) + nv);
        ++solution_count;
      }
    }

    Level next{nv, rows, {}, {}, {}, 0};
    std::unordered_set<std::size_t, ZHash, ZEq> seen(64, ZHash{&next.z, nv}, ZEq{&next.z, nv});
    for (std::size_t n = 0; n < current.count; ++n) {
      if (is_solution[n]) continue;
      const std::int32_t* z = current.z_at(n);
      const std::int64_t* g = current.g_at(n);
      for (std::size_t j = 0; j < nv; ++j) {
        if (g[j] >= 0) continue;
        if (vars[j].partner >= 0 && z[vars[j].partner] != 0) continue;
        std::copy(z, z + nv, child.begin());
        if (child[j] == std::numeric_limits<std::int32_t>::max()) {
          throw ResourceLimitError("Hilbert completion coordinate overflow");
        }
        ++child[j];
        if (solution_count > 0 &&
            kernels.any_row_le(solutions.data(), solution_count, nv, child.data(), nv)) {
          continue;
        }
        const std::size_t idx = next.count;
        next.z.insert(next.z.end(), child.begin(), child.end());
        if (!seen.insert(idx).second) {
          next.z.resize(next.z.size() - nv);
          continue;
        }
        next.r.insert(next.r.end(), current.r_at(n), current.r_at(n) + rows);
        kernels.add_i64(next.r.data() + idx * rows, bcol.data() + j * rows, rows);
        next.g.insert(next.g.end(), g, g + nv);
        kernels.add_i64(next.g.data() + idx * nv, gram.data() + j * nv, nv);
        ++next.count;
      }
    }
    current = std::move(next);
  }

  std::vector<std::vector<std::int64_t>> nets;
  for (std::size_t s = 0; s < solution_count; ++s) {
    std::vector<std::int64_t> v(polymers, 0);
    const std::int32_t* z = solutions.data() + s * nv;
    for (std::size_t j = 0; j < nv; ++j) v[vars[j].polymer] += vars[j].sign * z[j];
    nets.push_back(std::move(v));
  }
  return finish(a, cone, std::move(nets));
}

}  // namespace

std::vector<ReactionVec> cone_circuits(const ConeSpec& cone) {
  std::vector<ReactionVec> out;
  for (auto& c : circuits_of(cone)) out.emplace_back(cone.equalities, std::move(c.v));
  std::sort(out.begin(), out.end());
  return out;
}

GeneratingSet hilbert_basis(const ConeSpec& cone, const HilbertBudget& budget) {
  if (cone.equalities.cols() != cone.dimension()) throw std::invalid_argument("cone dimension mismatch");
  switch (budget.strategy) {
    case HilbertStrategy::completion:
      return completion_basis(cone, budget);
    case HilbertStrategy::enumeration: {
      const std::size_t d = cone.dimension() - rank(cone.equalities);
      return enumeration_basis(cone, budget, parallelepiped_bound(circuits_of(cone), d));
    }
    case HilbertStrategy::automatic:
      break;
  }
  if (cone.dimension() <= 12) {
    const std::size_t d = cone.dimension() - rank(cone.equalities);
    const std::int64_t bound = parallelepiped_bound(circuits_of(cone), d);
    if (bound <= budget.max_norm && ball_points(d, bound) <= static_cast<double>(budget.max_enumeration)) {
      return enumeration_basis(cone, budget, bound);
    }
  }
  return completion_basis(cone, budget);
}

GeneratingSet canonical_basis(const System& system, const OnTargetSpec& spec,
                              const HilbertBudget& budget) {
  return hilbert_basis(build_cone(system, spec), budget);
}

std::vector<ReactionVec> producing_vectors(const GeneratingSet& basis, std::size_t j) {
  std::vector<ReactionVec> out;
  for (const auto& h : basis) {
    if (j < h.size() && h[j] < 0) out.push_back(h);
  }
  return out;
}

std::string dump_basis(const System& system, const GeneratingSet& basis) {
  std::ostringstream os;
  for (const auto& h : basis) {
    os << h.render(system) << "  [";
    for (std::size_t j = 0; j < h.size(); ++j) os << (j ? " " : "") << h[j];
    os << "]\n";
  }
  return os.str();
}

}  // namespace eqc
