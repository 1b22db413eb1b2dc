#include "eqc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "eqc/simd.hpp"

namespace eqc {

bool EquilibriumCertificate::residuals_zero() const {
  return std::all_of(residual.begin(), residual.end(), [](const Rational& r) { return r.is_zero(); });
}

EquilibriumCertificate check_balance(const System& system, const LevelAssignment& assignment,
                                     const GeneratingSet& basis) {
  return check_balance(system, assignment.extended_mu(), basis);
}

EquilibriumCertificate check_balance(const System& system, const std::vector<Rational>& mu_bar,
                                     const GeneratingSet& basis) {
  if (mu_bar.size() != system.polymer_count()) throw ModelError("exponent vector length mismatch");
  EquilibriumCertificate cert;
  for (const auto& h : basis) {
    Rational r;
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (h[j] != 0) r += Rational(h[j]) * mu_bar[j];
    }
    cert.residual.push_back(r);
  }
  cert.lambda = solve_exact(to_rational(system.conservation()).transposed(), mu_bar);
  cert.in_rowspace = cert.lambda.has_value();

  IntMatrix rows(basis.size(), system.polymer_count());
  for (std::size_t h = 0; h < basis.size(); ++h)
    for (std::size_t j = 0; j < system.polymer_count(); ++j) rows(h, j) = basis[h][j];
  cert.basis_rank = basis.empty() ? 0 : rank(rows);
  cert.kernel_rank = system.polymer_count() - rank(system.conservation());
  return cert;
}

namespace {

struct DoubleOps {
  const simd::KernelTable& k = simd::active_kernels();
  double from(double v) const { return v; }
  double epsilon() const { return std::numeric_limits<double>::epsilon(); }
  double exp(double v) const { return std::exp(v); }
  double abs(double v) const { return std::fabs(v); }
  double to_double(double v) const { return v; }
  double dot(const double* a, const double* b, std::size_t n) const { return k.dot_f64(a, b, n); }
  void mul(const double* a, const double* b, double* out, std::size_t n) const {
    k.mul_f64(a, b, out, n);
  }
};

struct HighOps {
  unsigned digits;
  HighFloat from(double v) const { return HighFloat(v, digits); }
  HighFloat epsilon() const {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    return HighFloat(Rational(BigInt(1), scale), digits);
  }
  HighFloat exp(const HighFloat& v) const { return v.exp(); }
  HighFloat abs(const HighFloat& v) const { return v.abs(); }
  double to_double(const HighFloat& v) const { return v.to_double(); }
  HighFloat dot(const HighFloat* a, const HighFloat* b, std::size_t n) const {
    HighFloat acc(digits);
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
  }
  void mul(const HighFloat* a, const HighFloat* b, HighFloat* out, std::size_t n) const {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
  }
};

// Solves h d = g in place by Gaussian elimination with partial pivoting.
template <typename T, typename Ops>
bool solve_dense(std::vector<T> h, std::vector<T> g, std::size_t m, std::vector<T>& d,
                 const Ops& ops) {
  const T zero = ops.from(0.0);
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < m; ++r) {
      if (ops.abs(h[r * m + c]) > ops.abs(h[piv * m + c])) piv = r;
    }
    if (!(ops.abs(h[piv * m + c]) > zero)) return false;
    if (piv != c) {
      for (std::size_t k = 0; k < m; ++k) std::swap(h[c * m + k], h[piv * m + k]);
      std::swap(g[c], g[piv]);
    }
    for (std::size_t r = c + 1; r < m; ++r) {
      const T f = h[r * m + c] / h[c * m + c];
      if (f == zero) continue;
      for (std::size_t k = c; k < m; ++k) h[r * m + k] -= f * h[c * m + k];
      g[r] -= f * g[c];
    }
  }
  d.assign(m, zero);
  for (std::size_t r = m; r-- > 0;) {
    T acc = g[r];
    for (std::size_t k = r + 1; k < m; ++k) acc -= h[r * m + k] * d[k];
    d[r] = acc / h[r * m + r];
  }
  return true;
}

template <typename T, typename Ops>
NumericEquilibrium<T> newton_dual(const IntMatrix& a, const std::vector<T>& x0, const T& tol,
                                  const T& regularization, std::size_t max_iter, const Ops& ops) {
  const std::size_t m = a.rows();
  const std::size_t np = a.cols();
  if (x0.size() != m) throw std::invalid_argument("monomer concentration length mismatch");
  const T zero = ops.from(0.0);
  for (const auto& v : x0) {
    if (!(v > zero)) throw std::invalid_argument("monomer concentrations must be positive");
  }
  std::vector<T> ad(m * np, zero);
  std::vector<T> at(np * m, zero);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      ad[i * np + j] = ops.from(static_cast<double>(a(i, j)));
      at[j * m + i] = ad[i * np + j];
    }

  std::vector<T> lambda(m, zero);
  std::vector<T> x(np, zero);
  std::vector<T> w(np, zero);
  std::vector<T> grad(m, zero);
  std::vector<T> h(m * m, zero);
  std::vector<T> d;

  auto primal = [&](const std::vector<T>& lam, std::vector<T>& out) {
    for (std::size_t j = 0; j < np; ++j) out[j] = ops.exp(ops.dot(&at[j * m], lam.data(), m));
  };
  // Objective and the rounding slack of its evaluation.
  auto objective = [&](const std::vector<T>& lam, const std::vector<T>& xs, T& slack) {
    T phi = zero;
    slack = zero;
    for (std::size_t i = 0; i < m; ++i) {
      const T term = lam[i] * x0[i];
      phi += term;
      slack += ops.abs(term);
    }
    for (const auto& v : xs) {
      phi -= v;
      slack += v;
    }
    slack = slack * ops.from(64.0) * ops.epsilon();
    return phi;
  };

  primal(lambda, x);
  T slack = zero;
  T phi = objective(lambda, x, slack);
  double rel = std::numeric_limits<double>::infinity();
  for (std::size_t it = 0; it < max_iter; ++it) {
    T worst = zero;
    for (std::size_t i = 0; i < m; ++i) {
      grad[i] = x0[i] - ops.dot(&ad[i * np], x.data(), np);
      const T r = ops.abs(grad[i]) / x0[i];
      if (r > worst) worst = r;
    }
    rel = ops.to_double(worst);

    for (std::size_t i = 0; i < m; ++i) {
      ops.mul(&ad[i * np], x.data(), w.data(), np);
      for (std::size_t k = 0; k < m; ++k) h[i * m + k] = ops.dot(w.data(), &ad[k * np], np);
      h[i * m + i] += regularization * h[i * m + i];
    }
    if (!solve_dense(h, grad, m, d, ops)) {
      throw NonConvergenceError("singular Newton system", rel);
    }
    T step = zero;
    for (std::size_t j = 0; j < np; ++j) {
      const T s = ops.abs(ops.dot(&at[j * m], d.data(), m));
      if (s > step) step = s;
    }
    // A residual at rounding level cannot steer the step any further.
    const bool at_floor = worst <= ops.from(64.0) * ops.epsilon();
    if (worst <= tol && (step <= tol || at_floor)) {
      return NumericEquilibrium<T>{x, lambda, it, rel};
    }

    const T slope = ops.dot(grad.data(), d.data(), m);
    T t = ops.from(1.0);
    const T half = ops.from(0.5);
    const T armijo = ops.from(1e-4);
    bool accepted = false;
    std::vector<T> trial(m, zero);
    std::vector<T> xt(np, zero);
    for (int attempt = 0; attempt < 200; ++attempt) {
      for (std::size_t i = 0; i < m; ++i) trial[i] = lambda[i] + t * d[i];
      primal(trial, xt);
      T slack_t = zero;
      const T phi_t = objective(trial, xt, slack_t);
      const T noise = slack > slack_t ? slack : slack_t;
      if (phi_t + noise >= phi + armijo * t * slope) {
        if (phi_t + noise < phi) throw std::logic_error("dual objective decreased");
        lambda.swap(trial);
        x.swap(xt);
        phi = phi_t;
        slack = slack_t;
        accepted = true;
        break;
      }
      t = t * half;
    }
    if (!accepted) {
      if (worst <= tol) return NumericEquilibrium<T>{x, lambda, it, rel};
      throw NonConvergenceError("line search failed to increase the dual objective", rel);
    }
  }
  throw NonConvergenceError("no convergence after " + std::to_string(max_iter) +
                                " iterations (relative residual " + std::to_string(rel) + ")",
                            rel);
}

}  // namespace

NumericEquilibrium<double> numeric_equilibrium(const System& system,
                                               const std::vector<double>& monomer_conc, double tol,
                                               std::size_t max_iter) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  return newton_dual(system.conservation(), monomer_conc, tol, 1e-13, max_iter, DoubleOps{});
}

NumericEquilibrium<HighFloat> numeric_equilibrium(const System& system,
                                                  const std::vector<HighFloat>& monomer_conc,
                                                  const HighFloat& tol, unsigned digits,
                                                  std::size_t max_iter) {
  const HighOps ops{digits};
  if (!(tol > ops.from(0.0))) throw std::invalid_argument("tolerance must be positive");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits > 6 ? digits - 3 : 3);
  const HighFloat reg(Rational(BigInt(1), scale), digits);
  return newton_dual(system.conservation(), monomer_conc, tol, reg, max_iter, ops);
}

namespace {

class Decomposer {
 public:
  Decomposer(const IntMatrix& a, std::size_t limit) : a_(a), limit_(limit) {}

  // Appends every multiset of polymers whose monomer content equals `pool`.
  void all(const std::vector<std::int64_t>& pool, std::vector<std::vector<std::int64_t>>& out) {
    std::vector<std::int64_t> counts(a_.cols(), 0);
    std::vector<std::int64_t> rem = pool;
    walk(0, rem, counts, out);
  }

 private:
  bool fits(std::size_t j, const std::vector<std::int64_t>& rem) const {
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      if (a_(i, j) > rem[i]) return false;
    }
    return true;
  }

  bool feasible(std::size_t j, std::vector<std::int64_t>& rem) {
    if (std::all_of(rem.begin(), rem.end(), [](std::int64_t v) { return v == 0; })) return true;
    if (j == a_.cols()) return false;
    auto key = std::make_pair(j, rem);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = feasible(j + 1, rem);
    std::size_t taken = 0;
    while (!ok && fits(j, rem)) {
      for (std::size_t i = 0; i < a_.rows(); ++i) rem[i] -= a_(i, j);
      ++taken;
      ok = feasible(j + 1, rem);
    }
    for (std::size_t i = 0; i < a_.rows(); ++i) rem[i] += static_cast<std::int64_t>(taken) * a_(i, j);
    memo_.emplace(std::move(key), ok);
    return ok;
  }

  void walk(std::size_t j, std::vector<std::int64_t>& rem, std::vector<std::int64_t>& counts,
            std::vector<std::vector<std::int64_t>>& out) {
    if (std::all_of(rem.begin(), rem.end(), [](std::int64_t v) { return v == 0; })) {
      out.push_back(counts);
      if (out.size() > limit_) {
        throw ResourceLimitError("canonical enumeration exceeded " + std::to_string(limit_) +
                                 " decompositions");
      }
      return;
    }
    if (j == a_.cols() || !feasible(j, rem)) return;
    walk(j + 1, rem, counts, out);
    std::int64_t taken = 0;
    while (fits(j, rem)) {
      for (std::size_t i = 0; i < a_.rows(); ++i) rem[i] -= a_(i, j);
      ++taken;
      counts[j] = taken;
      walk(j + 1, rem, counts, out);
    }
    counts[j] = 0;
    for (std::size_t i = 0; i < a_.rows(); ++i) rem[i] += taken * a_(i, j);
  }

  const IntMatrix& a_;
  std::size_t limit_;
  std::map<std::pair<std::size_t, std::vector<std::int64_t>>, bool> memo_;
};

}  // namespace

std::vector<ReactionVec> enumerate_canonical(const System& system, const OnTargetSpec& spec,
                                             std::size_t max_reactants,
                                             const EnumerationBudget& budget) {
  const IntMatrix& a = system.conservation();
  const auto members = spec.members();
  Decomposer decomposer(a, budget.max_results);
  std::set<std::vector<std::int64_t>> found;
  std::vector<std::int64_t> reactants(system.polymer_count(), 0);
  std::vector<std::int64_t> pool(a.rows(), 0);

  auto visit = [&](auto&& self, std::size_t start, std::size_t size) -> void {
    if (size > 0) {
      std::vector<std::vector<std::int64_t>> products;
      decomposer.all(pool, products);
      for (const auto& prod : products) {
        std::vector<std::int64_t> net(reactants.size());
        bool zero = true;
        for (std::size_t j = 0; j < net.size(); ++j) {
          net[j] = reactants[j] - prod[j];
          zero = zero && net[j] == 0;
        }
        if (!zero) found.insert(std::move(net));
      }
      if (found.size() > budget.max_results) {
        throw ResourceLimitError("canonical enumeration exceeded " +
                                 std::to_string(budget.max_results) + " reactions");
      }
    }
    if (size == max_reactants) return;
    for (std::size_t s = start; s < members.size(); ++s) {
      const std::size_t j = members[s];
      ++reactants[j];
      for (std::size_t i = 0; i < a.rows(); ++i) pool[i] += a(i, j);
      self(self, s, size + 1);
      --reactants[j];
      for (std::size_t i = 0; i < a.rows(); ++i) pool[i] -= a(i, j);
    }
  };
  visit(visit, 0, 0);

  std::vector<ReactionVec> out;
  out.reserve(found.size());
  for (const auto& v : found) out.emplace_back(a, v);
  return out;
}

}  // namespace eqc
