#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eqc/highfloat.hpp"
#include "eqc/hilbert.hpp"
#include "eqc/levelize.hpp"
#include "eqc/model.hpp"
#include "eqc/rational.hpp"

namespace eqc {

struct EquilibriumCertificate {
  bool in_rowspace = false;
  std::optional<std::vector<Rational>> lambda;  // A^T lambda = mu_bar over monomers
  std::vector<Rational> residual;               // per basis vector: sum_P v[P] mu_bar(P)
  std::size_t basis_rank = 0;
  std::size_t kernel_rank = 0;

  [[nodiscard]] bool residuals_zero() const;
  [[nodiscard]] bool basis_spans_kernel() const { return basis_rank == kernel_rank; }
  [[nodiscard]] bool pass() const { return in_rowspace && residuals_zero(); }
};

/// Exact balance check of a complete assignment: residuals over the basis
/// and an exact solve of A^T lambda = mu_bar.
EquilibriumCertificate check_balance(const System& system, const LevelAssignment& assignment,
                                     const GeneratingSet& basis);
EquilibriumCertificate check_balance(const System& system, const std::vector<Rational>& mu_bar,
                                     const GeneratingSet& basis);

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& message, double residual)
      : std::runtime_error(message), residual_(residual) {}
  [[nodiscard]] double residual() const { return residual_; }

 private:
  double residual_;
};

template <typename T>
struct NumericEquilibrium {
  std::vector<T> x;       // polymer concentrations
  std::vector<T> lambda;  // log x = A^T lambda
  std::size_t iterations = 0;
  double residual = 0;    // max_i |(A x - x0)_i| / x0_i
};

/// Maximizes the concave dual lambda.x0 - sum_P exp((A^T lambda)_P) by
/// damped Newton with backtracking from lambda = 0. Stops once every monomer
/// residual |(A x - x0)_i| <= tol * x0_i and the last step moved every log x_P
/// by at most tol. Throws NonConvergenceError after max_iter iterations.
NumericEquilibrium<double> numeric_equilibrium(const System& system,
                                               const std::vector<double>& monomer_conc,
                                               double tol = 1e-10, std::size_t max_iter = 500);

/// Same in `digits`-digit binary floating point.
NumericEquilibrium<HighFloat> numeric_equilibrium(const System& system,
                                                  const std::vector<HighFloat>& monomer_conc,
                                                  const HighFloat& tol, unsigned digits,
                                                  std::size_t max_iter = 500);

struct EnumerationBudget {
  std::size_t max_results = 1'000'000;
};

/// All net canonical reactions whose reactant side has at most
/// `max_reactants` polymers: every reactant multiset over S, combined with
/// every decomposition of its monomer pool into polymers. Sorted, no zero
/// vectors, no duplicates. Throws ResourceLimitError past the budget.
std::vector<ReactionVec> enumerate_canonical(const System& system, const OnTargetSpec& spec,
                                             std::size_t max_reactants,
                                             const EnumerationBudget& budget = {});

}  // namespace eqc
