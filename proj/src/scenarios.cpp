#include "eqc/scenarios.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace eqc {

namespace {

Polymer of(std::initializer_list<const char*> names) {
  Polymer p;
  for (const char* n : names) p.insert(MonomerId{n});
  return p;
}

std::vector<MonomerId> monomers_of(std::initializer_list<const char*> names) {
  std::vector<MonomerId> out;
  for (const char* n : names) out.push_back(MonomerId{n});
  return out;
}

}  // namespace

Problem gen_example_51() {
  System s = System::create(monomers_of({"a", "b", "c"}),
                            {{"A", of({"a", "a"})},
                             {"B", of({"a", "b"})},
                             {"C", of({"c"})},
                             {"X", of({"a", "a", "a", "b"})},
                             {"Y", of({"b", "b", "c", "c"})},
                             {"Z", of({"b", "b", "c", "c", "c"})}});
  const std::vector<std::size_t> members{0, 1, 2};
  return Problem{s, OnTargetSpec::uniform(s.polymer_count(), members)};
}

Problem gen_and_gate(AndGateInputs inputs) {
  std::vector<NamedPolymer> polymers;
  std::vector<MonomerId> monomers;
  std::vector<std::size_t> members;
  if (inputs == AndGateInputs::none) {
    monomers = monomers_of({"x1", "x2", "y1", "y2", "z1", "z2"});
    polymers = {{"X", of({"x1", "x2"})},
                {"Y", of({"y1", "y2"})},
                {"Z", of({"z1", "z2"})},
                {"C", of({"x2", "y1"})},
                {"G1", of({"x1", "y2", "z1", "z2"})}};
    members = {0, 1, 2};
  } else {
    monomers = monomers_of({"b1", "b2", "x1", "x2", "y1", "y2", "z1", "z2"});
    polymers = {{"B", of({"b1", "b2"})},
                {"X", of({"x1", "x2"})},
                {"Y", of({"y1", "y2"})},
                {"Z", of({"z1", "z2"})},
                {"C", of({"x2", "y1"})},
                {"G1", of({"x1", "y2", "z1", "z2"})},
                {"G2", of({"b1", "x1"})},
                {"G3", of({"b2", "y2", "z1", "z2"})}};
    members = {0, 1, 2, 3};
  }
  System s = System::create(std::move(monomers), std::move(polymers));
  return Problem{s, OnTargetSpec::uniform(s.polymer_count(), members)};
}

Problem TranslatorScenario::exact_problem() const {
  if (!spec) {
    throw std::invalid_argument(
        "with-input translator exponents are irrational (1 + log_c 2); the exact levelizer "
        "does not accept them");
  }
  return Problem{system, *spec};
}

TranslatorScenario gen_translator(const TranslatorParams& params, TranslatorMode mode) {
  if (params.N < 2) throw std::invalid_argument("translator redundancy N must be at least 2");
  if (params.layers < 1) throw std::invalid_argument("translator layers must be at least 1");
  const int N = params.N;
  const int n = params.n();
  const bool input = mode == TranslatorMode::with_input;
  auto s = [](int i) { return MonomerId{"s" + std::to_string(i)}; };
  auto b = [](int i) { return MonomerId{"b" + std::to_string(i)}; };

  std::vector<MonomerId> monomers;
  for (int i = input ? 0 : 1; i <= n; ++i) monomers.push_back(s(i));
  for (int i = 1; i <= n; ++i) monomers.push_back(b(i));

  std::vector<NamedPolymer> polymers;
  std::vector<std::size_t> on_target;
  for (int i = 1; i <= n; ++i) {
    on_target.push_back(polymers.size());
    polymers.push_back({"F" + std::to_string(i), Polymer{s(i), b(i)}});
  }
  for (int i = input ? 1 : N + 2; i <= n; ++i) {
    if (input) on_target.push_back(polymers.size());
    polymers.push_back({"W" + std::to_string(i), Polymer{s(i - 1), b(i)}});
  }
  for (int i = input ? 0 : N + 1; i <= n; ++i) {
    if (input) on_target.push_back(polymers.size());
    polymers.push_back({"X" + std::to_string(i), Polymer{s(i)}});
  }
  Polymer g;
  for (int i = 1; i <= N; ++i) g.insert(s(i));
  for (int i = 1; i <= N + 1; ++i) g.insert(b(i));
  polymers.push_back({"G", g});

  TranslatorScenario out;
  out.params = params;
  out.mode = mode;
  out.system = System::create(std::move(monomers), std::move(polymers));
  out.on_target = on_target;
  if (!input) out.spec = OnTargetSpec::uniform(out.system.polymer_count(), on_target);
  return out;
}

LeakBound translator_leak_bound(const TranslatorParams& params, double c, double y) {
  if (!(c > 0 && c < 1)) throw std::domain_error("c must lie in (0, 1)");
  if (!(y > 0)) throw std::domain_error("y must be positive");
  if (!(c - 2 * y > 0)) throw std::domain_error("c - 2y must be positive");
  if (y > c / 4) throw std::domain_error("y must not exceed c/4");
  const auto log_c = [c](double x) { return std::log(x) / std::log(c); };
  LeakBound r;
  r.n = params.n();
  const double n = r.n;
  r.k_beta_lower = n * log_c(2 * c + 2 * y) - (n / 2) * log_c(c - 2 * y);
  r.ratio = r.k_beta_lower / 2;
  r.leak_exponent = r.ratio;
  r.quarter_regime = r.k_beta_lower >= n / 4;
  return r;
}

DomainPolymer parse_domain_polymer(const std::string& text) {
  DomainPolymer p;
  std::stringstream all(text);
  std::string part;
  while (std::getline(all, part, '|')) {
    Strand strand;
    std::istringstream words(part);
    std::string w;
    while (words >> w) {
      DomainToken t;
      if (w.back() == '*') {
        t.star = true;
        w.pop_back();
      }
      if (w.empty()) throw std::invalid_argument("empty domain name");
      t.name = w;
      strand.push_back(t);
    }
    if (!strand.empty()) p.strands.push_back(std::move(strand));
  }
  return p;
}

bool domain_admissible(const DomainPolymer& p) {
  std::map<std::string, long> balance;
  for (const auto& strand : p.strands)
    for (const auto& t : strand) balance[t.name] += t.star ? -1 : 1;
  for (const auto& [name, v] : balance) {
    if (v < 0) return false;
  }
  return true;
}

DomainPolymer translator_fuel_domains(int N, int i) {
  Strand top;
  Strand bottom;
  for (int k = 1; k <= N; ++k) {
    const std::string name = "d" + std::to_string(i) + "_" + std::to_string(k);
    top.push_back({name, false});
    bottom.push_back({name, true});
  }
  return DomainPolymer{{top, bottom}};
}

}  // namespace eqc
