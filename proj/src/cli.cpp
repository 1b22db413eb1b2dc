#include "eqc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "eqc/bounds.hpp"
#include "eqc/hilbert.hpp"
#include "eqc/levelize.hpp"
#include "eqc/model.hpp"
#include "eqc/scenarios.hpp"
#include "eqc/serialize.hpp"
#include "eqc/verify.hpp"

namespace eqc {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Nonzero exit with the message already written.
struct Exit {
  int code;
};

// "p/q", integers, decimals and scientific notation, all exact.
Rational parse_exact_number(const std::string& text) {
  if (text.find('/') != std::string::npos) return Rational::parse(text);
  std::string mantissa = text;
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    try {
      exponent = std::stol(text.substr(e + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed number '" + text + "'");
    }
  }
  if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  if (mantissa.empty() || mantissa == "-" || mantissa == "+") {
    throw std::invalid_argument("malformed number '" + text + "'");
  }
  if (mantissa[0] == '+') mantissa.erase(0, 1);
  Rational r = Rational::parse(mantissa);
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  return exponent >= 0 ? r * Rational(p, BigInt(1)) : r / Rational(p, BigInt(1));
}

Rational parse_base(const std::string& text) {
  Rational c;
  try {
    c = parse_exact_number(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--base: ") + e.what());
  }
  if (!(Rational(0) < c && c < Rational(1))) throw UsageError("--base must lie in (0, 1)");
  return c;
}

struct Common {
  std::string input;
  bool json = false;
  long budget = -1;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

HilbertBudget basis_budget(const Common& common) {
  HilbertBudget b;
  if (common.budget > 0) {
    b.max_vectors = static_cast<std::size_t>(common.budget);
  } else if (const char* env = std::getenv("EQC_BASIS_BUDGET"); env && *env) {
    try {
      const long v = std::stol(env);
      if (v <= 0) throw std::invalid_argument("nonpositive");
      b.max_vectors = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("EQC_BASIS_BUDGET is not a positive integer: ") + env);
    }
  }
  return b;
}

Problem load(const Common& common, Context& ctx) {
  std::string text;
  if (common.input == "-") {
    std::ostringstream ss;
    ss << ctx.in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(common.input);
    if (!f) throw UsageError("cannot open '" + common.input + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  return parse_problem(text);
}

void emit(Context& ctx, const Json& j) { ctx.out << j.dump(2) << "\n"; }

std::string opt(const std::optional<Rational>& r) { return r ? r->to_string() : "none"; }

// Basis plus on-target validation; exits 1 with the report on failure.
GeneratingSet validated_basis(const Problem& p, const Common& common, Context& ctx) {
  GeneratingSet basis = canonical_basis(p.system, p.spec, basis_budget(common));
  const auto report = check_on_target(p.system, p.spec, basis.vectors);
  if (!report.pass()) {
    ctx.err << "on-target check failed\n";
    if (common.json) {
      Json j;
      j["on_target"] = to_json(p.system, report);
      emit(ctx, j);
    } else {
      for (auto j : report.unproducible) ctx.out << "unproducible: " << p.system.polymer_name(j) << "\n";
      if (report.violating_reaction) {
        ctx.out << "unbalanced within-S reaction: "
                << ReactionVec(p.system.conservation(), *report.violating_reaction).render(p.system)
                << "\n";
      }
    }
    throw Exit{kValidationFailure};
  }
  return basis;
}

int cmd_check(const Common& common, Context& ctx) {
  const Problem p = load(common, ctx);
  const GeneratingSet basis = canonical_basis(p.system, p.spec, basis_budget(common));
  const auto report = check_on_target(p.system, p.spec, basis.vectors);
  const auto stability = check_stable(p.spec, basis);
  if (common.json) {
    Json j;
    j["on_target"] = to_json(p.system, report);
    j["stability"] = to_json(p.system, stability);
    emit(ctx, j);
  } else {
    ctx.out << "on-target: " << (report.pass() ? "PASS" : "FAIL") << "\n";
    for (auto j : report.unproducible) ctx.out << "  unproducible: " << p.system.polymer_name(j) << "\n";
    if (report.violating_reaction) {
      ctx.out << "  unbalanced within-S reaction: "
              << ReactionVec(p.system.conservation(), *report.violating_reaction).render(p.system)
              << "\n";
    }
    ctx.out << "stable: " << (stability.stable ? "yes" : "no") << "  min ratio: " << opt(stability.min_ratio);
    if (stability.witness) ctx.out << "  (" << stability.witness->render(p.system) << ")";
    ctx.out << "\n";
  }
  return report.pass() ? kOk : kValidationFailure;
}

int cmd_hilbert(const Common& common, Context& ctx) {
  const Problem p = load(common, ctx);
  const GeneratingSet basis = canonical_basis(p.system, p.spec, basis_budget(common));
  if (common.json) {
    emit(ctx, to_json(p.system, basis));
  } else {
    ctx.out << dump_basis(p.system, basis);
  }
  return kOk;
}

LevelAssignment levelize_checked(const Problem& p, const GeneratingSet& basis, const Common& common,
                                 Context& ctx) {
  LevelAssignment a = levelize(p.system, p.spec, basis);
  for (std::size_t j = 0; j < p.system.polymer_count(); ++j) {
    if (!p.spec.contains(j) && !(*a.mu_bar(j) > Rational(1))) {
      ctx.err << "off-target polymer " << p.system.polymer_name(j) << " has exponent "
              << *a.mu_bar(j) << " <= 1; the on-target set is not stable\n";
      const auto stability = check_stable(p.spec, basis);
      if (common.json) {
        Json j;
        j["stability"] = to_json(p.system, stability);
        j["assignment"] = to_json(p.system, a);
        emit(ctx, j);
      } else {
        ctx.out << "stable: no  min ratio: " << opt(stability.min_ratio) << "\n";
      }
      throw Exit{kValidationFailure};
    }
  }
  return a;
}

int cmd_levelize(const Common& common, Context& ctx) {
  const Problem p = load(common, ctx);
  const GeneratingSet basis = validated_basis(p, common, ctx);
  const LevelAssignment a = levelize_checked(p, basis, common, ctx);
  if (common.json) {
    emit(ctx, to_json(p.system, a));
    return kOk;
  }
  for (const auto& l : a.levels()) {
    ctx.out << "level " << l.index << "  mu = " << l.mu << "  members:";
    for (auto j : l.members) ctx.out << " " << p.system.polymer_name(j);
    ctx.out << "\n";
    for (const auto& r : l.levelizing) ctx.out << "    " << r.render(p.system) << "\n";
  }
  for (std::size_t j = 0; j < p.system.polymer_count(); ++j) {
    ctx.out << p.system.polymer_name(j) << " " << *a.mu_bar(j) << "\n";
  }
  return kOk;
}

struct BoundArgs {
  std::string polymer;
  std::string method = "lp";
  std::size_t k = 4;
  std::size_t level = 1;
  bool tbn = false;
};

int cmd_bound(const Common& common, const BoundArgs& args, Context& ctx) {
  const Problem p = load(common, ctx);
  if (args.tbn) {
    const GeneratingSet basis = canonical_basis(p.system, p.spec, basis_budget(common));
    const auto report = tbn_bound(p.spec, basis);
    if (common.json) {
      emit(ctx, to_json(p.system, report));
    } else {
      ctx.out << "closed: " << (report.closed ? "yes" : "no") << "\n";
      ctx.out << "min entropy loss: "
              << (report.min_entropy_loss ? std::to_string(*report.min_entropy_loss) : "none") << "\n";
      ctx.out << "worst e/l: " << opt(report.worst_ratio) << "\n";
      ctx.out << "mu1 = " << opt(report.mu1) << "\n";
      if (report.witness) ctx.out << "witness: " << report.witness->render(p.system) << "\n";
    }
    return report.closed ? kOk : kValidationFailure;
  }

  BoundMethod method;
  try {
    method = parse_bound_method(args.method);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (args.level < 1) throw UsageError("--level must be at least 1");
  const GeneratingSet basis = validated_basis(p, common, ctx);
  LevelAssignment partial = LevelAssignment::initial(p.spec);
  if (args.level > 1) {
    partial = levelize(p.system, p.spec, basis).truncated(args.level - 1);
  }
  std::vector<std::size_t> targets;
  if (!args.polymer.empty()) {
    const auto j = p.system.find_polymer(args.polymer);
    if (!j) throw UsageError("unknown polymer '" + args.polymer + "'");
    if (partial.is_assigned(*j)) {
      throw UsageError("polymer '" + args.polymer + "' is already assigned at level " +
                       std::to_string(args.level));
    }
    targets.push_back(*j);
  } else {
    for (std::size_t j = 0; j < p.system.polymer_count(); ++j) {
      if (!partial.is_assigned(j)) targets.push_back(j);
    }
  }
  BoundOptions options;
  options.enum_max_size = args.k;
  Json reports = Json::array();
  for (auto j : targets) {
    const auto r = per_polymer_bound(p.system, p.spec, j, partial, basis, method, options);
    if (common.json) {
      reports.push_back(to_json(p.system, r));
    } else {
      ctx.out << p.system.polymer_name(j) << "  level " << r.level_context << "  " << to_string(r.method)
              << " = " << r.value << (r.certified_lower_bound_on_mu_bar ? "  certified" : "  estimate");
      if (r.witness) ctx.out << "  (" << r.witness->render(p.system) << ")";
      ctx.out << "\n";
    }
  }
  if (common.json) emit(ctx, args.polymer.empty() ? reports : reports.at(0));
  return kOk;
}

int cmd_concentrations(const Common& common, const std::string& base, unsigned digits, Context& ctx) {
  const Rational c = parse_base(base);
  const Problem p = load(common, ctx);
  const GeneratingSet basis = validated_basis(p, common, ctx);
  const LevelAssignment a = levelize_checked(p, basis, common, ctx);
  const Concentrations conc = concentrations(p.system, a, c, digits);
  if (common.json) {
    Json j;
    j["base"] = c.to_string();
    Json poly = Json::object();
    for (std::size_t k = 0; k < conc.polymer.size(); ++k) {
      Json e;
      e["mu"] = a.mu_bar(k)->to_string();
      e["concentration"] = conc.polymer[k].to_string();
      poly[p.system.polymer_name(k)] = std::move(e);
    }
    j["polymers"] = std::move(poly);
    Json mono = Json::object();
    for (std::size_t i = 0; i < conc.monomer.size(); ++i) {
      mono[p.system.monomers()[i].name] = conc.monomer[i].to_string();
    }
    j["monomers"] = std::move(mono);
    emit(ctx, j);
  } else {
    for (std::size_t k = 0; k < conc.polymer.size(); ++k) {
      ctx.out << p.system.polymer_name(k) << "  mu=" << *a.mu_bar(k) << "  " << conc.polymer[k].to_string()
              << "\n";
    }
    for (std::size_t i = 0; i < conc.monomer.size(); ++i) {
      ctx.out << "monomer " << p.system.monomers()[i].name << "  " << conc.monomer[i].to_string() << "\n";
    }
  }
  return kOk;
}

struct VerifyArgs {
  bool numeric = false;
  double tol = 1e-6;
  std::string base = "1/100";
  unsigned digits = 0;  // 0: double precision
  std::size_t max_iter = 500;
};

int cmd_verify(const Common& common, const VerifyArgs& args, Context& ctx) {
  const Rational c = parse_base(args.base);
  if (!(args.tol > 0)) throw UsageError("--tol must be positive");
  const Problem p = load(common, ctx);
  const GeneratingSet basis = validated_basis(p, common, ctx);
  const LevelAssignment a = levelize(p.system, p.spec, basis);
  const auto cert = check_balance(p.system, a, basis);
  bool pass = cert.pass();

  Json numeric = nullptr;
  std::vector<double> deviation;
  if (args.numeric) {
    const unsigned digits = std::max(50u, args.digits);
    const Concentrations expected = concentrations(p.system, a, c, digits);
    if (args.digits == 0) {
      std::vector<double> x0;
      for (const auto& v : expected.monomer) x0.push_back(v.to_double());
      if (std::any_of(x0.begin(), x0.end(), [](double v) { return !(v > 1e-290); })) {
        throw UsageError("monomer concentrations underflow double precision; use --digits");
      }
      const auto res = numeric_equilibrium(p.system, x0, std::max(args.tol * 1e-3, 1e-13), args.max_iter);
      for (std::size_t j = 0; j < res.x.size(); ++j) {
        const double want = expected.polymer[j].to_double();
        deviation.push_back(std::fabs(res.x[j] - want) / want);
      }
    } else {
      const HighFloat tol = HighFloat(args.tol, digits) * HighFloat(1e-3, digits);
      const auto res = numeric_equilibrium(p.system, expected.monomer, tol, digits, args.max_iter);
      for (std::size_t j = 0; j < res.x.size(); ++j) {
        deviation.push_back(((res.x[j] - expected.polymer[j]) / expected.polymer[j]).abs().to_double());
      }
    }
    const double worst = deviation.empty() ? 0.0 : *std::max_element(deviation.begin(), deviation.end());
    pass = pass && worst <= args.tol;
    numeric = Json::object();
    numeric["base"] = c.to_string();
    numeric["tol"] = args.tol;
    numeric["max_relative_deviation"] = worst;
    Json per = Json::object();
    for (std::size_t j = 0; j < deviation.size(); ++j) per[p.system.polymer_name(j)] = deviation[j];
    numeric["relative_deviation"] = std::move(per);
  }

  Json j;
  j["result"] = pass ? "PASS" : "FAIL";
  j["certificate"] = to_json(p.system, cert);
  j["numeric"] = numeric;
  if (common.json) {
    emit(ctx, j);
  } else {
    const Json& cj = j["certificate"];
    ctx.out << (pass ? "PASS" : "FAIL") << "\n";
    ctx.out << "row space: " << (cert.in_rowspace ? "yes" : "no");
    if (cj.contains("lambda")) {
      ctx.out << "  lambda:";
      for (const auto& [name, value] : cj["lambda"].items()) ctx.out << " " << name << "=" << value.get<std::string>();
    }
    ctx.out << "\nbasis rank " << cert.basis_rank << ", kernel rank " << cert.kernel_rank << "\n";
    ctx.out << "nonzero residuals: " << cj["nonzero_residuals"].size() << "\n";
    if (args.numeric) {
      ctx.out << "numeric at c = " << c << ", relative deviation per polymer:\n";
      for (std::size_t k = 0; k < deviation.size(); ++k) {
        ctx.out << "  " << p.system.polymer_name(k) << "  " << std::scientific << std::setprecision(3)
                << deviation[k] << "\n";
      }
    }
  }
  return pass ? kOk : kValidationFailure;
}

struct GenArgs {
  std::string inputs = "none";
  int n = 3;
  int layers = 2;
  std::string mode = "uniform";
  double c = 0.0064;
  double y = -1;
  std::string out_path;
};

int write_generated(const std::string& system_text, const Json& meta, const GenArgs& args,
                    const Common& common, Context& ctx) {
  if (!args.out_path.empty()) {
    std::ofstream f(args.out_path);
    std::ofstream s(args.out_path + ".json");
    if (!f || !s) throw UsageError("cannot write '" + args.out_path + "'");
    f << system_text;
    s << meta.dump(2) << "\n";
    return kOk;
  }
  if (common.json) {
    Json j = meta;
    j["system"] = system_text;
    emit(ctx, j);
  } else {
    ctx.out << system_text;
  }
  return kOk;
}

int cmd_gen(const std::string& which, const GenArgs& args, const Common& common, Context& ctx) {
  if (which == "example51") {
    const Problem p = gen_example_51();
    Json meta;
    meta["scenario"] = "example51";
    return write_generated(render_problem(p.system, p.spec), meta, args, common, ctx);
  }
  if (which == "and-gate") {
    AndGateInputs inputs;
    if (args.inputs == "none") inputs = AndGateInputs::none;
    else if (args.inputs == "b" || args.inputs == "b_only") inputs = AndGateInputs::b_only;
    else throw UsageError("--inputs must be none or b");
    const Problem p = gen_and_gate(inputs);
    Json meta;
    meta["scenario"] = "and-gate";
    meta["inputs"] = inputs == AndGateInputs::none ? "none" : "b";
    return write_generated(render_problem(p.system, p.spec), meta, args, common, ctx);
  }
  // translator
  TranslatorMode mode;
  if (args.mode == "uniform") mode = TranslatorMode::uniform;
  else if (args.mode == "with-input" || args.mode == "with_input") mode = TranslatorMode::with_input;
  else throw UsageError("--mode must be uniform or with-input");
  TranslatorScenario s;
  try {
    s = gen_translator({args.n, args.layers}, mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json meta = scenario_metadata(s);
  std::string text;
  if (s.spec) {
    text = render_problem(s.system, *s.spec);
  } else {
    const double y = args.y > 0 ? args.y : args.c / 4;
    LeakBound bound;
    try {
      bound = translator_leak_bound(s.params, args.c, y);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
    Json exps;
    exps["F"] = 1 + std::log(2.0) / std::log(args.c);
    exps["W"] = 1.0;
    meta["c"] = args.c;
    meta["y"] = y;
    meta["exponents"] = std::move(exps);
    meta["leak_bound"] = to_json(bound);
    text = "# with-input translator: fuel exponents 1 + log_c 2 are irrational, see the sidecar\n" +
           render_system(s.system);
  }
  return write_generated(text, meta, args, common, ctx);
}

int cmd_oracle(const Common& common, std::size_t max_reactants, Context& ctx) {
  const Problem p = load(common, ctx);
  const auto reactions = enumerate_canonical(p.system, p.spec, max_reactants);
  const LevelAssignment initial = LevelAssignment::initial(p.spec);
  std::optional<Rational> best;
  std::optional<ReactionVec> witness;
  for (const auto& r : reactions) {
    const auto kl = imbalance_novelty(r, initial);
    if (kl.l == 0) continue;
    const Rational ratio = kl.k / Rational(kl.l);
    if (!best || ratio < *best) {
      best = ratio;
      witness = r;
    }
  }
  if (common.json) {
    Json j;
    j["max_reactants"] = max_reactants;
    Json arr = Json::array();
    for (const auto& r : reactions) arr.push_back(r.render(p.system));
    j["reactions"] = std::move(arr);
    j["min_ratio"] = best ? Json(best->to_string()) : Json(nullptr);
    j["witness"] = witness ? Json(witness->render(p.system)) : Json(nullptr);
    emit(ctx, j);
  } else {
    for (const auto& r : reactions) ctx.out << r.render(p.system) << "\n";
    ctx.out << "min k/l: " << opt(best);
    if (witness) ctx.out << "  (" << witness->render(p.system) << ")";
    ctx.out << "\n";
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Detailed-balance equilibrium solver for monomer/polymer systems", "eqc"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_flag("--json", common.json, "Machine-readable JSON output");
  app.add_option("--budget", common.budget, "Hilbert completion vector cap (env EQC_BASIS_BUDGET)");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", common.input, "System file, or - for standard input")->required();
  };

  auto* check = app.add_subcommand("check", "Validate the on-target set and report stability");
  add_input(check);
  auto* hilbert = app.add_subcommand("hilbert", "Print the canonical-reaction generating set");
  add_input(hilbert);
  auto* lev = app.add_subcommand("levelize", "Compute level sets and extended exponents");
  add_input(lev);

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "Per-polymer exponent bounds or the TBN bound");
  add_input(bound);
  bound->add_option("--polymer", bound_args.polymer, "Polymer to bound (default: all unassigned)");
  bound->add_option("--method", bound_args.method, "basis | lp | enum")->capture_default_str();
  bound->add_option("--k", bound_args.k, "Combination size for enum")->capture_default_str();
  bound->add_option("--level", bound_args.level, "Level context i")->capture_default_str();
  bound->add_flag("--tbn", bound_args.tbn, "TBN closure and mu1 = min e/l + 1");

  std::string conc_base = "1/100";
  unsigned conc_digits = 50;
  auto* conc = app.add_subcommand("concentrations", "Polymer and monomer concentrations c^mu");
  add_input(conc);
  conc->add_option("--base", conc_base, "Base concentration c in (0,1)")->capture_default_str();
  conc->add_option("--digits", conc_digits, "Significant decimal digits")->capture_default_str();

  VerifyArgs verify_args;
  auto* ver = app.add_subcommand("verify", "Exact balance certificate and numeric equilibrium");
  add_input(ver);
  ver->add_flag("--numeric", verify_args.numeric, "Also solve for the equilibrium numerically");
  ver->add_option("--tol", verify_args.tol, "Relative tolerance")->capture_default_str();
  ver->add_option("--base", verify_args.base, "Base concentration c in (0,1)")->capture_default_str();
  ver->add_option("--digits", verify_args.digits, "Use multiple precision with this many digits");
  ver->add_option("--max-iter", verify_args.max_iter, "Newton iteration cap")->capture_default_str();

  GenArgs gen_args;
  std::string which;
  auto* gen = app.add_subcommand("gen", "Generate a scenario system file");
  gen->add_option("scenario", which, "example51 | and-gate | translator")
      ->required()
      ->check(CLI::IsMember({"example51", "and-gate", "translator"}));
  gen->add_option("--inputs", gen_args.inputs, "and-gate inputs: none | b")->capture_default_str();
  gen->add_option("--n", gen_args.n, "Translator redundancy N")->capture_default_str();
  gen->add_option("--layers", gen_args.layers, "Composed translators")->capture_default_str();
  gen->add_option("--mode", gen_args.mode, "uniform | with-input")->capture_default_str();
  gen->add_option("--c", gen_args.c, "with-input base concentration")->capture_default_str();
  gen->add_option("--y", gen_args.y, "with-input output concentration (default c/4)");
  gen->add_option("--out", gen_args.out_path, "Write the system here and metadata to <out>.json");

  std::size_t max_reactants = 6;
  auto* oracle = app.add_subcommand("oracle", "Brute-force canonical reaction enumeration");
  add_input(oracle);
  oracle->add_option("--max-reactants", max_reactants, "Reactant multiset size bound")
      ->capture_default_str();

  std::vector<std::string> argv_store{"eqc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(common, ctx);
    if (*hilbert) return cmd_hilbert(common, ctx);
    if (*lev) return cmd_levelize(common, ctx);
    if (*bound) return cmd_bound(common, bound_args, ctx);
    if (*conc) return cmd_concentrations(common, conc_base, conc_digits, ctx);
    if (*ver) return cmd_verify(common, verify_args, ctx);
    if (*gen) return cmd_gen(which, gen_args, common, ctx);
    if (*oracle) return cmd_oracle(common, max_reactants, ctx);
  } catch (const Exit& e) {
    return e.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const NotProducibleError& e) {
    err << "validation: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const NonConvergenceError& e) {
    err << "numeric solver: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const ModelError& e) {
    err << "model error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
  return kUsage;
}

}  // namespace eqc
