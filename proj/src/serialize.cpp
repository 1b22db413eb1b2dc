#include "eqc/serialize.hpp"

namespace eqc {

namespace {

template <typename T>
Json optional_or_null(const std::optional<T>& v) {
  return v ? Json(to_json(*v)) : Json(nullptr);
}

Json reaction_or_null(const System& system, const std::optional<ReactionVec>& v) {
  return v ? to_json(system, *v) : Json(nullptr);
}

Json names(const System& system, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (auto j : idx) out.push_back(system.polymer_name(j));
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const System& system, const ReactionVec& v) { return v.render(system); }

Json to_json(const System& system, const GeneratingSet& basis) {
  Json arr = Json::array();
  for (const auto& h : basis) {
    Json e;
    e["reaction"] = h.render(system);
    e["vector"] = h.net();
    arr.push_back(std::move(e));
  }
  Json out;
  out["polymers"] = Json::array();
  for (std::size_t j = 0; j < system.polymer_count(); ++j) out["polymers"].push_back(system.polymer_name(j));
  out["basis"] = std::move(arr);
  return out;
}

Json to_json(const System& system, const ValidationReport& report) {
  Json out;
  out["pass"] = report.pass();
  out["producible"] = report.producible;
  out["unproducible"] = names(system, report.unproducible);
  out["balanced"] = report.balanced;
  out["violating_reaction"] = nullptr;
  if (report.violating_reaction) {
    const auto& w = *report.violating_reaction;
    out["violating_reaction"] = ReactionVec(system.conservation(), w).render(system);
  }
  return out;
}

Json to_json(const System& system, const StabilityReport& report) {
  Json out;
  out["stable"] = report.stable;
  out["min_ratio"] = optional_or_null(report.min_ratio);
  out["witness"] = reaction_or_null(system, report.witness);
  return out;
}

Json to_json(const System& system, const LevelAssignment& assignment) {
  Json levels = Json::array();
  for (const auto& l : assignment.levels()) {
    Json e;
    e["i"] = l.index;
    e["mu"] = l.mu.to_string();
    e["members"] = names(system, l.members);
    Json reactions = Json::array();
    for (const auto& r : l.levelizing) reactions.push_back(r.render(system));
    e["reactions"] = std::move(reactions);
    levels.push_back(std::move(e));
  }
  Json mu = Json::object();
  for (std::size_t j = 0; j < system.polymer_count(); ++j) {
    const auto& m = assignment.mu_bar(j);
    mu[system.polymer_name(j)] = m ? Json(m->to_string()) : Json(nullptr);
  }
  Json out;
  out["levels"] = std::move(levels);
  out["extended_mu"] = std::move(mu);
  return out;
}

Json to_json(const System& system, const BoundReport& report) {
  Json out;
  out["polymer"] = system.polymer_name(report.polymer);
  out["level"] = report.level_context;
  out["method"] = to_string(report.method);
  out["value"] = report.value.to_string();
  out["certified"] = report.certified_lower_bound_on_mu_bar;
  out["witness"] = reaction_or_null(system, report.witness);
  return out;
}

Json to_json(const System& system, const TbnReport& report) {
  Json out;
  out["closed"] = report.closed;
  out["min_entropy_loss"] =
      report.min_entropy_loss ? Json(*report.min_entropy_loss) : Json(nullptr);
  out["worst_ratio"] = optional_or_null(report.worst_ratio);
  out["mu1"] = optional_or_null(report.mu1);
  out["witness"] = reaction_or_null(system, report.witness);
  return out;
}

Json to_json(const System& system, const EquilibriumCertificate& cert) {
  Json out;
  out["pass"] = cert.pass();
  out["in_rowspace"] = cert.in_rowspace;
  out["lambda"] = nullptr;
  if (cert.lambda) {
    Json lam = Json::object();
    for (std::size_t i = 0; i < cert.lambda->size(); ++i) {
      lam[system.monomers()[i].name] = (*cert.lambda)[i].to_string();
    }
    out["lambda"] = std::move(lam);
  }
  out["basis_rank"] = cert.basis_rank;
  out["kernel_rank"] = cert.kernel_rank;
  out["basis_spans_kernel"] = cert.basis_spans_kernel();
  Json nonzero = Json::array();
  for (const auto& r : cert.residual) {
    if (!r.is_zero()) nonzero.push_back(r.to_string());
  }
  out["nonzero_residuals"] = std::move(nonzero);
  return out;
}

Json to_json(const LeakBound& bound) {
  Json out;
  out["n"] = bound.n;
  out["k_beta_lower"] = bound.k_beta_lower;
  out["ratio"] = bound.ratio;
  out["leak_exponent"] = bound.leak_exponent;
  out["quarter_regime"] = bound.quarter_regime;
  return out;
}

Json scenario_metadata(const TranslatorScenario& scenario) {
  Json out;
  out["scenario"] = "translator";
  out["N"] = scenario.params.N;
  out["layers"] = scenario.params.layers;
  out["n"] = scenario.params.n();
  out["mode"] = scenario.mode == TranslatorMode::uniform ? "uniform" : "with-input";
  out["on_target"] = names(scenario.system, scenario.on_target);
  return out;
}

}  // namespace eqc
