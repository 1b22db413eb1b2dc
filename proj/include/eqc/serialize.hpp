#pragma once

#include <json.hpp>

#include "eqc/bounds.hpp"
#include "eqc/hilbert.hpp"
#include "eqc/levelize.hpp"
#include "eqc/model.hpp"
#include "eqc/scenarios.hpp"
#include "eqc/verify.hpp"

namespace eqc {

using Json = nlohmann::ordered_json;

/// Rationals serialize as "num/den" strings, reactions in rendered net form.
Json to_json(const Rational& r);
Json to_json(const System& system, const ReactionVec& v);
Json to_json(const System& system, const GeneratingSet& basis);
Json to_json(const System& system, const ValidationReport& report);
Json to_json(const System& system, const StabilityReport& report);
Json to_json(const System& system, const LevelAssignment& assignment);
Json to_json(const System& system, const BoundReport& report);
Json to_json(const System& system, const TbnReport& report);
Json to_json(const System& system, const EquilibriumCertificate& cert);
Json to_json(const LeakBound& bound);
Json scenario_metadata(const TranslatorScenario& scenario);

}  // namespace eqc
