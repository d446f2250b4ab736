#pragma once

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "choicekit/assessments.hpp"
#include "choicekit/cone.hpp"
#include "choicekit/option_set.hpp"
#include "choicekit/rules.hpp"

namespace choicekit::io {

using nlohmann::json;

// Rationals serialize as strings "p/q" (the "/q" omitted when q is 1),
// vectors as arrays of such strings. Every emitter produces canonical,
// re-readable JSON.

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

json cone_to_json(const Cone& c);
/// {"dim": n, "generators": [vector, ...]}; NotBluntError propagates when the
/// generators are not blunt.
Cone cone_from_json(const json& j);

json option_set_to_json(const OptionSet& s);
/// Tagged union: {"finite": [...]}, {"posi": [...]},
/// {"openRay": {"base": ..., "direction": ...}} or {"union": [...]}.
OptionSet option_set_from_json(const json& j);

/// Requires the single-variant {"finite": [...]} form.
std::vector<Vec> finite_points_from_json(const json& j);

json rule_to_json(const Rule& r);
Rule rule_from_json(const json& j);

json rule_set_to_json(const RuleSet& rs);
/// {"dim": n, "rules": [{"premises": [...], "conclusion": ... | "empty"}]}
RuleSet rule_set_from_json(const json& j);

json assessment_to_json(const AssessmentFamily& f);
/// {"dim": n, "basis": [[vector, ...], ...]}
AssessmentFamily assessment_from_json(const json& j);

using ModelSpec = std::variant<std::vector<Cone>, AssessmentFamily>;
json model_to_json(const std::vector<Cone>& cones);
/// {"cones": [cone, ...]} or {"assessment": {...}}
ModelSpec model_from_json(const json& j);

/// Reads and parses a JSON file; throws FormatError on IO or syntax errors.
json load_json_file(const std::string& path);

}  // namespace choicekit::io
