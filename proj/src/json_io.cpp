#include "choicekit/json_io.hpp"

#include <fstream>

#include "choicekit/errors.hpp"

namespace choicekit::io {

namespace {

const json& expect(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string(what) + " needs a '" + key + "' member");
  }
  return j.at(key);
}

int dim_from(const json& j, const char* what) {
  const json& d = expect(j, "dim", what);
  if (!d.is_number_integer() || d.get<int>() <= 0) {
    throw FormatError(std::string(what) + " needs a positive integer 'dim'");
  }
  return d.get<int>();
}

std::vector<Vec> vec_array_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of vectors");
  std::vector<Vec> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(vec_from_json(e));
  return out;
}

json vec_array_to_json(std::span<const Vec> vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_to_json(v));
  return a;
}

}  // namespace

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& c : v.coords()) a.push_back(c.str());
  return a;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw FormatError("a vector must be a nonempty array of rational strings");
  }
  std::vector<Rational> coords;
  coords.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw FormatError("vector coordinates must be rational strings");
    coords.push_back(Rational::parse(e.get<std::string>()));
  }
  return Vec(std::move(coords));
}

json cone_to_json(const Cone& c) {
  return json{{"dim", c.dim()}, {"generators", vec_array_to_json(c.generators())}};
}

Cone cone_from_json(const json& j) {
  const int dim = dim_from(j, "a cone");
  auto gens = vec_array_from_json(expect(j, "generators", "a cone"), "'generators'");
  return Cone::make(std::move(gens), dim);
}

json option_set_to_json(const OptionSet& s) {
  auto piece_to_json = [](const SetPiece& p) {
    return std::visit(
        [](const auto& v) -> json {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FinitePoints>) {
            return json{{"finite", vec_array_to_json(v.points)}};
          } else if constexpr (std::is_same_v<T, PosiHull>) {
            return json{{"posi", vec_array_to_json(v.points)}};
          } else {
            return json{{"openRay", json{{"base", vec_to_json(v.base)},
                                         {"direction", vec_to_json(v.direction)}}}};
          }
        },
        p);
  };
  if (s.pieces().size() == 1) return piece_to_json(s.pieces().front());
  json parts = json::array();
  for (const auto& p : s.pieces()) parts.push_back(piece_to_json(p));
  return json{{"union", parts}};
}

OptionSet option_set_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw FormatError(
        "an option set must be one of {\"finite\": ...}, {\"posi\": ...}, "
        "{\"openRay\": ...}, {\"union\": ...}");
  }
  if (j.contains("finite")) {
    return OptionSet(FinitePoints{vec_array_from_json(j.at("finite"), "'finite'")});
  }
  if (j.contains("posi")) {
    return OptionSet(PosiHull{vec_array_from_json(j.at("posi"), "'posi'")});
  }
  if (j.contains("openRay")) {
    const json& r = j.at("openRay");
    return OptionSet(OpenRay{vec_from_json(expect(r, "base", "an open ray")),
                             vec_from_json(expect(r, "direction", "an open ray"))});
  }
  if (j.contains("union")) {
    const json& parts = j.at("union");
    if (!parts.is_array() || parts.empty()) {
      throw FormatError("'union' must be a nonempty array of option sets");
    }
    std::vector<OptionSet> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(option_set_from_json(p));
    return OptionSet::union_of(std::move(out));
  }
  throw FormatError("unknown option set variant '" + j.begin().key() + "'");
}

std::vector<Vec> finite_points_from_json(const json& j) {
  const OptionSet s = option_set_from_json(j);
  const FinitePoints* fp = s.as_finite();
  if (!fp) throw FormatError("expected a finite option set ({\"finite\": [...]})");
  return fp->points;
}

json rule_to_json(const Rule& r) {
  json premises = json::array();
  for (const auto& p : r.premises) premises.push_back(option_set_to_json(p));
  json conclusion = r.conclusion ? option_set_to_json(*r.conclusion) : json("empty");
  return json{{"premises", premises}, {"conclusion", conclusion}};
}

Rule rule_from_json(const json& j) {
  const json& premises = expect(j, "premises", "a rule");
  if (!premises.is_array()) throw FormatError("'premises' must be an array of option sets");
  Rule r;
  for (const auto& p : premises) r.premises.push_back(option_set_from_json(p));
  const json& conclusion = expect(j, "conclusion", "a rule");
  if (conclusion.is_string() && conclusion.get<std::string>() == "empty") {
    r.conclusion = std::nullopt;
  } else {
    r.conclusion = option_set_from_json(conclusion);
  }
  return r;
}

json rule_set_to_json(const RuleSet& rs) {
  json rules = json::array();
  for (const auto& r : rs.rules) rules.push_back(rule_to_json(r));
  return json{{"dim", rs.dim}, {"rules", rules}};
}

RuleSet rule_set_from_json(const json& j) {
  RuleSet rs;
  rs.dim = dim_from(j, "a rule set");
  const json& rules = expect(j, "rules", "a rule set");
  if (!rules.is_array()) throw FormatError("'rules' must be an array");
  for (const auto& r : rules) rs.rules.push_back(rule_from_json(r));
  for (const auto& r : rs.rules) {
    for (const auto& p : r.premises) {
      if (p.dim() != rs.dim) throw DimensionError("rule premise disagrees with rule set dim");
    }
    if (r.conclusion && r.conclusion->dim() != rs.dim) {
      throw DimensionError("rule conclusion disagrees with rule set dim");
    }
  }
  return rs;
}

json assessment_to_json(const AssessmentFamily& f) {
  json basis = json::array();
  for (const auto& set : f.basis) basis.push_back(vec_array_to_json(set.points));
  return json{{"dim", f.dim}, {"basis", basis}};
}

AssessmentFamily assessment_from_json(const json& j) {
  AssessmentFamily f;
  f.dim = dim_from(j, "an assessment");
  const json& basis = expect(j, "basis", "an assessment");
  if (!basis.is_array()) throw FormatError("'basis' must be an array of vector arrays");
  for (const auto& set : basis) {
    auto points = vec_array_from_json(set, "a basis set");
    if (points.empty()) throw FormatError("a basis set must contain at least one vector");
    for (const auto& u : points) require_dim(u, f.dim, "basis option");
    f.basis.push_back(FinitePoints{sorted_unique(std::move(points))});
  }
  return f;
}

json model_to_json(const std::vector<Cone>& cones) {
  json cs = json::array();
  for (const auto& c : cones) cs.push_back(cone_to_json(c));
  return json{{"cones", cs}};
}

ModelSpec model_from_json(const json& j) {
  if (j.is_object() && j.contains("cones")) {
    const json& cs = j.at("cones");
    if (!cs.is_array() || cs.empty()) {
      throw FormatError("'cones' must be a nonempty array of cones");
    }
    std::vector<Cone> cones;
    cones.reserve(cs.size());
    for (const auto& c : cs) cones.push_back(cone_from_json(c));
    return cones;
  }
  if (j.is_object() && j.contains("assessment")) {
    return assessment_from_json(j.at("assessment"));
  }
  throw FormatError("a model is {\"cones\": [...]} or {\"assessment\": {...}}");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("cannot parse '" + path + "': " + e.what());
  }
}

}  // namespace choicekit::io
