#include "choicekit/rules.hpp"

#include <algorithm>

#include "choicekit/errors.hpp"
#include "choicekit/linear.hpp"

namespace choicekit {

namespace {

bool finite_points_meet(const FinitePoints& fp, const Cone& d) {
  return std::any_of(fp.points.begin(), fp.points.end(),
                     [&d](const Vec& u) { return d.contains(u); });
}

// Joint system over hull coefficients mu and cone coefficients lambda:
// sum mu_i b_i = sum lambda_j g_j with mu on the unit simplex. The common
// point is a member only if it can be nonzero, which the per-coordinate
// extreme-value programs decide.
bool posi_hull_meets(const PosiHull& hull, const Cone& d) {
  const int dim = d.dim();
  const std::size_t k = hull.points.size();
  const std::size_t m = d.generators().size();

  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(dim) + 1,
                                       std::vector<Rational>(k + m));
  for (std::size_t i = 0; i < k; ++i) {
    require_dim(hull.points[i], dim, "hull point");
    for (int r = 0; r < dim; ++r) {
      a[static_cast<std::size_t>(r)][i] = hull.points[i][static_cast<std::size_t>(r)];
    }
    a[static_cast<std::size_t>(dim)][i] = Rational(1);
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (int r = 0; r < dim; ++r) {
      a[static_cast<std::size_t>(r)][k + j] = -d.generators()[j][static_cast<std::size_t>(r)];
    }
  }
  std::vector<Rational> b(static_cast<std::size_t>(dim) + 1);
  b[static_cast<std::size_t>(dim)] = Rational(1);

  if (lp_maximize(a, b, std::vector<Rational>(k + m)).status == LpStatus::infeasible) {
    return false;
  }

  for (int r = 0; r < dim; ++r) {
    std::vector<Rational> c(k + m);
    for (std::size_t i = 0; i < k; ++i) c[i] = hull.points[i][static_cast<std::size_t>(r)];
    const LpResult hi = lp_maximize(a, b, c);
    if (hi.status != LpStatus::optimal) throw Error("hull coordinate program must be bounded");
    if (hi.objective.sign() > 0) return true;
    for (auto& v : c) v = -v;
    const LpResult lo = lp_maximize(a, b, c);
    if (lo.status != LpStatus::optimal) throw Error("hull coordinate program must be bounded");
    if (lo.objective.sign() > 0) return true;
  }
  return false;  // the hull touches the cone's span at the origin only
}

bool open_ray_meets(const OpenRay& ray, const Cone& d) {
  require_dim(ray.base, d.dim(), "ray base");
  const RaySup sup = sup_ray_parameter(d.generators(), ray.base, ray.direction);
  if (std::holds_alternative<RayInfeasible>(sup)) return false;
  if (std::holds_alternative<RayUnbounded>(sup)) return true;

  const Rational& top = std::get<RayBounded>(sup).value;
  if (top.sign() <= 0) return false;
  const Vec attained = ray.base + top * ray.direction;
  if (!attained.is_zero()) return true;

  // The supremum is attained at the origin itself (base antiparallel to the
  // direction). Any parameter strictly between the infimum and the supremum
  // yields a nonzero feasible point, so the set meets the cone iff the
  // feasible interval is longer than a point.
  const RaySup inf = inf_ray_parameter(d.generators(), ray.base, ray.direction);
  return std::get<RayBounded>(inf).value < top;
}

bool piece_meets(const SetPiece& p, const Cone& d) {
  return std::visit(
      [&d](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FinitePoints>) return finite_points_meet(v, d);
        if constexpr (std::is_same_v<T, PosiHull>) return posi_hull_meets(v, d);
        if constexpr (std::is_same_v<T, OpenRay>) return open_ray_meets(v, d);
      },
      p);
}

}  // namespace

bool optset_meets_cone(const OptionSet& s, const Cone& d) {
  if (s.dim() != d.dim()) throw DimensionError("option set and cone disagree on dimension");
  return std::any_of(s.pieces().begin(), s.pieces().end(),
                     [&d](const SetPiece& p) { return piece_meets(p, d); });
}

RuleCheck d_compatible(const Cone& d, const RuleSet& rules) {
  for (std::size_t i = 0; i < rules.rules.size(); ++i) {
    const Rule& r = rules.rules[i];
    const bool premises_met =
        std::all_of(r.premises.begin(), r.premises.end(),
                    [&d](const OptionSet& p) { return optset_meets_cone(p, d); });
    if (!premises_met) continue;
    if (!r.conclusion || !optset_meets_cone(*r.conclusion, d)) {
      return {false, i};
    }
  }
  return {true, std::nullopt};
}

Rule monotonify_rule(const Rule& r, const FinitePoints& extra) {
  if (r.premises.empty()) {
    throw PremiseFreeError("monotonification needs at least one premise");
  }
  Rule out;
  out.premises.reserve(r.premises.size());
  for (const auto& p : r.premises) out.premises.push_back(p.with_points_added(extra));
  out.conclusion =
      r.conclusion ? r.conclusion->with_points_added(extra) : OptionSet(extra);
  return out;
}

RuleSet monotonify(const RuleSet& rules, const FinitePoints& extra) {
  RuleSet out{rules.dim, rules.rules};
  for (const auto& r : rules.rules) {
    if (!r.premises.empty()) out.rules.push_back(monotonify_rule(r, extra));
  }
  return out;
}

Scheme scheme_from_name(std::string_view name) {
  if (name == "coherence") return Scheme::coherence;
  if (name == "totality") return Scheme::totality;
  if (name == "weak") return Scheme::weak;
  if (name == "weak2") return Scheme::weak2;
  if (name == "mixing") return Scheme::mixing;
  if (name == "archimedean") return Scheme::archimedean;
  throw UnknownSchemeError("unknown rule scheme: '" + std::string(name) + "'");
}

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::coherence: return "coherence";
    case Scheme::totality: return "totality";
    case Scheme::weak: return "weak";
    case Scheme::weak2: return "weak2";
    case Scheme::mixing: return "mixing";
    case Scheme::archimedean: return "archimedean";
  }
  throw UnknownSchemeError("unknown rule scheme");
}

namespace {

bool uniformly_positive(const Vec& u, CoherenceVariant variant) {
  if (variant == CoherenceVariant::strict_positive) {
    return std::all_of(u.coords().begin(), u.coords().end(),
                       [](const Rational& r) { return r.sign() > 0; });
  }
  return !u.is_zero() && std::all_of(u.coords().begin(), u.coords().end(),
                                     [](const Rational& r) { return r.sign() >= 0; });
}

}  // namespace

RuleSet instantiate_scheme(Scheme s, const SchemeParams& params, int dim) {
  RuleSet out{dim, {}};
  switch (s) {
    case Scheme::coherence:
      for (const auto& u : params.probes) {
        require_dim(u, dim, "coherence probe");
        if (!uniformly_positive(u, params.variant)) {
          throw InvalidProbeError("coherence probe " + u.str() + " is not uniformly positive");
        }
        out.rules.push_back({{}, OptionSet(FinitePoints{{u}})});
      }
      break;
    case Scheme::totality:
      for (const auto& u : params.probes) {
        require_dim(u, dim, "totality probe");
        if (u.is_zero()) throw InvalidProbeError("totality probe must be nonzero");
        out.rules.push_back({{}, OptionSet(FinitePoints{{u, -u}})});
      }
      break;
    case Scheme::weak:
      for (const auto& [u, v] : params.pairs) {
        require_dim(u, dim, "weak-order probe");
        require_dim(v, dim, "weak-order probe");
        out.rules.push_back({{OptionSet(FinitePoints{{u + v, -(u + v)}})},
                             OptionSet(FinitePoints{{u, -u, v, -v}})});
      }
      break;
    case Scheme::weak2:
      for (const auto& [u, v] : params.pairs) {
        require_dim(u, dim, "weak-order probe");
        require_dim(v, dim, "weak-order probe");
        out.rules.push_back({{OptionSet(FinitePoints{{u + v}})},
                             OptionSet(FinitePoints{{u, v}})});
      }
      break;
    case Scheme::mixing:
      for (const auto& pts : params.finite_sets) {
        if (pts.empty()) throw InvalidProbeError("mixing probe set must be nonempty");
        for (const auto& u : pts) require_dim(u, dim, "mixing probe");
        out.rules.push_back({{OptionSet(PosiHull{pts})}, OptionSet(FinitePoints{pts})});
      }
      break;
    case Scheme::archimedean:
      for (const auto& u : params.probes) {
        require_dim(u, dim, "archimedean probe");
        out.rules.push_back(
            {{OptionSet(FinitePoints{{u}})}, OptionSet(OpenRay{u, -Vec::ones(dim)})});
      }
      break;
  }
  return out;
}

bool coherent_exact(const Cone& d, CoherenceVariant) {
  for (int axis = 0; axis < d.dim(); ++axis) {
    if (!d.contains(Vec::unit(d.dim(), axis))) return false;
  }
  return true;
}

bool archimedean_exact(const Cone& d) {
  const Vec down = -Vec::ones(d.dim());
  return std::all_of(d.generators().begin(), d.generators().end(), [&](const Vec& g) {
    return optset_meets_cone(OptionSet(OpenRay{g, down}), d);
  });
}

}  // namespace choicekit
