#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "choicekit/cone.hpp"
#include "choicekit/option_set.hpp"

namespace choicekit {

/// A rule (premises, conclusion): whenever every premise set meets the cone,
/// the conclusion must too. A missing conclusion can never be met, so a rule
/// with satisfied premises and no conclusion is violated outright.
struct Rule {
  std::vector<OptionSet> premises;
  std::optional<OptionSet> conclusion;
};

struct RuleSet {
  int dim = 0;
  std::vector<Rule> rules;
};

/// True iff the set intersects the cone. Finite pieces test point membership;
/// hull pieces solve a joint feasibility system and then per-coordinate
/// extreme-value programs to rule out a zero-only intersection; ray pieces
/// reduce to the ray-parameter supremum.
bool optset_meets_cone(const OptionSet& s, const Cone& d);

struct RuleCheck {
  bool compatible = true;
  std::optional<std::size_t> witness;  // index of the first violated rule
};

RuleCheck d_compatible(const Cone& d, const RuleSet& rules);

/// Unions `extra` into every premise and into the conclusion. Requires at
/// least one premise; a missing conclusion becomes `extra` itself.
Rule monotonify_rule(const Rule& r, const FinitePoints& extra);

/// The rule set together with the monotonified copy of every rule that has
/// premises.
RuleSet monotonify(const RuleSet& rules, const FinitePoints& extra);

enum class Scheme { coherence, totality, weak, weak2, mixing, archimedean };

Scheme scheme_from_name(std::string_view name);
std::string_view scheme_name(Scheme s);

/// Which uniformly-positive options coherence quantifies over: everything
/// with strictly positive coordinates, or everything nonnegative and nonzero.
enum class CoherenceVariant { strict_positive, nonneg_nonzero };

struct SchemeParams {
  std::vector<Vec> probes;                      // coherence, totality, archimedean
  std::vector<std::pair<Vec, Vec>> pairs;       // weak, weak2
  std::vector<std::vector<Vec>> finite_sets;    // mixing
  CoherenceVariant variant = CoherenceVariant::strict_positive;
};

/// Substitutes each probe / pair / finite set into the scheme.
RuleSet instantiate_scheme(Scheme s, const SchemeParams& params, int dim);

/// Exact decision of "every uniformly positive option is a member", for both
/// coherence variants: a finitely generated blunt cone plus the origin is
/// closed, so containing the open positive orthant, containing the closed one
/// and containing every standard basis vector all coincide.
bool coherent_exact(const Cone& d, CoherenceVariant variant);

/// Exact decision of "every member stays a member after subtracting some
/// positive constant option". Checking the generators suffices: their
/// witnesses add and scale along with the combination coefficients.
bool archimedean_exact(const Cone& d);

}  // namespace choicekit
