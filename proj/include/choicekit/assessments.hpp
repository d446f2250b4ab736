#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "choicekit/cone.hpp"
#include "choicekit/option_set.hpp"
#include "choicekit/rules.hpp"

namespace choicekit {

/// A finite basis of finite option sets. It generates the smallest proper
/// rejection structure containing every basis set; membership in that
/// structure is what in_natural_extension decides.
struct AssessmentFamily {
  int dim = 0;
  std::vector<FinitePoints> basis;
};

struct EnumLimits {
  std::uint64_t max_selections = 1'000'000;
  int threads = 1;
};

/// One proper cone per selection of a single option from every basis set,
/// keeping exactly the blunt ones. Deduplicated by generator set, canonical
/// order, independent of basis order. Empty basis yields the empty list.
std::vector<Cone> selection_cones(const AssessmentFamily& f,
                                  const EnumLimits& limits = {});

/// True iff some selection yields a proper cone, or the basis is empty.
bool is_consistent(const AssessmentFamily& f, const EnumLimits& limits = {});

/// Membership evaluator for the natural extension: a set belongs iff it meets
/// every proper selection cone. Precomputes the cones once.
class Extension {
 public:
  /// Throws InconsistentAssessmentError when a nonempty basis admits no
  /// proper selection.
  explicit Extension(AssessmentFamily family, EnumLimits limits = {});

  const AssessmentFamily& family() const { return family_; }
  std::span<const Cone> cones() const { return cones_; }

  bool contains(const OptionSet& s) const;
  /// Missing conclusions (the empty set) are never members.
  bool contains_conclusion(const std::optional<OptionSet>& s) const;
  /// A selection cone disjoint from the set; nullopt when the set is a
  /// member. With an empty basis the empty cone certifies every rejection.
  std::optional<Cone> refuting_cone(const OptionSet& s) const;

 private:
  AssessmentFamily family_;
  std::vector<Cone> cones_;
};

bool in_natural_extension(const AssessmentFamily& f, const OptionSet& s,
                          const EnumLimits& limits = {});

RuleCheck k_compatible(const AssessmentFamily& f, const RuleSet& rules,
                       const EnumLimits& limits = {});

/// Generic rule check against a membership predicate; shared by the cone,
/// cone-set and assessment flavours. The predicate sees nullopt for a missing
/// conclusion.
using SetMembership = std::function<bool(const std::optional<OptionSet>&)>;
RuleCheck check_rules_with(const SetMembership& member, const RuleSet& rules);

/// Enumerates the derived sets of the combination axiom over a family of
/// member sets: for every per-selection coefficient map valued in `grid`, the
/// set collecting one weighted sum per selection. Calls visit with each
/// derived set until it returns false. Throws CombinatorialLimitError when
/// the enumeration would exceed `iteration_limit`.
void for_each_combination_set(
    const std::vector<FinitePoints>& family, std::span<const Rational> grid,
    std::uint64_t iteration_limit,
    const std::function<bool(const std::vector<Vec>&)>& visit);

/// Sampled verification of the rejection-structure axioms: the empty set is
/// never a member, membership survives dropping the zero option, the
/// combination axiom holds over every subfamily of sampled members with every
/// grid-valued coefficient map, and members stay members under adding sampled
/// points.
struct RejectionAxiomReport {
  bool excludes_empty = true;
  bool zero_removal = true;
  bool combination_closure = true;
  bool superset_closure = true;
  std::size_t checks = 0;
  std::string first_violation;

  bool all_pass() const {
    return excludes_empty && zero_removal && combination_closure && superset_closure;
  }
};

RejectionAxiomReport check_rejection_axioms_with(
    const SetMembership& member, std::span<const OptionSet> sample,
    std::span<const Rational> coeff_grid, std::uint64_t iteration_limit);

RejectionAxiomReport check_rejection_axioms(const AssessmentFamily& f,
                                            std::span<const OptionSet> sample,
                                            std::span<const Rational> coeff_grid,
                                            const EnumLimits& limits = {});

}  // namespace choicekit
