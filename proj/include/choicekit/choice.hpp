#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "choicekit/assessments.hpp"
#include "choicekit/cone.hpp"
#include "choicekit/rules.hpp"

namespace choicekit {

/// Evaluator for a choice function. Either maximality over a nonempty set of
/// proper cones, or rejection through the natural extension of a consistent
/// assessment: an option is rejected from A exactly when shifting A by it
/// lands the set inside the extension.
class ChoiceModel {
 public:
  static ChoiceModel from_cones(std::vector<Cone> cones);
  static ChoiceModel from_assessment(AssessmentFamily family, EnumLimits limits = {});

  int dim() const;
  bool is_assessment() const { return std::holds_alternative<Extension>(impl_); }
  std::span<const Cone> cones() const;
  const Extension& extension() const;

 private:
  explicit ChoiceModel(std::vector<Cone> cones) : impl_(std::move(cones)) {}
  explicit ChoiceModel(Extension ext) : impl_(std::move(ext)) {}

  std::variant<std::vector<Cone>, Extension> impl_;
};

/// The chosen options of A, in canonical lexicographic order. Never empty for
/// finite nonempty A.
std::vector<Vec> choose(const ChoiceModel& m, std::span<const Vec> options);

/// True iff zero is rejected from A together with zero.
bool rejects_zero(const ChoiceModel& m, std::span<const Vec> options);

/// Checks that choices from every subset of the universe up to the given size
/// agree with the pairwise choices. Subsets are scanned smallest-first in
/// lexicographic order, so the reported counterexample is deterministic.
struct BinarityResult {
  bool binary = true;
  std::vector<Vec> counterexample_set;
  std::optional<Vec> counterexample_option;
};

BinarityResult is_binary_on(const ChoiceModel& m, std::span<const Vec> universe,
                            int max_subset_size);

struct NotBinaryError : Error {
  NotBinaryError(std::vector<Vec> set, Vec option);
  std::vector<Vec> counterexample_set;
  Vec counterexample_option;
};

/// Recovers the single order behind a binary model: the probes rejected
/// against zero generate the cone. Pairwise dominance over the probes then
/// coincides with pairwise choice. Throws NotBinaryError when the binarity
/// check over the probes fails.
Cone extract_order(const ChoiceModel& m, std::span<const Vec> probes);

/// Sampled verification of the choice axioms: singletons choose themselves,
/// choices translate along with the option set, the rejecting sets are closed
/// under the grid-valued combination axiom, and chosen options stay chosen in
/// subsets.
struct ChoiceAxiomReport {
  bool singleton_identity = true;
  bool translation_covariant = true;
  bool combination_closure = true;
  bool subset_persistence = true;
  std::size_t checks = 0;
  std::string first_violation;

  bool all_pass() const {
    return singleton_identity && translation_covariant && combination_closure &&
           subset_persistence;
  }
};

ChoiceAxiomReport check_choice_axioms(const ChoiceModel& m,
                                      std::span<const std::vector<Vec>> probe_sets,
                                      std::span<const Vec> translations,
                                      std::span<const Rational> coeff_grid,
                                      std::uint64_t iteration_limit = 1'000'000);

/// The selection cones representing an assessment-backed model; choosing with
/// them matches choosing with the model on every finite option set.
std::vector<Cone> represent(const ChoiceModel& m);

/// Rule compatibility of the model's rejection structure: membership means
/// meeting every cone (cone models) or lying in the natural extension
/// (assessment models).
RuleCheck model_compatible(const ChoiceModel& m, const RuleSet& rules);

}  // namespace choicekit
