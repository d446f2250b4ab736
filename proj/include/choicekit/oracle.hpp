#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "choicekit/assessments.hpp"
#include "choicekit/option_set.hpp"
#include "choicekit/vec.hpp"

namespace choicekit::oracle {

inline constexpr std::size_t kDefaultEliminationLimit = 16;

/// Same contract as conic_feasible, decided by exact Fourier-Motzkin
/// elimination of the combination coefficients instead of simplex pivots.
/// Exponential in the worst case; throws VariableLimitError when more than
/// `elimination_limit` coefficients would have to be eliminated.
bool fm_conic_feasible(std::span<const Vec> generators, const Vec& target,
                       std::size_t elimination_limit = kDefaultEliminationLimit);

/// Option sets provably inside the natural extension, built by forward
/// construction: one combination-axiom application per coefficient map valued
/// in the grid over every nonempty subfamily of the basis, followed by
/// zero removal and by unioning in subsets of the extra points. Every output
/// must be accepted by the extension; the test suite enforces that.
std::vector<FinitePoints> closure_witnesses(const AssessmentFamily& f,
                                            std::span<const Rational> coeff_grid,
                                            std::span<const Vec> extra_points,
                                            const EnumLimits& limits = {});

}  // namespace choicekit::oracle
