#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "choicekit/vec.hpp"

namespace choicekit {

/// Exact linear program in standard form: maximize c.x subject to A x = b,
/// x >= 0. Solved by two-phase simplex with Bland's smallest-index rule, so
/// every pivot is exact and the iteration cannot cycle.
enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status;
  Rational objective;       // meaningful when optimal
  std::vector<Rational> x;  // meaningful when optimal
};

LpResult lp_maximize(const std::vector<std::vector<Rational>>& a,
                     const std::vector<Rational>& b,
                     const std::vector<Rational>& c);

/// True iff target is a nonnegative combination of the generators. The empty
/// generator family reaches exactly the zero vector (the empty sum).
bool conic_feasible(std::span<const Vec> generators, const Vec& target);

/// True iff some convex combination of the generators equals zero, i.e. zero
/// lies in posi(generators). False for the empty family.
bool zero_nontrivially_in_cone(std::span<const Vec> generators);

/// sup { eps >= 0 : base + eps*direction is a nonnegative combination of the
/// generators }. Finitely generated cones are closed, so a bounded supremum
/// is attained.
struct RayBounded {
  Rational value;
};
struct RayUnbounded {};
struct RayInfeasible {};
using RaySup = std::variant<RayBounded, RayUnbounded, RayInfeasible>;

RaySup sup_ray_parameter(std::span<const Vec> generators, const Vec& base,
                         const Vec& direction);

/// Like sup_ray_parameter but for the infimum over the same feasible set.
/// Used to probe the degenerate case where the supremum is attained at the
/// origin only.
RaySup inf_ray_parameter(std::span<const Vec> generators, const Vec& base,
                         const Vec& direction);

/// Instrumentation: invoked with (generators, target, verdict) on every
/// conic_feasible query. Pass an empty function to clear. The hook is read
/// under a mutex, so queries may run concurrently.
using FeasibilityHook =
    std::function<void(std::span<const Vec>, const Vec&, bool)>;
void set_feasibility_hook(FeasibilityHook hook);

}  // namespace choicekit
