#include "choicekit/linear.hpp"

#include <cstddef>
#include <limits>
#include <mutex>
#include <utility>

#include "choicekit/errors.hpp"

namespace choicekit {

namespace {

using Row = std::vector<Rational>;

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau with columns [structural | artificial | rhs]. The objective
// row holds reduced costs; its rhs entry tracks the current objective value.
struct Tableau {
  std::size_t m = 0;  // constraint rows
  std::size_t n = 0;  // structural columns
  std::vector<Row> t;
  Row z;
  std::vector<std::size_t> basis;  // basis[i] = column basic in row i
  std::vector<char> live;          // rows found redundant are switched off

  std::size_t rhs() const { return n + m; }
};

void pivot(Tableau& tb, std::size_t r, std::size_t col) {
  Row& pr = tb.t[r];
  const Rational p = pr[col];
  for (auto& v : pr) v /= p;
  for (std::size_t i = 0; i < tb.m; ++i) {
    if (i == r || !tb.live[i]) continue;
    Row& ri = tb.t[i];
    if (ri[col].is_zero()) continue;
    const Rational f = ri[col];
    for (std::size_t j = 0; j < ri.size(); ++j) ri[j] -= f * pr[j];
  }
  if (!tb.z[col].is_zero()) {
    const Rational f = tb.z[col];
    for (std::size_t j = 0; j < tb.z.size(); ++j) tb.z[j] -= f * pr[j];
  }
  tb.basis[r] = col;
}

// Iterates to optimality. Returns false when the objective is unbounded.
// `allowed` restricts which columns may enter (phase 2 bans artificials).
bool run_simplex(Tableau& tb, const std::function<bool(std::size_t)>& allowed) {
  for (;;) {
    std::size_t enter = kNone;
    for (std::size_t j = 0; j < tb.rhs(); ++j) {
      if (allowed(j) && tb.z[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == kNone) return true;

    std::size_t leave = kNone;
    Rational best;
    for (std::size_t i = 0; i < tb.m; ++i) {
      if (!tb.live[i]) continue;
      const Rational& coeff = tb.t[i][enter];
      if (coeff.sign() <= 0) continue;
      Rational ratio = tb.t[i][tb.rhs()] / coeff;
      if (leave == kNone || ratio < best ||
          (ratio == best && tb.basis[i] < tb.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == kNone) return false;
    pivot(tb, leave, enter);
  }
}

std::mutex g_hook_mutex;
FeasibilityHook g_hook;

void notify_feasibility(std::span<const Vec> generators, const Vec& target,
                        bool verdict) {
  FeasibilityHook hook;
  {
    std::lock_guard lock(g_hook_mutex);
    hook = g_hook;
  }
  if (hook) hook(generators, target, verdict);
}

// Column-major assembly of the conic system: one equality row per coordinate.
void fill_generator_columns(std::span<const Vec> generators, int dim,
                            std::vector<Row>& a) {
  for (std::size_t j = 0; j < generators.size(); ++j) {
    require_dim(generators[j], dim, "cone generator");
    for (int i = 0; i < dim; ++i) {
      a[static_cast<std::size_t>(i)][j] = generators[j][static_cast<std::size_t>(i)];
    }
  }
}

RaySup ray_parameter(std::span<const Vec> generators, const Vec& base,
                     const Vec& direction, bool maximize) {
  const int dim = base.dim();
  require_dim(direction, dim, "ray direction");
  const std::size_t mgen = generators.size();

  std::vector<Row> a(static_cast<std::size_t>(dim), Row(mgen + 1));
  fill_generator_columns(generators, dim, a);
  std::vector<Rational> b(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    a[ui][mgen] = -direction[ui];
    b[ui] = base[ui];
  }
  std::vector<Rational> c(mgen + 1);
  c[mgen] = maximize ? Rational(1) : Rational(-1);

  const LpResult r = lp_maximize(a, b, c);
  switch (r.status) {
    case LpStatus::infeasible:
      return RayInfeasible{};
    case LpStatus::unbounded:
      return RayUnbounded{};
    case LpStatus::optimal:
      return RayBounded{maximize ? r.objective : -r.objective};
  }
  throw Error("unreachable lp status");
}

}  // namespace

LpResult lp_maximize(const std::vector<std::vector<Rational>>& a,
                     const std::vector<Rational>& b,
                     const std::vector<Rational>& c) {
  const std::size_t m = b.size();
  const std::size_t n = c.size();
  if (a.size() != m) throw Error("lp: row count does not match rhs length");
  for (const auto& row : a) {
    if (row.size() != n) throw Error("lp: row width does not match objective length");
  }

  Tableau tb;
  tb.m = m;
  tb.n = n;
  tb.t.assign(m, Row(n + m + 1));
  tb.basis.resize(m);
  tb.live.assign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) tb.t[i][j] = flip ? -a[i][j] : a[i][j];
    tb.t[i][n + i] = Rational(1);
    tb.t[i][tb.rhs()] = flip ? -b[i] : b[i];
    tb.basis[i] = n + i;
  }

  // Phase 1: maximize minus the sum of artificials; feasible iff it reaches 0.
  tb.z.assign(n + m + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tb.z[j] -= tb.t[i][j];
    tb.z[tb.rhs()] -= tb.t[i][tb.rhs()];
  }
  run_simplex(tb, [](std::size_t) { return true; });
  if (!tb.z[tb.rhs()].is_zero()) {
    return {LpStatus::infeasible, Rational(0), {}};
  }

  // Drive leftover artificials (all at value zero) out of the basis; rows
  // with no structural pivot are redundant and get switched off.
  for (std::size_t i = 0; i < m; ++i) {
    if (!tb.live[i] || tb.basis[i] < n) continue;
    std::size_t col = kNone;
    for (std::size_t j = 0; j < n; ++j) {
      if (!tb.t[i][j].is_zero()) {
        col = j;
        break;
      }
    }
    if (col == kNone) {
      tb.live[i] = 0;
    } else {
      pivot(tb, i, col);
    }
  }

  // Phase 2 with the real objective, artificial columns barred from entering.
  tb.z.assign(n + m + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) tb.z[j] = -c[j];
  for (std::size_t i = 0; i < m; ++i) {
    if (!tb.live[i] || tb.basis[i] >= n) continue;
    const Rational& cb = c[tb.basis[i]];
    if (cb.is_zero()) continue;
    for (std::size_t j = 0; j < n + m + 1; ++j) tb.z[j] += cb * tb.t[i][j];
  }
  const bool bounded = run_simplex(tb, [&tb](std::size_t j) { return j < tb.n; });
  if (!bounded) return {LpStatus::unbounded, Rational(0), {}};

  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (tb.live[i] && tb.basis[i] < n) x[tb.basis[i]] = tb.t[i][tb.rhs()];
  }
  return {LpStatus::optimal, tb.z[tb.rhs()], std::move(x)};
}

bool conic_feasible(std::span<const Vec> generators, const Vec& target) {
  const int dim = target.dim();
  const std::size_t mgen = generators.size();
  std::vector<Row> a(static_cast<std::size_t>(dim), Row(mgen));
  fill_generator_columns(generators, dim, a);
  std::vector<Rational> b(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) b[static_cast<std::size_t>(i)] = target[static_cast<std::size_t>(i)];
  const std::vector<Rational> c(mgen);

  const bool verdict = lp_maximize(a, b, c).status != LpStatus::infeasible;
  notify_feasibility(generators, target, verdict);
  return verdict;
}

bool zero_nontrivially_in_cone(std::span<const Vec> generators) {
  if (generators.empty()) return false;
  const int dim = generators.front().dim();
  const std::size_t mgen = generators.size();
  // Coordinates sum to zero while the coefficients sum to one.
  std::vector<Row> a(static_cast<std::size_t>(dim) + 1, Row(mgen));
  fill_generator_columns(generators, dim, a);
  for (std::size_t j = 0; j < mgen; ++j) a[static_cast<std::size_t>(dim)][j] = Rational(1);
  std::vector<Rational> b(static_cast<std::size_t>(dim) + 1);
  b[static_cast<std::size_t>(dim)] = Rational(1);
  const std::vector<Rational> c(mgen);
  return lp_maximize(a, b, c).status != LpStatus::infeasible;
}

RaySup sup_ray_parameter(std::span<const Vec> generators, const Vec& base,
                         const Vec& direction) {
  return ray_parameter(generators, base, direction, true);
}

RaySup inf_ray_parameter(std::span<const Vec> generators, const Vec& base,
                         const Vec& direction) {
  return ray_parameter(generators, base, direction, false);
}

void set_feasibility_hook(FeasibilityHook hook) {
  std::lock_guard lock(g_hook_mutex);
  g_hook = std::move(hook);
}

}  // namespace choicekit
