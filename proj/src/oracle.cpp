#include "choicekit/oracle.hpp"

#include <algorithm>
#include <utility>

#include "choicekit/errors.hpp"

namespace choicekit::oracle {

namespace {

// Inequality over the remaining coefficients: coeffs . x + constant >= 0,
// together with the set of initial inequalities it combines. Kohler's
// criterion prunes derived rows whose ancestor count exceeds the number of
// eliminated variables plus one; such rows are implied by the rest.
struct FmRow {
  std::vector<Rational> vals;  // coefficients..., constant last
  std::vector<std::uint64_t> history;

  std::size_t ancestors() const {
    std::size_t n = 0;
    for (auto w : history) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
};

void normalize_row(FmRow& row) {
  for (const auto& v : row.vals) {
    if (!v.is_zero()) {
      Rational scale = v.sign() > 0 ? v : -v;
      for (auto& w : row.vals) w /= scale;
      return;
    }
  }
}

// Normalizes, deduplicates and strips rows with no live coefficients.
// Returns false when a coefficient-free row is contradictory.
bool tidy(std::vector<FmRow>& rows) {
  std::vector<FmRow> kept;
  for (auto& row : rows) {
    const bool has_coeff =
        std::any_of(row.vals.begin(), row.vals.end() - 1,
                    [](const Rational& v) { return !v.is_zero(); });
    if (!has_coeff) {
      if (row.vals.back().sign() < 0) return false;
      continue;
    }
    normalize_row(row);
    kept.push_back(std::move(row));
  }
  std::sort(kept.begin(), kept.end(), [](const FmRow& a, const FmRow& b) {
    if (a.vals != b.vals) return a.vals < b.vals;
    return a.ancestors() < b.ancestors();
  });
  kept.erase(std::unique(kept.begin(), kept.end(),
                         [](const FmRow& a, const FmRow& b) { return a.vals == b.vals; }),
             kept.end());
  rows = std::move(kept);
  return true;
}

constexpr std::size_t kRowExplosionCap = 200'000;

}  // namespace

bool fm_conic_feasible(std::span<const Vec> generators, const Vec& target,
                       std::size_t elimination_limit) {
  const int dim = target.dim();
  for (const auto& g : generators) require_dim(g, dim, "cone generator");
  const std::size_t m = generators.size();
  if (m > elimination_limit) {
    throw VariableLimitError("elimination of " + std::to_string(m) +
                             " coefficients exceeds the configured bound of " +
                             std::to_string(elimination_limit));
  }

  // Each coordinate equality becomes a pair of opposite inequalities, plus
  // one nonnegativity row per coefficient.
  std::vector<FmRow> rows;
  for (int i = 0; i < dim; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    FmRow ge(m + 1);
    for (std::size_t j = 0; j < m; ++j) ge[j] = generators[j][ui];
    ge[m] = -target[ui];
    FmRow le(m + 1);
    for (std::size_t j = 0; j <= m; ++j) le[j] = -ge[j];
    rows.push_back(std::move(ge));
    rows.push_back(std::move(le));
  }
  for (std::size_t j = 0; j < m; ++j) {
    FmRow nn(m + 1);
    nn[j] = Rational(1);
    rows.push_back(std::move(nn));
  }

  if (!tidy(rows)) return false;

  for (std::size_t remaining = m; remaining > 0; --remaining) {
    std::vector<FmRow> pos, neg, next;
    for (auto& row : rows) {
      const int s = row.front().sign();
      if (s > 0) {
        pos.push_back(std::move(row));
      } else if (s < 0) {
        neg.push_back(std::move(row));
      } else {
        row.erase(row.begin());
        next.push_back(std::move(row));
      }
    }
    if (pos.size() * neg.size() + next.size() > kRowExplosionCap) {
      throw CombinatorialLimitError("elimination produced too many inequality rows");
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        // Positive multipliers cancelling the leading coefficient.
        const Rational alpha = -n.front();
        const Rational beta = p.front();
        FmRow combo(p.size() - 1);
        for (std::size_t j = 1; j < p.size(); ++j) {
          combo[j - 1] = alpha * p[j] + beta * n[j];
        }
        next.push_back(std::move(combo));
      }
    }
    rows = std::move(next);
    if (!tidy(rows)) return false;
  }
  return true;
}

std::vector<FinitePoints> closure_witnesses(const AssessmentFamily& f,
                                            std::span<const Rational> coeff_grid,
                                            std::span<const Vec> extra_points,
                                            const EnumLimits& limits) {
  if (!is_consistent(f, limits)) {
    throw InconsistentAssessmentError("closure witnesses need a consistent assessment");
  }
  if (f.basis.empty() || coeff_grid.empty()) return {};
  for (const auto& r : coeff_grid) {
    if (r.sign() <= 0) throw Error("coefficient grid values must be positive");
  }
  for (const auto& p : extra_points) require_dim(p, f.dim, "extra point");
  if (f.basis.size() >= 63 || extra_points.size() >= 20) {
    throw CombinatorialLimitError("witness construction over too many sets");
  }

  const Vec zero = Vec::zero(f.dim);
  std::vector<FinitePoints> out;
  std::uint64_t work = 0;

  auto emit_with_extras = [&](const std::vector<Vec>& pts) {
    out.push_back(FinitePoints{pts});
    for (std::uint64_t emask = 1; emask < (std::uint64_t{1} << extra_points.size());
         ++emask) {
      std::vector<Vec> grown = pts;
      for (std::size_t e = 0; e < extra_points.size(); ++e) {
        if (emask & (std::uint64_t{1} << e)) grown.push_back(extra_points[e]);
      }
      out.push_back(FinitePoints{sorted_unique(std::move(grown))});
    }
  };

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << f.basis.size()); ++mask) {
    std::vector<FinitePoints> support;
    for (std::size_t i = 0; i < f.basis.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) support.push_back(f.basis[i]);
    }
    const std::size_t k = support.size();

    auto grow = [&limits](std::uint64_t total, std::uint64_t factor) {
      if (factor != 0 && total > limits.max_selections / factor) {
        throw CombinatorialLimitError("witness construction exceeds the selection bound");
      }
      return total * factor;
    };
    std::uint64_t selections = 1;
    for (const auto& s : support) selections = grow(selections, s.points.size());
    std::uint64_t maps = 1;
    for (std::size_t i = 0; i < k; ++i) maps = grow(maps, coeff_grid.size());
    work += grow(selections, maps);
    if (work > limits.max_selections) {
      throw CombinatorialLimitError("witness construction exceeds the selection bound");
    }

    for (std::uint64_t mi = 0; mi < maps; ++mi) {
      std::vector<Rational> lambda;
      lambda.reserve(k);
      std::uint64_t rest = mi;
      for (std::size_t i = 0; i < k; ++i) {
        lambda.push_back(coeff_grid[static_cast<std::size_t>(rest % coeff_grid.size())]);
        rest /= coeff_grid.size();
      }

      std::vector<Vec> pts;
      pts.reserve(static_cast<std::size_t>(selections));
      for (std::uint64_t sel = 0; sel < selections; ++sel) {
        std::uint64_t si = sel;
        Vec sum = Vec::zero(f.dim);
        for (std::size_t i = 0; i < k; ++i) {
          const auto n = static_cast<std::uint64_t>(support[i].points.size());
          sum = sum + lambda[i] * support[i].points[static_cast<std::size_t>(si % n)];
          si /= n;
        }
        pts.push_back(std::move(sum));
      }
      pts = sorted_unique(std::move(pts));

      emit_with_extras(pts);
      if (pts.size() > 1 &&
          std::binary_search(pts.begin(), pts.end(), zero)) {
        std::vector<Vec> nonzero;
        for (const auto& u : pts) {
          if (!u.is_zero()) nonzero.push_back(u);
        }
        emit_with_extras(nonzero);
      }
    }
  }

  auto finite_less = [](const FinitePoints& a, const FinitePoints& b) {
    return std::lexicographical_compare_three_way(a.points.begin(), a.points.end(),
                                                  b.points.begin(), b.points.end()) < 0;
  };
  std::sort(out.begin(), out.end(), finite_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const FinitePoints& a, const FinitePoints& b) {
                          return a.points == b.points;
                        }),
            out.end());
  return out;
}

}  // namespace choicekit::oracle
