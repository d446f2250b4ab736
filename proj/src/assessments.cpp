#include "choicekit/assessments.hpp"

#include <algorithm>
#include <future>
#include <utility>

#include "choicekit/errors.hpp"

namespace choicekit {

namespace {

void validate_family(const AssessmentFamily& f) {
  if (f.dim <= 0) throw DimensionError("assessment dimension must be positive");
  for (const auto& set : f.basis) {
    if (set.points.empty()) throw EmptyOptionSetError("assessment basis set with no points");
    for (const auto& u : set.points) require_dim(u, f.dim, "assessment option");
  }
}

std::uint64_t checked_product(std::uint64_t total, std::uint64_t factor,
                              std::uint64_t max) {
  if (factor == 0) return 0;
  if (total > max / factor) {
    throw CombinatorialLimitError("selection enumeration exceeds the configured bound of " +
                                  std::to_string(max));
  }
  return total * factor;
}

std::uint64_t count_selections(const std::vector<FinitePoints>& basis,
                               std::uint64_t max) {
  std::uint64_t total = 1;
  for (const auto& set : basis) total = checked_product(total, set.points.size(), max);
  return total;
}

std::vector<Vec> selection_at(const std::vector<FinitePoints>& basis, std::uint64_t idx) {
  std::vector<Vec> chosen;
  chosen.reserve(basis.size());
  for (const auto& set : basis) {
    const auto n = static_cast<std::uint64_t>(set.points.size());
    chosen.push_back(set.points[static_cast<std::size_t>(idx % n)]);
    idx /= n;
  }
  return chosen;
}

std::vector<Cone> scan_selections(const AssessmentFamily& f, std::uint64_t lo,
                                  std::uint64_t hi) {
  std::vector<Cone> found;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    std::vector<Vec> gens = sorted_unique(selection_at(f.basis, idx));
    if (!zero_nontrivially_in_cone(gens)) {
      found.push_back(Cone::make(std::move(gens), f.dim));
    }
  }
  return found;
}

}  // namespace

std::vector<Cone> selection_cones(const AssessmentFamily& f, const EnumLimits& limits) {
  validate_family(f);
  if (f.basis.empty()) return {};
  const std::uint64_t total = count_selections(f.basis, limits.max_selections);

  std::vector<Cone> cones;
  const int workers = std::max(1, limits.threads);
  if (workers == 1 || total < 2) {
    cones = scan_selections(f, 0, total);
  } else {
    const auto chunks = static_cast<std::uint64_t>(workers);
    std::vector<std::future<std::vector<Cone>>> parts;
    for (std::uint64_t w = 0; w < chunks; ++w) {
      const std::uint64_t lo = total * w / chunks;
      const std::uint64_t hi = total * (w + 1) / chunks;
      parts.push_back(std::async(std::launch::async,
                                 [&f, lo, hi] { return scan_selections(f, lo, hi); }));
    }
    for (auto& p : parts) {
      auto part = p.get();
      cones.insert(cones.end(), part.begin(), part.end());
    }
  }

  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  return cones;
}

bool is_consistent(const AssessmentFamily& f, const EnumLimits& limits) {
  validate_family(f);
  return f.basis.empty() || !selection_cones(f, limits).empty();
}

Extension::Extension(AssessmentFamily family, EnumLimits limits)
    : family_(std::move(family)) {
  validate_family(family_);
  if (!family_.basis.empty()) {
    cones_ = selection_cones(family_, limits);
    if (cones_.empty()) {
      throw InconsistentAssessmentError("assessment basis admits no proper selection cone");
    }
  }
}

bool Extension::contains(const OptionSet& s) const {
  if (family_.basis.empty()) return false;
  return std::all_of(cones_.begin(), cones_.end(),
                     [&s](const Cone& d) { return optset_meets_cone(s, d); });
}

bool Extension::contains_conclusion(const std::optional<OptionSet>& s) const {
  return s.has_value() && contains(*s);
}

std::optional<Cone> Extension::refuting_cone(const OptionSet& s) const {
  if (family_.basis.empty()) return Cone::make({}, family_.dim);
  for (const auto& d : cones_) {
    if (!optset_meets_cone(s, d)) return d;
  }
  return std::nullopt;
}

bool in_natural_extension(const AssessmentFamily& f, const OptionSet& s,
                          const EnumLimits& limits) {
  return Extension(f, limits).contains(s);
}

RuleCheck check_rules_with(const SetMembership& member, const RuleSet& rules) {
  for (std::size_t i = 0; i < rules.rules.size(); ++i) {
    const Rule& r = rules.rules[i];
    const bool premises_met =
        std::all_of(r.premises.begin(), r.premises.end(),
                    [&member](const OptionSet& p) { return member(p); });
    if (!premises_met) continue;
    if (!member(r.conclusion)) return {false, i};
  }
  return {true, std::nullopt};
}

RuleCheck k_compatible(const AssessmentFamily& f, const RuleSet& rules,
                       const EnumLimits& limits) {
  const Extension ext(f, limits);
  return check_rules_with(
      [&ext](const std::optional<OptionSet>& s) { return ext.contains_conclusion(s); },
      rules);
}

void for_each_combination_set(
    const std::vector<FinitePoints>& family, std::span<const Rational> grid,
    std::uint64_t iteration_limit,
    const std::function<bool(const std::vector<Vec>&)>& visit) {
  if (family.empty() || grid.empty()) return;
  for (const auto& r : grid) {
    if (r.sign() <= 0) throw Error("coefficient grid values must be positive");
  }

  const std::size_t k = family.size();
  const std::uint64_t phi = count_selections(family, iteration_limit);
  std::uint64_t maps = 1;
  for (std::size_t i = 0; i < k; ++i) maps = checked_product(maps, grid.size(), iteration_limit);
  std::uint64_t total = 1;
  for (std::uint64_t s = 0; s < phi; ++s) total = checked_product(total, maps, iteration_limit);

  // Precompute the option chosen from each family member per selection, and
  // the coefficient vector per map index.
  std::vector<std::vector<Vec>> chosen;
  chosen.reserve(static_cast<std::size_t>(phi));
  for (std::uint64_t s = 0; s < phi; ++s) chosen.push_back(selection_at(family, s));
  std::vector<std::vector<Rational>> coeff(static_cast<std::size_t>(maps));
  for (std::uint64_t mi = 0; mi < maps; ++mi) {
    std::uint64_t rest = mi;
    auto& c = coeff[static_cast<std::size_t>(mi)];
    c.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      c.push_back(grid[static_cast<std::size_t>(rest % grid.size())]);
      rest /= grid.size();
    }
  }

  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    std::vector<Vec> pts;
    pts.reserve(static_cast<std::size_t>(phi));
    for (std::uint64_t s = 0; s < phi; ++s) {
      const auto& c = coeff[static_cast<std::size_t>(rest % maps)];
      rest /= maps;
      const auto& sel = chosen[static_cast<std::size_t>(s)];
      Vec sum = c[0] * sel[0];
      for (std::size_t i = 1; i < k; ++i) sum = sum + c[i] * sel[i];
      pts.push_back(std::move(sum));
    }
    if (!visit(sorted_unique(std::move(pts)))) return;
  }
}

RejectionAxiomReport check_rejection_axioms_with(
    const SetMembership& member, std::span<const OptionSet> sample,
    std::span<const Rational> coeff_grid, std::uint64_t iteration_limit) {
  RejectionAxiomReport report;
  auto record = [&report](bool& axiom, const std::string& detail) {
    axiom = false;
    if (report.first_violation.empty()) report.first_violation = detail;
  };

  ++report.checks;
  if (member(std::nullopt)) record(report.excludes_empty, "the empty set was accepted");

  std::vector<char> is_member(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    is_member[i] = member(sample[i]) ? 1 : 0;
  }

  const Vec zero = sample.empty() ? Vec::zero(1) : Vec::zero(sample.front().dim());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto* fp = sample[i].as_finite();
    if (!is_member[i] || !fp) continue;
    if (!std::binary_search(fp->points.begin(), fp->points.end(), zero)) continue;
    ++report.checks;
    std::vector<Vec> rest;
    for (const auto& u : fp->points) {
      if (!u.is_zero()) rest.push_back(u);
    }
    if (rest.empty()) {
      record(report.zero_removal, "the singleton zero set was accepted");
    } else if (!member(OptionSet(FinitePoints{std::move(rest)}))) {
      record(report.zero_removal, "membership lost after removing the zero option");
    }
  }

  std::vector<FinitePoints> finite_members;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (is_member[i]) {
      if (const auto* fp = sample[i].as_finite()) finite_members.push_back(*fp);
    }
  }
  if (!finite_members.empty() && finite_members.size() < 64) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << finite_members.size()); ++mask) {
      std::vector<FinitePoints> subfamily;
      for (std::size_t i = 0; i < finite_members.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) subfamily.push_back(finite_members[i]);
      }
      for_each_combination_set(subfamily, coeff_grid, iteration_limit,
                               [&](const std::vector<Vec>& pts) {
                                 ++report.checks;
                                 if (!member(OptionSet(FinitePoints{pts}))) {
                                   record(report.combination_closure,
                                          "a combination set was rejected");
                                 }
                                 return report.combination_closure;
                               });
      if (!report.combination_closure) break;
    }
  }

  std::vector<Vec> pool;
  for (const auto& s : sample) {
    for (const auto& piece : s.pieces()) {
      if (const auto* fp = std::get_if<FinitePoints>(&piece)) {
        pool.insert(pool.end(), fp->points.begin(), fp->points.end());
      }
    }
  }
  pool = sorted_unique(std::move(pool));
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (!is_member[i]) continue;
    for (const auto& p : pool) {
      ++report.checks;
      if (!member(sample[i].with_points_added(FinitePoints{{p}}))) {
        record(report.superset_closure, "membership lost after adding " + p.str());
      }
    }
  }

  return report;
}

RejectionAxiomReport check_rejection_axioms(const AssessmentFamily& f,
                                            std::span<const OptionSet> sample,
                                            std::span<const Rational> coeff_grid,
                                            const EnumLimits& limits) {
  const Extension ext(f, limits);
  return check_rejection_axioms_with(
      [&ext](const std::optional<OptionSet>& s) { return ext.contains_conclusion(s); },
      sample, coeff_grid, limits.max_selections);
}

}  // namespace choicekit
