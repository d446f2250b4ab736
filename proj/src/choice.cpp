#include "choicekit/choice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "choicekit/errors.hpp"

namespace choicekit {

ChoiceModel ChoiceModel::from_cones(std::vector<Cone> cones) {
  if (cones.empty()) throw EmptyOrderSetError("choice model needs at least one order");
  for (const auto& c : cones) {
    if (c.dim() != cones.front().dim()) {
      throw DimensionError("cones in a choice model disagree on dimension");
    }
  }
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  return ChoiceModel(std::move(cones));
}

ChoiceModel ChoiceModel::from_assessment(AssessmentFamily family, EnumLimits limits) {
  return ChoiceModel(Extension(std::move(family), limits));
}

int ChoiceModel::dim() const {
  if (const auto* cs = std::get_if<std::vector<Cone>>(&impl_)) return cs->front().dim();
  return std::get<Extension>(impl_).family().dim;
}

std::span<const Cone> ChoiceModel::cones() const {
  return std::get<std::vector<Cone>>(impl_);
}

const Extension& ChoiceModel::extension() const { return std::get<Extension>(impl_); }

std::vector<Vec> choose(const ChoiceModel& m, std::span<const Vec> options) {
  if (options.empty()) throw EmptyOptionSetError("choice over empty option set");
  std::vector<Vec> opts = sorted_unique({options.begin(), options.end()});
  for (const auto& u : opts) require_dim(u, m.dim(), "choice option");

  if (!m.is_assessment()) return choice_from_order_set(m.cones(), opts);

  std::vector<Vec> chosen;
  for (const auto& u : opts) {
    std::vector<Vec> shifted;
    shifted.reserve(opts.size());
    for (const auto& a : opts) shifted.push_back(a - u);
    if (!m.extension().contains(OptionSet(FinitePoints{std::move(shifted)}))) {
      chosen.push_back(u);
    }
  }
  return chosen;
}

bool rejects_zero(const ChoiceModel& m, std::span<const Vec> options) {
  if (options.empty()) throw EmptyOptionSetError("rejection query over empty option set");
  std::vector<Vec> with_zero{options.begin(), options.end()};
  const Vec zero = Vec::zero(m.dim());
  with_zero.push_back(zero);
  const std::vector<Vec> chosen = choose(m, with_zero);
  return !std::binary_search(chosen.begin(), chosen.end(), zero);
}

BinarityResult is_binary_on(const ChoiceModel& m, std::span<const Vec> universe,
                            int max_subset_size) {
  const std::vector<Vec> uni = sorted_unique({universe.begin(), universe.end()});
  const auto n = uni.size();
  if (max_subset_size < 1 || static_cast<std::size_t>(max_subset_size) > n) {
    throw Error("subset size bound must lie between 1 and the universe size");
  }

  // Pairwise table: keep[i][j] says option i survives the pair {i, j}.
  std::vector<std::vector<char>> keep(n, std::vector<char>(n, 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::vector<Vec> pair{uni[i], uni[j]};
      const std::vector<Vec> chosen = choose(m, pair);
      keep[i][j] = std::binary_search(chosen.begin(), chosen.end(), uni[i]) ? 1 : 0;
      keep[j][i] = std::binary_search(chosen.begin(), chosen.end(), uni[j]) ? 1 : 0;
    }
  }

  std::vector<std::size_t> idx;
  for (int size = 1; size <= max_subset_size; ++size) {
    // Index combinations in lexicographic order.
    idx.assign(static_cast<std::size_t>(size), 0);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (;;) {
      std::vector<Vec> subset;
      subset.reserve(idx.size());
      for (auto i : idx) subset.push_back(uni[i]);
      const std::vector<Vec> chosen = choose(m, subset);
      for (auto i : idx) {
        bool pairwise = true;
        for (auto j : idx) {
          if (i != j && !keep[i][j]) {
            pairwise = false;
            break;
          }
        }
        const bool actual = std::binary_search(chosen.begin(), chosen.end(), uni[i]);
        if (actual != pairwise) {
          return {false, subset, uni[i]};
        }
      }
      // next combination
      std::size_t k = idx.size();
      while (k > 0 && idx[k - 1] == n - idx.size() + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t t = k; t < idx.size(); ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return {true, {}, std::nullopt};
}

namespace {

std::string binarity_message(const std::vector<Vec>& set, const Vec& option) {
  std::ostringstream os;
  os << "choice is not binary: " << option.str() << " breaks it on {";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) os << ",";
    os << set[i].str();
  }
  os << "}";
  return os.str();
}

}  // namespace

NotBinaryError::NotBinaryError(std::vector<Vec> set, Vec option)
    : Error(binarity_message(set, option)),
      counterexample_set(std::move(set)),
      counterexample_option(std::move(option)) {}

Cone extract_order(const ChoiceModel& m, std::span<const Vec> probes) {
  if (probes.empty()) throw EmptyOptionSetError("order extraction needs probes");
  const std::vector<Vec> ps = sorted_unique({probes.begin(), probes.end()});
  for (const auto& p : ps) {
    require_dim(p, m.dim(), "probe");
    if (p.is_zero()) throw Error("probes must be nonzero");
  }
  if (ps.size() >= 2) {
    BinarityResult bin = is_binary_on(m, ps, static_cast<int>(ps.size()));
    if (!bin.binary) {
      throw NotBinaryError(std::move(bin.counterexample_set),
                           std::move(*bin.counterexample_option));
    }
  }
  std::vector<Vec> generators;
  for (const auto& p : ps) {
    const std::vector<Vec> single{p};
    if (rejects_zero(m, single)) generators.push_back(p);
  }
  return Cone::make(std::move(generators), m.dim());
}

ChoiceAxiomReport check_choice_axioms(const ChoiceModel& m,
                                      std::span<const std::vector<Vec>> probe_sets,
                                      std::span<const Vec> translations,
                                      std::span<const Rational> coeff_grid,
                                      std::uint64_t iteration_limit) {
  ChoiceAxiomReport report;
  auto record = [&report](bool& axiom, const std::string& detail) {
    axiom = false;
    if (report.first_violation.empty()) report.first_violation = detail;
  };

  std::vector<std::vector<Vec>> sets;
  for (const auto& s : probe_sets) sets.push_back(sorted_unique(s));

  for (const auto& s : sets) {
    for (const auto& u : s) {
      ++report.checks;
      const std::vector<Vec> single{u};
      if (choose(m, single) != single) {
        record(report.singleton_identity, "singleton " + u.str() + " not chosen from itself");
      }
    }
  }

  for (const auto& s : sets) {
    const std::vector<Vec> base = choose(m, s);
    for (const auto& w : translations) {
      ++report.checks;
      std::vector<Vec> moved;
      moved.reserve(s.size());
      for (const auto& u : s) moved.push_back(u + w);
      std::vector<Vec> expected;
      expected.reserve(base.size());
      for (const auto& u : base) expected.push_back(u + w);
      if (choose(m, moved) != sorted_unique(std::move(expected))) {
        record(report.translation_covariant, "choice does not translate by " + w.str());
      }
    }
  }

  std::vector<FinitePoints> rejecting;
  for (const auto& s : sets) {
    if (rejects_zero(m, s)) rejecting.push_back(FinitePoints{s});
  }
  if (!rejecting.empty() && rejecting.size() < 64) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rejecting.size()); ++mask) {
      std::vector<FinitePoints> subfamily;
      for (std::size_t i = 0; i < rejecting.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) subfamily.push_back(rejecting[i]);
      }
      for_each_combination_set(subfamily, coeff_grid, iteration_limit,
                               [&](const std::vector<Vec>& pts) {
                                 ++report.checks;
                                 if (!rejects_zero(m, pts)) {
                                   record(report.combination_closure,
                                          "a combination of rejecting sets keeps zero");
                                 }
                                 return report.combination_closure;
                               });
      if (!report.combination_closure) break;
    }
  }

  for (const auto& s : sets) {
    if (s.size() > 16) continue;  // subsets explode; larger sets add nothing here
    const std::vector<Vec> chosen = choose(m, s);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s.size()); ++mask) {
      std::vector<Vec> subset;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) subset.push_back(s[i]);
      }
      const std::vector<Vec> sub_chosen = choose(m, subset);
      for (const auto& u : subset) {
        if (!std::binary_search(chosen.begin(), chosen.end(), u)) continue;
        ++report.checks;
        if (!std::binary_search(sub_chosen.begin(), sub_chosen.end(), u)) {
          record(report.subset_persistence,
                 u.str() + " chosen from the superset but not the subset");
        }
      }
    }
  }

  return report;
}

std::vector<Cone> represent(const ChoiceModel& m) {
  if (!m.is_assessment()) {
    throw Error("representation is computed from an assessment-backed model");
  }
  const auto cs = m.extension().cones();
  return {cs.begin(), cs.end()};
}

RuleCheck model_compatible(const ChoiceModel& m, const RuleSet& rules) {
  if (m.is_assessment()) {
    const Extension& ext = m.extension();
    return check_rules_with(
        [&ext](const std::optional<OptionSet>& s) { return ext.contains_conclusion(s); },
        rules);
  }
  const auto cones = m.cones();
  return check_rules_with(
      [&cones](const std::optional<OptionSet>& s) {
        if (!s) return false;
        return std::all_of(cones.begin(), cones.end(),
                           [&s](const Cone& d) { return optset_meets_cone(*s, d); });
      },
      rules);
}

}  // namespace choicekit
