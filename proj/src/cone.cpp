#include "choicekit/cone.hpp"

#include <algorithm>
#include <sstream>

#include "choicekit/errors.hpp"

namespace choicekit {

Cone Cone::make(std::vector<Vec> generators, int dim) {
  if (dim <= 0) throw DimensionError("cone dimension must be positive");
  for (const auto& g : generators) require_dim(g, dim, "cone generator");
  generators = sorted_unique(std::move(generators));
  if (zero_nontrivially_in_cone(generators)) {
    throw NotBluntError("zero has a nontrivial representation over the generators");
  }
  return Cone(std::move(generators), dim);
}

bool Cone::contains(const Vec& u) const {
  require_dim(u, dim_, "cone membership");
  return !u.is_zero() && conic_feasible(generators_, u);
}

bool Cone::dominates(const Vec& u, const Vec& v) const { return contains(u - v); }

bool operator==(const Cone& a, const Cone& b) {
  return a.dim_ == b.dim_ && a.generators_ == b.generators_;
}

std::strong_ordering operator<=>(const Cone& a, const Cone& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.generators_.begin(), a.generators_.end(), b.generators_.begin(),
      b.generators_.end());
}

Cone make_cone(std::vector<Vec> generators, int dim) {
  return Cone::make(std::move(generators), dim);
}

bool cone_contains(const Cone& d, const Vec& u) { return d.contains(u); }

bool dominates(const Cone& d, const Vec& u, const Vec& v) { return d.dominates(u, v); }

std::vector<Vec> choice_from_order(const Cone& d, std::span<const Vec> options) {
  if (options.empty()) throw EmptyOptionSetError("choice over empty option set");
  std::vector<Vec> opts = sorted_unique({options.begin(), options.end()});
  for (const auto& u : opts) require_dim(u, d.dim(), "choice option");

  std::vector<Vec> maximal;
  for (const auto& u : opts) {
    bool dominated = false;
    for (const auto& v : opts) {
      if (v == u) continue;
      if (d.dominates(v, u)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(u);
  }
  return maximal;  // opts is sorted, so this is canonical order
}

std::vector<Vec> choice_from_order_set(std::span<const Cone> ds,
                                       std::span<const Vec> options) {
  if (ds.empty()) throw EmptyOrderSetError("choice over empty set of orders");
  std::vector<Vec> chosen;
  for (const auto& d : ds) {
    auto part = choice_from_order(d, options);
    chosen.insert(chosen.end(), part.begin(), part.end());
  }
  return sorted_unique(std::move(chosen));
}

OrderAxiomReport check_order_axioms(const Cone& d, std::span<const Vec> probes) {
  OrderAxiomReport report;
  const std::vector<Vec> ps = sorted_unique({probes.begin(), probes.end()});
  const std::size_t n = ps.size();

  auto record = [&report](bool& axiom, const std::string& detail) {
    axiom = false;
    if (report.first_violation.empty()) report.first_violation = detail;
  };

  std::vector<std::vector<char>> dom(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dom[i][j] = d.dominates(ps[i], ps[j]) ? 1 : 0;
      ++report.checks;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (dom[i][i]) record(report.irreflexive, ps[i].str() + " precedes itself");
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!dom[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        ++report.checks;
        if (dom[j][k] && !dom[i][k]) {
          record(report.transitive, "chain through " + ps[j].str() + " breaks");
        }
      }
    }
  }

  const Rational scalars[] = {Rational(1, 2), Rational(1), Rational(3)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!dom[i][j]) continue;
      for (const auto& s : scalars) {
        ++report.checks;
        if (!d.dominates(s * ps[i], s * ps[j])) {
          record(report.scaling_invariant,
                 "scaling " + ps[i].str() + " > " + ps[j].str() + " by " + s.str());
        }
      }
      for (const auto& w : ps) {
        ++report.checks;
        if (!d.dominates(ps[i] + w, ps[j] + w)) {
          record(report.translation_invariant,
                 "translating " + ps[i].str() + " > " + ps[j].str() + " by " + w.str());
        }
      }
    }
  }
  return report;
}

}  // namespace choicekit
