#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "choicekit/linear.hpp"
#include "choicekit/vec.hpp"

namespace choicekit {

/// A finitely generated blunt convex cone: a proper set of options. Its
/// members are the nonzero nonnegative combinations of the generators, so it
/// encodes a proper order via u > v iff u - v is a member. The generator
/// list may be empty (the empty cone, inducing the vacuous order).
class Cone {
 public:
  /// Throws NotBluntError when zero has a nontrivial representation over the
  /// generators. Generators are stored sorted and deduplicated.
  static Cone make(std::vector<Vec> generators, int dim);

  int dim() const { return dim_; }
  std::span<const Vec> generators() const { return generators_; }
  bool is_empty() const { return generators_.empty(); }

  bool contains(const Vec& u) const;
  /// u strictly precedes v in the induced order, i.e. u - v is a member.
  bool dominates(const Vec& u, const Vec& v) const;

  friend bool operator==(const Cone& a, const Cone& b);
  friend std::strong_ordering operator<=>(const Cone& a, const Cone& b);

 private:
  Cone(std::vector<Vec> generators, int dim)
      : generators_(std::move(generators)), dim_(dim) {}

  std::vector<Vec> generators_;
  int dim_;
};

Cone make_cone(std::vector<Vec> generators, int dim);
bool cone_contains(const Cone& d, const Vec& u);
bool dominates(const Cone& d, const Vec& u, const Vec& v);

/// The undominated elements of `options`, in canonical lexicographic order.
/// Duplicates collapse; the result is never empty for nonempty input.
std::vector<Vec> choice_from_order(const Cone& d, std::span<const Vec> options);

/// Union of the per-order maximal sets: an option survives when at least one
/// of the orders leaves it undominated.
std::vector<Vec> choice_from_order_set(std::span<const Cone> ds,
                                       std::span<const Vec> options);

/// Sampled verification that the induced order is irreflexive, transitive,
/// invariant under positive scaling (checked at 1/2, 1 and 3) and invariant
/// under translation by each probe.
struct OrderAxiomReport {
  bool irreflexive = true;
  bool transitive = true;
  bool scaling_invariant = true;
  bool translation_invariant = true;
  std::size_t checks = 0;
  std::string first_violation;

  bool all_pass() const {
    return irreflexive && transitive && scaling_invariant && translation_invariant;
  }
};

OrderAxiomReport check_order_axioms(const Cone& d, std::span<const Vec> probes);

}  // namespace choicekit
