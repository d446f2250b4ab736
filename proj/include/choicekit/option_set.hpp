#pragma once

#include <compare>
#include <span>
#include <variant>
#include <vector>

#include "choicekit/vec.hpp"

namespace choicekit {

/// A nonempty finite set of options.
struct FinitePoints {
  std::vector<Vec> points;

  friend bool operator==(const FinitePoints&, const FinitePoints&) = default;
};

/// posi(points): every nonzero nonnegative combination of the points.
struct PosiHull {
  std::vector<Vec> points;

  friend bool operator==(const PosiHull&, const PosiHull&) = default;
};

/// { base + eps*direction : eps > 0 }. The direction is nonzero.
struct OpenRay {
  Vec base;
  Vec direction;

  friend bool operator==(const OpenRay&, const OpenRay&) = default;
};

using SetPiece = std::variant<FinitePoints, PosiHull, OpenRay>;

/// A finitely presented nonempty subset of the option space: one piece, or a
/// union of pieces. Unions arise only from monotonification, never from user
/// input. Pieces are kept in canonical order with finite pieces merged, so
/// equal sets of pieces compare equal.
class OptionSet {
 public:
  explicit OptionSet(FinitePoints fp);
  explicit OptionSet(PosiHull ph);
  explicit OptionSet(OpenRay ray);
  static OptionSet union_of(std::vector<OptionSet> parts);

  int dim() const { return dim_; }
  std::span<const SetPiece> pieces() const { return pieces_; }

  /// Non-null iff the set is a single finite list of points.
  const FinitePoints* as_finite() const;

  /// Set union with a finite set of extra points.
  OptionSet with_points_added(const FinitePoints& extra) const;

  friend bool operator==(const OptionSet& a, const OptionSet& b);
  friend std::strong_ordering operator<=>(const OptionSet& a, const OptionSet& b);

 private:
  OptionSet() = default;
  void canonicalize();

  std::vector<SetPiece> pieces_;
  int dim_ = 0;
};

}  // namespace choicekit
