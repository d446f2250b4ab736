#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "choicekit/rational.hpp"

namespace choicekit {

/// An option: a point in an n-dimensional rational coordinate space.
class Vec {
 public:
  explicit Vec(std::vector<Rational> coords);

  static Vec zero(int dim);
  /// All coordinates equal to one.
  static Vec ones(int dim);
  static Vec unit(int dim, int axis);

  /// Parses "(a,b,...)" with rational literals between the commas.
  static Vec parse(std::string_view text);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  bool is_zero() const;

  /// Renders as "(a,b,...)" with no whitespace.
  std::string str() const;

  friend Vec operator+(const Vec& a, const Vec& b);
  friend Vec operator-(const Vec& a, const Vec& b);
  friend Vec operator*(const Rational& s, const Vec& v);
  Vec operator-() const;

  friend bool operator==(const Vec& a, const Vec& b);
  /// Lexicographic by coordinates; defined only at equal dim.
  friend std::strong_ordering operator<=>(const Vec& a, const Vec& b);

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const Vec& v);

/// Throws DimensionError unless both operands have dimension `dim`.
void require_dim(const Vec& v, int dim, std::string_view what);

/// Canonical option-set order: sorts lexicographically and drops duplicates.
std::vector<Vec> sorted_unique(std::vector<Vec> vs);

}  // namespace choicekit
