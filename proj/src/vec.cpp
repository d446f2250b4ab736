#include "choicekit/vec.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "choicekit/errors.hpp"

namespace choicekit {

Vec::Vec(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DimensionError("vector must have positive dimension");
}

Vec Vec::zero(int dim) { return Vec(std::vector<Rational>(static_cast<std::size_t>(dim))); }

Vec Vec::ones(int dim) {
  return Vec(std::vector<Rational>(static_cast<std::size_t>(dim), Rational(1)));
}

Vec Vec::unit(int dim, int axis) {
  std::vector<Rational> c(static_cast<std::size_t>(dim));
  c.at(static_cast<std::size_t>(axis)) = Rational(1);
  return Vec(std::move(c));
}

Vec Vec::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw FormatError("bad vector literal: '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<Rational> coords;
  while (true) {
    const auto comma = body.find(',');
    coords.push_back(Rational::parse(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Vec(std::move(coords));
}

bool Vec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

std::string Vec::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

Vec operator+(const Vec& a, const Vec& b) {
  require_dim(b, a.dim(), "vector addition");
  std::vector<Rational> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return Vec(std::move(c));
}

Vec operator-(const Vec& a, const Vec& b) {
  require_dim(b, a.dim(), "vector subtraction");
  std::vector<Rational> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
  return Vec(std::move(c));
}

Vec operator*(const Rational& s, const Vec& v) {
  std::vector<Rational> c(v.coords_);
  for (auto& x : c) x *= s;
  return Vec(std::move(c));
}

Vec Vec::operator-() const { return Rational(-1) * *this; }

bool operator==(const Vec& a, const Vec& b) {
  require_dim(b, a.dim(), "vector comparison");
  return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const Vec& a, const Vec& b) {
  require_dim(b, a.dim(), "vector comparison");
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Vec& v) { return os << v.str(); }

void require_dim(const Vec& v, int dim, std::string_view what) {
  if (v.dim() != dim) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(dim) +
                         ", got " + std::to_string(v.dim()));
  }
}

std::vector<Vec> sorted_unique(std::vector<Vec> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace choicekit
