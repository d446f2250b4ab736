#include "choicekit/option_set.hpp"

#include <algorithm>
#include <utility>

#include "choicekit/errors.hpp"

namespace choicekit {

namespace {

int piece_dim(const SetPiece& p) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, OpenRay>) {
          return v.base.dim();
        } else {
          return v.points.front().dim();
        }
      },
      p);
}

void validate_piece(const SetPiece& p) {
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, OpenRay>) {
          require_dim(v.direction, v.base.dim(), "open ray direction");
          if (v.direction.is_zero()) throw FormatError("open ray with zero direction");
        } else {
          if (v.points.empty()) throw EmptyOptionSetError("option set with no points");
          for (const auto& u : v.points) {
            require_dim(u, v.points.front().dim(), "option set point");
          }
        }
      },
      p);
}

std::strong_ordering piece_compare(const SetPiece& a, const SetPiece& b) {
  if (auto c = a.index() <=> b.index(); c != 0) return c;
  if (const auto* fa = std::get_if<FinitePoints>(&a)) {
    return std::lexicographical_compare_three_way(
        fa->points.begin(), fa->points.end(),
        std::get<FinitePoints>(b).points.begin(), std::get<FinitePoints>(b).points.end());
  }
  if (const auto* pa = std::get_if<PosiHull>(&a)) {
    return std::lexicographical_compare_three_way(
        pa->points.begin(), pa->points.end(), std::get<PosiHull>(b).points.begin(),
        std::get<PosiHull>(b).points.end());
  }
  const auto& ra = std::get<OpenRay>(a);
  const auto& rb = std::get<OpenRay>(b);
  if (auto c = ra.base <=> rb.base; c != 0) return c;
  return ra.direction <=> rb.direction;
}

}  // namespace

OptionSet::OptionSet(FinitePoints fp) {
  pieces_.emplace_back(std::move(fp));
  canonicalize();
}

OptionSet::OptionSet(PosiHull ph) {
  pieces_.emplace_back(std::move(ph));
  canonicalize();
}

OptionSet::OptionSet(OpenRay ray) {
  pieces_.emplace_back(std::move(ray));
  canonicalize();
}

OptionSet OptionSet::union_of(std::vector<OptionSet> parts) {
  if (parts.empty()) throw EmptyOptionSetError("union of no option sets");
  OptionSet out;
  for (auto& p : parts) {
    for (auto& piece : p.pieces_) out.pieces_.push_back(std::move(piece));
  }
  out.canonicalize();
  return out;
}

void OptionSet::canonicalize() {
  for (const auto& p : pieces_) validate_piece(p);
  dim_ = piece_dim(pieces_.front());
  for (const auto& p : pieces_) {
    if (piece_dim(p) != dim_) throw DimensionError("option set pieces disagree on dimension");
  }

  // Merge every finite piece into one, sort point lists, then order pieces.
  std::vector<Vec> finite;
  std::vector<SetPiece> rest;
  for (auto& p : pieces_) {
    if (auto* fp = std::get_if<FinitePoints>(&p)) {
      finite.insert(finite.end(), fp->points.begin(), fp->points.end());
    } else {
      if (auto* ph = std::get_if<PosiHull>(&p)) ph->points = sorted_unique(std::move(ph->points));
      rest.push_back(std::move(p));
    }
  }
  std::sort(rest.begin(), rest.end(),
            [](const SetPiece& a, const SetPiece& b) { return piece_compare(a, b) < 0; });
  rest.erase(std::unique(rest.begin(), rest.end(),
                         [](const SetPiece& a, const SetPiece& b) {
                           return piece_compare(a, b) == 0;
                         }),
             rest.end());

  pieces_.clear();
  if (!finite.empty()) pieces_.emplace_back(FinitePoints{sorted_unique(std::move(finite))});
  for (auto& p : rest) pieces_.push_back(std::move(p));
}

const FinitePoints* OptionSet::as_finite() const {
  if (pieces_.size() != 1) return nullptr;
  return std::get_if<FinitePoints>(&pieces_.front());
}

OptionSet OptionSet::with_points_added(const FinitePoints& extra) const {
  std::vector<OptionSet> parts;
  parts.push_back(*this);
  parts.push_back(OptionSet(extra));
  return union_of(std::move(parts));
}

bool operator==(const OptionSet& a, const OptionSet& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const OptionSet& a, const OptionSet& b) {
  const std::size_t n = std::min(a.pieces_.size(), b.pieces_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = piece_compare(a.pieces_[i], b.pieces_[i]); c != 0) return c;
  }
  return a.pieces_.size() <=> b.pieces_.size();
}

}  // namespace choicekit
