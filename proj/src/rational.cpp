#include "choicekit/rational.hpp"

#include <cctype>
#include <ostream>

namespace choicekit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return all_digits(s);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !all_digits(den)) {
    throw FormatError("bad rational literal: '" + std::string(text) + "'");
  }
  mpq_class q(std::string(num) + "/" + std::string(den));
  if (sgn(q.get_den()) == 0) {
    throw FormatError("rational with zero denominator: '" + std::string(text) + "'");
  }
  q.canonicalize();
  Rational r;
  r.q_ = std::move(q);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace choicekit
