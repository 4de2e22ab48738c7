#include "lefschetz/rational.hpp"

#include <cctype>

namespace lefschetz {

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

namespace {

bool parse_integer(const std::string& s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  out = Integer(s);
  return true;
}

} // namespace

std::optional<Rational> parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  Integer num, den;
  if (slash == std::string::npos) {
    if (!parse_integer(s, num)) return std::nullopt;
    return Rational(num);
  }
  if (!parse_integer(s.substr(0, slash), num)) return std::nullopt;
  if (!parse_integer(s.substr(slash + 1), den)) return std::nullopt;
  if (den <= 0) return std::nullopt;
  return Rational(num, den);
}

} // namespace lefschetz
