#include "sigma/numeric.hpp"

#include <cctype>

#include "sigma/errors.hpp"

namespace sigma {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text))
      throw ParseError(ParseError::Kind::bad_rational,
                       "not a rational: '" + text + "'");
    return Rational(Int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    throw ParseError(ParseError::Kind::bad_rational,
                     "not a rational: '" + text + "'");
  Int d(den);
  if (d == 0)
    throw ParseError(ParseError::Kind::bad_rational,
                     "zero denominator: '" + text + "'");
  return Rational(Int(num), d);
}

std::string format_rational(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace sigma
