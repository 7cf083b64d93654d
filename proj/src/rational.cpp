#include "dressian/rational.hpp"

#include <cctype>
#include <string>

#include "dressian/error.hpp"

namespace dressian {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  const Integer q{std::string(den)};
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  const std::string n(num[0] == '+' ? num.substr(1) : num);
  return Rational(Integer(n), q);
}

std::string format_rational(const Rational& value) { return value.str(); }

}  // namespace dressian
