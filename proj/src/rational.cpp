#include "monocert/rational.hpp"

#include <cmath>
#include <string>

namespace monocert {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("rational_from_double: non-finite value");
  // cpp_rational's double constructor is exact for finite inputs.
  return Rational(x);
}

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

namespace {

BigInt parse_integer(std::string_view s) {
  if (s.empty()) throw DomainError("parse_rational: empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw DomainError("parse_rational: sign without digits");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw DomainError("parse_rational: bad digit in '" + std::string(s) + "'");
  }
  return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw DomainError("parse_rational: zero denominator");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    std::string digits(int_part);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    digits += frac_part;
    BigInt scaled = parse_integer(digits);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    return Rational(scaled, scale);
  }
  return Rational(parse_integer(text));
}

int sign(const Rational& r) { return r.sign(); }

}  // namespace monocert
