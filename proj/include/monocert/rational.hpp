#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace monocert {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an enclosure would leave the finite binary64 range.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Thrown when a value is mathematically defined but cannot be enclosed tightly
/// enough to be useful (e.g. 0/0-unstable quotients next to a removable singularity).
class InconclusivePrecision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact value of a finite binary64 number.
Rational rational_from_double(double x);

/// "num/den", denominator always printed (zero is "0/1").
std::string to_string(const Rational& r);

/// Accepts "a", "a/b" or a plain decimal such as "-1.25".
Rational parse_rational(std::string_view text);

int sign(const Rational& r);

}  // namespace monocert
