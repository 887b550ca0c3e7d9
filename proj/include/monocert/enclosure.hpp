#pragma once

#include <string_view>

#include "monocert/rational.hpp"

namespace monocert {

/// Closed interval [lo, hi] of binary64 numbers that is guaranteed to contain
/// a real value.
///
/// Every arithmetic result is computed in round-to-nearest and then widened by
/// one ulp on each side, which covers the half-ulp rounding error of the
/// operation. libm transcendental calls (log, exp) are widened by two ulps.
/// Results that leave the finite range raise RangeError.
class Enclosure {
 public:
  constexpr Enclosure() = default;
  Enclosure(double lo, double hi);

  static Enclosure point(double v);
  /// Tightest enclosure of an exact rational (1 ulp wide or exact).
  static Enclosure from_rational(const Rational& r);
  /// Correctly rounded decimal literal widened by one ulp on each side.
  static Enclosure from_decimal(std::string_view digits);
  static Enclosure hull(const Enclosure& a, const Enclosure& b);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const;
  double width() const { return hi_ - lo_; }
  double magnitude() const;

  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Enclosure& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool overlaps(const Enclosure& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
  bool positive() const { return lo_ > 0.0; }
  bool negative() const { return hi_ < 0.0; }
  bool excludes_zero() const { return positive() || negative(); }

  Enclosure operator-() const { return Enclosure(-hi_, -lo_); }
  Enclosure& operator+=(const Enclosure& rhs);
  Enclosure& operator-=(const Enclosure& rhs);
  Enclosure& operator*=(const Enclosure& rhs);
  Enclosure& operator/=(const Enclosure& rhs);

  friend bool operator==(const Enclosure&, const Enclosure&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Enclosure operator+(Enclosure a, const Enclosure& b);
Enclosure operator-(Enclosure a, const Enclosure& b);
Enclosure operator*(Enclosure a, const Enclosure& b);
Enclosure operator/(Enclosure a, const Enclosure& b);
Enclosure operator+(Enclosure a, double b);
Enclosure operator-(Enclosure a, double b);
Enclosure operator*(Enclosure a, double b);
Enclosure operator/(Enclosure a, double b);
Enclosure operator+(double a, const Enclosure& b);
Enclosure operator-(double a, const Enclosure& b);
Enclosure operator*(double a, const Enclosure& b);
Enclosure operator/(double a, const Enclosure& b);

Enclosure square(const Enclosure& x);
Enclosure pow(const Enclosure& x, unsigned n);
/// Requires x.lo() > 0.
Enclosure log(const Enclosure& x);
Enclosure exp(const Enclosure& x);
Enclosure abs(const Enclosure& x);

/// a < b holds for every pair of values in the two enclosures.
inline bool certainly_less(const Enclosure& a, const Enclosure& b) { return a.hi() < b.lo(); }

/// Distance from v to the nearest point of x (0 when contained).
double distance(const Enclosure& x, double v);

}  // namespace monocert
