#include "monocert/enclosure.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

namespace monocert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

Enclosure widened(double lo, double hi) {
  lo = down(lo);
  hi = up(hi);
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw RangeError("enclosure left the finite binary64 range");
  return Enclosure(lo, hi);
}

}  // namespace

Enclosure::Enclosure(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi)) throw DomainError("enclosure endpoint is NaN");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw RangeError("enclosure endpoint is not finite");
  if (lo > hi) throw DomainError("enclosure with lo > hi");
}

Enclosure Enclosure::point(double v) { return Enclosure(v, v); }

Enclosure Enclosure::from_rational(const Rational& r) {
  double approx = r.convert_to<double>();
  if (!std::isfinite(approx)) throw RangeError("rational outside binary64 range");
  double lo = approx;
  double hi = approx;
  while (rational_from_double(lo) > r) lo = down(lo);
  while (rational_from_double(hi) < r) hi = up(hi);
  return Enclosure(lo, hi);
}

Enclosure Enclosure::from_decimal(std::string_view digits) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw DomainError("bad decimal literal '" + std::string(digits) + "'");
  }
  return widened(v, v);
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
  return Enclosure(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

double Enclosure::mid() const {
  double m = lo_ + 0.5 * (hi_ - lo_);
  return std::isfinite(m) ? m : 0.5 * lo_ + 0.5 * hi_;
}

double Enclosure::magnitude() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }

Enclosure& Enclosure::operator+=(const Enclosure& rhs) { return *this = widened(lo_ + rhs.lo_, hi_ + rhs.hi_); }

Enclosure& Enclosure::operator-=(const Enclosure& rhs) { return *this = widened(lo_ - rhs.hi_, hi_ - rhs.lo_); }

Enclosure& Enclosure::operator*=(const Enclosure& rhs) {
  double a = lo_ * rhs.lo_;
  double b = lo_ * rhs.hi_;
  double c = hi_ * rhs.lo_;
  double d = hi_ * rhs.hi_;
  return *this = widened(std::min({a, b, c, d}), std::max({a, b, c, d}));
}

Enclosure& Enclosure::operator/=(const Enclosure& rhs) {
  if (!rhs.excludes_zero()) throw DomainError("division by an enclosure containing zero");
  double a = lo_ / rhs.lo_;
  double b = lo_ / rhs.hi_;
  double c = hi_ / rhs.lo_;
  double d = hi_ / rhs.hi_;
  return *this = widened(std::min({a, b, c, d}), std::max({a, b, c, d}));
}

Enclosure operator+(Enclosure a, const Enclosure& b) { return a += b; }
Enclosure operator-(Enclosure a, const Enclosure& b) { return a -= b; }
Enclosure operator*(Enclosure a, const Enclosure& b) { return a *= b; }
Enclosure operator/(Enclosure a, const Enclosure& b) { return a /= b; }
Enclosure operator+(Enclosure a, double b) { return a += Enclosure::point(b); }
Enclosure operator-(Enclosure a, double b) { return a -= Enclosure::point(b); }
Enclosure operator*(Enclosure a, double b) { return a *= Enclosure::point(b); }
Enclosure operator/(Enclosure a, double b) { return a /= Enclosure::point(b); }
Enclosure operator+(double a, const Enclosure& b) { return Enclosure::point(a) + b; }
Enclosure operator-(double a, const Enclosure& b) { return Enclosure::point(a) - b; }
Enclosure operator*(double a, const Enclosure& b) { return Enclosure::point(a) * b; }
Enclosure operator/(double a, const Enclosure& b) { return Enclosure::point(a) / b; }

Enclosure square(const Enclosure& x) {
  if (x.lo() >= 0.0) return widened(x.lo() * x.lo(), x.hi() * x.hi());
  if (x.hi() <= 0.0) return widened(x.hi() * x.hi(), x.lo() * x.lo());
  double m = x.magnitude();
  return Enclosure(0.0, up(m * m));
}

Enclosure pow(const Enclosure& x, unsigned n) {
  Enclosure result = Enclosure::point(1.0);
  Enclosure base = x;
  // Binary powering; every factor is an enclosure so the product stays valid.
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base = square(base);
  }
  return result;
}

Enclosure log(const Enclosure& x) {
  if (!(x.lo() > 0.0)) throw DomainError("log of an enclosure reaching zero or below");
  return widened(down(std::log(x.lo())), up(std::log(x.hi())));
}

Enclosure exp(const Enclosure& x) {
  double lo = std::max(0.0, down(down(std::exp(x.lo()))));
  double hi = up(up(std::exp(x.hi())));
  if (!std::isfinite(hi)) throw RangeError("exp overflow");
  return Enclosure(lo, hi);
}

Enclosure abs(const Enclosure& x) {
  if (x.lo() >= 0.0) return x;
  if (x.hi() <= 0.0) return -x;
  return Enclosure(0.0, x.magnitude());
}

double distance(const Enclosure& x, double v) {
  if (v < x.lo()) return x.lo() - v;
  if (v > x.hi()) return v - x.hi();
  return 0.0;
}

}  // namespace monocert
