#pragma once

#include <cstdint>
#include <random>

#include "monocert/exactpoly.hpp"

namespace support {

/// Fixed-seed generator so every run samples the same points.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0x5eed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1p-53; }
  double uniform(double a, double b) { return a + (b - a) * unit(); }
  long integer(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  monocert::Rational rational(long span = 20, long max_den = 7) {
    return monocert::Rational(integer(-span, span), integer(1, max_den));
  }

  /// Degree exactly `degree`, small rational coefficients.
  monocert::exactpoly::RationalPolynomial polynomial(int degree) {
    std::vector<monocert::Rational> c;
    for (int i = 0; i <= degree; ++i) c.push_back(rational());
    while (c.back() == 0) c.back() = rational();
    return monocert::exactpoly::RationalPolynomial(std::move(c));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace support
