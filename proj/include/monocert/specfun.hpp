#pragma once

#include <string_view>
#include <vector>

#include "monocert/enclosure.hpp"
#include "monocert/exactpoly.hpp"

namespace monocert::specfun {

enum class ConstantId { kPi, kLnPi, kEulerGamma, kPiSqOver6, kZeta3 };

/// A mathematical constant shipped as a 50-significant-digit decimal literal
/// and enclosed to two ulps.
struct TrustedConstant {
  ConstantId id;
  std::string_view name;
  std::string_view digits;
  Enclosure value;
};

const TrustedConstant& trusted(ConstantId id);
const std::vector<TrustedConstant>& trusted_constants();

inline Enclosure pi() { return trusted(ConstantId::kPi).value; }
inline Enclosure ln_pi() { return trusted(ConstantId::kLnPi).value; }
inline Enclosure euler_gamma() { return trusted(ConstantId::kEulerGamma).value; }
inline Enclosure pi_sq_over_6() { return trusted(ConstantId::kPiSqOver6).value; }
inline Enclosure zeta_3() { return trusted(ConstantId::kZeta3).value; }

/// Arguments below this are pushed up by the recurrences before the
/// asymptotic series is applied.
inline constexpr double kAsymptoticThreshold = 8.0;

/// ln Γ(x) for x.lo() > 0 (Stirling series through the B10 term, remainder
/// bounded by the first omitted term).
Enclosure ln_gamma(const Enclosure& x);

/// ψ^(k)(x) for k in {0, 1, 2} and x.lo() > 0.
Enclosure polygamma(int k, const Enclosure& x);

/// Outward-rounded pair of elementary bounds.
struct Bounds {
  double lower;
  double upper;
};

/// ln x - 1/x < ψ(x) < ln x - 1/(2x)
Bounds digamma_bounds_paper(double x);
/// (k-1)!/x^k + k!/(2x^(k+1)) < |ψ^(k)(x)| < (k-1)!/x^k + k!/x^(k+1), k >= 1
Bounds polygamma_bounds_paper(int k, double x);
/// 2t/(2+t) <= ln(1+t) <= t(2+t)/(2(1+t)), t > 0
Bounds log1p_bounds_paper(double t);

/// Polynomial with enclosure coefficients, ascending degree.
class IntervalPolynomial {
 public:
  IntervalPolynomial() = default;
  explicit IntervalPolynomial(std::vector<Enclosure> ascending);
  static IntervalPolynomial from_rational(const exactpoly::RationalPolynomial& p);

  const std::vector<Enclosure>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  IntervalPolynomial operator-() const;
  friend bool operator==(const IntervalPolynomial&, const IntervalPolynomial&) = default;

 private:
  std::vector<Enclosure> coeffs_;
};

Enclosure eval_interval_poly(const IntervalPolynomial& p, const Enclosure& x);

/// Positivity on [a, inf) for a >= 0 through the lower-endpoint polynomial:
/// for x >= 0 every coefficient choice gives p(x) >= p_lo(x). Not certified when
/// some coefficient enclosure touches zero.
exactpoly::PositivityCertificate certify_positive_interval_poly(const IntervalPolynomial& p, const Rational& a);

}  // namespace monocert::specfun
