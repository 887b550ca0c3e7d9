#pragma once

#include <initializer_list>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "monocert/enclosure.hpp"
#include "monocert/rational.hpp"

namespace monocert::exactpoly {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree order. The zero polynomial has no coefficients; otherwise
/// the leading coefficient is nonzero.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> ascending);
  RationalPolynomial(std::initializer_list<Rational> ascending);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, std::size_t degree);
  /// x - root
  static RationalPolynomial linear_factor(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i, zero beyond the degree.
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const;

  RationalPolynomial operator-() const;
  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const Rational& c);

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b);
RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b);
RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b);
RationalPolynomial operator*(RationalPolynomial a, const Rational& c);
RationalPolynomial operator*(const Rational& c, RationalPolynomial a);

Rational eval_at(const RationalPolynomial& p, const Rational& x);
/// Interval Horner evaluation with exactly enclosed coefficients.
Enclosure eval_enclosure(const RationalPolynomial& p, const Enclosure& x);
RationalPolynomial derivative(const RationalPolynomial& p);
/// q(t) = p(t + a)
RationalPolynomial taylor_shift(const RationalPolynomial& p, const Rational& a);

/// Euclidean division; throws DomainError when the divisor is zero.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& num, const RationalPolynomial& den);
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// Sign changes in the coefficient sequence, zeros skipped. Throws DomainError for the zero polynomial.
int descartes_sign_changes(const RationalPolynomial& p);

/// Cauchy bound 1 + max|c_i / c_deg|: every complex root has modulus strictly below it.
Rational cauchy_root_bound(const RationalPolynomial& p);

/// p, p', then negated remainders, each scaled to a monic-magnitude leading coefficient.
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p);

/// Number of distinct real roots in the open interval (a, b).
///
/// A root sitting on an endpoint is deflated away exactly before the sign
/// variations are counted. Throws DomainError for a >= b or the zero polynomial.
int sturm_root_count(const RationalPolynomial& p, const Rational& a, const Rational& b);

/// Quotient of two rational polynomials; equality is decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() : den_(RationalPolynomial::constant(1)) {}
  RationalFunction(RationalPolynomial num, RationalPolynomial den = RationalPolynomial::constant(1));
  static RationalFunction constant(const Rational& c) { return RationalFunction(RationalPolynomial::constant(c)); }
  /// The indeterminate x.
  static RationalFunction variable() { return RationalFunction(RationalPolynomial({Rational(0), Rational(1)})); }

  const RationalPolynomial& numerator() const { return num_; }
  const RationalPolynomial& denominator() const { return den_; }

  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  RationalPolynomial num_;
  RationalPolynomial den_;
};

RationalFunction operator+(RationalFunction a, const RationalFunction& b);
RationalFunction operator-(RationalFunction a, const RationalFunction& b);
RationalFunction operator*(RationalFunction a, const RationalFunction& b);
RationalFunction operator/(RationalFunction a, const RationalFunction& b);

enum class CertificateMethod {
  kNone,
  kAllShiftedCoefficientsNonnegative,
  kDescartesOneRootLocalized,
  kSturmZeroRoots,
};

enum class Verdict { kPositive, kNotCertified };

std::string_view to_string(CertificateMethod m);
std::string_view to_string(Verdict v);

struct EndpointValue {
  Rational point;
  Rational value;

  friend bool operator==(const EndpointValue&, const EndpointValue&) = default;
};

/// Why a polynomial is positive on the ray [domain_lower, +inf).
///
/// Only the fields relevant to `method` are populated. For certificates built
/// from an interval polynomial, `source_coefficients` holds the coefficient
/// enclosures and `polynomial` is their lower-endpoint polynomial.
struct PositivityCertificate {
  RationalPolynomial polynomial;
  Rational domain_lower;
  CertificateMethod method = CertificateMethod::kNone;
  /// Descartes count of `polynomial` itself.
  int sign_changes = 0;
  std::vector<EndpointValue> endpoint_values;
  std::optional<Rational> localization_point;
  std::vector<Rational> shifted_coefficients;
  std::optional<Rational> root_bound;
  std::optional<int> sturm_roots;
  std::vector<Enclosure> source_coefficients;
  Verdict verdict = Verdict::kNotCertified;
};

/// Tries, in order: the Descartes one-root localization argument with
/// localization point c, the all-nonnegative Taylor shift about a, and a Sturm
/// count on (a, Cauchy bound). Never throws for a nonzero polynomial.
PositivityCertificate certify_positive_on_ray(const RationalPolynomial& p, const Rational& a,
                                              const Rational& c = Rational(0));

/// Re-derives every premise the certificate's method relies on from the
/// recorded polynomial. A positive verdict whose premises fail is rejected.
bool premises_hold(const PositivityCertificate& cert);

}  // namespace monocert::exactpoly
