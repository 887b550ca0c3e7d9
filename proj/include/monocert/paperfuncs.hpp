#pragma once

#include <array>
#include <string_view>

#include "monocert/enclosure.hpp"
#include "monocert/exactpoly.hpp"
#include "monocert/specfun.hpp"

namespace monocert::paperfuncs {

using exactpoly::RationalPolynomial;
using specfun::IntervalPolynomial;

/// Half-width of the refusal zones around the removable singularities of F
/// (x = 0, x = 1) and around x = 1 for G.
inline constexpr double kGuardRadius = 0x1p-20;

/// a(x) + ln(π)·b(x) with exact rational a and b. Keeps the ln π dependence
/// symbolic so derivatives and identities stay exact.
struct LnPiPolynomial {
  RationalPolynomial rational_part;
  RationalPolynomial ln_pi_part;

  IntervalPolynomial to_interval(const Enclosure& ln_pi_value = specfun::ln_pi()) const;
  LnPiPolynomial operator-() const { return {-rational_part, -ln_pi_part}; }
  friend bool operator==(const LnPiPolynomial&, const LnPiPolynomial&) = default;
};

LnPiPolynomial derivative(const LnPiPolynomial& p);

/// p1..p5 as printed (p1 and p2 are printed identically).
const std::array<RationalPolynomial, 5>& lemma2_polynomials();
/// 120(15-4lnπ)x^3 + 240(20-7lnπ)x^2 + 48(59-32lnπ)x + 72(3-4lnπ)
const LnPiPolynomial& p6();
/// h2 and its first three derivatives, each as displayed.
const LnPiPolynomial& h2_displayed(int order);
/// h2 + 2(x+2)(x+3)(x^2+1)(x^2+2x-1): the h2 that the h1' chain produces when the
/// ψ'' bound enters with its correct sign.
LnPiPolynomial h2_repaired();
/// 13x^6 + 66x^5 + 86x^4 + 8x^3 - 31x^2 - 2x + 8
const RationalPolynomial& q_prime_numerator();

struct FValue {
  double x;
  Enclosure value;
  bool at_singularity;
};

struct GValue {
  double x;
  Enclosure value;
};

/// lnΓ(x+1) / [ln(x²+1) - ln(x+1)], with F(0) = γ and F(1) = 2(1-γ).
/// Throws DomainError for x < 0, InconclusivePrecision inside a guard zone.
FValue F(double x);

/// ln G(x) = [(ln π)x - lnΓ(x+1)] / [ln(x²+1) - ln(x+1)], x > 1 + kGuardRadius.
Enclosure log_G(double x);
/// exp of log_G. Throws RangeError where G exceeds binary64 (x below about 1.004).
GValue G(double x);

/// ln Ω_n = (n/2) ln π - lnΓ(1 + n/2)
Enclosure log_unit_ball_volume(int n);
Enclosure unit_ball_volume(int n);
/// Ω_n^(1/n)
Enclosure log_omega_root_n(int n);
Enclosure omega_root_n(int n);
/// Ω_n^(1/(n ln n)), n >= 2
Enclosure log_omega_root_nlogn(int n);
Enclosure omega_root_nlogn(int n);

/// Ω_n^(1/[ln(n²/4+1) - ln(n/2+1)]) = G(n/2), n >= 3
Enclosure omega_sequence_term(int n);
Enclosure log_omega_sequence_term(int n);

/// (x⁴+4x³-2x²-4x-3) ψ(x+1) + (x+1)(x²+1)(x²+2x-1) ψ'(x+1), x >= 1
Enclosure q_func(double x);
/// 4(x³+3x²-x-1) ψ(x+1) + (x²+2x-1)[2(3x²+2x+1) ψ'(x+1) + (x+1)(x²+1) ψ''(x+1)], x >= 1
Enclosure q_prime_displayed(double x);
/// (13x⁶+66x⁵+86x⁴+8x³-31x²-2x+8) / ((x+1)²(x+2)), x >= 1
Rational q_prime_lower_bound(const Rational& x);
Enclosure q_prime_lower_bound(double x);
/// f'(x)/g'(x) = (x+1)(x²+1) ψ(x+1) / (x²+2x-1), x >= 1. Equals F(1) at x = 1.
Enclosure fg_ratio(double x);

enum class HFunction { kH, kH1, kH2, kH2p, kH2pp, kH2ppp };

std::string_view to_string(HFunction which);

/// Auxiliary functions of the G argument. h and h1 need x >= 1 (both are
/// regular at 1); the h2 family is polynomial and also needs x >= 1.
Enclosure h_family(HFunction which, double x);

/// h1'(x) = 4p1 ψ(x+1) + 2p3 ψ'(x+1) + p4 ψ''(x+1) - 4p1 ln π, x >= 1
Enclosure h1_prime(double x);

/// Every stage of the h1' lower-bound chain at one point.
struct H1PrimeChain {
  Enclosure exact;
  Enclosure psi_substituted;
  Enclosure collected_as_printed;
  Enclosure log1p_substituted;
  Enclosure final_form;
  Enclosure repaired_final;
};

H1PrimeChain h1_prime_chain(double x);

}  // namespace monocert::paperfuncs
