#include "monocert/paperfuncs.hpp"

#include <cmath>
#include <string>

#include "monocert/chain_forms.hpp"

namespace monocert::paperfuncs {

namespace {

using specfun::ln_gamma;
using specfun::polygamma;

RationalPolynomial ints(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return RationalPolynomial(std::move(c));
}

LnPiPolynomial ln_pi_poly(std::initializer_list<long> rational, std::initializer_list<long> ln_pi) {
  return {ints(rational), ints(ln_pi)};
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": argument must be finite");
}

void require_at_least_one(double x, const char* what) {
  require_finite(x, what);
  if (x < 1.0) throw DomainError(std::string(what) + ": requires x >= 1");
}

/// ln(x²+1) - ln(x+1), taken as a single logarithm of the ratio.
Enclosure log_ratio(const Enclosure& X) { return log((square(X) + 1.0) / (X + 1.0)); }

/// x⁴ + 4x³ - 2x² - 4x - 3
Enclosure psi_coefficient(const Enclosure& X) {
  return exactpoly::eval_enclosure(ints({-3, -4, -2, 4, 1}), X);
}

}  // namespace

IntervalPolynomial LnPiPolynomial::to_interval(const Enclosure& ln_pi_value) const {
  const std::size_t n = std::max(rational_part.coefficients().size(), ln_pi_part.coefficients().size());
  std::vector<Enclosure> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.push_back(Enclosure::from_rational(rational_part.coefficient(i)) +
                ln_pi_value * Enclosure::from_rational(ln_pi_part.coefficient(i)));
  }
  return IntervalPolynomial(std::move(c));
}

LnPiPolynomial derivative(const LnPiPolynomial& p) {
  return {exactpoly::derivative(p.rational_part), exactpoly::derivative(p.ln_pi_part)};
}

const std::array<RationalPolynomial, 5>& lemma2_polynomials() {
  static const std::array<RationalPolynomial, 5> polys{
      ints({-1, -1, 3, 1}),          // x³ + 3x² - x - 1
      ints({-1, -1, 3, 1}),          // printed identical to p1
      ints({-1, 0, 2, 8, 3}),        // 3x⁴ + 8x³ + 2x² - 1
      ints({-1, 1, 2, 2, 3, 1}),     // x⁵ + 3x⁴ + 2x³ + 2x² + x - 1
      ints({-1, -3, 0, 6, 5, 1}),    // x⁵ + 5x⁴ + 6x³ - 3x - 1
  };
  return polys;
}

const LnPiPolynomial& p6() {
  static const LnPiPolynomial p = ln_pi_poly({216, 2832, 4800, 1800}, {-288, -1536, -1680, -480});
  return p;
}

const LnPiPolynomial& h2_displayed(int order) {
  static const std::array<LnPiPolynomial, 4> family{
      ln_pi_poly({4, -12, 13, -36, -118, -80, -15}, {-8, -28, -12, 48, 64, 28, 4}),
      ln_pi_poly({-12, 26, -108, -472, -400, -90}, {-28, -24, 144, 256, 140, 24}),
      ln_pi_poly({26, -216, -1416, -1600, -450}, {-24, 288, 768, 560, 120}),
      ln_pi_poly({-216, -2832, -4800, -1800}, {288, 1536, 1680, 480}),
  };
  if (order < 0 || order > 3) throw DomainError("h2_displayed: order must be 0..3");
  return family[static_cast<std::size_t>(order)];
}

LnPiPolynomial h2_repaired() {
  LnPiPolynomial r = h2_displayed(0);
  r.rational_part += ints({12, 10, 2}) * ints({1, 0, 1}) * ints({-1, 2, 1});
  return r;
}

const RationalPolynomial& q_prime_numerator() {
  static const RationalPolynomial p = ints({8, -2, -31, 8, 86, 66, 13});
  return p;
}

FValue F(double x) {
  require_finite(x, "F");
  if (x < 0.0) throw DomainError("F: requires x >= 0");
  if (x == 0.0) return {x, specfun::euler_gamma(), true};
  if (x == 1.0) return {x, 2.0 * (1.0 - specfun::euler_gamma()), true};
  if (x <= kGuardRadius || std::fabs(x - 1.0) <= kGuardRadius) {
    throw InconclusivePrecision("F: x inside a guard zone around a removable singularity");
  }
  const Enclosure X = Enclosure::point(x);
  return {x, ln_gamma(X + 1.0) / log_ratio(X), false};
}

Enclosure log_G(double x) {
  require_finite(x, "G");
  if (!(x > 1.0 + kGuardRadius)) throw DomainError("G: requires x > 1 + 2^-20");
  const Enclosure X = Enclosure::point(x);
  return (specfun::ln_pi() * X - ln_gamma(X + 1.0)) / log_ratio(X);
}

GValue G(double x) { return {x, exp(log_G(x))}; }

Enclosure log_unit_ball_volume(int n) {
  if (n < 1) throw DomainError("unit_ball_volume: requires n >= 1");
  const double half = n / 2.0;
  return half * specfun::ln_pi() - ln_gamma(Enclosure::point(1.0 + half));
}

Enclosure unit_ball_volume(int n) { return exp(log_unit_ball_volume(n)); }

Enclosure log_omega_root_n(int n) { return log_unit_ball_volume(n) / static_cast<double>(n); }

Enclosure omega_root_n(int n) { return exp(log_omega_root_n(n)); }

Enclosure log_omega_root_nlogn(int n) {
  if (n < 2) throw DomainError("omega_root_nlogn: requires n >= 2");
  const Enclosure N = Enclosure::point(n);
  return log_unit_ball_volume(n) / (N * log(N));
}

Enclosure omega_root_nlogn(int n) { return exp(log_omega_root_nlogn(n)); }

Enclosure log_omega_sequence_term(int n) {
  if (n < 3) throw DomainError("omega_sequence_term: requires n >= 3");
  return log_G(n / 2.0);
}

Enclosure omega_sequence_term(int n) {
  if (n < 3) throw DomainError("omega_sequence_term: requires n >= 3");
  return G(n / 2.0).value;
}

Enclosure q_func(double x) {
  require_at_least_one(x, "q");
  const Enclosure X = Enclosure::point(x);
  const Enclosure X1 = X + 1.0;
  return psi_coefficient(X) * polygamma(0, X1) + chain::p4(X) * polygamma(1, X1);
}

Enclosure q_prime_displayed(double x) {
  require_at_least_one(x, "q'");
  const Enclosure X = Enclosure::point(x);
  const Enclosure X1 = X + 1.0;
  const Enclosure bracket = 2.0 * (3.0 * square(X) + 2.0 * X + 1.0) * polygamma(1, X1) +
                            X1 * (square(X) + 1.0) * polygamma(2, X1);
  return 4.0 * chain::p1(X) * polygamma(0, X1) + (square(X) + 2.0 * X - 1.0) * bracket;
}

Rational q_prime_lower_bound(const Rational& x) {
  if (x < 1) throw DomainError("q' lower bound: requires x >= 1");
  return exactpoly::eval_at(q_prime_numerator(), x) / ((x + 1) * (x + 1) * (x + 2));
}

Enclosure q_prime_lower_bound(double x) {
  require_at_least_one(x, "q' lower bound");
  return chain::q_prime_final(Enclosure::point(x));
}

Enclosure fg_ratio(double x) {
  require_at_least_one(x, "f'/g'");
  const Enclosure X = Enclosure::point(x);
  const Enclosure X1 = X + 1.0;
  return X1 * (square(X) + 1.0) * polygamma(0, X1) / (square(X) + 2.0 * X - 1.0);
}

std::string_view to_string(HFunction which) {
  switch (which) {
    case HFunction::kH: return "h";
    case HFunction::kH1: return "h1";
    case HFunction::kH2: return "h2";
    case HFunction::kH2p: return "h2'";
    case HFunction::kH2pp: return "h2''";
    case HFunction::kH2ppp: return "h2'''";
  }
  return "?";
}

Enclosure h_family(HFunction which, double x) {
  require_at_least_one(x, "h family");
  const Enclosure X = Enclosure::point(x);
  const Enclosure X1 = X + 1.0;
  const Enclosure L = specfun::ln_pi();
  switch (which) {
    case HFunction::kH: {
      const Enclosure lead = X1 * (square(X) + 1.0) * (L - polygamma(0, X1)) / (square(X) + 2.0 * X - 1.0);
      return lead * log_ratio(X) - L * X + ln_gamma(X1);
    }
    case HFunction::kH1:
      return psi_coefficient(X) * (polygamma(0, X1) - L) + chain::p4(X) * polygamma(1, X1);
    case HFunction::kH2: return specfun::eval_interval_poly(h2_displayed(0).to_interval(), X);
    case HFunction::kH2p: return specfun::eval_interval_poly(h2_displayed(1).to_interval(), X);
    case HFunction::kH2pp: return specfun::eval_interval_poly(h2_displayed(2).to_interval(), X);
    case HFunction::kH2ppp: return specfun::eval_interval_poly(h2_displayed(3).to_interval(), X);
  }
  throw DomainError("h family: unknown member");
}

Enclosure h1_prime(double x) {
  require_at_least_one(x, "h1'");
  const Enclosure X = Enclosure::point(x);
  const Enclosure X1 = X + 1.0;
  const Enclosure p1 = chain::p1(X);
  return 4.0 * p1 * polygamma(0, X1) + 2.0 * chain::p3(X) * polygamma(1, X1) + chain::p4(X) * polygamma(2, X1) -
         4.0 * p1 * specfun::ln_pi();
}

H1PrimeChain h1_prime_chain(double x) {
  require_at_least_one(x, "h1' chain");
  const Enclosure X = Enclosure::point(x);
  const Enclosure L = specfun::ln_pi();
  const Enclosure ln1 = log(X + 1.0);
  return {
      h1_prime(x),
      chain::h1_prime_psi_substituted(X, L, ln1),
      chain::h1_prime_collected_as_printed(X, L, ln1),
      chain::h1_prime_log1p_substituted(X, L),
      chain::h1_prime_final(X, L),
      chain::h1_prime_repaired_final(X, L),
  };
}

}  // namespace monocert::paperfuncs
