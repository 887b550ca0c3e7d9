#include "monocert/specfun.hpp"

#include <algorithm>
#include <array>

namespace monocert::specfun {

namespace {

std::vector<TrustedConstant> make_constants() {
  // 50 significant digits, cross-checked against an independent 60-digit computation.
  struct Literal {
    ConstantId id;
    std::string_view name;
    std::string_view digits;
  };
  static constexpr std::array<Literal, 5> kLiterals{{
      {ConstantId::kPi, "pi", "3.1415926535897932384626433832795028841971693993751"},
      {ConstantId::kLnPi, "ln_pi", "1.1447298858494001741434273513530587116472948129153"},
      {ConstantId::kEulerGamma, "euler_gamma", "0.57721566490153286060651209008240243104215933593992"},
      {ConstantId::kPiSqOver6, "pi_sq_over_6", "1.6449340668482264364724151666460251892189499012068"},
      {ConstantId::kZeta3, "zeta_3", "1.2020569031595942853997381615114499907649862923405"},
  }};
  std::vector<TrustedConstant> out;
  for (const auto& lit : kLiterals) out.push_back({lit.id, lit.name, lit.digits, Enclosure::from_decimal(lit.digits)});
  return out;
}

Enclosure ratio(long num, long den) { return Enclosure::from_rational(Rational(num, den)); }

struct AsymptoticSeries {
  // Coefficient of z^-(first_power + step*i) for i = 0.., then the first omitted one.
  std::vector<Enclosure> coefficients;
  Enclosure omitted;
  unsigned first_power;
};

// ln Γ: B_2k / (2k(2k-1)) z^-(2k-1)
const AsymptoticSeries& stirling_series() {
  static const AsymptoticSeries s{
      {ratio(1, 12), ratio(-1, 360), ratio(1, 1260), ratio(-1, 1680), ratio(1, 1188)}, ratio(-691, 360360), 1};
  return s;
}

// ψ: -B_2k / (2k) z^-2k
const AsymptoticSeries& digamma_series() {
  static const AsymptoticSeries s{
      {ratio(-1, 12), ratio(1, 120), ratio(-1, 252), ratio(1, 240), ratio(-1, 132)}, ratio(691, 32760), 2};
  return s;
}

// ψ': B_2k z^-(2k+1)
const AsymptoticSeries& trigamma_series() {
  static const AsymptoticSeries s{
      {ratio(1, 6), ratio(-1, 30), ratio(1, 42), ratio(-1, 30), ratio(5, 66)}, ratio(-691, 2730), 3};
  return s;
}

// ψ'': -(2k+1) B_2k z^-(2k+2)
const AsymptoticSeries& tetragamma_series() {
  static const AsymptoticSeries s{
      {ratio(-1, 2), ratio(1, 6), ratio(-1, 6), ratio(3, 10), ratio(-5, 6)}, ratio(8983, 2730), 4};
  return s;
}

/// Σ c_i z^-(p + 2i) ± |c_omitted| z.lo^-(p + 2n)
Enclosure sum_series(const AsymptoticSeries& s, const Enclosure& z) {
  const Enclosure inv = 1.0 / z;
  const Enclosure inv2 = square(inv);
  Enclosure term_power = pow(inv, s.first_power);
  Enclosure acc = Enclosure::point(0.0);
  for (const auto& c : s.coefficients) {
    acc += c * term_power;
    term_power *= inv2;
  }
  // term_power now encloses z^-(p + 2n); its upper end bounds the power over all of z.
  double radius = (abs(s.omitted) * Enclosure::point(term_power.hi())).hi();
  return acc + Enclosure(-radius, radius);
}

Enclosure half_ln_two_pi() {
  static const Enclosure v = 0.5 * (log(Enclosure::point(2.0)) + ln_pi());
  return v;
}

void require_positive(const Enclosure& x, const char* what) {
  if (!(x.lo() > 0.0)) throw DomainError(std::string(what) + ": argument must be positive");
}

}  // namespace

const std::vector<TrustedConstant>& trusted_constants() {
  static const std::vector<TrustedConstant> table = make_constants();
  return table;
}

const TrustedConstant& trusted(ConstantId id) {
  const auto& table = trusted_constants();
  return *std::find_if(table.begin(), table.end(), [id](const TrustedConstant& c) { return c.id == id; });
}

Enclosure ln_gamma(const Enclosure& x) {
  require_positive(x, "ln_gamma");
  Enclosure z = x;
  Enclosure shift_log = Enclosure::point(0.0);
  while (z.lo() < kAsymptoticThreshold) {
    shift_log += log(z);
    z += Enclosure::point(1.0);
  }
  Enclosure main = (z - 0.5) * log(z) - z + half_ln_two_pi();
  return main + sum_series(stirling_series(), z) - shift_log;
}

Enclosure polygamma(int k, const Enclosure& x) {
  if (k < 0 || k > 2) throw DomainError("polygamma: only k in {0, 1, 2} is supported");
  require_positive(x, "polygamma");
  Enclosure z = x;
  Enclosure correction = Enclosure::point(0.0);
  // ψ^(k)(z) = ψ^(k)(z+1) - (-1)^k k! / z^(k+1)
  while (z.lo() < kAsymptoticThreshold) {
    switch (k) {
      case 0: correction -= 1.0 / z; break;
      case 1: correction += 1.0 / square(z); break;
      default: correction -= 2.0 / pow(z, 3); break;
    }
    z += Enclosure::point(1.0);
  }
  Enclosure head;
  switch (k) {
    case 0: head = log(z) - 0.5 / z + sum_series(digamma_series(), z); break;
    case 1: head = 1.0 / z + 0.5 / square(z) + sum_series(trigamma_series(), z); break;
    default: head = -1.0 / square(z) - 1.0 / pow(z, 3) + sum_series(tetragamma_series(), z); break;
  }
  return head + correction;
}

Bounds digamma_bounds_paper(double x) {
  if (!(x > 0.0)) throw DomainError("digamma_bounds_paper: x must be positive");
  const Enclosure X = Enclosure::point(x);
  const Enclosure lx = log(X);
  return {(lx - 1.0 / X).lo(), (lx - 0.5 / X).hi()};
}

Bounds polygamma_bounds_paper(int k, double x) {
  if (k < 1) throw DomainError("polygamma_bounds_paper: k must be >= 1");
  if (!(x > 0.0)) throw DomainError("polygamma_bounds_paper: x must be positive");
  const Enclosure X = Enclosure::point(x);
  BigInt f = 1;
  for (int i = 2; i < k; ++i) f *= i;
  const Enclosure fact_km1 = Enclosure::from_rational(Rational(f));
  const Enclosure fact_k = Enclosure::from_rational(Rational(f * k));
  const Enclosure lead = fact_km1 / pow(X, static_cast<unsigned>(k));
  const Enclosure next = fact_k / pow(X, static_cast<unsigned>(k + 1));
  return {(lead + 0.5 * next).lo(), (lead + next).hi()};
}

Bounds log1p_bounds_paper(double t) {
  if (!(t > 0.0)) throw DomainError("log1p_bounds_paper: t must be positive");
  const Enclosure T = Enclosure::point(t);
  return {(2.0 * T / (2.0 + T)).lo(), (T * (2.0 + T) / (2.0 * (1.0 + T))).hi()};
}

IntervalPolynomial::IntervalPolynomial(std::vector<Enclosure> ascending) : coeffs_(std::move(ascending)) {}

IntervalPolynomial IntervalPolynomial::from_rational(const exactpoly::RationalPolynomial& p) {
  std::vector<Enclosure> c;
  c.reserve(p.coefficients().size());
  for (const auto& r : p.coefficients()) c.push_back(Enclosure::from_rational(r));
  return IntervalPolynomial(std::move(c));
}

IntervalPolynomial IntervalPolynomial::operator-() const {
  std::vector<Enclosure> c;
  c.reserve(coeffs_.size());
  for (const auto& e : coeffs_) c.push_back(-e);
  return IntervalPolynomial(std::move(c));
}

Enclosure eval_interval_poly(const IntervalPolynomial& p, const Enclosure& x) {
  Enclosure acc = Enclosure::point(0.0);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

exactpoly::PositivityCertificate certify_positive_interval_poly(const IntervalPolynomial& p, const Rational& a) {
  std::vector<Rational> lower;
  lower.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) lower.push_back(rational_from_double(c.lo()));
  exactpoly::RationalPolynomial p_lo(std::move(lower));

  const bool signs_determined = std::all_of(p.coefficients().begin(), p.coefficients().end(),
                                            [](const Enclosure& c) { return c.excludes_zero(); });
  exactpoly::PositivityCertificate cert;
  if (signs_determined && a >= 0 && !p_lo.is_zero()) {
    cert = exactpoly::certify_positive_on_ray(p_lo, a);
  } else {
    cert.polynomial = p_lo;
    cert.domain_lower = a;
    if (!p_lo.is_zero()) cert.sign_changes = exactpoly::descartes_sign_changes(p_lo);
  }
  cert.source_coefficients = p.coefficients();
  return cert;
}

}  // namespace monocert::specfun
