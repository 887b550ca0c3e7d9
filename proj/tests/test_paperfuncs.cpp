#include <doctest.h>

#include <cmath>

#include "monocert/paperfuncs.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace monocert;
using namespace monocert::paperfuncs;
using oracle::Real;
namespace mp = boost::multiprecision;

namespace {

Real ln_pi_ref() { return mp::log(oracle::pi()); }

/// Oracle for ln G(x) = [x ln π - lnΓ(x+1)] / ln((x²+1)/(x+1)).
Real log_g_ref(double x) {
  const Real X(x);
  return (X * ln_pi_ref() - oracle::ln_gamma(x + 1.0)) / mp::log((X * X + 1) / (X + 1));
}

bool agrees(const Enclosure& fd, const Enclosure& exact, double rel) {
  const double slack = fd.width() + exact.width() + rel * std::max(1.0, std::fabs(exact.mid()));
  return std::fabs(fd.mid() - exact.mid()) <= slack;
}

Enclosure central_difference(const std::function<Enclosure(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("F at the removable singularities and at 2") {
  const FValue f0 = F(0.0);
  CHECK(f0.at_singularity);
  CHECK(oracle::contains(f0.value, oracle::euler()));
  const FValue f1 = F(1.0);
  CHECK(f1.at_singularity);
  CHECK(oracle::contains(f1.value, 2 * (1 - oracle::euler())));
  const FValue f2 = F(2.0);
  CHECK_FALSE(f2.at_singularity);
  CHECK(oracle::contains(f2.value, mp::log(Real(2)) / mp::log(Real(5) / 3)));
  CHECK(f2.value.mid() == doctest::Approx(1.356915).epsilon(1e-6));
}

TEST_CASE("F domain and guard zones") {
  CHECK_THROWS_AS(F(-1.0), DomainError);
  CHECK_THROWS_AS(F(std::nan("")), DomainError);
  CHECK_THROWS_AS(F(1e-7), InconclusivePrecision);
  CHECK_THROWS_AS(F(1.0 + 1e-7), InconclusivePrecision);
  CHECK_THROWS_AS(F(1.0 - 1e-7), InconclusivePrecision);
  CHECK_NOTHROW(F(1.0 + 1e-5));
}

TEST_CASE("F is continuous across x = 1") {
  const double limit = 2.0 * (1.0 - 0.5772156649015329);
  for (double x : {1.0 - 1e-3, 1.0 + 1e-3}) {
    const Enclosure v = F(x).value;
    CHECK(distance(v, limit) < 1e-2);
    CHECK(v.width() < 1e-6);
  }
  CHECK(F(1.0 - 1e-3).value.hi() < F(1.0).value.lo());
  CHECK(F(1.0).value.hi() < F(1.0 + 1e-3).value.lo());
}

TEST_CASE("G closed forms and domain") {
  CHECK(oracle::contains(log_G(2.0), log_g_ref(2.0)));
  const Real g2 = mp::pow(oracle::pi() * oracle::pi() / 2, 1 / mp::log(Real(5) / 3));
  CHECK(oracle::contains(G(2.0).value, g2));
  CHECK(G(2.0).value.mid() == doctest::Approx(22.75912).epsilon(1e-6));
  const Real gamma_5_2 = 3 * mp::sqrt(oracle::pi()) / 4;
  const Real g15 = mp::pow(mp::pow(oracle::pi(), Real(1.5)) / gamma_5_2, 1 / mp::log(Real(13) / 10));
  CHECK(oracle::contains(G(1.5).value, g15));
  CHECK(G(1e6).value.hi() < 1e-3);
  CHECK_THROWS_AS(G(0.5), DomainError);
  CHECK_THROWS_AS(G(1.0), DomainError);
  CHECK_THROWS_AS(G(1.0 + 0x1p-10), RangeError);
  CHECK(log_G(1.0 + 0x1p-10).mid() == doctest::Approx(2345.0).epsilon(1e-3));
}

TEST_CASE("ln G agrees with the oracle on random points") {
  support::Rng rng(31);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(1.01, 1000.0);
    if (!oracle::contains(log_G(x), log_g_ref(x))) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("unit-ball volumes") {
  CHECK(unit_ball_volume(1).contains(2.0));
  CHECK(oracle::contains(unit_ball_volume(2), oracle::pi()));
  CHECK(oracle::contains(unit_ball_volume(3), 4 * oracle::pi() / 3));
  CHECK(oracle::contains(unit_ball_volume(5), 8 * oracle::pi() * oracle::pi() / 15));
  CHECK(omega_root_n(2).contains(std::sqrt(M_PI)));
  CHECK_THROWS_AS(unit_ball_volume(0), DomainError);
  CHECK_THROWS_AS(omega_root_nlogn(1), DomainError);
}

TEST_CASE("sequence term is G(n/2)") {
  for (int n = 3; n <= 60; ++n) {
    CHECK(omega_sequence_term(n) == G(n / 2.0).value);
    CHECK(log_omega_sequence_term(n) == log_G(n / 2.0));
  }
  CHECK(omega_sequence_term(4) == G(2.0).value);
  CHECK(certainly_less(omega_sequence_term(200), omega_sequence_term(199)));
  CHECK(certainly_less(omega_sequence_term(4), omega_sequence_term(3)));
  CHECK_THROWS_AS(omega_sequence_term(2), DomainError);
}

TEST_CASE("exp of ln_gamma reproduces factorials") {
  Rational factorial = 1;
  for (int n = 1; n <= 20; ++n) {
    factorial *= n;
    const Enclosure v = exp(specfun::ln_gamma(Enclosure::point(n + 1.0)));
    CHECK(rational_from_double(v.lo()) <= factorial);
    CHECK(factorial <= rational_from_double(v.hi()));
  }
}

TEST_CASE("q and its lower bound") {
  const Real psi2 = 1 - oracle::euler();
  const Real trigamma2 = oracle::pi() * oracle::pi() / 6 - 1;
  CHECK(oracle::contains(q_func(1.0), 8 * trigamma2 - 4 * psi2));
  CHECK(std::fabs(q_func(1.0).mid() - 3.468) < 0.01);
  CHECK(q_func(2.0).positive());
  CHECK(q_func(10.0).positive());
  CHECK_THROWS_AS(q_func(0.5), DomainError);

  CHECK(q_prime_lower_bound(Rational(1)) == Rational(37, 3));
  CHECK(q_prime_lower_bound(Rational(2)) == Rational(13 * 64 + 66 * 32 + 86 * 16 + 8 * 8 - 31 * 4 - 4 + 8, 36));
  CHECK(q_prime_lower_bound(1.0).contains(37.0 / 3.0));
  support::Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    CHECK(q_prime_lower_bound(Rational(1) + Rational(rng.integer(0, 10000), rng.integer(1, 100))) > 0);
  }
  CHECK_THROWS_AS(q_prime_lower_bound(Rational(1, 2)), DomainError);
}

TEST_CASE("displayed q' matches a finite difference of q and dominates the lower bound") {
  support::Rng rng(33);
  for (int i = 0; i < 50; ++i) {
    const double x = rng.uniform(1.001, 20.0);
    const Enclosure fd = central_difference(q_func, x, 1e-4);
    const Enclosure shown = q_prime_displayed(x);
    CHECK(agrees(fd, shown, 1e-6));
    CHECK(certainly_less(q_prime_lower_bound(x), shown));
  }
}

TEST_CASE("f'/g' ratio") {
  CHECK(oracle::contains(fg_ratio(1.0), 2 * (1 - oracle::euler())));
  CHECK(oracle::contains(fg_ratio(2.0), 15 * (Real(3) / 2 - oracle::euler()) / 7));
  CHECK(fg_ratio(1.0).overlaps(F(1.0).value));
  CHECK(certainly_less(fg_ratio(1.0), fg_ratio(2.0)));
  CHECK_THROWS_AS(fg_ratio(0.9), DomainError);
}

TEST_CASE("h family anchors") {
  using H = HFunction;
  CHECK(h_family(H::kH, 1.0).overlaps(-specfun::ln_pi()));
  CHECK(std::fabs(h_family(H::kH1, 1.0).mid() - 8.047255) < 1e-5);
  CHECK(std::fabs(h_family(H::kH2, 1.0).mid() + 134.10593) < 1e-4);
  CHECK(std::fabs(h_family(H::kH2p, 1.0).mid() + 469.89830) < 1e-4);
  CHECK(std::fabs(h_family(H::kH2pp, 1.0).mid() + 1696.22244) < 1e-4);
  CHECK(std::fabs(h_family(H::kH2ppp, 1.0).mid() + 5087.39613) < 1e-4);
  CHECK_THROWS_AS(h_family(H::kH, 0.5), DomainError);
  CHECK_THROWS_AS(h_family(H::kH2, 0.99), DomainError);
  CHECK(to_string(H::kH2pp) == "h2''");
}

TEST_CASE("h2 family: displayed derivatives are exact and h2''' = -p6") {
  for (int k = 0; k < 3; ++k) CHECK(derivative(h2_displayed(k)) == h2_displayed(k + 1));
  CHECK(h2_displayed(3) == -p6());
  CHECK(h2_displayed(3).to_interval() == -p6().to_interval());
  CHECK_THROWS_AS(h2_displayed(4), DomainError);
}

TEST_CASE("h2 family: finite differences track the next derivative") {
  using H = HFunction;
  const H order[] = {H::kH2, H::kH2p, H::kH2pp, H::kH2ppp};
  support::Rng rng(34);
  for (int i = 0; i < 50; ++i) {
    const double x = rng.uniform(1.001, 20.0);
    for (int k = 0; k < 3; ++k) {
      const auto f = [&](double t) { return h_family(order[k], t); };
      CHECK(agrees(central_difference(f, x, 1e-4), h_family(order[k + 1], x), 1e-7));
    }
  }
}

TEST_CASE("h1' formula matches a finite difference of h1") {
  support::Rng rng(35);
  for (int i = 0; i < 50; ++i) {
    const double x = rng.uniform(1.001, 20.0);
    const auto f = [](double t) { return h_family(HFunction::kH1, t); };
    CHECK(agrees(central_difference(f, x, 1e-4), h1_prime(x), 1e-6));
  }
}

TEST_CASE("h1' chain at x = 1") {
  const H1PrimeChain c = h1_prime_chain(1.0);
  CHECK(c.exact.mid() == doctest::Approx(6.469943).epsilon(1e-6));
  CHECK(certainly_less(c.psi_substituted, c.exact));
  CHECK(certainly_less(c.repaired_final, c.exact));
  // The chain as written overshoots h1'.
  CHECK(certainly_less(c.exact, c.final_form));
  CHECK(c.final_form.mid() == doctest::Approx(11.175494).epsilon(1e-6));
}

TEST_CASE("repaired h2") {
  const LnPiPolynomial r = h2_repaired();
  const Enclosure at1 = specfun::eval_interval_poly(r.to_interval(), Enclosure::point(1.0));
  CHECK(at1.mid() == doctest::Approx(-38.106).epsilon(1e-4));
  CHECK(r.ln_pi_part == h2_displayed(0).ln_pi_part);
}

TEST_CASE("ln pi stays symbolic in LnPiPolynomial") {
  const Enclosure two = Enclosure::point(2.0);
  const Enclosure at0 = specfun::eval_interval_poly(p6().to_interval(two), Enclosure::point(0.0));
  CHECK(at0.contains(216.0 - 288.0 * 2.0));
}
