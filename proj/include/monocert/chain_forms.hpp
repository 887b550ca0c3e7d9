#pragma once

// The lower-bound chains for q'(x) and h1'(x), each stage written once as a
// template over the scalar type. Instantiated with Enclosure they give
// numeric values; instantiated with exactpoly::RationalFunction (ln π and
// ln(x+1) held as formal constants) they give exact algebraic identities.

#include "monocert/enclosure.hpp"
#include "monocert/exactpoly.hpp"

namespace monocert::chain {

template <typename T>
struct Scalar;

template <>
struct Scalar<Enclosure> {
  static Enclosure of(const Rational& r) { return Enclosure::from_rational(r); }
};

template <>
struct Scalar<exactpoly::RationalFunction> {
  static exactpoly::RationalFunction of(const Rational& r) { return exactpoly::RationalFunction::constant(r); }
};

template <typename T>
T k(long num, long den = 1) {
  return Scalar<T>::of(Rational(num, den));
}

template <typename T> T p1(const T& x) { return x * x * x + k<T>(3) * x * x - x - k<T>(1); }
template <typename T> T p3(const T& x) { return k<T>(3) * x * x * x * x + k<T>(8) * x * x * x + k<T>(2) * x * x - k<T>(1); }
template <typename T> T p4(const T& x) {
  return x * x * x * x * x + k<T>(3) * x * x * x * x + k<T>(2) * x * x * x + k<T>(2) * x * x + x - k<T>(1);
}
template <typename T> T p5(const T& x) {
  return x * x * x * x * x + k<T>(5) * x * x * x * x + k<T>(6) * x * x * x - k<T>(3) * x - k<T>(1);
}

/// 5x^5 + 16x^4 + 6x^3 - 4x^2 + x + 4
template <typename T> T q_prime_remainder(const T& x) {
  T x2 = x * x;
  return k<T>(5) * x2 * x2 * x + k<T>(16) * x2 * x2 + k<T>(6) * x2 * x - k<T>(4) * x2 + x + k<T>(4);
}

/// 13x^6 + 66x^5 + 86x^4 + 8x^3 - 31x^2 - 2x + 8
template <typename T> T q_prime_numerator(const T& x) {
  T x2 = x * x;
  T x3 = x2 * x;
  return k<T>(13) * x3 * x3 + k<T>(66) * x3 * x2 + k<T>(86) * x2 * x2 + k<T>(8) * x3 - k<T>(31) * x2 - k<T>(2) * x +
         k<T>(8);
}

// --- q'(x) chain -----------------------------------------------------------

/// After the ψ, ψ', ψ'' bounds; `ln1` stands for ln(x+1).
template <typename T> T q_prime_psi_substituted(const T& x, const T& ln1) {
  T one = k<T>(1);
  T xp1 = x + one;
  T brace = k<T>(2) * (k<T>(3) * x * x + k<T>(2) * x + one) * (one / xp1 + one / (k<T>(2) * xp1 * xp1)) -
            xp1 * (x * x + one) * (one / (xp1 * xp1) + k<T>(2) / (xp1 * xp1 * xp1));
  return k<T>(4) * p1(x) * (ln1 - one / xp1) + (x * x + k<T>(2) * x - one) * brace;
}

template <typename T> T q_prime_collected(const T& x, const T& ln1) {
  T xp1 = x + k<T>(1);
  return k<T>(4) * p1(x) * (ln1 + q_prime_remainder(x) / (k<T>(4) * xp1 * xp1 * p1(x)));
}

/// ln(x+1) replaced by its lower bound 2x/(x+2).
template <typename T> T q_prime_log1p_substituted(const T& x) {
  return q_prime_collected(x, k<T>(2) * x / (x + k<T>(2)));
}

template <typename T> T q_prime_final(const T& x) {
  T xp1 = x + k<T>(1);
  return q_prime_numerator(x) / (xp1 * xp1 * (x + k<T>(2)));
}

// --- h1'(x) chain; `L` stands for ln π -------------------------------------

template <typename T> T h1_prime_psi_substituted(const T& x, const T& L, const T& ln1) {
  T one = k<T>(1);
  T xp1 = x + one;
  return k<T>(4) * p1(x) * (ln1 - one / xp1) + k<T>(2) * p3(x) * (one / xp1 + one / (k<T>(2) * xp1 * xp1)) -
         p4(x) * (one / (xp1 * xp1) + k<T>(2) / (xp1 * xp1 * xp1)) - k<T>(4) * p1(x) * L;
}

/// The collected form exactly as printed.
template <typename T> T h1_prime_collected_as_printed(const T& x, const T& L, const T& ln1) {
  T x2 = x * x;
  T x4 = x2 * x2;
  T xp1 = x + k<T>(1);
  T poly = (k<T>(7) - k<T>(4) * L) * x4 * x + (k<T>(26) - k<T>(20) * L) * x4 -
           k<T>(6) * (k<T>(4) * L - k<T>(3)) * x2 * x + (k<T>(11) + k<T>(12) * L) * x - k<T>(2) + k<T>(4) * L +
           k<T>(4) * p5(x) * ln1;
  return poly / (xp1 * xp1);
}

template <typename T> T h1_prime_log1p_substituted(const T& x, const T& L) {
  return h1_prime_collected_as_printed(x, L, k<T>(2) * x / (x + k<T>(2)));
}

/// (4L-15)x^6 + 4(7L-20)x^5 + 2(32L-59)x^4 + 12(4L-3)x^3 + (13-12L)x^2 - 4(3+7L)x + 4 - 8L
template <typename T> T h2(const T& x, const T& L) {
  T x2 = x * x;
  T x3 = x2 * x;
  return (k<T>(4) * L - k<T>(15)) * x3 * x3 + k<T>(4) * (k<T>(7) * L - k<T>(20)) * x3 * x2 +
         k<T>(2) * (k<T>(32) * L - k<T>(59)) * x2 * x2 + k<T>(12) * (k<T>(4) * L - k<T>(3)) * x3 +
         (k<T>(13) - k<T>(12) * L) * x2 - k<T>(4) * (k<T>(3) + k<T>(7) * L) * x + k<T>(4) - k<T>(8) * L;
}

template <typename T> T h1_prime_final(const T& x, const T& L) {
  T xp1 = x + k<T>(1);
  return -h2(x, L) / (xp1 * xp1 * (x + k<T>(2)));
}

/// h2 with the ψ'' term carried with its correct (negative) sign:
/// h2 + 2(x+2)(x+3)(x^2+1)(x^2+2x-1).
template <typename T> T h2_repaired(const T& x, const T& L) {
  T one = k<T>(1);
  return h2(x, L) + k<T>(2) * (x + k<T>(2)) * (x + k<T>(3)) * (x * x + one) * (x * x + k<T>(2) * x - one);
}

template <typename T> T h1_prime_repaired_final(const T& x, const T& L) {
  T xp1 = x + k<T>(1);
  return -h2_repaired(x, L) / (xp1 * xp1 * (x + k<T>(2)));
}

}  // namespace monocert::chain
