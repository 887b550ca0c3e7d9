#include "monocert/exactpoly.hpp"

#include <algorithm>

namespace monocert::exactpoly {

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::linear_factor(const Rational& root) { return RationalPolynomial({-root, Rational(1)}); }

Rational RationalPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& RationalPolynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) { return *this += -rhs; }

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
RationalPolynomial operator*(const Rational& c, RationalPolynomial a) { return a *= c; }

Rational eval_at(const RationalPolynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Enclosure eval_enclosure(const RationalPolynomial& p, const Enclosure& x) {
  Enclosure acc = Enclosure::point(0.0);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Enclosure::from_rational(*it);
  return acc;
}

RationalPolynomial derivative(const RationalPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> d(p.coefficients().size() - 1);
  for (std::size_t i = 1; i < p.coefficients().size(); ++i) d[i - 1] = p.coefficients()[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial taylor_shift(const RationalPolynomial& p, const Rational& a) {
  // Repeated synthetic division by (t - a), the classical O(n^2) shift.
  std::vector<Rational> c = p.coefficients();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
  }
  return RationalPolynomial(std::move(c));
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& num, const RationalPolynomial& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  if (num.degree() < den.degree()) return {RationalPolynomial{}, num};
  std::vector<Rational> rem = num.coefficients();
  std::vector<Rational> quot(num.coefficients().size() - den.coefficients().size() + 1);
  const Rational& lead = den.leading();
  const std::size_t dd = den.coefficients().size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + dd] / lead;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * den.coefficients()[j];
  }
  rem.resize(dd);
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

int descartes_sign_changes(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("descartes_sign_changes: zero polynomial");
  int changes = 0;
  int last = 0;
  for (const auto& c : p.coefficients()) {
    int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational cauchy_root_bound(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("cauchy_root_bound: zero polynomial");
  Rational best = 0;
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) best = std::max(best, Rational(abs(p.coefficients()[i]) / lead));
  return 1 + best;
}

namespace {

RationalPolynomial normalized(RationalPolynomial p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / abs(p.leading()));
}

int sign_variations(const std::vector<RationalPolynomial>& seq, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = eval_at(q, x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

RationalPolynomial deflate(RationalPolynomial p, const Rational& root) {
  const auto factor = RationalPolynomial::linear_factor(root);
  while (!p.is_zero() && eval_at(p, root) == 0) p = divmod(p, factor).first;
  return p;
}

}  // namespace

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(normalized(p));
  auto d = derivative(p);
  if (d.is_zero()) return seq;
  seq.push_back(normalized(d));
  while (true) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(normalized(-r));
  }
  return seq;
}

int sturm_root_count(const RationalPolynomial& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw DomainError("sturm_root_count: need a < b");
  if (p.is_zero()) throw DomainError("sturm_root_count: zero polynomial has infinitely many roots");
  RationalPolynomial q = deflate(deflate(p, a), b);
  if (q.degree() < 1) return 0;
  auto seq = sturm_sequence(q);
  return sign_variations(seq, a) - sign_variations(seq, b);
}

RationalFunction::RationalFunction(RationalPolynomial num, RationalPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  // Keep the denominator monic so equal constants compare cheaply.
  Rational lead = den_.leading();
  num_ *= Rational(1) / lead;
  den_ *= Rational(1) / lead;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) return *this = RationalFunction(num_ + rhs.num_, den_);
  return *this = RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  return *this = RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.num_.is_zero()) throw DomainError("rational function division by zero");
  return *this = RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
}

RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

std::string_view to_string(CertificateMethod m) {
  switch (m) {
    case CertificateMethod::kAllShiftedCoefficientsNonnegative: return "all-shifted-coefficients-nonnegative";
    case CertificateMethod::kDescartesOneRootLocalized: return "descartes-one-root-localized";
    case CertificateMethod::kSturmZeroRoots: return "sturm-zero-roots";
    case CertificateMethod::kNone: break;
  }
  return "none";
}

std::string_view to_string(Verdict v) { return v == Verdict::kPositive ? "positive" : "not-certified"; }

namespace {

bool descartes_premises(const RationalPolynomial& p, const Rational& a, const Rational& c) {
  return descartes_sign_changes(p) == 1 && p.leading() > 0 && c >= 0 && c < a && eval_at(p, c) < 0 && eval_at(p, a) > 0;
}

bool shift_premises(const std::vector<Rational>& shifted) {
  if (shifted.empty() || shifted.front() <= 0) return false;
  return std::all_of(shifted.begin(), shifted.end(), [](const Rational& x) { return x >= 0; });
}

bool sturm_premises(const RationalPolynomial& p, const Rational& a, const Rational& bound) {
  if (eval_at(p, a) <= 0) return false;
  if (a >= bound) return true;
  return sturm_root_count(p, a, bound) == 0;
}

}  // namespace

PositivityCertificate certify_positive_on_ray(const RationalPolynomial& p, const Rational& a, const Rational& c) {
  if (p.is_zero()) throw DomainError("certify_positive_on_ray: zero polynomial");
  PositivityCertificate cert;
  cert.polynomial = p;
  cert.domain_lower = a;
  cert.sign_changes = descartes_sign_changes(p);
  cert.endpoint_values.push_back({a, eval_at(p, a)});

  // Exactly one sign change, p(c) < 0 <= c < a < p(a): the unique positive root
  // lies in (c, a), so nothing on [a, inf) can vanish.
  if (descartes_premises(p, a, c)) {
    cert.method = CertificateMethod::kDescartesOneRootLocalized;
    cert.localization_point = c;
    cert.endpoint_values.push_back({c, eval_at(p, c)});
    cert.verdict = Verdict::kPositive;
    return cert;
  }

  auto shifted = taylor_shift(p, a);
  std::vector<Rational> sc = shifted.coefficients();
  if (shift_premises(sc)) {
    cert.method = CertificateMethod::kAllShiftedCoefficientsNonnegative;
    cert.shifted_coefficients = std::move(sc);
    cert.verdict = Verdict::kPositive;
    return cert;
  }

  Rational bound = cauchy_root_bound(p);
  if (eval_at(p, a) > 0) {
    int roots = a < bound ? sturm_root_count(p, a, bound) : 0;
    if (roots == 0) {
      cert.method = CertificateMethod::kSturmZeroRoots;
      cert.root_bound = bound;
      cert.sturm_roots = roots;
      cert.verdict = Verdict::kPositive;
      return cert;
    }
  }
  return cert;
}

bool premises_hold(const PositivityCertificate& cert) {
  if (cert.verdict != Verdict::kPositive) return true;
  const auto& p = cert.polynomial;
  if (p.is_zero()) return false;
  switch (cert.method) {
    case CertificateMethod::kDescartesOneRootLocalized:
      return cert.localization_point && descartes_premises(p, cert.domain_lower, *cert.localization_point);
    case CertificateMethod::kAllShiftedCoefficientsNonnegative: {
      auto shifted = taylor_shift(p, cert.domain_lower).coefficients();
      return shifted == cert.shifted_coefficients && shift_premises(shifted);
    }
    case CertificateMethod::kSturmZeroRoots:
      return cert.root_bound && *cert.root_bound == cauchy_root_bound(p) && sturm_premises(p, cert.domain_lower, *cert.root_bound);
    case CertificateMethod::kNone: break;
  }
  return false;
}

}  // namespace monocert::exactpoly
