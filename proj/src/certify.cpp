#include "monocert/certify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "monocert/chain_forms.hpp"
#include "monocert/paperfuncs.hpp"

namespace monocert::certify {

namespace {

using exactpoly::RationalFunction;
using exactpoly::RationalPolynomial;

std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt(const Enclosure& e) { return "[" + fmt(e.lo()) + ", " + fmt(e.hi()) + "]"; }

std::string fmt_coefficients(const std::vector<Rational>& c) {
  std::string s;
  for (const auto& r : c) {
    if (!s.empty()) s += ' ';
    s += r.str();
  }
  return s;
}

enum class Side { kAny, kPositive, kNegative };

bool on_side(const Enclosure& v, Side side) {
  switch (side) {
    case Side::kPositive: return v.positive();
    case Side::kNegative: return v.negative();
    case Side::kAny: return true;
  }
  return false;
}

/// |v - anchor| <= tol over the whole enclosure and v strictly on `side` of 0.
ProofStep anchor_step(std::string id, std::string description, const Enclosure& v, double anchor, double tol,
                      Side side) {
  ProofStep s;
  s.id = std::move(id);
  s.description = std::move(description);
  s.computed = v;
  s.expected = fmt(anchor);
  s.tolerance = tol;
  const double far = std::max(std::fabs(v.lo() - anchor), std::fabs(v.hi() - anchor));
  const bool close = far <= tol;
  const bool sided = on_side(v, side);
  if (close && sided) {
    s.status = Status::kPass;
  } else if (v.width() > tol) {
    s.status = Status::kInconclusive;
    s.detail = "enclosure wider than tolerance";
  } else {
    s.status = Status::kFail;
    s.detail = close ? "enclosure not strictly on the claimed side of zero"
                     : "anchor outside tolerance (distance " + fmt(distance(v, anchor)) + ")";
  }
  return s;
}

/// Ordering of two enclosures in the given direction.
enum class Order { kStrict, kReversed, kOverlap };

Order compare(const Enclosure& left, const Enclosure& right, Direction d) {
  const Enclosure& small = d == Direction::kIncreasing ? left : right;
  const Enclosure& large = d == Direction::kIncreasing ? right : left;
  if (small.hi() < large.lo()) return Order::kStrict;
  if (small.lo() > large.hi()) return Order::kReversed;
  return Order::kOverlap;
}

struct SequenceCheck {
  Status status = Status::kPass;
  std::size_t verified = 0;
  std::optional<std::pair<int, int>> offending;
};

/// Strictly decreasing values[i] over consecutive n, no subdivision.
SequenceCheck check_decreasing(const std::vector<Enclosure>& values, int n0) {
  SequenceCheck c;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const Order o = compare(values[i], values[i + 1], Direction::kDecreasing);
    if (o == Order::kStrict) {
      ++c.verified;
      continue;
    }
    const Status s = o == Order::kReversed ? Status::kFail : Status::kInconclusive;
    if (!c.offending || s < c.status) c.offending = {n0 + static_cast<int>(i), n0 + static_cast<int>(i) + 1};
    c.status = meet(c.status, s);
  }
  return c;
}

ProofStep sequence_step(std::string id, std::string description, int n0, int n1,
                        const std::function<Enclosure(int)>& term) {
  std::vector<Enclosure> values;
  for (int n = n0; n <= n1; ++n) values.push_back(term(n));
  const SequenceCheck c = check_decreasing(values, n0);
  ProofStep s;
  s.id = std::move(id);
  s.description = std::move(description);
  s.status = c.status;
  s.computed = values.back();
  s.detail = "n = " + std::to_string(n0) + ".." + std::to_string(n1) + ", separated pairs " +
             std::to_string(c.verified) + "/" + std::to_string(values.size() - 1);
  if (c.offending) {
    s.detail += ", offending pair (" + std::to_string(c.offending->first) + ", " +
                std::to_string(c.offending->second) + ")";
  }
  return s;
}

ProofStep grid_step(std::string id, std::string description, const GridCertificate& g) {
  ProofStep s;
  s.id = std::move(id);
  s.description = std::move(description);
  s.status = g.status;
  s.detail = g.function_id + " " + std::string(to_string(g.direction)) + " on [" + fmt(g.grid.front()) + ", " +
             fmt(g.grid.back()) + "], " + std::to_string(g.grid.size()) + " points, separated pairs " +
             std::to_string(g.verified_pairs) + ", subdivided " + std::to_string(g.subdivided_pairs) +
             ", inconclusive " + std::to_string(g.inconclusive_pairs);
  if (g.offending_pair) {
    s.detail += ", offending pair (" + fmt(g.offending_pair->first) + ", " + fmt(g.offending_pair->second) + ")";
  }
  return s;
}

/// lower < upper at every sample; overlap is inconclusive.
struct SampleComparison {
  Status status = Status::kPass;
  std::size_t strict = 0;
  std::optional<double> offending;
};

SampleComparison compare_samples(const std::vector<double>& xs, const std::function<Enclosure(double)>& lower,
                                 const std::function<Enclosure(double)>& upper) {
  SampleComparison c;
  for (double x : xs) {
    const Order o = compare(lower(x), upper(x), Direction::kIncreasing);
    if (o == Order::kStrict) {
      ++c.strict;
      continue;
    }
    const Status s = o == Order::kReversed ? Status::kFail : Status::kInconclusive;
    if (!c.offending || s < c.status) c.offending = x;
    c.status = meet(c.status, s);
  }
  return c;
}

std::string describe(const SampleComparison& c, std::size_t total) {
  std::string d = "strict at " + std::to_string(c.strict) + "/" + std::to_string(total) + " samples";
  if (c.offending) d += ", first offending x = " + fmt(*c.offending);
  return d;
}

std::vector<double> sample_points(std::uint64_t seed, std::size_t count, double a, double b) {
  std::mt19937_64 rng(seed);
  std::vector<double> xs;
  xs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
    xs.push_back(a + (b - a) * u);
  }
  return xs;
}

RationalFunction rf(long n) { return RationalFunction::constant(Rational(n)); }

/// Exact identity of two expressions affine in each formal constant, checked
/// at the corners {0,1}^k.
template <typename Lhs, typename Rhs>
bool identity_on_corners(int formal_constants, Lhs lhs, Rhs rhs) {
  for (int mask = 0; mask < (1 << formal_constants); ++mask) {
    std::vector<RationalFunction> c;
    for (int i = 0; i < formal_constants; ++i) c.push_back(rf((mask >> i) & 1));
    if (!(lhs(c) == rhs(c))) return false;
  }
  return true;
}

Status pass_if(bool ok) { return ok ? Status::kPass : Status::kFail; }

ProofStep certificate_step(std::string id, std::string description, exactpoly::PositivityCertificate cert,
                           bool extra_premises, const std::string& extra_detail) {
  ProofStep s;
  s.id = std::move(id);
  s.description = std::move(description);
  const bool certified = cert.verdict == exactpoly::Verdict::kPositive && exactpoly::premises_hold(cert);
  s.status = pass_if(certified && extra_premises);
  s.detail = "method " + std::string(exactpoly::to_string(cert.method)) + ", sign changes " +
             std::to_string(cert.sign_changes);
  if (!cert.shifted_coefficients.empty()) s.detail += ", shifted " + fmt_coefficients(cert.shifted_coefficients);
  if (!extra_detail.empty()) s.detail += "; " + extra_detail;
  s.certificate = std::move(cert);
  return s;
}

Enclosure e_half() { return exp(Enclosure::point(-0.5)); }

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kInconclusive: return "inconclusive";
  }
  return "?";
}

Status status_from_string(std::string_view s) {
  if (s == "pass") return Status::kPass;
  if (s == "fail") return Status::kFail;
  if (s == "inconclusive") return Status::kInconclusive;
  throw DomainError("unknown status: " + std::string(s));
}

int exit_code(Status s) {
  switch (s) {
    case Status::kPass: return 0;
    case Status::kFail: return 1;
    case Status::kInconclusive: return 3;
  }
  return 2;
}

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::kLemma2: return "lemma2";
    case Theorem::kTheorem1: return "theorem1";
    case Theorem::kTheorem2: return "theorem2";
    case Theorem::kRemark1: return "remark1";
    case Theorem::kRemark2Conjecture: return "remark2-conjecture";
  }
  return "?";
}

Theorem theorem_from_string(std::string_view s) {
  for (Theorem t : {Theorem::kLemma2, Theorem::kTheorem1, Theorem::kTheorem2, Theorem::kRemark1,
                    Theorem::kRemark2Conjecture}) {
    if (to_string(t) == s) return t;
  }
  throw DomainError("unknown theorem id: " + std::string(s));
}

std::string_view to_string(Direction d) { return d == Direction::kIncreasing ? "increasing" : "decreasing"; }

std::string_view to_string(GridFunctionId f) {
  switch (f) {
    case GridFunctionId::kF: return "F";
    case GridFunctionId::kLogG: return "lnG";
    case GridFunctionId::kFgRatio: return "fg_ratio";
  }
  return "?";
}

Status VerificationReport::overall() const {
  Status s = Status::kPass;
  for (const auto& step : steps) s = meet(s, step.status);
  return s;
}

const ProofStep& VerificationReport::step(std::string_view id) const {
  for (const auto& s : steps) {
    if (s.id == id) return s;
  }
  throw DomainError("no step with id " + std::string(id));
}

std::vector<double> make_grid(double a, double b, double step) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(step)) || !(a < b) || !(step > 0.0)) {
    throw DomainError("grid needs finite a < b and step > 0");
  }
  const double span = (b - a) / step;
  if (span > 1e8) throw DomainError("grid too fine");
  const auto n = static_cast<long>(std::floor(span + 1e-9));
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n) + 2);
  for (long i = 0; i <= n; ++i) grid.push_back(std::min(a + static_cast<double>(i) * step, b));
  if (grid.back() < b - step * 1e-6) grid.push_back(b);
  grid.back() = std::max(grid.back(), b);
  return grid;
}

GridCertificate grid_monotone_certificate(std::string function_id, const GridFunction& f,
                                          const std::vector<double>& grid, Direction direction) {
  if (grid.size() < 2) throw DomainError("grid certificate needs at least two points");
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(grid[i] < grid[i + 1])) throw DomainError("grid must be strictly increasing");
  }
  GridCertificate g;
  g.function_id = std::move(function_id);
  g.grid = grid;
  g.direction = direction;
  g.status = Status::kPass;

  auto note = [&](Status s, double x0, double x1) {
    if (!g.offending_pair || s < g.status) g.offending_pair = std::pair{x0, x1};
    g.status = meet(g.status, s);
  };

  Enclosure left = f(grid.front());
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const Enclosure right = f(grid[i + 1]);
    const Order o = compare(left, right, direction);
    if (o == Order::kStrict) {
      ++g.verified_pairs;
    } else if (o == Order::kReversed) {
      note(Status::kFail, grid[i], grid[i + 1]);
    } else {
      ++g.subdivided_pairs;
      const double m = 0.5 * (grid[i] + grid[i + 1]);
      const Enclosure fm = f(m);
      const Order o1 = compare(left, fm, direction);
      const Order o2 = compare(fm, right, direction);
      if (o1 == Order::kStrict && o2 == Order::kStrict) {
        ++g.verified_pairs;
      } else if (o1 == Order::kReversed || o2 == Order::kReversed) {
        note(Status::kFail, grid[i], grid[i + 1]);
      } else {
        ++g.inconclusive_pairs;
        note(Status::kInconclusive, grid[i], grid[i + 1]);
      }
    }
    left = right;
  }
  return g;
}

GridCertificate grid_monotone_certificate(GridFunctionId f, double a, double b, double step, Direction direction) {
  std::vector<double> grid = make_grid(a, b, step);
  switch (f) {
    case GridFunctionId::kF: {
      const double d = paperfuncs::kGuardRadius;
      std::erase_if(grid, [d](double x) { return (x > 0.0 && x <= d) || (x != 1.0 && std::fabs(x - 1.0) <= d); });
      return grid_monotone_certificate("F", [](double x) { return paperfuncs::F(x).value; }, grid, direction);
    }
    case GridFunctionId::kLogG:
      return grid_monotone_certificate("lnG", [](double x) { return paperfuncs::log_G(x); }, grid, direction);
    case GridFunctionId::kFgRatio:
      return grid_monotone_certificate("fg_ratio", [](double x) { return paperfuncs::fg_ratio(x); }, grid,
                                       direction);
  }
  throw DomainError("unknown grid function");
}

Lemma2Inputs Lemma2Inputs::defaults() {
  return {paperfuncs::lemma2_polynomials(),
          {Rational(2), Rational(2), Rational(12), Rational(8), Rational(8)},
          paperfuncs::p6().to_interval()};
}

VerificationReport verify_lemma2(const VerifyOptions& opts) {
  VerificationReport r{Theorem::kLemma2, {}};
  const Lemma2Inputs& in = opts.lemma2;

  for (std::size_t i = 0; i < in.polynomials.size(); ++i) {
    const RationalPolynomial& p = in.polynomials[i];
    const std::string name = "p" + std::to_string(i + 1);
    const int changes = p.is_zero() ? -1 : exactpoly::descartes_sign_changes(p);
    std::string extra = changes == 1 ? "" : "expected exactly one sign change";
    if (i == 1 && p == in.polynomials[0]) extra += (extra.empty() ? "" : "; ") + std::string("identical to p1");
    auto cert = exactpoly::certify_positive_on_ray(p, Rational(1), Rational(0));
    r.steps.push_back(certificate_step(name + "-positive", name + " > 0 on [1, inf)", std::move(cert), changes == 1,
                      extra));
  }

  {
    const auto& c = in.p6.coefficients();
    const bool pattern =
        c.size() == 4 && c[3].positive() && c[2].positive() && c[1].positive() && c[0].negative();
    auto cert = specfun::certify_positive_interval_poly(in.p6, Rational(1));
    r.steps.push_back(certificate_step("p6-positive", "p6 > 0 on [1, inf), coefficient signs (+,+,+,-)",
                                       std::move(cert), pattern,
                                       pattern ? "" : "coefficient sign pattern is not (+,+,+,-)"));
  }

  for (std::size_t i = 0; i < in.polynomials.size(); ++i) {
    const RationalPolynomial& p = in.polynomials[i];
    const std::string name = "p" + std::to_string(i + 1);
    for (int at = 0; at <= 1; ++at) {
      const Rational v = exactpoly::eval_at(p, Rational(at));
      const Rational want = at == 0 ? Rational(-1) : in.values_at_1[i];
      ProofStep s;
      s.id = name + "-at-" + std::to_string(at);
      s.description = name + "(" + std::to_string(at) + ") exact value";
      s.computed = Enclosure::from_rational(v);
      s.expected = want.str();
      s.status = pass_if(v == want);
      s.detail = "exact " + monocert::to_string(v);
      r.steps.push_back(std::move(s));
    }
  }

  const Enclosure at0 = specfun::eval_interval_poly(in.p6, Enclosure::point(0.0));
  const Enclosure at1 = specfun::eval_interval_poly(in.p6, Enclosure::point(1.0));
  r.steps.push_back(anchor_step("p6-at-0", "p6(0) anchor", at0, opts.anchors.p6_at_0, opts.tolerance, Side::kNegative));
  r.steps.push_back(anchor_step("p6-at-1", "p6(1) anchor", at1, opts.anchors.p6_at_1, opts.tolerance, Side::kPositive));
  return r;
}

VerificationReport verify_theorem1(const VerifyOptions& opts) {
  VerificationReport r{Theorem::kTheorem1, {}};
  const RationalFunction X = RationalFunction::variable();

  r.steps.push_back(anchor_step("a", "q(1) anchor, q(1) > 0", paperfuncs::q_func(1.0), opts.anchors.q_at_1,
                                opts.tolerance, Side::kPositive));

  {
    const std::vector<Rational> want{148, 712, 1364, 1272, 611, 144, 13};
    const RationalPolynomial& num = paperfuncs::q_prime_numerator();
    const RationalPolynomial shifted = exactpoly::taylor_shift(num, Rational(1));
    auto cert = exactpoly::certify_positive_on_ray(num, Rational(1));
    const bool match = shifted.coefficients() == want;
    ProofStep s = certificate_step("b", "q' numerator shifted by 1 has coefficients 148..13, all >= 0",
                                   std::move(cert), match, match ? "" : "shifted coefficients differ");
    s.expected = fmt_coefficients(want);
    r.steps.push_back(std::move(s));
  }

  {
    const bool substituted = identity_on_corners(
        1, [&](const auto& c) { return chain::q_prime_psi_substituted(X, c[0]); },
        [&](const auto& c) { return chain::q_prime_collected(X, c[0]); });
    const bool final_form = chain::q_prime_log1p_substituted(X) == chain::q_prime_final(X);
    ProofStep s;
    s.id = "b-chain";
    s.description = "q' lower-bound chain: collected and final forms are exact rewrites";
    s.status = pass_if(substituted && final_form);
    s.detail = std::string("collected form ") + (substituted ? "matches" : "differs") + ", final form " +
               (final_form ? "matches" : "differs");
    r.steps.push_back(std::move(s));
  }

  {
    ProofStep s;
    s.id = "c";
    s.description = "q' lower bound > 0 on {1, 1.5, ..., 50}";
    s.status = Status::kPass;
    Rational smallest;
    bool first = true;
    for (int twice = 2; twice <= 100; ++twice) {
      const Rational v = paperfuncs::q_prime_lower_bound(Rational(twice, 2));
      if (first || v < smallest) smallest = v;
      first = false;
      if (v <= 0) {
        s.status = Status::kFail;
        s.detail = "non-positive at x = " + fmt(twice / 2.0);
        break;
      }
    }
    s.computed = Enclosure::from_rational(smallest);
    if (s.detail.empty()) s.detail = "smallest value " + monocert::to_string(smallest);
    r.steps.push_back(std::move(s));
  }

  {
    std::vector<double> xs;
    for (int twice = 2; twice <= 100; ++twice) xs.push_back(twice / 2.0);
    const auto c = compare_samples(
        xs, [](double x) { return paperfuncs::q_prime_lower_bound(x); },
        [](double x) { return paperfuncs::q_prime_displayed(x); });
    bool positive = true;
    for (double x : xs) positive = positive && paperfuncs::q_prime_displayed(x).positive();
    ProofStep s;
    s.id = "d";
    s.description = "displayed q' exceeds its lower bound and is > 0 on {1, 1.5, ..., 50}";
    s.status = positive ? c.status : Status::kFail;
    s.computed = paperfuncs::q_prime_displayed(1.0);
    s.detail = describe(c, xs.size()) + (positive ? "" : "; q' not positive everywhere");
    r.steps.push_back(std::move(s));
  }

  r.steps.push_back(grid_step("e", "hypothesis check: f'/g' strictly increasing on {1, 1.5, ..., 50}",
                              grid_monotone_certificate(GridFunctionId::kFgRatio, 1.0, 50.0, 0.5,
                                                        Direction::kIncreasing)));
  r.steps.push_back(grid_step("f", "F strictly increasing on the grid",
                              grid_monotone_certificate(GridFunctionId::kF, opts.grid_from, opts.grid_to,
                                                        opts.grid_step, Direction::kIncreasing)));
  return r;
}

VerificationReport verify_theorem2(const VerifyOptions& opts) {
  if (opts.n_max < 4) throw DomainError("theorem2 needs n_max >= 4");
  using paperfuncs::HFunction;
  VerificationReport r{Theorem::kTheorem2, {}};
  const RationalFunction X = RationalFunction::variable();

  {
    bool derivatives = true;
    for (int k = 0; k < 3; ++k) {
      derivatives = derivatives && paperfuncs::derivative(paperfuncs::h2_displayed(k)) == paperfuncs::h2_displayed(k + 1);
    }
    const bool equals_p6 = paperfuncs::h2_displayed(3) == -paperfuncs::p6();
    auto cert = specfun::certify_positive_interval_poly(-paperfuncs::h2_displayed(3).to_interval(), Rational(1));
    std::string extra = "h2''' (sometimes mislabelled h_3'')";
    if (!derivatives) extra += "; displayed derivatives inconsistent";
    if (!equals_p6) extra += "; h2''' != -p6";
    r.steps.push_back(certificate_step("a", "h2''' < 0 on [1, inf), h2''' = -p6, displayed derivatives exact",
                                       std::move(cert), derivatives && equals_p6, extra));
  }

  const auto& a = opts.anchors;
  const double tol = opts.tolerance;
  r.steps.push_back(anchor_step("b", "h2''(1) anchor, h2''(1) < 0", paperfuncs::h_family(HFunction::kH2pp, 1.0),
                                a.h2pp_at_1, tol, Side::kNegative));
  r.steps.push_back(anchor_step("c", "h2'(1) anchor, h2'(1) < 0", paperfuncs::h_family(HFunction::kH2p, 1.0),
                                a.h2p_at_1, tol, Side::kNegative));
  r.steps.push_back(anchor_step("d", "h2(1) anchor, h2(1) < 0", paperfuncs::h_family(HFunction::kH2, 1.0),
                                a.h2_at_1, tol, Side::kNegative));
  r.steps.push_back(anchor_step("e", "h1(1) anchor, h1(1) > 0", paperfuncs::h_family(HFunction::kH1, 1.0),
                                a.h1_at_1, tol, Side::kPositive));
  {
    const Enclosure h1 = paperfuncs::h_family(HFunction::kH, 1.0);
    ProofStep s = anchor_step("f", "h(1) anchor, h(1) = -ln(pi) < 0", h1, a.h_at_1, tol, Side::kNegative);
    const Enclosure minus_ln_pi = -specfun::ln_pi();
    if (!h1.overlaps(minus_ln_pi)) {
      s.status = meet(s.status, h1.width() > 1e-9 ? Status::kInconclusive : Status::kFail);
      s.detail += (s.detail.empty() ? "" : "; ") + std::string("does not enclose -ln(pi)");
    }
    r.steps.push_back(std::move(s));
  }

  const std::vector<double> xs = sample_points(opts.seed, 50, 1.0, 50.0);
  auto chain_at = [](double x) { return paperfuncs::h1_prime_chain(x); };

  {
    const auto c = compare_samples(
        xs, [&](double x) { return chain_at(x).psi_substituted; }, [&](double x) { return chain_at(x).exact; });
    ProofStep s;
    s.id = "g1";
    s.description = "h1' chain: polygamma bounds give a lower bound for h1'";
    s.status = c.status;
    s.computed = chain_at(1.0).psi_substituted;
    s.detail = describe(c, xs.size());
    r.steps.push_back(std::move(s));
  }

  {
    auto substituted = [&](const std::vector<RationalFunction>& c) {
      return chain::h1_prime_psi_substituted(X, c[0], c[1]);
    };
    auto collected = [&](const std::vector<RationalFunction>& c) {
      return chain::h1_prime_collected_as_printed(X, c[0], c[1]);
    };
    const bool identity = identity_on_corners(2, substituted, collected);
    const RationalFunction zero = rf(0);
    const RationalFunction gap = chain::h1_prime_collected_as_printed(X, zero, zero) -
                                 chain::h1_prime_psi_substituted(X, zero, zero);
    const RationalFunction xp1 = X + rf(1);
    const bool gap_identified =
        gap == rf(2) * (X + rf(3)) * (X * X + rf(1)) * (X * X + rf(2) * X - rf(1)) / (xp1 * xp1);
    std::size_t exceed = 0;
    for (double x : xs) {
      const auto ch = chain_at(x);
      if (ch.final_form.lo() > ch.exact.hi()) ++exceed;
    }
    ProofStep s;
    s.id = "g2";
    s.description = "h1' chain: collected form equals the polygamma-substituted bound";
    s.status = pass_if(identity);
    const auto ch1 = chain_at(1.0);
    s.computed = ch1.collected_as_printed - ch1.psi_substituted;
    s.expected = "0";
    if (!identity) {
      s.detail = std::string("collected - substituted ") +
                 (gap_identified ? "= 2(x+3)(x^2+1)(x^2+2x-1)/(x+1)^2 > 0 (psi'' bound entered with the wrong sign)"
                                 : "is a nonzero rational function") +
                 "; the resulting bound -h2/((x+1)^2(x+2)) exceeds h1' at " + std::to_string(exceed) + "/" +
                 std::to_string(xs.size()) + " samples; at x = 1: h1' = " + fmt(ch1.exact.mid()) +
                 ", bound = " + fmt(ch1.final_form.mid());
    }
    r.steps.push_back(std::move(s));
  }

  {
    const auto c = compare_samples(
        xs, [&](double x) { return chain_at(x).log1p_substituted; },
        [&](double x) { return chain_at(x).collected_as_printed; });
    ProofStep s;
    s.id = "g3";
    s.description = "h1' chain: ln(x+1) >= 2x/(x+2) substitution lowers the collected form";
    s.status = c.status;
    s.computed = chain_at(1.0).log1p_substituted;
    s.detail = describe(c, xs.size());
    r.steps.push_back(std::move(s));
  }

  {
    const bool identity = identity_on_corners(
        1, [&](const auto& c) { return chain::h1_prime_log1p_substituted(X, c[0]); },
        [&](const auto& c) { return chain::h1_prime_final(X, c[0]); });
    ProofStep s;
    s.id = "g4";
    s.description = "h1' chain: final form equals -h2/((x+1)^2(x+2))";
    s.status = pass_if(identity);
    s.computed = chain_at(1.0).final_form;
    r.steps.push_back(std::move(s));
  }

  {
    const RationalFunction two_x_over = rf(2) * X / (X + rf(2));
    const bool identity = identity_on_corners(
        1, [&](const auto& c) { return chain::h1_prime_psi_substituted(X, c[0], two_x_over); },
        [&](const auto& c) { return chain::h1_prime_repaired_final(X, c[0]); });
    const auto below = compare_samples(
        xs, [&](double x) { return chain_at(x).repaired_final; }, [&](double x) { return chain_at(x).exact; });
    const paperfuncs::LnPiPolynomial repaired = paperfuncs::h2_repaired();
    auto cert = specfun::certify_positive_interval_poly(-repaired.to_interval(), Rational(1));
    std::string extra = std::string("exact rewrite ") + (identity ? "holds" : "fails") + "; " +
                        describe(below, xs.size()) + " below h1'";
    ProofStep s = certificate_step(
        "g5", "h1' chain with sign-correct psi'' bound: -h2* > 0 on [1, inf), h2* = h2 + 2(x+2)(x+3)(x^2+1)(x^2+2x-1)",
        std::move(cert), identity && below.status == Status::kPass, extra);
    if (below.status == Status::kInconclusive && s.status == Status::kFail && identity) s.status = Status::kInconclusive;
    s.computed = chain_at(1.0).repaired_final;
    r.steps.push_back(std::move(s));
  }

  const double g_from = std::max(opts.grid_from, 1.0 + 0x1p-10);
  r.steps.push_back(grid_step("h", "G strictly decreasing on the grid (compared through ln G)",
                              grid_monotone_certificate(GridFunctionId::kLogG, g_from, opts.grid_to, opts.grid_step,
                                                        Direction::kDecreasing)));
  r.steps.push_back(sequence_step("i", "ln of the G(n/2) sequence strictly decreasing", 3, opts.n_max,
                                  [](int n) { return paperfuncs::log_omega_sequence_term(n); }));
  return r;
}

VerificationReport verify_remark1(const VerifyOptions& opts) {
  if (opts.n_max < 10) throw DomainError("remark1 needs n_max >= 10");
  VerificationReport r{Theorem::kRemark1, {}};

  r.steps.push_back(sequence_step("a", "ln Omega_n^(1/n) strictly decreasing", 1, opts.n_max,
                                  [](int n) { return paperfuncs::log_omega_root_n(n); }));

  {
    const Enclosure first = paperfuncs::omega_root_n(1);
    const Enclosure far = paperfuncs::omega_root_n(1000000);
    ProofStep s;
    s.id = "a-trend";
    s.description = "Omega_n^(1/n) at n = 10^6 below 10^-2 times its value at n = 1 (trend only)";
    s.computed = far;
    s.status = pass_if(far.hi() < 0.01 * first.lo());
    r.steps.push_back(std::move(s));
  }

  r.steps.push_back(sequence_step("b", "ln Omega_n^(1/(n ln n)) strictly decreasing", 2, opts.n_max,
                                  [](int n) { return paperfuncs::log_omega_root_nlogn(n); }));

  {
    const Enclosure limit = e_half();
    std::vector<Enclosure> gaps;
    std::string d = "gaps:";
    for (int n = 100; n <= 1000000; n *= 10) {
      gaps.push_back(abs(paperfuncs::omega_root_nlogn(n) - limit));
      d += " n=" + std::to_string(n) + " " + fmt(gaps.back().mid());
    }
    const SequenceCheck c = check_decreasing(gaps, 0);
    ProofStep s;
    s.id = "c";
    s.description = "|Omega_n^(1/(n ln n)) - e^(-1/2)| shrinking along n = 10^2..10^6 (trend, not a limit proof)";
    s.status = c.status;
    s.computed = gaps.back();
    s.detail = d;
    r.steps.push_back(std::move(s));
  }

  {
    std::vector<Enclosure> logs;
    for (double x = 10.0; x <= 1e5; x *= 10.0) logs.push_back(paperfuncs::log_G(x));
    const SequenceCheck c = check_decreasing(logs, 1);
    const Enclosure last = exp(logs.back());
    ProofStep s;
    s.id = "d";
    s.description = "G(10^k) decreasing for k = 1..5 and G(10^5) < 10^-3";
    s.computed = last;
    s.status = meet(c.status, pass_if(last.hi() < 1e-3));
    s.detail = "ln G(10^5) = " + fmt(logs.back());
    r.steps.push_back(std::move(s));
  }
  return r;
}

VerificationReport explore_remark2(const std::vector<double>& grid, int n_last) {
  if (grid.size() < 3) throw DomainError("exploration needs at least 3 grid points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || !(grid[i] > 1.0 + paperfuncs::kGuardRadius)) {
      throw DomainError("exploration grid points must exceed 1 + 2^-20");
    }
    if (i > 0 && !(grid[i - 1] < grid[i])) throw DomainError("exploration grid must be strictly increasing");
  }
  if (n_last < 5) throw DomainError("exploration needs n_last >= 5");

  auto second_differences = [](const std::vector<double>& xs, const std::vector<Enclosure>& ys) {
    std::vector<Enclosure> d;
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
      const Enclosure right = (ys[i + 1] - ys[i]) / Enclosure::point(xs[i + 1] - xs[i]);
      const Enclosure left = (ys[i] - ys[i - 1]) / Enclosure::point(xs[i] - xs[i - 1]);
      d.push_back(2.0 * (right - left) / Enclosure::point(xs[i + 1] - xs[i - 1]));
    }
    return d;
  };

  auto convexity_step = [](std::string id, std::string description, const std::vector<Enclosure>& d) {
    std::string signs;
    Status status = Status::kPass;
    Enclosure smallest = d.front();
    for (const auto& v : d) {
      if (v.positive()) {
        signs += '+';
      } else if (v.negative()) {
        signs += '-';
        status = Status::kFail;
      } else {
        signs += '?';
        status = meet(status, Status::kInconclusive);
      }
      if (v.lo() < smallest.lo()) smallest = v;
    }
    ProofStep s;
    s.id = std::move(id);
    s.description = std::move(description);
    s.status = status;
    s.computed = smallest;
    s.detail = "second-difference signs " + signs;
    if (status == Status::kFail) s.detail += " (strictly negative entries are counter-evidence to convexity)";
    return s;
  };

  std::vector<Enclosure> log_g;
  for (double x : grid) log_g.push_back(paperfuncs::log_G(x));

  std::vector<double> ns;
  std::vector<Enclosure> log_terms;
  for (int n = 3; n <= n_last; ++n) {
    ns.push_back(n);
    log_terms.push_back(paperfuncs::log_omega_sequence_term(n));
  }

  VerificationReport r{Theorem::kRemark2Conjecture, {}};
  r.steps.push_back(convexity_step("ln-G", "EXPLORATORY: convexity of ln G, second differences",
                                   second_differences(grid, log_g)));
  r.steps.push_back(convexity_step("ln-sequence",
                                   "EXPLORATORY: second differences of ln G(n/2), n = 3.." + std::to_string(n_last),
                                   second_differences(ns, log_terms)));
  return r;
}

}  // namespace monocert::certify
