#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "monocert/certify.hpp"
#include "monocert/paperfuncs.hpp"
#include "support.hpp"

using namespace monocert;
using namespace monocert::certify;

namespace {

std::vector<Status> statuses(const VerificationReport& r) {
  std::vector<Status> s;
  for (const auto& step : r.steps) s.push_back(step.status);
  return s;
}

/// Ids whose status differs between two runs of the same theorem.
std::vector<std::string> changed(const VerificationReport& a, const VerificationReport& b) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    if (a.steps[i].status != b.steps[i].status) ids.push_back(a.steps[i].id);
  }
  return ids;
}

VerifyOptions quick() {
  VerifyOptions o;
  o.grid_step = 0.05;
  o.n_max = 40;
  return o;
}

}  // namespace

TEST_CASE("status algebra") {
  CHECK(meet(Status::kPass, Status::kInconclusive) == Status::kInconclusive);
  CHECK(meet(Status::kFail, Status::kInconclusive) == Status::kFail);
  CHECK(exit_code(Status::kPass) == 0);
  CHECK(exit_code(Status::kFail) == 1);
  CHECK(exit_code(Status::kInconclusive) == 3);
  CHECK(status_from_string("inconclusive") == Status::kInconclusive);
  CHECK_THROWS_AS(status_from_string("maybe"), DomainError);
  CHECK(theorem_from_string("remark2-conjecture") == Theorem::kRemark2Conjecture);
  CHECK_THROWS_AS(theorem_from_string("theorem9"), DomainError);

  support::Rng rng(41);
  const Status all[] = {Status::kFail, Status::kInconclusive, Status::kPass};
  for (int i = 0; i < 300; ++i) {
    VerificationReport r;
    Status expected = Status::kPass;
    const long n = rng.integer(0, 6);
    for (long k = 0; k < n; ++k) {
      ProofStep s;
      s.id = std::to_string(k);
      s.status = all[rng.integer(0, 2)];
      expected = std::min(expected, s.status);
      r.steps.push_back(s);
    }
    CHECK(r.overall() == expected);
  }
}

TEST_CASE("make_grid") {
  const auto g = make_grid(0.0, 1.0, 0.25);
  CHECK(g == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  const auto h = make_grid(0.0, 1.0, 0.3);
  CHECK(h.back() == 1.0);
  CHECK(h.size() == 5);
  CHECK(make_grid(0.0, 50.0, 0.01).size() == 5001);
  CHECK_THROWS_AS(make_grid(1.0, 1.0, 0.1), DomainError);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("grid certificate examples") {
  const auto f = grid_monotone_certificate(GridFunctionId::kF, 1.01, 50.0, 0.01, Direction::kIncreasing);
  CHECK(f.status == Status::kPass);
  CHECK(f.verified_pairs == f.grid.size() - 1);
  const auto g = grid_monotone_certificate(GridFunctionId::kLogG, 1.001, 50.0, 0.01, Direction::kDecreasing);
  CHECK(g.status == Status::kPass);
  const auto wrong = grid_monotone_certificate(GridFunctionId::kF, 0.0, 1.0, 0.01, Direction::kDecreasing);
  CHECK(wrong.status == Status::kFail);
  CHECK(wrong.offending_pair.has_value());
}

TEST_CASE("grid certificate reports overlap as inconclusive") {
  const auto flat = grid_monotone_certificate(
      "flat", [](double) { return Enclosure(0.0, 1.0); }, {0.0, 1.0, 2.0}, Direction::kIncreasing);
  CHECK(flat.status == Status::kInconclusive);
  CHECK(flat.inconclusive_pairs == 2);
  CHECK(flat.subdivided_pairs == 2);
  REQUIRE(flat.offending_pair.has_value());
  CHECK(flat.offending_pair->first == 0.0);

  // Endpoints overlap; the midpoint sample exposes a reversal.
  const auto dip = grid_monotone_certificate(
      "dip", [](double x) { return x == 1.0 ? Enclosure(-5.0, -4.0) : x < 1.0 ? Enclosure(0.0, 2.0) : Enclosure(1.0, 3.0); },
      {0.0, 2.0}, Direction::kIncreasing);
  CHECK(dip.status == Status::kFail);
  CHECK(dip.subdivided_pairs == 1);

  CHECK_THROWS_AS(grid_monotone_certificate("bad", [](double x) { return Enclosure::point(x); }, {1.0, 0.0},
                                            Direction::kIncreasing),
                  DomainError);
}

TEST_CASE("issued grid certificates hold between grid points") {
  support::Rng rng(42);
  struct Case {
    GridFunctionId id;
    double a, b, step;
    Direction d;
    std::function<Enclosure(double)> f;
  };
  const std::vector<Case> cases{
      {GridFunctionId::kF, 1.01, 12.0, 0.05, Direction::kIncreasing, [](double x) { return paperfuncs::F(x).value; }},
      {GridFunctionId::kLogG, 1.2, 30.0, 0.05, Direction::kDecreasing, [](double x) { return paperfuncs::log_G(x); }},
      {GridFunctionId::kFgRatio, 1.0, 20.0, 0.5, Direction::kIncreasing,
       [](double x) { return paperfuncs::fg_ratio(x); }},
  };
  for (const auto& c : cases) {
    const auto cert = grid_monotone_certificate(c.id, c.a, c.b, c.step, c.d);
    REQUIRE(cert.status == Status::kPass);
    int violations = 0;
    for (std::size_t i = 0; i + 1 < cert.grid.size(); ++i) {
      std::vector<double> xs{cert.grid[i], cert.grid[i + 1]};
      for (int k = 0; k < 10; ++k) xs.push_back(rng.uniform(cert.grid[i], cert.grid[i + 1]));
      std::sort(xs.begin(), xs.end());
      for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        if (xs[k] == xs[k + 1]) continue;
        const double l = c.f(xs[k]).mid(), r = c.f(xs[k + 1]).mid();
        if (c.d == Direction::kIncreasing ? !(l < r) : !(l > r)) ++violations;
      }
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("lemma2 report") {
  const auto r = verify_lemma2();
  CHECK(r.theorem == Theorem::kLemma2);
  CHECK(r.overall() == Status::kPass);
  CHECK(r.steps.size() == 18);
  const auto positives = std::count_if(r.steps.begin(), r.steps.end(), [](const ProofStep& s) {
    return s.id.ends_with("-positive");
  });
  CHECK(positives == 6);
  CHECK(r.step("p1-positive").certificate->method == exactpoly::CertificateMethod::kDescartesOneRootLocalized);
  CHECK(r.step("p2-positive").detail.find("identical to p1") != std::string::npos);
  CHECK(distance(*r.step("p6-at-0").computed, -113.68221) < 1e-5);
}

TEST_CASE("lemma2 rejects a constant-term mutation of p1") {
  VerifyOptions o;
  auto c = o.lemma2.polynomials[0].coefficients();
  c[0] = 1;
  o.lemma2.polynomials[0] = exactpoly::RationalPolynomial(c);
  const auto r = verify_lemma2(o);
  CHECK(r.overall() == Status::kFail);
  CHECK(r.step("p1-at-0").status == Status::kFail);
}

TEST_CASE("lemma2 rejects p6 with ln pi replaced by 2") {
  VerifyOptions o;
  o.lemma2.p6 = paperfuncs::p6().to_interval(Enclosure::point(2.0));
  const auto r = verify_lemma2(o);
  CHECK(r.overall() == Status::kFail);
  CHECK(r.step("p6-at-0").status == Status::kFail);
}

TEST_CASE("theorem1 report") {
  const auto r = verify_theorem1();
  CHECK(r.overall() == Status::kPass);
  CHECK(distance(*r.step("a").computed, 3.4683351944) < 1e-9);
  CHECK(r.step("b").expected == "148 712 1364 1272 611 144 13");
  CHECK(r.step("c").computed->contains(37.0 / 3.0));
  CHECK(r.step("e").description.find("hypothesis check") != std::string::npos);
  CHECK(r.step("f").detail.find("inconclusive 0") != std::string::npos);
  CHECK(certainly_less(paperfuncs::F(0.0).value, paperfuncs::F(0.02).value));
}

TEST_CASE("theorem2 report: anchors pass, the printed collected form does not") {
  const auto r = verify_theorem2();
  for (const char* id : {"a", "b", "c", "d", "e", "f", "g1", "g3", "g4", "g5", "h", "i"}) {
    CHECK_MESSAGE(r.step(id).status == Status::kPass, id);
  }
  CHECK(r.step("g2").status == Status::kFail);
  CHECK(r.step("g2").computed->contains(8.0));
  CHECK(r.overall() == Status::kFail);
  CHECK(distance(*r.step("d").computed, -134.105930958) < 1e-8);
  CHECK_THROWS_AS(verify_theorem2([] {
                    VerifyOptions o;
                    o.n_max = 3;
                    return o;
                  }()),
                  DomainError);
}

TEST_CASE("theorem2 n_max reaches the sequence step") {
  VerifyOptions o = quick();
  o.n_max = 50;
  CHECK(verify_theorem2(o).step("i").detail.find("n = 3..50") != std::string::npos);
}

TEST_CASE("remark1 report") {
  const auto r = verify_remark1();
  CHECK(r.overall() == Status::kPass);
  CHECK(r.step("c").computed->mid() == doctest::Approx(0.0656055).epsilon(1e-5));
  CHECK(r.step("d").computed->hi() < 1e-3);
  VerifyOptions o;
  o.n_max = 9;
  CHECK_THROWS_AS(verify_remark1(o), DomainError);
}

TEST_CASE("anchor sign flips fail exactly their own step") {
  struct Flip {
    Theorem theorem;
    double PaperAnchors::*field;
    const char* step;
  };
  const Flip flips[] = {
      {Theorem::kTheorem1, &PaperAnchors::q_at_1, "a"},    {Theorem::kTheorem2, &PaperAnchors::h2pp_at_1, "b"},
      {Theorem::kTheorem2, &PaperAnchors::h2p_at_1, "c"},  {Theorem::kTheorem2, &PaperAnchors::h2_at_1, "d"},
      {Theorem::kTheorem2, &PaperAnchors::h1_at_1, "e"},   {Theorem::kTheorem2, &PaperAnchors::h_at_1, "f"},
      {Theorem::kLemma2, &PaperAnchors::p6_at_0, "p6-at-0"}, {Theorem::kLemma2, &PaperAnchors::p6_at_1, "p6-at-1"},
  };
  auto run = [](Theorem t, const VerifyOptions& o) {
    switch (t) {
      case Theorem::kLemma2: return verify_lemma2(o);
      case Theorem::kTheorem1: return verify_theorem1(o);
      default: return verify_theorem2(o);
    }
  };
  for (const auto& f : flips) {
    VerifyOptions o = quick();
    const auto base = run(f.theorem, o);
    o.anchors.*(f.field) = -(o.anchors.*(f.field));
    const auto mutated = run(f.theorem, o);
    CHECK(changed(base, mutated) == std::vector<std::string>{f.step});
    CHECK(mutated.step(f.step).status == Status::kFail);
    CHECK(mutated.overall() == Status::kFail);
  }
}

TEST_CASE("exploration reports signs and leaves verdicts alone") {
  const auto before = statuses(verify_remark1());
  const auto e = explore_remark2(make_grid(1.5, 20.0, 0.5), 100);
  CHECK(e.theorem == Theorem::kRemark2Conjecture);
  REQUIRE(e.steps.size() == 2);
  CHECK(e.steps[0].description.starts_with("EXPLORATORY"));
  // ln G is convex up to about x = 7.04 and concave beyond.
  CHECK(e.steps[0].detail.find("+++++++++++---") != std::string::npos);
  CHECK(statuses(verify_remark1()) == before);

  CHECK_THROWS_AS(explore_remark2({1.5, 2.0}), DomainError);
  CHECK_THROWS_AS(explore_remark2({1.5, 1.4, 2.0}), DomainError);
  CHECK_THROWS_AS(explore_remark2({0.5, 1.5, 2.0}), DomainError);
  CHECK_THROWS_AS(explore_remark2({1.5, 2.0, 2.5}, 4), DomainError);
}

TEST_CASE("reports are deterministic") {
  const auto a = verify_theorem2(quick());
  const auto b = verify_theorem2(quick());
  REQUIRE(a.steps.size() == b.steps.size());
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    CHECK(a.steps[i].detail == b.steps[i].detail);
    CHECK(a.steps[i].computed == b.steps[i].computed);
  }
}
