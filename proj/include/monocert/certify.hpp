#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monocert/enclosure.hpp"
#include "monocert/exactpoly.hpp"
#include "monocert/specfun.hpp"

namespace monocert::certify {

/// Ordered so that the report verdict is the minimum over its steps.
enum class Status { kFail = 0, kInconclusive = 1, kPass = 2 };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);
inline Status meet(Status a, Status b) { return a < b ? a : b; }
/// 0 pass, 1 fail, 3 inconclusive.
int exit_code(Status s);

enum class Theorem { kLemma2, kTheorem1, kTheorem2, kRemark1, kRemark2Conjecture };

std::string_view to_string(Theorem t);
Theorem theorem_from_string(std::string_view s);

struct ProofStep {
  std::string id;
  std::string description;
  Status status = Status::kInconclusive;
  std::optional<Enclosure> computed;
  /// Printed anchor value, when the step compares against one.
  std::optional<std::string> expected;
  double tolerance = 0.0;
  /// Free-form diagnostics: certificate method, offending grid pair, etc.
  std::string detail;
  std::optional<exactpoly::PositivityCertificate> certificate;
};

struct VerificationReport {
  Theorem theorem = Theorem::kLemma2;
  std::vector<ProofStep> steps;

  /// pass iff every step passes; fail if any fails; otherwise inconclusive.
  Status overall() const;
  const ProofStep& step(std::string_view id) const;
};

enum class Direction { kIncreasing, kDecreasing };

std::string_view to_string(Direction d);

/// Strict enclosure separation between consecutive grid values.
///
/// On overlap the pair is split once at its midpoint; if either half still
/// overlaps the certificate is inconclusive. A pair whose enclosures are
/// strictly ordered the wrong way fails the certificate.
struct GridCertificate {
  std::string function_id;
  std::vector<double> grid;
  Direction direction = Direction::kIncreasing;
  std::size_t verified_pairs = 0;
  std::size_t subdivided_pairs = 0;
  std::size_t inconclusive_pairs = 0;
  Status status = Status::kInconclusive;
  /// First pair that failed or stayed inconclusive.
  std::optional<std::pair<double, double>> offending_pair;
};

using GridFunction = std::function<Enclosure(double)>;

enum class GridFunctionId { kF, kLogG, kFgRatio };

std::string_view to_string(GridFunctionId f);

/// a, a+step, ..., with b appended when the step does not land on it.
/// Throws DomainError unless a < b and step > 0.
std::vector<double> make_grid(double a, double b, double step);

GridCertificate grid_monotone_certificate(std::string function_id, const GridFunction& f,
                                          const std::vector<double>& grid, Direction direction);

/// For kF the guard zones around 0 and 1 are dropped from the grid; 0 and 1
/// themselves stay and use the exact limit values.
GridCertificate grid_monotone_certificate(GridFunctionId f, double a, double b, double step, Direction direction);

/// Printed decimal anchors, kept as data so they can be perturbed.
struct PaperAnchors {
  double q_at_1 = 3.468;
  double h1_at_1 = 8.04;
  double h_at_1 = -1.14;
  double h2_at_1 = -134.10;
  double h2p_at_1 = -469.89;
  double h2pp_at_1 = -1696.22;
  double p6_at_0 = -113.68;
  double p6_at_1 = 5087.39;
};

struct Lemma2Inputs {
  std::array<exactpoly::RationalPolynomial, 5> polynomials;
  /// p_i(1) as tabulated.
  std::array<Rational, 5> values_at_1;
  specfun::IntervalPolynomial p6;

  static Lemma2Inputs defaults();
};

struct VerifyOptions {
  PaperAnchors anchors;
  Lemma2Inputs lemma2 = Lemma2Inputs::defaults();
  int n_max = 200;
  double grid_from = 0.0;
  double grid_to = 50.0;
  double grid_step = 0.01;
  double tolerance = 0.01;
  std::uint64_t seed = 20240611;
};

VerificationReport verify_lemma2(const VerifyOptions& opts = {});
VerificationReport verify_theorem1(const VerifyOptions& opts = {});
/// Throws DomainError for n_max < 4.
VerificationReport verify_theorem2(const VerifyOptions& opts = {});
/// Throws DomainError for n_max < 10.
VerificationReport verify_remark1(const VerifyOptions& opts = {});

/// Second divided differences of ln G over `grid` and of the ln-sequence term
/// over n = 3..n_last. Exploratory only; never feeds a theorem verdict.
/// Throws DomainError for fewer than 3 points, a non-increasing grid, a point
/// at or below 1 + 2^-20, or n_last < 5.
VerificationReport explore_remark2(const std::vector<double>& grid, int n_last = 100);

}  // namespace monocert::certify
