#include "monocert/serialize.hpp"

#include <charconv>
#include <sstream>

namespace monocert::serialize {

namespace {

using exactpoly::CertificateMethod;
using exactpoly::Verdict;

CertificateMethod method_from_string(const std::string& s) {
  for (auto m : {CertificateMethod::kNone, CertificateMethod::kAllShiftedCoefficientsNonnegative,
                 CertificateMethod::kDescartesOneRootLocalized, CertificateMethod::kSturmZeroRoots}) {
    if (exactpoly::to_string(m) == s) return m;
  }
  throw DomainError("unknown certificate method: " + s);
}

Verdict verdict_from_string(const std::string& s) {
  for (auto v : {Verdict::kPositive, Verdict::kNotCertified}) {
    if (exactpoly::to_string(v) == s) return v;
  }
  throw DomainError("unknown verdict: " + s);
}

Json rationals(const std::vector<Rational>& rs) {
  Json a = Json::array();
  for (const auto& r : rs) a.push_back(to_json(r));
  return a;
}

std::vector<Rational> rationals_from(const Json& j) {
  std::vector<Rational> rs;
  for (const auto& e : j) rs.push_back(rational_from_json(e));
  return rs;
}

template <typename T, typename F>
Json optional_json(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : Json(nullptr);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field: ") + key);
  return j.at(key);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const exactpoly::RationalPolynomial& p) { return rationals(p.coefficients()); }

Json to_json(const Enclosure& e) { return Json{{"lo", e.lo()}, {"hi", e.hi()}}; }

Json to_json(const exactpoly::PositivityCertificate& c) {
  Json endpoints = Json::array();
  for (const auto& ev : c.endpoint_values) endpoints.push_back({{"point", to_json(ev.point)}, {"value", to_json(ev.value)}});
  Json sources = Json::array();
  for (const auto& e : c.source_coefficients) sources.push_back(to_json(e));
  Json j;
  j["method"] = exactpoly::to_string(c.method);
  j["sign_changes"] = c.sign_changes;
  j["endpoint_values"] = std::move(endpoints);
  j["verdict"] = exactpoly::to_string(c.verdict);
  j["domain"] = {{"lower", to_json(c.domain_lower)}, {"upper", "inf"}};
  j["polynomial"] = to_json(c.polynomial);
  j["localization_point"] = optional_json(c.localization_point, [](const Rational& r) { return to_json(r); });
  j["shifted_coefficients"] = rationals(c.shifted_coefficients);
  j["root_bound"] = optional_json(c.root_bound, [](const Rational& r) { return to_json(r); });
  j["sturm_roots"] = optional_json(c.sturm_roots, [](int n) { return Json(n); });
  j["source_coefficients"] = std::move(sources);
  return j;
}

Json to_json(const certify::ProofStep& s) {
  Json j;
  j["id"] = s.id;
  j["description"] = s.description;
  j["status"] = certify::to_string(s.status);
  j["computed"] = optional_json(s.computed, [](const Enclosure& e) { return to_json(e); });
  j["expected"] = optional_json(s.expected, [](const std::string& e) { return Json(e); });
  j["tolerance"] = s.tolerance;
  j["detail"] = s.detail;
  if (s.certificate) j["certificate"] = to_json(*s.certificate);
  return j;
}

Json to_json(const certify::VerificationReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back(to_json(s));
  Json j;
  j["theorem"] = certify::to_string(r.theorem);
  j["overall"] = certify::to_string(r.overall());
  j["steps"] = std::move(steps);
  return j;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("rational must be a string");
  return parse_rational(j.get<std::string>());
}

exactpoly::RationalPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("polynomial must be an array");
  return exactpoly::RationalPolynomial(rationals_from(j));
}

Enclosure enclosure_from_json(const Json& j) {
  const Json& lo = field(j, "lo");
  const Json& hi = field(j, "hi");
  if (!lo.is_number() || !hi.is_number()) throw DomainError("enclosure bounds must be numbers");
  return Enclosure(lo.get<double>(), hi.get<double>());
}

exactpoly::PositivityCertificate certificate_from_json(const Json& j) {
  exactpoly::PositivityCertificate c;
  c.method = method_from_string(field(j, "method").get<std::string>());
  c.sign_changes = field(j, "sign_changes").get<int>();
  for (const auto& ev : field(j, "endpoint_values")) {
    c.endpoint_values.push_back({rational_from_json(field(ev, "point")), rational_from_json(field(ev, "value"))});
  }
  c.verdict = verdict_from_string(field(j, "verdict").get<std::string>());
  c.domain_lower = rational_from_json(field(field(j, "domain"), "lower"));
  c.polynomial = polynomial_from_json(field(j, "polynomial"));
  if (const Json& l = field(j, "localization_point"); !l.is_null()) c.localization_point = rational_from_json(l);
  c.shifted_coefficients = rationals_from(field(j, "shifted_coefficients"));
  if (const Json& b = field(j, "root_bound"); !b.is_null()) c.root_bound = rational_from_json(b);
  if (const Json& s = field(j, "sturm_roots"); !s.is_null()) c.sturm_roots = s.get<int>();
  for (const auto& e : field(j, "source_coefficients")) c.source_coefficients.push_back(enclosure_from_json(e));
  return c;
}

certify::ProofStep step_from_json(const Json& j) {
  certify::ProofStep s;
  s.id = field(j, "id").get<std::string>();
  s.description = field(j, "description").get<std::string>();
  s.status = certify::status_from_string(field(j, "status").get<std::string>());
  if (const Json& c = field(j, "computed"); !c.is_null()) s.computed = enclosure_from_json(c);
  if (const Json& e = field(j, "expected"); !e.is_null()) s.expected = e.get<std::string>();
  s.tolerance = field(j, "tolerance").get<double>();
  if (j.contains("detail")) s.detail = j.at("detail").get<std::string>();
  if (j.contains("certificate")) s.certificate = certificate_from_json(j.at("certificate"));
  return s;
}

certify::VerificationReport report_from_json(const Json& j) {
  try {
    certify::VerificationReport r;
    r.theorem = certify::theorem_from_string(field(j, "theorem").get<std::string>());
    for (const auto& s : field(j, "steps")) r.steps.push_back(step_from_json(s));
    if (certify::to_string(r.overall()) != field(j, "overall").get<std::string>()) {
      throw DomainError("overall status disagrees with the steps");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const certify::VerificationReport& r) {
  std::ostringstream out;
  out << "report " << certify::to_string(r.theorem) << "\n";
  out << "overall " << certify::to_string(r.overall()) << "\n";
  for (const auto& s : r.steps) {
    out << "step " << s.id << " " << certify::to_string(s.status) << "\n";
    out << "  description: " << s.description << "\n";
    if (s.computed) {
      out << "  computed: [" << format_double(s.computed->lo()) << ", " << format_double(s.computed->hi()) << "]\n";
    }
    if (s.expected) out << "  expected: " << *s.expected << " (tolerance " << format_double(s.tolerance) << ")\n";
    if (!s.detail.empty()) out << "  detail: " << s.detail << "\n";
  }
  return out.str();
}

}  // namespace monocert::serialize
