#pragma once

#include <string>

#include <json.hpp>

#include "monocert/certify.hpp"
#include "monocert/enclosure.hpp"
#include "monocert/exactpoly.hpp"

namespace monocert::serialize {

using Json = nlohmann::ordered_json;

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

Json to_json(const Rational& r);
Json to_json(const exactpoly::RationalPolynomial& p);
Json to_json(const Enclosure& e);
Json to_json(const exactpoly::PositivityCertificate& c);
Json to_json(const certify::ProofStep& s);
Json to_json(const certify::VerificationReport& r);

/// Inverses of the above; throw DomainError on malformed input.
Rational rational_from_json(const Json& j);
exactpoly::RationalPolynomial polynomial_from_json(const Json& j);
Enclosure enclosure_from_json(const Json& j);
exactpoly::PositivityCertificate certificate_from_json(const Json& j);
certify::ProofStep step_from_json(const Json& j);
certify::VerificationReport report_from_json(const Json& j);

/// Human-readable report, one block per step.
std::string to_text(const certify::VerificationReport& r);

}  // namespace monocert::serialize
