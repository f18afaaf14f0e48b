#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "conetorsion/certify.hpp"
#include "conetorsion/sphere.hpp"
#include "conetorsion/torus.hpp"

namespace ct {

using Json = nlohmann::json;

/// {"center", "radius", "digits"}; center carries `digits` significant digits
/// and the radius absorbs the decimal rounding.
Json to_json(const Enclosure& x, int digits);
/// Same, tagged with the source location of the quantity.
Json to_json(const Enclosure& x, int digits, const std::string& paper_ref);
Json to_json(const Reading& r, int digits);
Json to_json(const BoundCertificate& c, int digits);

Json sphere_report_json(const SphereAnomalyReport& r, const Precision& prec);
Json torus_report_json(const TorusAnomalyReport& r, const Precision& prec);
Json certificates_json(const std::vector<BoundCertificate>& certs, const Precision& prec);
Json constants_json(const Precision& prec);

/// Names of failed verdicts in a report produced above (empty when all pass).
std::vector<std::string> sphere_failures(const SphereAnomalyReport& r);
std::vector<std::string> torus_failures(const TorusAnomalyReport& r);
std::vector<std::string> certificate_failures(const std::vector<BoundCertificate>& certs);

/// Indented plain-text rendering; enclosure objects print as
/// "center ± radius" with 12 significant digits.
std::string to_text(const Json& report);

}  // namespace ct
