#include "conetorsion/report.hpp"

#include <sstream>

#include "conetorsion/special.hpp"
#include "conetorsion/zeta_lattice.hpp"

namespace ct {
namespace {

constexpr int kTextDigits = 12;

bool is_enclosure(const Json& j) { return j.is_object() && j.contains("center") && j.contains("radius") && j.contains("digits"); }

std::string enclosure_text(const Json& j) {
  const int digits = j.at("digits").get<int>();
  const mpfr_prec_t bits = Precision{std::max(digits, Precision::kMinDigits)}.bits();
  Real center(bits);
  Real radius(kRadiusBits);
  mpfr_set_str(center.get(), j.at("center").get<std::string>().c_str(), 10, MPFR_RNDN);
  mpfr_set_str(radius.get(), j.at("radius").get<std::string>().c_str(), 10, MPFR_RNDU);
  // Reparsing rounds the center again; 10^{-D}·|center| covers it.
  Real slack(kRadiusBits);
  mpfr_set_str(slack.get(), ("1e-" + std::to_string(digits)).c_str(), 10, MPFR_RNDU);
  mpfr_mul(slack.get(), slack.get(), center.get(), MPFR_RNDU);
  mpfr_abs(slack.get(), slack.get(), MPFR_RNDU);
  std::string text = Enclosure(center, add_up(radius, slack)).to_string(kTextDigits);
  if (j.contains("paper_ref")) text += "  [" + j.at("paper_ref").get<std::string>() + "]";
  return text;
}

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    const Json& v = *it;
    if (is_enclosure(v)) {
      out << indent << key << ": " << enclosure_text(v) << "\n";
    } else if (v.is_structured()) {
      out << indent << key << ":\n";
      render(v, indent + "  ", out);
    } else if (v.is_string()) {
      out << indent << key << ": " << v.get<std::string>() << "\n";
    } else {
      out << indent << key << ": " << v.dump() << "\n";
    }
  }
}

Json failures_json(const std::vector<std::string>& failures) { return Json(failures); }

}  // namespace

Json to_json(const Enclosure& x, int digits) {
  auto [c, r] = x.decimal_parts(digits);
  return Json{{"center", c}, {"radius", r}, {"digits", digits}};
}

Json to_json(const Enclosure& x, int digits, const std::string& paper_ref) {
  Json j = to_json(x, digits);
  j["paper_ref"] = paper_ref;
  return j;
}

Json to_json(const Reading& r, int digits) {
  return Json{{"name", r.name}, {"lower", to_json(r.lower, digits)}, {"upper", to_json(r.upper, digits)}, {"holds", r.holds}};
}

Json to_json(const BoundCertificate& c, int digits) {
  Json readings = Json::array();
  for (const auto& r : c.readings) readings.push_back(to_json(r, digits));
  Json j{{"claim", c.claim}, {"paper_ref", c.paper_ref}, {"computed", to_json(c.computed, digits)}, {"readings", readings}, {"verdict", name(c.verdict)}};
  if (!c.readings.empty()) {
    j["lower"] = to_json(c.readings.front().lower, digits);
    j["upper"] = to_json(c.readings.front().upper, digits);
  }
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j;
}

std::vector<std::string> sphere_failures(const SphereAnomalyReport& r) {
  std::vector<std::string> out;
  if (!r.cancels) out.push_back("cancellation");
  return out;
}

std::vector<std::string> torus_failures(const TorusAnomalyReport& r) {
  std::vector<std::string> out;
  if (!r.verdicts.negative) out.push_back("total_negative");
  return out;
}

std::vector<std::string> certificate_failures(const std::vector<BoundCertificate>& certs) {
  std::vector<std::string> out;
  for (const auto& c : certs) {
    if (c.verdict == Verdict::fails) out.push_back(c.paper_ref + ": " + c.claim);
  }
  return out;
}

Json sphere_report_json(const SphereAnomalyReport& r, const Precision& prec) {
  const int d = prec.digits;
  Json j{{"command", "sphere"},
         {"digits", d},
         {"p", r.p},
         {"volume", to_json(r.volume, d, "sec-4.2")},
         {"comb_term", to_json(r.comb, d, "sec-4.2")},
         {"analy_term", to_json(r.analy, d, "sec-4.4")},
         {"analy_term_closed", to_json(r.analy_closed, d, "sec-4.4")},
         {"total", to_json(r.total, d)},
         {"constants", {{"euler_characteristic", kSphereEulerCharacteristic}, {"r_0", kSphereRankEnds}, {"r_2p", kSphereRankEnds}}},
         {"verdicts", {{"cancels", r.cancels}, {"analy_forms_agree", r.analy_forms_agree}}}};
  if (r.identities) {
    const SphereIdentities& id = *r.identities;
    j["identities"] = {{"alpha_weighted_top_sum", id.alpha_top_sum.get_str()},
                       {"alpha_weighted_top_sum_is_2p", id.alpha_top_sum_is_2p},
                       {"alpha_weighted_top_sum_is_p", id.alpha_top_sum_is_p},
                       {"alternating_moments_vanish", id.moments_vanish},
                       {"mu_completes_square", id.mu_completes_square},
                       {"mu_plus_minus_alpha", id.mu_shifts},
                       {"paper_ref", "sec-4.3"}};
  }
  if (!r.reductions.empty()) {
    Json checks = Json::array();
    for (const auto& c : r.reductions) {
      checks.push_back({{"s", to_json(c.s, d)},
                        {"brute", to_json(c.brute, d)},
                        {"reduced_as_stated", to_json(c.as_stated, d, "sec-4.3")},
                        {"reduced_corrected", to_json(c.corrected, d)},
                        {"holds_as_stated", c.holds_as_stated},
                        {"holds_corrected", c.holds_corrected}});
    }
    j["reduction_checks"] = checks;
  }
  j["failures"] = failures_json(sphere_failures(r));
  return j;
}

Json torus_report_json(const TorusAnomalyReport& r, const Precision& prec) {
  const int d = prec.digits;
  const Json z1{{"value", to_json(r.z1.value, d, "sec-5.4.1")},
                {"rz_double", to_json(r.z1.rz, d)},
                {"rz_double_fit", to_json(r.z1.rz_fit, d)},
                {"series_s3", to_json(r.z1.s3, d, "prop-3.3")},
                {"bessel_sum", to_json(r.z1.bessel_sum, d, "sec-5.4.1")},
                {"bessel_bound", to_json(r.bounds.bessel_bound, d, "sec-5.4.1")},
                {"bessel_within_bound", r.z1.bessel_within_bound},
                {"sandwich", to_json(r.z1.sandwich, d)}};
  const Json z2{{"value", to_json(r.z2.value, d, "sec-5.4.2")},
                {"rz_single", to_json(r.z2.rz, d)},
                {"series_s2", to_json(r.z2.s2, d, "prop-3.2")},
                {"sandwich", to_json(r.z2.sandwich, d)}};
  Json j{{"command", "torus"},
         {"digits", d},
         {"comb_term", to_json(r.comb, d, "sec-5.2")},
         {"z1", z1},
         {"z2", z2},
         {"analy_term", to_json(r.analy, d, "sec-5.4")},
         {"total", to_json(r.total, d)},
         {"constants", {{"euler_characteristic", kTorusEulerCharacteristic}, {"r_q", {kTorusRanks[0], kTorusRanks[1], kTorusRanks[2]}}, {"multiplicity", kTorusMultiplicity}}},
         {"reference_bounds",
          {{"A", to_json(r.bounds.a, d, "sec-5.4.3")},
           {"B", to_json(r.bounds.b, d, "sec-5.4.3")},
           {"A_collected", to_json(r.bounds.a_collected, d)},
           {"B_collected", to_json(r.bounds.b_collected, d)},
           {"analy_in_ab", r.analy_in_ab}}},
         {"verdicts", {{"negative", r.verdicts.negative}, {"in_window", r.verdicts.in_window}, {"in_ab", r.verdicts.in_ab}, {"paper_ref", "sec-5.5"}}},
         {"formula_a_diagnostic",
          {{"z1", to_json(r.z1.value_formula_a, d)},
           {"z1_sandwich", to_json(r.z1.sandwich_formula_a, d)},
           {"analy_term", to_json(r.analy_formula_a, d)},
           {"total", to_json(r.total_formula_a, d)},
           {"verdicts", {{"negative", r.verdicts_formula_a.negative}, {"in_window", r.verdicts_formula_a.in_window}, {"in_ab", r.verdicts_formula_a.in_ab}}}}}};
  if (r.z1_fd || r.z2_fd) {
    Json oracles = Json::object();
    if (r.z1_fd) oracles["z1_finite_difference"] = to_json(*r.z1_fd, d);
    if (r.z2_fd) oracles["z2_finite_difference"] = to_json(*r.z2_fd, d);
    j["oracles"] = oracles;
  }
  j["failures"] = failures_json(torus_failures(r));
  return j;
}

Json certificates_json(const std::vector<BoundCertificate>& certs, const Precision& prec) {
  Json out = Json::array();
  for (const auto& c : certs) out.push_back(to_json(c, prec.digits));
  return out;
}

Json constants_json(const Precision& prec) {
  const int d = prec.digits;
  const BoundConstants c = constants_c1_c5(prec);
  const TorusBounds b = torus_bounds(prec);
  return Json{{"command", "constants"},
              {"digits", d},
              {"c1", to_json(c.c1, d, "prop-3.1")},
              {"c2", to_json(c.c2, d, "prop-3.1")},
              {"c3", to_json(c.c3, d, "prop-3.2")},
              {"c4", to_json(c.c4, d, "prop-3.2")},
              {"c5", to_json(c.c5, d, "prop-3.3")},
              {"A", to_json(b.a, d, "sec-5.4.3")},
              {"B", to_json(b.b, d, "sec-5.4.3")},
              {"bessel_bound", to_json(b.bessel_bound, d, "sec-5.4.1")},
              {"euler_gamma", to_json(euler_gamma(prec), d, "sec-3.1")},
              {"log_2pi", to_json(log(ldexp(Enclosure::pi(prec), 1)), d, "sec-5.2")},
              {"zeta_nh_deriv_at_zero", to_json(zeta_nh_deriv_at_zero_closed(prec), d, "sec-3.2")}};
}

std::string to_text(const Json& report) {
  std::ostringstream out;
  if (is_enclosure(report)) return enclosure_text(report) + "\n";
  render(report, "", out);
  return out.str();
}

}  // namespace ct
