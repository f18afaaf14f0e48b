#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "conetorsion/errors.hpp"
#include "conetorsion/report.hpp"
#include "conetorsion/series.hpp"

namespace ct::cli {
namespace {

struct RunConfig {
  int digits = 60;
  long j_cap = 0;
  long lattice_cap = 0;
  long bessel_cap = 0;
  std::string format = "json";
  std::string snapshot;
  bool update_snapshot = false;
};

struct Outcome {
  Json report;
  std::vector<std::string> failures;
};

ZetaNHContext make_context(const RunConfig& cfg, ContinuationMethod method = ContinuationMethod::automatic) {
  ZetaNHContext ctx;
  ctx.prec = Precision{cfg.digits};
  ctx.method = method;
  if (cfg.j_cap > 0) ctx.j_cap = cfg.j_cap;
  if (cfg.lattice_cap > 0) ctx.lattice_cap = cfg.lattice_cap;
  if (cfg.bessel_cap > 0) ctx.bessel_cap = cfg.bessel_cap;
  return ctx;
}

const std::map<std::string, ContinuationMethod> kMethods{{"auto", ContinuationMethod::automatic},
                                                          {"direct", ContinuationMethod::direct},
                                                          {"binomial", ContinuationMethod::binomial_in_zetaR},
                                                          {"bessel", ContinuationMethod::bessel_poisson}};

Json evaluation_json(const std::string& what, const Evaluation& e, const RunConfig& cfg) {
  return Json{{"command", "zeta " + what}, {"digits", cfg.digits}, {"value", to_json(e.value, cfg.digits)}, {"method", name(e.method)}, {"truncation", e.truncation}};
}

std::string render(const Json& report, const RunConfig& cfg) { return cfg.format == "text" ? to_text(report) : report.dump(2) + "\n"; }

int emit(const Outcome& outcome, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string text = render(outcome.report, cfg);
  out << text;
  if (!cfg.snapshot.empty()) {
    if (cfg.update_snapshot) {
      std::ofstream(cfg.snapshot) << text;
    } else {
      std::ifstream in(cfg.snapshot);
      if (!in) {
        err << "snapshot not found: " << cfg.snapshot << "\n";
        return kVerdictFailed;
      }
      std::stringstream stored;
      stored << in.rdbuf();
      if (stored.str() != text) {
        err << Json{{"failures", {"snapshot_mismatch"}}, {"snapshot", cfg.snapshot}}.dump() << "\n";
        return kVerdictFailed;
      }
    }
  }
  if (!outcome.failures.empty()) {
    err << Json{{"failures", outcome.failures}}.dump() << "\n";
    return kVerdictFailed;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Anomaly terms of cones over even spheres and the flat torus, in certified arithmetic", "conetorsion"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--digits", cfg.digits, "Decimal digits of working precision")->envname("CONETORSION_DIGITS")->check(CLI::Range(Precision::kMinDigits, Precision::kMaxDigits));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--snapshot", cfg.snapshot, "Compare the output against this file");
  app.add_flag("--update-snapshot", cfg.update_snapshot, "Write the output to the --snapshot file instead of comparing");
  app.add_option("--j-cap", cfg.j_cap, "Cap on binomial series length")->check(CLI::PositiveNumber);
  app.add_option("--lattice-cap", cfg.lattice_cap, "Cap on one-dimensional direct sums")->check(CLI::PositiveNumber);
  app.add_option("--bessel-cap", cfg.bessel_cap, "Cap on Bessel sum cutoffs")->check(CLI::PositiveNumber);

  std::function<Outcome()> action;

  long p = 1;
  bool identities = false;
  std::vector<std::string> oracle_s;
  auto* sphere = app.add_subcommand("sphere", "Sphere S^{2p}: combinatorial and analytic anomaly");
  sphere->add_option("--p", p, "Half dimension")->check(CLI::Range(1, 64));
  sphere->add_flag("--identities", identities, "Include exact combinatorial identities");
  sphere->add_option("--oracle-s", oracle_s, "Exponents for the spectral reduction check (s > 2p+1)");
  sphere->callback([&] {
    action = [&] {
      const Precision prec{cfg.digits};
      std::vector<Enclosure> exps;
      for (const auto& s : oracle_s) exps.push_back(Enclosure::from_decimal(s, prec));
      const SphereAnomalyReport r = cancellation_check(p, prec, identities, exps);
      return Outcome{sphere_report_json(r, prec), sphere_failures(r)};
    };
  });

  bool oracles = false;
  auto* torus = app.add_subcommand("torus", "Flat torus: Z1, Z2, total anomaly and reference bounds");
  torus->add_flag("--oracles", oracles, "Add finite-difference oracles for Z1 and Z2");
  torus->callback([&] {
    action = [&] {
      const ZetaNHContext ctx = make_context(cfg);
      const TorusAnomalyReport r = total_anomaly_torus(ctx, oracles);
      return Outcome{torus_report_json(r, ctx.prec), torus_failures(r)};
    };
  });

  auto* certify = app.add_subcommand("certify-bounds", "Certificates for the series bounds and closed sums");
  certify->callback([&] {
    action = [&] {
      const ZetaNHContext ctx = make_context(cfg);
      const auto certs = certify_all(ctx);
      return Outcome{certificates_json(certs, ctx.prec), certificate_failures(certs)};
    };
  });

  auto* constants = app.add_subcommand("constants", "Explicit constants c1..c5, A, B and friends");
  constants->callback([&] {
    action = [&] { return Outcome{constants_json(Precision{cfg.digits}), {}}; };
  });

  std::string s_text;
  std::string method = "auto";
  bool deriv = false;
  std::string sign = "+";
  std::string which = "nh";
  auto* zeta = app.add_subcommand("zeta", "Lattice zeta functions");
  zeta->require_subcommand(1);
  auto add_s = [&](CLI::App* sub) { sub->add_option("--s", s_text, "Argument (decimal)")->required(); };
  auto add_method = [&](CLI::App* sub) { sub->add_option("--method", method, "Continuation method")->check(CLI::IsMember({"auto", "direct", "binomial", "bessel"})); };
  auto add_sign = [&](CLI::App* sub) { sub->add_option("--sign", sign, "Shift sign")->check(CLI::IsMember({"+", "-"})); };

  auto* nh = zeta->add_subcommand("nh", "zeta(s; n^2 + 1/4)");
  nh->add_option("--s", s_text, "Argument (decimal)");
  nh->add_flag("--deriv", deriv, "Derivative at s = 0");
  add_method(nh);
  nh->callback([&] {
    action = [&] {
      const ZetaNHContext ctx = make_context(cfg, kMethods.at(method));
      if (deriv) {
        if (!s_text.empty() && Enclosure::from_decimal(s_text, ctx.prec).magnitude() > Real(0, 64)) throw DomainError("zeta nh", "--deriv is available at s = 0 only");
        const Enclosure d = zeta_nh_deriv_at_zero(ctx);
        return Outcome{Json{{"command", "zeta nh --deriv"}, {"digits", cfg.digits}, {"s", "0"}, {"value", to_json(d, cfg.digits, "sec-3.2")}}, {}};
      }
      if (s_text.empty()) throw DomainError("zeta nh", "--s is required");
      return Outcome{evaluation_json("nh", zeta_nh(Enclosure::from_decimal(s_text, ctx.prec), ctx), cfg), {}};
    };
  });

  auto* dbl = zeta->add_subcommand("double", "zeta(s; n^2 + m^2 + 1/4)");
  add_s(dbl);
  add_method(dbl);
  dbl->callback([&] {
    action = [&] {
      const ZetaNHContext ctx = make_context(cfg, kMethods.at(method));
      const Enclosure s = Enclosure::from_decimal(s_text, ctx.prec);
      const bool convergent = s.lower() > Enclosure::from_long(1, ctx.prec).upper();
      return Outcome{evaluation_json("double", convergent ? zeta_double(s, ctx) : zeta_double_continued(s, ctx), cfg), {}};
    };
  });

  auto* shifted = zeta->add_subcommand("shifted", "sum of (sqrt(n^2 + 1/4) +/- 1/2)^{-s}");
  add_s(shifted);
  add_sign(shifted);
  add_method(shifted);
  shifted->callback([&] {
    action = [&] {
      const ZetaNHContext ctx = make_context(cfg);
      const Enclosure s = Enclosure::from_decimal(s_text, ctx.prec);
      const int sg = sign == "+" ? 1 : -1;
      const Evaluation e = method == "direct" ? zeta_shifted_nh(sg, s, ctx) : zeta_shifted_nh_expansion(sg, s, ctx);
      return Outcome{evaluation_json("shifted " + sign, e, cfg), {}};
    };
  });

  auto* shifted_double = zeta->add_subcommand("shifted-double", "sum of (sqrt(n^2 + m^2 + 1/4) +/- 1/2)^{-s}");
  add_s(shifted_double);
  add_sign(shifted_double);
  add_method(shifted_double);
  shifted_double->callback([&] {
    action = [&] {
      const ZetaNHContext ctx = make_context(cfg);
      const Enclosure s = Enclosure::from_decimal(s_text, ctx.prec);
      const int sg = sign == "+" ? 1 : -1;
      const Evaluation e = method == "direct" ? zeta_shifted_double(sg, s, ctx) : zeta_shifted_double_expansion(sg, s, ctx);
      return Outcome{evaluation_json("shifted-double " + sign, e, cfg), {}};
    };
  });

  auto* finite = zeta->add_subcommand("finite-part", "Laurent data at s = 1/2");
  finite->add_option("--which", which, "Series")->check(CLI::IsMember({"nh", "double"}));
  finite->callback([&] {
    action = [&] {
      const ZetaNHContext ctx = make_context(cfg);
      const int d = cfg.digits;
      if (which == "nh") {
        const FinitePart fp = zeta_nh_finite_part(ctx);
        return Outcome{Json{{"command", "zeta finite-part nh"}, {"digits", d}, {"ru", to_json(fp.ru, d)}, {"rz", to_json(fp.rz, d)}}, {}};
      }
      const DoubleFinitePart fp = zeta_double_finite_part(ctx);
      return Outcome{Json{{"command", "zeta finite-part double"},
                          {"digits", d},
                          {"ru", to_json(fp.analytic.ru, d)},
                          {"rz", to_json(fp.analytic.rz, d)},
                          {"ru_fit", to_json(fp.fit.ru, d)},
                          {"rz_fit", to_json(fp.fit.rz, d)},
                          {"rz_formula_a", to_json(fp.formula_a, d, "sec-5.4.1")},
                          {"discrepancy", to_json(fp.discrepancy, d)},
                          {"fit_step", to_json(fp.step, d)}},
                     {}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    return emit(action(), cfg, out, err);
  } catch (const PrecisionExhausted& e) {
    Outcome best{Json{{"error", "precision_exhausted"}, {"detail", e.what()}, {"best", to_json(e.best(), cfg.digits)}}, {"precision_exhausted"}};
    out << render(best.report, cfg);
    err << Json{{"failures", best.failures}}.dump() << "\n";
    return kPrecisionExhausted;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace ct::cli
