// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "conetorsion/certify.hpp"
#include "conetorsion/sphere.hpp"
#include "conetorsion/torus.hpp"
#include "conetorsion/zeta_lattice.hpp"

using namespace ct;

namespace {

// Pinned tolerances and budgets.
constexpr int kDigits = 60;
constexpr int kMethodDigits = 40;
constexpr const char* kSphereRadius = "1e-30";
constexpr double kSphereSeconds = 10.0;
constexpr const char* kReductionRadius = "1e-25";
constexpr long kReductionTerms = 64;
constexpr long kIdentityMaxP = 6;
constexpr const char* kSpecialRadius = "1e-30";
constexpr const char* kResidualBound = "1e-30";
constexpr const char* kTorusRadius = "1e-6";
constexpr double kTorusSeconds = 60.0;
constexpr long kFdFactor = 10;
const std::vector<int> kNestingDigits{40, 60, 80};

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Timer {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Real bound(const char* text) { return Enclosure::from_decimal(text, Precision{30}).lower(); }

bool radius_at_most(const Enclosure& x, const char* text) { return x.radius() <= bound(text); }

std::string show(const Enclosure& x) { return x.to_string(15); }

ZetaNHContext context(int digits, ContinuationMethod method = ContinuationMethod::automatic) {
  ZetaNHContext ctx;
  ctx.prec = Precision{digits};
  ctx.method = method;
  return ctx;
}

Enclosure combined_radius(const Enclosure& a, const Enclosure& b) {
  return Enclosure::from_bounds(a.radius(), a.radius(), 64) + Enclosure::from_bounds(b.radius(), b.radius(), 64);
}

void fail(Outcome& o, const std::string& why) {
  o.pass = false;
  o.detail += (o.detail.empty() ? "" : "; ") + why;
}

void note(Outcome& o, const std::string& what) { o.detail += (o.detail.empty() ? "" : "; ") + what; }

Outcome sphere_cancellation() {
  Outcome o;
  const Precision prec{kDigits};
  Timer t;
  for (long p = 1; p <= 8; ++p) {
    const SphereAnomalyReport r = cancellation_check(p, prec);
    if (!r.total.contains_zero()) fail(o, "p=" + std::to_string(p) + " total excludes 0: " + show(r.total));
    if (!radius_at_most(r.total, kSphereRadius)) fail(o, "p=" + std::to_string(p) + " radius too large");
  }
  const double secs = t.seconds();
  if (secs > kSphereSeconds) fail(o, "took " + std::to_string(secs) + " s");
  note(o, "p=1..8 in " + std::to_string(secs) + " s");
  return o;
}

Outcome sphere_reduction() {
  Outcome o;
  const Precision prec{kDigits};
  bool corrected_all = true;
  for (long p = 1; p <= 3; ++p) {
    for (long s : {2 * p + 2, 2 * p + 4}) {
      const ReductionCheck c = check_reduction(p, Enclosure::from_long(s, prec), prec, kReductionTerms);
      const std::string at = "p=" + std::to_string(p) + ",s=" + std::to_string(s);
      if (!radius_at_most(combined_radius(c.brute, c.as_stated), kReductionRadius)) fail(o, at + " radius too large");
      if (!c.holds_as_stated) fail(o, at + " brute " + show(c.brute) + " vs reduced " + show(c.as_stated));
      if (!c.holds_corrected) corrected_all = false;
    }
  }
  for (long p = 1; p <= kIdentityMaxP; ++p) {
    const SphereIdentities id = sphere_identities(p);
    const std::string at = "p=" + std::to_string(p);
    if (!id.moments_vanish) fail(o, at + " alternating moments nonzero");
    if (!id.mu_completes_square || !id.mu_shifts) fail(o, at + " mu identity");
    if (!id.alpha_top_sum_is_2p) fail(o, at + " alpha-weighted top sum is " + id.alpha_top_sum.get_str() + ", not " + std::to_string(2 * p));
  }
  if (corrected_all) note(o, "the form -2p zeta_R(s) - sum odd^{-s} matches every brute sum");
  return o;
}

Outcome special_values() {
  Outcome o;
  const ZetaNHContext ctx = context(kDigits);
  const Enclosure at_zero = zeta_nh(Enclosure::from_long(0, ctx.prec), ctx).value;
  if (!at_zero.contains(Enclosure::from_ratio(-1, 2, ctx.prec).center())) fail(o, "zeta(0) = " + show(at_zero));
  if (!radius_at_most(at_zero, kSpecialRadius)) fail(o, "zeta(0) radius too large");
  const Enclosure deriv = zeta_nh_deriv_at_zero(ctx);
  const Enclosure closed = zeta_nh_deriv_at_zero_closed(ctx.prec);
  if (!deriv.overlaps(closed)) fail(o, "zeta'(0) = " + show(deriv) + " vs " + show(closed));
  if (!radius_at_most(deriv, kSpecialRadius)) fail(o, "zeta'(0) radius too large");
  note(o, "zeta'(0) = " + show(deriv));
  return o;
}

Outcome closed_sums() {
  Outcome o;
  const Precision prec{kDigits};
  for (const BoundCertificate& c : certify_closed_sums(prec)) {
    const bool small = c.computed.magnitude() <= bound(kResidualBound);
    if (!small || !c.readings.front().holds) {
      std::string why = c.claim + ": residual " + show(c.computed);
      for (std::size_t i = 1; i < c.readings.size(); ++i) {
        if (c.readings[i].holds) why += " (" + c.readings[i].name + " reading holds)";
      }
      fail(o, why);
    }
  }
  return o;
}

Outcome certificates() {
  Outcome o;
  const ZetaNHContext ctx = context(kDigits);
  const BoundCertificate p31 = certify_prop_3_1(ctx.prec);
  if (p31.verdict != Verdict::holds_as_stated) fail(o, "prop 3.1 verdict " + std::string(name(p31.verdict)));
  if (!p31.computed.certainly_negative()) fail(o, "S1 not certainly negative");
  for (const BoundCertificate& c : {certify_prop_3_2(ctx), certify_prop_3_3(ctx), certify_rz_sandwich(ctx)}) {
    const bool has_as_stated = !c.readings.empty() && c.readings.front().name == "as_stated";
    const bool has_corrected = c.readings.size() >= 2;
    if (!has_as_stated || !has_corrected) fail(o, c.paper_ref + " lacks an as-stated or corrected reading");
    if (c.verdict == Verdict::fails) fail(o, c.paper_ref + " fails in every reading");
    note(o, c.paper_ref + ": " + name(c.verdict));
  }
  return o;
}

Outcome bessel_bound() {
  Outcome o;
  const ZetaNHContext ctx = context(kDigits);
  const Enclosure sum = bessel_lattice_sum(ctx);
  const Enclosure limit = torus_bounds(ctx.prec).bessel_bound;
  if (!sum.certainly_positive()) fail(o, "sum not positive");
  if (!(sum.upper() < limit.lower())) fail(o, "sum " + show(sum) + " not below " + show(limit));
  note(o, "sum " + show(sum) + " < " + show(limit));
  return o;
}

Outcome torus_headline() {
  Outcome o;
  const ZetaNHContext ctx = context(kDigits);
  Timer t;
  const TorusAnomalyReport r = total_anomaly_torus(ctx);
  const double secs = t.seconds();
  if (!r.verdicts.negative) fail(o, "total " + show(r.total) + " is not negative");
  if (!r.verdicts.in_window) fail(o, "total outside (-4/5, -1/4)");
  if (!r.verdicts.in_ab) fail(o, "total outside [A - ln 2pi, B - ln 2pi]");
  if (!radius_at_most(r.total, kTorusRadius)) fail(o, "radius too large");
  if (secs > kTorusSeconds) fail(o, "took " + std::to_string(secs) + " s");
  note(o, std::to_string(secs) + " s");
  return o;
}

Outcome method_independence() {
  Outcome o;
  const ZetaNHContext binomial = context(kMethodDigits, ContinuationMethod::binomial_in_zetaR);
  const ZetaNHContext bessel = context(kMethodDigits, ContinuationMethod::bessel_poisson);
  const Precision& prec = binomial.prec;
  int points = 0;
  for (const char* text : {"-1.2", "-0.7", "-0.25", "0", "0.1", "0.3", "0.75", "1.3", "2.5", "4"}) {
    const Enclosure s = Enclosure::from_decimal(text, prec);
    const Enclosure a = zeta_nh(s, binomial).value;
    const Enclosure b = zeta_nh(s, bessel).value;
    if (!a.overlaps(b)) fail(o, std::string("zeta_nh at ") + text + ": " + show(a) + " vs " + show(b));
    ++points;
  }
  for (const char* text : {"0.05", "0.3", "0.75", "0.9"}) {
    const Enclosure s = Enclosure::from_decimal(text, prec);
    const Enclosure a = zeta_double_continued(s, binomial).value;
    const Enclosure b = zeta_double_continued(s, bessel).value;
    if (!a.overlaps(b)) fail(o, std::string("zeta_double at ") + text + ": " + show(a) + " vs " + show(b));
    ++points;
  }
  const ZetaNHContext ctx = context(kMethodDigits);
  const Enclosure z2 = z2_at_zero(ctx).value;
  const Enclosure fd = z2_finite_difference(ctx);
  if (!((z2 - fd).magnitude() <= (kFdFactor * combined_radius(z2, fd)).upper())) fail(o, "Z2 " + show(z2) + " vs finite difference " + show(fd));
  note(o, std::to_string(points) + " points, Z2 oracle " + show(fd));
  return o;
}

std::string cli_output(std::vector<std::string> args) {
  args.insert(args.begin(), "conetorsion");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Outcome determinism_and_nesting() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands{
      {"sphere", "--p", "3", "--identities", "--oracle-s", "8"}, {"torus"}, {"certify-bounds"}, {"constants"}};
  for (const auto& cmd : commands) {
    std::vector<std::string> args{"--digits", "40"};
    args.insert(args.end(), cmd.begin(), cmd.end());
    if (cli_output(args) != cli_output(args)) fail(o, cmd.front() + " output differs between runs");
  }

  using Probe = std::function<std::vector<Enclosure>(int)>;
  const std::vector<std::pair<std::string, Probe>> probes{
      {"sphere", [](int d) {
         std::vector<Enclosure> v;
         for (long p = 1; p <= 4; ++p) {
           const SphereAnomalyReport r = cancellation_check(p, Precision{d});
           v.push_back(r.comb);
           v.push_back(r.analy);
           v.push_back(r.total);
         }
         return v;
       }},
      {"torus", [](int d) {
         const TorusAnomalyReport r = total_anomaly_torus(context(d));
         return std::vector<Enclosure>{r.z1.value, r.z2.value, r.analy, r.total, r.bounds.a, r.bounds.b};
       }},
      {"certificates", [](int d) {
         std::vector<Enclosure> v;
         for (const auto& c : certify_all(context(d))) v.push_back(c.computed);
         return v;
       }},
      {"zeta", [](int d) {
         const ZetaNHContext ctx = context(d);
         return std::vector<Enclosure>{zeta_nh_deriv_at_zero(ctx), zeta_nh(Enclosure::from_decimal("0.3", ctx.prec), ctx).value,
                                       zeta_double_continued(Enclosure::from_decimal("0.3", ctx.prec), ctx).value};
       }},
  };
  for (const auto& [label, probe] : probes) {
    std::vector<Enclosure> previous;
    for (int d : kNestingDigits) {
      const std::vector<Enclosure> current = probe(d);
      for (std::size_t i = 0; i < previous.size(); ++i) {
        if (!previous[i].contains(current[i])) fail(o, label + "[" + std::to_string(i) + "] at D=" + std::to_string(d) + " escapes the coarser enclosure");
      }
      previous = current;
    }
  }
  note(o, "4 reports rerun, " + std::to_string(probes.size()) + " probe families nested");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"sphere cancellation p=1..8", sphere_cancellation},
      {"sphere reduction oracle and exact identities", sphere_reduction},
      {"special values of the non-homogeneous zeta at 0", special_values},
      {"closed odd-zeta sums", closed_sums},
      {"series bound certificates", certificates},
      {"Bessel lattice sum bound", bessel_bound},
      {"torus total anomaly is negative and bracketed", torus_headline},
      {"continuation method independence", method_independence},
      {"determinism and nesting D=40,60,80", determinism_and_nesting},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %zu %s: %s -- %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
