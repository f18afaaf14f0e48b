#include <doctest.h>

#include "conetorsion/errors.hpp"
#include "conetorsion/special.hpp"
#include "conetorsion/torus.hpp"
#include "test_support.hpp"

using namespace ct;
using ct::test::dec;
using ct::test::radius_below;
using ct::test::within;

namespace {

ZetaNHContext context(int digits) {
  ZetaNHContext ctx;
  ctx.prec = Precision{digits};
  return ctx;
}

// Independent 50-digit values (nsum over the binomial series).
constexpr const char* kZ1 = "1.5952548409623249584808185976752867181001025621293";
constexpr const char* kZ2 = "-0.53138778030075653308543613265268913072365003029269";
constexpr const char* kAnaly = "2.1277341213231368507907649300451951747529050636733";
constexpr const char* kTotal = "0.28985705491379136723010545723395989503011011639773";
constexpr const char* kZ1FormulaA = "1.1480423388330459787661316016345031148305222035674";
constexpr const char* kTotalFormulaA = "-0.60456794934476659219926853484760731150905060072617";
constexpr const char* kA = "1.0501207505227725257540918629";
constexpr const char* kB = "1.53410175859267250388363120583";
constexpr const char* kBesselBound = "0.00254286647916910126459604600106";

Enclosure combined_radius(const Enclosure& a, const Enclosure& b) {
  return Enclosure::from_bounds(a.radius(), a.radius(), 64) + Enclosure::from_bounds(b.radius(), b.radius(), 64);
}

}  // namespace

TEST_CASE("torus combinatorial term") {
  const Precision prec{40};
  const Enclosure comb = comb_anomaly_torus(prec);
  CHECK(within(comb, dec("-1.8378770664093454835606594728112352797", prec), "1e-36"));
  CHECK(within(comb, -Enclosure::log2(prec) - log(Enclosure::pi(prec)), "1e-38"));
  CHECK(comb.certainly_negative());
}

TEST_CASE("torus bound constants") {
  const Precision prec{40};
  const TorusBounds b = torus_bounds(prec);
  CHECK(within(b.a, dec(kA, prec), "1e-28"));
  CHECK(within(b.b, dec(kB, prec), "1e-28"));
  CHECK(within(b.bessel_bound, dec(kBesselBound, prec), "1e-30"));
  // The interval [A, B] is not twice the sum of the individual sandwiches.
  CHECK_FALSE(b.a_collected.overlaps(b.a));
  CHECK_FALSE(b.b_collected.overlaps(b.b));
  CHECK(b.z1_lower.upper() < b.z1_upper.lower());
  CHECK(b.z2_lower.upper() < b.z2_upper.lower());
}

TEST_CASE("Z2 at zero") {
  const auto ctx = context(40);
  const Z2Evaluation z2 = z2_at_zero(ctx);
  CHECK(within(z2.value, dec(kZ2, ctx.prec), "1e-30"));
  CHECK(z2.value.certainly_negative());
  REQUIRE(z2.sandwich.readings.size() == 2);
  CHECK(z2.sandwich.readings[0].holds);
  CHECK(z2.sandwich.readings[1].holds);
  CHECK(z2.sandwich.verdict == Verdict::holds_as_stated);
}

TEST_CASE("Z1 at zero") {
  const auto ctx = context(40);
  const Z1Evaluation z1 = z1_at_zero(ctx);
  CHECK(within(z1.value, dec(kZ1, ctx.prec), "1e-30"));
  CHECK(z1.rz.overlaps(z1.rz_fit));
  CHECK(z1.bessel_within_bound);
  CHECK(within(z1.value_formula_a, dec(kZ1FormulaA, ctx.prec), "1e-30"));
  // The trusted value lies above both readings; the displayed formula's value
  // fits once c5 is doubled.
  CHECK(z1.sandwich.verdict == Verdict::fails);
  CHECK(z1.value.lower() > z1.sandwich.readings[0].upper.upper());
  CHECK(z1.sandwich_formula_a.verdict == Verdict::holds_factor_corrected);
}

TEST_CASE("torus report") {
  const auto ctx = context(40);
  const TorusAnomalyReport r = total_anomaly_torus(ctx);
  CHECK(within(r.analy, dec(kAnaly, ctx.prec), "1e-29"));
  CHECK(within(r.total, dec(kTotal, ctx.prec), "1e-29"));
  CHECK(within(r.analy, ldexp(r.z1.value + r.z2.value, 1), "1e-35"));
  CHECK(within(r.total, r.comb + r.analy, "1e-35"));
  CHECK(radius_below(r.total, "1e-6"));
  // The computed total is positive, so every headline verdict fails.
  CHECK(r.total.certainly_positive());
  CHECK_FALSE(r.verdicts.negative);
  CHECK_FALSE(r.verdicts.in_window);
  CHECK_FALSE(r.verdicts.in_ab);
  CHECK_FALSE(r.analy_in_ab);
  CHECK(within(r.total_formula_a, dec(kTotalFormulaA, ctx.prec), "1e-29"));
  CHECK(r.verdicts_formula_a.negative);
  CHECK(r.verdicts_formula_a.in_window);
  CHECK(r.verdicts_formula_a.in_ab);
  CHECK_FALSE(r.z1_fd.has_value());
}

TEST_CASE("finite-difference oracles reproduce Z1 and Z2") {
  const auto ctx = context(30);
  const Enclosure z2 = z2_at_zero(ctx).value;
  const Enclosure z2_fd = z2_finite_difference(ctx);
  CHECK((z2 - z2_fd).magnitude() <= (10L * combined_radius(z2, z2_fd)).upper());
  CHECK(radius_below(z2_fd, "1e-20"));

  const Enclosure z1 = z1_at_zero(ctx).value;
  const Enclosure z1_fd = z1_finite_difference(ctx);
  CHECK(z1.overlaps(z1_fd));
  CHECK(radius_below(z1_fd, "1e-20"));
}

TEST_CASE("raw co-exact spectrum splits into single and double shifted series") {
  const auto ctx = context(25);
  for (int sign : {1, -1}) {
    for (long s : {3L, 4L}) {
      const DecompositionCheck d = check_decomposition(sign, Enclosure::from_long(s, ctx.prec), ctx, 150);
      CAPTURE(sign);
      CAPTURE(s);
      CHECK(d.holds);
      CHECK(radius_below(d.raw, s == 3 ? "5e-2" : "1e-3"));
    }
  }
  CHECK_THROWS_AS(check_decomposition(1, dec("2", ctx.prec), ctx), DomainError);
  CHECK_THROWS_AS(check_decomposition(0, dec("3", ctx.prec), ctx), DomainError);
}

TEST_CASE("torus total nests under precision escalation") {
  const Enclosure t30 = total_anomaly_torus(context(30)).total;
  const Enclosure t45 = total_anomaly_torus(context(45)).total;
  CHECK(t30.contains(t45));
  CHECK(t30.certainly_positive());
  CHECK(t45.certainly_positive());
}
