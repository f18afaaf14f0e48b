#include <functional>
#include <vector>

#include "conetorsion/enclosure.hpp"
#include "conetorsion/errors.hpp"
#include "conetorsion/series.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace ct;
using namespace ct::test;

namespace {

const Precision kD60{60};

Enclosure random_enclosure(double lo, double hi, const Precision& prec) {
  const Enclosure c = Enclosure::from_decimal(std::to_string(uniform(lo, hi)), prec);
  const double rel = std::pow(10.0, uniform(-50.0, -2.0));
  Real r(kRadiusBits);
  mpfr_set_d(r.get(), rel * std::max(1e-3, std::fabs(c.center().to_double())), MPFR_RNDU);
  return Enclosure(c.center(), r);
}

// A point inside x, exact at a precision well above x's.
Real point_inside(const Enclosure& x) {
  Real p(x.bits() + 128);
  Real offset(x.bits() + 128);
  mpfr_mul_d(offset.get(), x.radius().get(), uniform(-1.0, 1.0), MPFR_RNDN);
  mpfr_add(p.get(), x.center().get(), offset.get(), MPFR_RNDN);
  if (!x.contains(p)) p = x.center().rounded(x.bits() + 128, MPFR_RNDN);
  return p;
}

using MpfrFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

}  // namespace

TEST_CASE("exact inputs stay exact where the result is representable") {
  const Enclosure one = Enclosure::from_long(1, kD60);
  const Enclosure l = log(one);
  CHECK(l.center().is_zero());
  CHECK(l.radius().is_zero());
  const Enclosure r = sqrt(Enclosure::from_long(4, kD60));
  CHECK(r.contains(Real(2, kRadiusBits)));
  CHECK(radius_below(r, "1e-60"));
}

TEST_CASE("atanh(1/(2 sqrt 2)) matches its odd power series") {
  const Enclosure x = 1L / (sqrt(Enclosure::from_long(8, kD60)));
  const Enclosure value = atanh(x);
  // atanh(x) = x Σ (x²)^k/(2k+1) with x² = 1/8, summed exactly.
  mpq_class partial(0);
  mpq_class power(1);
  for (long k = 0; k < 80; ++k) {
    partial += power / (2 * k + 1);
    power /= 8;
  }
  const Enclosure series = (x * Enclosure::from_rational(partial, kD60)).inflated(Real::power_of_two(-235));
  CHECK(value.overlaps(series));
  CHECK(within(value, Enclosure::from_decimal("0.3694989719258693142296726273395666405376", kD60), "1e-39"));
  CHECK(radius_below(value, "1e-60"));
}

TEST_CASE("domain errors name the function and interval") {
  const Enclosure straddle = Enclosure::from_bounds(Real(-1, 64), Real(1, 64), kD60.bits());
  CHECK_THROWS_AS(log(straddle), DomainError);
  CHECK_THROWS_AS(sqrt(Enclosure::from_long(0, kD60)), DomainError);
  CHECK_THROWS_AS(atanh(Enclosure::from_long(1, kD60)), DomainError);
  CHECK_THROWS_AS(Enclosure::from_long(1, kD60) / straddle, DomainError);
  try {
    (void)log(straddle);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("log") != std::string::npos);
    CHECK(std::string(e.what()).find("domain-error") != std::string::npos);
    CHECK(e.function() == "log");
  }
}

TEST_CASE("inclusion property under random sampling") {
  struct Case {
    ElementaryFn f;
    MpfrFn ref;
    double lo;
    double hi;
  };
  const std::vector<Case> cases = {
      {ElementaryFn::exp, mpfr_exp, -20, 20},    {ElementaryFn::log, mpfr_log, 1e-3, 1e3},  {ElementaryFn::sqrt, mpfr_sqrt, 1e-3, 1e3},
      {ElementaryFn::atanh, mpfr_atanh, -0.9, 0.9}, {ElementaryFn::sinh, mpfr_sinh, -10, 10}, {ElementaryFn::cosh, mpfr_cosh, -10, 10},
      {ElementaryFn::log1p, mpfr_log1p, -0.9, 10},
  };
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Case& c = cases[trial % cases.size()];
    const Enclosure x = random_enclosure(c.lo, c.hi, kD60);
    const Real p = point_inside(x);
    const Enclosure fx = enclose_fn(c.f, x);
    const Enclosure fp = oracle([&](mpfr_ptr out, mpfr_rnd_t rnd) { c.ref(out, p.get(), rnd); }, p.bits());
    if (!fx.contains(fp.lower()) || !fx.contains(fp.upper())) ++failures;
  }
  CHECK(failures == 0);

  int arith_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Enclosure a = random_enclosure(-50, 50, kD60);
    const Enclosure b = random_enclosure(0.5, 50, kD60);
    const Real pa = point_inside(a);
    const Real pb = point_inside(b);
    const mpfr_prec_t bits = pa.bits() + 64;
    using Bin = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    const Bin ops[] = {mpfr_add, mpfr_sub, mpfr_mul, mpfr_div};
    const Enclosure results[] = {a + b, a - b, a * b, a / b};
    for (int i = 0; i < 4; ++i) {
      const Enclosure ref = oracle([&](mpfr_ptr out, mpfr_rnd_t rnd) { ops[i](out, pa.get(), pb.get(), rnd); }, bits);
      if (!results[i].contains(ref)) ++arith_failures;
    }
  }
  CHECK(arith_failures == 0);
}

TEST_CASE("serialization is deterministic and round-trips at D-2 digits") {
  const Enclosure x = exp(Enclosure::pi(kD60)) / Enclosure::from_long(7, kD60);
  CHECK(x.to_string(60) == (exp(Enclosure::pi(kD60)) / Enclosure::from_long(7, kD60)).to_string(60));
  for (int trial = 0; trial < 200; ++trial) {
    const Enclosure y = random_enclosure(-1e6, 1e6, kD60);
    const auto [center, radius] = y.decimal_parts(60);
    const Enclosure back = Enclosure::from_decimal(center, kD60);
    CHECK(back.decimal_parts(58).first == y.decimal_parts(58).first);
    CHECK(y.to_string(12).find(" ± ") != std::string::npos);
  }
}

TEST_CASE("printed radius covers the decimal rounding of the center") {
  const Enclosure third = Enclosure::from_ratio(1, 3, kD60);
  const auto [center, radius] = third.decimal_parts(12);
  CHECK(center == "3.33333333333e-01");
  const Enclosure printed(Enclosure::from_decimal(center, Precision{80}).center(), Enclosure::from_decimal(radius, Precision{20}).upper());
  CHECK(printed.contains(third));
}

TEST_CASE("precision escalation nests") {
  const Precision d40{40};
  const Precision d80{80};
  auto compute = [](const Precision& p) { return atanh(sqrt(Enclosure::from_ratio(1, 8, p))) * log(Enclosure::pi(p)) - exp(Enclosure::from_ratio(-7, 3, p)); };
  const Enclosure a = compute(d40);
  const Enclosure b = compute(kD60);
  const Enclosure c = compute(d80);
  CHECK(a.overlaps(b));
  CHECK(b.overlaps(c));
  CHECK(a.contains(c));
}

TEST_CASE("hull and intersect") {
  const Enclosure a = Enclosure::from_bounds(Real(1, 64), Real(3, 64), kD60.bits());
  const Enclosure b = Enclosure::from_bounds(Real(2, 64), Real(5, 64), kD60.bits());
  const Enclosure h = hull(a, b);
  CHECK(h.contains(a));
  CHECK(h.contains(b));
  const Enclosure i = intersect(a, b);
  CHECK(i.contains(Real(2, 64)));
  CHECK(i.contains(Real(3, 64)));
  CHECK_FALSE(i.contains(Real(1, 64)));
  CHECK_THROWS_AS(intersect(a, Enclosure::from_long(10, kD60)), std::logic_error);
}

TEST_CASE("pow, square and abs") {
  const Enclosure x = Enclosure::from_ratio(-3, 2, kD60);
  CHECK(pow(x, 3).contains(Enclosure::from_ratio(-27, 8, kD60)));
  CHECK(pow(x, -2).contains(Enclosure::from_ratio(4, 9, kD60)));
  CHECK(pow(x, 0).contains(Enclosure::from_long(1, kD60)));
  CHECK(square(x).contains(Enclosure::from_ratio(9, 4, kD60)));
  CHECK(abs(x).contains(Enclosure::from_ratio(3, 2, kD60)));
  const Enclosure straddle = Enclosure::from_bounds(Real(-1, 64), Real(2, 64), kD60.bits());
  CHECK(square(straddle).lower().sign() >= 0);
  CHECK(pow(Enclosure::from_long(2, kD60), Enclosure::from_ratio(1, 2, kD60)).overlaps(sqrt(Enclosure::from_long(2, kD60))));
}

TEST_CASE("sum_series: geometric, empty and exhausted") {
  SeriesSpec geometric;
  geometric.start = 1;
  geometric.term = [](long k) { return ldexp(Enclosure::from_long(1, kD60), -k); };
  geometric.tail_bound = [](long n) { return Real::power_of_two(1 - n); };
  geometric.target_radius = Real::power_of_two(-190);
  const Enclosure g = sum_series(geometric, kD60);
  CHECK(g.contains(Real(1, 64)));
  CHECK(radius_below(g, "1e-50"));

  SeriesSpec empty;
  empty.start = 5;
  empty.max_index = 4;
  empty.term = [](long) { return Enclosure::from_long(1, kD60); };
  empty.tail_bound = [](long) { return Real(kRadiusBits); };
  const Enclosure e = sum_series(empty, kD60);
  CHECK(e.center().is_zero());
  CHECK(e.radius().is_zero());

  SeriesSpec slow = geometric;
  slow.max_index = 20;
  CHECK_THROWS_AS(sum_series(slow, kD60), PrecisionExhausted);
  try {
    (void)sum_series(slow, kD60);
  } catch (const PrecisionExhausted& ex) {
    CHECK(ex.best().contains(Real(1, 64)));
  }
}
