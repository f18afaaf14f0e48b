#include <cmath>

#include "conetorsion/errors.hpp"
#include "conetorsion/special.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace ct;
using namespace ct::test;

namespace {

const Precision kD60{60};
const mpfr_prec_t kOracleBits = 400;

Enclosure mpfr_zeta_of(long s) {
  return oracle([&](mpfr_ptr out, mpfr_rnd_t rnd) { mpfr_zeta_ui(out, s, rnd); }, kOracleBits);
}

Enclosure closed_k_half(double x_value, const Precision& prec) {
  const Enclosure x = Enclosure::from_decimal(std::to_string(x_value), prec);
  return sqrt(Enclosure::pi(prec) / (2L * x)) * exp(-x);
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
  CHECK(bernoulli(20) == mpq_class(-174611, 330));
}

TEST_CASE("riemann_zeta at classical points") {
  const Enclosure pi = Enclosure::pi(kD60);
  const Enclosure z2 = riemann_zeta(2, kD60);
  CHECK(z2.overlaps(square(pi) / 6L));
  CHECK(radius_below(z2, "1e-55"));
  CHECK(riemann_zeta(4, kD60).overlaps(pow(pi, 4) / 90L));
  const Enclosure z3 = riemann_zeta(3, kD60);
  CHECK(z3.overlaps(mpfr_zeta_of(3)));
  CHECK(within(z3, dec("1.2020569031595942853997381615114499907649862923405", kD60), "1e-48"));
}

TEST_CASE("riemann_zeta(3) against a direct-summation bracket") {
  // Σ_{n<N} n^-3 plus the integral bracket [∫_N^∞, N^-3 + ∫_N^∞] for the tail.
  const long n_max = 100000;
  Real partial(200);
  Real term(200);
  for (long n = n_max - 1; n >= 1; --n) {
    mpfr_set_ui(term.get(), n, MPFR_RNDN);
    mpfr_pow_si(term.get(), term.get(), -3, MPFR_RNDN);
    mpfr_add(partial.get(), partial.get(), term.get(), MPFR_RNDN);
  }
  const double tail_lo = 0.5 / (double(n_max) * n_max);
  const double tail_hi = tail_lo + 1.0 / (double(n_max) * n_max * n_max);
  const double lo = partial.to_double() + tail_lo;
  const double hi = partial.to_double() + tail_hi;
  const double z3 = riemann_zeta(3, kD60).center().to_double();
  CHECK(z3 >= lo - 1e-15);
  CHECK(z3 <= hi + 1e-15);
}

TEST_CASE("even zeta values match Bernoulli closed forms") {
  const Enclosure two_pi = 2L * Enclosure::pi(kD60);
  mpz_class factorial = 1;
  for (long k = 1; k <= 5; ++k) {
    factorial *= (2 * k - 1) * (2 * k);
    const long sign = (k % 2 == 1) ? 1 : -1;
    const Enclosure closed = Enclosure::from_rational(sign * bernoulli(int(2 * k)) / (2 * mpq_class(factorial)), kD60) * pow(two_pi, 2 * k);
    CHECK(riemann_zeta(2 * k, kD60).overlaps(closed));
  }
}

TEST_CASE("riemann_zeta continuation and pole") {
  CHECK(riemann_zeta(0, kD60).overlaps(Enclosure::from_ratio(-1, 2, kD60)));
  CHECK(riemann_zeta(-1, kD60).overlaps(Enclosure::from_ratio(-1, 12, kD60)));
  const Enclosure half = Enclosure::from_ratio(1, 2, kD60);
  const Enclosure ref = oracle([&](mpfr_ptr out, mpfr_rnd_t rnd) { mpfr_zeta(out, half.center().get(), rnd); }, kOracleBits);
  CHECK(riemann_zeta(half, kD60).overlaps(ref));
  CHECK(radius_below(riemann_zeta(half, kD60), "1e-55"));
  for (int trial = 0; trial < 20; ++trial) {
    const Enclosure s = dec(std::to_string(uniform(-3.0, 12.0)), kD60);
    if (s.contains(Real(1, 64))) continue;
    const Enclosure r = oracle([&](mpfr_ptr out, mpfr_rnd_t rnd) { mpfr_zeta(out, s.center().get(), rnd); }, kOracleBits);
    CHECK(riemann_zeta(s, kD60).overlaps(r));
  }
  CHECK_THROWS_AS(riemann_zeta(1, kD60), PoleError);
  const Enclosure near_one = Enclosure::from_bounds(Real(0, 64), Real(2, 64), kD60.bits());
  CHECK_THROWS_AS(riemann_zeta(near_one, kD60), PoleError);
}

TEST_CASE("interval arguments give enclosures of the whole image") {
  const Enclosure s = Enclosure::from_bounds(Real(2, 64), Real(3, 64), kD60.bits());
  const Enclosure z = riemann_zeta(s, kD60);
  CHECK(z.contains(riemann_zeta(2, kD60)));
  CHECK(z.contains(riemann_zeta(3, kD60)));
}

TEST_CASE("Dirichlet beta") {
  const Enclosure catalan = oracle([](mpfr_ptr out, mpfr_rnd_t rnd) { mpfr_const_catalan(out, rnd); }, kOracleBits);
  CHECK(dirichlet_beta(Enclosure::from_long(2, kD60), kD60).overlaps(catalan));
  CHECK(dirichlet_beta(Enclosure::from_long(3, kD60), kD60).overlaps(pow(Enclosure::pi(kD60), 3) / 32L));
  // β(0) = 1/2.
  CHECK(dirichlet_beta(Enclosure::from_long(0, kD60), kD60).overlaps(Enclosure::from_ratio(1, 2, kD60)));
  // Direct alternating partial sums bracket β(5/2).
  const Enclosure b = dirichlet_beta(Enclosure::from_ratio(5, 2, kD60), kD60);
  double even = 0.0;
  double odd = 0.0;
  for (long n = 0; n < 2001; ++n) {
    const double t = std::pow(2.0 * n + 1, -2.5) * ((n % 2 == 0) ? 1 : -1);
    (n < 2000 ? even : odd) += t;
  }
  odd += even;
  CHECK(b.center().to_double() <= odd + 1e-14);
  CHECK(b.center().to_double() >= even - 1e-14);
}

TEST_CASE("Euler gamma and log 2pi") {
  const Enclosure gamma = euler_gamma(kD60);
  const Enclosure ref = oracle([](mpfr_ptr out, mpfr_rnd_t rnd) { mpfr_const_euler(out, rnd); }, kOracleBits);
  CHECK(gamma.overlaps(ref));
  CHECK(radius_below(gamma, "1e-60"));
  CHECK(within(gamma, dec("0.5772156649015328606065120900824024310421593359399", kD60), "1e-48"));
  const SpecialConstant c = special_constant(SpecialConstantTag::log_2pi_half, kD60);
  CHECK(within(c.value, dec("0.9189385332046727417803297364056176398613974736378", kD60), "1e-48"));
  CHECK(std::string(name(SpecialConstantTag::euler_gamma)) == "euler_gamma");
  // γ at higher precision nests.
  CHECK(gamma.contains(euler_gamma(Precision{120})));
}

TEST_CASE("gamma function") {
  const Enclosure sqrt_pi = sqrt(Enclosure::pi(kD60));
  CHECK(gamma_fn(Enclosure::from_long(1, kD60), kD60).overlaps(Enclosure::from_long(1, kD60)));
  CHECK(gamma_fn(Enclosure::from_ratio(1, 2, kD60), kD60).overlaps(sqrt_pi));
  CHECK(gamma_fn(Enclosure::from_ratio(3, 2, kD60), kD60).overlaps(sqrt_pi / 2L));
  CHECK(radius_below(gamma_fn(Enclosure::from_ratio(1, 2, kD60), kD60), "1e-55"));
  CHECK_THROWS_AS(gamma_fn(Enclosure::from_long(0, kD60), kD60), DomainError);
  CHECK_THROWS_AS(gamma_fn(Enclosure::from_long(-2, kD60), kD60), DomainError);
  for (int trial = 0; trial < 100; ++trial) {
    const Enclosure x = dec(std::to_string(uniform(0.01, 10.0)), kD60);
    const Enclosure gx = gamma_fn(x, kD60);
    CHECK(gamma_fn(x + 1L, kD60).overlaps(x * gx));
    if (trial % 10 == 0) {
      const Enclosure r = oracle([&](mpfr_ptr out, mpfr_rnd_t rnd) { mpfr_gamma(out, x.center().get(), rnd); }, kOracleBits);
      CHECK(gx.overlaps(r));
    }
  }
}

TEST_CASE("gamma on negative non-integers and reciprocal gamma") {
  const Enclosure sqrt_pi = sqrt(Enclosure::pi(kD60));
  CHECK(gamma_real(Enclosure::from_ratio(-1, 2, kD60), kD60).overlaps(-2L * sqrt_pi));
  CHECK_THROWS_AS(gamma_real(Enclosure::from_long(-3, kD60), kD60), PoleError);
  CHECK(rgamma(Enclosure::from_long(0, kD60), kD60).contains(Real(0, 64)));
  CHECK(rgamma(Enclosure::from_long(-2, kD60), kD60).contains(Real(0, 64)));
  CHECK(radius_below(rgamma(Enclosure::from_long(-2, kD60), kD60), "1e-55"));
  CHECK(rgamma(Enclosure::from_ratio(1, 2, kD60), kD60).overlaps(1L / sqrt_pi));
  // 1/Γ(s) ≈ s near 0.
  const Enclosure tiny = dec("1e-20", kD60);
  CHECK(within(rgamma(tiny, kD60), tiny, "1e-39"));
}

TEST_CASE("digamma at integers") {
  const Enclosure gamma = euler_gamma(kD60);
  CHECK(digamma_int(1, kD60).overlaps(-gamma));
  CHECK(digamma_int(2, kD60).overlaps(1L - gamma));
  CHECK(digamma_int(4, kD60).overlaps(Enclosure::from_ratio(11, 6, kD60) - gamma));
  CHECK_THROWS_AS(digamma_int(0, kD60), DomainError);
}

TEST_CASE("bessel_k closed forms and reference values") {
  const Enclosure half = Enclosure::from_ratio(1, 2, kD60);
  const Enclosure two = Enclosure::from_long(2, kD60);
  const Enclosure k_half = bessel_k(half, two, kD60);
  CHECK(k_half.overlaps(sqrt(Enclosure::pi(kD60) / 4L) * exp(-two)));
  CHECK(within(k_half, dec("0.1199377719680614473680365016367935162195", kD60), "1e-39"));
  CHECK(radius_below(k_half, "1e-55"));
  // K_{3/2}(x) = √(π/2x) e^{-x} (1 + 1/x).
  const Enclosure x = dec("3.7", kD60);
  const Enclosure k32 = bessel_k(Enclosure::from_ratio(3, 2, kD60), x, kD60);
  CHECK(k32.overlaps(sqrt(Enclosure::pi(kD60) / (2L * x)) * exp(-x) * (1L + 1L / x)));
  const Enclosure k0_1 = bessel_k(Enclosure::from_long(0, kD60), Enclosure::from_long(1, kD60), kD60);
  CHECK(within(k0_1, dec("0.4210244382407083333356273792126090361362", kD60), "1e-39"));
  CHECK(within(bessel_k(dec("0.3", kD60), two, kD60), dec("0.1160369743481192585215329406182061658676", kD60), "1e-39"));
}

TEST_CASE("bessel_k recurrence K_{ν+1} = K_{ν-1} + (2ν/x) K_ν") {
  for (int trial = 0; trial < 10; ++trial) {
    const Enclosure nu = dec(std::to_string(uniform(0.05, 2.0)), kD60);
    const Enclosure x = dec(std::to_string(uniform(0.3, 25.0)), kD60);
    const Enclosure lhs = bessel_k(nu + 1L, x, kD60);
    const Enclosure rhs = bessel_k(nu - 1L, x, kD60) + 2L * nu / x * bessel_k(nu, x, kD60);
    CHECK(lhs.overlaps(rhs));
  }
}

TEST_CASE("bessel_k bound, monotonicity and argument domain") {
  const Enclosure zero = Enclosure::from_long(0, kD60);
  const Enclosure x_dom = 2L * Enclosure::pi(kD60) * sqrt(Enclosure::from_ratio(5, 4, kD60));
  const Enclosure k = bessel_k(zero, x_dom, kD60);
  CHECK(k.certainly_positive());
  CHECK(within(k, dec("0.0004136747414564733841979461515575011448283", kD60), "1e-40"));
  CHECK(k.upper() < (sqrt(Enclosure::pi(kD60) / (2L * x_dom)) * exp(-x_dom)).lower());
  const Enclosure k10 = bessel_k(zero, Enclosure::from_long(10, kD60), kD60);
  const Enclosure k11 = bessel_k(zero, Enclosure::from_long(11, kD60), kD60);
  CHECK(k10.lower() > k11.upper());
  for (int trial = 0; trial < 50; ++trial) {
    const Enclosure z = dec(std::to_string(uniform(0.5, 20.0)), kD60);
    const Enclosure envelope = sqrt(Enclosure::pi(kD60) / (2L * z)) * exp(-z);
    CHECK(bessel_k(zero, z, kD60).upper() < envelope.lower());
  }
  CHECK_THROWS_AS(bessel_k(zero, zero, kD60), DomainError);
  CHECK_THROWS_AS(bessel_k(zero, Enclosure::from_long(-1, kD60), kD60), DomainError);
}

TEST_CASE("double factorial") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(7) == 105);
  CHECK_THROWS_AS(double_factorial(4), DomainError);
  CHECK_THROWS_AS(double_factorial(-3), DomainError);
}

TEST_CASE("log-gamma generating series") {
  for (const auto& [num, den] : {std::pair{1L, 2L}, std::pair{1L, 4L}}) {
    const Enclosure z = Enclosure::from_ratio(num, den, kD60);
    const Enclosure series = log_gamma_series(z, kD60);
    const Enclosure closed = log_gamma_series_closed(z, kD60);
    CHECK(within(series, closed, "1e-40"));
  }
  const Enclosure closed_half = -(euler_gamma(kD60) / 2L) - log(gamma_fn(Enclosure::from_ratio(3, 2, kD60), kD60));
  CHECK(log_gamma_series(Enclosure::from_ratio(1, 2, kD60), kD60).overlaps(closed_half));
  const Enclosure tiny = dec("1e-10", kD60);
  const Enclosure s = log_gamma_series(tiny, kD60);
  CHECK(s.magnitude() <= (square(tiny) * riemann_zeta(2, kD60)).upper());
  CHECK_THROWS_AS(log_gamma_series(Enclosure::from_long(1, kD60), kD60), DomainError);
}

TEST_CASE("binomial Taylor data") {
  for (long j = 1; j <= 12; ++j) {
    const BinomialTaylor t = binomial_taylor(j, kD60);
    CHECK(t.linear_coeff == mpq_class((j % 2 == 0) ? 1 : -1, j));
    if (j > 1) CHECK(digamma_int(j, kD60).overlaps(digamma_int(j - 1, kD60) + Enclosure::from_ratio(1, j - 1, kD60)));
    const Enclosure s = dec("1e-12", kD60);
    const Enclosure exact = binomial_real(-s, j, kD60);
    const Enclosure model = Enclosure::from_rational(t.linear_coeff, kD60) * s + t.quadratic_coeff * square(s);
    CHECK(within(exact, model, "1e-34"));
  }
  CHECK(binomial_rational(mpq_class(-1, 2), 3) == mpq_class(-5, 16));
  CHECK(binomial_rational(mpq_class(5), 2) == 10);
}
