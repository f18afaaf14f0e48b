#include "conetorsion/special.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <string>

#include "conetorsion/errors.hpp"

namespace ct {
namespace {

// Precision used for rigorous error-bound arithmetic.
const Precision kBoundPrec{20};

Enclosure exact(long v, const Precision& prec) { return Enclosure::from_long(v, prec); }
Enclosure rational(const mpq_class& q, const Precision& prec) { return Enclosure::from_rational(q, prec); }

Enclosure bound_of(const Real& r) { return Enclosure(r.rounded(kBoundPrec.bits(), MPFR_RNDU), Real(kRadiusBits)); }

double lower_double(const Enclosure& x) { return mpfr_get_d(x.lower().get(), MPFR_RNDD); }
double upper_double(const Enclosure& x) { return mpfr_get_d(x.upper().get(), MPFR_RNDU); }

std::string interval_text(const Enclosure& x) { return "[" + to_decimal(x.lower(), 17, MPFR_RNDD) + ", " + to_decimal(x.upper(), 17, MPFR_RNDU) + "]"; }

std::string memo_key(const Enclosure& s, const Precision& prec) {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%Ra", s.center().get());
  std::string key = std::to_string(prec.bits()) + "@" + buffer;
  mpfr_free_str(buffer);
  return key;
}

// Write-once memo table for point evaluations.
class PointMemo {
 public:
  template <class Compute>
  Enclosure get(const std::string& key, Compute compute) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Enclosure value = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.emplace(key, value).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::string, Enclosure> table_;
};

PointMemo& zeta_memo() {
  static PointMemo memo;
  return memo;
}

PointMemo& beta_memo() {
  static PointMemo memo;
  return memo;
}

PointMemo& constant_memo() {
  static PointMemo memo;
  return memo;
}

bool is_exact_integer(const Enclosure& s, long* value) {
  if (!s.is_exact() || !mpfr_integer_p(s.center().get()) || !mpfr_fits_slong_p(s.center().get(), MPFR_RNDN)) return false;
  *value = mpfr_get_si(s.center().get(), MPFR_RNDN);
  return true;
}

// x^{-s} for x > 0.
Enclosure inverse_power(const Enclosure& x, const Enclosure& s) {
  long k = 0;
  if (is_exact_integer(s, &k) && k > 0 && k < 4096) return 1L / pow(x, k);
  return exp(-(s * log(x)));
}

}  // namespace

const mpq_class& bernoulli(int n) {
  static std::mutex mutex;
  static std::deque<mpq_class> table{mpq_class(1)};
  if (n < 0) throw DomainError("bernoulli", "index must be non-negative, got " + std::to_string(n));
  std::lock_guard<std::mutex> lock(mutex);
  // Σ_{k=0}^{m} C(m+1, k) B_k = 0.
  while (static_cast<int>(table.size()) <= n) {
    const long m = static_cast<long>(table.size());
    mpq_class acc(0);
    mpz_class binom(1);
    for (long k = 0; k < m; ++k) {
      acc += binom * table[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    mpq_class next = -acc / mpq_class(m + 1);
    next.canonicalize();
    table.push_back(next);
  }
  return table[n];
}

Enclosure hurwitz_zeta(const Enclosure& s, const mpq_class& a, const Precision& prec) {
  if (sgn(a) <= 0) throw DomainError("hurwitz_zeta", "shift a must be positive");
  if (s.contains(Real(1, kRadiusBits))) throw PoleError("hurwitz_zeta", "s interval " + interval_text(s) + " contains the pole at 1");

  const mpfr_prec_t bits = prec.bits();
  const double a_double = a.get_d();
  // Absolute target scaled by the leading term a^{-s}.
  const double lead_log2 = -upper_double(s) * std::log2(a_double);
  Real target = Real::power_of_two(-static_cast<long>(bits) + 8 + static_cast<long>(std::max(0.0, std::ceil(lead_log2))));

  long n_terms = std::max<long>(10, bits / 4);
  const Enclosure s_mag = bound_of(s.magnitude());
  const Enclosure s_low = Enclosure(s.lower().rounded(kBoundPrec.bits(), MPFR_RNDD), Real(kRadiusBits));
  while (true) {
    // Smallest K whose remainder bound meets the target.
    const Enclosure base = rational(mpq_class(n_terms) + a, kBoundPrec);
    const Enclosure base_low = Enclosure(base.lower(), Real(kRadiusBits));
    Enclosure poch = exact(1, kBoundPrec);  // Π_{i<2K} (|s| + i) ≥ |(s)_{2K}|
    Enclosure fact = exact(1, kBoundPrec);  // (2K)!
    long chosen = -1;
    Real chosen_bound;
    const long k_max = 3 * n_terms + 20;
    for (long k = 1; k <= k_max; ++k) {
      poch = poch * (s_mag + (2 * k - 2)) * (s_mag + (2 * k - 1));
      fact = fact * (2 * k - 1) * (2 * k);
      const Enclosure denom = s_low + (2 * k - 1);
      if (!denom.certainly_positive()) continue;
      const Enclosure b2k = abs(rational(bernoulli(static_cast<int>(2 * k)), kBoundPrec));
      const Enclosure decay = exp(-(s_low + (2 * k - 1)) * log(base_low));
      const Real bound = (b2k / fact * poch * decay / denom).upper();
      if (bound <= target) {
        chosen = k;
        chosen_bound = bound;
        break;
      }
    }
    if (chosen < 0) {
      if (n_terms > (1L << 22)) throw PrecisionExhausted("hurwitz_zeta: no admissible truncation", Enclosure(Real(bits), Real::infinity()));
      n_terms *= 2;
      continue;
    }

    Enclosure sum = exact(0, prec);
    for (long n = 0; n < n_terms; ++n) sum += inverse_power(rational(mpq_class(n) + a, prec), s);
    const Enclosure base_full = rational(mpq_class(n_terms) + a, prec);
    const Enclosure power = inverse_power(base_full, s);  // (N+a)^{-s}
    sum += power * base_full / (s - 1L);
    sum += ldexp(power, -1);
    Enclosure poch_full = s;            // (s)_{2k-1}
    Enclosure scaled = power / base_full;  // (N+a)^{-s-2k+1}
    const Enclosure base_sq = square(base_full);
    mpz_class factorial = 2;  // (2k)!
    for (long k = 1; k <= chosen; ++k) {
      if (k > 1) {
        poch_full = poch_full * (s + (2 * k - 3)) * (s + (2 * k - 2));
        scaled = scaled / base_sq;
        factorial *= (2 * k - 1) * (2 * k);
      }
      const mpq_class coeff = bernoulli(static_cast<int>(2 * k)) / mpq_class(factorial);
      sum += rational(coeff, prec) * poch_full * scaled;
    }
    return sum.inflated(chosen_bound);
  }
}

Enclosure riemann_zeta(const Enclosure& s, const Precision& prec) {
  if (s.contains(Real(1, kRadiusBits))) throw PoleError("riemann_zeta", "s interval " + interval_text(s) + " contains the pole at 1");
  if (!s.is_exact()) return hurwitz_zeta(s, mpq_class(1), prec);
  return zeta_memo().get(memo_key(s, prec), [&] { return hurwitz_zeta(s, mpq_class(1), prec); });
}

Enclosure riemann_zeta(long s, const Precision& prec) { return riemann_zeta(exact(s, prec), prec); }

Enclosure dirichlet_beta(const Enclosure& s, const Precision& prec) {
  if (s.contains(Real(1, kRadiusBits))) throw DomainError("dirichlet_beta", "s interval " + interval_text(s) + " contains 1, where the Hurwitz split is singular");
  auto compute = [&] {
    const Enclosure diff = hurwitz_zeta(s, mpq_class(1, 4), prec) - hurwitz_zeta(s, mpq_class(3, 4), prec);
    return exp(-(s * log(exact(4, prec)))) * diff;
  };
  if (!s.is_exact()) return compute();
  return beta_memo().get(memo_key(s, prec), compute);
}

Enclosure euler_gamma(const Precision& prec) {
  return constant_memo().get("gamma@" + std::to_string(prec.bits()), [&] {
    const mpfr_prec_t bits = prec.bits();
    const long n = bits / 4 + 10;
    const Real target = Real::power_of_two(-static_cast<long>(bits) + 4);
    // γ = H_{N-1} - ln N + 1/(2N) + Σ_{k=1}^{K} B_{2k}/(2k N^{2k}), remainder ≤ |B_{2K}|/(2K N^{2K}).
    mpq_class exact_part(1, 2 * n);
    for (long i = 1; i < n; ++i) exact_part += mpq_class(1, i);
    mpz_class n_pow = n * n;
    mpz_class n_sq = n_pow;
    for (long k = 1;; ++k) {
      const mpq_class term = bernoulli(static_cast<int>(2 * k)) / (mpq_class(2 * k) * mpq_class(n_pow));
      exact_part += term;
      const Enclosure bound = abs(rational(term, kBoundPrec));
      if (bound.upper() <= target) {
        return (rational(exact_part, prec) - log(exact(n, prec))).inflated(bound.upper());
      }
      n_pow *= n_sq;
    }
  });
}

Enclosure log_2pi_half(const Precision& prec) {
  return constant_memo().get("log2pi@" + std::to_string(prec.bits()), [&] { return ldexp(log(ldexp(Enclosure::pi(prec), 1)), -1); });
}

SpecialConstant special_constant(SpecialConstantTag tag, const Precision& prec) {
  switch (tag) {
    case SpecialConstantTag::euler_gamma: return {tag, euler_gamma(prec)};
    case SpecialConstantTag::log_2pi_half: return {tag, log_2pi_half(prec)};
  }
  throw std::invalid_argument("unknown special constant");
}

const char* name(SpecialConstantTag tag) {
  switch (tag) {
    case SpecialConstantTag::euler_gamma: return "euler_gamma";
    case SpecialConstantTag::log_2pi_half: return "log_2pi_half";
  }
  return "?";
}

namespace {

// Stirling shift: smallest z at which the asymptotic series reaches the
// target precision with margin.
long stirling_threshold(const Precision& prec) { return static_cast<long>(prec.bits()) / 5 + 8; }

// ln Γ(z) for z ≥ stirling_threshold, via the Stirling series. For real
// z > 0 the truncation error is bounded by the first omitted term.
Enclosure stirling(const Enclosure& z, const Precision& prec) {
  const Real target = Real::power_of_two(-static_cast<long>(prec.bits()) + 4);
  const Enclosure z_low(z.lower().rounded(kBoundPrec.bits(), MPFR_RNDD), Real(kRadiusBits));
  Enclosure value = (z - Enclosure::from_ratio(1, 2, prec)) * log(z) - z + log_2pi_half(prec);
  const Enclosure z_sq = square(z);
  Enclosure z_pow = z;  // z^{2k-1}
  Enclosure z_low_pow = z_low;
  for (long k = 1;; ++k) {
    const mpq_class& b = bernoulli(static_cast<int>(2 * k));
    const mpz_class denom = mpz_class(2 * k) * (2 * k - 1);
    const Real bound = (abs(rational(b / mpq_class(denom), kBoundPrec)) / z_low_pow).upper();
    if (bound <= target) return value.inflated(bound);
    value += rational(b / mpq_class(denom), prec) / z_pow;
    z_pow = z_pow * z_sq;
    z_low_pow = z_low_pow * square(z_low);
    if (k > 4 * static_cast<long>(prec.bits())) throw PrecisionExhausted("stirling: series did not converge", value);
  }
}

// Shift M with x + M ≥ threshold, and the product Π_{i<M} (x + i).
long shift_for(const Enclosure& x, const Precision& prec) {
  const double lo = lower_double(x);
  const long threshold = stirling_threshold(prec);
  return lo >= threshold ? 0 : static_cast<long>(std::ceil(threshold - lo));
}

Enclosure rising_product(const Enclosure& x, long m, const Precision& prec) {
  Enclosure product = exact(1, prec);
  for (long i = 0; i < m; ++i) product = product * (x + i);
  return product;
}

bool contains_nonpositive_integer(const Enclosure& x) {
  if (x.lower().sign() > 0) return false;
  Real hi = x.upper();
  if (hi.sign() > 0) return true;
  Real ceil_lo(x.bits());
  mpfr_ceil(ceil_lo.get(), x.lower().get());
  return ceil_lo <= hi;
}

}  // namespace

Enclosure log_gamma(const Enclosure& x, const Precision& prec) {
  if (!x.certainly_positive()) throw DomainError("log_gamma", "needs a strictly positive interval, got " + interval_text(x));
  const long m = shift_for(x, prec);
  Enclosure value = stirling(x + m, prec);
  if (m > 0) value -= log(rising_product(x, m, prec));
  return value;
}

Enclosure gamma_fn(const Enclosure& x, const Precision& prec) {
  if (!x.certainly_positive()) throw DomainError("gamma_fn", "needs a strictly positive interval, got " + interval_text(x));
  return exp(log_gamma(x, prec));
}

Enclosure gamma_real(const Enclosure& x, const Precision& prec) {
  if (x.certainly_positive()) return gamma_fn(x, prec);
  if (contains_nonpositive_integer(x)) throw PoleError("gamma_real", "interval " + interval_text(x) + " contains a pole");
  const long m = shift_for(x, prec);
  return exp(stirling(x + m, prec)) / rising_product(x, m, prec);
}

Enclosure rgamma(const Enclosure& x, const Precision& prec) {
  const long m = shift_for(x, prec);
  return rising_product(x, m, prec) * exp(-stirling(x + m, prec));
}

Enclosure digamma_int(long j, const Precision& prec) {
  if (j < 1) throw DomainError("digamma_int", "needs j >= 1, got " + std::to_string(j));
  mpq_class harmonic(0);
  for (long k = 1; k < j; ++k) harmonic += mpq_class(1, k);
  return rational(harmonic, prec) - euler_gamma(prec);
}

Enclosure bessel_k(const Enclosure& nu, const Enclosure& x, const Precision& prec) {
  const double x_hi = upper_double(x);
  // Relative target: K_ν(x) ≥ K_0(x) ≳ e^{-x}/(1+x).
  const long scale = static_cast<long>(std::ceil((x_hi + std::log1p(x_hi)) / std::log(2.0)));
  return bessel_k(nu, x, prec, Real::power_of_two(-static_cast<long>(prec.bits()) + 8 - scale));
}

Enclosure bessel_k(const Enclosure& nu, const Enclosure& x, const Precision& prec, const Real& target) {
  if (!x.certainly_positive()) throw DomainError("bessel_k", "needs x > 0, got " + interval_text(x));
  const double x_lo = lower_double(x);
  const double nu_abs = mpfr_get_d(nu.magnitude().get(), MPFR_RNDU);
  Real log_target_real(53);
  mpfr_log(log_target_real.get(), target.get(), MPFR_RNDD);
  const double log_target = log_target_real.to_double();

  // Discretization: the integrand extends to the strip |Im t| < 1 with
  // ∫|f(t+ib)| dt ≤ 2K_ν(x cos 1) and K_ν(y) ≤ √(2π/y) e^{-y+ν²/(2y)}.
  const Enclosure cos_a_low = Enclosure::from_ratio(27, 50, kBoundPrec);  // < cos 1
  const Enclosure x_low(x.lower().rounded(kBoundPrec.bits(), MPFR_RNDD), Real(kRadiusBits));
  const Enclosure nu_mag = bound_of(nu.magnitude());
  const Enclosure y = x_low * cos_a_low;
  const Enclosure two_pi = ldexp(Enclosure::pi(kBoundPrec), 1);
  const Enclosure strip_mass = sqrt(two_pi / y) * exp(square(nu_mag) / ldexp(y, 1) - y);
  const double y_d = x_lo * 0.54;
  const double log_mass = 0.5 * std::log(2 * M_PI / y_d) - y_d + nu_abs * nu_abs / (2 * y_d);
  double h_d = 2 * M_PI / (std::log(4.0) + log_mass - log_target + 2.0);
  h_d = std::min(h_d, 0.5);
  // Dyadic step so that every node k·h is exact.
  const long h_scale = 1L << 24;
  long h_num = static_cast<long>(std::floor(h_d * h_scale));
  Enclosure h_bound = Enclosure::from_ratio(h_num, h_scale, kBoundPrec);
  Real disc_bound;
  while (true) {
    const Enclosure disc = ldexp(strip_mass, 1) / (exp(two_pi / h_bound) - 1L);
    disc_bound = disc.upper();
    if (disc_bound <= target) break;
    h_num = h_num * 7 / 8;
    h_bound = Enclosure::from_ratio(h_num, h_scale, kBoundPrec);
  }
  const double h = static_cast<double>(h_num) / h_scale;

  // Truncation: f(t) ≤ exp(g(t)), g(t) = -x e^t/2 + |ν| t, concave. Once
  // h g'(t) ≤ -ln 2 the node values at least halve, so the tail after node K
  // is ≤ 2h exp(g((K+1)h)).
  auto g = [&](double t) { return -x_lo * std::exp(t) / 2 + nu_abs * t; };
  long nodes = 1;
  while (true) {
    const double t = static_cast<double>(nodes + 1) * h;
    const bool halving = h * (x_lo * std::exp(t) / 2 - nu_abs) >= std::log(2.0) * 1.01;
    if (halving && std::log(2 * h) + g(t) < log_target - 1.0) break;
    ++nodes;
  }
  Real trunc_bound;
  while (true) {
    const Enclosure t = Enclosure::from_ratio(h_num * (nodes + 1), h_scale, kBoundPrec);
    const Enclosure slope = h_bound * (x_low * exp(t) / 2L - nu_mag);
    const Enclosure tail = ldexp(h_bound, 1) * exp(nu_mag * t - x_low * exp(t) / 2L);
    if (slope.lower() >= Enclosure::log2(kBoundPrec).upper() && tail.upper() <= target) {
      trunc_bound = tail.upper();
      break;
    }
    ++nodes;
  }

  // Trapezoid sum h·(f(0)/2 + Σ_{k=1}^{K} f(kh)).
  const Enclosure step = Enclosure::from_ratio(h_num, h_scale, prec);
  const Enclosure e_step = exp(step);
  const bool nu_zero = nu.is_exact() && nu.center().is_zero();
  const Enclosure nu_step = nu_zero ? exact(1, prec) : exp(nu * step);
  Enclosure sum = ldexp(exp(-x), -1);
  Enclosure e_pow = exact(1, prec);
  Enclosure nu_pow = exact(1, prec);
  for (long k = 1; k <= nodes; ++k) {
    e_pow = e_pow * e_step;
    const Enclosure cosh_t = ldexp(e_pow + 1L / e_pow, -1);
    Enclosure term = exp(-(x * cosh_t));
    if (!nu_zero) {
      nu_pow = nu_pow * nu_step;
      term = term * ldexp(nu_pow + 1L / nu_pow, -1);
    }
    sum += term;
  }
  return (step * sum).inflated(add_up(disc_bound, trunc_bound));
}

mpq_class double_factorial(long k) {
  if (k < -1 || (k % 2 == 0)) throw DomainError("double_factorial", "needs an odd k >= -1, got " + std::to_string(k));
  mpz_class product = 1;
  for (long i = 3; i <= k; i += 2) product *= i;
  return mpq_class(product);
}

Enclosure log_gamma_series(const Enclosure& z, const Precision& prec) {
  if (!(z.magnitude() < Real(1, kRadiusBits))) throw DomainError("log_gamma_series", "needs |z| < 1, got " + interval_text(z));
  const Enclosure z_mag = bound_of(z.magnitude());
  const Enclosure one_minus = 1L - z_mag;
  SeriesSpec spec;
  spec.name = "log_gamma_series";
  spec.start = 2;
  spec.target_radius = default_target(prec);
  spec.max_index = 20 * static_cast<long>(prec.bits());
  // ζ(k) ≤ 2 for k ≥ 2, so |Σ_{k ≥ n}| ≤ 2|z|^n / (n (1 - |z|)).
  spec.tail_bound = [&](long n) { return (ldexp(pow(z_mag, n), 1) / (one_minus * n)).upper(); };
  Enclosure z_pow = square(z);
  long last = 1;
  spec.term = [&](long k) {
    if (k != last + 1) throw std::logic_error("log_gamma_series: terms must be requested in order");
    if (k > 2) z_pow = z_pow * z;
    last = k;
    Enclosure term = z_pow * riemann_zeta(k, prec) / k;
    return (k % 2 == 0) ? -term : term;
  };
  const Enclosure series = sum_series(spec, prec);
  const Enclosure closed = log_gamma_series_closed(z, prec);
  if (!series.overlaps(closed)) throw std::logic_error("log_gamma_series: series and closed form disagree");
  return series;
}

Enclosure log_gamma_series_closed(const Enclosure& z, const Precision& prec) {
  return -(euler_gamma(prec) * z) - log_gamma(z + 1L, prec);
}

BinomialTaylor binomial_taylor(long j, const Precision& prec) {
  if (j < 1) throw DomainError("binomial_taylor", "needs j >= 1, got " + std::to_string(j));
  const long sign = (j % 2 == 0) ? 1 : -1;
  BinomialTaylor out{j, mpq_class(sign, j), Enclosure()};
  out.linear_coeff.canonicalize();
  out.quadratic_coeff = (digamma_int(j, prec) + euler_gamma(prec)) * sign / j;
  return out;
}

mpq_class binomial_rational(const mpq_class& a, long j) {
  if (j < 0) return mpq_class(0);
  mpq_class out(1);
  for (long i = 0; i < j; ++i) out = out * (a - i) / (i + 1);
  out.canonicalize();
  return out;
}

Enclosure binomial_real(const Enclosure& a, long j, const Precision& prec) {
  if (j < 0) return exact(0, prec);
  Enclosure out = exact(1, prec);
  for (long i = 0; i < j; ++i) out = out * (a - i) / (i + 1);
  return out;
}

}  // namespace ct
