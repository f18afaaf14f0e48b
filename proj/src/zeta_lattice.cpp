#include "conetorsion/zeta_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "conetorsion/errors.hpp"
#include "conetorsion/series.hpp"
#include "conetorsion/special.hpp"

namespace ct {
namespace {

const Precision kBoundPrec{20};

Enclosure exact(long v, const Precision& prec) { return Enclosure::from_long(v, prec); }
Enclosure rational(const mpq_class& q, const Precision& prec) { return Enclosure::from_rational(q, prec); }
Enclosure bound_of(const Real& r) { return Enclosure(r.rounded(kBoundPrec.bits(), MPFR_RNDU), Real(kRadiusBits)); }
Enclosure low_of(const Real& r) { return Enclosure(r.rounded(kBoundPrec.bits(), MPFR_RNDD), Real(kRadiusBits)); }

double lower_double(const Enclosure& x) { return mpfr_get_d(x.lower().get(), MPFR_RNDD); }

std::string interval_text(const Enclosure& x) { return "[" + to_decimal(x.lower(), 17, MPFR_RNDD) + ", " + to_decimal(x.upper(), 17, MPFR_RNDU) + "]"; }

// Does s contain offset - k for some integer k ≥ 0?
bool hits_family(const Enclosure& s, const mpq_class& offset) {
  const Enclosure t = rational(offset, Precision{20}).with_bits(s.bits()) - s;
  const Real hi = t.upper();
  if (hi.sign() < 0) return false;
  Real lo = t.lower();
  if (lo.sign() < 0) lo = Real(0, lo.bits());
  Real ceil_lo(lo.bits());
  mpfr_ceil(ceil_lo.get(), lo.get());
  return ceil_lo <= hi;
}

// x^{-s}, x > 0, with fast paths for exact integer and half-integer s.
Enclosure inv_pow(const Enclosure& x, const Enclosure& s) {
  if (s.is_exact()) {
    Real twice(s.bits() + 1);
    mpfr_mul_2si(twice.get(), s.center().get(), 1, MPFR_RNDN);
    if (mpfr_integer_p(twice.get()) && mpfr_fits_slong_p(twice.get(), MPFR_RNDN)) {
      const long k = mpfr_get_si(twice.get(), MPFR_RNDN);
      if (k > 0 && k < 8192) {
        Enclosure denom = k >= 2 ? pow(x, k / 2) : exact(1, Precision{20}).with_bits(x.bits());
        if (k % 2 != 0) denom = k >= 2 ? denom * sqrt(x) : sqrt(x);
        return 1L / denom;
      }
    }
  }
  return exp(-(s * log(x)));
}

Real infinite() { return Real::infinity(); }

// |f(j)| ≤ amplitude · ratio^j for all j ≥ valid_from.
struct Envelope {
  Enclosure amplitude;
  Enclosure ratio;
  long valid_from;
};

// Σ_{j≥0} C(-s, j) (sign·2^{-shift})^j f(j). For j ≥ J the binomial ratio
// |C(-s,j+1)/C(-s,j)| = |s+j|/(j+1) is at most ρ = max(1, (|s|+J)/(J+1)),
// so the tail is ≤ |C(-s,J)| A (2^{-shift} r)^J / (1 - ρ 2^{-shift} r).
Evaluation binomial_series(const Enclosure& s, int sign, long shift, const std::function<Enclosure(long)>& f, const Envelope& env,
                           const ZetaNHContext& ctx, const std::string& label) {
  const Precision& prec = ctx.prec;
  std::vector<Enclosure> binom{exact(1, prec)};
  auto binom_at = [&](long j) -> const Enclosure& {
    while (static_cast<long>(binom.size()) <= j) {
      const long i = static_cast<long>(binom.size()) - 1;
      binom.push_back(binom.back() * (-s - i) / (i + 1));
    }
    return binom[static_cast<std::size_t>(j)];
  };
  const Enclosure s_mag = bound_of(s.magnitude());
  const Enclosure scaled_ratio = ldexp(env.ratio, -shift);

  SeriesSpec spec;
  spec.name = label;
  spec.start = 0;
  spec.max_index = ctx.effective_j_cap();
  spec.target_radius = default_target(prec);
  spec.tail_bound = [&](long J) {
    if (J < env.valid_from || J < 1) return infinite();
    const Enclosure c = bound_of(binom_at(J).magnitude());
    Enclosure rho = (s_mag + J) / (J + 1);
    if (rho.upper() < Real(1, kRadiusBits)) rho = exact(1, kBoundPrec);
    const Enclosure q = rho * scaled_ratio;
    if (!(q.upper() < Real(1, kRadiusBits))) return infinite();
    return (c * env.amplitude * pow(scaled_ratio, J) / (1L - q)).upper();
  };
  spec.term = [&](long j) {
    Enclosure t = ldexp(binom_at(j) * f(j), -shift * j);
    return (sign < 0 && j % 2 != 0) ? -t : t;
  };
  const SeriesResult r = sum_series_detailed(spec, prec);
  return {r.value, ContinuationMethod::binomial_in_zetaR, r.terms};
}

// ---- ζ₁ --------------------------------------------------------------------

// Smallest N (capped) with (N-1)^{1-2σ}/(2σ-1) ≤ target, as a double estimate.
long direct_cutoff(double exponent, double log_target, long cap) {
  // tail(N) ≈ (N-1)^{-exponent}/exponent
  if (exponent <= 0) return cap + 1;
  const double log_n = -(log_target + std::log(exponent)) / exponent;
  if (log_n > std::log(static_cast<double>(cap))) return cap + 1;
  return static_cast<long>(std::ceil(std::exp(log_n))) + 2;
}

double log_default_target(const Precision& prec) { return (-static_cast<double>(prec.bits()) + 8) * std::log(2.0); }

Evaluation zeta1_direct(const Enclosure& s, const ZetaNHContext& ctx) {
  const Precision& prec = ctx.prec;
  const Enclosure sigma = low_of(s.lower());
  const Enclosure excess = ldexp(sigma, 1) - 1L;  // 2σ - 1
  if (!excess.certainly_positive()) throw DomainError("zeta_nh", "direct summation needs s > 1/2, got " + interval_text(s));
  const long n = std::clamp<long>(direct_cutoff(lower_double(excess), log_default_target(prec), ctx.lattice_cap), 2, ctx.lattice_cap);
  // Σ_{k≥N} (k²+¼)^{-s} ≤ ∫_{N-1}^∞ x^{-2σ} dx.
  const Enclosure tail = exp(-(excess * log(exact(n - 1, kBoundPrec)))) / excess;
  Enclosure sum = exact(0, prec);
  for (long k = 1; k < n; ++k) sum += inv_pow(rational(mpq_class(4 * k * k + 1, 4), prec), s);
  const Real half_tail = ldexp(tail, -1).upper();
  return {(sum + Enclosure(half_tail.rounded(prec.bits(), MPFR_RNDN), Real(kRadiusBits))).inflated(half_tail), ContinuationMethod::direct, n};
}

Evaluation zeta1_binomial(const Enclosure& s, const ZetaNHContext& ctx) {
  const Precision& prec = ctx.prec;
  const Enclosure two_s = ldexp(s, 1);
  Envelope env{exact(2, kBoundPrec), exact(1, kBoundPrec), std::max(0L, static_cast<long>(std::ceil(1.0 - lower_double(s))))};
  return binomial_series(s, 1, 2, [&](long j) { return riemann_zeta(two_s + 2 * j, prec); }, env, ctx, "zeta_nh");
}

// Σ_{m≥1} m^ν K_ν(πm).
Evaluation bessel_single_sum(const Enclosure& nu, const ZetaNHContext& ctx) {
  const Precision& prec = ctx.prec;
  const Real target = default_target(prec);
  // m^ν K_ν(πm) ≤ √2 e^{ν²/(2π)} m^{a} e^{-πm}, a = max(ν_hi, 0) - ½.
  const Enclosure pi_b = Enclosure::pi(kBoundPrec);
  const Enclosure nu_mag = bound_of(nu.magnitude());
  Enclosure nu_hi = bound_of(nu.upper());
  if (nu_hi.certainly_negative()) nu_hi = exact(0, kBoundPrec);
  const Enclosure a = nu_hi - Enclosure::from_ratio(1, 2, kBoundPrec);
  const Enclosure a_pos = a.certainly_negative() ? exact(0, kBoundPrec) : a;
  const Enclosure lead = sqrt(exact(2, kBoundPrec)) * exp(square(nu_mag) / ldexp(pi_b, 1));
  long m_cut = 2;
  Real tail;
  while (true) {
    if (m_cut > ctx.bessel_cap) throw PrecisionExhausted("bessel sum: cutoff cap reached", Enclosure(Real(prec.bits()), Real::infinity()));
    const Enclosure ratio = exp(a_pos * log1p(1L / exact(m_cut, kBoundPrec)) - pi_b);
    const Enclosure mm = exact(m_cut, kBoundPrec);
    const Enclosure first = lead * exp(a * log(mm) - pi_b * mm);
    const Enclosure t = first / (1L - ratio);
    if (t.upper() <= target) {
      tail = t.upper();
      break;
    }
    ++m_cut;
  }
  const Real term_target = div_up(target, Real(4 * m_cut, kRadiusBits));
  const Enclosure pi = Enclosure::pi(prec);
  const bool nu_zero = nu.is_exact() && nu.center().is_zero();
  const auto terms = map_terms(
      static_cast<std::size_t>(m_cut - 1),
      [&](std::size_t i) {
        const long m = static_cast<long>(i) + 1;
        const Enclosure k = bessel_k(nu, pi * m, prec, term_target);
        return nu_zero ? k : exp(nu * log(exact(m, prec))) * k;
      },
      ctx.execution);
  return {ordered_sum(terms, prec).inflated(tail), ContinuationMethod::bessel_poisson, m_cut};
}

// ζ₁(s) = -2^{2s-1} + √π Γ(s-½) 2^{2s-2}/Γ(s) + 2^{s+½} π^s/Γ(s) Σ_m m^{s-½} K_{s-½}(πm).
Evaluation zeta1_bessel(const Enclosure& s, const ZetaNHContext& ctx) {
  const Precision& prec = ctx.prec;
  const Enclosure half = Enclosure::from_ratio(1, 2, prec);
  const Enclosure nu = s - half;
  const Enclosure ln2 = Enclosure::log2(prec);
  const Enclosure pi = Enclosure::pi(prec);
  const Enclosure rg = rgamma(s, prec);
  const Evaluation bessel = bessel_single_sum(nu, ctx);
  const Enclosure pow_2s = exp(ldexp(s, 1) * ln2);  // 2^{2s}
  Enclosure value = -ldexp(pow_2s, -1);
  value += sqrt(pi) * gamma_real(nu, prec) * ldexp(pow_2s, -2) * rg;
  value += exp((s + half) * ln2 + s * log(pi)) * rg * bessel.value;
  return {value, ContinuationMethod::bessel_poisson, bessel.truncation};
}

// ---- ζ₂ --------------------------------------------------------------------

Evaluation zeta2_binomial(const Enclosure& s, const ZetaNHContext& ctx) {
  if (hits_family(s, 1) || hits_family(s, mpq_class(1, 2)))
    throw PoleError("zeta_double_continued", "binomial form has poles at s = 1 - j and 1/2 - j; got " + interval_text(s));
  const Precision& prec = ctx.prec;
  // Q(w) ≤ 2^{-w} ζ_R(w)² ≤ 2.71·2^{-w} for w ≥ 2, from 2nm ≤ n² + m².
  Envelope env{exact(271, kBoundPrec) / 100L * exp(-(low_of(s.lower()) * Enclosure::log2(kBoundPrec))), Enclosure::from_ratio(1, 2, kBoundPrec),
               std::max(0L, static_cast<long>(std::ceil(2.0 - lower_double(s))))};
  return binomial_series(s, 1, 2, [&](long j) { return quadrant_zeta(s + j, prec); }, env, ctx, "zeta_double");
}

// Row sums over lattice points with n² + m² < R², in row order.
template <class Term>
Enclosure quadrant_disc_sum(long radius, const ZetaNHContext& ctx, Term term) {
  const auto rows = map_terms(
      static_cast<std::size_t>(std::max(0L, radius - 1)),
      [&](std::size_t i) {
        const long n = static_cast<long>(i) + 1;
        Enclosure row = exact(0, ctx.prec);
        for (long m = 1; n * n + m * m < radius * radius; ++m) row += term(n, m);
        return row;
      },
      ctx.execution);
  return ordered_sum(rows, ctx.prec);
}

long disc_radius(const Enclosure& decay, const Precision& prec, long cap) {
  // tail ≈ (π/2)(R - √2)^{-decay}/decay
  const double d = lower_double(decay);
  if (d <= 0) return cap;
  const double log_r = -(log_default_target(prec) + std::log(d) - std::log(M_PI / 2)) / d;
  if (log_r > std::log(static_cast<double>(cap))) return cap;
  return std::min(cap, static_cast<long>(std::ceil(std::exp(log_r) + 2)));
}

Evaluation zeta2_direct(const Enclosure& s, const ZetaNHContext& ctx) {
  const Enclosure sigma = low_of(s.lower());
  const Enclosure decay = ldexp(sigma, 1) - 2L;  // 2σ - 2
  if (!decay.certainly_positive()) throw DomainError("zeta_double", "direct summation needs s > 1, got " + interval_text(s));
  const long radius = std::max(3L, disc_radius(decay, ctx.prec, ctx.radius_cap));
  const Enclosure a = exact(radius, kBoundPrec) - sqrt(exact(2, kBoundPrec));
  const Enclosure tail = ldexp(Enclosure::pi(kBoundPrec), -1) * exp(-(decay * log(a))) / decay;
  const Enclosure sum = quadrant_disc_sum(radius, ctx, [&](long n, long m) { return inv_pow(rational(mpq_class(4 * (n * n + m * m) + 1, 4), ctx.prec), s); });
  const Real half_tail = ldexp(tail, -1).upper();
  return {(sum + Enclosure(half_tail.rounded(ctx.prec.bits(), MPFR_RNDN), Real(kRadiusBits))).inflated(half_tail), ContinuationMethod::direct, radius};
}

// θ in e^{-2πmμ} ≤ e^{-2π(1-θ)R} e^{-2πθ mn} for the pair-sum tail.
constexpr long kThetaDen = 4;

Evaluation zeta2_bessel(const Enclosure& s, const ZetaNHContext& ctx) {
  const Precision& prec = ctx.prec;
  const Enclosure half = Enclosure::from_ratio(1, 2, prec);
  if (!(s.lower().sign() >= 0) || !(s.upper() <= Real(1, kRadiusBits)))
    throw DomainError("zeta_double_continued", "the Bessel form is implemented for s in [0, 1], got " + interval_text(s));
  if (s.contains(half.center()) || s.contains(Real(1, kRadiusBits)))
    throw PoleError("zeta_double_continued", "interval " + interval_text(s) + " contains a pole (1/2 or 1)");
  ZetaNHContext inner = ctx;
  inner.method = ContinuationMethod::automatic;
  const Enclosure nu = s - half;
  const Enclosure rg = rgamma(s, prec);
  const Enclosure pi = Enclosure::pi(prec);
  const Evaluation pairs = bessel_pair_sum(nu, ctx);
  Enclosure value = ldexp(exp(s * log(pi)) * rg * pairs.value, 1);
  value += ldexp(sqrt(pi) * gamma_real(nu, prec) * rg * zeta_nh(nu, inner).value, -1);
  value -= ldexp(zeta_nh(s, inner).value, -1);
  return {value, ContinuationMethod::bessel_poisson, pairs.truncation};
}

// ζ₂ on any admissible interval: direct/binomial for s > 1, binomial otherwise.
Evaluation zeta2_any(const Enclosure& s, const ZetaNHContext& ctx) {
  if (s.lower() > Real(1, kRadiusBits)) return zeta_double(s, ctx);
  return zeta2_binomial(s, ctx);
}

}  // namespace

const char* name(ContinuationMethod m) {
  switch (m) {
    case ContinuationMethod::automatic: return "automatic";
    case ContinuationMethod::direct: return "direct";
    case ContinuationMethod::binomial_in_zetaR: return "binomial_in_zetaR";
    case ContinuationMethod::bessel_poisson: return "bessel_poisson";
  }
  return "?";
}

long ZetaNHContext::effective_j_cap() const { return j_cap > 0 ? j_cap : std::max<long>(200, static_cast<long>(prec.bits())); }

Enclosure quadrant_zeta(const Enclosure& w, const Precision& prec) { return riemann_zeta(w, prec) * dirichlet_beta(w, prec) - riemann_zeta(ldexp(w, 1), prec); }

Evaluation zeta_nh(const Enclosure& s, const ZetaNHContext& ctx) {
  if (hits_family(s, mpq_class(1, 2)))
    throw PoleError("zeta_nh", "interval " + interval_text(s) + " contains a pole (1/2 - k); use zeta_nh_finite_part for the Laurent data at 1/2");
  switch (ctx.method) {
    case ContinuationMethod::direct: return zeta1_direct(s, ctx);
    case ContinuationMethod::binomial_in_zetaR: return zeta1_binomial(s, ctx);
    case ContinuationMethod::bessel_poisson: return zeta1_bessel(s, ctx);
    case ContinuationMethod::automatic: break;
  }
  const double excess = 2 * lower_double(s) - 1;
  if (excess > 0 && direct_cutoff(excess, log_default_target(ctx.prec), 4096) <= 4096) return zeta1_direct(s, ctx);
  return zeta1_binomial(s, ctx);
}

Enclosure even_zeta_log_series(const Precision& prec) {
  SeriesSpec spec;
  spec.name = "even_zeta_log_series";
  spec.start = 1;
  spec.max_index = 4 * static_cast<long>(prec.bits());
  spec.target_radius = default_target(prec);
  // |terms| ≤ 2·4^{-j}/j, so the tail from J is ≤ (8/3)·4^{-J}/J.
  spec.tail_bound = [](long J) { return (ldexp(Enclosure::from_ratio(8, 3, kBoundPrec), -2 * J) / J).upper(); };
  spec.term = [&](long j) {
    const Enclosure t = ldexp(riemann_zeta(2 * j, prec), -2 * j) / j;
    return j % 2 == 0 ? t : -t;
  };
  return sum_series(spec, prec);
}

Enclosure zeta_nh_deriv_at_zero(const ZetaNHContext& ctx) {
  const Precision& prec = ctx.prec;
  // d/ds [C(-s,j)] at 0 is the linear Taylor coefficient; C(0,j) = 0 for j ≥ 1.
  SeriesSpec spec;
  spec.name = "zeta_nh_deriv_at_zero";
  spec.start = 1;
  spec.max_index = ctx.effective_j_cap();
  spec.target_radius = default_target(prec);
  spec.tail_bound = [](long J) { return (ldexp(Enclosure::from_ratio(8, 3, kBoundPrec), -2 * J) / J).upper(); };
  spec.term = [&](long j) { return ldexp(rational(binomial_taylor(j, prec).linear_coeff, prec) * riemann_zeta(2 * j, prec), -2 * j); };
  // 2ζ'_R(0) = -ln 2π.
  const Enclosure value = sum_series(spec, prec) - ldexp(log_2pi_half(prec), 1);
  if (!value.overlaps(zeta_nh_deriv_at_zero_closed(prec))) throw std::logic_error("zeta_nh_deriv_at_zero: series and closed form disagree");
  return value;
}

Enclosure zeta_nh_deriv_at_zero_closed(const Precision& prec) {
  const Enclosure half_pi = ldexp(Enclosure::pi(prec), -1);
  return -(ldexp(Enclosure::log2(prec), 1)) - log(sinh(half_pi));
}

Enclosure binomial_odd_zeta_sum(const Precision& prec) {
  ZetaNHContext ctx;
  ctx.prec = prec;
  const Enclosure half = Enclosure::from_ratio(1, 2, prec);
  Envelope env{exact(2, kBoundPrec), exact(1, kBoundPrec), 1};
  return binomial_series(half, 1, 2, [&](long j) { return j == 0 ? exact(0, prec) : riemann_zeta(2 * j + 1, prec); }, env, ctx, "binomial_odd_zeta_sum").value;
}

FinitePart zeta_nh_finite_part(const ZetaNHContext& ctx) {
  const Precision& prec = ctx.prec;
  FinitePart out;
  out.ru = Enclosure::from_ratio(1, 2, prec);
  if (ctx.method == ContinuationMethod::bessel_poisson) {
    const Evaluation k = bessel_single_sum(exact(0, prec), ctx);
    out.rz = ldexp(Enclosure::log2(prec) + k.value, 1) - 1L;
  } else {
    out.rz = euler_gamma(prec) + binomial_odd_zeta_sum(prec);
  }
  return out;
}

Evaluation zeta_shifted_nh(int sign, const Enclosure& s, const ZetaNHContext& ctx) {
  const Precision& prec = ctx.prec;
  const Enclosure sigma = low_of(s.lower());
  const Enclosure excess = sigma - 1L;
  if (!excess.certainly_positive()) throw DomainError("zeta_shifted_nh", "direct summation needs s > 1, got " + interval_text(s));
  const long n = std::clamp<long>(direct_cutoff(lower_double(excess), log_default_target(prec), ctx.lattice_cap), 3, ctx.lattice_cap);
  // Tail from N: ∫_{N-1}^∞ (x ∓ ½ ...)^{-σ}; (N - 3/2) for the minus sign, (N - 1) for plus.
  const Enclosure base = sign < 0 ? rational(mpq_class(2 * n - 3, 2), kBoundPrec) : exact(n - 1, kBoundPrec);
  const Enclosure tail = exp(-(excess * log(base))) / excess;
  const Enclosure half = Enclosure::from_ratio(1, 2, prec);
  Enclosure sum = exact(0, prec);
  for (long k = 1; k < n; ++k) {
    const Enclosure mu = sqrt(rational(mpq_class(4 * k * k + 1, 4), prec));
    sum += inv_pow(sign < 0 ? mu - half : mu + half, s);
  }
  const Real half_tail = ldexp(tail, -1).upper();
  return {(sum + Enclosure(half_tail.rounded(prec.bits(), MPFR_RNDN), Real(kRadiusBits))).inflated(half_tail), ContinuationMethod::direct, n};
}

Evaluation zeta_shifted_nh_expansion(int sign, const Enclosure& s, const ZetaNHContext& ctx) {
  ZetaNHContext inner = ctx;
  inner.method = ContinuationMethod::automatic;
  // ζ₁(w) ≤ 1.81·0.8^w ≤ 4·0.8^w for w ≥ 1.
  const Enclosure root = sqrt(Enclosure::from_ratio(4, 5, kBoundPrec));
  Envelope env{exact(4, kBoundPrec) * exp(low_of(s.lower()) * log(root)), root, std::max(0L, static_cast<long>(std::ceil(2.0 - lower_double(s))))};
  const Enclosure half_s = ldexp(s, -1);
  Evaluation out = binomial_series(s, sign, 1, [&](long j) { return zeta_nh(half_s + Enclosure::from_ratio(j, 2, ctx.prec), inner).value; }, env, ctx,
                                   "zeta_shifted_nh_expansion");
  return out;
}

Evaluation zeta_double(const Enclosure& s, const ZetaNHContext& ctx) {
  if (!(s.lower() > Real(1, kRadiusBits))) throw DomainError("zeta_double", "needs s > 1 (use zeta_double_continued), got " + interval_text(s));
  switch (ctx.method) {
    case ContinuationMethod::direct: return zeta2_direct(s, ctx);
    case ContinuationMethod::binomial_in_zetaR: return zeta2_binomial(s, ctx);
    case ContinuationMethod::bessel_poisson: throw DomainError("zeta_double", "the Bessel form is only implemented on [0, 1]");
    case ContinuationMethod::automatic: break;
  }
  const Enclosure decay = ldexp(low_of(s.lower()), 1) - 2L;
  if (disc_radius(decay, ctx.prec, 65) <= 64) return zeta2_direct(s, ctx);
  return zeta2_binomial(s, ctx);
}

Evaluation zeta_double_continued(const Enclosure& s, const ZetaNHContext& ctx) {
  if (ctx.method == ContinuationMethod::binomial_in_zetaR) return zeta2_binomial(s, ctx);
  if (ctx.method == ContinuationMethod::direct) return zeta2_direct(s, ctx);
  return zeta2_bessel(s, ctx);
}

Evaluation zeta_shifted_double(int sign, const Enclosure& s, const ZetaNHContext& ctx) {
  const Precision& prec = ctx.prec;
  const Enclosure sigma = low_of(s.lower());
  if (!(sigma - 2L).certainly_positive()) throw DomainError("zeta_shifted_double", "direct summation needs s > 2, got " + interval_text(s));
  const long radius = std::max(4L, disc_radius(sigma - 2L, prec, ctx.radius_cap));
  const Enclosure pi_half = ldexp(Enclosure::pi(kBoundPrec), -1);
  Enclosure a = exact(radius, kBoundPrec) - sqrt(exact(2, kBoundPrec));
  Enclosure tail;
  if (sign < 0) {
    // ∫_a^∞ (r - ½)^{-σ} r dr with u = r - ½.
    a = a - Enclosure::from_ratio(1, 2, kBoundPrec);
    tail = pi_half * (exp((2L - sigma) * log(a)) / (sigma - 2L) + ldexp(exp((1L - sigma) * log(a)) / (sigma - 1L), -1));
  } else {
    tail = pi_half * exp((2L - sigma) * log(a)) / (sigma - 2L);
  }
  const Enclosure half = Enclosure::from_ratio(1, 2, prec);
  const Enclosure sum = quadrant_disc_sum(radius, ctx, [&](long n, long m) {
    const Enclosure mu = sqrt(rational(mpq_class(4 * (n * n + m * m) + 1, 4), prec));
    return inv_pow(sign < 0 ? mu - half : mu + half, s);
  });
  const Real half_tail = ldexp(tail, -1).upper();
  return {(sum + Enclosure(half_tail.rounded(prec.bits(), MPFR_RNDN), Real(kRadiusBits))).inflated(half_tail), ContinuationMethod::direct, radius};
}

Evaluation zeta_shifted_double_expansion(int sign, const Enclosure& s, const ZetaNHContext& ctx) {
  ZetaNHContext inner = ctx;
  inner.method = ContinuationMethod::automatic;
  // ζ₂(w) ≤ Q(w) ≤ 2.71·2^{-w} for w ≥ 2.
  const Enclosure root = sqrt(Enclosure::from_ratio(1, 2, kBoundPrec));
  Envelope env{exact(271, kBoundPrec) / 100L * exp(low_of(s.lower()) * log(root)), root, std::max(0L, static_cast<long>(std::ceil(4.0 - lower_double(s))))};
  const Enclosure half_s = ldexp(s, -1);
  return binomial_series(s, sign, 1, [&](long j) { return zeta2_any(half_s + Enclosure::from_ratio(j, 2, ctx.prec), inner).value; }, env, ctx,
                         "zeta_shifted_double_expansion");
}

Evaluation bessel_pair_sum(const Enclosure& nu, const ZetaNHContext& ctx) {
  const Precision& prec = ctx.prec;
  if (nu.magnitude() > Real::power_of_two(-1)) throw DomainError("bessel_pair_sum", "needs |nu| <= 1/2, got " + interval_text(nu));
  const Real target = default_target(prec);
  // For |ν| ≤ ½ each term is ≤ ½ e^{-2πmμ}; pairs with mμ > R contribute
  // ≤ ½ e^{-2π(1-θ)R} Σ_{n,m} e^{-2πθmn} ≤ ½ e^{-2π(1-θ)R} e^{2πθ} (q/(1-q))², q = e^{-2πθ}.
  const Enclosure two_pi = ldexp(Enclosure::pi(kBoundPrec), 1);
  const Enclosure theta = Enclosure::from_ratio(1, kThetaDen, kBoundPrec);
  const Enclosure q = exp(-(two_pi * theta));
  const Enclosure mass = exp(two_pi * theta) * square(q / (1L - q));
  long radius = 1;
  Real tail;
  while (true) {
    if (radius > ctx.bessel_cap) throw PrecisionExhausted("bessel_pair_sum: radius cap reached", Enclosure(Real(prec.bits()), Real::infinity()));
    const Enclosure t = ldexp(exp(-(two_pi * (1L - theta) * radius)) * mass, -1);
    if (t.upper() <= Real::power_of_two(-static_cast<long>(prec.bits()) + 7)) {
      tail = t.upper();
      break;
    }
    ++radius;
  }
  // Pairs with m²(4n² + 1) ≤ 4R², in (n, m) order.
  std::vector<std::pair<long, long>> pairs;
  for (long n = 1; 4 * n * n + 1 <= 4 * radius * radius; ++n) {
    for (long m = 1; m * m * (4 * n * n + 1) <= 4 * radius * radius; ++m) pairs.emplace_back(n, m);
  }
  const Real term_target = div_up(target, Real(4 * static_cast<long>(pairs.size()) * (radius + 1), kRadiusBits));
  const Enclosure pi = Enclosure::pi(prec);
  const bool nu_zero = nu.is_exact() && nu.center().is_zero();
  const auto terms = map_terms(
      pairs.size(),
      [&](std::size_t i) {
        const auto [n, m] = pairs[i];
        const Enclosure mu = sqrt(rational(mpq_class(4 * n * n + 1, 4), prec));
        const Enclosure k = bessel_k(nu, ldexp(pi * m * mu, 1), prec, term_target);
        return nu_zero ? k : exp(nu * log(exact(m, prec) / mu)) * k;
      },
      ctx.execution);
  return {ordered_sum(terms, prec).inflated(tail), ContinuationMethod::bessel_poisson, radius};
}

Enclosure bessel_lattice_sum(const ZetaNHContext& ctx) { return bessel_pair_sum(exact(0, ctx.prec), ctx).value; }

DoubleFinitePart zeta_double_finite_part(const ZetaNHContext& ctx) {
  const Precision& prec = ctx.prec;
  DoubleFinitePart out;

  // (b) Fit of the Bessel continuation. With E(ε) = (F(½+ε) + F(½-ε))/2 and
  // O(ε) = ε(F(½+ε) - F(½-ε))/2, both are even in ε with limits rz and ru.
  ZetaNHContext hi = ctx;
  hi.prec = Precision{prec.digits + prec.digits / 4 + 10};
  hi.method = ContinuationMethod::bessel_poisson;
  const long k = static_cast<long>(std::ceil(prec.digits / 4.0 * std::log2(10.0)));
  const Enclosure half = Enclosure::from_ratio(1, 2, hi.prec);
  std::vector<Enclosure> even, odd;
  for (long level = 0; level < 3; ++level) {
    const Enclosure eps = ldexp(exact(1, hi.prec), -(k + level));
    const Enclosure plus = zeta_double_continued(half + eps, hi).value;
    const Enclosure minus = zeta_double_continued(half - eps, hi).value;
    even.push_back(ldexp(plus + minus, -1));
    odd.push_back(ldexp(eps * (plus - minus), -1));
  }
  auto richardson = [](const Enclosure& coarse, const Enclosure& fine) { return (4L * fine - coarse) / 3L; };
  // With E = rz + c₂ε² + c₄ε⁴ + …, the (h, h/2) and (h/2, h/4) extrapolants
  // differ by 15c₄h⁴/64 while the finer one is off by c₄h⁴/64.
  auto fitted = [&](const std::vector<Enclosure>& v) {
    const Enclosure coarse = richardson(v[0], v[1]);
    const Enclosure fine = richardson(v[1], v[2]);
    const Real spread = abs(coarse - fine).upper();
    return fine.inflated(spread).with_bits(prec.bits());
  };
  out.fit.rz = fitted(even);
  out.fit.ru = fitted(odd);
  out.step = ldexp(exact(1, prec), -k);
  out.ru_consistent_with_zero = out.fit.ru.contains_zero();

  // (c) Closed series from the binomial form.
  const Enclosure half_p = Enclosure::from_ratio(1, 2, prec);
  const Enclosure head = riemann_zeta(half_p, prec) * dirichlet_beta(half_p, prec) - euler_gamma(prec);
  Envelope env{exact(271, kBoundPrec) / 100L * sqrt(Enclosure::from_ratio(1, 2, kBoundPrec)), Enclosure::from_ratio(1, 2, kBoundPrec), 2};
  out.analytic.ru = -half_p;
  out.analytic.rz = binomial_series(half_p, 1, 2, [&](long j) { return j == 0 ? head : quadrant_zeta(half_p + j, prec); }, env, ctx, "double_finite_part").value;

  // (a) As written in the source formula.
  out.bessel_sum = bessel_lattice_sum(ctx);
  const Enclosure ln2 = Enclosure::log2(prec);
  out.formula_a = ldexp(out.bessel_sum, 1) - 3L * ldexp(ln2, -1) - ldexp(log(sinh(ldexp(Enclosure::pi(prec), -1))), -1) + ldexp(euler_gamma(prec), -1) +
                  ldexp(binomial_odd_zeta_sum(prec), -1);
  out.discrepancy = out.fit.rz - out.formula_a;
  return out;
}

}  // namespace ct
