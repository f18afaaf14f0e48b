#include "conetorsion/torus.hpp"

#include <cmath>

#include "conetorsion/errors.hpp"
#include "conetorsion/kernels.hpp"
#include "conetorsion/series.hpp"
#include "conetorsion/special.hpp"

namespace ct {
namespace {

const Precision kBoundPrec{20};

Enclosure exact(long v, const Precision& prec) { return Enclosure::from_long(v, prec); }

Enclosure half_log_8_sinh(const Precision& prec) {
  return ldexp(log(8L * sinh(ldexp(Enclosure::pi(prec), -1))), -1);
}

// d/ds at 0 of Σ_{j odd} 2 C(-s,j) 2^{-j} f((s+j)/2). |C(-s,j)| ≤ 1 for |s| ≤ 1
// and f ≤ 2 beyond 3/2 - h, so the tail from j = 2I+1 is ≤ 3·4^{-I}.
Enclosure shifted_difference_derivative(const ZetaNHContext& ctx, const std::function<Enclosure(long, const Enclosure&, const ZetaNHContext&)>& f,
                                        const char* label) {
  const Precision& prec = ctx.prec;
  ZetaNHContext hi = ctx;
  hi.prec = Precision{prec.digits + prec.digits / 4 + 10};
  const long k = static_cast<long>(std::ceil(prec.digits / 4.0 * std::log2(10.0)));

  auto difference = [&](const Enclosure& s) {
    SeriesSpec spec;
    spec.name = label;
    spec.start = 0;
    spec.max_index = hi.effective_j_cap();
    spec.target_radius = default_target(hi.prec);
    spec.term = [&](long i) {
      const long j = 2 * i + 1;
      const Enclosure arg = ldexp(s + j, -1);
      return ldexp(binomial_real(-s, j, hi.prec) * f(j, arg, hi), 1 - j);
    };
    spec.tail_bound = [](long i) { return ldexp(exact(3, kBoundPrec), -2 * i).upper(); };
    return sum_series(spec, hi.prec);
  };

  std::vector<Enclosure> slopes;
  for (long level = 0; level < 3; ++level) {
    const Enclosure h = ldexp(exact(1, hi.prec), -(k + level));
    slopes.push_back((difference(h) - difference(-h)) / ldexp(h, 1));
  }
  auto richardson = [](const Enclosure& coarse, const Enclosure& fine) { return (4L * fine - coarse) / 3L; };
  const Enclosure coarse = richardson(slopes[0], slopes[1]);
  const Enclosure fine = richardson(slopes[1], slopes[2]);
  return fine.inflated(abs(coarse - fine).upper()).with_bits(prec.bits());
}

// Raw co-exact spectrum Σ_{n≥1, m≥0, n²+m² < R²} 4(√(n²+m²+¼) ± ½)^{-s}.
Enclosure raw_spectrum_sum(int sign, const Enclosure& s, const ZetaNHContext& ctx, long radius) {
  const Precision& prec = ctx.prec;
  const Enclosure half = Enclosure::from_ratio(1, 2, prec);
  const auto rows = map_terms(
      static_cast<std::size_t>(radius),
      [&](std::size_t idx) {
        const long n = static_cast<long>(idx) + 1;
        Enclosure row = exact(0, prec);
        for (long m = 0; n * n + m * m < radius * radius; ++m) {
          const Enclosure mu = sqrt(Enclosure::from_rational(mpq_class(4 * (n * n + m * m) + 1, 4), prec));
          row += pow(sign > 0 ? mu + half : mu - half, -s);
        }
        return row;
      },
      ctx.execution);
  const Enclosure head = kTorusMultiplicity * ordered_sum(rows, prec);

  // m ≥ 1: each point dominates its square [n-1,n]×[m-1,m], which lies beyond
  // r = R - √2, and (√(r²+¼) - ½)^{-s} ≤ (r - ½)^{-s}. The m = 0 row compares
  // with ∫_{R-1}^∞.
  const Precision& bp = kBoundPrec;
  const Enclosure sl = Enclosure::from_bounds(s.lower(), s.lower(), bp.bits());
  const Enclosure a = exact(radius, bp) - sqrt(exact(2, bp));
  const Enclosure pi_half = ldexp(Enclosure::pi(bp), -1);
  Enclosure tail2, tail1;
  if (sign > 0) {
    tail2 = pi_half * pow(a, 2L - sl) / (sl - 2L);
    tail1 = pow(exact(radius - 1, bp), 1L - sl) / (sl - 1L);
  } else {
    const Enclosure b = a - Enclosure::from_ratio(1, 2, bp);
    tail2 = pi_half * (pow(b, 2L - sl) / (sl - 2L) + ldexp(pow(b, 1L - sl) / (sl - 1L), -1));
    tail1 = pow(Enclosure::from_ratio(2 * radius - 3, 2, bp), 1L - sl) / (sl - 1L);
  }
  const Enclosure tail = kTorusMultiplicity * (tail2 + tail1);
  return (head + ldexp(tail, -1)).inflated(ldexp(tail, -1).upper());
}

}  // namespace

Enclosure comb_anomaly_torus(const Precision& prec) {
  const Enclosure norm = ldexp(Enclosure::pi(prec), 1);  // ‖1‖ = ‖dθ‖ = ‖dφ‖ = √Vol(T)
  return -log(norm);
}

TorusBounds torus_bounds(const Precision& prec) {
  const BoundConstants c = constants_c1_c5(prec);
  const Enclosure gamma = euler_gamma(prec);
  const Enclosure e = exp(exact(1, prec));
  const Enclosure pi = Enclosure::pi(prec);
  const Enclosure e2pi = exp(ldexp(pi, 1));
  const Enclosure ratio = e2pi / (e2pi - 1L);
  const Enclosure sinh_half_pi = sinh(ldexp(pi, -1));
  const Enclosure pair_a = 1L / sqrt(exact(15, prec)) + 1L / sqrt(exact(17, prec));
  const Enclosure pair_b = 1L / sqrt(exact(5, prec)) - 1L / sqrt(exact(3, prec));
  const Enclosure root8 = ldexp(sqrt(exact(2, prec)), 1);

  TorusBounds out;
  out.bessel_bound = ldexp(e, -1) * (ratio - 1L);
  const Enclosure z1_common = half_log_8_sinh(prec) - ldexp(gamma, -1);
  out.z1_lower = e * (1L - ratio) + z1_common - c.c2 - c.c5;
  out.z1_upper = z1_common - c.c1;
  out.z2_lower = -c.c2 - c.c4 - gamma;
  out.z2_upper = -c.c1 - c.c3 - gamma;
  out.a = 4L - 8L * pair_a - 2L * pair_b + log(2L * sinh_half_pi) - gamma + ldexp(e * (1L - ratio), 1) - 9L * (root8 * atanh(1L / root8) - 1L) / root8;
  out.b = -4L * pair_a - 3L * pair_b + log(18L * sinh_half_pi) - gamma;
  out.a_collected = ldexp(out.z1_lower + out.z2_lower, 1);
  out.b_collected = ldexp(out.z1_upper + out.z2_upper, 1);
  return out;
}

Z1Evaluation z1_at_zero(const ZetaNHContext& ctx) {
  const Precision& prec = ctx.prec;
  const BoundConstants c = constants_c1_c5(prec);
  const TorusBounds bounds = torus_bounds(prec);
  const DoubleFinitePart fp = zeta_double_finite_part(ctx);

  Z1Evaluation out;
  out.rz = fp.analytic.rz;
  out.rz_fit = fp.fit.rz;
  out.s3 = series_s3(ctx);
  out.value = -out.rz - out.s3;
  out.bessel_sum = fp.bessel_sum;
  out.bessel_within_bound = out.bessel_sum.certainly_positive() && out.bessel_sum.upper() < bounds.bessel_bound.lower();
  out.value_formula_a = -fp.formula_a - out.s3;

  auto sandwich = [&](const Enclosure& value, const char* what) {
    std::vector<Reading> readings{make_reading("as_stated", value, bounds.z1_lower, bounds.z1_upper),
                                  make_reading("factor_corrected", value, bounds.z1_lower - c.c5, bounds.z1_upper)};
    return make_certificate(std::string("Z1(0) sandwich, ") + what, "sec-5.4.1", value, std::move(readings), "corrected reading replaces c5 by 2 c5");
  };
  out.sandwich = sandwich(out.value, "trusted finite part");
  out.sandwich_formula_a = sandwich(out.value_formula_a, "displayed finite-part formula");
  return out;
}

Z2Evaluation z2_at_zero(const ZetaNHContext& ctx) {
  const Precision& prec = ctx.prec;
  const BoundConstants c = constants_c1_c5(prec);
  const Enclosure gamma = euler_gamma(prec);
  const TorusBounds bounds = torus_bounds(prec);

  Z2Evaluation out;
  out.rz = zeta_nh_finite_part(ctx).rz;
  out.s2 = series_s2(ctx);
  out.value = -out.rz - out.s2;
  std::vector<Reading> readings{make_reading("as_stated", out.value, bounds.z2_lower, bounds.z2_upper),
                                make_reading("factor_corrected", out.value, -ldexp(c.c2 + c.c4, 1) - gamma, -ldexp(c.c1 + c.c3, 1) - gamma)};
  out.sandwich = make_certificate("Z2(0) sandwich", "sec-5.4.2", out.value, std::move(readings), "corrected reading doubles c1..c4");
  return out;
}

Enclosure z2_finite_difference(const ZetaNHContext& ctx) {
  return shifted_difference_derivative(
      ctx,
      [](long j, const Enclosure& w, const ZetaNHContext& c) {
        ZetaNHContext local = c;
        if (j == 1) local.method = ContinuationMethod::bessel_poisson;
        return zeta_nh(w, local).value;
      },
      "z2_finite_difference");
}

Enclosure z1_finite_difference(const ZetaNHContext& ctx) {
  return shifted_difference_derivative(
      ctx,
      [](long j, const Enclosure& w, const ZetaNHContext& c) {
        ZetaNHContext local = c;
        local.method = ContinuationMethod::automatic;
        if (j == 1) {
          local.method = ContinuationMethod::bessel_poisson;
          return zeta_double_continued(w, local).value;
        }
        return zeta_double(w, local).value;
      },
      "z1_finite_difference");
}

TorusVerdicts torus_verdicts(const Enclosure& total, const TorusBounds& bounds, const Precision& prec) {
  const Enclosure ln2pi = log(ldexp(Enclosure::pi(prec), 1));
  TorusVerdicts v;
  v.negative = total.certainly_negative();
  v.in_window = Enclosure::from_ratio(-4, 5, prec).upper() < total.lower() && total.upper() < Enclosure::from_ratio(-1, 4, prec).lower();
  v.in_ab = interval_within(total, bounds.a - ln2pi, bounds.b - ln2pi);
  return v;
}

DecompositionCheck check_decomposition(int sign, const Enclosure& s, const ZetaNHContext& ctx, long radius) {
  if (sign != 1 && sign != -1) throw DomainError("check_decomposition", "sign must be +1 or -1");
  if (!(s.lower() > exact(2, ctx.prec).upper())) throw DomainError("check_decomposition", "needs s > 2");
  DecompositionCheck out;
  out.sign = sign;
  out.s = s;
  out.raw = raw_spectrum_sum(sign, s, ctx, radius);
  out.split = kTorusMultiplicity * (zeta_shifted_double_expansion(sign, s, ctx).value + zeta_shifted_nh_expansion(sign, s, ctx).value);
  out.holds = out.raw.overlaps(out.split);
  return out;
}

TorusAnomalyReport total_anomaly_torus(const ZetaNHContext& ctx, bool with_oracles) {
  const Precision& prec = ctx.prec;
  static_assert(kTorusEulerCharacteristic == kTorusRanks[0] - kTorusRanks[1] + kTorusRanks[2]);

  TorusAnomalyReport r;
  r.comb = comb_anomaly_torus(prec);
  r.bounds = torus_bounds(prec);
  r.z1 = z1_at_zero(ctx);
  r.z2 = z2_at_zero(ctx);

  // (χ/4) log 2 and the r_q log(2p-2q-1)!! terms; both vanish at p = 1 with χ = 0.
  const Enclosure chi_term = kTorusEulerCharacteristic * Enclosure::log2(prec) / 4L;
  const Enclosure rank_term = kTorusRanks[0] * log(Enclosure::from_rational(double_factorial(1), prec));
  if (!chi_term.contains_zero() || !rank_term.contains_zero()) {
    throw std::logic_error("total_anomaly_torus: torus correction terms must vanish");
  }

  r.analy = ldexp(r.z1.value + r.z2.value, 1) + chi_term + rank_term;
  r.total = r.comb + r.analy;
  r.verdicts = torus_verdicts(r.total, r.bounds, prec);
  r.analy_in_ab = interval_within(r.analy, r.bounds.a, r.bounds.b);

  r.analy_formula_a = ldexp(r.z1.value_formula_a + r.z2.value, 1);
  r.total_formula_a = r.comb + r.analy_formula_a;
  r.verdicts_formula_a = torus_verdicts(r.total_formula_a, r.bounds, prec);

  if (with_oracles) {
    r.z1_fd = z1_finite_difference(ctx);
    r.z2_fd = z2_finite_difference(ctx);
  }
  return r;
}

}  // namespace ct
