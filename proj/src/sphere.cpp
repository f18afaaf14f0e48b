#include "conetorsion/sphere.hpp"

#include "conetorsion/combinatorics.hpp"
#include "conetorsion/errors.hpp"
#include "conetorsion/special.hpp"

namespace ct {
namespace {

void require_p(const char* fn, long p) {
  if (p < 1) throw DomainError(fn, "p must be >= 1, got " + std::to_string(p));
}

Enclosure odd_double_factorial(long p, const Precision& prec) { return Enclosure::from_rational(double_factorial(2 * p - 1), prec); }

// Σ_{q=p}^{2p-1} (2q-2p+1)^{-s}: the odd bases 1, 3, …, 2p-1.
Enclosure odd_power_sum(long p, const Enclosure& s, const Precision& prec) {
  Enclosure out = Enclosure::from_long(1, prec);
  for (long b = 3; b <= 2 * p - 1; b += 2) out += pow(Enclosure::from_long(b, prec), -s);
  return out;
}

Enclosure power_at_integer(long base, const Enclosure& s, const Precision& prec) { return pow(Enclosure::from_long(base, prec), -s); }

}  // namespace

const char* name(ReductionForm f) { return f == ReductionForm::as_stated ? "as_stated" : "corrected"; }

Enclosure sphere_volume(long p, const Precision& prec) {
  require_p("sphere_volume", p);
  return ldexp(pow(Enclosure::pi(prec), p), p + 1) / odd_double_factorial(p, prec);
}

Enclosure comb_anomaly_sphere(long p, const Precision& prec) {
  require_p("comb_anomaly_sphere", p);
  return -ldexp(log(sphere_volume(p, prec)), -1);
}

Enclosure analy_anomaly_sphere(long p, const Precision& prec) {
  require_p("analy_anomaly_sphere", p);
  static_assert(kSphereEulerCharacteristic == 2 && kSphereRankEnds == 1);
  const Enclosure zeta_prime_zero = -log_2pi_half(prec);
  Enclosure odd_logs = Enclosure::from_long(0, prec);
  for (long q = p; q <= 2 * p - 1; ++q) odd_logs += log(Enclosure::from_long(2 * q - 2 * p + 1, prec));
  return -kSphereRankEnds * log(odd_double_factorial(p, prec)) + kSphereEulerCharacteristic * Enclosure::log2(prec) / 4 - p * zeta_prime_zero + ldexp(odd_logs, -1);
}

Enclosure analy_anomaly_sphere_closed(long p, const Precision& prec) {
  require_p("analy_anomaly_sphere_closed", p);
  const Enclosure inner = ldexp(pow(Enclosure::pi(prec), p), p + 1) / odd_double_factorial(p, prec);
  return ldexp(log(inner), -1);
}

Enclosure reduced_zeta_sphere(long p, const Enclosure& s, const Precision& prec, ReductionForm form) {
  require_p("reduced_zeta_sphere", p);
  const Enclosure zr = riemann_zeta(s, prec);
  const long sign = form == ReductionForm::as_stated ? 1 : -1;
  return sign * 2 * p * zr - odd_power_sum(p, s, prec);
}

Enclosure brute_zeta_cex_sphere(long p, long q, const Enclosure& s, long n_terms, const Precision& prec) {
  const SphereSpec spec = SphereSpec::make(p, q);
  if (!(s.lower() > Enclosure::from_long(2 * p + 1, prec).upper())) throw DomainError("brute_zeta_cex_sphere", "needs s > 2p+1");
  if (n_terms < 2) throw DomainError("brute_zeta_cex_sphere", "needs at least two head terms");
  const Precision work = prec.widened(10);

  Enclosure head = Enclosure::from_long(0, work);
  for (long n = 1; n < n_terms; ++n) head += Enclosure::from_rational(multiplicity_sphere(spec, n), work) * power_at_integer(n + q, s, work);

  // m_{q,x-q} = Σ_l c_l x^l, so the tail over x ≥ N + q is Σ_l c_l ζ(s - l, N + q).
  const std::vector<mpq_class> coeffs = multiplicity_polynomial(spec);
  Enclosure tail = Enclosure::from_long(0, work);
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    if (coeffs[l] == 0) continue;
    tail += Enclosure::from_rational(coeffs[l], work) * hurwitz_zeta(s - static_cast<long>(l), mpq_class(n_terms + q), work);
  }
  return (head + tail).with_bits(prec.bits());
}

Enclosure alternating_brute_sum(long p, const Enclosure& s, long n_terms, const Precision& prec) {
  Enclosure out = Enclosure::from_long(0, prec);
  for (long q = 0; q <= 2 * p - 1; ++q) {
    const Enclosure term = brute_zeta_cex_sphere(p, q, s, n_terms, prec);
    out += (q % 2 == 0) ? -term : term;
  }
  return out;
}

ReductionCheck check_reduction(long p, const Enclosure& s, const Precision& prec, long n_terms) {
  ReductionCheck r{s, alternating_brute_sum(p, s, n_terms, prec), reduced_zeta_sphere(p, s, prec, ReductionForm::as_stated),
                   reduced_zeta_sphere(p, s, prec, ReductionForm::corrected)};
  r.holds_as_stated = (r.brute - r.as_stated).contains_zero();
  r.holds_corrected = (r.brute - r.corrected).contains_zero();
  return r;
}

SphereIdentities sphere_identities(long p) {
  require_p("sphere_identities", p);
  SphereIdentities id;
  id.alpha_top_sum = alpha_weighted_top_sum(p);
  id.alpha_top_sum_is_2p = id.alpha_top_sum == 2 * p;
  id.alpha_top_sum_is_p = id.alpha_top_sum == p;

  id.moments_vanish = true;
  for (long k = 0; k <= 2 * p - 2; ++k) id.moments_vanish = id.moments_vanish && alternating_moment(p, k) == 0;

  id.mu_completes_square = true;
  id.mu_shifts = true;
  for (long q = 0; q <= p - 1; ++q) {
    const SphereSpec spec = SphereSpec::make(p, q);
    for (long n = 1; n <= 50; ++n) {
      const mpq_class mu(2 * n + 2 * p - 1, 2);
      id.mu_completes_square = id.mu_completes_square && mu_squared(spec, n) == mu * mu;
      id.mu_shifts = id.mu_shifts && mu + spec.alpha == n + q && mu - spec.alpha == n + 2 * p - 1 - q;
    }
  }
  return id;
}

SphereAnomalyReport cancellation_check(long p, const Precision& prec, bool with_identities, const std::vector<Enclosure>& oracle_s) {
  require_p("cancellation_check", p);
  SphereAnomalyReport r;
  r.p = p;
  r.volume = sphere_volume(p, prec);
  r.comb = comb_anomaly_sphere(p, prec);
  r.analy = analy_anomaly_sphere(p, prec);
  r.analy_closed = analy_anomaly_sphere_closed(p, prec);
  r.total = r.comb + r.analy;
  r.analy_forms_agree = r.analy.overlaps(r.analy_closed);
  const Enclosure limit = Enclosure::from_decimal("1e-" + std::to_string(prec.digits / 2), prec);
  r.cancels = r.total.contains_zero() && r.total.radius() <= limit.lower();
  if (with_identities) r.identities = sphere_identities(p);
  for (const auto& s : oracle_s) r.reductions.push_back(check_reduction(p, s, prec));
  return r;
}

}  // namespace ct
