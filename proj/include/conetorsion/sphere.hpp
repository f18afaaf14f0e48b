#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "conetorsion/enclosure.hpp"

namespace ct {

/// Rank-one flat bundle over S^{2p}: χ = 2, r_0 = r_{2p} = 1.
inline constexpr long kSphereEulerCharacteristic = 2;
inline constexpr long kSphereRankEnds = 1;

/// Vol(S^{2p}) = 2^{p+1} π^p / (2p-1)!!.
Enclosure sphere_volume(long p, const Precision& prec);

/// -½ log Vol(S^{2p}); the torsion subgroups are trivial.
Enclosure comb_anomaly_sphere(long p, const Precision& prec);

/// Termwise form -log(2p-1)!! + (χ/4) log 2 - p ζ'_R(0) + ½ Σ_{q=p}^{2p-1} log(2q-2p+1).
Enclosure analy_anomaly_sphere(long p, const Precision& prec);
/// ½ log(2^{p+1} π^p / (2p-1)!!).
Enclosure analy_anomaly_sphere_closed(long p, const Precision& prec);

enum class ReductionForm {
  as_stated,  ///< 2p ζ_R(s) - Σ_{q=p}^{2p-1} (2q-2p+1)^{-s}
  corrected,  ///< -2p ζ_R(s) - Σ_{q=p}^{2p-1} (2q-2p+1)^{-s}
};

const char* name(ReductionForm f);

/// Closed form of Σ_q (-1)^{q+1} ζ_cex(s; α_q). PoleError at s = 1.
Enclosure reduced_zeta_sphere(long p, const Enclosure& s, const Precision& prec, ReductionForm form = ReductionForm::as_stated);

/// Σ_{n≥1} m_{q,n} (n+q)^{-s} for s > 2p+1: exact multiplicities for n < N,
/// the multiplicity polynomial against Hurwitz zeta values for the tail.
Enclosure brute_zeta_cex_sphere(long p, long q, const Enclosure& s, long n_terms, const Precision& prec);
/// Σ_{q=0}^{2p-1} (-1)^{q+1} brute_zeta_cex_sphere(p, q, s, N).
Enclosure alternating_brute_sum(long p, const Enclosure& s, long n_terms, const Precision& prec);

struct ReductionCheck {
  Enclosure s;
  Enclosure brute;
  Enclosure as_stated;
  Enclosure corrected;
  /// brute - form contains zero.
  bool holds_as_stated = false;
  bool holds_corrected = false;
};

ReductionCheck check_reduction(long p, const Enclosure& s, const Precision& prec, long n_terms = 64);

/// Exact-arithmetic facts behind the reduction, for 1 ≤ p.
struct SphereIdentities {
  mpq_class alpha_top_sum;
  bool alpha_top_sum_is_2p = false;
  bool alpha_top_sum_is_p = false;
  /// Σ_q (-1)^q C(2p-1,q) q^k = 0 for 0 ≤ k ≤ 2p-2.
  bool moments_vanish = false;
  /// μ_{q,n} = n + p - ½ for q ≤ p-1, n ≤ 50.
  bool mu_completes_square = false;
  /// μ + α = n + q and μ - α = n + 2p - 1 - q on the same range.
  bool mu_shifts = false;
};

SphereIdentities sphere_identities(long p);

struct SphereAnomalyReport {
  long p = 1;
  Enclosure volume;
  Enclosure comb;
  Enclosure analy;
  Enclosure analy_closed;
  Enclosure total;
  /// Termwise and closed analytic forms overlap.
  bool analy_forms_agree = false;
  /// total contains 0 with radius ≤ 10^{-⌊D/2⌋}.
  bool cancels = false;
  std::optional<SphereIdentities> identities;
  std::vector<ReductionCheck> reductions;
};

/// Cancellation report; `with_identities` adds the exact identities and
/// `oracle_s` adds reduction checks at the given exponents.
SphereAnomalyReport cancellation_check(long p, const Precision& prec, bool with_identities = false, const std::vector<Enclosure>& oracle_s = {});

}  // namespace ct
