#pragma once

#include <gmpxx.h>

#include "conetorsion/enclosure.hpp"
#include "conetorsion/kernels.hpp"

namespace ct {

// Notation used throughout:
//   ζ₁(s) = Σ_{n≥1} (n² + ¼)^{-s}
//   ζ₂(s) = Σ_{n,m≥1} (n² + m² + ¼)^{-s}
//   ζ₁^±(s) = Σ_{n≥1} (√(n² + ¼) ± ½)^{-s},  ζ₂^± analogously.

enum class ContinuationMethod {
  automatic,
  direct,             ///< truncated lattice sum with an integral-comparison tail
  binomial_in_zetaR,  ///< expansion in ζ_R (and β for the double series)
  bessel_poisson,     ///< Poisson summation in one lattice direction
};

const char* name(ContinuationMethod m);

struct ZetaNHContext {
  ContinuationMethod method = ContinuationMethod::automatic;
  Precision prec{60};
  /// Cap on the binomial j-series; 0 selects max(200, bits).
  long j_cap = 0;
  /// Cap on the one-dimensional lattice cutoff N of direct sums.
  long lattice_cap = 1'000'000;
  /// Cap on the radius R of two-dimensional direct sums.
  long radius_cap = 400;
  /// Cap on the Bessel cutoff (single-sum index, or lattice radius for pairs).
  long bessel_cap = 4096;
  Execution execution = Execution::parallel;

  long effective_j_cap() const;
};

/// A value together with the method and truncation that produced it.
struct Evaluation {
  Enclosure value;
  ContinuationMethod method = ContinuationMethod::automatic;
  /// Truncation actually used: J for expansions, N or R for direct sums,
  /// M or R for Bessel sums.
  long truncation = 0;
};

/// Laurent data f(s) = ru/(s - location) + rz + O(s - location).
struct FinitePart {
  mpq_class location{1, 2};
  Enclosure ru;
  Enclosure rz;
};

/// ζ₁(s) for real s avoiding the poles ½, -½, -3/2, … (PoleError).
Evaluation zeta_nh(const Enclosure& s, const ZetaNHContext& ctx);

/// ζ₁'(0) from the s-derivative of the binomial expansion.
Enclosure zeta_nh_deriv_at_zero(const ZetaNHContext& ctx);
/// -2 ln 2 - ln sinh(π/2).
Enclosure zeta_nh_deriv_at_zero_closed(const Precision& prec);
/// Σ_{j≥1} (-1)^j 4^{-j} ζ_R(2j)/j.
Enclosure even_zeta_log_series(const Precision& prec);

/// Σ_{j≥1} C(-½, j) 4^{-j} ζ_R(2j+1).
Enclosure binomial_odd_zeta_sum(const Precision& prec);

/// Laurent data of ζ₁ at ½. `method` selects the binomial series
/// (default) or the Bessel form -1 + 2 ln 2 + 2 Σ_m K_0(πm).
FinitePart zeta_nh_finite_part(const ZetaNHContext& ctx);

/// ζ₁^±(s), s > 1, by direct summation (the brute-force side).
Evaluation zeta_shifted_nh(int sign, const Enclosure& s, const ZetaNHContext& ctx);
/// ζ₁^±(s) = Σ_j C(-s, j) (±2)^{-j} ζ₁((s+j)/2).
Evaluation zeta_shifted_nh_expansion(int sign, const Enclosure& s, const ZetaNHContext& ctx);

/// ζ₂(s) for s > 1. Automatic selection uses the direct sum when its radius
/// cap suffices and the binomial expansion otherwise.
Evaluation zeta_double(const Enclosure& s, const ZetaNHContext& ctx);

/// Continuation of ζ₂. The Bessel form (default) needs s ⊂ [0, 1] without
/// ½ and 1; the binomial form works on any interval avoiding its poles
/// (s = 1 - j and ½ - j).
Evaluation zeta_double_continued(const Enclosure& s, const ZetaNHContext& ctx);

/// ζ₂^±(s), s > 2, direct double sum.
Evaluation zeta_shifted_double(int sign, const Enclosure& s, const ZetaNHContext& ctx);
/// Σ_j C(-s, j) (±2)^{-j} ζ₂((s+j)/2).
Evaluation zeta_shifted_double_expansion(int sign, const Enclosure& s, const ZetaNHContext& ctx);

/// Laurent data of ζ₂ at ½, from three independent routes.
struct DoubleFinitePart {
  /// Richardson-extrapolated fit of the Bessel continuation at ½ ± h/2, ½ ± h/4;
  /// the radius includes the spread against the h, h/2 extrapolant.
  FinitePart fit;
  /// Closed series: ζ_R(½)β(½) - γ + Σ_{j≥1} C(-½, j) 4^{-j} Q(½ + j), ru = -½.
  FinitePart analytic;
  /// 2ΣK_0(2πm√(n²+¼)) - (3/2) ln 2 - ½ ln sinh(π/2) + γ/2 + Σ_{j≥1} C(-½,j) ζ_R(2j+1) 2^{-2j-1}.
  Enclosure formula_a;
  /// fit.rz - formula_a.
  Enclosure discrepancy;
  /// Whether the fitted ru interval contains 0.
  bool ru_consistent_with_zero = false;
  /// Σ_{n,m≥1} K_0(2πm√(n²+¼)).
  Enclosure bessel_sum;
  /// Dyadic step h of the fit.
  Enclosure step;
};

DoubleFinitePart zeta_double_finite_part(const ZetaNHContext& ctx);

/// Σ_{n,m≥1} (m/μ_n)^ν K_ν(2πm μ_n), μ_n = √(n² + ¼), for ν ⊂ [-½, ½].
/// Terms are evaluated according to ctx.execution and summed in a fixed order.
Evaluation bessel_pair_sum(const Enclosure& nu, const ZetaNHContext& ctx);

/// Σ_{n,m≥1} K_0(2πm√(n² + ¼)).
Enclosure bessel_lattice_sum(const ZetaNHContext& ctx);

/// Q(w) = Σ_{n,m≥1} (n² + m²)^{-w} = ζ_R(w)β(w) - ζ_R(2w).
Enclosure quadrant_zeta(const Enclosure& w, const Precision& prec);

}  // namespace ct
