#pragma once

#include <optional>

#include "conetorsion/certify.hpp"
#include "conetorsion/enclosure.hpp"
#include "conetorsion/zeta_lattice.hpp"

namespace ct {

/// Rank-one flat bundle over T = S¹ × S¹.
inline constexpr long kTorusEulerCharacteristic = 0;
inline constexpr long kTorusRanks[3] = {1, 2, 1};
/// The co-exact eigenvalues n² + m² (n ≥ 1, m ≥ 0) carry multiplicity 4.
inline constexpr long kTorusMultiplicity = 4;

/// -log 2π: every harmonic basis form has norm √Vol(T) = 2π.
Enclosure comb_anomaly_torus(const Precision& prec);

/// Lower and upper reference bounds used by the torus estimates.
struct TorusBounds {
  /// (e/2)(e^{2π}/(e^{2π}-1) - 1), the bound on Σ K_0(2πm√(n²+¼)).
  Enclosure bessel_bound;
  /// Z₁ sandwich as stated: [-2·bessel_bound + ½ln(8 sinh(π/2)) - γ/2 - c₂ - c₅, ½ln(8 sinh(π/2)) - γ/2 - c₁].
  Enclosure z1_lower, z1_upper;
  /// Z₂ sandwich as stated: [-c₂ - c₄ - γ, -c₁ - c₃ - γ].
  Enclosure z2_lower, z2_upper;
  /// Interval for the analytic term.
  Enclosure a, b;
  /// 2(z1_lower + z2_lower) and 2(z1_upper + z2_upper).
  Enclosure a_collected, b_collected;
};

TorusBounds torus_bounds(const Precision& prec);

struct Z1Evaluation {
  Enclosure value;
  /// Finite part of ζ₂ at ½ (analytic series) and the fitted one.
  Enclosure rz;
  Enclosure rz_fit;
  Enclosure s3;
  Enclosure bessel_sum;
  bool bessel_within_bound = false;
  /// -formula_a - S₃: the value implied by the displayed finite-part formula.
  Enclosure value_formula_a;
  BoundCertificate sandwich;
  BoundCertificate sandwich_formula_a;
};

struct Z2Evaluation {
  Enclosure value;
  Enclosure rz;
  Enclosure s2;
  BoundCertificate sandwich;
};

/// Z₁(0) = -Rz ζ₂ - S₃.
Z1Evaluation z1_at_zero(const ZetaNHContext& ctx);
/// Z₂(0) = -Rz ζ₁ - S₂.
Z2Evaluation z2_at_zero(const ZetaNHContext& ctx);

/// d/ds at 0 of Σ_{j odd} 2 C(-s,j) 2^{-j} ζ₁((s+j)/2), i.e. of ζ₁⁺ - ζ₁⁻, by
/// Richardson-extrapolated central differences. The j = 1 term goes through
/// the Bessel continuation. Radius: spread of the last two extrapolants.
Enclosure z2_finite_difference(const ZetaNHContext& ctx);
/// Same with ζ₂, i.e. of ζ₂⁺ - ζ₂⁻.
Enclosure z1_finite_difference(const ZetaNHContext& ctx);

struct TorusVerdicts {
  bool negative = false;
  bool in_window = false;  ///< inside (-4/5, -1/4)
  bool in_ab = false;      ///< inside [A - ln 2π, B - ln 2π]
};

TorusVerdicts torus_verdicts(const Enclosure& total, const TorusBounds& bounds, const Precision& prec);

struct DecompositionCheck {
  int sign = 1;
  Enclosure s;
  /// Σ_{n≥1, m≥0} 4(√(n²+m²+¼) ± ½)^{-s} over the raw spectrum.
  Enclosure raw;
  /// 4ζ₂^±(s) + 4ζ₁^±(s) from the binomial expansions.
  Enclosure split;
  bool holds = false;
};

/// s must exceed 2; radius sets the lattice cutoff of the raw sum.
DecompositionCheck check_decomposition(int sign, const Enclosure& s, const ZetaNHContext& ctx, long radius = 400);

struct TorusAnomalyReport {
  Enclosure comb;
  Z1Evaluation z1;
  Z2Evaluation z2;
  Enclosure analy;
  Enclosure total;
  TorusBounds bounds;
  TorusVerdicts verdicts;
  bool analy_in_ab = false;
  /// The same pipeline with Z₁ from the displayed finite-part formula.
  Enclosure analy_formula_a;
  Enclosure total_formula_a;
  TorusVerdicts verdicts_formula_a;
  std::optional<Enclosure> z1_fd;
  std::optional<Enclosure> z2_fd;
};

TorusAnomalyReport total_anomaly_torus(const ZetaNHContext& ctx, bool with_oracles = false);

}  // namespace ct
