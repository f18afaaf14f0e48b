#pragma once

#include <string>
#include <vector>

#include "conetorsion/enclosure.hpp"
#include "conetorsion/zeta_lattice.hpp"

namespace ct {

enum class Verdict { holds_as_stated, holds_factor_corrected, fails };

const char* name(Verdict v);

/// One interpretation of a claimed sandwich lower ≤ computed ≤ upper.
/// `holds` requires interval containment, not just the centers.
struct Reading {
  std::string name;
  Enclosure lower;
  Enclosure upper;
  bool holds = false;
};

struct BoundCertificate {
  std::string claim;
  std::string paper_ref;
  Enclosure computed;
  /// First entry is the reading as stated; later entries are corrections.
  std::vector<Reading> readings;
  Verdict verdict = Verdict::fails;
  std::string notes;
};

/// lower ≤ computed ≤ upper with rigorous endpoints.
bool interval_within(const Enclosure& computed, const Enclosure& lower, const Enclosure& upper);

/// Builds the certificate and derives the verdict from its readings.
BoundCertificate make_certificate(std::string claim, std::string paper_ref, Enclosure computed, std::vector<Reading> readings, std::string notes = {});
Reading make_reading(std::string name, const Enclosure& computed, Enclosure lower, Enclosure upper);

struct BoundConstants {
  Enclosure c1, c2, c3, c4, c5;
};

BoundConstants constants_c1_c5(const Precision& prec);

/// S₁ = Σ_{j≥1} C(-½, j) 2^{-2j-1} ζ_R(2j+1).
Enclosure series_s1(const Precision& prec);
/// S₂ = Σ_{j≥1} 4^{-j}/(2j+1) · ζ₁((2j+1)/2).
Enclosure series_s2(const ZetaNHContext& ctx);
/// S₃ = Σ_{j≥1} 4^{-j}/(2j+1) · ζ₂((2j+1)/2).
Enclosure series_s3(const ZetaNHContext& ctx);

/// c₁ ≤ S₁ ≤ c₂ < 0.
BoundCertificate certify_prop_3_1(const Precision& prec);
/// c₃ ≤ S₂ ≤ c₄, and the factor-corrected 2c₃ ≤ S₂ ≤ 2c₄.
BoundCertificate certify_prop_3_2(const ZetaNHContext& ctx);
/// 0 ≤ S₃ ≤ c₅, and the factor-corrected 0 ≤ S₃ ≤ 2c₅.
BoundCertificate certify_prop_3_3(const ZetaNHContext& ctx);
/// c₁ + γ ≤ Rz₁ ≤ c₂ + γ, and the factor-corrected 2c₁ + γ ≤ Rz₁ ≤ 2c₂ + γ.
BoundCertificate certify_rz_sandwich(const ZetaNHContext& ctx);

/// Σ_{k≥1} 2^{-2k-1} ζ_R(2k+1)/(2k+1), optionally from k = 2.
Enclosure odd_zeta_sum(long start, const Precision& prec);
/// Σ_{k≥1} 2^{-2k-1} (ζ_R(2k+1) - 1)/(2k+1).
Enclosure odd_zeta_minus_one_sum(const Precision& prec);

/// The two odd-zeta closed sums and the generating identity at z = ¼, ½.
/// Each certificate carries the residual (series - closed form), checked
/// against ±10^{-⌊2D/3⌋}.
std::vector<BoundCertificate> certify_closed_sums(const Precision& prec);

/// All certificates in a fixed order.
std::vector<BoundCertificate> certify_all(const ZetaNHContext& ctx);

}  // namespace ct
