#pragma once

#include <gmpxx.h>

#include <string>

#include "conetorsion/real.hpp"

namespace ct {

/// A real number known to lie in [center - radius, center + radius].
///
/// Centers carry the working precision, radii are short and rounded up.
/// Every operation rounds its center to nearest and adds one ulp of the
/// result to the propagated radius whenever the rounding was inexact, so the
/// enclosure property survives arbitrary compositions. Elementary functions
/// map the two endpoints through correctly rounded MPFR calls with outward
/// rounding, which keeps them inclusion-monotone.
class Enclosure {
 public:
  explicit Enclosure(mpfr_prec_t bits = kRadiusBits);
  Enclosure(Real center, Real radius);

  static Enclosure from_long(long value, const Precision& prec);
  static Enclosure from_ratio(long num, long den, const Precision& prec);
  static Enclosure from_rational(const mpq_class& q, const Precision& prec);
  static Enclosure from_integer(const mpz_class& z, const Precision& prec);
  /// Parses a decimal literal such as "0.75" or "-1e-8"; the conversion
  /// error is absorbed into the radius.
  static Enclosure from_decimal(const std::string& text, const Precision& prec);
  /// Smallest midpoint-radius enclosure of [lo, hi] at `bits`.
  static Enclosure from_bounds(const Real& lo, const Real& hi, mpfr_prec_t bits);
  static Enclosure pi(const Precision& prec);
  static Enclosure log2(const Precision& prec);

  const Real& center() const { return center_; }
  const Real& radius() const { return radius_; }
  mpfr_prec_t bits() const { return center_.bits(); }

  /// Rigorous endpoints (rounded outward, at center precision).
  Real lower() const;
  Real upper() const;
  /// Upper bound for max |x| over the enclosure.
  Real magnitude() const;
  /// Lower bound for min |x| over the enclosure (zero if it straddles 0).
  Real mignitude() const;

  bool is_exact() const { return radius_.is_zero(); }
  bool contains(const Enclosure& other) const;
  bool contains(const Real& x) const;
  bool contains_zero() const;
  bool overlaps(const Enclosure& other) const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  /// Same center, radius grown by `extra`.
  Enclosure inflated(const Real& extra) const;
  /// Same value re-rounded to `bits`.
  Enclosure with_bits(mpfr_prec_t bits) const;

  /// "center ± radius" with `digits` significant digits in the center. The
  /// decimal rounding of the center is folded into the printed radius.
  std::string to_string(int digits) const;
  /// Center and radius as decimal strings, same rounding rule as to_string.
  std::pair<std::string, std::string> decimal_parts(int digits) const;

  Enclosure operator-() const;
  Enclosure& operator+=(const Enclosure& b);
  Enclosure& operator-=(const Enclosure& b);
  Enclosure& operator*=(const Enclosure& b);
  Enclosure& operator/=(const Enclosure& b);

 private:
  Real center_;
  Real radius_;
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
/// Rejects divisors whose interval contains zero.
Enclosure operator/(const Enclosure& a, const Enclosure& b);

Enclosure operator+(const Enclosure& a, long b);
Enclosure operator+(long a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, long b);
Enclosure operator-(long a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, long b);
Enclosure operator*(long a, const Enclosure& b);
Enclosure operator/(const Enclosure& a, long b);
Enclosure operator/(long a, const Enclosure& b);
/// Exact scaling by 2^e.
Enclosure ldexp(const Enclosure& a, long e);

Enclosure hull(const Enclosure& a, const Enclosure& b);
/// Intersection of two enclosures known to hold the same value.
/// Throws std::logic_error if they are disjoint.
Enclosure intersect(const Enclosure& a, const Enclosure& b);

enum class ElementaryFn { exp, log, sqrt, atanh, sinh, cosh, log1p };

const char* name(ElementaryFn f);

/// Inclusion-monotone image of `x` under `f`. Throws DomainError when the
/// interval leaves the domain (log/sqrt need strictly positive intervals,
/// atanh needs an interval inside (-1, 1), log1p needs x > -1).
Enclosure enclose_fn(ElementaryFn f, const Enclosure& x);

inline Enclosure exp(const Enclosure& x) { return enclose_fn(ElementaryFn::exp, x); }
inline Enclosure log(const Enclosure& x) { return enclose_fn(ElementaryFn::log, x); }
inline Enclosure sqrt(const Enclosure& x) { return enclose_fn(ElementaryFn::sqrt, x); }
inline Enclosure atanh(const Enclosure& x) { return enclose_fn(ElementaryFn::atanh, x); }
inline Enclosure sinh(const Enclosure& x) { return enclose_fn(ElementaryFn::sinh, x); }
inline Enclosure cosh(const Enclosure& x) { return enclose_fn(ElementaryFn::cosh, x); }
inline Enclosure log1p(const Enclosure& x) { return enclose_fn(ElementaryFn::log1p, x); }

Enclosure abs(const Enclosure& x);
Enclosure square(const Enclosure& x);
Enclosure pow(const Enclosure& x, long n);
/// x^y = exp(y log x), x strictly positive.
Enclosure pow(const Enclosure& x, const Enclosure& y);

}  // namespace ct
