#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace ct {

/// Working precision, expressed in decimal digits. All binary sizes derive
/// from it so that a fixed digit count always maps to the same bit count.
struct Precision {
  int digits = 60;

  static constexpr int kGuardBits = 32;
  static constexpr int kMinDigits = 20;
  static constexpr int kMaxDigits = 500;

  /// Bits carried by every center value.
  mpfr_prec_t bits() const;

  /// Same precision with `extra` more decimal digits.
  Precision widened(int extra) const { return Precision{digits + extra}; }

  friend bool operator==(const Precision&, const Precision&) = default;
};

/// Bits used for radii. Radii are always rounded upward so a short mantissa
/// is enough.
inline constexpr mpfr_prec_t kRadiusBits = 64;

/// RAII value wrapper around an `mpfr_t`.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = kRadiusBits);
  Real(long value, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Copy of this value re-rounded to `bits` with the given rounding.
  Real rounded(mpfr_prec_t bits, mpfr_rnd_t rnd) const;

  static Real infinity(mpfr_prec_t bits = kRadiusBits);
  /// 2^exponent, exact.
  static Real power_of_two(long exponent, mpfr_prec_t bits = kRadiusBits);

  friend void swap(Real& a, Real& b) noexcept { mpfr_swap(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

/// Comparisons that never round.
inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

/// Directed-rounding helpers on radius-precision values (upper bounds).
Real add_up(const Real& a, const Real& b);
Real mul_up(const Real& a, const Real& b);
Real div_up(const Real& a, const Real& b);
Real max_of(const Real& a, const Real& b);

/// Upper bound for one unit in the last place of `x` at its own precision.
/// Zero maps to zero.
Real ulp_bound(const Real& x);

/// Decimal scientific notation with `digits` significant digits.
std::string to_decimal(const Real& x, int digits, mpfr_rnd_t rnd = MPFR_RNDN);

}  // namespace ct
