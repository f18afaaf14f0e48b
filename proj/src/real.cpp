#include "conetorsion/real.hpp"

#include <cmath>
#include <stdexcept>

namespace ct {

mpfr_prec_t Precision::bits() const {
  if (digits < 1) throw std::invalid_argument("precision digits must be positive");
  // log2(10) = 3.32192809...; the rational 3322/1000 overshoots it.
  const long raw = (static_cast<long>(digits) * 3322 + 999) / 1000;
  return static_cast<mpfr_prec_t>(raw + kGuardBits);
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, other.bits());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::rounded(mpfr_prec_t bits, mpfr_rnd_t rnd) const {
  Real out(bits);
  mpfr_set(out.get(), value_, rnd);
  return out;
}

Real Real::infinity(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_set_inf(out.get(), 1);
  return out;
}

Real Real::power_of_two(long exponent, mpfr_prec_t bits) {
  Real out(bits);
  mpfr_set_ui_2exp(out.get(), 1, exponent, MPFR_RNDN);
  return out;
}

Real add_up(const Real& a, const Real& b) {
  Real out(kRadiusBits);
  mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDU);
  return out;
}

Real mul_up(const Real& a, const Real& b) {
  Real out(kRadiusBits);
  mpfr_mul(out.get(), a.get(), b.get(), MPFR_RNDU);
  return out;
}

Real div_up(const Real& a, const Real& b) {
  Real out(kRadiusBits);
  mpfr_div(out.get(), a.get(), b.get(), MPFR_RNDU);
  return out;
}

Real max_of(const Real& a, const Real& b) { return a < b ? b : a; }

Real ulp_bound(const Real& x) {
  if (x.is_zero() || !x.is_finite()) return Real(kRadiusBits);
  return Real::power_of_two(mpfr_get_exp(x.get()) - static_cast<long>(x.bits()));
}

std::string to_decimal(const Real& x, int digits, mpfr_rnd_t rnd) {
  if (mpfr_inf_p(x.get())) return x.sign() > 0 ? "inf" : "-inf";
  if (mpfr_nan_p(x.get())) return "nan";
  char* buffer = nullptr;
  const char* format = nullptr;
  switch (rnd) {
    case MPFR_RNDU: format = "%.*RUe"; break;
    case MPFR_RNDD: format = "%.*RDe"; break;
    default: format = "%.*RNe"; break;
  }
  if (mpfr_asprintf(&buffer, format, digits - 1, x.get()) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

}  // namespace ct
