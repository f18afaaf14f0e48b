#include "conetorsion/enclosure.hpp"

#include <algorithm>
#include <stdexcept>

#include "conetorsion/errors.hpp"

namespace ct {
namespace {

Real abs_up(const Real& x) {
  Real out(kRadiusBits);
  mpfr_abs(out.get(), x.get(), MPFR_RNDU);
  return out;
}

// Adds one ulp of `c` to `r` when the operation that produced `c` was inexact.
Real with_rounding(Real r, const Real& c, int ternary) {
  if (ternary != 0) r = add_up(r, ulp_bound(c));
  return r;
}

std::string interval_text(const Enclosure& x) { return "[" + to_decimal(x.lower(), 17, MPFR_RNDD) + ", " + to_decimal(x.upper(), 17, MPFR_RNDU) + "]"; }

}  // namespace

Enclosure::Enclosure(mpfr_prec_t bits) : center_(bits), radius_(kRadiusBits) {}

Enclosure::Enclosure(Real center, Real radius) : center_(std::move(center)), radius_(std::move(radius)) {
  if (radius_.bits() != kRadiusBits) radius_ = radius_.rounded(kRadiusBits, MPFR_RNDU);
  if (radius_.sign() < 0 || mpfr_nan_p(radius_.get())) throw std::invalid_argument("enclosure radius must be non-negative");
}

Enclosure Enclosure::from_long(long value, const Precision& prec) {
  Real c(prec.bits());
  const int t = mpfr_set_si(c.get(), value, MPFR_RNDN);
  return Enclosure(c, with_rounding(Real(kRadiusBits), c, t));
}

Enclosure Enclosure::from_ratio(long num, long den, const Precision& prec) {
  return from_rational(mpq_class(num, den), prec);
}

Enclosure Enclosure::from_rational(const mpq_class& q, const Precision& prec) {
  mpq_class canonical(q);
  canonical.canonicalize();
  Real c(prec.bits());
  const int t = mpfr_set_q(c.get(), canonical.get_mpq_t(), MPFR_RNDN);
  return Enclosure(c, with_rounding(Real(kRadiusBits), c, t));
}

Enclosure Enclosure::from_integer(const mpz_class& z, const Precision& prec) {
  Real c(prec.bits());
  const int t = mpfr_set_z(c.get(), z.get_mpz_t(), MPFR_RNDN);
  return Enclosure(c, with_rounding(Real(kRadiusBits), c, t));
}

Enclosure Enclosure::from_decimal(const std::string& text, const Precision& prec) {
  Real probe(kRadiusBits);
  char* end = nullptr;
  mpfr_strtofr(probe.get(), text.c_str(), &end, 10, MPFR_RNDN);
  if (text.empty() || end == text.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  }
  Real lo(prec.bits());
  Real hi(prec.bits());
  mpfr_strtofr(lo.get(), text.c_str(), nullptr, 10, MPFR_RNDD);
  mpfr_strtofr(hi.get(), text.c_str(), nullptr, 10, MPFR_RNDU);
  return from_bounds(lo, hi, prec.bits());
}

Enclosure Enclosure::from_bounds(const Real& lo, const Real& hi, mpfr_prec_t bits) {
  if (hi < lo) throw std::invalid_argument("from_bounds: lo > hi");
  Real c(bits);
  mpfr_add(c.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(c.get(), c.get(), 1, MPFR_RNDN);
  Real up(kRadiusBits);
  Real down(kRadiusBits);
  mpfr_sub(up.get(), hi.get(), c.get(), MPFR_RNDU);
  mpfr_sub(down.get(), c.get(), lo.get(), MPFR_RNDU);
  Real r = max_of(up, down);
  if (r.sign() < 0) r = Real(kRadiusBits);
  return Enclosure(c, r);
}

Enclosure Enclosure::pi(const Precision& prec) {
  Real lo(prec.bits());
  Real hi(prec.bits());
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return from_bounds(lo, hi, prec.bits());
}

Enclosure Enclosure::log2(const Precision& prec) {
  Real lo(prec.bits());
  Real hi(prec.bits());
  mpfr_const_log2(lo.get(), MPFR_RNDD);
  mpfr_const_log2(hi.get(), MPFR_RNDU);
  return from_bounds(lo, hi, prec.bits());
}

Real Enclosure::lower() const {
  Real out(bits());
  mpfr_sub(out.get(), center_.get(), radius_.get(), MPFR_RNDD);
  return out;
}

Real Enclosure::upper() const {
  Real out(bits());
  mpfr_add(out.get(), center_.get(), radius_.get(), MPFR_RNDU);
  return out;
}

Real Enclosure::magnitude() const { return add_up(abs_up(center_), radius_); }

Real Enclosure::mignitude() const {
  Real out(kRadiusBits);
  Real a(kRadiusBits);
  mpfr_abs(a.get(), center_.get(), MPFR_RNDD);
  mpfr_sub(out.get(), a.get(), radius_.get(), MPFR_RNDD);
  if (out.sign() < 0) return Real(kRadiusBits);
  return out;
}

bool Enclosure::contains(const Enclosure& other) const { return lower() <= other.lower() && other.upper() <= upper(); }

bool Enclosure::contains(const Real& x) const { return lower() <= x && x <= upper(); }

bool Enclosure::contains_zero() const { return lower().sign() <= 0 && upper().sign() >= 0; }

bool Enclosure::overlaps(const Enclosure& other) const { return lower() <= other.upper() && other.lower() <= upper(); }

bool Enclosure::certainly_positive() const { return lower().sign() > 0; }

bool Enclosure::certainly_negative() const { return upper().sign() < 0; }

Enclosure Enclosure::inflated(const Real& extra) const { return Enclosure(center_, add_up(radius_, abs_up(extra))); }

Enclosure Enclosure::with_bits(mpfr_prec_t target) const {
  Real c(target);
  const int t = mpfr_set(c.get(), center_.get(), MPFR_RNDN);
  return Enclosure(c, with_rounding(radius_, c, t));
}

std::pair<std::string, std::string> Enclosure::decimal_parts(int digits) const {
  std::string c = to_decimal(center_, digits);
  Real printed = radius_;
  if (!center_.is_zero()) {
    const auto epos = c.find('e');
    const long exponent = std::stol(c.substr(epos + 1));
    // One unit in the last printed decimal place bounds the conversion error.
    Real unit(kRadiusBits);
    mpfr_set_si(unit.get(), exponent - digits + 1, MPFR_RNDU);
    mpfr_exp10(unit.get(), unit.get(), MPFR_RNDU);
    printed = add_up(printed, unit);
  }
  return {c, to_decimal(printed, 3, MPFR_RNDU)};
}

std::string Enclosure::to_string(int digits) const {
  auto [c, r] = decimal_parts(digits);
  return c + " ± " + r;
}

Enclosure Enclosure::operator-() const {
  Real c(bits());
  mpfr_neg(c.get(), center_.get(), MPFR_RNDN);
  return Enclosure(c, radius_);
}

Enclosure& Enclosure::operator+=(const Enclosure& b) { return *this = *this + b; }
Enclosure& Enclosure::operator-=(const Enclosure& b) { return *this = *this - b; }
Enclosure& Enclosure::operator*=(const Enclosure& b) { return *this = *this * b; }
Enclosure& Enclosure::operator/=(const Enclosure& b) { return *this = *this / b; }

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  Real c(std::max(a.bits(), b.bits()));
  const int t = mpfr_add(c.get(), a.center().get(), b.center().get(), MPFR_RNDN);
  return Enclosure(c, with_rounding(add_up(a.radius(), b.radius()), c, t));
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  Real c(std::max(a.bits(), b.bits()));
  const int t = mpfr_sub(c.get(), a.center().get(), b.center().get(), MPFR_RNDN);
  return Enclosure(c, with_rounding(add_up(a.radius(), b.radius()), c, t));
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  Real c(std::max(a.bits(), b.bits()));
  const int t = mpfr_mul(c.get(), a.center().get(), b.center().get(), MPFR_RNDN);
  Real r = mul_up(abs_up(a.center()), b.radius());
  r = add_up(r, mul_up(abs_up(b.center()), a.radius()));
  r = add_up(r, mul_up(a.radius(), b.radius()));
  return Enclosure(c, with_rounding(r, c, t));
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  const Real denom = b.mignitude();
  if (denom.is_zero()) throw DomainError("divide", "divisor interval " + interval_text(b) + " contains 0");
  Real c(std::max(a.bits(), b.bits()));
  const int t = mpfr_div(c.get(), a.center().get(), b.center().get(), MPFR_RNDN);
  const Real quotient_mag = add_up(abs_up(c), ulp_bound(c));
  Real r = div_up(add_up(a.radius(), mul_up(quotient_mag, b.radius())), denom);
  return Enclosure(c, with_rounding(r, c, t));
}

Enclosure operator+(const Enclosure& a, long b) { return a + Enclosure::from_long(b, Precision{}).with_bits(a.bits()); }
Enclosure operator+(long a, const Enclosure& b) { return b + a; }
Enclosure operator-(const Enclosure& a, long b) { return a - Enclosure::from_long(b, Precision{}).with_bits(a.bits()); }
Enclosure operator-(long a, const Enclosure& b) { return Enclosure::from_long(a, Precision{}).with_bits(b.bits()) - b; }
Enclosure operator*(const Enclosure& a, long b) { return a * Enclosure::from_long(b, Precision{}).with_bits(a.bits()); }
Enclosure operator*(long a, const Enclosure& b) { return b * a; }
Enclosure operator/(const Enclosure& a, long b) { return a / Enclosure::from_long(b, Precision{}).with_bits(a.bits()); }
Enclosure operator/(long a, const Enclosure& b) { return Enclosure::from_long(a, Precision{}).with_bits(b.bits()) / b; }

Enclosure ldexp(const Enclosure& a, long e) {
  Real c(a.bits());
  mpfr_mul_2si(c.get(), a.center().get(), e, MPFR_RNDN);
  Real r(kRadiusBits);
  mpfr_mul_2si(r.get(), a.radius().get(), e, MPFR_RNDU);
  return Enclosure(c, r);
}

Enclosure hull(const Enclosure& a, const Enclosure& b) {
  const mpfr_prec_t bits = std::max(a.bits(), b.bits());
  Real lo = a.lower() < b.lower() ? a.lower() : b.lower();
  Real hi = a.upper() > b.upper() ? a.upper() : b.upper();
  return Enclosure::from_bounds(lo, hi, bits);
}

Enclosure intersect(const Enclosure& a, const Enclosure& b) {
  if (!a.overlaps(b)) throw std::logic_error("intersect: disjoint enclosures " + a.to_string(20) + " and " + b.to_string(20));
  const mpfr_prec_t bits = std::max(a.bits(), b.bits());
  Real lo = a.lower() > b.lower() ? a.lower() : b.lower();
  Real hi = a.upper() < b.upper() ? a.upper() : b.upper();
  return Enclosure::from_bounds(lo, hi, bits);
}

const char* name(ElementaryFn f) {
  switch (f) {
    case ElementaryFn::exp: return "exp";
    case ElementaryFn::log: return "log";
    case ElementaryFn::sqrt: return "sqrt";
    case ElementaryFn::atanh: return "atanh";
    case ElementaryFn::sinh: return "sinh";
    case ElementaryFn::cosh: return "cosh";
    case ElementaryFn::log1p: return "log1p";
  }
  return "?";
}

Enclosure enclose_fn(ElementaryFn f, const Enclosure& x) {
  const mpfr_prec_t bits = x.bits();
  const Real lo = x.lower();
  const Real hi = x.upper();
  auto reject = [&](const char* why) { throw DomainError(name(f), std::string(why) + ", got " + interval_text(x)); };
  using Fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  Fn increasing = nullptr;
  switch (f) {
    case ElementaryFn::exp: increasing = mpfr_exp; break;
    case ElementaryFn::sinh: increasing = mpfr_sinh; break;
    case ElementaryFn::log:
      if (lo.sign() <= 0) reject("needs a strictly positive interval");
      increasing = mpfr_log;
      break;
    case ElementaryFn::sqrt:
      if (lo.sign() <= 0) reject("needs a strictly positive interval");
      increasing = mpfr_sqrt;
      break;
    case ElementaryFn::log1p:
      if (!(lo > Real(-1, kRadiusBits))) reject("needs an interval inside (-1, inf)");
      increasing = mpfr_log1p;
      break;
    case ElementaryFn::atanh:
      if (!(lo > Real(-1, kRadiusBits)) || !(hi < Real(1, kRadiusBits))) reject("needs an interval inside (-1, 1)");
      increasing = mpfr_atanh;
      break;
    case ElementaryFn::cosh: {
      Real flo(bits);
      Real fhi(bits);
      if (lo.sign() >= 0) {
        mpfr_cosh(flo.get(), lo.get(), MPFR_RNDD);
        mpfr_cosh(fhi.get(), hi.get(), MPFR_RNDU);
      } else if (hi.sign() <= 0) {
        mpfr_cosh(flo.get(), hi.get(), MPFR_RNDD);
        mpfr_cosh(fhi.get(), lo.get(), MPFR_RNDU);
      } else {
        mpfr_set_ui(flo.get(), 1, MPFR_RNDN);
        Real a(bits);
        Real b(bits);
        mpfr_cosh(a.get(), lo.get(), MPFR_RNDU);
        mpfr_cosh(b.get(), hi.get(), MPFR_RNDU);
        fhi = max_of(a, b);
      }
      return Enclosure::from_bounds(flo, fhi, bits);
    }
  }
  Real flo(bits);
  Real fhi(bits);
  increasing(flo.get(), lo.get(), MPFR_RNDD);
  increasing(fhi.get(), hi.get(), MPFR_RNDU);
  return Enclosure::from_bounds(flo, fhi, bits);
}

Enclosure abs(const Enclosure& x) {
  if (x.lower().sign() >= 0) return x;
  if (x.upper().sign() <= 0) return -x;
  Real hi = max_of(x.upper(), abs_up(x.lower()).rounded(x.bits(), MPFR_RNDU));
  return Enclosure::from_bounds(Real(x.bits()), hi, x.bits());
}

Enclosure square(const Enclosure& x) {
  const mpfr_prec_t bits = x.bits();
  const Enclosure a = abs(x);
  Real lo = a.lower();
  if (lo.sign() < 0) lo = Real(bits);
  const Real hi = a.upper();
  Real flo(bits);
  Real fhi(bits);
  mpfr_sqr(flo.get(), lo.get(), MPFR_RNDD);
  mpfr_sqr(fhi.get(), hi.get(), MPFR_RNDU);
  return Enclosure::from_bounds(flo, fhi, bits);
}

Enclosure pow(const Enclosure& x, long n) {
  if (n < 0) return 1L / pow(x, -n);
  Enclosure result = Enclosure::from_long(1, Precision{}).with_bits(x.bits());
  Enclosure base = x;
  bool first = true;
  while (n > 0) {
    if (n & 1) result = first ? base : result * base;
    if (n & 1) first = false;
    n >>= 1;
    if (n > 0) base = square(base);
  }
  return result;
}

Enclosure pow(const Enclosure& x, const Enclosure& y) { return exp(y * log(x)); }

}  // namespace ct
