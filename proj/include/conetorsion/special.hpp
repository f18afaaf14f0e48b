#pragma once

#include <gmpxx.h>

#include "conetorsion/enclosure.hpp"
#include "conetorsion/series.hpp"

namespace ct {

/// Exact Bernoulli number B_n (B_1 = -1/2). Cached, thread-safe.
const mpq_class& bernoulli(int n);

/// Hurwitz zeta ζ(s, a) = Σ_{n ≥ 0} (n + a)^{-s} for a > 0 rational, by
/// Euler–Maclaurin summation with a rigorous remainder. Valid for any real
/// interval s that avoids 1.
Enclosure hurwitz_zeta(const Enclosure& s, const mpq_class& a, const Precision& prec);

/// Riemann zeta on real intervals avoiding the pole at 1 (PoleError there).
/// Point arguments are memoized per precision.
Enclosure riemann_zeta(const Enclosure& s, const Precision& prec);
Enclosure riemann_zeta(long s, const Precision& prec);

/// Dirichlet beta β(s) = Σ_{n ≥ 0} (-1)^n (2n+1)^{-s}, real intervals
/// avoiding 1. Point arguments are memoized.
Enclosure dirichlet_beta(const Enclosure& s, const Precision& prec);

/// Euler's constant γ.
Enclosure euler_gamma(const Precision& prec);
/// ½ ln(2π); ζ'_R(0) = -½ ln(2π).
Enclosure log_2pi_half(const Precision& prec);

enum class SpecialConstantTag { euler_gamma, log_2pi_half };

struct SpecialConstant {
  SpecialConstantTag tag;
  Enclosure value;
};

SpecialConstant special_constant(SpecialConstantTag tag, const Precision& prec);
const char* name(SpecialConstantTag tag);

/// Γ(x) for an interval x > 0. DomainError otherwise.
Enclosure gamma_fn(const Enclosure& x, const Precision& prec);
/// Γ(x) for real intervals free of non-positive integers.
Enclosure gamma_real(const Enclosure& x, const Precision& prec);
/// 1/Γ(x), entire; any real interval.
Enclosure rgamma(const Enclosure& x, const Precision& prec);
/// ln Γ(x) for x > 0 (Stirling series after upward shift).
Enclosure log_gamma(const Enclosure& x, const Precision& prec);

/// ψ(j) = -γ + H_{j-1} for integer j ≥ 1.
Enclosure digamma_int(long j, const Precision& prec);

/// K_ν(x) = ∫_0^∞ e^{-x cosh t} cosh(νt) dt for x > 0, by the trapezoidal
/// rule with rigorous discretization and truncation bounds. ν may be any
/// real interval (K_{-ν} = K_ν).
Enclosure bessel_k(const Enclosure& nu, const Enclosure& x, const Precision& prec);
/// Same, with an explicit absolute error target.
Enclosure bessel_k(const Enclosure& nu, const Enclosure& x, const Precision& prec, const Real& target);

/// k!! for odd k ≥ -1, with (-1)!! = 1.
mpq_class double_factorial(long k);

/// Σ_{k ≥ 2} (-1)^{k-1} z^k ζ(k)/k for |z| < 1. The closed form
/// -γz - ln Γ(1+z) is evaluated independently and must overlap.
Enclosure log_gamma_series(const Enclosure& z, const Precision& prec);
/// -γz - ln Γ(1+z).
Enclosure log_gamma_series_closed(const Enclosure& z, const Precision& prec);

/// Taylor data of C(-s, j) around s = 0:
/// C(-s, j) = linear_coeff·s + quadratic_coeff·s² + O(s³).
struct BinomialTaylor {
  long j;
  mpq_class linear_coeff;
  Enclosure quadratic_coeff;
};

BinomialTaylor binomial_taylor(long j, const Precision& prec);

/// C(a, j) = a(a-1)…(a-j+1)/j!, exact for rational a.
mpq_class binomial_rational(const mpq_class& a, long j);
/// C(a, j) for an enclosure a.
Enclosure binomial_real(const Enclosure& a, long j, const Precision& prec);

}  // namespace ct
