#include "conetorsion/combinatorics.hpp"

#include <stdexcept>
#include <string>

#include "conetorsion/errors.hpp"

namespace ct {
namespace {

mpz_class factorial(long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// Coefficients (ascending) of Π (x + v).
std::vector<mpq_class> product_coefficients(const std::vector<long>& roots) {
  std::vector<mpq_class> coeffs{mpq_class(1)};
  for (long v : roots) {
    std::vector<mpq_class> next(coeffs.size() + 1, mpq_class(0));
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i] += coeffs[i] * v;
      next[i + 1] += coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace

SphereSpec SphereSpec::make(long p, long q) {
  if (p < 1) throw DomainError("SphereSpec", "p must be >= 1, got " + std::to_string(p));
  if (q < 0 || q > 2 * p - 1) throw DomainError("SphereSpec", "q must lie in [0, 2p-1], got " + std::to_string(q));
  SphereSpec spec;
  spec.p = p;
  spec.q = q;
  spec.alpha = mpq_class(1, 2) + q - p;
  spec.alpha.canonicalize();
  for (long j = 0; j <= 2 * p - 1; ++j) {
    if (j == q || j == 2 * p - 1 - q) continue;
    spec.sequence.push_back(j - q);
  }
  return spec;
}

mpq_class binom_exact(long n, long k) {
  if (n < 0) throw DomainError("binom_exact", "n must be >= 0, got " + std::to_string(n));
  if (k < 0 || k > n) return mpq_class(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return mpq_class(out);
}

std::vector<mpq_class> elem_symmetric_all(const SphereSpec& spec) {
  // Π (x + v) = Σ_k e_k x^{m-k}, so e_k is the coefficient of x^{m-k}.
  const std::vector<mpq_class> coeffs = product_coefficients(spec.sequence);
  const size_t m = spec.sequence.size();
  std::vector<mpq_class> e(m + 1);
  for (size_t k = 0; k <= m; ++k) e[k] = coeffs[m - k];
  return e;
}

mpq_class elem_symmetric(const SphereSpec& spec, long k) {
  if (k < 0 || k > 2 * spec.p - 2) throw DomainError("elem_symmetric", "k must lie in [0, 2p-2], got " + std::to_string(k));
  return elem_symmetric_all(spec)[k];
}

mpq_class s_poly_product(const SphereSpec& spec, const mpq_class& x) {
  mpq_class out(1);
  for (long v : spec.sequence) out *= x + v;
  out.canonicalize();
  return out;
}

mpq_class s_poly_expanded(const SphereSpec& spec, const mpq_class& x) {
  const std::vector<mpq_class> e = elem_symmetric_all(spec);
  const long top = 2 * spec.p - 2;
  mpq_class out(0);
  mpq_class power(1);
  for (long l = 0; l <= top; ++l) {
    out += e[top - l] * power;
    power *= x;
  }
  out.canonicalize();
  return out;
}

mpq_class s_poly_value(const SphereSpec& spec, const mpq_class& x) {
  const mpq_class product = s_poly_product(spec, x);
  if (product != s_poly_expanded(spec, x)) throw std::logic_error("s_poly_value: product and coefficient forms disagree");
  return product;
}

mpq_class multiplicity_factored(const SphereSpec& spec, long n) {
  const long p = spec.p;
  mpq_class out = binom_exact(2 * p - 1, spec.q) * (2 * n - 1 + 2 * p) / mpq_class(factorial(2 * p - 1));
  for (long j = 0; j <= 2 * p - 1; ++j) {
    if (j == spec.q || j == 2 * p - 1 - spec.q) continue;
    out *= n + j;
  }
  out.canonicalize();
  return out;
}

mpq_class multiplicity_sphere(const SphereSpec& spec, long n) {
  if (n < 1) throw DomainError("multiplicity_sphere", "n must be >= 1, got " + std::to_string(n));
  const long p = spec.p;
  const long q = spec.q;
  mpq_class out = mpq_class(2 * n - 1 + 2 * p, n + 2 * p - 1 - q) * binom_exact(n - 1 + 2 * p, n + q) * binom_exact(q + n - 1, n - 1);
  out.canonicalize();
  if (out != multiplicity_factored(spec, n)) throw std::logic_error("multiplicity_sphere: binomial and factored forms disagree");
  return out;
}

mpq_class multiplicity_shifted(const SphereSpec& spec, long n) {
  if (n <= spec.q) throw DomainError("multiplicity_shifted", "n must exceed q, got n=" + std::to_string(n));
  const long p = spec.p;
  mpq_class out = binom_exact(2 * p - 1, spec.q) * (2 * n - 1 - 2 * spec.q + 2 * p) * s_poly_value(spec, mpq_class(n)) / mpq_class(factorial(2 * p - 1));
  out.canonicalize();
  return out;
}

std::vector<mpq_class> multiplicity_polynomial(const SphereSpec& spec) {
  const long p = spec.p;
  // (2x - 1 - 2q + 2p) S(x; N^q) scaled by C(2p-1,q)/(2p-1)!.
  std::vector<mpq_class> s = product_coefficients(spec.sequence);
  std::vector<mpq_class> out(s.size() + 1, mpq_class(0));
  const mpq_class scale = binom_exact(2 * p - 1, spec.q) / mpq_class(factorial(2 * p - 1));
  for (size_t i = 0; i < s.size(); ++i) {
    out[i] += s[i] * (2 * p - 1 - 2 * spec.q);
    out[i + 1] += s[i] * 2;
  }
  for (auto& c : out) {
    c *= scale;
    c.canonicalize();
  }
  return out;
}

mpq_class alternating_moment(long p, long k) {
  if (p < 1) throw DomainError("alternating_moment", "p must be >= 1");
  if (k < 0 || k > 2 * p - 2) throw DomainError("alternating_moment", "k must lie in [0, 2p-2], got " + std::to_string(k));
  mpz_class sum = 0;
  for (long q = 0; q <= 2 * p - 1; ++q) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k));
    const mpz_class term = binom_exact(2 * p - 1, q).get_num() * power;
    sum += (q % 2 == 0) ? term : mpz_class(-term);
  }
  return mpq_class(sum);
}

mpq_class alternating_coefficient_sum(long p, long l) {
  mpq_class sum(0);
  for (long q = 0; q <= 2 * p - 1; ++q) {
    const SphereSpec spec = SphereSpec::make(p, q);
    const mpq_class term = binom_exact(2 * p - 1, q) * elem_symmetric(spec, 2 * p - 2 - l);
    sum += (q % 2 == 1) ? term : mpq_class(-term);
  }
  return sum;
}

mpq_class alternating_alpha_coefficient_sum(long p, long l) {
  mpq_class sum(0);
  for (long q = 0; q <= 2 * p - 1; ++q) {
    const SphereSpec spec = SphereSpec::make(p, q);
    const mpq_class term = binom_exact(2 * p - 1, q) * spec.alpha * elem_symmetric(spec, 2 * p - 2 - l);
    sum += (q % 2 == 1) ? term : mpq_class(-term);
  }
  return sum;
}

mpq_class alpha_weighted_top_sum(long p) {
  if (p < 1) throw DomainError("alpha_weighted_top_sum", "p must be >= 1");
  mpq_class out = alternating_alpha_coefficient_sum(p, 0) / mpq_class(factorial(2 * p - 1));
  out.canonicalize();
  return out;
}

mpq_class eigenvalue_sphere(const SphereSpec& spec, long n) { return mpq_class((n + spec.q) * (n + 2 * spec.p - 1 - spec.q)); }

mpq_class mu_squared(const SphereSpec& spec, long n) {
  mpq_class out = eigenvalue_sphere(spec, n) + spec.alpha * spec.alpha;
  out.canonicalize();
  return out;
}

}  // namespace ct
