#pragma once

#include <gmpxx.h>

#include <vector>

namespace ct {

/// Parameters of the degree-q co-exact spectrum on the even sphere S^{2p}.
///
/// alpha = 1/2 + q - p, and the sequence N^q lists j - q for j in
/// {0, …, 2p-1} \ {q, 2p-1-q}; it has 2p - 2 entries.
struct SphereSpec {
  long p = 1;
  long q = 0;
  mpq_class alpha;
  std::vector<long> sequence;

  /// Validates p ≥ 1 and 0 ≤ q ≤ 2p-1. q ≤ p-1 is the spectral half; the
  /// other half enters the alternating reductions.
  static SphereSpec make(long p, long q);
  bool spectral() const { return q <= p - 1; }
};

mpq_class binom_exact(long n, long k);

/// e_k(N^q), 0 ≤ k ≤ 2p-2.
mpq_class elem_symmetric(const SphereSpec& spec, long k);
/// All e_0 … e_{2p-2}.
std::vector<mpq_class> elem_symmetric_all(const SphereSpec& spec);

/// S(x; N^q) = Π (x + v) over v in N^q, computed as a product and as
/// Σ_l e_{2p-2-l} x^l; throws std::logic_error if they differ.
mpq_class s_poly_value(const SphereSpec& spec, const mpq_class& x);
mpq_class s_poly_product(const SphereSpec& spec, const mpq_class& x);
mpq_class s_poly_expanded(const SphereSpec& spec, const mpq_class& x);

/// m_{q,n} for n ≥ 1 from the binomial form; checked against the factored
/// form (1/(2p-1)!) C(2p-1,q) (2n-1+2p) Π_{j≠q,2p-1-q} (n+j).
mpq_class multiplicity_sphere(const SphereSpec& spec, long n);
mpq_class multiplicity_factored(const SphereSpec& spec, long n);

/// m_{q,n-q} via (1/(2p-1)!) C(2p-1,q) (2n-1-2q+2p) S(n; N^q), n ≥ q+1.
mpq_class multiplicity_shifted(const SphereSpec& spec, long n);

/// Coefficients c_0 … c_{2p-1} with m_{q,x-q} = Σ_l c_l x^l.
std::vector<mpq_class> multiplicity_polynomial(const SphereSpec& spec);

/// Σ_{q=0}^{2p-1} (-1)^q C(2p-1,q) q^k for 0 ≤ k ≤ 2p-2.
mpq_class alternating_moment(long p, long k);

/// (1/(2p-1)!) Σ_q (-1)^{q+1} C(2p-1,q) α_q e_{2p-2}(N^q).
mpq_class alpha_weighted_top_sum(long p);

/// Σ_q (-1)^{q+1} C(2p-1,q) e_{2p-2-l}(N^q), and the same weighted by α_q.
mpq_class alternating_coefficient_sum(long p, long l);
mpq_class alternating_alpha_coefficient_sum(long p, long l);

/// λ_{q,n} = (n + q)(n + 2p - 1 - q), the co-exact eigenvalue.
mpq_class eigenvalue_sphere(const SphereSpec& spec, long n);
/// μ_{q,n}² = λ_{q,n} + α_q², a perfect square of n + p - 1/2.
mpq_class mu_squared(const SphereSpec& spec, long n);

}  // namespace ct
