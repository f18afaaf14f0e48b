#include "conetorsion/series.hpp"

namespace ct {

Real default_target(const Precision& prec) { return Real::power_of_two(-static_cast<long>(prec.bits()) + 8); }

SeriesResult sum_series_detailed(const SeriesSpec& spec, const Precision& prec) {
  Enclosure sum = Enclosure::from_long(0, prec);
  long n = spec.start;
  while (true) {
    Real tail = spec.tail_bound(n);
    if (tail.sign() < 0) throw std::logic_error(spec.name + ": negative tail bound");
    if (tail <= spec.target_radius) return {sum.inflated(tail), n - spec.start, tail};
    if (n > spec.max_index) {
      throw PrecisionExhausted(spec.name + ": precision-exhausted at index " + std::to_string(n) + ", tail bound " + to_decimal(tail, 3, MPFR_RNDU),
                               tail.is_finite() ? sum.inflated(tail) : sum.inflated(Real::infinity()));
    }
    sum += spec.term(n);
    ++n;
  }
}

}  // namespace ct
