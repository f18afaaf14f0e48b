#include "conetorsion/kernels.hpp"

namespace ct {

Enclosure ordered_sum(const std::vector<Enclosure>& terms, const Precision& prec) {
  Enclosure sum = Enclosure::from_long(0, prec);
  for (const auto& t : terms) sum += t;
  return sum;
}

}  // namespace ct
