#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include "conetorsion/enclosure.hpp"

namespace ct {

/// How independent terms of a finite sum are evaluated. The reduction is
/// always serial and in index order, so both modes give identical bits.
enum class Execution { serial, parallel };

/// Evaluates f(0), …, f(count-1).
template <class F>
std::vector<Enclosure> map_terms(std::size_t count, F f, Execution mode) {
  std::vector<Enclosure> out(count);
  if (mode == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

/// Left-to-right sum.
Enclosure ordered_sum(const std::vector<Enclosure>& terms, const Precision& prec);

}  // namespace ct
