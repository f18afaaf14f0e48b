#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "conetorsion/enclosure.hpp"

namespace ct {

/// The truncation policy could not reach its target radius. Carries the best
/// enclosure found so callers can still report it.
class PrecisionExhausted : public std::runtime_error {
 public:
  PrecisionExhausted(std::string what, Enclosure best) : std::runtime_error(std::move(what)), best_(std::move(best)) {}
  const Enclosure& best() const { return best_; }

 private:
  Enclosure best_;
};

/// An infinite series Σ_{k ≥ start} term(k).
///
/// `tail_bound(n)` must bound |Σ_{k ≥ n} term(k)| for every n ≥ start and be
/// non-increasing in n; returning +inf means "no bound available yet".
struct SeriesSpec {
  std::function<Enclosure(long)> term;
  std::function<Real(long)> tail_bound;
  long start = 0;
  long max_index = 1'000'000;
  /// Stop as soon as the tail bound is at most this value.
  Real target_radius = Real::power_of_two(-200);
  std::string name = "series";
};

/// Terms actually summed and the tail bound applied.
struct SeriesResult {
  Enclosure value;
  long terms = 0;
  Real tail;
};

/// Sums in ascending index order until the tail bound meets the target, then
/// widens the partial sum by that bound. Throws PrecisionExhausted when
/// max_index is passed first.
SeriesResult sum_series_detailed(const SeriesSpec& spec, const Precision& prec);

inline Enclosure sum_series(const SeriesSpec& spec, const Precision& prec) { return sum_series_detailed(spec, prec).value; }

/// Default absolute target for a computation at `prec`: 2^-(bits - 8).
Real default_target(const Precision& prec);

}  // namespace ct
