#pragma once

#include <chrono>
#include <cstddef>

#include "rhn/harmonic.hpp"

namespace rhn {

struct ErrorReport {
  int n = 0;
  int m = 0;
  ExactRational exact;
  double float_value = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  /// max_k C(n, k) / k^m in binary64: the cancellation scale.
  double largest_term_magnitude = 0.0;
};

struct BenchReport {
  EvalStrategy strategy = EvalStrategy::Table;
  int n = 0;
  int m = 0;
  std::chrono::nanoseconds wall_time{0};
  std::size_t peak_live_rationals = 0;
  std::size_t max_numerator_bits = 0;
  std::size_t max_denominator_bits = 0;
  /// Result of the timed evaluation (identical across repetitions).
  ExactRational value;
};

/// The alternating binomial sum accumulated in binary64, ascending k.
/// Each C(n, k) is rounded once from its exact value. Throws Overflow when
/// a term or the sum is not finite, InvalidIndex outside the domain.
double float_binomial_sum(int n, int m);

/// Compares float_binomial_sum against the exact value. Errors are formed
/// by exact rational subtraction and rounded once at the end.
ErrorReport error_report(int n, int m);

/// Median wall time over `repetitions` runs of one strategy. Bit sizes and
/// live counts come from a separate, untimed run with an EvalProbe attached.
/// Throws std::invalid_argument when repetitions < 1.
BenchReport bench(EvalStrategy strategy, int n, int m, int repetitions);

}  // namespace rhn
