#include "rhn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhn/errors.hpp"

namespace rhn {

namespace {

struct FloatSum {
  double value = 0.0;
  double largest_term = 0.0;
};

FloatSum float_sum(int n, int m) {
  if (n < 1 || m < 0) {
    throw InvalidIndex("float_binomial_sum: need n >= 1 and m >= 0, got n=" + std::to_string(n) +
                       ", m=" + std::to_string(m));
  }
  FloatSum out;
  for (int k = 1; k <= n; ++k) {
    const double c = to_double(ExactRational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))));
    const double term = c / std::pow(static_cast<double>(k), m);
    if (!std::isfinite(term)) {
      throw Overflow("float_binomial_sum: term k=" + std::to_string(k) + " of n=" + std::to_string(n) +
                     " is not finite in binary64");
    }
    out.largest_term = std::max(out.largest_term, term);
    out.value += (k % 2 == 1) ? term : -term;
  }
  if (!std::isfinite(out.value)) throw Overflow("float_binomial_sum: sum is not finite");
  return out;
}

}  // namespace

double float_binomial_sum(int n, int m) { return float_sum(n, m).value; }

ErrorReport error_report(int n, int m) {
  const FloatSum approx = float_sum(n, m);
  ErrorReport r;
  r.n = n;
  r.m = m;
  r.exact = eval_binomial(n, m);
  r.float_value = approx.value;
  r.largest_term_magnitude = approx.largest_term;
  const ExactRational diff = abs(from_double(approx.value) - r.exact);
  r.abs_error = to_double(diff);
  r.rel_error = to_double(diff / abs(r.exact));
  return r;
}

BenchReport bench(EvalStrategy strategy, int n, int m, int repetitions) {
  if (repetitions < 1) throw std::invalid_argument("bench: repetitions must be >= 1");
  using clock = std::chrono::steady_clock;

  BenchReport r;
  r.strategy = strategy;
  r.n = n;
  r.m = m;

  // Instrumented pass, untimed, so the probe never inflates the timings.
  EvalProbe probe;
  r.value = eval(n, m, strategy, &probe);

  std::vector<std::chrono::nanoseconds> times;
  times.reserve(static_cast<std::size_t>(repetitions));
  for (int i = 0; i < repetitions; ++i) {
    const auto start = clock::now();
    ExactRational value = eval(n, m, strategy);
    const auto stop = clock::now();
    times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start));
    if (value != r.value) throw std::logic_error("bench: evaluation is not deterministic");
  }
  std::nth_element(times.begin(), times.begin() + static_cast<long>(times.size() / 2), times.end());
  // Clock resolution floor: a run never takes zero time.
  r.wall_time = std::max(times[times.size() / 2], std::chrono::nanoseconds{1});
  r.peak_live_rationals = probe.peak_live_rationals;
  r.max_numerator_bits = probe.max_numerator_bits;
  r.max_denominator_bits = probe.max_denominator_bits;
  return r;
}

}  // namespace rhn
