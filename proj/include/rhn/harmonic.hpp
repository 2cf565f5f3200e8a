#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "rhn/rational.hpp"

namespace rhn {

// Recursive harmonic numbers:
//   H(n, 0) = 1,   H(n, m) = sum_{k=1..n} H(k, m-1) / k   for n >= 1, m >= 1.
// H(n, 1) is the ordinary harmonic number. Three evaluation routes exist:
// the defining sum, the two-neighbour recurrence
//   H(n, m) = H(n-1, m) + H(n, m-1) / n,
// and the alternating binomial sum
//   H(n, m) = sum_{k=1..n} (-1)^(k+1) C(n, k) / k^m.

enum class EvalStrategy { Definition, Table, Binomial };

std::string_view to_string(EvalStrategy s);
/// Accepts "definition", "table", "binomial".
std::optional<EvalStrategy> parse_strategy(std::string_view name);

inline constexpr EvalStrategy kAllStrategies[] = {
    EvalStrategy::Definition, EvalStrategy::Table, EvalStrategy::Binomial};

/// Optional instrumentation filled in by the evaluators.
///
/// `observe` sees every rational an evaluator creates (terms, partial sums,
/// memo entries); `live` reports how many rationals the evaluator currently
/// holds in its working storage.
struct EvalProbe {
  std::size_t peak_live_rationals = 0;
  std::size_t max_numerator_bits = 0;
  std::size_t max_denominator_bits = 0;

  void observe(const ExactRational& value);
  void live(std::size_t count);
};

/// Dense (n, m) grid of recursive harmonic numbers, 1 <= n <= n_max and
/// 0 <= m <= m_max, stored row-major by n. Immutable once built.
class HarmonicTable {
 public:
  int n_max() const { return n_max_; }
  int m_max() const { return m_max_; }

  /// Throws InvalidIndex outside the table.
  const ExactRational& at(int n, int m) const;

  /// Row-major values (n = 1 first, m ascending within a row).
  const std::vector<ExactRational>& values() const { return values_; }

  /// Adopts externally supplied cells after checking the shape, the unit
  /// boundary and the recurrence. Throws InvalidIndex on a bad shape and
  /// ParseError when a cell is inconsistent.
  static HarmonicTable from_values(int n_max, int m_max, std::vector<ExactRational> values);

  friend bool operator==(const HarmonicTable&, const HarmonicTable&) = default;

 private:
  friend HarmonicTable build_table(int n_max, int m_max);
  HarmonicTable(int n_max, int m_max, std::vector<ExactRational> values)
      : n_max_(n_max), m_max_(m_max), values_(std::move(values)) {}

  int n_max_;
  int m_max_;
  std::vector<ExactRational> values_;
};

/// Literal recursion on the defining sum, memoized over (k, m') within the call.
ExactRational eval_definition(int n, int m, EvalProbe* probe = nullptr);

/// Fills the full table column by column in m. Throws InvalidIndex.
HarmonicTable build_table(int n_max, int m_max);

/// Same recurrence as build_table but keeps a single column of n values.
ExactRational eval_table(int n, int m, EvalProbe* probe = nullptr);

/// Alternating binomial sum, ascending k, one running accumulator.
ExactRational eval_binomial(int n, int m, EvalProbe* probe = nullptr);

ExactRational eval(int n, int m, EvalStrategy strategy, EvalProbe* probe = nullptr);

/// 1 + 1/2 + ... + 1/n by direct summation.
ExactRational classical_harmonic(int n);

}  // namespace rhn
