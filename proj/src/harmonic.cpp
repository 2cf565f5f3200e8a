#include "rhn/harmonic.hpp"

#include <algorithm>
#include <string>

#include "rhn/errors.hpp"

namespace rhn {

namespace {

void require_domain(int n, int m, const char* what) {
  if (n < 1) throw InvalidIndex(std::string(what) + ": n must be >= 1, got " + std::to_string(n));
  if (m < 0) throw InvalidIndex(std::string(what) + ": m must be >= 0, got " + std::to_string(m));
}

void observe(EvalProbe* probe, const ExactRational& v) {
  if (probe != nullptr) probe->observe(v);
}

void live(EvalProbe* probe, std::size_t count) {
  if (probe != nullptr) probe->live(count);
}

// Memo over the (k, m') lattice for one eval_definition call.
class DefinitionEvaluator {
 public:
  DefinitionEvaluator(int n, int m, EvalProbe* probe)
      : n_(n), probe_(probe), memo_(static_cast<std::size_t>(n) * static_cast<std::size_t>(m + 1)) {}

  const ExactRational& value(int k, int m) {
    auto& slot = memo_[index(k, m)];
    if (slot) return *slot;
    ExactRational result = 1;
    if (m > 0) {
      ++active_sums_;
      result = 0;
      for (int j = 1; j <= k; ++j) {
        result += value(j, m - 1) / ExactRational(j);
        observe(probe_, result);
      }
      --active_sums_;
    }
    slot = std::move(result);
    ++filled_;
    observe(probe_, *slot);
    live(probe_, filled_ + active_sums_);
    return *slot;
  }

 private:
  std::size_t index(int k, int m) const {
    return static_cast<std::size_t>(m) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(k - 1);
  }

  int n_;
  EvalProbe* probe_;
  std::vector<std::optional<ExactRational>> memo_;
  std::size_t filled_ = 0;
  std::size_t active_sums_ = 0;
};

}  // namespace

std::string_view to_string(EvalStrategy s) {
  switch (s) {
    case EvalStrategy::Definition: return "definition";
    case EvalStrategy::Table: return "table";
    case EvalStrategy::Binomial: return "binomial";
  }
  return "unknown";
}

std::optional<EvalStrategy> parse_strategy(std::string_view name) {
  for (EvalStrategy s : kAllStrategies) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

void EvalProbe::observe(const ExactRational& value) {
  max_numerator_bits = std::max(max_numerator_bits, bit_length(value.numerator()));
  max_denominator_bits = std::max(max_denominator_bits, bit_length(value.denominator()));
}

void EvalProbe::live(std::size_t count) { peak_live_rationals = std::max(peak_live_rationals, count); }

const ExactRational& HarmonicTable::at(int n, int m) const {
  if (n < 1 || n > n_max_ || m < 0 || m > m_max_) {
    throw InvalidIndex("HarmonicTable::at(" + std::to_string(n) + ", " + std::to_string(m) +
                       ") outside 1..n_max=" + std::to_string(n_max_) +
                       ", 0..m_max=" + std::to_string(m_max_));
  }
  return values_[static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(m_max_ + 1) +
                 static_cast<std::size_t>(m)];
}

HarmonicTable HarmonicTable::from_values(int n_max, int m_max, std::vector<ExactRational> values) {
  require_domain(n_max, m_max, "HarmonicTable::from_values");
  const auto expected = static_cast<std::size_t>(n_max) * static_cast<std::size_t>(m_max + 1);
  if (values.size() != expected) {
    throw InvalidIndex("HarmonicTable::from_values: expected " + std::to_string(expected) +
                       " cells, got " + std::to_string(values.size()));
  }
  HarmonicTable table(n_max, m_max, std::move(values));
  const ExactRational one = 1;
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 0; m <= m_max; ++m) {
      const ExactRational& cell = table.at(n, m);
      bool ok = (n == 1 || m == 0) ? cell == one
                                   : cell == table.at(n - 1, m) + table.at(n, m - 1) / ExactRational(n);
      if (!ok) {
        throw ParseError("inconsistent table cell at n=" + std::to_string(n) + ", m=" + std::to_string(m));
      }
    }
  }
  return table;
}

ExactRational eval_definition(int n, int m, EvalProbe* probe) {
  require_domain(n, m, "eval_definition");
  DefinitionEvaluator evaluator(n, m, probe);
  return evaluator.value(n, m);
}

HarmonicTable build_table(int n_max, int m_max) {
  require_domain(n_max, m_max, "build_table");
  const auto cols = static_cast<std::size_t>(m_max + 1);
  std::vector<ExactRational> values(static_cast<std::size_t>(n_max) * cols, ExactRational(1));
  auto cell = [&](int n, int m) -> ExactRational& {
    return values[static_cast<std::size_t>(n - 1) * cols + static_cast<std::size_t>(m)];
  };
  for (int m = 1; m <= m_max; ++m) {
    for (int n = 2; n <= n_max; ++n) {
      cell(n, m) = cell(n - 1, m) + cell(n, m - 1) / ExactRational(n);
    }
  }
  return HarmonicTable(n_max, m_max, std::move(values));
}

ExactRational eval_table(int n, int m, EvalProbe* probe) {
  require_domain(n, m, "eval_table");
  // column[k-1] holds H(k, current m); updated in place left to right, so
  // column[k-2] already holds the new H(k-1, m) when cell k is computed.
  std::vector<ExactRational> column(static_cast<std::size_t>(n), ExactRational(1));
  live(probe, column.size());
  for (int mm = 1; mm <= m; ++mm) {
    for (int k = 2; k <= n; ++k) {
      auto& slot = column[static_cast<std::size_t>(k - 1)];
      slot = column[static_cast<std::size_t>(k - 2)] + slot / ExactRational(k);
      observe(probe, slot);
    }
  }
  observe(probe, column.back());
  return column.back();
}

ExactRational eval_binomial(int n, int m, EvalProbe* probe) {
  require_domain(n, m, "eval_binomial");
  ExactRational sum;
  live(probe, 2);  // accumulator and current term
  for (int k = 1; k <= n; ++k) {
    BigInt c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (k % 2 == 0) c = -c;
    ExactRational term(std::move(c), int_pow(BigInt(k), static_cast<unsigned long>(m)));
    observe(probe, term);
    sum += term;
    observe(probe, sum);
  }
  return sum;
}

ExactRational eval(int n, int m, EvalStrategy strategy, EvalProbe* probe) {
  switch (strategy) {
    case EvalStrategy::Definition: return eval_definition(n, m, probe);
    case EvalStrategy::Table: return eval_table(n, m, probe);
    case EvalStrategy::Binomial: return eval_binomial(n, m, probe);
  }
  throw std::invalid_argument("eval: unknown strategy");
}

ExactRational classical_harmonic(int n) {
  if (n < 1) throw InvalidIndex("classical_harmonic: n must be >= 1, got " + std::to_string(n));
  // Single fraction over a common denominator: sum of (n!/k) over n!.
  BigInt factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= k;
  BigInt numerator = 0;
  for (int k = 1; k <= n; ++k) numerator += factorial / k;
  return {std::move(numerator), std::move(factorial)};
}

}  // namespace rhn
