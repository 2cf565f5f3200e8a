#include "rhn/verify.hpp"

#include <algorithm>
#include <functional>

#include "rhn/errors.hpp"
#include "rhn/harmonic.hpp"

namespace rhn {

bool VerifyReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.failed == 0; });
}

namespace {

using CellCheck = std::function<bool(int n, int m)>;

// Runs `check` over cells with n >= n_lo and m >= m_lo. Returns false on the
// first failure, which is recorded in `result`.
bool run_property(PropertyResult& result, int n_lo, int n_max, int m_lo, int m_max,
                  const CellCheck& check) {
  for (int n = n_lo; n <= n_max; ++n) {
    for (int m = m_lo; m <= m_max; ++m) {
      ++result.checked;
      if (!check(n, m)) {
        ++result.failed;
        result.counterexample = {n, m};
        return false;
      }
    }
  }
  return true;
}

}  // namespace

VerifyReport verify_properties(int n_max, int m_max) {
  if (n_max < 1 || m_max < 0) throw InvalidIndex("verify_properties: need n_max >= 1 and m_max >= 0");

  // The table is one of the three strategies under test; the other two are
  // evaluated per cell and compared against it.
  const HarmonicTable table = build_table(n_max, m_max);
  auto h = [&](int n, int m) -> const ExactRational& { return table.at(n, m); };

  std::vector<BigInt> lcm(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) lcm[static_cast<std::size_t>(n)] = lcm_up_to(n);

  struct Named {
    const char* name;
    int n_lo;
    int m_lo;
    int m_hi;
    CellCheck check;
  };
  const std::vector<Named> suite = {
      {"cross-strategy agreement", 1, 0, m_max,
       [&](int n, int m) {
         return eval_table(n, m) == h(n, m) && eval_definition(n, m) == h(n, m) &&
                eval_binomial(n, m) == h(n, m);
       }},
      {"recurrence consistency", 2, 1, m_max,
       [&](int n, int m) {
         return eval_binomial(n, m) == eval_binomial(n - 1, m) + eval_binomial(n, m - 1) / ExactRational(n);
       }},
      {"classical harmonic at m=1", 1, 1, std::min(m_max, 1),
       [&](int n, int) { return h(n, 1) == classical_harmonic(n); }},
      {"denominator divides lcm(1..n)^m", 1, 0, m_max,
       [&](int n, int m) {
         BigInt bound = int_pow(lcm[static_cast<std::size_t>(n)], static_cast<unsigned long>(m));
         return mpz_divisible_p(bound.get_mpz_t(), h(n, m).denominator().get_mpz_t()) != 0;
       }},
      {"strictly increasing in n", 2, 1, m_max, [&](int n, int m) { return h(n, m) > h(n - 1, m); }},
      {"increasing in m, equal only at n=1", 1, 1, m_max,
       [&](int n, int m) { return n == 1 ? h(n, m) == h(n, m - 1) : h(n, m) > h(n, m - 1); }},
      {"value >= 1", 1, 0, m_max, [&](int n, int m) { return h(n, m) >= ExactRational(1); }},
  };

  VerifyReport report;
  bool keep_going = true;
  for (const Named& p : suite) {
    PropertyResult& result = report.properties.emplace_back();
    result.name = p.name;
    if (keep_going) keep_going = run_property(result, p.n_lo, n_max, p.m_lo, p.m_hi, p.check);
  }
  return report;
}

}  // namespace rhn
