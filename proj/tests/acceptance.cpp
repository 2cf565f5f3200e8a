// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "rhn/analysis.hpp"
#include "rhn/harmonic.hpp"
#include "rhn/io_formats.hpp"

using rhn::BigInt;
using rhn::ExactRational;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0 = no stated runtime bound
  std::function<Outcome()> run;
};

std::string cell(int n, int m) { return "(" + std::to_string(n) + ", " + std::to_string(m) + ")"; }

Outcome golden_table() {
  const char* const golden[4][5] = {
      {"1", "1", "1", "1", "1"},
      {"1", "3/2", "7/4", "15/8", "31/16"},
      {"1", "11/6", "85/36", "575/216", "3661/1296"},
      {"1", "25/12", "415/144", "5845/1728", "76111/20736"},
  };
  Outcome o;
  auto t = rhn::build_table(4, 4);
  int matched = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      if (t.at(n, m) == ExactRational::parse(golden[n - 1][m])) {
        ++matched;
      } else {
        o.fail("mismatch at " + cell(n, m) + ": " + t.at(n, m).to_string());
      }
    }
  }
  if (o.ok) o.detail = std::to_string(matched) + "/20 entries exact";
  return o;
}

Outcome cross_strategy() {
  Outcome o;
  long cells = 0;
  for (int n = 1; n <= 40; ++n) {
    for (int m = 0; m <= 8; ++m) {
      ExactRational d = rhn::eval_definition(n, m);
      ExactRational t = rhn::eval_table(n, m);
      ExactRational b = rhn::eval_binomial(n, m);
      if (!(d == t && t == b)) o.fail("strategies disagree at " + cell(n, m));
      ++cells;
    }
  }
  if (o.ok) o.detail = std::to_string(cells) + " cells, three-way identical";
  return o;
}

Outcome identity_vs_definition() {
  Outcome o;
  // Oracle: direct running sum of 1/k, independent of the library's
  // classical_harmonic and of all three strategies.
  ExactRational running = 0;
  for (int n = 1; n <= 100; ++n) {
    running += ExactRational(BigInt(1), BigInt(n));
    ExactRational b = rhn::eval_binomial(n, 1);
    if (b != rhn::classical_harmonic(n) || b != running) o.fail("mismatch at n=" + std::to_string(n));
  }
  if (o.ok) o.detail = "n = 1..100";
  return o;
}

Outcome recurrence_consistency() {
  Outcome o;
  for (int n = 2; n <= 30; ++n) {
    for (int m = 1; m <= 6; ++m) {
      ExactRational lhs = rhn::eval_binomial(n, m);
      ExactRational rhs = rhn::eval_binomial(n - 1, m) + rhn::eval_binomial(n, m - 1) / ExactRational(n);
      if (lhs != rhs) o.fail("recurrence fails at " + cell(n, m));
    }
  }
  if (o.ok) o.detail = "2 <= n <= 30, 1 <= m <= 6";
  return o;
}

Outcome m_zero_lemma() {
  Outcome o;
  for (int n = 1; n <= 200; ++n) {
    if (rhn::eval_binomial(n, 0) != ExactRational(1)) o.fail("sum != 1 at n=" + std::to_string(n));
  }
  if (o.ok) o.detail = "n = 1..200";
  return o;
}

Outcome row_two_closed_form() {
  Outcome o;
  ExactRational unrolled = 1;  // oracle: H(2, m) = 1 + H(2, m-1)/2
  const ExactRational half(BigInt(1), BigInt(2));
  for (int m = 0; m <= 20; ++m) {
    if (m > 0) unrolled = ExactRational(1) + unrolled * half;
    ExactRational closed((BigInt(1) << (m + 1)) - 1, BigInt(1) << m);
    ExactRational got = rhn::eval_table(2, m);
    if (got != closed || got != unrolled) o.fail("mismatch at m=" + std::to_string(m) + ": " + got.to_string());
  }
  if (o.ok) o.detail = "m = 0..20";
  return o;
}

Outcome divisibility() {
  Outcome o;
  for (int n = 1; n <= 12; ++n) {
    // Oracle lcm: fold in machine integers, independent of lcm_up_to.
    unsigned long l = 1;
    for (unsigned long i = 2; i <= static_cast<unsigned long>(n); ++i) l = std::lcm(l, i);
    if (rhn::lcm_up_to(n) != l) o.fail("lcm_up_to(" + std::to_string(n) + ") wrong");
    for (int m = 0; m <= 5; ++m) {
      BigInt bound = 1;
      for (int i = 0; i < m; ++i) bound *= l;
      if (bound % rhn::eval_table(n, m).denominator() != 0) o.fail("denominator does not divide at " + cell(n, m));
    }
  }
  if (o.ok) o.detail = "1 <= n <= 12, 0 <= m <= 5";
  return o;
}

Outcome float_cancellation() {
  Outcome o;
  auto small = rhn::error_report(4, 1);
  auto large = rhn::error_report(60, 1);
  if (!(small.rel_error < 1e-12)) o.fail("rel_error(4,1) = " + rhn::format_float(small.rel_error));
  if (!(large.rel_error > 1e-6)) o.fail("rel_error(60,1) = " + rhn::format_float(large.rel_error));
  double previous = -1.0;
  std::string trend;
  for (int n : {10, 20, 40, 60}) {
    double e = rhn::error_report(n, 1).rel_error;
    if (e < previous) o.fail("rel_error decreases at n=" + std::to_string(n));
    previous = e;
    trend += (trend.empty() ? "" : " ") + rhn::format_float(e);
  }
  if (o.ok) o.detail = "rel_error(4,1)=" + rhn::format_float(small.rel_error) + ", grid: " + trend;
  return o;
}

Outcome round_trip() {
  Outcome o;
  auto table = rhn::build_table(6, 4);
  for (auto format : {rhn::RenderFormat::Csv, rhn::RenderFormat::Json}) {
    auto text = rhn::render_table(table, format);
    auto parsed = rhn::parse_table(text, format);
    if (!(parsed == table)) o.fail(std::string(rhn::to_string(format)) + " parse differs");
    for (std::size_t i = 0; i < table.values().size(); ++i) {
      if (parsed.values()[i].to_string() != table.values()[i].to_string()) {
        o.fail(std::string(rhn::to_string(format)) + " value string differs at index " + std::to_string(i));
      }
    }
    if (rhn::render_table(parsed, format) != text) o.fail(std::string(rhn::to_string(format)) + " re-render differs");
  }
  if (o.ok) o.detail = "csv and json, 30 cells";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden 4x5 table", 1.0, golden_table},
      {2, "cross-strategy equivalence, n<=40, m<=8", 60.0, cross_strategy},
      {3, "binomial identity equals classical H_n, n<=100", 0.0, identity_vs_definition},
      {4, "recurrence consistency of the binomial route", 0.0, recurrence_consistency},
      {5, "alternating binomial sum is 1 at m=0, n<=200", 0.0, m_zero_lemma},
      {6, "row-2 closed form (2^(m+1)-1)/2^m, m<=20", 0.0, row_two_closed_form},
      {7, "denominator divides lcm(1..n)^m", 0.0, divisibility},
      {8, "binary64 cancellation profile", 1.0, float_cancellation},
      {9, "csv/json table round-trip", 0.0, round_trip},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      o.fail("took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    }
    if (!o.ok) ++failures;
    std::printf("%s  criterion %d: %s  [%.3f s%s]  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.budget_seconds > 0 ? (" / " + std::to_string(static_cast<int>(c.budget_seconds)) + " s").c_str() : "",
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
