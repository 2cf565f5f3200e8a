#include <doctest.h>

#include <cmath>

#include "rhn/analysis.hpp"
#include "rhn/errors.hpp"

using rhn::EvalStrategy;
using rhn::ExactRational;

TEST_CASE("float_binomial_sum") {
  CHECK(std::abs(rhn::float_binomial_sum(4, 1) - 25.0 / 12.0) < 1e-12);
  for (int m = 0; m <= 12; ++m) CHECK(rhn::float_binomial_sum(1, m) == 1.0);

  const double exact60 = rhn::to_double(rhn::eval_binomial(60, 1));
  const double approx60 = rhn::float_binomial_sum(60, 1);
  CHECK(std::abs(approx60 - exact60) / exact60 > 1e-6);
}

TEST_CASE("float_binomial_sum domain and overflow") {
  CHECK_THROWS_AS(rhn::float_binomial_sum(0, 1), rhn::InvalidIndex);
  CHECK_THROWS_AS(rhn::float_binomial_sum(3, -1), rhn::InvalidIndex);
  CHECK_NOTHROW(rhn::float_binomial_sum(1020, 0));
  CHECK_THROWS_AS(rhn::float_binomial_sum(1100, 0), rhn::Overflow);
  CHECK_THROWS_AS(rhn::error_report(1100, 2), rhn::Overflow);
}

TEST_CASE("error_report") {
  auto small = rhn::error_report(4, 1);
  CHECK(small.n == 4);
  CHECK(small.m == 1);
  CHECK(small.exact == ExactRational(rhn::BigInt(25), rhn::BigInt(12)));
  CHECK(small.rel_error < 1e-12);
  CHECK(small.largest_term_magnitude == 4.0);  // terms 4, 3, 4/3, 1/4

  auto one = rhn::error_report(1, 0);
  CHECK(one.abs_error == 0.0);
  CHECK(one.rel_error == 0.0);
  CHECK(one.float_value == 1.0);

  auto big = rhn::error_report(60, 1);
  CHECK(big.rel_error > 1e-6);
  CHECK(big.exact == rhn::eval_table(60, 1));
  CHECK(big.largest_term_magnitude > 1e15);
}

TEST_CASE("error_report errors are formed before rounding") {
  for (int n : {5, 17, 33, 60}) {
    for (int m : {0, 1, 3}) {
      auto r = rhn::error_report(n, m);
      CAPTURE(n);
      CAPTURE(m);
      const ExactRational diff = rhn::abs(rhn::from_double(r.float_value) - r.exact);
      CHECK(r.abs_error == rhn::to_double(diff));
      CHECK(r.rel_error == rhn::to_double(diff / r.exact));
      // Agrees with the naive double computation to within rounding.
      const double naive = std::abs(r.float_value - rhn::to_double(r.exact));
      CHECK(std::abs(r.abs_error - naive) <= 1e-15 * std::max(1.0, std::abs(r.float_value)));
    }
  }
}

TEST_CASE("cancellation error grows along the fixed sample grid") {
  double previous = 0.0;
  for (int n : {10, 20, 40, 60}) {
    auto r = rhn::error_report(n, 1);
    CAPTURE(n);
    CAPTURE(r.rel_error);
    CHECK(r.rel_error >= previous);
    previous = r.rel_error;
  }
}

TEST_CASE("bench") {
  auto smoke = rhn::bench(EvalStrategy::Table, 1, 0, 3);
  CHECK(smoke.wall_time.count() > 0);
  CHECK(smoke.max_numerator_bits <= 1);
  CHECK(smoke.max_denominator_bits <= 1);
  CHECK(smoke.value == ExactRational(1));

  auto b = rhn::bench(EvalStrategy::Binomial, 4, 4, 3);
  CHECK(b.max_denominator_bits >= 15);
  CHECK(b.strategy == EvalStrategy::Binomial);
  CHECK(b.n == 4);
  CHECK(b.m == 4);

  auto def = rhn::bench(EvalStrategy::Definition, 40, 8, 3);
  auto tab = rhn::bench(EvalStrategy::Table, 40, 8, 3);
  CHECK(def.value == tab.value);
  CHECK(def.peak_live_rationals > tab.peak_live_rationals);
  CHECK(def.max_denominator_bits >= rhn::bit_length(def.value.denominator()));

  CHECK_THROWS_AS(rhn::bench(EvalStrategy::Table, 3, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(rhn::bench(EvalStrategy::Table, 0, 3, 1), rhn::InvalidIndex);
}
