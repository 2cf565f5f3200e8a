#include "rhn/exact_arith.hpp"

#include <algorithm>

#include "rhn/errors.hpp"

namespace rhn {

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // After step i, result == C(n - k + i, i), so each division is exact.
  for (unsigned long i = 1; i <= k; ++i) {
    result *= n - k + i;
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
  }
  return result;
}

BigInt lcm_up_to(long n) {
  if (n < 1) throw InvalidIndex("lcm_up_to: n must be >= 1");
  BigInt result = 1;
  for (long i = 2; i <= n; ++i) {
    BigInt g = gcd(result, BigInt(i));
    result = result / g * i;
  }
  return result;
}

BigInt int_pow(const BigInt& base, unsigned long exp) {
  BigInt result = 1;
  BigInt square = base;
  while (exp != 0) {
    if (exp & 1UL) result *= square;
    exp >>= 1;
    if (exp != 0) square *= square;
  }
  return result;
}

std::size_t bit_length(const BigInt& x) {
  if (sgn(x) == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  BigInt value(std::string(digits), 10);
  return text.front() == '-' ? BigInt(-value) : value;
}

}  // namespace rhn
