#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rhn {

/// Arbitrary-precision signed integer. Zero is canonical in GMP (size 0).
using BigInt = mpz_class;

/// C(n, k) by the multiplicative formula with exact division at each step.
/// Returns 0 when k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// lcm(1, 2, ..., n). Throws InvalidIndex for n < 1.
BigInt lcm_up_to(long n);

/// base^exp by repeated squaring; 0^0 is 1.
BigInt int_pow(const BigInt& base, unsigned long exp);

/// Number of bits in |x|; 0 for x == 0.
std::size_t bit_length(const BigInt& x);

std::string to_string(const BigInt& x);

/// Parses an optionally signed decimal digit string. Throws ParseError.
BigInt parse_bigint(std::string_view text);

}  // namespace rhn
