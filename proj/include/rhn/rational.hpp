#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rhn/exact_arith.hpp"

namespace rhn {

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Every constructor and arithmetic operation returns a reduced value, so
/// two rationals are equal exactly when their numerators and denominators
/// are equal.
class ExactRational {
 public:
  ExactRational() : num_(0), den_(1) {}
  ExactRational(long value) : num_(value), den_(1) {}  // NOLINT: implicit by intent
  explicit ExactRational(BigInt value) : num_(std::move(value)), den_(1) {}

  /// Builds num/den and reduces it. Throws ZeroReciprocal when den == 0.
  ExactRational(BigInt num, BigInt den);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return sgn(num_) == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  ExactRational operator-() const;

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

  ExactRational& operator+=(const ExactRational& b) { return *this = *this + b; }
  ExactRational& operator-=(const ExactRational& b) { return *this = *this - b; }
  ExactRational& operator*=(const ExactRational& b) { return *this = *this * b; }
  ExactRational& operator/=(const ExactRational& b) { return *this = *this / b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

  /// Canonical machine form "p/q"; integers keep the "/1".
  std::string to_string() const;
  /// Human form: integers drop the "/1".
  std::string to_display_string() const;

  /// Parses "p/q", "p" or "-p/q"; the result is reduced. Throws ParseError.
  static ExactRational parse(std::string_view text);

 private:
  struct Reduced {};
  ExactRational(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

ExactRational rat_add(const ExactRational& a, const ExactRational& b);
ExactRational rat_mul(const ExactRational& a, const ExactRational& b);
/// Throws ZeroReciprocal when a == 0.
ExactRational rat_recip(const ExactRational& a);
ExactRational abs(const ExactRational& a);

/// Round-to-nearest-even conversion to binary64. Values below the normal
/// range may be double-rounded; nothing in this library produces them.
double to_double(const ExactRational& a);
/// Exact conversion of a finite double. Throws Overflow for inf/nan.
ExactRational from_double(double x);

std::ostream& operator<<(std::ostream& os, const ExactRational& a);

}  // namespace rhn
