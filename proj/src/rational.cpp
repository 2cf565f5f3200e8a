#include "rhn/rational.hpp"

#include <cmath>
#include <ostream>

#include "rhn/errors.hpp"

namespace rhn {

ExactRational::ExactRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (sgn(den_) == 0) throw ZeroReciprocal();
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

ExactRational ExactRational::operator-() const { return {BigInt(-num_), den_, Reduced{}}; }

// Addition and multiplication reduce through the gcds of the operand
// denominators (Henrici) so the full cross product is never reduced.
ExactRational operator+(const ExactRational& a, const ExactRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  BigInt g = gcd(a.den_, b.den_);
  if (g == 1) {
    BigInt num = a.num_ * b.den_ + b.num_ * a.den_;
    BigInt den = a.den_ * b.den_;
    return {std::move(num), std::move(den), ExactRational::Reduced{}};
  }
  BigInt bd_g = b.den_ / g;
  BigInt t = a.num_ * bd_g + b.num_ * (a.den_ / g);
  if (sgn(t) == 0) return {};
  BigInt g2 = gcd(t, g);
  BigInt num = t / g2;
  BigInt den = (a.den_ / g2) * bd_g;
  return {std::move(num), std::move(den), ExactRational::Reduced{}};
}

ExactRational operator-(const ExactRational& a, const ExactRational& b) { return a + (-b); }

ExactRational operator*(const ExactRational& a, const ExactRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  BigInt g1 = gcd(a.num_, b.den_);
  BigInt g2 = gcd(b.num_, a.den_);
  BigInt num = (a.num_ / g1) * (b.num_ / g2);
  BigInt den = (a.den_ / g2) * (b.den_ / g1);
  return {std::move(num), std::move(den), ExactRational::Reduced{}};
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) { return a * rat_recip(b); }

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  int c = cmp(BigInt(a.num_ * b.den_), BigInt(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExactRational::to_string() const {
  return num_.get_str(10) + "/" + den_.get_str(10);
}

std::string ExactRational::to_display_string() const {
  return is_integer() ? num_.get_str(10) : to_string();
}

ExactRational ExactRational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_bigint(text));
  std::string_view den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
    throw ParseError("signed denominator in '" + std::string(text) + "'");
  }
  BigInt d = parse_bigint(den);
  if (sgn(d) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return {parse_bigint(text.substr(0, slash)), std::move(d)};
}

ExactRational rat_add(const ExactRational& a, const ExactRational& b) { return a + b; }
ExactRational rat_mul(const ExactRational& a, const ExactRational& b) { return a * b; }

ExactRational rat_recip(const ExactRational& a) {
  if (a.is_zero()) throw ZeroReciprocal();
  return {a.denominator(), a.numerator()};
}

ExactRational abs(const ExactRational& a) { return a.sign() < 0 ? -a : a; }

double to_double(const ExactRational& a) {
  if (a.is_zero()) return 0.0;
  BigInt num = a.numerator() < 0 ? BigInt(-a.numerator()) : a.numerator();
  BigInt den = a.denominator();
  // Scale so the integer quotient carries 55 or 56 significant bits.
  long shift = 55 - (static_cast<long>(bit_length(num)) - static_cast<long>(bit_length(den)));
  if (shift >= 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  BigInt quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

  const long extra = static_cast<long>(bit_length(quotient)) - 53;
  BigInt low;
  mpz_fdiv_r_2exp(low.get_mpz_t(), quotient.get_mpz_t(), static_cast<mp_bitcnt_t>(extra));
  quotient >>= static_cast<mp_bitcnt_t>(extra);

  BigInt half = BigInt(1) << static_cast<mp_bitcnt_t>(extra - 1);
  int vs_half = cmp(low, half);
  bool odd = mpz_odd_p(quotient.get_mpz_t()) != 0;
  if (vs_half > 0 || (vs_half == 0 && (sgn(remainder) != 0 || odd))) quotient += 1;

  double mantissa = static_cast<double>(quotient.get_ui());
  double value = std::ldexp(mantissa, static_cast<int>(extra - shift));
  return a.sign() < 0 ? -value : value;
}

ExactRational from_double(double x) {
  if (!std::isfinite(x)) throw Overflow("from_double: value is not finite");
  if (x == 0.0) return {};
  int exponent = 0;
  double fraction = std::frexp(x, &exponent);  // x = fraction * 2^exponent, |fraction| in [0.5, 1)
  auto mantissa = static_cast<long>(std::ldexp(fraction, 53));
  exponent -= 53;
  BigInt num = mantissa;
  BigInt den = 1;
  if (exponent >= 0) {
    num <<= static_cast<mp_bitcnt_t>(exponent);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-exponent);
  }
  return {std::move(num), std::move(den)};
}

std::ostream& operator<<(std::ostream& os, const ExactRational& a) { return os << a.to_string(); }

}  // namespace rhn
