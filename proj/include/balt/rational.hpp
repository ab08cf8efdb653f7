#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace balt::num {

using BigInt = mpz_class;

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);
BigInt ui_pow(unsigned long base, unsigned long exp);

/// Arbitrary-precision rational in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1 after every operation, so equality
/// is structural equality.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}             // NOLINT: implicit by design
  Rational(const BigInt& n) : v_(n) {}    // NOLINT
  Rational(long num, long den);
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "a", "a/b" and plain decimals like "-0.48".
  static Rational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rational abs() const;

  /// Integer power; negative exponents require a nonzero value.
  Rational pow_int(long e) const;

  /// Largest integer <= value.
  BigInt floor() const;

  double to_double() const { return v_.get_d(); }

  /// "num/den", or just "num" when the denominator is 1.
  std::string to_fraction() const;

  /// Decimal rendering truncated toward zero with `digits` fraction digits.
  std::string to_decimal(unsigned digits) const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;  // kept canonical
};

}  // namespace balt::num
