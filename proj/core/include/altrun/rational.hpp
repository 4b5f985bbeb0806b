#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace altrun {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}                     // NOLINT
  Rational(int value) : value_(value) {}                      // NOLINT
  Rational(const BigInt& value) : value_(value) {}            // NOLINT
  Rational(long num, long den);
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Throws ParseError or DivisionByZero.
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt num() const { return value_.get_num(); }
  [[nodiscard]] BigInt den() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  /// Integer power; negative exponents invert (DivisionByZero on 0).
  [[nodiscard]] Rational pow(long exponent) const;
  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt factorial(unsigned n);
BigInt double_factorial(long n);  // n!! with (-1)!! = 0!! = 1
BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n

}  // namespace altrun
