#pragma once

#include <iosfwd>
#include <string>

#include "altrun/poly.hpp"

namespace altrun {

/// Element of Q(x) in canonical form: gcd(num, den) = 1 and den monic, so
/// equality is structural.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(const Poly& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const Poly& num, const Poly& den);

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] const Poly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return den_.degree() == 0; }
  /// Throws NotDivisible unless the denominator is 1.
  [[nodiscard]] Poly to_poly() const;

  [[nodiscard]] RationalFunction derivative() const;
  [[nodiscard]] RationalFunction inverse() const;
  [[nodiscard]] RationalFunction pow(long exponent) const;
  [[nodiscard]] Rational evaluate(const Rational& point) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  [[nodiscard]] std::string to_string(const std::string& var = "x") const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace altrun
