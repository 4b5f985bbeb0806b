#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "altrun/rational.hpp"

namespace altrun {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree. The zero polynomial has no coefficients; otherwise the
/// leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);  // NOLINT
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT
  Poly(int constant) : Poly(Rational(constant)) {}   // NOLINT
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly x() { return monomial(1, 1); }
  static Poly monomial(const Rational& c, std::size_t degree);
  /// (x - r)
  static Poly linear_root(const Rational& r) { return Poly{-r, Rational(1)}; }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  [[nodiscard]] long valuation() const;
  [[nodiscard]] Rational coeff(long k) const;
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational leading() const;

  [[nodiscard]] Rational operator()(const Rational& point) const { return evaluate(point); }
  [[nodiscard]] Rational evaluate(const Rational& point) const;
  /// p(q(x))
  [[nodiscard]] Poly compose(const Poly& inner) const;
  /// p(c*x)
  [[nodiscard]] Poly scale_argument(const Rational& c) const;
  [[nodiscard]] Poly derivative() const;
  [[nodiscard]] Poly pow(unsigned exponent) const;
  /// x^k * p
  [[nodiscard]] Poly shift(std::size_t k) const;
  /// p / x^k; requires valuation >= k.
  [[nodiscard]] Poly unshift(std::size_t k) const;
  [[nodiscard]] Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Ascending sparse form, e.g. "2*x + 12*x^2 + 10*x^3"; zero prints "0".
  [[nodiscard]] std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Euclidean division over Q: returns (quotient, remainder).
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d);

/// Returns q with p = q*d; throws NotDivisible when the remainder is nonzero.
Poly divide_exact(const Poly& p, const Poly& d);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Largest m with (x - r)^m dividing p. Throws ZeroPolynomial.
unsigned root_multiplicity(const Poly& p, const Rational& r);

/// True iff coeff(low + i) == coeff(high - i) for all i. Throws
/// SupportOutOfRange when p has terms outside [low, high].
bool is_symmetric(const Poly& p, long low, long high);

/// (1 + x)^n
Poly one_plus_x_pow(unsigned n);

}  // namespace altrun
