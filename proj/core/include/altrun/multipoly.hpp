#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "altrun/poly.hpp"
#include "altrun/rational.hpp"

namespace altrun {

using Alphabet = std::vector<std::string>;
using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial over an ordered alphabet. No zero
/// coefficients are stored; every exponent tuple has the alphabet's length.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  MultiPoly(Alphabet alphabet, Terms terms);

  static MultiPoly constant(const Alphabet& alphabet, const Rational& c);
  static MultiPoly variable(const Alphabet& alphabet, std::string_view name);
  static MultiPoly monomial(const Alphabet& alphabet, const Exponents& exps, const Rational& c = Rational(1));
  /// Embeds p as a polynomial in `letter`.
  static MultiPoly from_univariate(const Alphabet& alphabet, std::string_view letter, const Poly& p);

  [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Rational constant_term() const;
  [[nodiscard]] Rational coeff(const Exponents& exps) const;
  [[nodiscard]] std::size_t index_of(std::string_view letter) const;  // throws UnknownSymbol
  [[nodiscard]] bool has_letter(std::string_view letter) const;
  /// Max exponent of `letter` over all terms; -1 for zero.
  [[nodiscard]] long degree_in(std::string_view letter) const;

  [[nodiscard]] MultiPoly pow(unsigned exponent) const;
  [[nodiscard]] MultiPoly partial(std::string_view letter) const;

  /// Alphabet morphism: each letter with an entry in `images` is replaced by
  /// its image; all other letters map to the same-named letter of `target`.
  [[nodiscard]] MultiPoly substitute(const std::map<std::string, MultiPoly>& images, const Alphabet& target) const;
  /// Same alphabet; `letter` is fixed to `value`.
  [[nodiscard]] MultiPoly specialize(std::string_view letter, const Rational& value) const;
  /// Re-embeds into `target`, which must contain every letter that occurs.
  [[nodiscard]] MultiPoly with_alphabet(const Alphabet& target) const;
  /// Converts to a polynomial in `letter`; throws NotOfExpectedShape if any
  /// other letter occurs.
  [[nodiscard]] Poly to_univariate(std::string_view letter) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(const MultiPoly& a) { return a * Rational(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Graded ascending order, letters in alphabet order, e.g. "q*x + q^2*x^2".
  [[nodiscard]] std::string to_string() const;

 private:
  void check_same_alphabet(const MultiPoly& o) const;
  void add_term(const Exponents& e, const Rational& c);

  Alphabet alphabet_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Letters appearing in a polynomial expression, in order of first use.
Alphabet collect_symbols(std::string_view text);

/// Parses "+", "-", "*", "^" (nonnegative integer powers), parentheses,
/// integer literals and division by nonzero constants. Every identifier must
/// belong to `alphabet` (UnknownSymbol otherwise). Throws ParseError.
MultiPoly parse_multipoly(std::string_view text, const Alphabet& alphabet);

}  // namespace altrun
