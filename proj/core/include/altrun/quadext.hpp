#pragma once

#include <iosfwd>
#include <string>

#include "altrun/ratfunc.hpp"

namespace altrun {

/// base + radical * rho in Q(x)[rho]/(rho^2 - discriminant). Binary
/// operations require equal discriminants (DiscriminantMismatch).
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(RationalFunction base, RationalFunction radical, RationalFunction discriminant)
      : base_(std::move(base)), radical_(std::move(radical)), disc_(std::move(discriminant)) {}

  static QuadExt scalar(const RationalFunction& value, const RationalFunction& discriminant) {
    return {value, RationalFunction(), discriminant};
  }
  /// The adjoined square root itself.
  static QuadExt root(const RationalFunction& discriminant) { return {RationalFunction(), RationalFunction(1), discriminant}; }

  [[nodiscard]] const RationalFunction& base() const { return base_; }
  [[nodiscard]] const RationalFunction& radical() const { return radical_; }
  [[nodiscard]] const RationalFunction& discriminant() const { return disc_; }
  [[nodiscard]] bool is_zero() const { return base_.is_zero() && radical_.is_zero(); }

  [[nodiscard]] QuadExt conjugate() const { return {base_, -radical_, disc_}; }
  /// base^2 - radical^2 * discriminant
  [[nodiscard]] RationalFunction norm() const { return base_ * base_ - radical_ * radical_ * disc_; }
  [[nodiscard]] QuadExt inverse() const;
  /// d/dx using rho' = discriminant' / (2 * discriminant) * rho.
  [[nodiscard]] QuadExt derivative() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }
  QuadExt& operator*=(const RationalFunction& c);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend QuadExt operator*(QuadExt a, const RationalFunction& c) { return a *= c; }
  friend QuadExt operator*(const RationalFunction& c, QuadExt a) { return a *= c; }
  friend QuadExt operator-(const QuadExt& a) { return {-a.base_, -a.radical_, a.disc_}; }
  friend bool operator==(const QuadExt&, const QuadExt&) = default;

  [[nodiscard]] std::string to_string(const std::string& root_name = "rho") const;

 private:
  void check(const QuadExt& o) const;

  RationalFunction base_;
  RationalFunction radical_;
  RationalFunction disc_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

}  // namespace altrun
