#include "altrun/ratfunc.hpp"

#include <ostream>

#include "altrun/errors.hpp"

namespace altrun {

RationalFunction::RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Poly RationalFunction::to_poly() const {
  if (!is_polynomial()) throw NotDivisible("rational function " + to_string() + " is not a polynomial");
  return num_;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RationalFunction out;
  out.num_ = num_.pow(static_cast<unsigned>(exponent));
  out.den_ = den_.pow(static_cast<unsigned>(exponent));
  out.canonicalize();
  return out;
}

Rational RationalFunction::evaluate(const Rational& point) const {
  const Rational d = den_.evaluate(point);
  if (d.is_zero()) throw DivisionByZero("rational function pole at " + point.to_string());
  return num_.evaluate(point) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace altrun
