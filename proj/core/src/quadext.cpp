#include "altrun/quadext.hpp"

#include <ostream>

#include "altrun/errors.hpp"

namespace altrun {

void QuadExt::check(const QuadExt& o) const {
  if (disc_ != o.disc_)
    throw DiscriminantMismatch("mixing square roots of " + disc_.to_string() + " and " + o.disc_.to_string());
}

QuadExt QuadExt::inverse() const {
  const RationalFunction n = norm();
  if (n.is_zero()) throw DivisionByZero("inverse of a zero-norm quadratic element");
  const RationalFunction inv = n.inverse();
  return {base_ * inv, -radical_ * inv, disc_};
}

QuadExt QuadExt::derivative() const {
  RationalFunction rad = radical_.derivative();
  if (!radical_.is_zero()) rad += radical_ * disc_.derivative() / (RationalFunction(2) * disc_);
  return {base_.derivative(), rad, disc_};
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  check(o);
  base_ += o.base_;
  radical_ += o.radical_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  check(o);
  base_ -= o.base_;
  radical_ -= o.radical_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  check(o);
  RationalFunction b = base_ * o.base_ + radical_ * o.radical_ * disc_;
  RationalFunction r = base_ * o.radical_ + radical_ * o.base_;
  base_ = std::move(b);
  radical_ = std::move(r);
  return *this;
}

QuadExt& QuadExt::operator*=(const RationalFunction& c) {
  base_ *= c;
  radical_ *= c;
  return *this;
}

std::string QuadExt::to_string(const std::string& root_name) const {
  if (radical_.is_zero()) return base_.to_string();
  std::string out;
  if (!base_.is_zero()) out = "(" + base_.to_string() + ") + ";
  return out + "(" + radical_.to_string() + ")*" + root_name;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.to_string(); }

}  // namespace altrun
