#include "altrun/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "altrun/errors.hpp"

namespace altrun {

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

long Poly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return static_cast<long>(i);
  return -1;
}

Rational Poly::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational Poly::evaluate(const Rational& point) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly(*it);
  return acc;
}

Poly Poly::scale_argument(const Rational& c) const {
  std::vector<Rational> v(coeffs_);
  Rational power(1);
  for (auto& coef : v) {
    coef *= power;
    power *= c;
  }
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(v));
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::shift(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(v));
}

Poly Poly::unshift(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  if (valuation() < static_cast<long>(k)) throw NotDivisible("unshift below valuation");
  return Poly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& coef : coeffs_) coef *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly operator-(const Poly& a) { return a * Rational(-1); }

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) {
        os << '-';
        mag = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) mag = -c;
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem(p.coeffs());
  const long dd = d.degree();
  const Rational lead_inv = d.leading().inverse();
  if (p.degree() < dd) return {Poly(), p};
  std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dd + 1));
  for (long k = p.degree(); k >= dd; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] * lead_inv;
    quot[static_cast<std::size_t>(k - dd)] = c;
    if (c.is_zero()) continue;
    for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= c * d.coeff(j);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly divide_exact(const Poly& p, const Poly& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero())
    throw NotDivisible("(" + p.to_string() + ") is not divisible by (" + d.to_string() + ")");
  return q;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

unsigned root_multiplicity(const Poly& p, const Rational& r) {
  if (p.is_zero()) throw ZeroPolynomial("root multiplicity of the zero polynomial");
  const Poly factor = Poly::linear_root(r);
  unsigned m = 0;
  Poly cur = p;
  while (true) {
    auto [q, rem] = divmod(cur, factor);
    if (!rem.is_zero()) return m;
    cur = std::move(q);
    ++m;
  }
}

bool is_symmetric(const Poly& p, long low, long high) {
  if (low > high) throw SupportOutOfRange("empty symmetry window");
  if (!p.is_zero() && (p.valuation() < low || p.degree() > high))
    throw SupportOutOfRange("polynomial " + p.to_string() + " has terms outside [" +
                            std::to_string(low) + ", " + std::to_string(high) + "]");
  for (long i = 0; low + i <= high - i; ++i)
    if (p.coeff(low + i) != p.coeff(high - i)) return false;
  return true;
}

Poly one_plus_x_pow(unsigned n) {
  std::vector<Rational> v(n + 1);
  for (unsigned k = 0; k <= n; ++k) v[k] = Rational(binomial(n, k));
  return Poly(std::move(v));
}

}  // namespace altrun
