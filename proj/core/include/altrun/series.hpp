#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "altrun/errors.hpp"
#include "altrun/multipoly.hpp"
#include "altrun/poly.hpp"
#include "altrun/quadext.hpp"
#include "altrun/ratfunc.hpp"
#include "altrun/rational.hpp"

namespace altrun {

/// Coefficient-domain hooks used by TruncatedSeries. `lift` builds a scalar
/// in the same ring as `like` (same discriminant, same alphabet).
template <class C>
struct CoeffDomain;

template <>
struct CoeffDomain<Rational> {
  static Rational lift(const Rational&, const Rational& r) { return r; }
  static bool is_zero(const Rational& c) { return c.is_zero(); }
  static std::optional<Rational> inverse(const Rational& c) {
    if (c.is_zero()) return std::nullopt;
    return c.inverse();
  }
  static std::string str(const Rational& c) { return c.to_string(); }
};

template <>
struct CoeffDomain<Poly> {
  static Poly lift(const Poly&, const Rational& r) { return Poly(r); }
  static bool is_zero(const Poly& c) { return c.is_zero(); }
  static std::optional<Poly> inverse(const Poly& c) {
    if (c.degree() != 0) return std::nullopt;
    return Poly(c.coeff(0).inverse());
  }
  static std::string str(const Poly& c) { return c.to_string(); }
};

template <>
struct CoeffDomain<RationalFunction> {
  static RationalFunction lift(const RationalFunction&, const Rational& r) { return RationalFunction(r); }
  static bool is_zero(const RationalFunction& c) { return c.is_zero(); }
  static std::optional<RationalFunction> inverse(const RationalFunction& c) {
    if (c.is_zero()) return std::nullopt;
    return c.inverse();
  }
  static std::string str(const RationalFunction& c) { return c.to_string(); }
};

template <>
struct CoeffDomain<QuadExt> {
  static QuadExt lift(const QuadExt& like, const Rational& r) { return QuadExt::scalar(RationalFunction(r), like.discriminant()); }
  static bool is_zero(const QuadExt& c) { return c.is_zero(); }
  static std::optional<QuadExt> inverse(const QuadExt& c) {
    if (c.norm().is_zero()) return std::nullopt;
    return c.inverse();
  }
  static std::string str(const QuadExt& c) { return c.to_string(); }
};

template <>
struct CoeffDomain<MultiPoly> {
  static MultiPoly lift(const MultiPoly& like, const Rational& r) { return MultiPoly::constant(like.alphabet(), r); }
  static bool is_zero(const MultiPoly& c) { return c.is_zero(); }
  static std::optional<MultiPoly> inverse(const MultiPoly& c) {
    if (!c.is_constant() || c.is_zero()) return std::nullopt;
    return MultiPoly::constant(c.alphabet(), c.constant_term().inverse());
  }
  static std::string str(const MultiPoly& c) { return c.to_string(); }
};

/// Power series sum_{n <= order} c_n z^n with exact coefficients. All
/// arithmetic truncates at the smaller order of its operands.
template <class C>
class TruncatedSeries {
 public:
  using Domain = CoeffDomain<C>;

  explicit TruncatedSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw DomainError("series needs at least one coefficient");
  }
  /// c0 + c1 z (remaining coefficients zero) up to `order`.
  static TruncatedSeries linear(const C& c0, const C& c1, unsigned order) {
    std::vector<C> v(order + 1, Domain::lift(c0, Rational(0)));
    v[0] = c0;
    if (order >= 1) v[1] = c1;
    return TruncatedSeries(std::move(v));
  }
  static TruncatedSeries constant(const C& c0, unsigned order) { return linear(c0, Domain::lift(c0, Rational(0)), order); }

  [[nodiscard]] unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
  [[nodiscard]] const C& operator[](std::size_t n) const { return c_.at(n); }
  [[nodiscard]] const std::vector<C>& coeffs() const { return c_; }
  /// n! * c_n, the EGF-normalized coefficient.
  [[nodiscard]] C egf(std::size_t n) const { return c_.at(n) * Domain::lift(c_[0], Rational(factorial(static_cast<unsigned>(n)))); }

  [[nodiscard]] C zero() const { return Domain::lift(c_[0], Rational(0)); }
  [[nodiscard]] C one() const { return Domain::lift(c_[0], Rational(1)); }

  [[nodiscard]] TruncatedSeries truncate(unsigned order) const {
    return TruncatedSeries(std::vector<C>(c_.begin(), c_.begin() + std::min<std::size_t>(order + 1, c_.size())));
  }

  template <class F>
  [[nodiscard]] auto map(F f) const {
    using D = std::decay_t<decltype(f(c_[0]))>;
    std::vector<D> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return TruncatedSeries<D>(std::move(v));
  }

  /// S(factor * z)
  [[nodiscard]] TruncatedSeries scale_z(const C& factor) const {
    std::vector<C> v(c_);
    C power = one();
    for (auto& c : v) {
      c = c * power;
      power = power * factor;
    }
    return TruncatedSeries(std::move(v));
  }

  /// d/dz; the result has order one less (order 0 gives the zero series).
  [[nodiscard]] TruncatedSeries derivative_z() const {
    if (c_.size() == 1) return TruncatedSeries({zero()});
    std::vector<C> v;
    for (std::size_t n = 1; n < c_.size(); ++n) v.push_back(c_[n] * Domain::lift(c_[0], Rational(static_cast<long>(n))));
    return TruncatedSeries(std::move(v));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<C> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(a.c_[i] + b.c_[i]);
    return TruncatedSeries(std::move(v));
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<C> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(a.c_[i] - b.c_[i]);
    return TruncatedSeries(std::move(v));
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<C> v(n, a.zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (Domain::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return TruncatedSeries(std::move(v));
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const C& c) {
    std::vector<C> v;
    for (const auto& x : a.c_) v.push_back(x * c);
    return TruncatedSeries(std::move(v));
  }
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    const auto inv0 = Domain::inverse(b.c_[0]);
    if (!inv0) throw NonInvertibleConstantTerm("series division by a non-invertible constant term " + Domain::str(b.c_[0]));
    const std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<C> q;
    for (std::size_t k = 0; k < n; ++k) {
      C acc = a.c_[k];
      for (std::size_t j = 1; j <= k; ++j) acc = acc - b.c_[j] * q[k - j];
      q.push_back(acc * *inv0);
    }
    return TruncatedSeries(std::move(q));
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  /// One line per n: "n  n!*c_n".
  [[nodiscard]] std::string egf_table() const {
    std::ostringstream os;
    for (std::size_t n = 0; n < c_.size(); ++n) os << n << "  " << Domain::str(egf(n)) << '\n';
    return os.str();
  }

 private:
  std::vector<C> c_;
};

namespace detail {

template <class C>
C inverse_integer(const C& like, long n) {
  return CoeffDomain<C>::lift(like, Rational(1, n));
}

template <class C>
void require_constant(const TruncatedSeries<C>& s, long value, const char* op) {
  if (!(s[0] == CoeffDomain<C>::lift(s[0], Rational(value))))
    throw BadConstantTerm(std::string(op) + " requires constant term " + std::to_string(value) + ", got " +
                          CoeffDomain<C>::str(s[0]));
}

}  // namespace detail

/// exp(S), S(0) = 0: e_n = (1/n) sum_{k=1}^n k s_k e_{n-k}.
template <class C>
TruncatedSeries<C> exp(const TruncatedSeries<C>& s) {
  detail::require_constant(s, 0, "exp");
  const auto& c = s.coeffs();
  std::vector<C> e{s.one()};
  for (std::size_t n = 1; n < c.size(); ++n) {
    C acc = s.zero();
    for (std::size_t k = 1; k <= n; ++k) acc = acc + c[k] * e[n - k] * CoeffDomain<C>::lift(c[0], Rational(static_cast<long>(k)));
    e.push_back(acc * detail::inverse_integer(c[0], static_cast<long>(n)));
  }
  return TruncatedSeries<C>(std::move(e));
}

/// log(S), S(0) = 1: n l_n = n s_n - sum_{k=1}^{n-1} k l_k s_{n-k}.
template <class C>
TruncatedSeries<C> log(const TruncatedSeries<C>& s) {
  detail::require_constant(s, 1, "log");
  const auto& c = s.coeffs();
  std::vector<C> l{s.zero()};
  for (std::size_t n = 1; n < c.size(); ++n) {
    C acc = c[n] * CoeffDomain<C>::lift(c[0], Rational(static_cast<long>(n)));
    for (std::size_t k = 1; k < n; ++k) acc = acc - l[k] * c[n - k] * CoeffDomain<C>::lift(c[0], Rational(static_cast<long>(k)));
    l.push_back(acc * detail::inverse_integer(c[0], static_cast<long>(n)));
  }
  return TruncatedSeries<C>(std::move(l));
}

/// sqrt(S), S(0) = 1, principal branch (constant term 1).
template <class C>
TruncatedSeries<C> sqrt(const TruncatedSeries<C>& s) {
  detail::require_constant(s, 1, "sqrt");
  const auto& c = s.coeffs();
  std::vector<C> p{s.one()};
  const C half = CoeffDomain<C>::lift(c[0], Rational(1, 2));
  for (std::size_t n = 1; n < c.size(); ++n) {
    C acc = c[n];
    for (std::size_t k = 1; k < n; ++k) acc = acc - p[k] * p[n - k];
    p.push_back(acc * half);
  }
  return TruncatedSeries<C>(std::move(p));
}

/// S^q = exp(q log S), S(0) = 1.
template <class C>
TruncatedSeries<C> pow_rational(const TruncatedSeries<C>& s, const Rational& q) {
  detail::require_constant(s, 1, "pow_rational");
  return exp(log(s) * CoeffDomain<C>::lift(s[0], q));
}

/// (sin S, cos S) for S(0) = 0 via sin' = cos S', cos' = -sin S'.
template <class C>
std::pair<TruncatedSeries<C>, TruncatedSeries<C>> sin_cos(const TruncatedSeries<C>& s) {
  detail::require_constant(s, 0, "sin_cos");
  const auto& c = s.coeffs();
  std::vector<C> sn{s.zero()}, cs{s.one()};
  for (std::size_t n = 1; n < c.size(); ++n) {
    C a = s.zero(), b = s.zero();
    for (std::size_t k = 1; k <= n; ++k) {
      const C w = c[k] * CoeffDomain<C>::lift(c[0], Rational(static_cast<long>(k)));
      a = a + w * cs[n - k];
      b = b - w * sn[n - k];
    }
    const C inv = detail::inverse_integer(c[0], static_cast<long>(n));
    sn.push_back(a * inv);
    cs.push_back(b * inv);
  }
  return {TruncatedSeries<C>(std::move(sn)), TruncatedSeries<C>(std::move(cs))};
}

}  // namespace altrun
