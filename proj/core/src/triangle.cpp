#include "altrun/triangle.hpp"

#include <algorithm>

#include "altrun/errors.hpp"

namespace altrun {

const Triangle::Row& Triangle::row(long n) const {
  if (n < 0 || n > max_n()) throw DomainError("triangle " + name_ + " has no row " + std::to_string(n));
  return rows_[static_cast<std::size_t>(n)];
}

void Triangle::push_row(long k_min, std::vector<Poly> entries) {
  Row r;
  r.k_min = k_min;
  r.k_max = k_min + static_cast<long>(entries.size()) - 1;
  r.entries = std::move(entries);
  rows_.push_back(std::move(r));
}

void Triangle::push_dense_row(const std::vector<Poly>& entries_from_zero, long k_min, long k_max) {
  for (long k = 0; k < static_cast<long>(entries_from_zero.size()); ++k)
    if ((k < k_min || k > k_max) && !entries_from_zero[static_cast<std::size_t>(k)].is_zero())
      throw NotOfExpectedShape("triangle " + name_ + ": nonzero entry outside the k-range");
  std::vector<Poly> window;
  for (long k = k_min; k <= k_max; ++k)
    window.push_back(k < static_cast<long>(entries_from_zero.size()) ? entries_from_zero[static_cast<std::size_t>(k)] : Poly());
  push_row(k_min, std::move(window));
}

Poly Triangle::at(long n, long k) const {
  if (n < 0 || n > max_n()) return {};
  const Row& r = rows_[static_cast<std::size_t>(n)];
  if (k < r.k_min || k > r.k_max) return {};
  return r.entries[static_cast<std::size_t>(k - r.k_min)];
}

Rational Triangle::scalar(long n, long k) const {
  const Poly p = at(n, k);
  if (p.degree() > 0) throw NotOfExpectedShape("entry (" + std::to_string(n) + "," + std::to_string(k) + ") is not a scalar");
  return p.coeff(0);
}

void Triangle::set(long n, long k, const Poly& value) {
  Row& r = rows_.at(static_cast<std::size_t>(n));
  if (k < r.k_min || k > r.k_max) throw DomainError("entry outside the k-range");
  r.entries[static_cast<std::size_t>(k - r.k_min)] = value;
}

Poly Triangle::row_poly(long n) const {
  const Row& r = row(n);
  std::vector<Rational> coeffs;
  for (long k = r.k_min; k <= r.k_max; ++k) {
    if (k < 0) continue;
    if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(static_cast<std::size_t>(k) + 1);
    coeffs[static_cast<std::size_t>(k)] = scalar(n, k);
  }
  return Poly(std::move(coeffs));
}

MultiPoly Triangle::row_multipoly(long n, const std::string& var) const {
  Alphabet alphabet{var};
  if (!parameter_.empty()) alphabet.push_back(parameter_);
  const Row& r = row(n);
  MultiPoly out(alphabet);
  for (long k = std::max(r.k_min, 0L); k <= r.k_max; ++k) {
    const Poly entry = at(n, k);
    MultiPoly lifted = parameter_.empty() ? MultiPoly::constant(alphabet, entry.coeff(0))
                                          : MultiPoly::from_univariate(alphabet, parameter_, entry);
    Exponents e(alphabet.size(), 0);
    e[0] = static_cast<unsigned>(k);
    out += lifted * MultiPoly::monomial(alphabet, e);
  }
  return out;
}

bool operator==(const Triangle::Row& a, const Triangle::Row& b) {
  const long lo = std::min(a.k_min, b.k_min);
  const long hi = std::max(a.k_max, b.k_max);
  auto get = [](const Triangle::Row& r, long k) {
    return (k < r.k_min || k > r.k_max) ? Poly() : r.entries[static_cast<std::size_t>(k - r.k_min)];
  };
  for (long k = lo; k <= hi; ++k)
    if (get(a, k) != get(b, k)) return false;
  return true;
}

bool operator==(const Triangle& a, const Triangle& b) {
  if (a.rows_.size() != b.rows_.size()) return false;
  for (std::size_t n = 0; n < a.rows_.size(); ++n)
    if (!(a.rows_[n] == b.rows_[n])) return false;
  return true;
}

}  // namespace altrun
