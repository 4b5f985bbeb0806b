#include "altrun/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "altrun/errors.hpp"

namespace altrun {

MultiPoly::MultiPoly(Alphabet alphabet, Terms terms) : alphabet_(std::move(alphabet)) {
  for (auto& [e, c] : terms) {
    if (e.size() != alphabet_.size()) throw AlphabetMismatch("exponent tuple length differs from alphabet size");
    add_term(e, c);
  }
}

MultiPoly MultiPoly::constant(const Alphabet& alphabet, const Rational& c) {
  MultiPoly p(alphabet);
  p.add_term(Exponents(alphabet.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const Alphabet& alphabet, std::string_view name) {
  MultiPoly p(alphabet);
  Exponents e(alphabet.size(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const Alphabet& alphabet, const Exponents& exps, const Rational& c) {
  if (exps.size() != alphabet.size()) throw AlphabetMismatch("exponent tuple length differs from alphabet size");
  MultiPoly p(alphabet);
  p.add_term(exps, c);
  return p;
}

MultiPoly MultiPoly::from_univariate(const Alphabet& alphabet, std::string_view letter, const Poly& p) {
  MultiPoly out(alphabet);
  const std::size_t idx = out.index_of(letter);
  for (long k = 0; k <= p.degree(); ++k) {
    Exponents e(alphabet.size(), 0);
    e[idx] = static_cast<unsigned>(k);
    out.add_term(e, p.coeff(k));
  }
  return out;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                            [](unsigned v) { return v == 0; }));
}

Rational MultiPoly::constant_term() const { return coeff(Exponents(alphabet_.size(), 0)); }

Rational MultiPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational() : it->second;
}

std::size_t MultiPoly::index_of(std::string_view letter) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_[i] == letter) return i;
  throw UnknownSymbol("symbol '" + std::string(letter) + "' is not in the alphabet");
}

bool MultiPoly::has_letter(std::string_view letter) const {
  return std::find(alphabet_.begin(), alphabet_.end(), letter) != alphabet_.end();
}

long MultiPoly::degree_in(std::string_view letter) const {
  const std::size_t idx = index_of(letter);
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[idx]));
  return d;
}

void MultiPoly::check_same_alphabet(const MultiPoly& o) const {
  if (alphabet_ != o.alphabet_) throw AlphabetMismatch("operands have different alphabets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (alphabet_.empty() && terms_.empty() && !o.alphabet_.empty()) alphabet_ = o.alphabet_;
  check_same_alphabet(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (alphabet_.empty() && terms_.empty() && !o.alphabet_.empty()) alphabet_ = o.alphabet_;
  check_same_alphabet(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_alphabet(b);
  MultiPoly out(a.alphabet_);
  Exponents e(a.alphabet_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(alphabet_, Rational(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::partial(std::string_view letter) const {
  const std::size_t idx = index_of(letter);
  MultiPoly out(alphabet_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents d = e;
    --d[idx];
    out.add_term(d, c * Rational(static_cast<long>(e[idx])));
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& images, const Alphabet& target) const {
  std::vector<MultiPoly> letter_image;
  letter_image.reserve(alphabet_.size());
  for (const auto& name : alphabet_) {
    auto it = images.find(name);
    if (it != images.end()) {
      if (it->second.alphabet() != target) throw AlphabetMismatch("image of '" + name + "' is not over the target alphabet");
      letter_image.push_back(it->second);
    } else {
      letter_image.push_back(variable(target, name));
    }
  }
  // Powers are cached per letter since grammar images reuse small exponents.
  std::vector<std::vector<MultiPoly>> powers(alphabet_.size());
  auto power_of = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, Rational(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * letter_image[i]);
    return cache[k];
  };
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * power_of(i, e[i]);
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::specialize(std::string_view letter, const Rational& value) const {
  const std::size_t idx = index_of(letter);
  MultiPoly out(alphabet_);
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    d[idx] = 0;
    out.add_term(d, c * value.pow(e[idx]));
  }
  return out;
}

MultiPoly MultiPoly::with_alphabet(const Alphabet& target) const {
  std::vector<long> map_to(alphabet_.size(), -1);
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    auto it = std::find(target.begin(), target.end(), alphabet_[i]);
    if (it != target.end()) map_to[i] = it - target.begin();
  }
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    Exponents d(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map_to[i] < 0) throw AlphabetMismatch("letter '" + alphabet_[i] + "' missing from target alphabet");
      d[static_cast<std::size_t>(map_to[i])] = e[i];
    }
    out.add_term(d, c);
  }
  return out;
}

Poly MultiPoly::to_univariate(std::string_view letter) const {
  if (terms_.empty()) return {};
  const bool known = has_letter(letter);
  const std::size_t idx = known ? index_of(letter) : 0;
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0 && (!known || i != idx))
        throw NotOfExpectedShape("polynomial " + to_string() + " is not univariate in '" + std::string(letter) + "'");
    const std::size_t k = known ? e[idx] : 0;
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] += c;
  }
  return Poly(std::move(coeffs));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const unsigned da = std::accumulate(a.first.begin(), a.first.end(), 0u);
    const unsigned db = std::accumulate(b.first.begin(), b.first.end(), 0u);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rational mag = c;
    if (c.sign() < 0) mag = -c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (!mag.is_one() || std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; })) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << alphabet_[i];
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace altrun
