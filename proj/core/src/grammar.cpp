#include "altrun/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "altrun/errors.hpp"

namespace altrun {

Grammar::Grammar(Alphabet alphabet, std::map<std::string, MultiPoly> rules) : alphabet_(std::move(alphabet)) {
  rules_.assign(alphabet_.size(), MultiPoly(alphabet_));
  for (auto& [name, image] : rules) {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
    if (it == alphabet_.end()) throw UnknownSymbol("rule for '" + name + "' outside the alphabet");
    rules_[static_cast<std::size_t>(it - alphabet_.begin())] = embed(image);
  }
}

Grammar Grammar::parse(std::string_view text, const Alphabet& extra_letters) {
  Alphabet alphabet = collect_symbols(text);
  for (const auto& e : extra_letters)
    if (std::find(alphabet.begin(), alphabet.end(), e) == alphabet.end()) alphabet.push_back(e);
  std::map<std::string, MultiPoly> rules;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(";,", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view rule = text.substr(start, end - start);
    start = end + 1;
    if (rule.find_first_not_of(" \t\n") == std::string_view::npos) continue;
    const auto arrow = rule.find("->");
    if (arrow == std::string_view::npos) throw ParseError("grammar rule without '->': '" + std::string(rule) + "'");
    std::string lhs(rule.substr(0, arrow));
    lhs.erase(std::remove_if(lhs.begin(), lhs.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
              lhs.end());
    if (lhs.empty()) throw ParseError("grammar rule with empty left-hand side");
    if (collect_symbols(lhs) != Alphabet{lhs}) throw ParseError("left-hand side must be a single letter: '" + lhs + "'");
    if (rules.count(lhs)) throw ParseError("duplicate rule for '" + lhs + "'");
    rules.emplace(lhs, parse_multipoly(rule.substr(arrow + 2), alphabet));
  }
  return Grammar(std::move(alphabet), std::move(rules));
}

MultiPoly Grammar::embed(const MultiPoly& p) const {
  if (p.alphabet() == alphabet_) return p;
  try {
    return p.with_alphabet(alphabet_);
  } catch (const AlphabetMismatch& e) {
    throw UnknownSymbol(e.what());
  }
}

MultiPoly Grammar::rule(std::string_view letter) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), letter);
  if (it == alphabet_.end()) throw UnknownSymbol("symbol '" + std::string(letter) + "' is not in the grammar alphabet");
  return rules_[static_cast<std::size_t>(it - alphabet_.begin())];
}

Alphabet Grammar::constants() const {
  Alphabet out;
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    if (rules_[i].is_zero()) out.push_back(alphabet_[i]);
  return out;
}

MultiPoly Grammar::apply(const MultiPoly& input) const {
  const MultiPoly p = embed(input);
  MultiPoly::Terms out;
  Exponents e(alphabet_.size());
  for (const auto& [exps, c] : p.terms()) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0 || rules_[i].is_zero()) continue;
      const Rational weight = c * Rational(static_cast<long>(exps[i]));
      for (const auto& [rule_exps, rule_c] : rules_[i].terms()) {
        for (std::size_t j = 0; j < e.size(); ++j) e[j] = exps[j] + rule_exps[j];
        --e[i];
        auto [it, inserted] = out.try_emplace(e, weight * rule_c);
        if (!inserted) it->second += weight * rule_c;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return MultiPoly(alphabet_, std::move(out));
}

MultiPoly Grammar::iterate(const MultiPoly& seed, unsigned n) const {
  MultiPoly cur = embed(seed);
  for (unsigned i = 0; i < n; ++i) cur = apply(cur);
  return cur;
}

std::vector<MultiPoly> Grammar::orbit(const MultiPoly& seed, unsigned n) const {
  std::vector<MultiPoly> out{embed(seed)};
  for (unsigned i = 0; i < n; ++i) out.push_back(apply(out.back()));
  return out;
}

std::string Grammar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (rules_[i].is_zero()) continue;
    if (!first) os << "; ";
    first = false;
    os << alphabet_[i] << "->" << rules_[i].to_string();
  }
  return os.str();
}

namespace grammars {

Grammar runs_a() { return Grammar::parse("a->a*b; b->b*c; c->b^2"); }
Grammar runs_2a() { return Grammar::parse("a->2*a*b; b->b*c; c->b^2"); }
Grammar q_runs() { return Grammar::parse("a->q*a*b; b->b*c; c->b^2"); }
Grammar stirling() { return Grammar::parse("x->x*y*z; y->y*z^2; z->y^2*z"); }
Grammar gamma_form() { return Grammar::parse("x->x*a; a->a*(b^2-2*a); b->a*b"); }
Grammar semi_gamma() { return Grammar::parse("x->x*u; u->u*v; v->4*u^2"); }

}  // namespace grammars

std::vector<MultiPoly> extract_row(const MultiPoly& image, const MultiPoly& seed, const RowShape& shape, unsigned n) {
  if (seed.terms().size() != 1 || !seed.terms().begin()->second.is_one())
    throw NotOfExpectedShape("seed must be a monic monomial");
  const MultiPoly seed_in = seed.alphabet() == image.alphabet() ? seed : seed.with_alphabet(image.alphabet());
  const Alphabet& alphabet = image.alphabet();
  const Exponents& seed_exps = seed_in.terms().begin()->first;
  const std::size_t count_idx = image.index_of(shape.count_letter);
  const std::size_t co_idx = image.index_of(shape.co_letter);

  Alphabet residual;
  std::vector<std::size_t> residual_idx;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (i == count_idx || i == co_idx || seed_exps[i] > 0) continue;
    residual.push_back(alphabet[i]);
    residual_idx.push_back(i);
  }

  const unsigned total = shape.degree_per_step * n;
  const unsigned k_max = total / shape.count_weight;
  std::vector<MultiPoly> row(k_max + 1, MultiPoly(residual));
  for (const auto& [e, c] : image.terms()) {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      if (seed_exps[i] > 0 && e[i] != seed_exps[i])
        throw NotOfExpectedShape("term does not carry the seed factor exactly once: " + image.to_string());
    const unsigned k = e[count_idx];
    if (shape.count_weight * k + shape.co_weight * e[co_idx] != total)
      throw NotOfExpectedShape("image is not homogeneous of degree " + std::to_string(total));
    Exponents r(residual.size());
    for (std::size_t j = 0; j < residual_idx.size(); ++j) r[j] = e[residual_idx[j]];
    row[k] += MultiPoly::monomial(residual, r, c);
  }
  return row;
}

Triangle grammar_triangle(const Grammar& g, const MultiPoly& seed, const RowShape& shape, unsigned max_n,
                          std::string name) {
  std::string parameter;
  MultiPoly cur = g.iterate(seed, 0);
  Triangle out;
  for (unsigned n = 0; n <= max_n; ++n) {
    if (n > 0) cur = g.apply(cur);
    const std::vector<MultiPoly> entries = extract_row(cur, seed, shape, n);
    const Alphabet& residual = entries.front().alphabet();
    if (residual.size() > 1) throw NotOfExpectedShape("more than one residual letter");
    if (n == 0) {
      parameter = residual.empty() ? std::string() : residual.front();
      out = Triangle(name, parameter);
    }
    std::vector<Poly> polys;
    for (const auto& entry : entries) polys.push_back(entry.to_univariate(parameter));
    out.push_row(0, std::move(polys));
  }
  return out;
}

}  // namespace altrun
