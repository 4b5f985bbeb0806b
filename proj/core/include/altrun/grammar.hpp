#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "altrun/multipoly.hpp"
#include "altrun/triangle.hpp"

namespace altrun {

/// Context-free (Chen) grammar: each letter is replaced by a polynomial over
/// the same alphabet. Letters without a rule are constants (zero image).
class Grammar {
 public:
  Grammar(Alphabet alphabet, std::map<std::string, MultiPoly> rules);

  /// One-line form "a->q*a*b; b->b*c; c->b^2". The alphabet lists letters in
  /// order of first appearance; letters that never occur on a left-hand side
  /// become constants. `extra_letters` are appended when absent.
  static Grammar parse(std::string_view text, const Alphabet& extra_letters = {});

  [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
  [[nodiscard]] MultiPoly rule(std::string_view letter) const;
  [[nodiscard]] Alphabet constants() const;
  [[nodiscard]] MultiPoly letter(std::string_view name) const { return MultiPoly::variable(alphabet_, name); }
  [[nodiscard]] MultiPoly parse_poly(std::string_view text) const { return parse_multipoly(text, alphabet_); }

  /// Formal derivative D_G: linear, Leibniz, D(letter) = rule(letter).
  /// Throws UnknownSymbol when p uses letters outside the alphabet.
  [[nodiscard]] MultiPoly apply(const MultiPoly& p) const;
  /// D_G applied n times; n = 0 returns the seed.
  [[nodiscard]] MultiPoly iterate(const MultiPoly& seed, unsigned n) const;
  /// seed, D(seed), ..., D^n(seed)
  [[nodiscard]] std::vector<MultiPoly> orbit(const MultiPoly& seed, unsigned n) const;

  [[nodiscard]] std::string to_string() const;

 private:
  [[nodiscard]] MultiPoly embed(const MultiPoly& p) const;

  Alphabet alphabet_;
  std::vector<MultiPoly> rules_;  // by alphabet index; zero for constants
};

/// The grammars used throughout the library.
namespace grammars {
Grammar runs_a();       // {a->ab, b->bc, c->b^2}: D^n(a) gives T, D^n(a^2) gives R
Grammar runs_2a();      // {a->2ab, b->bc, c->b^2}: D^n(a) gives R_{n+1}
Grammar q_runs();       // G1 {a->qab, b->bc, c->b^2}
Grammar stirling();     // G2 {x->xyz, y->yz^2, z->y^2z}
Grammar gamma_form();   // G3 {x->xa, a->a(b^2-2a), b->ab}
Grammar semi_gamma();   // G4 {x->xu, u->uv, v->4u^2}
}  // namespace grammars

/// How a homogeneous image seed * sum_k e_k count^k co^j is laid out:
/// count_weight*k + co_weight*j = degree_per_step * n.
struct RowShape {
  std::string count_letter;
  std::string co_letter;
  unsigned count_weight = 1;
  unsigned co_weight = 1;
  unsigned degree_per_step = 1;
};

/// Entries e_k (k = exponent of the count letter, 0..total/count_weight) of
/// `image` = seed * sum_k e_k count^k co^j. Entries are polynomials over the
/// remaining letters (the grammar constants). Throws NotOfExpectedShape.
std::vector<MultiPoly> extract_row(const MultiPoly& image, const MultiPoly& seed, const RowShape& shape, unsigned n);

/// Rows 0..max_n of extract_row over D^n(seed), packaged as a Triangle. At
/// most one residual letter is allowed; it becomes the triangle parameter.
Triangle grammar_triangle(const Grammar& g, const MultiPoly& seed, const RowShape& shape, unsigned max_n,
                          std::string name);

}  // namespace altrun
