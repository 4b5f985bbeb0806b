#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "altrun/multipoly.hpp"
#include "altrun/poly.hpp"
#include "altrun/triangle.hpp"

namespace altrun {

/// Recurrence-defined triangles.
///   R      alternating runs R(n,k), rows n >= 1, k in [0, n-1]
///   T      up-down runs T(n,k), k in [0, n]
///   Rq     q-alternating runs R(n,k)(q), k in [0, n], entries in q
///   a      Eulerian gamma coefficients a(n,k), n >= 1, k in [1, floor((n+1)/2)]
///   b      type B gamma coefficients b(n,k), k in [0, floor(n/2)]
///   F      dual Stirling alternating runs F(n,k), n >= 1, k in [1, 2n-1]
///   gamma  gamma(n,k) of F_n, n >= 1, k in [1, n]
///   f      semi-gamma coefficients f(n,k) of F_n, n >= 1, k in [1, n]
/// Row 0 is (1) at k = 0 for every family except R and a, whose row 0 is empty.
enum class Family { R, T, Rq, a, b, F, gamma, f };

Family parse_family(std::string_view name);  // throws UnknownFamily
std::string to_string(Family f);

Triangle triangle(Family family, unsigned max_n);
Triangle triangle(std::string_view name, unsigned max_n);

/// Polynomial sequences, each from its own recurrence on polynomials
/// (eulerA/eulerB are assembled from the a/b triangles).
enum class Sequence { bpoly, cpoly, dpoly, gammapoly, Fpoly, eulerA, eulerB };

Sequence parse_sequence(std::string_view name);  // throws UnknownFamily
std::string to_string(Sequence s);

struct PolySeq {
  std::string name;
  long first_index = 0;
  std::vector<Poly> values;  // values[n - first_index]

  [[nodiscard]] const Poly& at(long n) const;
  [[nodiscard]] long last_index() const { return first_index + static_cast<long>(values.size()) - 1; }
};

PolySeq polyseq(Sequence s, unsigned max_n);
PolySeq polyseq(std::string_view name, unsigned max_n);

/// Substitute q = q0 in row n of an Rq-style triangle: sum_k R(n,k)(q0) x^k.
Poly q_specialize(const Triangle& rq, long n, const Rational& q0);

/// sum_i C(n,i) (q0 x y - q0 x)^i R_{n-i}(x; q0), over the alphabet {x, y}.
MultiPoly inclusion_exclusion_Rxy(unsigned n, const Rational& q0);

enum class EulerType { A, B };

/// A_n(x) = sum_k a(n,k) x^k (1+x)^{n+1-2k} (n >= 1, no constant term) or
/// B_n(x) = sum_k b(n,k) x^k (1+x)^{n-2k}.
Poly eulerian(unsigned n, EulerType type);

}  // namespace altrun
