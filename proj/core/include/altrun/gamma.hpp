#pragma once

#include <string>
#include <utility>
#include <vector>

#include "altrun/poly.hpp"

namespace altrun {

/// x^shift * sum_k gammas[k] x^k (1+x)^(base_degree - 2k)
struct GammaForm {
  long shift = 0;
  long base_degree = 0;
  std::vector<Rational> gammas;  // k = 0 .. floor(base_degree / 2)

  [[nodiscard]] Poly reassemble() const;
  [[nodiscard]] bool is_positive() const;  // all gammas >= 0
  /// Same polynomial with shift folded in: base_degree + 2*shift, shift 0.
  [[nodiscard]] GammaForm unshifted() const;
  [[nodiscard]] Rational coeff(long k) const;
  [[nodiscard]] std::string to_json() const;
};

/// x^shift * (1+x)^nu * sum_k lambdas[k] x^k (1+x^2)^(half_degree - k)
struct SemiGammaForm {
  long shift = 0;
  int nu = 0;
  long half_degree = 0;
  std::vector<Rational> lambdas;  // k = 0 .. half_degree

  [[nodiscard]] Poly reassemble() const;
  [[nodiscard]] bool is_positive() const;
  [[nodiscard]] std::string to_json() const;
};

bool operator==(const GammaForm& a, const GammaForm& b);
bool operator==(const SemiGammaForm& a, const SemiGammaForm& b);

/// Unique gamma expansion of p over the symmetric window [low, high]
/// (x^low is factored out first). Throws NotSymmetric / SupportOutOfRange.
GammaForm gamma_expand(const Poly& p, long low, long high);

/// Semi-gamma expansion with nu = (high - low) mod 2. Throws NotSymmetric.
SemiGammaForm semi_gamma_expand(const Poly& p, long low, long high);

/// lambda_k = sum_i C(m-i, k-i) 2^(k-i) gamma_i, peeling (1+x) when the
/// base degree is odd.
SemiGammaForm gamma_to_lambda(const GammaForm& g);

/// g1(x^2) + x g2(x^2) = p / (1+x)^nu. Throws NotDivisible.
std::pair<Poly, Poly> split_even_odd(const Poly& p, int nu);

/// N_n(x) = sum_k 2^(2 delta - k) M(n,k) x^k (1+x)^(n - delta - k), reading
/// M(n,k) from a gamma form of total base degree n + delta. Throws
/// DomainError on a negative exponent or mismatched degree.
Poly david_barton_assemble(const GammaForm& m_row, long n, long delta);

struct IdentityCheck {
  bool pass = false;
  std::size_t samples = 0;
  long degree = -1;
  long first_mismatch = -1;  // index into the samples, -1 when none
};

/// Checks N_n(x) = ((1+x)/2)^(n-delta) (1+w)^(n+delta) M_n((1-w)/(1+w)),
/// w = sqrt((1-x)/(1+x)), at x = (1-t^2)/(1+t^2) where w = t exactly. Passes
/// iff every sample agrees and there are more samples than deg N_n.
/// Throws DegenerateSample for t outside (0, 1).
IdentityCheck david_barton_check(const Poly& m_poly, const Poly& n_poly, long n, long delta,
                                 const std::vector<Rational>& t_samples);
bool david_barton_identity_check(const Poly& m_poly, const Poly& n_poly, long n, long delta,
                                 const std::vector<Rational>& t_samples);

/// `count` distinct rationals in (0, 1): 1/2, 1/3, 2/3, 1/4, 3/4, ...
std::vector<Rational> interior_samples(std::size_t count);

}  // namespace altrun
