#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altrun/poly.hpp"
#include "altrun/quadext.hpp"
#include "altrun/series.hpp"
#include "altrun/triangle.hpp"

namespace altrun {

/// The closed form (1-x)(1+rho+2x e^{rho z}+(1-rho) e^{2 rho z}) /
/// (1+rho-x^2+(1-rho-x^2) e^{2 rho z}) with x and rho = sqrt(1-x^2) supplied
/// as elements of the coefficient domain.
template <class C>
TruncatedSeries<C> up_down_closed_form(const C& x, const C& rho, unsigned order) {
  using S = TruncatedSeries<C>;
  const C one = CoeffDomain<C>::lift(x, Rational(1));
  const C zero = CoeffDomain<C>::lift(x, Rational(0));
  const S e1 = exp(S::linear(zero, rho, order));
  const S e2 = exp(S::linear(zero, rho + rho, order));
  const S num = (S::constant(one + rho, order) + e1 * (x + x) + e2 * (one - rho)) * (one - x);
  const S den = S::constant(one + rho - x * x, order) + e2 * (one - rho - x * x);
  return num / den;
}

/// Up-down runs EGF computed in Q(x)[rho]/(rho^2 - (1-x^2)), before the
/// radical part is dropped.
TruncatedSeries<QuadExt> egf_T_extension(unsigned order);

/// sum_n T_n(x) z^n/n!. Throws ExtensionResidue if any coefficient keeps a
/// radical part or a non-polynomial base.
TruncatedSeries<Poly> egf_T(unsigned order);

/// Carlitz's form; n! [z^n] = sum_k R(n+1,k) x^(n-k).
TruncatedSeries<Poly> egf_carlitz(unsigned order);

/// T(x,z)^q0.
TruncatedSeries<Poly> egf_Rq(const Rational& q0, unsigned order);

/// Outcome of comparing a closed-form series to its recurrence oracle,
/// coefficient by coefficient after EGF normalization.
struct SeriesReport {
  std::string identity;
  unsigned order = 0;
  bool pass = false;
  std::optional<unsigned> first_mismatch;
  std::vector<std::string> closed_form;
  std::vector<std::string> oracle;

  [[nodiscard]] std::string to_json() const;  // {identity, order, pass, first_mismatch}
};

SeriesReport check_egf_T(unsigned order);
SeriesReport check_egf_carlitz(unsigned order);
SeriesReport check_egf_Rq(const Rational& q0, unsigned order);
/// T^(1/2) with x -> 2x against sum_k f(n,k) x^k.
SeriesReport check_egf_semi_gamma(unsigned order);
/// Coefficients of R(-x,z;-q0) against R(x,z;q0).
SeriesReport check_Rq_parity(const Rational& q0, unsigned order);
/// e^{q0 x (y-1) z} R(x,z;q0) against the inclusion-exclusion sum.
SeriesReport check_Rxyz(const Rational& q0, unsigned order);

enum class SpecialIdentity { derangement, F_dual, f_diag, d_diag, d_diag_reciprocal };

/// derangement: e^{-xz} T(x,z) vs d_n(x)
/// F_dual:      sqrt(T(2x0/(1+x0^2), (1+x0^2) z)) vs F_n(x0); needs x0 != +-1
/// f_diag:      sqrt((1+tan z)/(1-tan z)) vs f(n,n)
/// d_diag:      e^{-z}(tan z + sec z) vs the top coefficient of d_n
/// d_diag_reciprocal: e^{-z}/(tan z + sec z) vs the same; this one is false
///              from n = 1 on (-2 against d_{1,1} = 0) and is kept as a control
SeriesReport egf_specialized_identity(SpecialIdentity which, unsigned order, const Rational& x0 = Rational(0));

/// (1 - x^2 z) dR/dz = x(1-x^2) dR/dx + q x R for R built from `rq` rows,
/// compared through z^(order-1).
bool pde_check(const Triangle& rq, unsigned order);
bool pde_check(unsigned order);

/// theta^n r with theta = x d/dx and r^2 = (1+x)/(1-x).
QuadExt theta_power_r(unsigned n);
/// The closed form: r F_n/(1-x^2)^n for even n and
/// F_n / (r (1-x^2)^(n-1) (1-x)^2) for odd n.
QuadExt theta_closed_form(unsigned n, const Poly& f_n);

}  // namespace altrun
