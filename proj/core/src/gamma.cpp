#include "altrun/gamma.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

#include "altrun/errors.hpp"

namespace altrun {

namespace {

Poly one_plus_x2_pow(long m) { return Poly{1, 0, 1}.pow(static_cast<unsigned>(m)); }

nlohmann::json coeffs_json(const std::vector<Rational>& v) {
  auto arr = nlohmann::json::array();
  for (const auto& c : v) arr.push_back(c.to_string());
  return arr;
}

void require_symmetric(const Poly& p, long low, long high) {
  if (!is_symmetric(p, low, high))
    throw NotSymmetric(p.to_string() + " is not symmetric on [" + std::to_string(low) + ", " + std::to_string(high) + "]");
}

}  // namespace

Poly GammaForm::reassemble() const {
  Poly out;
  for (std::size_t k = 0; k < gammas.size(); ++k)
    out += Poly::monomial(gammas[k], k) * one_plus_x_pow(static_cast<unsigned>(base_degree - 2 * static_cast<long>(k)));
  return out.shift(static_cast<std::size_t>(shift));
}

bool GammaForm::is_positive() const {
  return std::all_of(gammas.begin(), gammas.end(), [](const Rational& g) { return g.sign() >= 0; });
}

GammaForm GammaForm::unshifted() const {
  GammaForm out{0, base_degree + 2 * shift, std::vector<Rational>(static_cast<std::size_t>(shift))};
  out.gammas.insert(out.gammas.end(), gammas.begin(), gammas.end());
  return out;
}

Rational GammaForm::coeff(long k) const {
  const long i = k - shift;
  return (i < 0 || i >= static_cast<long>(gammas.size())) ? Rational() : gammas[static_cast<std::size_t>(i)];
}

std::string GammaForm::to_json() const {
  nlohmann::json j;
  j["nu"] = nullptr;
  j["base"] = base_degree;
  j["shift"] = shift;
  j["coeffs"] = coeffs_json(gammas);
  return j.dump();
}

Poly SemiGammaForm::reassemble() const {
  Poly out;
  for (std::size_t k = 0; k < lambdas.size(); ++k)
    out += Poly::monomial(lambdas[k], k) * one_plus_x2_pow(half_degree - static_cast<long>(k));
  if (nu == 1) out *= Poly{1, 1};
  return out.shift(static_cast<std::size_t>(shift));
}

bool SemiGammaForm::is_positive() const {
  return std::all_of(lambdas.begin(), lambdas.end(), [](const Rational& g) { return g.sign() >= 0; });
}

std::string SemiGammaForm::to_json() const {
  nlohmann::json j;
  j["nu"] = nu;
  j["base"] = half_degree;
  j["shift"] = shift;
  j["coeffs"] = coeffs_json(lambdas);
  return j.dump();
}

bool operator==(const GammaForm& a, const GammaForm& b) {
  return a.shift == b.shift && a.base_degree == b.base_degree && a.gammas == b.gammas;
}

bool operator==(const SemiGammaForm& a, const SemiGammaForm& b) {
  return a.shift == b.shift && a.nu == b.nu && a.half_degree == b.half_degree && a.lambdas == b.lambdas;
}

GammaForm gamma_expand(const Poly& p, long low, long high) {
  require_symmetric(p, low, high);
  const long d = high - low;
  GammaForm out{low, d, {}};
  // x^k (1+x)^(d-2k) has lowest term x^k, so peel from the bottom.
  Poly rest = p.is_zero() ? Poly() : (low >= 0 ? p.unshift(static_cast<std::size_t>(low)) : p);
  for (long k = 0; 2 * k <= d; ++k) {
    const Rational g = rest.coeff(k);
    out.gammas.push_back(g);
    if (!g.is_zero()) rest -= Poly::monomial(g, static_cast<std::size_t>(k)) * one_plus_x_pow(static_cast<unsigned>(d - 2 * k));
  }
  if (!rest.is_zero()) throw NotSymmetric("gamma expansion left residue " + rest.to_string());
  return out;
}

SemiGammaForm semi_gamma_expand(const Poly& p, long low, long high) {
  require_symmetric(p, low, high);
  const long d = high - low;
  SemiGammaForm out{low, static_cast<int>(d % 2), d / 2, {}};
  Poly rest = p.is_zero() ? Poly() : p.unshift(static_cast<std::size_t>(std::max(low, 0L)));
  if (out.nu == 1) {
    // Symmetric polynomials of odd span vanish at -1; failure here is a bug.
    rest = divide_exact(rest, Poly{1, 1});
  }
  const long m = out.half_degree;
  for (long k = 0; k <= m; ++k) {
    const Rational l = rest.coeff(k);
    out.lambdas.push_back(l);
    if (!l.is_zero()) rest -= Poly::monomial(l, static_cast<std::size_t>(k)) * one_plus_x2_pow(m - k);
  }
  if (!rest.is_zero()) throw NotSymmetric("semi-gamma expansion left residue " + rest.to_string());
  return out;
}

SemiGammaForm gamma_to_lambda(const GammaForm& g) {
  const long m = g.base_degree / 2;
  SemiGammaForm out{g.shift, static_cast<int>(g.base_degree % 2), m, std::vector<Rational>(static_cast<std::size_t>(m) + 1)};
  for (long k = 0; k <= m; ++k) {
    Rational acc;
    for (long i = 0; i <= k && i < static_cast<long>(g.gammas.size()); ++i)
      acc += Rational(binomial(m - i, k - i)) * Rational(BigInt(BigInt(1) << static_cast<unsigned>(k - i))) * g.gammas[static_cast<std::size_t>(i)];
    out.lambdas[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

std::pair<Poly, Poly> split_even_odd(const Poly& p, int nu) {
  if (nu != 0 && nu != 1) throw DomainError("nu must be 0 or 1");
  const Poly base = nu == 1 ? divide_exact(p, Poly{1, 1}) : p;
  std::vector<Rational> even, odd;
  for (long k = 0; k <= base.degree(); ++k) (k % 2 == 0 ? even : odd).push_back(base.coeff(k));
  return {Poly(std::move(even)), Poly(std::move(odd))};
}

Poly david_barton_assemble(const GammaForm& m_row, long n, long delta) {
  const GammaForm form = m_row.unshifted();
  if (form.base_degree != n + delta)
    throw DomainError("gamma form has base degree " + std::to_string(form.base_degree) + ", expected n + delta = " +
                      std::to_string(n + delta));
  Poly out;
  for (long k = 0; k < static_cast<long>(form.gammas.size()); ++k) {
    const Rational& mk = form.gammas[static_cast<std::size_t>(k)];
    if (mk.is_zero()) continue;
    const long e = n - delta - k;
    if (e < 0) throw DomainError("negative exponent of (1+x) at k = " + std::to_string(k));
    const Rational weight = Rational(2).pow(2 * delta - k);
    out += Poly::monomial(weight * mk, static_cast<std::size_t>(k)) * one_plus_x_pow(static_cast<unsigned>(e));
  }
  return out;
}

IdentityCheck david_barton_check(const Poly& m_poly, const Poly& n_poly, long n, long delta,
                                 const std::vector<Rational>& t_samples) {
  IdentityCheck out;
  out.degree = n_poly.degree();
  out.samples = t_samples.size();
  out.pass = true;
  for (std::size_t i = 0; i < t_samples.size(); ++i) {
    const Rational& t = t_samples[i];
    if (t.sign() <= 0 || t >= Rational(1)) throw DegenerateSample("sample t = " + t.to_string() + " is outside (0, 1)");
    const Rational t2 = t * t;
    const Rational x = (Rational(1) - t2) / (Rational(1) + t2);
    const Rational half_one_plus_x = (Rational(1) + x) / Rational(2);
    const Rational rhs = half_one_plus_x.pow(n - delta) * (Rational(1) + t).pow(n + delta) *
                         m_poly.evaluate((Rational(1) - t) / (Rational(1) + t));
    if (rhs != n_poly.evaluate(x)) {
      out.pass = false;
      if (out.first_mismatch < 0) out.first_mismatch = static_cast<long>(i);
    }
  }
  if (static_cast<long>(out.samples) <= out.degree) out.pass = false;
  return out;
}

bool david_barton_identity_check(const Poly& m_poly, const Poly& n_poly, long n, long delta,
                                 const std::vector<Rational>& t_samples) {
  return david_barton_check(m_poly, n_poly, n, delta, t_samples).pass;
}

std::vector<Rational> interior_samples(std::size_t count) {
  std::vector<Rational> out;
  for (long den = 2; out.size() < count; ++den)
    for (long num = 1; num < den && out.size() < count; ++num)
      if (std::gcd(num, den) == 1) out.emplace_back(num, den);
  return out;
}

}  // namespace altrun
