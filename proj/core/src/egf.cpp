#include "altrun/egf.hpp"

#include "json.hpp"

#include "altrun/errors.hpp"
#include "altrun/families.hpp"
#include "altrun/multipoly.hpp"

namespace altrun {

namespace {

const RationalFunction& one_minus_x2() {
  static const RationalFunction d(Poly{1, 0, -1});
  return d;
}

Poly drop_radical(const QuadExt& c, std::size_t n) {
  if (!c.radical().is_zero())
    throw ExtensionResidue("coefficient " + std::to_string(n) + " keeps a radical part " + c.radical().to_string());
  if (!c.base().is_polynomial())
    throw ExtensionResidue("coefficient " + std::to_string(n) + " is not a polynomial: " + c.base().to_string());
  return c.base().num();
}

TruncatedSeries<Poly> reduce(const TruncatedSeries<QuadExt>& s) {
  std::vector<Poly> out;
  for (std::size_t n = 0; n <= s.order(); ++n) out.push_back(drop_radical(s[n], n));
  return TruncatedSeries<Poly>(std::move(out));
}

template <class A, class B>
SeriesReport compare(std::string identity, unsigned order, const A& closed, const B& oracle) {
  SeriesReport rep{std::move(identity), order, true, std::nullopt, {}, {}};
  for (unsigned n = 0; n <= order; ++n) {
    const auto lhs = closed(n);
    const auto rhs = oracle(n);
    rep.closed_form.push_back(lhs.to_string());
    rep.oracle.push_back(rhs.to_string());
    if (!(lhs == rhs) && !rep.first_mismatch) {
      rep.first_mismatch = n;
      rep.pass = false;
    }
  }
  return rep;
}

TruncatedSeries<Rational> tan_z(unsigned order) {
  const auto [s, c] = sin_cos(TruncatedSeries<Rational>::linear(Rational(0), Rational(1), order));
  return s / c;
}

}  // namespace

std::string SeriesReport::to_json() const {
  nlohmann::json j;
  j["identity"] = identity;
  j["order"] = order;
  j["pass"] = pass;
  j["first_mismatch"] = first_mismatch ? nlohmann::json(*first_mismatch) : nlohmann::json(nullptr);
  return j.dump();
}

TruncatedSeries<QuadExt> egf_T_extension(unsigned order) {
  const QuadExt x = QuadExt::scalar(RationalFunction(Poly::x()), one_minus_x2());
  return up_down_closed_form(x, QuadExt::root(one_minus_x2()), order);
}

TruncatedSeries<Poly> egf_T(unsigned order) { return reduce(egf_T_extension(order)); }

TruncatedSeries<Poly> egf_carlitz(unsigned order) {
  using S = TruncatedSeries<QuadExt>;
  const RationalFunction& disc = one_minus_x2();
  const QuadExt rho = QuadExt::root(disc);
  const QuadExt x = QuadExt::scalar(RationalFunction(Poly::x()), disc);
  const QuadExt zero = QuadExt::scalar(RationalFunction(), disc);
  const auto [sn, cs] = sin_cos(S::linear(zero, rho, order));
  const S ratio = (S::constant(rho, order) + sn) / (S::constant(x, order) - cs);
  const QuadExt prefactor = QuadExt::scalar(RationalFunction(Poly{1, -1}, Poly{1, 1}), disc);
  return reduce(ratio * ratio * prefactor);
}

TruncatedSeries<Poly> egf_Rq(const Rational& q0, unsigned order) { return pow_rational(egf_T(order), q0); }

SeriesReport check_egf_T(unsigned order) {
  const auto series = egf_T(order);
  const Triangle t = triangle(Family::T, order);
  return compare("egf_T", order, [&](unsigned n) { return series.egf(n); }, [&](unsigned n) { return t.row_poly(n); });
}

SeriesReport check_egf_carlitz(unsigned order) {
  const auto series = egf_carlitz(order);
  const Triangle r = triangle(Family::R, order + 1);
  return compare("egf_carlitz", order, [&](unsigned n) { return series.egf(n); },
                 [&](unsigned n) {
                   Poly p;
                   for (long k = 0; k <= static_cast<long>(n); ++k)
                     p += Poly::monomial(r.scalar(n + 1, k), static_cast<std::size_t>(static_cast<long>(n) - k));
                   return p;
                 });
}

SeriesReport check_egf_Rq(const Rational& q0, unsigned order) {
  const auto series = egf_Rq(q0, order);
  const Triangle rq = triangle(Family::Rq, order);
  return compare("egf_Rq(q=" + q0.to_string() + ")", order, [&](unsigned n) { return series.egf(n); },
                 [&](unsigned n) { return q_specialize(rq, n, q0); });
}

SeriesReport check_egf_semi_gamma(unsigned order) {
  const auto series = egf_Rq(Rational(1, 2), order);
  const Triangle f = triangle(Family::f, order);
  return compare("egf_f", order, [&](unsigned n) { return series.egf(n).scale_argument(Rational(2)); },
                 [&](unsigned n) { return f.row_poly(n); });
}

SeriesReport check_Rq_parity(const Rational& q0, unsigned order) {
  const auto plus = egf_Rq(q0, order);
  const auto minus = egf_Rq(-q0, order);
  return compare("Rq_parity(q=" + q0.to_string() + ")", order,
                 [&](unsigned n) { return minus.egf(n).scale_argument(Rational(-1)); },
                 [&](unsigned n) { return plus.egf(n); });
}

SeriesReport check_Rxyz(const Rational& q0, unsigned order) {
  const Alphabet xy{"x", "y"};
  const MultiPoly x = MultiPoly::variable(xy, "x");
  const MultiPoly y = MultiPoly::variable(xy, "y");
  const MultiPoly zero(xy);
  const auto r = egf_Rq(q0, order).map([&](const Poly& p) { return MultiPoly::from_univariate(xy, "x", p); });
  const auto weight = exp(TruncatedSeries<MultiPoly>::linear(zero, q0 * x * (y - MultiPoly::constant(xy, Rational(1))), order));
  const auto full = weight * r;
  return compare("Rxyz(q=" + q0.to_string() + ")", order, [&](unsigned n) { return full.egf(n); },
                 [&](unsigned n) { return inclusion_exclusion_Rxy(n, q0); });
}

SeriesReport egf_specialized_identity(SpecialIdentity which, unsigned order, const Rational& x0) {
  switch (which) {
    case SpecialIdentity::derangement: {
      const auto t = egf_T(order);
      const auto damp = exp(TruncatedSeries<Poly>::linear(Poly(), Poly{0, -1}, order));
      const auto d = damp * t;
      const PolySeq oracle = polyseq(Sequence::dpoly, order);
      return compare("derangement", order, [&](unsigned n) { return d.egf(n); }, [&](unsigned n) { return oracle.at(n); });
    }
    case SpecialIdentity::F_dual: {
      if (x0 == Rational(1) || x0 == Rational(-1)) throw DegenerateSample("F_dual needs x0 != +-1");
      const Rational s = Rational(1) + x0 * x0;
      const Rational u = Rational(2) * x0 / s;
      // 1 - u^2 = ((1 - x0^2)/(1 + x0^2))^2, so rho stays rational.
      const Rational rho = (Rational(1) - x0 * x0) / s;
      const auto t = up_down_closed_form(u, rho, order);
      const auto f = sqrt(t.scale_z(s));
      const PolySeq oracle = polyseq(Sequence::Fpoly, order);
      return compare("F_dual(x0=" + x0.to_string() + ")", order, [&](unsigned n) { return f.egf(n); },
                     [&](unsigned n) { return oracle.at(n).evaluate(x0); });
    }
    case SpecialIdentity::f_diag: {
      const auto tan = tan_z(order);
      const auto one = TruncatedSeries<Rational>::constant(Rational(1), order);
      const auto g = sqrt((one + tan) / (one - tan));
      const Triangle f = triangle(Family::f, order);
      return compare("f_diag", order, [&](unsigned n) { return g.egf(n); },
                     [&](unsigned n) { return f.scalar(n, n); });
    }
    case SpecialIdentity::d_diag:
    case SpecialIdentity::d_diag_reciprocal: {
      const auto [sn, cs] = sin_cos(TruncatedSeries<Rational>::linear(Rational(0), Rational(1), order));
      const auto one = TruncatedSeries<Rational>::constant(Rational(1), order);
      const auto tan_plus_sec = (sn + one) / cs;
      const auto damp = exp(TruncatedSeries<Rational>::linear(Rational(0), Rational(-1), order));
      const auto g = which == SpecialIdentity::d_diag ? damp * tan_plus_sec : damp / tan_plus_sec;
      const PolySeq d = polyseq(Sequence::dpoly, order);
      return compare(which == SpecialIdentity::d_diag ? "d_diag" : "d_diag_reciprocal", order,
                     [&](unsigned n) { return g.egf(n); }, [&](unsigned n) { return d.at(n).coeff(n); });
    }
  }
  throw DomainError("unknown identity");
}

bool pde_check(const Triangle& rq, unsigned order) {
  if (order < 1) throw DomainError("pde_check needs order >= 1");
  const Alphabet xq{"x", "q"};
  const MultiPoly x = MultiPoly::variable(xq, "x");
  const MultiPoly q = MultiPoly::variable(xq, "q");
  const MultiPoly one = MultiPoly::constant(xq, Rational(1));
  std::vector<MultiPoly> coeffs;
  for (unsigned n = 0; n <= order; ++n)
    coeffs.push_back(rq.row_multipoly(n).with_alphabet(xq) * Rational(factorial(n)).inverse());
  const TruncatedSeries<MultiPoly> r(std::move(coeffs));
  const auto lhs = TruncatedSeries<MultiPoly>::linear(one, -(x * x), order - 1) * r.derivative_z();
  const auto rhs = r.truncate(order - 1).map([&](const MultiPoly& c) { return x * (one - x * x) * c.partial("x") + q * x * c; });
  return lhs == rhs;
}

bool pde_check(unsigned order) { return pde_check(triangle(Family::Rq, order), order); }

QuadExt theta_power_r(unsigned n) {
  const RationalFunction disc(Poly{1, 1}, Poly{1, -1});
  const RationalFunction x(Poly::x());
  QuadExt cur = QuadExt::root(disc);
  for (unsigned i = 0; i < n; ++i) cur = cur.derivative() * x;
  return cur;
}

QuadExt theta_closed_form(unsigned n, const Poly& f_n) {
  const RationalFunction disc(Poly{1, 1}, Poly{1, -1});
  const QuadExt r = QuadExt::root(disc);
  const RationalFunction f(f_n);
  if (n % 2 == 0) return r * (f / one_minus_x2().pow(n));
  // Dividing by r is multiplying by r (1-x)/(1+x).
  const QuadExt inv_r = r * RationalFunction(Poly{1, -1}, Poly{1, 1});
  const RationalFunction one_minus_x(Poly{1, -1});
  return inv_r * (f / (one_minus_x2().pow(n - 1) * one_minus_x.pow(2)));
}

}  // namespace altrun
