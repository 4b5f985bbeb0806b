#include "verify.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <random>

#include "json.hpp"

#include "altrun/egf.hpp"
#include "altrun/enumerate.hpp"
#include "altrun/errors.hpp"
#include "altrun/families.hpp"
#include "altrun/gamma.hpp"
#include "altrun/grammar.hpp"

namespace altrun::cli {

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Task {
  std::string id;
  std::map<std::string, std::string> params;
  std::function<Outcome()> run;
};

using Failure = std::optional<std::string>;

std::string range(long lo, long hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

// Passes when f(n) reports nothing for every n in [lo, hi].
Outcome for_all_n(long lo, long hi, const std::function<Failure(long)>& f) {
  for (long n = lo; n <= hi; ++n)
    if (auto why = f(n)) return {false, "n=" + std::to_string(n) + ": " + *why};
  return {true, "n=" + range(lo, hi)};
}

Failure differ(const Poly& got, const Poly& want) {
  if (got == want) return std::nullopt;
  return "got " + got.to_string() + ", expected " + want.to_string();
}

Failure differ(const MultiPoly& got, const MultiPoly& want) {
  Alphabet all = got.alphabet();
  for (const auto& l : want.alphabet())
    if (std::find(all.begin(), all.end(), l) == all.end()) all.push_back(l);
  if (got.with_alphabet(all) == want.with_alphabet(all)) return std::nullopt;
  return "got " + got.to_string() + ", expected " + want.to_string();
}

// Row n of a against row m of b, entry by entry over both windows.
Failure rows_differ(const Triangle& a, long n, const Triangle& b, long m) {
  const auto& ra = a.row(n);
  const auto& rb = b.row(m);
  const long lo = std::min(ra.k_min, rb.k_min);
  const long hi = std::max(ra.k_max, rb.k_max);
  for (long k = lo; k <= hi; ++k)
    if (a.at(n, k) != b.at(m, k))
      return "k=" + std::to_string(k) + ": " + a.at(n, k).to_string(a.parameter().empty() ? "q" : a.parameter()) +
             " vs " + b.at(m, k).to_string(b.parameter().empty() ? "q" : b.parameter());
  return std::nullopt;
}

Outcome triangles_agree(const Triangle& got, const Triangle& want, long shift, long lo) {
  return for_all_n(lo, got.max_n(), [&](long n) { return rows_differ(got, n, want, n + shift); });
}

Poly one_plus_x() { return Poly{1, 1}; }

// ---------------------------------------------------------------- grammar

Failure morphism_differs(const Grammar& from, const Grammar& to, const std::map<std::string, MultiPoly>& images) {
  for (const auto& letter : from.alphabet()) {
    if (!images.count(letter) || from.rule(letter).is_zero()) continue;
    const MultiPoly lhs = from.rule(letter).substitute(images, to.alphabet());
    const MultiPoly rhs = to.apply(images.at(letter));
    if (!(lhs == rhs)) return letter + ": " + lhs.to_string() + " vs " + rhs.to_string();
  }
  return std::nullopt;
}

Outcome morphism_check(const Grammar& from, const Grammar& to, const std::map<std::string, MultiPoly>& images) {
  if (auto why = morphism_differs(from, to, images)) return {false, *why};
  return {true, "rules commute with the substitution"};
}

std::vector<Task> grammar_tasks(const VerifyOptions& o) {
  const unsigned N = o.max_n;
  std::vector<Task> t;
  const std::map<std::string, std::string> p{{"n", range(0, N)}};
  t.push_back({"grammar.runs_a.seed_a", p, [N] {
                 const Grammar g = grammars::runs_a();
                 return triangles_agree(grammar_triangle(g, g.letter("a"), {"b", "c"}, N, "T"),
                                        triangle(Family::T, N), 0, 0);
               }});
  t.push_back({"grammar.runs_a.seed_a2", p, [N] {
                 const Grammar g = grammars::runs_a();
                 return triangles_agree(grammar_triangle(g, g.letter("a").pow(2), {"b", "c"}, N, "R"),
                                        triangle(Family::R, N + 1), 1, 0);
               }});
  t.push_back({"grammar.runs_2a.seed_a", p, [N] {
                 const Grammar g = grammars::runs_2a();
                 return triangles_agree(grammar_triangle(g, g.letter("a"), {"b", "c"}, N, "R"),
                                        triangle(Family::R, N + 1), 1, 0);
               }});
  t.push_back({"grammar.G1.Rq", p, [N] {
                 const Grammar g = grammars::q_runs();
                 return triangles_agree(grammar_triangle(g, g.letter("a"), {"b", "c"}, N, "Rq"),
                                        triangle(Family::Rq, N), 0, 0);
               }});
  t.push_back({"grammar.G2.F", p, [N] {
                 const Grammar g = grammars::stirling();
                 return triangles_agree(grammar_triangle(g, g.letter("x"), {"y", "z", 1, 1, 2}, N, "F"),
                                        triangle(Family::F, N), 0, 0);
               }});
  t.push_back({"grammar.G3.gamma", p, [N] {
                 const Grammar g = grammars::gamma_form();
                 return triangles_agree(grammar_triangle(g, g.letter("x"), {"a", "b", 2, 1, 2}, N, "gamma"),
                                        triangle(Family::gamma, N), 0, 0);
               }});
  t.push_back({"grammar.G4.f", p, [N] {
                 const Grammar g = grammars::semi_gamma();
                 return triangles_agree(grammar_triangle(g, g.letter("x"), {"u", "v"}, N, "f"),
                                        triangle(Family::f, N), 0, 0);
               }});
  t.push_back({"grammar.G1_to_G4", {{"q", "1/2"}}, [] {
                 const Grammar g4 = grammars::semi_gamma();
                 const auto& al = g4.alphabet();
                 const Grammar g1 = Grammar::parse("a->1/2*a*b; b->b*c; c->b^2");
                 return morphism_check(g1, g4,
                                       {{"a", g4.letter("x")},
                                        {"b", g4.letter("u") * Rational(2)},
                                        {"c", g4.letter("v")},
                                        {"q", MultiPoly::constant(al, Rational(1, 2))}});
               }});
  t.push_back({"grammar.G3_to_G2", {}, [] {
                 const Grammar g2 = grammars::stirling();
                 const auto y = g2.letter("y");
                 const auto z = g2.letter("z");
                 return morphism_check(grammars::gamma_form(), g2, {{"x", g2.letter("x")}, {"a", y * z}, {"b", y + z}});
               }});
  t.push_back({"grammar.G4_to_G2", {}, [] {
                 const Grammar g2 = grammars::stirling();
                 const auto y = g2.letter("y");
                 const auto z = g2.letter("z");
                 return morphism_check(grammars::semi_gamma(), g2,
                                       {{"x", g2.letter("x")}, {"u", y * z}, {"v", y * y + z * z}});
               }});
  return t;
}

// -------------------------------------------------------------- triangles

std::vector<Task> triangle_tasks(const VerifyOptions& o) {
  const long N = std::max<long>(o.max_n, 2);
  std::vector<Task> t;
  t.push_back({"triangles.T_from_R", {{"n", range(2, N)}}, [N] {
                 const Triangle r = triangle(Family::R, N), tt = triangle(Family::T, N);
                 return for_all_n(2, N, [&](long n) { return differ(tt.row_poly(n), one_plus_x() * r.row_poly(n) * Rational(1, 2)); });
               }});
  t.push_back({"triangles.R_convolution", {{"n", range(0, N - 1)}}, [N] {
                 const Triangle r = triangle(Family::R, N), tt = triangle(Family::T, N);
                 return for_all_n(0, N - 1, [&](long n) {
                   Poly sum;
                   for (long k = 0; k <= n; ++k) sum += tt.row_poly(k) * tt.row_poly(n - k) * binomial(n, k);
                   return differ(r.row_poly(n + 1), sum);
                 });
               }});
  t.push_back({"triangles.R_root_multiplicity", {{"n", range(2, N)}}, [N] {
                 const Triangle r = triangle(Family::R, N);
                 return for_all_n(2, N, [&](long n) -> Failure {
                   const long m = root_multiplicity(r.row_poly(n), Rational(-1));
                   if (m == n / 2 - 1) return std::nullopt;
                   return "multiplicity " + std::to_string(m);
                 });
               }});
  t.push_back({"triangles.Rq_parity", {{"n", range(0, N)}}, [N] {
                 const Triangle rq = triangle(Family::Rq, N);
                 return for_all_n(0, N, [&](long n) {
                   const MultiPoly p = rq.row_multipoly(n);
                   const Alphabet& al = p.alphabet();
                   const auto neg = [&](const std::string& v) {
                     return std::map<std::string, MultiPoly>{{v, -MultiPoly::variable(al, v)}};
                   };
                   return differ(p.substitute(neg("q"), al), p.substitute(neg("x"), al));
                 });
               }});
  t.push_back({"triangles.Rq_at_1_and_2", {{"n", range(0, N)}}, [N] {
                 const Triangle rq = triangle(Family::Rq, N), tt = triangle(Family::T, N), r = triangle(Family::R, N + 1);
                 return for_all_n(0, N, [&](long n) -> Failure {
                   if (auto why = differ(q_specialize(rq, n, Rational(1)), tt.row_poly(n))) return "q=1 " + *why;
                   if (auto why = differ(q_specialize(rq, n, Rational(2)), r.row_poly(n + 1))) return "q=2 " + *why;
                   return std::nullopt;
                 });
               }});
  t.push_back({"triangles.d_at_minus_one", {{"n", range(1, N)}}, [N] {
                 const PolySeq d = polyseq(Sequence::dpoly, N);
                 return for_all_n(1, N, [&](long n) -> Failure {
                   const Rational v = d.at(n).evaluate(Rational(-1));
                   if (v == Rational(1 - n)) return std::nullopt;
                   return "d_n(-1) = " + v.to_string();
                 });
               }});
  t.push_back({"triangles.d_from_T", {{"n", range(0, N)}}, [N] {
                 const PolySeq d = polyseq(Sequence::dpoly, N);
                 const Triangle tt = triangle(Family::T, N);
                 return for_all_n(0, N, [&](long n) {
                   Poly sum;
                   for (long k = 0; k <= n; ++k)
                     sum += tt.row_poly(k) * Poly::monomial(binomial(n, k) * Rational(-1).pow(n - k), static_cast<std::size_t>(n - k));
                   return differ(d.at(n), sum);
                 });
               }});
  t.push_back({"triangles.gamma_diagonal", {{"n", range(0, N - 1)}}, [N] {
                 const Triangle g = triangle(Family::gamma, N);
                 return for_all_n(0, N - 1, [&](long n) -> Failure {
                   const Rational want = Rational(-1).pow(n) * double_factorial(2 * n - 1);
                   if (g.scalar(n + 1, n + 1) == want) return std::nullopt;
                   return "gamma(n+1,n+1) = " + g.scalar(n + 1, n + 1).to_string();
                 });
               }});
  const long fmax = std::max<long>(N, 40);
  t.push_back({"triangles.f_nonnegative", {{"n", range(0, fmax)}}, [fmax] {
                 const Triangle f = triangle(Family::f, fmax);
                 return for_all_n(0, fmax, [&](long n) -> Failure {
                   for (long k = 0; k <= n; ++k)
                     if (f.scalar(n, k).sign() < 0) return "f(n," + std::to_string(k) + ") < 0";
                   return std::nullopt;
                 });
               }});
  t.push_back({"triangles.R_from_a", {{"n", range(2, N)}}, [N] {
                 const Triangle a = triangle(Family::a, N), r = triangle(Family::R, N);
                 return for_all_n(2, N, [&](long n) {
                   Poly sum;
                   for (long k = 1; k <= (n + 1) / 2; ++k)
                     sum += Poly::monomial(a.scalar(n, k) * Rational(2).pow(2 - k), static_cast<std::size_t>(k)) *
                            one_plus_x().pow(static_cast<unsigned>(n - 1 - k));
                   return differ(r.row_poly(n), sum);
                 });
               }});
  t.push_back({"triangles.bpoly_from_b", {{"n", range(0, N)}}, [N] {
                 const Triangle b = triangle(Family::b, N);
                 const PolySeq bp = polyseq(Sequence::bpoly, N);
                 return for_all_n(0, N, [&](long n) {
                   Poly sum;
                   for (long k = 0; k <= n / 2; ++k)
                     sum += Poly::monomial(b.scalar(n, k) * Rational(2).pow(-k), static_cast<std::size_t>(k)) *
                            one_plus_x().pow(static_cast<unsigned>(n - k));
                   return differ(bp.at(n), sum);
                 });
               }});
  t.push_back({"triangles.cpoly_from_bpoly", {{"n", range(1, N)}}, [N] {
                 const PolySeq bp = polyseq(Sequence::bpoly, N), cp = polyseq(Sequence::cpoly, N);
                 return for_all_n(1, N, [&](long n) { return differ(cp.at(n) * one_plus_x(), bp.at(n) * Poly::x()); });
               }});
  t.push_back({"triangles.Fpoly_vs_F", {{"n", range(0, N)}}, [N] {
                 const PolySeq fp = polyseq(Sequence::Fpoly, N);
                 const Triangle f = triangle(Family::F, N);
                 return for_all_n(0, N, [&](long n) { return differ(fp.at(n), f.row_poly(n)); });
               }});
  t.push_back({"triangles.gammapoly_vs_gamma", {{"n", range(0, N)}}, [N] {
                 const PolySeq gp = polyseq(Sequence::gammapoly, N);
                 const Triangle g = triangle(Family::gamma, N);
                 return for_all_n(0, N, [&](long n) { return differ(gp.at(n), g.row_poly(n)); });
               }});
  t.push_back({"triangles.eulerA_recurrence", {{"n", range(1, N)}}, [N] {
                 // A_{n+1} = (n+1) x A_n + x(1-x) A_n'
                 return for_all_n(1, N - 1, [&](long n) {
                   const Poly an = eulerian(static_cast<unsigned>(n), EulerType::A);
                   const Poly next = an * Poly::monomial(Rational(n + 1), 1) + an.derivative() * Poly{0, 1, -1};
                   return differ(eulerian(static_cast<unsigned>(n + 1), EulerType::A), next);
                 });
               }});
  t.push_back({"triangles.eulerB_recurrence", {{"n", range(0, N)}}, [N] {
                 // B_{n+1} = (1 + (2n+1) x) B_n + 2x(1-x) B_n'
                 return for_all_n(0, N - 1, [&](long n) {
                   const Poly bn = eulerian(static_cast<unsigned>(n), EulerType::B);
                   const Poly next = bn * Poly{1, 2 * n + 1} + bn.derivative() * Poly{0, 2, -2};
                   return differ(eulerian(static_cast<unsigned>(n + 1), EulerType::B), next);
                 });
               }});
  return t;
}

// ------------------------------------------------------------ enumeration

Poly single(const MultiPoly& p) { return p.to_univariate("x"); }

std::vector<Task> enumeration_tasks(const VerifyOptions& o) {
  const long N = std::max<long>(o.max_n, 1);
  std::vector<Task> t;
  const auto dist1 = [](ObjectClass c, long n, Statistic s) { return single(distribution(c, static_cast<unsigned>(n), {{s, "x"}})); };
  t.push_back({"enumeration.perm.altrun", {{"n", range(1, N)}}, [=] {
                 const Triangle r = triangle(Family::R, N);
                 return for_all_n(1, N, [&](long n) { return differ(dist1(ObjectClass::perm, n, Statistic::altrun), r.row_poly(n)); });
               }});
  t.push_back({"enumeration.perm.udrun", {{"n", range(1, N)}}, [=] {
                 const Triangle tt = triangle(Family::T, N);
                 return for_all_n(1, N, [&](long n) { return differ(dist1(ObjectClass::perm, n, Statistic::udrun), tt.row_poly(n)); });
               }});
  t.push_back({"enumeration.perm.as", {{"n", range(1, N)}}, [=] {
                 const Triangle tt = triangle(Family::T, N);
                 return for_all_n(1, N, [&](long n) { return differ(dist1(ObjectClass::perm, n, Statistic::as), tt.row_poly(n)); });
               }});
  t.push_back({"enumeration.perm.des", {{"n", range(1, N)}}, [=] {
                 return for_all_n(1, N, [&](long n) {
                   return differ(dist1(ObjectClass::perm, n, Statistic::des) * Poly::x(), eulerian(static_cast<unsigned>(n), EulerType::A));
                 });
               }});
  t.push_back({"enumeration.perm.crun_cyc", {{"n", range(1, N)}}, [=] {
                 const Triangle rq = triangle(Family::Rq, N);
                 return for_all_n(1, N, [&](long n) {
                   return differ(distribution(ObjectClass::perm, static_cast<unsigned>(n), {{Statistic::crun, "x"}, {Statistic::cyc, "q"}}),
                                 rq.row_multipoly(n));
                 });
               }});
  t.push_back({"enumeration.derangement.crun", {{"n", range(1, N)}}, [=] {
                 const PolySeq d = polyseq(Sequence::dpoly, N);
                 return for_all_n(1, N, [&](long n) { return differ(dist1(ObjectClass::derangement, n, Statistic::crun), d.at(n)); });
               }});
  t.push_back({"enumeration.stirling.fap", {{"n", range(1, N)}}, [=] {
                 const Triangle f = triangle(Family::F, N);
                 return for_all_n(1, N, [&](long n) { return differ(dist1(ObjectClass::stirling, n, Statistic::fap), f.row_poly(n)); });
               }});
  t.push_back({"enumeration.dual_stirling.altrun", {{"n", range(1, N)}}, [=] {
                 const Triangle f = triangle(Family::F, N);
                 return for_all_n(1, N, [&](long n) { return differ(dist1(ObjectClass::dual_stirling, n, Statistic::altrun), f.row_poly(n)); });
               }});
  t.push_back({"enumeration.signed.des_B", {{"n", range(1, N)}}, [=] {
                 return for_all_n(1, N, [&](long n) {
                   return differ(dist1(ObjectClass::signed_perm, n, Statistic::des_B), eulerian(static_cast<unsigned>(n), EulerType::B));
                 });
               }});
  t.push_back({"enumeration.signed_hat.altrun_B", {{"n", range(1, N)}}, [=] {
                 const PolySeq c = polyseq(Sequence::cpoly, N);
                 return for_all_n(1, N, [&](long n) { return differ(dist1(ObjectClass::signed_hat, n, Statistic::altrun_B), c.at(n)); });
               }});
  return t;
}

// ----------------------------------------------------------- davidbarton

Poly gamma_basis(long k, long base) {
  return Poly::monomial(Rational(1), static_cast<std::size_t>(k)) * one_plus_x().pow(static_cast<unsigned>(base - 2 * k));
}

// M is expanded on [lo, hi]; every single-entry perturbation of its gamma
// coefficients, and of the coefficients of N, must break the identity.
Failure db_pair(const Poly& m, long lo, long hi, const Poly& n_poly, long n, long delta) {
  const auto samples = interior_samples(static_cast<std::size_t>(std::max<long>(n_poly.degree(), 0)) + 1);
  const auto check = david_barton_check(m, n_poly, n, delta, samples);
  if (!check.pass) return "identity fails at sample " + std::to_string(check.first_mismatch);
  GammaForm g = gamma_expand(m, lo, hi);
  const Poly shift = Poly::monomial(Rational(1), static_cast<std::size_t>(g.shift));
  if (david_barton_assemble(g, n, delta) != n_poly) return "assembled N differs";
  for (long k = 0; k < static_cast<long>(g.gammas.size()); ++k) {
    const Poly bumped = m + shift * gamma_basis(k, g.base_degree);
    if (david_barton_identity_check(bumped, n_poly, n, delta, samples))
      return "perturbing M(n," + std::to_string(k) + ") still passes";
  }
  for (long k = 0; k <= n_poly.degree(); ++k) {
    const Poly bumped = n_poly + Poly::monomial(Rational(1), static_cast<std::size_t>(k));
    const auto more = interior_samples(static_cast<std::size_t>(bumped.degree()) + 1);
    if (david_barton_identity_check(m, bumped, n, delta, more)) return "perturbing N coefficient " + std::to_string(k) + " still passes";
  }
  return std::nullopt;
}

std::vector<Task> davidbarton_tasks(const VerifyOptions& o) {
  const long N = std::max<long>(o.max_n, 2);
  std::vector<Task> t;
  t.push_back({"davidbarton.eulerA_R", {{"n", range(2, N)}, {"delta", "1"}}, [N] {
                 const Triangle r = triangle(Family::R, N);
                 return for_all_n(2, N, [&](long n) {
                   return db_pair(eulerian(static_cast<unsigned>(n), EulerType::A), 1, n, r.row_poly(n), n, 1);
                 });
               }});
  t.push_back({"davidbarton.eulerB_bpoly", {{"n", range(1, N)}, {"delta", "0"}}, [N] {
                 const PolySeq b = polyseq(Sequence::bpoly, N);
                 return for_all_n(1, N, [&](long n) {
                   return db_pair(eulerian(static_cast<unsigned>(n), EulerType::B), 0, n, b.at(n), n, 0);
                 });
               }});
  return t;
}

// ----------------------------------------------------------------- series

Outcome from_report(const SeriesReport& r) {
  if (r.pass) return {true, r.identity + " through order " + std::to_string(r.order)};
  const unsigned m = *r.first_mismatch;
  return {false, r.identity + " mismatch at n=" + std::to_string(m) + ": " + r.closed_form[m] + " vs " + r.oracle[m]};
}

std::vector<Rational> dual_points(std::size_t count) {
  std::vector<Rational> pts{Rational(0), Rational(1, 2), Rational(1, 3), Rational(2, 5)};
  for (long den = 2; pts.size() < count; ++den)
    for (long num = -den + 1; num < den && pts.size() < count; ++num) {
      const Rational c(num, den);
      if (std::find(pts.begin(), pts.end(), c) == pts.end()) pts.push_back(c);
    }
  return pts;
}

std::vector<Task> series_tasks(const VerifyOptions& o) {
  const unsigned K = std::max(o.order, 2u);
  const std::map<std::string, std::string> p{{"order", std::to_string(K)}};
  std::vector<Task> t;
  t.push_back({"series.egf_T", p, [K] { return from_report(check_egf_T(K)); }});
  t.push_back({"series.egf_carlitz", p, [K] { return from_report(check_egf_carlitz(K)); }});
  for (const Rational& q : {Rational(1), Rational(2), Rational(3), Rational(1, 2)}) {
    auto pq = p;
    pq["q"] = q.to_string();
    t.push_back({"series.egf_Rq.q=" + q.to_string(), pq, [K, q] { return from_report(check_egf_Rq(q, K)); }});
    t.push_back({"series.Rq_parity.q=" + q.to_string(), pq, [K, q] { return from_report(check_Rq_parity(q, K)); }});
  }
  t.push_back({"series.egf_f", p, [K] { return from_report(check_egf_semi_gamma(K)); }});
  t.push_back({"series.derangement", p, [K] { return from_report(egf_specialized_identity(SpecialIdentity::derangement, K)); }});
  const unsigned kx = std::min(K, 8u);
  for (const Rational& q : {Rational(1), Rational(2), Rational(1, 2), Rational(-3)})
    t.push_back({"series.Rxyz.q=" + q.to_string(), {{"order", std::to_string(kx)}, {"q", q.to_string()}},
                 [kx, q] { return from_report(check_Rxyz(q, kx)); }});
  t.push_back({"series.pde", p, [K] { return Outcome{pde_check(K), "R(x,z;q) through z^" + std::to_string(K - 1)}; }});
  t.push_back({"series.pde_sensitivity", p, [K] {
                 Triangle rq = triangle(Family::Rq, K);
                 rq.set(K / 2, 1, rq.at(K / 2, 1) + Poly{1});
                 return Outcome{!pde_check(rq, K), "mutated R(" + std::to_string(K / 2) + ",1) is rejected"};
               }});
  t.push_back({"series.f_diag", p, [K] { return from_report(egf_specialized_identity(SpecialIdentity::f_diag, K)); }});
  t.push_back({"series.d_diag", p, [K] { return from_report(egf_specialized_identity(SpecialIdentity::d_diag, K)); }});
  t.push_back({"series.d_diag_reciprocal_rejected", p, [K] {
                 const auto r = egf_specialized_identity(SpecialIdentity::d_diag_reciprocal, K);
                 return Outcome{!r.pass, "e^{-z}/(tan z + sec z) first differs at n=" +
                                             (r.first_mismatch ? std::to_string(*r.first_mismatch) : std::string("none"))};
               }});
  for (const Rational& x0 : {Rational(0), Rational(1, 2), Rational(1, 3), Rational(2, 5)}) {
    auto px = p;
    px["x0"] = x0.to_string();
    t.push_back({"series.F_dual.x0=" + x0.to_string(), px,
                 [K, x0] { return from_report(egf_specialized_identity(SpecialIdentity::F_dual, K, x0)); }});
  }
  // deg F_n = 2n - 1, so 2K distinct points certify every n <= K.
  t.push_back({"series.F_dual.certificate", p, [K] {
                 const auto pts = dual_points(2 * K);
                 for (const auto& x0 : pts) {
                   const auto r = egf_specialized_identity(SpecialIdentity::F_dual, K, x0);
                   if (!r.pass) return from_report(r);
                 }
                 return Outcome{true, std::to_string(pts.size()) + " sample points"};
               }});
  t.push_back({"series.theta", {{"n", range(0, K)}}, [K] {
                 const PolySeq f = polyseq(Sequence::Fpoly, K);
                 return for_all_n(0, K, [&](long n) -> Failure {
                   if (theta_power_r(static_cast<unsigned>(n)) == theta_closed_form(static_cast<unsigned>(n), f.at(n)))
                     return std::nullopt;
                   return std::string("closed form differs");
                 });
               }});
  return t;
}

// ------------------------------------------------------------------ gamma

Failure round_trip(const Poly& p, long lo, long hi) {
  const GammaForm g = gamma_expand(p, lo, hi);
  if (g.reassemble() != p) return "gamma round trip of " + p.to_string();
  const SemiGammaForm s = semi_gamma_expand(p, lo, hi);
  if (s.reassemble() != p) return "semi-gamma round trip of " + p.to_string();
  if (!(gamma_to_lambda(g) == s)) return "gamma_to_lambda disagrees on " + p.to_string();
  return std::nullopt;
}

Poly random_symmetric(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> deg(0, 16), coef(-9, 9), den(1, 3), low(0, 3);
  const long d = deg(rng), s = low(rng);
  std::vector<Rational> c(static_cast<std::size_t>(s + d + 1));
  for (long i = 0; i <= d / 2; ++i) {
    const long num = coef(rng);
    const Rational v(num, den(rng));
    c[static_cast<std::size_t>(s + i)] = v;
    c[static_cast<std::size_t>(s + d - i)] = v;
  }
  return Poly(c);
}

std::vector<Task> gamma_tasks(const VerifyOptions& o) {
  const long N = std::max<long>(o.max_n, 1);
  std::vector<Task> t;
  t.push_back({"gamma.round_trip.eulerA", {{"n", range(1, N)}}, [N] {
                 const Triangle a = triangle(Family::a, N);
                 return for_all_n(1, N, [&](long n) -> Failure {
                   const Poly p = eulerian(static_cast<unsigned>(n), EulerType::A);
                   if (auto why = round_trip(p, 1, n)) return why;
                   const GammaForm g = gamma_expand(p, 1, n);
                   for (long k = 1; k <= (n + 1) / 2; ++k)
                     if (g.coeff(k) != a.scalar(n, k)) return "gamma_" + std::to_string(k) + " != a(n," + std::to_string(k) + ")";
                   return std::nullopt;
                 });
               }});
  t.push_back({"gamma.round_trip.eulerB", {{"n", range(0, N)}}, [N] {
                 const Triangle b = triangle(Family::b, N);
                 return for_all_n(0, N, [&](long n) -> Failure {
                   const Poly p = eulerian(static_cast<unsigned>(n), EulerType::B);
                   if (auto why = round_trip(p, 0, n)) return why;
                   const GammaForm g = gamma_expand(p, 0, n);
                   for (long k = 0; k <= n / 2; ++k)
                     if (g.coeff(k) != b.scalar(n, k)) return "gamma_" + std::to_string(k) + " != b(n," + std::to_string(k) + ")";
                   return std::nullopt;
                 });
               }});
  t.push_back({"gamma.round_trip.F", {{"n", range(1, N)}}, [N] {
                 const PolySeq f = polyseq(Sequence::Fpoly, N);
                 return for_all_n(1, N, [&](long n) { return round_trip(f.at(n), 1, 2 * n - 1); });
               }});
  t.push_back({"gamma.semi_lambda_is_f", {{"n", range(1, N)}}, [N] {
                 const PolySeq fp = polyseq(Sequence::Fpoly, N);
                 const Triangle f = triangle(Family::f, N);
                 return for_all_n(1, N, [&](long n) -> Failure {
                   const SemiGammaForm s = semi_gamma_expand(fp.at(n), 1, 2 * n - 1);
                   for (long k = 0; k < n; ++k)
                     if (s.lambdas[static_cast<std::size_t>(k)] != f.scalar(n, k + 1)) return "lambda_" + std::to_string(k);
                   return std::nullopt;
                 });
               }});
  t.push_back({"gamma.positive_implies_semi", {{"n", range(1, N)}}, [N] {
                 return for_all_n(1, N, [&](long n) -> Failure {
                   for (const auto type : {EulerType::A, EulerType::B}) {
                     const Poly p = eulerian(static_cast<unsigned>(n), type);
                     const long lo = type == EulerType::A ? 1 : 0;
                     const GammaForm g = gamma_expand(p, lo, n);
                     if (g.is_positive() && !gamma_to_lambda(g).is_positive()) return "semi-gamma negative";
                   }
                   return std::nullopt;
                 });
               }});
  t.push_back({"gamma.lambda_agreement.random", {{"count", "200"}, {"max_degree", "16"}, {"seed", "2019"}}, [] {
                 std::mt19937_64 rng(2019);
                 for (int i = 0; i < 200; ++i) {
                   const Poly p = random_symmetric(rng);
                   if (p.is_zero()) continue;
                   const long lo = p.valuation(), hi = p.degree();
                   if (auto why = round_trip(p, lo, hi)) return Outcome{false, "sample " + std::to_string(i) + ": " + *why};
                 }
                 return Outcome{true, "200 samples"};
               }});
  t.push_back({"gamma.split_halves.F", {{"n", range(1, N)}}, [N] {
                 const PolySeq f = polyseq(Sequence::Fpoly, N);
                 return for_all_n(1, N, [&](long n) -> Failure {
                   const Poly p = divide_exact(f.at(n), Poly::x());
                   const auto [g1, g2] = split_even_odd(p, 0);
                   const long m = n - 1;
                   if (!gamma_expand(g1, 0, m).is_positive()) return "g1 not gamma-positive";
                   if (m >= 1 && !g2.is_zero() && !gamma_expand(g2, 0, m - 1).is_positive()) return "g2 not gamma-positive";
                   return std::nullopt;
                 });
               }});
  return t;
}

}  // namespace

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["params"] = {{"max_n", std::to_string(max_n)}, {"order", std::to_string(order)}};
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["check_id"] = c.check_id;
    e["params"] = c.params;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["overall"] = overall;
  return j.dump(2);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "grammar", "triangles", "enumeration", "davidbarton", "series", "gamma"};
  return names;
}

VerifyReport run_suite(const std::string& suite, const VerifyOptions& opts) {
  using Builder = std::vector<Task> (*)(const VerifyOptions&);
  const std::map<std::string, Builder> builders{{"grammar", grammar_tasks},         {"triangles", triangle_tasks},
                                                {"enumeration", enumeration_tasks}, {"davidbarton", davidbarton_tasks},
                                                {"series", series_tasks},           {"gamma", gamma_tasks}};
  std::vector<Task> tasks;
  if (suite == "all") {
    for (const auto& [name, build] : builders) {
      auto more = build(opts);
      std::move(more.begin(), more.end(), std::back_inserter(tasks));
    }
  } else {
    const auto it = builders.find(suite);
    if (it == builders.end()) throw DomainError("unknown suite '" + suite + "'");
    tasks = it->second(opts);
  }

  std::vector<std::future<Outcome>> running;
  running.reserve(tasks.size());
  for (const auto& task : tasks)
    running.push_back(std::async(std::launch::async, [&task]() -> Outcome {
      try {
        return task.run();
      } catch (const SizeLimit&) {
        throw;
      } catch (const std::exception& e) {
        return {false, std::string("exception: ") + e.what()};
      }
    }));

  VerifyReport report{suite, opts.max_n, opts.order, {}, true};
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Outcome out = running[i].get();
    report.checks.push_back({tasks[i].id, tasks[i].params, out.pass, out.detail});
    report.overall = report.overall && out.pass;
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
  return report;
}

}  // namespace altrun::cli
