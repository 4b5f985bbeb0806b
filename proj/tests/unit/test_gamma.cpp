#include "doctest.h"

#include <random>

#include "json.hpp"

#include "altrun/errors.hpp"
#include "altrun/families.hpp"
#include "altrun/gamma.hpp"
#include "../oracles.hpp"

using namespace altrun;

namespace {

std::vector<Rational> rs(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Symmetric on [low, low + d] with small rational coefficients.
Poly random_symmetric(std::mt19937_64& rng, long low, long d) {
  std::uniform_int_distribution<long> c(-5, 5), den(1, 3);
  std::vector<Rational> coeffs(static_cast<std::size_t>(low + d + 1));
  for (long i = 0; i <= d / 2; ++i) {
    const Rational v(c(rng), den(rng));
    coeffs[static_cast<std::size_t>(low + i)] = v;
    coeffs[static_cast<std::size_t>(low + d - i)] = v;
  }
  return Poly(coeffs);
}

}  // namespace

TEST_CASE("gamma_expand examples") {
  const GammaForm a3 = gamma_expand(Poly{0, 1, 4, 1}, 1, 3);
  CHECK(a3.gammas == rs({1, 2}));
  CHECK(a3.is_positive());
  const GammaForm f2 = gamma_expand(Poly{0, 1, 1, 1}, 1, 3);
  CHECK(f2.gammas == rs({1, -1}));
  CHECK_FALSE(f2.is_positive());
  CHECK(gamma_expand(Poly{1, 2, 1}, 0, 2).gammas == rs({1, 0}));
  CHECK_THROWS_AS(gamma_expand(Poly{1, 2}, 0, 1), NotSymmetric);
}

TEST_CASE("semi_gamma_expand examples") {
  const SemiGammaForm f3 = semi_gamma_expand(Poly{1, 3, 7, 3, 1}, 0, 4);
  CHECK(f3.nu == 0);
  CHECK(f3.lambdas == rs({1, 3, 5}));
  CHECK(f3.reassemble() * Poly::x() == Poly{0, 1, 3, 7, 3, 1});
  const SemiGammaForm cube = semi_gamma_expand(Poly{1, 3, 3, 1}, 0, 3);
  CHECK(cube.nu == 1);
  CHECK(cube.lambdas == rs({1, 2}));
  const SemiGammaForm one = semi_gamma_expand(Poly{1}, 0, 0);
  CHECK(one.nu == 0);
  CHECK(one.lambdas == rs({1}));
}

TEST_CASE("gamma_to_lambda examples") {
  CHECK(gamma_to_lambda(gamma_expand(Poly{1, 2, 1}, 0, 2)).lambdas == rs({1, 2}));
  CHECK(gamma_to_lambda(gamma_expand(Poly{1, 1, 1}, 0, 2)).lambdas == rs({1, 1}));
  GammaForm zero{0, 4, rs({0, 0, 0})};
  CHECK(gamma_to_lambda(zero).lambdas == rs({0, 0, 0}));
}

TEST_CASE("split_even_odd examples") {
  const auto [g1, g2] = split_even_odd(Poly{1, 3, 7, 3, 1}, 0);
  CHECK(g1 == Poly{1, 7, 1});
  CHECK(g2 == Poly{3, 3});
  const auto [h1, h2] = split_even_odd(Poly{1, 0, 1}, 0);
  CHECK(h1 == Poly{1, 1});
  CHECK(h2.is_zero());
  const auto [c1, c2] = split_even_odd(Poly{1, 3, 3, 1}, 1);
  CHECK(c1 == Poly{1, 1});
  CHECK(c2 == Poly{2});
  CHECK_THROWS_AS(split_even_odd(Poly{1, 0, 1}, 1), NotDivisible);
}

TEST_CASE("david_barton_assemble examples") {
  CHECK(david_barton_assemble(GammaForm{0, 4, rs({0, 1, 2})}, 3, 1) == Poly{0, 2, 4});
  CHECK(david_barton_assemble(GammaForm{0, 2, rs({1, 4})}, 2, 0) == Poly{1, 4, 3});
  CHECK(david_barton_assemble(GammaForm{0, 3, rs({0, 1})}, 2, 1) == Poly{0, 2});
  CHECK_THROWS_AS(david_barton_assemble(GammaForm{0, 4, rs({0, 1})}, 2, 1), DomainError);
}

TEST_CASE("david_barton identity at t = 1/3 by hand") {
  // x = 4/5, RHS = (9/10) (4/3)^3 A_2(1/2) = 8/5 = R_2(4/5)
  const Rational t(1, 3);
  const Rational x = (Rational(1) - t * t) / (Rational(1) + t * t);
  CHECK(x == Rational(4, 5));
  const Rational rhs = Rational(9, 10) * Rational(4, 3).pow(3) * Poly{0, 1, 1}.evaluate(Rational(1, 2));
  CHECK(rhs == Rational(8, 5));
  CHECK(Poly{0, 2}.evaluate(x) == rhs);
  CHECK(david_barton_check(Poly{0, 1, 1}, Poly{0, 2}, 2, 1, {t}).first_mismatch == -1);
  // one sample against a degree-1 polynomial is not a certificate
  CHECK_FALSE(david_barton_identity_check(Poly{0, 1, 1}, Poly{0, 2}, 2, 1, {t}));
  CHECK(david_barton_identity_check(Poly{0, 1, 1}, Poly{0, 2}, 2, 1, interior_samples(2)));
  CHECK_THROWS_AS(david_barton_check(Poly{0, 1, 1}, Poly{0, 2}, 2, 1, {Rational(1)}), DegenerateSample);
}

TEST_CASE("david_barton certificates for both families") {
  const Triangle r = triangle(Family::R, 10);
  const PolySeq b = polyseq(Sequence::bpoly, 10);
  for (long n = 2; n <= 10; ++n) {
    const Poly an = eulerian(static_cast<unsigned>(n), EulerType::A);
    CHECK(david_barton_identity_check(an, r.row_poly(n), n, 1, interior_samples(static_cast<std::size_t>(n))));
    CHECK(david_barton_assemble(gamma_expand(an, 1, n), n, 1) == r.row_poly(n));
  }
  for (long n = 1; n <= 10; ++n) {
    const Poly bn = eulerian(static_cast<unsigned>(n), EulerType::B);
    CHECK(david_barton_identity_check(bn, b.at(n), n, 0, interior_samples(static_cast<std::size_t>(n) + 1)));
  }
}

TEST_CASE("property: expansions round trip on random symmetric polynomials") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> deg(0, 16), low(0, 3);
  for (int i = 0; i < 200; ++i) {
    const long lo = low(rng), d = deg(rng);
    const Poly p = random_symmetric(rng, lo, d);
    if (p.is_zero()) continue;
    const GammaForm g = gamma_expand(p, lo, lo + d);
    const SemiGammaForm s = semi_gamma_expand(p, lo, lo + d);
    CHECK(g.reassemble() == p);
    CHECK(s.reassemble() == p);
    CHECK(gamma_to_lambda(g) == s);
    CHECK(s.nu == d % 2);
    if (g.is_positive()) CHECK(s.is_positive());
  }
}

TEST_CASE("positive gamma rows give positive lambdas") {
  const Triangle a = triangle(Family::a, 12), b = triangle(Family::b, 12);
  for (long n = 1; n <= 12; ++n) {
    const GammaForm ga = gamma_expand(eulerian(static_cast<unsigned>(n), EulerType::A), 1, n);
    const GammaForm gb = gamma_expand(eulerian(static_cast<unsigned>(n), EulerType::B), 0, n);
    CHECK(ga.is_positive());
    CHECK(gb.is_positive());
    CHECK(gamma_to_lambda(ga).is_positive());
    CHECK(gamma_to_lambda(gb).is_positive());
    for (long k = 0; k <= n / 2; ++k) CHECK(gb.coeff(k) == b.scalar(n, k));
    for (long k = 1; k <= (n + 1) / 2; ++k) CHECK(ga.coeff(k) == a.scalar(n, k));
  }
}

TEST_CASE("split halves of F_n/x are gamma-positive") {
  const PolySeq f = polyseq(Sequence::Fpoly, 12);
  for (long n = 1; n <= 12; ++n) {
    const Poly p = divide_exact(f.at(n), Poly::x());
    const auto [g1, g2] = split_even_odd(p, 0);
    CHECK(g1.evaluate(Rational(0)) == Rational(1));
    const long m = n - 1;
    CHECK(gamma_expand(g1, 0, m).is_positive());
    if (!g2.is_zero()) CHECK(gamma_expand(g2, 0, m - 1).is_positive());
  }
}

TEST_CASE("json forms") {
  const auto j = nlohmann::json::parse(gamma_expand(Poly{0, 1, 1, 1}, 1, 3).to_json());
  CHECK(j["coeffs"] == nlohmann::json::array({"1", "-1"}));
  CHECK(j["nu"].is_null());
  const auto s = nlohmann::json::parse(semi_gamma_expand(Poly{1, 3, 3, 1}, 0, 3).to_json());
  CHECK(s["nu"] == 1);
  CHECK(s["coeffs"] == nlohmann::json::array({"1", "2"}));
}
