#include "doctest.h"

#include <random>

#include "altrun/errors.hpp"
#include "altrun/multipoly.hpp"
#include "altrun/poly.hpp"
#include "altrun/quadext.hpp"
#include "altrun/ratfunc.hpp"
#include "altrun/rational.hpp"
#include "../oracles.hpp"

using namespace altrun;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), c(-6, 6), d(1, 4);
  std::vector<Rational> coeffs;
  const int n = deg(rng);
  for (int i = 0; i <= n; ++i) coeffs.emplace_back(c(rng), d(rng));
  return Poly(coeffs);
}

Poly R_row(long n) { return oracle::to_poly(oracle::row(oracle::R(n), n)); }

}  // namespace

TEST_CASE("rational literals round trip in lowest terms") {
  CHECK(Rational::parse("6/4").to_string() == "3/2");
  CHECK(Rational::parse("-10/5").to_string() == "-2");
  CHECK(Rational::parse("0/7").to_string() == "0");
  CHECK_THROWS_AS(Rational::parse("3/-6"), ParseError);
  CHECK(Rational(0).den() == 1);
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
}

TEST_CASE("factorials and binomials") {
  CHECK(factorial(10) == 3628800);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(-1) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("poly arithmetic examples") {
  const Poly one_x{1, 1};
  CHECK(one_x * one_x == Poly{1, 2, 1});
  const Poly r4{0, 2, 12, 10};
  CHECK(r4.derivative() == Poly{2, 24, 30});
  CHECK(r4.evaluate(Rational(-1)) == Rational(0));
  CHECK(r4 == R_row(4));
  CHECK(r4.to_string() == "2*x + 12*x^2 + 10*x^3");
  CHECK(Poly().to_string() == "0");
  CHECK(Poly().degree() == -1);
}

TEST_CASE("divide_exact") {
  CHECK(divide_exact(Poly{0, 1, 4, 3}, Poly{1, 1}) == Poly{0, 1, 3});
  CHECK(divide_exact(Poly{0, 0, 1}, Poly{0, 1}) == Poly{0, 1});
  CHECK_THROWS_AS(divide_exact(Poly{1, 0, 1}, Poly{1, 1}), NotDivisible);
  CHECK_THROWS_AS(divide_exact(Poly{1}, Poly()), DivisionByZero);
}

TEST_CASE("root multiplicity at -1") {
  CHECK(root_multiplicity(Poly{1, 2, 1}, Rational(-1)) == 2);
  CHECK(root_multiplicity(R_row(4), Rational(-1)) == 1);
  CHECK(root_multiplicity(R_row(7), Rational(-1)) == 2);
  CHECK_THROWS_AS(root_multiplicity(Poly(), Rational(-1)), ZeroPolynomial);
}

TEST_CASE("is_symmetric") {
  CHECK(is_symmetric(Poly{0, 1, 7, 29, 31, 29, 7, 1}, 1, 7));
  CHECK(is_symmetric(Poly{1}, 0, 0));
  CHECK_FALSE(is_symmetric(R_row(4), 1, 3));
  CHECK_THROWS_AS(is_symmetric(Poly{1, 1}, 1, 1), SupportOutOfRange);
}

TEST_CASE("property: divide_exact undoes multiplication") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Poly p = random_poly(rng, 6);
    Poly d = random_poly(rng, 4);
    if (d.is_zero()) d = Poly{1};
    CHECK(divide_exact(p * d, d) == p);
    const auto [q, r] = divmod(p, d);
    CHECK(q * d + r == p);
    CHECK(r.degree() < d.degree());
  }
}

TEST_CASE("property: root multiplicity matches vanishing derivatives") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    Poly p = random_poly(rng, 4);
    if (p.is_zero()) continue;
    const unsigned extra = static_cast<unsigned>(i % 4);
    p = p * Poly{1, 1}.pow(extra);
    const unsigned m = root_multiplicity(p, Rational(-1));
    CHECK(m >= extra);
    Poly d = p;
    for (unsigned j = 0; j < m; ++j) {
      CHECK(d.evaluate(Rational(-1)).is_zero());
      d = d.derivative();
    }
    CHECK_FALSE(d.evaluate(Rational(-1)).is_zero());
  }
}

TEST_CASE("rational functions are canonical") {
  const RationalFunction f(Poly{-1, 0, 1}, Poly{2, 2});  // (x^2-1)/(2x+2) = (x-1)/2
  CHECK(f.is_polynomial());
  CHECK(f.to_poly() == Poly{Rational(-1, 2), Rational(1, 2)});
  const RationalFunction g(Poly{1}, Poly{0, 3});
  CHECK(g.den() == Poly{0, 1});
  CHECK(g.num() == Poly{Rational(1, 3)});
  CHECK(g * RationalFunction(Poly{0, 3}) == RationalFunction(1));
  CHECK(g.derivative() == RationalFunction(Poly{Rational(-1, 3)}, Poly{0, 0, 1}));
  CHECK_THROWS_AS(RationalFunction(Poly{1}, Poly()), DivisionByZero);
  CHECK_THROWS_AS(g.evaluate(Rational(0)), DivisionByZero);
}

TEST_CASE("quadratic extension norm identity") {
  std::mt19937_64 rng(13);
  const RationalFunction disc(Poly{1, 0, -1});
  for (int i = 0; i < 50; ++i) {
    const RationalFunction a(random_poly(rng, 3)), b(random_poly(rng, 3));
    const QuadExt z(a, b, disc);
    const QuadExt prod = z * z.conjugate();
    CHECK(prod.radical().is_zero());
    CHECK(prod.base() == a * a - b * b * disc);
    if (!z.is_zero()) CHECK(z * z.inverse() == QuadExt::scalar(RationalFunction(1), disc));
  }
}

TEST_CASE("quadratic extension basics") {
  const RationalFunction disc(Poly{1, 0, -1});
  const QuadExt rho = QuadExt::root(disc);
  CHECK(rho * rho == QuadExt::scalar(disc, disc));
  // rho' = -x / rho = -x rho / (1 - x^2)
  CHECK(rho.derivative() == QuadExt(RationalFunction(), RationalFunction(Poly{0, -1}, Poly{1, 0, -1}), disc));
  const QuadExt w = QuadExt::root(RationalFunction(Poly{1, -1}, Poly{1, 1}));
  CHECK_THROWS_AS(rho + w, DiscriminantMismatch);
}

TEST_CASE("multivariate polynomials") {
  const Alphabet al{"a", "b", "c", "q"};
  const MultiPoly p = parse_multipoly("q*a*b + 2*a^2 - a^2", al);
  CHECK(p.to_string() == "a^2 + a*b*q");
  CHECK(p.degree_in("a") == 2);
  CHECK(p.partial("a") == parse_multipoly("q*b + 2*a", al));
  CHECK(p.specialize("q", Rational(3)) == parse_multipoly("3*a*b + a^2", al));
  CHECK_THROWS_AS(parse_multipoly("a*z", al), UnknownSymbol);
  CHECK_THROWS_AS(parse_multipoly("a +", al), ParseError);
  CHECK_THROWS_AS(p + MultiPoly::variable({"x"}, "x"), AlphabetMismatch);

  const Alphabet yz{"y", "z"};
  const MultiPoly image = p.substitute({{"a", parse_multipoly("y*z", yz)},
                                        {"b", parse_multipoly("y + z", yz)},
                                        {"c", MultiPoly(yz)},
                                        {"q", MultiPoly::constant(yz, Rational(1))}},
                                       yz);
  CHECK(image == parse_multipoly("y^2*z + y*z^2 + y^2*z^2", yz));
  CHECK(MultiPoly::from_univariate({"x", "q"}, "x", Poly{0, 1, 3}).to_univariate("x") == Poly{0, 1, 3});
  CHECK_THROWS_AS(parse_multipoly("x*q", {"x", "q"}).to_univariate("x"), NotOfExpectedShape);
}
