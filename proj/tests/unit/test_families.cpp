#include "doctest.h"

#include "altrun/errors.hpp"
#include "altrun/families.hpp"
#include "altrun/triangle_io.hpp"
#include "../oracles.hpp"

using namespace altrun;

namespace {

Poly row(const oracle::Table& t, long n) { return oracle::to_poly(oracle::row(t, n)); }

Poly x_pow(long k) { return Poly::monomial(Rational(1), static_cast<std::size_t>(k)); }

}  // namespace

TEST_CASE("triangle examples") {
  const Triangle t = triangle(Family::T, 3);
  CHECK(t.row_poly(3) == Poly{0, 1, 3, 2});
  CHECK(triangle(Family::gamma, 4).scalar(4, 4) == Rational(-15));
  const Triangle r = triangle(Family::R, 1);
  CHECK(r.row(1).k_min == 0);
  CHECK(r.row(1).entries == std::vector<Poly>{Poly{1}});
  CHECK_THROWS_AS(triangle("Q", 3), UnknownFamily);
}

TEST_CASE("integer triangles match transcribed recurrences") {
  const long N = 14;
  const std::vector<std::pair<Family, oracle::Table>> pairs{{Family::R, oracle::R(N)},         {Family::T, oracle::T(N)},
                                                            {Family::F, oracle::F(N)},         {Family::gamma, oracle::gamma(N)},
                                                            {Family::f, oracle::f(N)},         {Family::a, oracle::a(N)},
                                                            {Family::b, oracle::b(N)}};
  for (const auto& [fam, table] : pairs) {
    const Triangle t = triangle(fam, N);
    for (long n = 0; n <= N; ++n) {
      CAPTURE(to_string(fam));
      CAPTURE(n);
      CHECK(t.row_poly(n) == row(table, n));
    }
  }
}

TEST_CASE("polyseq examples") {
  const PolySeq d = polyseq(Sequence::dpoly, 3);
  CHECK(d.at(3) == Poly{0, 1, 0, 1});
  CHECK(d.at(3).evaluate(Rational(-1)) == Rational(-2));
  CHECK(polyseq(Sequence::gammapoly, 3).at(3) == Poly{0, 1, -1, 3});
  CHECK(polyseq(Sequence::Fpoly, 4).at(4) == Poly{0, 1, 7, 29, 31, 29, 7, 1});
  CHECK(polyseq(Sequence::Fpoly, 4).at(4).to_string() == "x + 7*x^2 + 29*x^3 + 31*x^4 + 29*x^5 + 7*x^6 + x^7");
  CHECK(polyseq(Sequence::bpoly, 2).at(2) == Poly{1, 4, 3});
  CHECK(polyseq(Sequence::cpoly, 2).at(2) == Poly{0, 1, 3});
  CHECK(polyseq(Sequence::cpoly, 2).first_index == 1);
  CHECK_THROWS_AS(polyseq("zpoly", 3), UnknownFamily);
}

TEST_CASE("q specialization") {
  const Triangle rq = triangle(Family::Rq, 3);
  CHECK(q_specialize(rq, 2, Rational(1)) == Poly{0, 1, 1});
  CHECK(q_specialize(rq, 2, Rational(2)) == Poly{0, 2, 4});
  CHECK(q_specialize(rq, 0, Rational(7, 3)) == Poly{1});
  const MultiPoly r3 = rq.row_multipoly(3);
  CHECK(r3 == parse_multipoly("q*x*(1 + 3*q*x + x^2 + q^2*x^2)", r3.alphabet()));
}

TEST_CASE("inclusion-exclusion") {
  CHECK(inclusion_exclusion_Rxy(2, Rational(1)).specialize("y", Rational(0)).to_univariate("x") == Poly{0, 1});
  CHECK(inclusion_exclusion_Rxy(3, Rational(1)).specialize("y", Rational(0)).to_univariate("x") == Poly{0, 1, 0, 1});
  CHECK(inclusion_exclusion_Rxy(0, Rational(5)).constant_term() == Rational(1));
  const Triangle rq = triangle(Family::Rq, 8);
  const PolySeq d = polyseq(Sequence::dpoly, 8);
  for (unsigned n = 0; n <= 8; ++n)
    for (const Rational q0 : {Rational(1), Rational(-2), Rational(3, 4)}) {
      const MultiPoly p = inclusion_exclusion_Rxy(n, q0);
      CHECK(p.specialize("y", Rational(1)).to_univariate("x") == q_specialize(rq, n, q0));
      if (q0 == Rational(1)) CHECK(p.specialize("y", Rational(0)).to_univariate("x") == d.at(n));
    }
}

TEST_CASE("eulerian examples") {
  CHECK(eulerian(2, EulerType::A) == Poly{0, 1, 1});
  CHECK(eulerian(2, EulerType::B) == Poly{1, 6, 1});
  CHECK(eulerian(1, EulerType::A) == Poly{0, 1});
}

TEST_CASE("row sums and identities") {
  const long N = 12;
  const Triangle r = triangle(Family::R, N), t = triangle(Family::T, N), rq = triangle(Family::Rq, N);
  for (long n = 1; n <= N; ++n) {
    const Rational nf(factorial(static_cast<unsigned>(n)));
    CHECK(r.row_poly(n).evaluate(Rational(1)) == nf);
    CHECK(t.row_poly(n).evaluate(Rational(1)) == nf);
    CHECK(q_specialize(rq, n, Rational(1)).evaluate(Rational(1)) == nf);
    if (n >= 2) CHECK(t.row_poly(n) == Poly{1, 1} * r.row_poly(n) * Rational(1, 2));
  }
}

TEST_CASE("b, c, d sequences against their triangles") {
  const long N = 12;
  const Triangle b = triangle(Family::b, N);
  const PolySeq bp = polyseq(Sequence::bpoly, N), cp = polyseq(Sequence::cpoly, N), d = polyseq(Sequence::dpoly, N);
  for (long n = 0; n <= N; ++n) {
    Poly sum;
    for (long k = 0; k <= n / 2; ++k)
      sum += x_pow(k) * Poly{1, 1}.pow(static_cast<unsigned>(n - k)) * (b.scalar(n, k) * Rational(2).pow(-k));
    CHECK(bp.at(n) == sum);
    if (n >= 1) {
      CHECK(cp.at(n) == divide_exact(bp.at(n) * Poly::x(), Poly{1, 1}));
      CHECK(d.at(n).evaluate(Rational(-1)) == Rational(1 - n));
    }
  }
}

TEST_CASE("Rq parity") {
  const Triangle rq = triangle(Family::Rq, 10);
  for (long n = 0; n <= 10; ++n) {
    const MultiPoly p = rq.row_multipoly(n);
    const Alphabet& al = p.alphabet();
    const MultiPoly negq = p.substitute({{"q", -MultiPoly::variable(al, "q")}}, al);
    const MultiPoly negx = p.substitute({{"x", -MultiPoly::variable(al, "x")}}, al);
    const MultiPoly both = negq.substitute({{"x", -MultiPoly::variable(al, "x")}}, al);
    CHECK(negq == negx);
    CHECK(both == p);
  }
}

TEST_CASE("F rows through gamma and f") {
  const long N = 12;
  const Triangle g = triangle(Family::gamma, N), f = triangle(Family::f, N);
  const PolySeq fp = polyseq(Sequence::Fpoly, N);
  for (long n = 0; n <= N; ++n) {
    Poly via_gamma, via_f;
    for (long k = 0; k <= n; ++k) {
      via_gamma += x_pow(k) * Poly{1, 1}.pow(static_cast<unsigned>(2 * n - 2 * k)) * g.scalar(n, k);
      via_f += x_pow(k) * Poly{1, 0, 1}.pow(static_cast<unsigned>(n - k)) * f.scalar(n, k);
    }
    CAPTURE(n);
    CHECK(via_gamma == fp.at(n));
    CHECK(via_f == fp.at(n));
  }
  const Triangle f40 = triangle(Family::f, 40);
  for (long n = 0; n <= 40; ++n)
    for (long k = 0; k <= n; ++k) CHECK(f40.scalar(n, k).sign() >= 0);
}

TEST_CASE("triangle export formats") {
  const Triangle r = triangle(Family::R, 3);
  CHECK(format_triangle(r, TriangleFormat::table) == "0:\n1: 1\n2: 0 2\n3: 0 2 4\n");
  CHECK(format_triangle(r, TriangleFormat::csv) == "n,k,value\n1,0,1\n2,0,0\n2,1,2\n3,0,0\n3,1,2\n3,2,4\n");
  const std::string b = format_triangle(triangle(Family::R, 1), TriangleFormat::bfile);
  CHECK(b.rfind("# ", 0) == 0);
  CHECK(b.substr(b.find('\n') + 1) == "1 1\n");
  CHECK_THROWS_AS(format_triangle(triangle(Family::Rq, 2), TriangleFormat::bfile), DomainError);
  const std::string js = format_triangle(triangle(Family::Rq, 1), TriangleFormat::json);
  CHECK(js.find("\"entries\":[\"0\",\"q\"]") != std::string::npos);
  CHECK_THROWS_AS(parse_triangle_format("xml"), DomainError);
}
