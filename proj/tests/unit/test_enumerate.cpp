#include "doctest.h"

#include <cstdlib>

#include "altrun/enumerate.hpp"
#include "altrun/errors.hpp"
#include "../oracles.hpp"

using namespace altrun;

namespace {

std::vector<std::string> words(ObjectClass cls, unsigned n) {
  std::vector<std::string> out;
  for (const auto& o : generate(cls, n)) out.push_back(to_string(o));
  return out;
}

Poly dist_x(ObjectClass cls, unsigned n, Statistic s) { return distribution(cls, n, {{s, "x"}}).to_univariate("x"); }

}  // namespace

TEST_CASE("generate examples and cardinalities") {
  CHECK(generate(ObjectClass::perm, 3).size() == 6);
  CHECK(words(ObjectClass::stirling, 2) == std::vector<std::string>{"1122", "1221", "2211"});
  CHECK(words(ObjectClass::derangement, 3) == std::vector<std::string>{"231", "312"});
  const unsigned derangements[] = {1, 0, 1, 2, 9, 44, 265};
  for (unsigned n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(generate(ObjectClass::perm, n).size() == factorial(n).get_ui());
    CHECK(generate(ObjectClass::derangement, n).size() == derangements[n]);
    CHECK(generate(ObjectClass::signed_perm, n).size() == BigInt(factorial(n) << n).get_ui());
    CHECK(generate(ObjectClass::stirling, n).size() == double_factorial(2 * static_cast<long>(n) - 1).get_ui());
    CHECK(generate(ObjectClass::dual_stirling, n).size() == double_factorial(2 * static_cast<long>(n) - 1).get_ui());
    if (n >= 1) CHECK(generate(ObjectClass::signed_hat, n).size() == BigInt(factorial(n) << (n - 1)).get_ui());
    CHECK(class_size(ObjectClass::stirling, n) == double_factorial(2 * static_cast<long>(n) - 1));
  }
}

TEST_CASE("generation is lexicographic") {
  for (const auto cls : {ObjectClass::perm, ObjectClass::derangement, ObjectClass::signed_perm, ObjectClass::stirling,
                         ObjectClass::dual_stirling}) {
    const auto objs = generate(cls, 4);
    for (std::size_t i = 1; i < objs.size(); ++i) CHECK(objs[i - 1] < objs[i]);
  }
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(generate(ObjectClass::perm, 6, 100), SizeLimit);
  CHECK_NOTHROW(generate(ObjectClass::perm, 5, 120));
  CHECK_THROWS_AS(distribution(ObjectClass::signed_perm, 5, {{Statistic::des_B, "x"}}, 1000), SizeLimit);
}

TEST_CASE("statistics on named examples") {
  const Permutation p = Permutation::parse("324156");
  CHECK(stat(p, Statistic::altrun) == 4);
  CHECK(stat(p, Statistic::udrun) == 5);
  CHECK(stat(Permutation::identity(3), Statistic::crun) == 3);
  CHECK(stat(Permutation::parse("312"), Statistic::crun) == 3);
  CHECK(stat(Permutation::parse("312"), Statistic::cyc) == 1);
  CHECK(stat(Permutation::parse("1"), Statistic::altrun) == 0);
  CHECK(stat(Permutation(), Statistic::udrun) == 0);
  CHECK(stat(Permutation::parse("2143"), Statistic::fix) == 0);
  CHECK_THROWS_AS(stat(CombObject(Permutation::parse("21")), Statistic::fap), StatClassMismatch);
  CHECK_THROWS_AS(stat(CombObject(StirlingWord::parse("1122")), Statistic::crun), StatClassMismatch);
  CHECK_THROWS_AS(Permutation::parse("113"), InvalidObject);
}

TEST_CASE("dual map") {
  CHECK(dual_map(StirlingWord::parse("221331")).to_string() == "432651");
  CHECK(dual_map(StirlingWord::parse("11")).to_string() == "21");
  CHECK(dual_map(StirlingWord::parse("1122")).to_string() == "2143");
  CHECK_THROWS_AS(StirlingWord::parse("1212"), InvalidStirlingWord);
  CHECK_THROWS_AS(StirlingWord::parse("112"), InvalidStirlingWord);
}

TEST_CASE("cycle forms") {
  CHECK(cycle_canonical(Permutation::parse("231")).to_string() == "(1 2 3)");
  CHECK(cycle_canonical(Permutation::parse("2143")).to_string() == "(1 2)(3 4)");
  CHECK(cycle_canonical(Permutation::parse("312")).to_string() == "(1 3 2)");
  for (int n = 0; n <= 8; ++n)
    for_each_permutation(n, [](const Permutation& p) { CHECK(from_cycles(cycle_canonical(p)) == p); });
  CHECK_THROWS_AS(from_cycles(CycleForm{{{1, 2}, {2, 3}}}), InvalidObject);
}

TEST_CASE("signed alternating runs") {
  CHECK(signed_altrun(SignedPermutation::parse("+1 +2")) == 1);
  CHECK(signed_altrun(SignedPermutation::parse("+2 -1")) == 2);
  CHECK(signed_altrun(SignedPermutation::parse("+1")) == 1);
  CHECK(SignedPermutation::parse("+2 -1").to_string() == "+2 -1");
}

TEST_CASE("distribution examples") {
  CHECK(distribution(ObjectClass::perm, 3, {{Statistic::altrun, "x"}}).to_string() == "2*x + 4*x^2");
  const MultiPoly r3 = distribution(ObjectClass::perm, 3, {{Statistic::crun, "x"}, {Statistic::cyc, "q"}});
  CHECK(r3 == parse_multipoly("q*x*(1 + 3*q*x + x^2 + q^2*x^2)", r3.alphabet()));
  CHECK(dist_x(ObjectClass::stirling, 2, Statistic::fap) == Poly{0, 1, 1, 1});
}

TEST_CASE("statistics agree with brute-force definitions") {
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    for_each_permutation(n, [&](const Permutation& p) {
      const auto& w = p.word();
      CHECK(stat(p, Statistic::altrun) == oracle::runs(oracle::widen(w)));
      CHECK(stat(p, Statistic::udrun) == oracle::runs(oracle::with_zero(w)));
      CHECK(stat(p, Statistic::des) == oracle::descents(w));
      CHECK(stat(p, Statistic::crun) == oracle::cycle_run_total(w));
      CHECK(stat(p, Statistic::cyc) == static_cast<int>(oracle::cycles(w).size()));
    });
  }
}

TEST_CASE("as equals udrun, checked against exhaustive subsequences") {
  for (int n = 1; n <= 8; ++n)
    for_each_permutation(n, [&](const Permutation& p) {
      CHECK(stat(p, Statistic::as) == stat(p, Statistic::udrun));
      if (n <= 6) CHECK(stat(p, Statistic::as) == oracle::longest_alternating_brute(p.word()));
    });
}

TEST_CASE("cycle runs are 2 cpk + 1 per cycle") {
  for (int n = 1; n <= 7; ++n)
    for_each_permutation(n, [&](const Permutation& p) {
      int peaks = 0;
      for (const auto& c : cycle_canonical(p).cycles) {
        CHECK(cycle_runs(c) == 2 * cycle_peaks(c) + 1);
        peaks += cycle_peaks(c);
      }
      CHECK(stat(p, Statistic::cpk) == peaks);
      CHECK(stat(p, Statistic::crun) == 2 * peaks + stat(p, Statistic::cyc));
    });
}

TEST_CASE("Stirling statistics and the dual map") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    std::size_t count = 0;
    oracle::each_stirling(n, [&](const oracle::Word& w) {
      ++count;
      const StirlingWord s(w);
      const int ap = oracle::plateaus(w, false), la = oracle::plateaus(w, true);
      CHECK(stat(s, Statistic::ap) == ap);
      CHECK(stat(s, Statistic::la) == la);
      CHECK(stat(s, Statistic::fap) == ap + la);
      const Permutation d = dual_map(s);
      CHECK(d.word() == oracle::dual(w));
      CHECK(stat(s, Statistic::fap) == stat(d, Statistic::altrun));
      const auto& dw = d.word();
      CHECK(dw[dw.size() - 2] > dw.back());
      for (int j = 1; j <= n; ++j) {
        const auto hi = std::find(dw.begin(), dw.end(), 2 * j), lo = std::find(dw.begin(), dw.end(), 2 * j - 1);
        CHECK(hi < lo);
        CHECK(std::all_of(hi + 1, lo, [j](int v) { return v > 2 * j; }));
      }
    });
    CHECK(count == generate(ObjectClass::stirling, static_cast<unsigned>(n)).size());
  }
}

TEST_CASE("distributions match brute-force tallies") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    oracle::Counts alt, ud, der, desb, hat, fap;
    oracle::each_perm(n, [&](const oracle::Word& w) {
      oracle::bump(alt, static_cast<std::size_t>(oracle::runs(oracle::widen(w))));
      oracle::bump(ud, static_cast<std::size_t>(oracle::runs(oracle::with_zero(w))));
      bool fixed = false;
      for (int i = 0; i < n; ++i) fixed = fixed || w[static_cast<std::size_t>(i)] == i + 1;
      if (!fixed) oracle::bump(der, static_cast<std::size_t>(oracle::cycle_run_total(w)));
    });
    oracle::each_signed(n, [&](const oracle::Word& w) {
      const auto z = oracle::with_zero(w);
      int d = 0;
      for (std::size_t i = 1; i < z.size(); ++i) d += z[i - 1] > z[i];
      oracle::bump(desb, static_cast<std::size_t>(d));
      if (w[0] > 0) oracle::bump(hat, static_cast<std::size_t>(oracle::runs(z)));
    });
    oracle::each_stirling(n, [&](const oracle::Word& w) {
      oracle::bump(fap, static_cast<std::size_t>(oracle::plateaus(w, false) + oracle::plateaus(w, true)));
    });
    CHECK(dist_x(ObjectClass::perm, n, Statistic::altrun) == oracle::to_poly(alt));
    CHECK(dist_x(ObjectClass::perm, n, Statistic::udrun) == oracle::to_poly(ud));
    CHECK(dist_x(ObjectClass::derangement, n, Statistic::crun) == oracle::to_poly(der));
    CHECK(dist_x(ObjectClass::signed_perm, n, Statistic::des_B) == oracle::to_poly(desb));
    CHECK(dist_x(ObjectClass::signed_hat, n, Statistic::altrun_B) == oracle::to_poly(hat));
    CHECK(dist_x(ObjectClass::stirling, n, Statistic::fap) == oracle::to_poly(fap));
    CHECK(dist_x(ObjectClass::dual_stirling, n, Statistic::altrun) == oracle::to_poly(fap));
  }
}

TEST_CASE("total mass is the class size") {
  for (unsigned n = 1; n <= 6; ++n)
    for (const auto& [cls, s] : std::vector<std::pair<ObjectClass, Statistic>>{{ObjectClass::perm, Statistic::altrun},
                                                                              {ObjectClass::signed_perm, Statistic::des_B},
                                                                              {ObjectClass::signed_hat, Statistic::altrun_B},
                                                                              {ObjectClass::stirling, Statistic::fap}})
      CHECK(dist_x(cls, n, s).evaluate(Rational(1)) == Rational(class_size(cls, n)));
}

TEST_CASE("statistic and class names") {
  CHECK(parse_statistic("fap") == Statistic::fap);
  CHECK(to_string(Statistic::des_B) == "des_B");
  CHECK(parse_object_class("signed") == ObjectClass::signed_perm);
  CHECK(to_string(ObjectClass::signed_hat) == "signed_hat");
  CHECK_THROWS_AS(parse_statistic("peaks"), DomainError);
  CHECK_THROWS_AS(parse_object_class("words"), DomainError);
}
