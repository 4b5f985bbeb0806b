#include "altrun/families.hpp"

#include <tuple>

#include "altrun/errors.hpp"

namespace altrun {

namespace {

const std::vector<std::pair<Family, std::string>>& family_names() {
  static const std::vector<std::pair<Family, std::string>> names{
      {Family::R, "R"}, {Family::T, "T"}, {Family::Rq, "Rq"},       {Family::a, "a"},
      {Family::b, "b"}, {Family::F, "F"}, {Family::gamma, "gamma"}, {Family::f, "f"}};
  return names;
}

const std::vector<std::pair<Sequence, std::string>>& sequence_names() {
  static const std::vector<std::pair<Sequence, std::string>> names{
      {Sequence::bpoly, "bpoly"},         {Sequence::cpoly, "cpoly"}, {Sequence::dpoly, "dpoly"},
      {Sequence::gammapoly, "gammapoly"}, {Sequence::Fpoly, "Fpoly"}, {Sequence::eulerA, "eulerA"},
      {Sequence::eulerB, "eulerB"}};
  return names;
}

Rational r(long v) { return Rational(v); }

// One step of a three-term recurrence
//   next(k) = c0(k) prev(k) + c1(k) prev(k-1) + c2(k) prev(k-2)
// over k in [0, k_hi], with prev read as zero outside its stored range.
template <class Coef>
std::vector<Poly> step(const std::vector<Poly>& prev, long k_hi, Coef coef) {
  auto get = [&](long k) { return (k < 0 || k >= static_cast<long>(prev.size())) ? Poly() : prev[static_cast<std::size_t>(k)]; };
  std::vector<Poly> next(static_cast<std::size_t>(k_hi + 1));
  for (long k = 0; k <= k_hi; ++k) {
    const auto [c0, c1, c2] = coef(k);
    next[static_cast<std::size_t>(k)] = get(k) * c0 + get(k - 1) * c1 + get(k - 2) * c2;
  }
  return next;
}

struct Range {
  long lo, hi;
};

Range family_range(Family f, long n) {
  switch (f) {
    case Family::R:
      return n == 0 ? Range{0, -1} : Range{0, n - 1};
    case Family::T:
    case Family::Rq:
      return {0, n};
    case Family::a:
      return n == 0 ? Range{0, -1} : Range{1, (n + 1) / 2};
    case Family::b:
      return {0, n / 2};
    case Family::F:
      return n == 0 ? Range{0, 0} : Range{1, 2 * n - 1};
    case Family::gamma:
    case Family::f:
      return n == 0 ? Range{0, 0} : Range{1, n};
  }
  return {0, -1};
}

}  // namespace

Family parse_family(std::string_view name) {
  for (const auto& [f, s] : family_names())
    if (s == name) return f;
  throw UnknownFamily("unknown family '" + std::string(name) + "'");
}

std::string to_string(Family f) {
  for (const auto& [fam, s] : family_names())
    if (fam == f) return s;
  return "?";
}

Sequence parse_sequence(std::string_view name) {
  for (const auto& [f, s] : sequence_names())
    if (s == name) return f;
  throw UnknownFamily("unknown polynomial sequence '" + std::string(name) + "'");
}

std::string to_string(Sequence seq) {
  for (const auto& [f, s] : sequence_names())
    if (f == seq) return s;
  return "?";
}

Triangle triangle(Family family, unsigned max_n) {
  const Poly q = Poly::x();
  Triangle out(to_string(family), family == Family::Rq ? "q" : "");
  std::vector<Poly> prev;  // dense from k = 0
  for (long n = 0; n <= static_cast<long>(max_n); ++n) {
    const Range range = family_range(family, n);
    std::vector<Poly> cur;
    if (n == 0) {
      if (range.hi >= 0) cur = {Poly(1)};
    } else {
      const long m = n - 1;  // cur is row m + 1
      switch (family) {
        case Family::R:
          // R(m+1,k) = k R(m,k) + 2 R(m,k-1) + (m-k+1) R(m,k-2), seeded by R(1,0) = 1
          if (n == 1)
            cur = {Poly(1)};
          else
            cur = step(prev, range.hi + 2, [&](long k) { return std::tuple{r(k), r(2), r(m - k + 1)}; });
          break;
        case Family::T:
          cur = step(prev, range.hi + 2, [&](long k) { return std::tuple{r(k), r(1), r(m - k + 2)}; });
          break;
        case Family::Rq:
          cur = step(prev, range.hi + 2, [&](long k) { return std::tuple{Poly(k), q, Poly(m - k + 2)}; });
          break;
        case Family::a:
          // a(n,k) = k a(n-1,k) + (2n-4k+4) a(n-1,k-1), seeded by a(1,1) = 1
          if (n == 1)
            cur = {Poly(), Poly(1)};
          else
            cur = step(prev, range.hi + 2, [&](long k) { return std::tuple{r(k), r(2 * n - 4 * k + 4), r(0)}; });
          break;
        case Family::b:
          cur = step(prev, range.hi + 2, [&](long k) { return std::tuple{r(1 + 2 * k), r(4 * (n - 2 * k + 1)), r(0)}; });
          break;
        case Family::F:
          cur = step(prev, range.hi + 2, [&](long k) { return std::tuple{r(k), r(1), r(2 * m - k + 2)}; });
          break;
        case Family::gamma:
          cur = step(prev, range.hi + 2, [&](long k) { return std::tuple{r(k), r(2 * m - 4 * k + 5), r(0)}; });
          break;
        case Family::f:
          cur = step(prev, range.hi + 2, [&](long k) { return std::tuple{r(k), r(1), r(4 * (m - k + 2))}; });
          break;
      }
    }
    out.push_dense_row(cur, range.lo, range.hi);
    prev = std::move(cur);
  }
  return out;
}

Triangle triangle(std::string_view name, unsigned max_n) { return triangle(parse_family(name), max_n); }

const Poly& PolySeq::at(long n) const {
  if (n < first_index || n > last_index())
    throw DomainError(name + " has no entry at index " + std::to_string(n));
  return values[static_cast<std::size_t>(n - first_index)];
}

PolySeq polyseq(Sequence s, unsigned max_n) {
  const Poly x = Poly::x();
  const Poly one_minus_x2 = Poly{1, 0, -1};
  PolySeq out{to_string(s), 0, {}};
  const long N = static_cast<long>(max_n);
  switch (s) {
    case Sequence::bpoly: {
      // b_{n+1} = (1 + x + 2n x^2) b_n + 2x(1-x^2) b_n'
      Poly cur(1);
      for (long n = 0; n <= N; ++n) {
        out.values.push_back(cur);
        cur = (Poly{1, 1, 2 * n} * cur) + Poly{0, 2} * one_minus_x2 * cur.derivative();
      }
      break;
    }
    case Sequence::cpoly: {
      // c_{n+1} = (2n x^2 + 3x - 1) c_n + 2x(1-x^2) c_n', c_1 = x
      out.first_index = 1;
      Poly cur = x;
      for (long n = 1; n <= N; ++n) {
        out.values.push_back(cur);
        cur = Poly{-1, 3, 2 * n} * cur + Poly{0, 2} * one_minus_x2 * cur.derivative();
      }
      break;
    }
    case Sequence::dpoly: {
      // d_{n+1} = n x^2 d_n + x(1-x^2) d_n' + n x d_{n-1}
      Poly prev(1), cur;  // d_0, d_1
      out.values.push_back(prev);
      if (N >= 1) out.values.push_back(cur);
      for (long n = 1; n < N; ++n) {
        Poly next = Poly::monomial(r(n), 2) * cur + x * one_minus_x2 * cur.derivative() + Poly::monomial(r(n), 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
        out.values.push_back(cur);
      }
      break;
    }
    case Sequence::gammapoly: {
      // gamma_{n+1} = (2n+1) x gamma_n + x(1-4x) gamma_n'
      Poly cur(1);
      for (long n = 0; n <= N; ++n) {
        out.values.push_back(cur);
        cur = Poly::monomial(r(2 * n + 1), 1) * cur + Poly{0, 1, -4} * cur.derivative();
      }
      break;
    }
    case Sequence::Fpoly: {
      // F_{n+1} = (x + 2n x^2) F_n + x(1-x^2) F_n'
      Poly cur(1);
      for (long n = 0; n <= N; ++n) {
        out.values.push_back(cur);
        cur = Poly{0, 1, 2 * n} * cur + x * one_minus_x2 * cur.derivative();
      }
      break;
    }
    case Sequence::eulerA:
      out.first_index = 1;
      for (unsigned n = 1; n <= max_n; ++n) out.values.push_back(eulerian(n, EulerType::A));
      break;
    case Sequence::eulerB:
      for (unsigned n = 0; n <= max_n; ++n) out.values.push_back(eulerian(n, EulerType::B));
      break;
  }
  return out;
}

PolySeq polyseq(std::string_view name, unsigned max_n) { return polyseq(parse_sequence(name), max_n); }

Poly q_specialize(const Triangle& rq, long n, const Rational& q0) {
  const auto& row = rq.row(n);
  std::vector<Rational> coeffs;
  for (long k = row.k_min; k <= row.k_max; ++k) {
    if (k < 0) continue;
    if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(static_cast<std::size_t>(k) + 1);
    coeffs[static_cast<std::size_t>(k)] = rq.at(n, k).evaluate(q0);
  }
  return Poly(std::move(coeffs));
}

MultiPoly inclusion_exclusion_Rxy(unsigned n, const Rational& q0) {
  const Alphabet xy{"x", "y"};
  const Triangle rq = triangle(Family::Rq, n);
  const MultiPoly x = MultiPoly::variable(xy, "x");
  const MultiPoly y = MultiPoly::variable(xy, "y");
  const MultiPoly base = q0 * x * y - q0 * x;
  MultiPoly out(xy);
  MultiPoly power = MultiPoly::constant(xy, Rational(1));
  for (unsigned i = 0; i <= n; ++i) {
    const Poly rest = q_specialize(rq, static_cast<long>(n - i), q0);
    out += Rational(binomial(n, i)) * power * MultiPoly::from_univariate(xy, "x", rest);
    power = power * base;
  }
  return out;
}

Poly eulerian(unsigned n, EulerType type) {
  const long N = static_cast<long>(n);
  Poly out;
  if (type == EulerType::A) {
    if (n == 0) throw DomainError("A_n is defined for n >= 1");
    const Triangle a = triangle(Family::a, n);
    for (long k = 1; 2 * k <= N + 1; ++k)
      out += Poly(a.scalar(N, k)).shift(static_cast<std::size_t>(k)) * one_plus_x_pow(static_cast<unsigned>(N + 1 - 2 * k));
  } else {
    const Triangle b = triangle(Family::b, n);
    for (long k = 0; 2 * k <= N; ++k)
      out += Poly(b.scalar(N, k)).shift(static_cast<std::size_t>(k)) * one_plus_x_pow(static_cast<unsigned>(N - 2 * k));
  }
  return out;
}

}  // namespace altrun
