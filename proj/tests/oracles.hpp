#pragma once

// Brute-force and hand-rolled references used by the tests. Nothing here
// calls into the library except the final conversion to Poly.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <vector>

#include "altrun/poly.hpp"

namespace oracle {

using Counts = std::vector<mpz_class>;  // index = exponent
using Word = std::vector<int>;

inline void bump(Counts& c, std::size_t k, const mpz_class& by = 1) {
  if (c.size() <= k) c.resize(k + 1, 0);
  c[k] += by;
}

inline altrun::Poly to_poly(const Counts& c) {
  std::vector<altrun::Rational> r;
  for (const auto& v : c) r.emplace_back(altrun::BigInt(v));
  return altrun::Poly(r);
}

// Runs by counting direction changes.
inline int runs(const std::vector<long>& w) {
  if (w.size() < 2) return 0;
  int r = 1;
  for (std::size_t i = 2; i < w.size(); ++i)
    if ((w[i - 1] > w[i - 2]) != (w[i] > w[i - 1])) ++r;
  return r;
}

inline std::vector<long> widen(const Word& w) { return {w.begin(), w.end()}; }

inline std::vector<long> with_zero(const Word& w) {
  std::vector<long> out{0};
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

inline void each_perm(int n, const std::function<void(const Word&)>& f) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do f(w);
  while (std::next_permutation(w.begin(), w.end()));
}

inline int descents(const Word& w) {
  int d = 0;
  for (std::size_t i = 1; i < w.size(); ++i) d += w[i - 1] > w[i];
  return d;
}

// Longest subsequence with pattern > < > < ... by trying every subset.
inline int longest_alternating_brute(const Word& w) {
  const std::size_t n = w.size();
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(w[i]);
    bool ok = true;
    for (std::size_t i = 1; i < s.size() && ok; ++i) ok = (i % 2 == 1) ? s[i - 1] > s[i] : s[i - 1] < s[i];
    if (ok) best = std::max(best, static_cast<int>(s.size()));
  }
  return best;
}

// Cycles of w, each started at its minimum.
inline std::vector<Word> cycles(const Word& w) {
  std::vector<Word> out;
  std::vector<bool> seen(w.size() + 1, false);
  for (int s = 1; s <= static_cast<int>(w.size()); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    Word c;
    for (int i = s; !seen[static_cast<std::size_t>(i)]; i = w[static_cast<std::size_t>(i - 1)]) {
      seen[static_cast<std::size_t>(i)] = true;
      c.push_back(i);
    }
    out.push_back(c);
  }
  return out;
}

inline int cycle_run_total(const Word& w) {
  int total = 0;
  for (const auto& c : cycles(w)) {
    auto v = widen(c);
    v.push_back(std::numeric_limits<long>::max());
    total += runs(v);
  }
  return total;
}

inline void each_stirling(int n, const std::function<void(const Word&)>& f) {
  Word w;
  for (int i = 1; i <= n; ++i) w.insert(w.end(), {i, i});
  do {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      const auto first = std::find(w.begin(), w.end(), i);
      const auto second = std::find(first + 1, w.end(), i);
      ok = std::all_of(first + 1, second, [i](int v) { return v > i; });
    }
    if (ok) f(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

// Ascent plateaus with an optional leading 0.
inline int plateaus(const Word& w, bool left) {
  Word s = w;
  if (left) s.insert(s.begin(), 0);
  int c = 0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) c += s[i - 1] < s[i] && s[i] == s[i + 1];
  return c;
}

inline Word dual(const Word& w) {
  Word out;
  std::vector<bool> seen(w.size() + 1, false);
  for (int v : w) {
    out.push_back(seen[static_cast<std::size_t>(v)] ? 2 * v - 1 : 2 * v);
    seen[static_cast<std::size_t>(v)] = true;
  }
  return out;
}

inline void each_signed(int n, const std::function<void(const Word&)>& f) {
  each_perm(n, [&](const Word& p) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Word s = p;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) s[static_cast<std::size_t>(i)] = -s[static_cast<std::size_t>(i)];
      f(s);
    }
  });
}

// ---------------------------------------------------------------- triangles
// t[n][k] as integers, by straight transcription of each recurrence.

using Table = std::vector<std::vector<mpz_class>>;

inline mpz_class get(const Table& t, long n, long k) {
  if (n < 0 || k < 0 || n >= static_cast<long>(t.size()) || k >= static_cast<long>(t[static_cast<std::size_t>(n)].size())) return 0;
  return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

inline Table grow(long rows, long width, const std::function<void(Table&)>& seed,
                  const std::function<mpz_class(const Table&, long n, long k)>& next, long first_computed) {
  Table t(static_cast<std::size_t>(rows + 1), std::vector<mpz_class>(static_cast<std::size_t>(width), 0));
  seed(t);
  for (long n = first_computed; n <= rows; ++n)
    for (long k = 0; k < width; ++k) t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = next(t, n - 1, k);
  return t;
}

inline Table R(long rows) {
  return grow(rows, 2 * rows + 4, [](Table& t) { if (t.size() > 1) t[1][0] = 1; },
              [](const Table& t, long n, long k) -> mpz_class {
                return k * get(t, n, k) + 2 * get(t, n, k - 1) + (n - k + 1) * get(t, n, k - 2);
              }, 2);
}

inline Table T(long rows) {
  return grow(rows, 2 * rows + 4, [](Table& t) { t[0][0] = 1; },
              [](const Table& t, long n, long k) -> mpz_class {
                return k * get(t, n, k) + get(t, n, k - 1) + (n - k + 2) * get(t, n, k - 2);
              }, 1);
}

inline Table F(long rows) {
  return grow(rows, 2 * rows + 4, [](Table& t) { t[0][0] = 1; if (t.size() > 1) t[1][1] = 1; },
              [](const Table& t, long n, long k) -> mpz_class {
                return k * get(t, n, k) + get(t, n, k - 1) + (2 * n - k + 2) * get(t, n, k - 2);
              }, 2);
}

inline Table gamma(long rows) {
  return grow(rows, rows + 3, [](Table& t) { t[0][0] = 1; if (t.size() > 1) t[1][1] = 1; },
              [](const Table& t, long n, long k) -> mpz_class { return k * get(t, n, k) + (2 * n - 4 * k + 5) * get(t, n, k - 1); }, 2);
}

inline Table f(long rows) {
  return grow(rows, rows + 3, [](Table& t) { t[0][0] = 1; if (t.size() > 1) t[1][1] = 1; },
              [](const Table& t, long n, long k) -> mpz_class {
                return k * get(t, n, k) + get(t, n, k - 1) + 4 * (n - k + 2) * get(t, n, k - 2);
              }, 2);
}

// a(n,k) and b(n,k) are indexed by their own n (recurrence in n-1).
inline Table a(long rows) {
  return grow(rows, rows + 3, [](Table& t) { if (t.size() > 1) t[1][1] = 1; },
              [](const Table& t, long m, long k) -> mpz_class { const long n = m + 1; return k * get(t, m, k) + (2 * n - 4 * k + 4) * get(t, m, k - 1); }, 2);
}

inline Table b(long rows) {
  return grow(rows, rows + 3, [](Table& t) { t[0][0] = 1; if (t.size() > 1) t[1][0] = 1; },
              [](const Table& t, long m, long k) -> mpz_class {
                const long n = m + 1;
                return (1 + 2 * k) * get(t, m, k) + 4 * (n - 2 * k + 1) * get(t, m, k - 1);
              }, 2);
}

inline Counts row(const Table& t, long n) {
  Counts c = t[static_cast<std::size_t>(n)];
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

}  // namespace oracle
