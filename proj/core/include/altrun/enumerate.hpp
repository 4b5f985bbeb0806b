#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "altrun/multipoly.hpp"
#include "altrun/rational.hpp"

namespace altrun {

/// A permutation of [n] in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidObject unless `word` is a bijection on [n].
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);
  /// "324156" (one digit per entry) or space-separated "10 2 1 ...".
  static Permutation parse(std::string_view text);

  [[nodiscard]] const std::vector<int>& word() const { return word_; }
  [[nodiscard]] int size() const { return static_cast<int>(word_.size()); }
  [[nodiscard]] int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  [[nodiscard]] std::string to_string() const;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// A signed permutation pi(1)..pi(n); statistics read it as 0 pi(1) ... pi(n).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> word);
  /// "+2 -1"
  static SignedPermutation parse(std::string_view text);

  [[nodiscard]] const std::vector<int>& word() const { return word_; }
  [[nodiscard]] int size() const { return static_cast<int>(word_.size()); }
  [[nodiscard]] std::string to_string() const;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> word_;
};

/// A Stirling permutation of order n: each of 1..n twice, and every entry
/// between the two copies of i exceeds i.
class StirlingWord {
 public:
  StirlingWord() = default;
  /// Throws InvalidStirlingWord.
  explicit StirlingWord(std::vector<int> word);
  static StirlingWord parse(std::string_view text);

  [[nodiscard]] const std::vector<int>& word() const { return word_; }
  [[nodiscard]] int order() const { return static_cast<int>(word_.size() / 2); }
  [[nodiscard]] std::string to_string() const;
  friend auto operator<=>(const StirlingWord&, const StirlingWord&) = default;

 private:
  std::vector<int> word_;
};

/// Standard cycle decomposition: each cycle starts at its minimum and the
/// cycles are sorted by minimum.
struct CycleForm {
  std::vector<std::vector<int>> cycles;

  [[nodiscard]] std::string to_string() const;  // "(1 3 2)(4 5)"
  friend bool operator==(const CycleForm&, const CycleForm&) = default;
};

using CombObject = std::variant<Permutation, SignedPermutation, StirlingWord>;

std::string to_string(const CombObject& obj);

enum class ObjectClass { perm, signed_perm, signed_hat, derangement, stirling, dual_stirling };

enum class Statistic { altrun, udrun, des, as, des_B, altrun_B, crun, cyc, fix, cpk, cdasc, cddes, ap, la, fap };

ObjectClass parse_object_class(std::string_view name);  // throws DomainError
std::string to_string(ObjectClass cls);
Statistic parse_statistic(std::string_view name);  // throws DomainError
std::string to_string(Statistic s);

/// Enumeration budget: ALTRUN_BUDGET if set, else 10^8 objects.
std::uint64_t default_budget();

/// Number of objects of the class: n!, 2^n n!, 2^(n-1) n!, D_n, (2n-1)!!, (2n-1)!!.
BigInt class_size(ObjectClass cls, unsigned n);

/// Visits every object of the class exactly once, in lexicographic order of
/// its word. Throws SizeLimit when class_size exceeds `budget`.
void for_each_object(ObjectClass cls, unsigned n, const std::function<void(const CombObject&)>& visit,
                     std::uint64_t budget = default_budget());
std::vector<CombObject> generate(ObjectClass cls, unsigned n, std::uint64_t budget = default_budget());

/// Typed generators in lexicographic order (no budget check).
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);
void for_each_signed(int n, bool first_positive, const std::function<void(const SignedPermutation&)>& visit);
void for_each_stirling(int n, const std::function<void(const StirlingWord&)>& visit);

/// Number of maximal monotone blocks of a sequence of distinct values. A
/// sequence of length <= 1 has none.
int alternating_runs(std::span<const long> word);

int stat(const CombObject& obj, Statistic s);  // throws StatClassMismatch
int stat(const Permutation& p, Statistic s);
int stat(const SignedPermutation& p, Statistic s);
int stat(const StirlingWord& w, Statistic s);

/// Length of the longest subsequence pi(i1) > pi(i2) < pi(i3) > ...
int longest_alternating_subsequence(const Permutation& p);

CycleForm cycle_canonical(const Permutation& p);
/// Inverse of cycle_canonical: throws InvalidObject when the cycles do not
/// partition [n].
Permutation from_cycles(const CycleForm& c);

/// Runs of one canonical cycle y1..yk read with a trailing infinity.
int cycle_runs(std::span<const int> cycle);
int cycle_peaks(std::span<const int> cycle);

/// Alternating runs of 0, pi(1), ..., pi(n).
int signed_altrun(const SignedPermutation& p);

/// First copy of j maps to 2j, second copy to 2j-1.
Permutation dual_map(const StirlingWord& w);

/// Sum over the class of prod var^stat, as a polynomial over the listed
/// variables. Throws SizeLimit.
MultiPoly distribution(ObjectClass cls, unsigned n, const std::vector<std::pair<Statistic, std::string>>& stats,
                       std::uint64_t budget = default_budget());

}  // namespace altrun
