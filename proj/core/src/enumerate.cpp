#include "altrun/enumerate.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "altrun/errors.hpp"

namespace altrun {

namespace {

constexpr long kInfinity = LONG_MAX;

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw InvalidObject("bad entry '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw InvalidObject("bad entry '" + s + "'");
  }
}

// Single token without spaces is read one digit per entry.
std::vector<int> parse_word(std::string_view text) {
  const auto tokens = split_ws(text);
  std::vector<int> out;
  if (tokens.size() == 1 && std::all_of(tokens[0].begin(), tokens[0].end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    for (char c : tokens[0]) out.push_back(c - '0');
    return out;
  }
  for (const auto& t : tokens) out.push_back(parse_int(t));
  return out;
}

std::string join_word(const std::vector<int>& w, bool compact) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) os << ' ';
    os << w[i];
  }
  return os.str();
}

bool is_stirling(const std::vector<int>& w) {
  if (w.size() % 2 != 0) return false;
  const int n = static_cast<int>(w.size() / 2);
  std::vector<int> first(static_cast<std::size_t>(n) + 1, -1), count(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int v = w[i];
    if (v < 1 || v > n) return false;
    if (++count[static_cast<std::size_t>(v)] == 1) first[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  for (int v = 1; v <= n; ++v) {
    if (count[static_cast<std::size_t>(v)] != 2) return false;
    const auto start = static_cast<std::size_t>(first[static_cast<std::size_t>(v)]);
    for (std::size_t i = start + 1; w[i] != v; ++i)
      if (w[i] < v) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- objects

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v)])
      throw InvalidObject("not a permutation: " + join_word(word_, false));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) { return Permutation(parse_word(text)); }

std::string Permutation::to_string() const { return join_word(word_, word_.size() < 10); }

SignedPermutation::SignedPermutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    const int a = std::abs(v);
    if (a < 1 || a > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(a)])
      throw InvalidObject("not a signed permutation: " + join_word(word_, false));
    seen[static_cast<std::size_t>(a)] = true;
  }
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  std::vector<int> w;
  for (const auto& t : split_ws(text)) w.push_back(parse_int(t));
  return SignedPermutation(std::move(w));
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i > 0) os << ' ';
    os << (word_[i] > 0 ? "+" : "") << word_[i];
  }
  return os.str();
}

StirlingWord::StirlingWord(std::vector<int> word) : word_(std::move(word)) {
  if (!is_stirling(word_)) throw InvalidStirlingWord("not a Stirling permutation: " + join_word(word_, false));
}

StirlingWord StirlingWord::parse(std::string_view text) {
  std::vector<int> w;
  try {
    w = parse_word(text);
  } catch (const InvalidObject& e) {
    throw InvalidStirlingWord(e.what());
  }
  return StirlingWord(std::move(w));
}

std::string StirlingWord::to_string() const { return join_word(word_, order() < 10); }

std::string CycleForm::to_string() const {
  std::ostringstream os;
  for (const auto& c : cycles) os << '(' << join_word(c, false) << ')';
  return os.str();
}

std::string to_string(const CombObject& obj) {
  return std::visit([](const auto& o) { return o.to_string(); }, obj);
}

// ---------------------------------------------------------------- names

namespace {

const std::vector<std::pair<ObjectClass, std::string>>& class_names() {
  static const std::vector<std::pair<ObjectClass, std::string>> names{
      {ObjectClass::perm, "perm"},           {ObjectClass::signed_perm, "signed"},
      {ObjectClass::signed_hat, "signed_hat"}, {ObjectClass::derangement, "derangement"},
      {ObjectClass::stirling, "stirling"},   {ObjectClass::dual_stirling, "dual_stirling"}};
  return names;
}

const std::vector<std::pair<Statistic, std::string>>& stat_names() {
  static const std::vector<std::pair<Statistic, std::string>> names{
      {Statistic::altrun, "altrun"}, {Statistic::udrun, "udrun"},     {Statistic::des, "des"},
      {Statistic::as, "as"},         {Statistic::des_B, "des_B"},     {Statistic::altrun_B, "altrun_B"},
      {Statistic::crun, "crun"},     {Statistic::cyc, "cyc"},         {Statistic::fix, "fix"},
      {Statistic::cpk, "cpk"},       {Statistic::cdasc, "cdasc"},     {Statistic::cddes, "cddes"},
      {Statistic::ap, "ap"},         {Statistic::la, "la"},           {Statistic::fap, "fap"}};
  return names;
}

}  // namespace

ObjectClass parse_object_class(std::string_view name) {
  for (const auto& [c, s] : class_names())
    if (s == name) return c;
  throw DomainError("unknown object class '" + std::string(name) + "'");
}

std::string to_string(ObjectClass cls) {
  for (const auto& [c, s] : class_names())
    if (c == cls) return s;
  return "?";
}

Statistic parse_statistic(std::string_view name) {
  for (const auto& [c, s] : stat_names())
    if (s == name) return c;
  throw DomainError("unknown statistic '" + std::string(name) + "'");
}

std::string to_string(Statistic st) {
  for (const auto& [c, s] : stat_names())
    if (c == st) return s;
  return "?";
}

// ---------------------------------------------------------------- generation

std::uint64_t default_budget() {
  if (const char* env = std::getenv("ALTRUN_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 100'000'000ULL;
}

BigInt class_size(ObjectClass cls, unsigned n) {
  switch (cls) {
    case ObjectClass::perm:
      return factorial(n);
    case ObjectClass::signed_perm:
      return factorial(n) * (BigInt(1) << n);
    case ObjectClass::signed_hat:
      return n == 0 ? BigInt(0) : BigInt(factorial(n) * (BigInt(1) << (n - 1)));
    case ObjectClass::derangement: {
      BigInt prev = 1, cur = 0;  // D_0, D_1
      if (n == 0) return prev;
      for (unsigned k = 2; k <= n; ++k) {
        BigInt next = BigInt(k - 1) * (cur + prev);
        prev = cur;
        cur = next;
      }
      return cur;
    }
    case ObjectClass::stirling:
    case ObjectClass::dual_stirling:
      return double_factorial(2 * static_cast<long>(n) - 1);
  }
  return 0;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

void for_each_signed(int n, bool first_positive, const std::function<void(const SignedPermutation&)>& visit) {
  std::vector<int> word;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> candidates;
  for (int v = -n; v <= n; ++v)
    if (v != 0) candidates.push_back(v);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(word.size()) == n) {
      visit(SignedPermutation(word));
      return;
    }
    for (int v : candidates) {
      if (used[static_cast<std::size_t>(std::abs(v))]) continue;
      if (first_positive && word.empty() && v < 0) continue;
      used[static_cast<std::size_t>(std::abs(v))] = true;
      word.push_back(v);
      rec();
      word.pop_back();
      used[static_cast<std::size_t>(std::abs(v))] = false;
    }
  };
  rec();
}

void for_each_stirling(int n, const std::function<void(const StirlingWord&)>& visit) {
  // A value may be placed only if no open (once-placed) value exceeds it.
  std::vector<int> word;
  std::vector<int> placed(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> open_stack;  // open values, increasing from bottom to top
  std::function<void()> rec = [&]() {
    if (static_cast<int>(word.size()) == 2 * n) {
      visit(StirlingWord(word));
      return;
    }
    const int top = open_stack.empty() ? 0 : open_stack.back();
    for (int v = 1; v <= n; ++v) {
      const int times = placed[static_cast<std::size_t>(v)];
      if (times == 2) continue;
      if (times == 1 && v != top) continue;
      if (times == 0 && v < top) continue;
      placed[static_cast<std::size_t>(v)] = times + 1;
      word.push_back(v);
      if (times == 0)
        open_stack.push_back(v);
      else
        open_stack.pop_back();
      rec();
      if (times == 0)
        open_stack.pop_back();
      else
        open_stack.push_back(v);
      word.pop_back();
      placed[static_cast<std::size_t>(v)] = times;
    }
  };
  rec();
}

void for_each_object(ObjectClass cls, unsigned n, const std::function<void(const CombObject&)>& visit,
                     std::uint64_t budget) {
  const BigInt size = class_size(cls, n);
  if (size > BigInt(std::to_string(budget)))
    throw SizeLimit("enumerating " + size.get_str() + " objects of class " + to_string(cls) + " exceeds the budget of " +
                    std::to_string(budget));
  const int m = static_cast<int>(n);
  switch (cls) {
    case ObjectClass::perm:
      for_each_permutation(m, [&](const Permutation& p) { visit(p); });
      break;
    case ObjectClass::derangement:
      for_each_permutation(m, [&](const Permutation& p) {
        for (int i = 1; i <= m; ++i)
          if (p(i) == i) return;
        visit(p);
      });
      break;
    case ObjectClass::signed_perm:
      for_each_signed(m, false, [&](const SignedPermutation& p) { visit(p); });
      break;
    case ObjectClass::signed_hat:
      if (n == 0) throw DomainError("signed_hat requires n >= 1");
      for_each_signed(m, true, [&](const SignedPermutation& p) { visit(p); });
      break;
    case ObjectClass::stirling:
      for_each_stirling(m, [&](const StirlingWord& w) { visit(w); });
      break;
    case ObjectClass::dual_stirling: {
      std::vector<Permutation> images;
      for_each_stirling(m, [&](const StirlingWord& w) { images.push_back(dual_map(w)); });
      std::sort(images.begin(), images.end());
      for (const auto& p : images) visit(p);
      break;
    }
  }
}

std::vector<CombObject> generate(ObjectClass cls, unsigned n, std::uint64_t budget) {
  std::vector<CombObject> out;
  for_each_object(cls, n, [&](const CombObject& o) { out.push_back(o); }, budget);
  return out;
}

// ---------------------------------------------------------------- statistics

int alternating_runs(std::span<const long> word) {
  if (word.size() < 2) return 0;
  int runs = 1;
  bool up = word[1] > word[0];
  for (std::size_t i = 2; i < word.size(); ++i) {
    const bool next_up = word[i] > word[i - 1];
    if (next_up != up) ++runs;
    up = next_up;
  }
  return runs;
}

int cycle_runs(std::span<const int> cycle) {
  std::vector<long> w(cycle.begin(), cycle.end());
  w.push_back(kInfinity);
  return alternating_runs(w);
}

namespace {

struct CycleCounts {
  int peaks = 0, double_ascents = 0, double_descents = 0;
};

CycleCounts cycle_shape(std::span<const int> y) {
  CycleCounts c;
  const std::size_t k = y.size();
  for (std::size_t i = 1; i < k; ++i) {  // positions 2..k (1-based)
    const long prev = y[i - 1], cur = y[i];
    const long next = (i + 1 < k) ? y[i + 1] : kInfinity;
    if (prev < cur && cur > next) ++c.peaks;
    if (prev < cur && cur < next) ++c.double_ascents;
    if (prev > cur && cur > next) ++c.double_descents;
  }
  return c;
}

std::vector<long> with_leading_zero(const std::vector<int>& w) {
  std::vector<long> out{0};
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace

int cycle_peaks(std::span<const int> cycle) { return cycle_shape(cycle).peaks; }

int longest_alternating_subsequence(const Permutation& p) {
  const auto& w = p.word();
  const std::size_t n = w.size();
  if (n == 0) return 0;
  // odd[i]: longest ending at i with odd length (next step must descend);
  // even[i]: even length (next step must ascend).
  std::vector<int> odd(n, 1), even(n, 0);
  int best = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (w[j] > w[i]) even[i] = std::max(even[i], odd[j] + 1);
      if (w[j] < w[i] && even[j] > 0) odd[i] = std::max(odd[i], even[j] + 1);
    }
    best = std::max({best, odd[i], even[i]});
  }
  return best;
}

CycleForm cycle_canonical(const Permutation& p) {
  CycleForm out;
  const int n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[static_cast<std::size_t>(v)]; v = p(v)) {
      seen[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

Permutation from_cycles(const CycleForm& c) {
  std::size_t n = 0;
  for (const auto& cyc : c.cycles) n += cyc.size();
  std::vector<int> w(n, 0);
  for (const auto& cyc : c.cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int from = cyc[i];
      if (from < 1 || from > static_cast<int>(n) || w[static_cast<std::size_t>(from - 1)] != 0)
        throw InvalidObject("cycles do not partition [n]: " + c.to_string());
      w[static_cast<std::size_t>(from - 1)] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(w));
}

int signed_altrun(const SignedPermutation& p) { return alternating_runs(with_leading_zero(p.word())); }

Permutation dual_map(const StirlingWord& w) {
  std::vector<bool> seen(static_cast<std::size_t>(w.order()) + 1, false);
  std::vector<int> out;
  out.reserve(w.word().size());
  for (int v : w.word()) {
    out.push_back(seen[static_cast<std::size_t>(v)] ? 2 * v - 1 : 2 * v);
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(out));
}

int stat(const Permutation& p, Statistic s) {
  const auto& w = p.word();
  switch (s) {
    case Statistic::altrun:
      return alternating_runs(std::vector<long>(w.begin(), w.end()));
    case Statistic::udrun:
      return alternating_runs(with_leading_zero(w));
    case Statistic::des: {
      int d = 0;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
      return d;
    }
    case Statistic::as:
      return longest_alternating_subsequence(p);
    case Statistic::fix: {
      int f = 0;
      for (int i = 1; i <= p.size(); ++i) f += p(i) == i;
      return f;
    }
    case Statistic::cyc:
      return static_cast<int>(cycle_canonical(p).cycles.size());
    case Statistic::crun:
    case Statistic::cpk:
    case Statistic::cdasc:
    case Statistic::cddes: {
      int total = 0;
      for (const auto& c : cycle_canonical(p).cycles) {
        if (s == Statistic::crun) {
          total += cycle_runs(c);
          continue;
        }
        const CycleCounts cc = cycle_shape(c);
        total += s == Statistic::cpk ? cc.peaks : (s == Statistic::cdasc ? cc.double_ascents : cc.double_descents);
      }
      return total;
    }
    default:
      throw StatClassMismatch("statistic " + to_string(s) + " does not apply to permutations");
  }
}

int stat(const SignedPermutation& p, Statistic s) {
  switch (s) {
    case Statistic::des_B: {
      const auto w = with_leading_zero(p.word());
      int d = 0;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
      return d;
    }
    case Statistic::altrun_B:
    case Statistic::altrun:
      return signed_altrun(p);
    default:
      throw StatClassMismatch("statistic " + to_string(s) + " does not apply to signed permutations");
  }
}

int stat(const StirlingWord& sw, Statistic s) {
  const auto& w = sw.word();
  auto plateau_after_ascent = [&](std::size_t i, int prev) { return prev < w[i] && i + 1 < w.size() && w[i] == w[i + 1]; };
  switch (s) {
    case Statistic::ap: {
      int c = 0;
      for (std::size_t i = 1; i + 1 < w.size(); ++i) c += plateau_after_ascent(i, w[i - 1]);
      return c;
    }
    case Statistic::la: {
      int c = 0;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) c += plateau_after_ascent(i, i == 0 ? 0 : w[i - 1]);
      return c;
    }
    case Statistic::fap: {
      const int ap = stat(sw, Statistic::ap);
      return (w.size() >= 2 && w[0] == w[1]) ? 2 * ap + 1 : 2 * ap;
    }
    default:
      throw StatClassMismatch("statistic " + to_string(s) + " does not apply to Stirling permutations");
  }
}

int stat(const CombObject& obj, Statistic s) {
  return std::visit([s](const auto& o) { return stat(o, s); }, obj);
}

MultiPoly distribution(ObjectClass cls, unsigned n, const std::vector<std::pair<Statistic, std::string>>& stats,
                       std::uint64_t budget) {
  Alphabet alphabet;
  for (const auto& [s, var] : stats) {
    if (std::find(alphabet.begin(), alphabet.end(), var) != alphabet.end())
      throw DomainError("variable '" + var + "' used twice");
    alphabet.push_back(var);
  }
  std::map<Exponents, std::uint64_t> counts;
  Exponents e(stats.size());
  for_each_object(
      cls, n,
      [&](const CombObject& obj) {
        for (std::size_t i = 0; i < stats.size(); ++i) e[i] = static_cast<unsigned>(stat(obj, stats[i].first));
        ++counts[e];
      },
      budget);
  MultiPoly::Terms terms;
  for (const auto& [exps, c] : counts) terms.emplace(exps, Rational(BigInt(std::to_string(c))));
  return MultiPoly(alphabet, std::move(terms));
}

}  // namespace altrun
