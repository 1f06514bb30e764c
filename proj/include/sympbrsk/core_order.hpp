#pragma once

// Index sets I(r,n), the symplectic subset I(d), the componentwise order,
// degrees, admissible pairs and standard tableaux / standard monomials.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sympbrsk/error.hpp"

namespace sympbrsk {

/// A strictly increasing tuple of integers drawn from [n] = {1..n}.
class IndexSet {
 public:
  IndexSet() = default;

  IndexSet(std::vector<int> entries, int ambient) : entries_(std::move(entries)), n_(ambient) {
    if (n_ <= 0) throw InvalidInput("IndexSet: ambient size must be positive");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i] < 1 || entries_[i] > n_)
        throw InvalidInput("IndexSet: entry " + std::to_string(entries_[i]) + " outside [1," +
                           std::to_string(n_) + "]");
      if (i > 0 && entries_[i - 1] >= entries_[i])
        throw InvalidInput("IndexSet: entries must be strictly increasing");
    }
  }

  IndexSet(std::initializer_list<int> entries, int ambient)
      : IndexSet(std::vector<int>(entries), ambient) {}

  /// Sorts first; still rejects duplicates.
  static IndexSet from_unsorted(std::vector<int> entries, int ambient) {
    std::sort(entries.begin(), entries.end());
    return IndexSet(std::move(entries), ambient);
  }

  std::span<const int> entries() const { return entries_; }
  const std::vector<int>& vec() const { return entries_; }
  int ambient() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool contains(int x) const { return std::binary_search(entries_.begin(), entries_.end(), x); }

  // Lexicographic total order, for canonical sorting only. The partial
  // order of the theory is leq() below.
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries_[i]);
    }
    return s + "}";
  }

 private:
  std::vector<int> entries_;
  int n_ = 0;
};

/// j* = 2d + 1 - j.
constexpr int star(int j, int d) { return 2 * d + 1 - j; }

/// Componentwise comparison a <= b of two r-subsets of [n].
inline bool leq(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size() || a.ambient() != b.ambient())
    throw InvalidInput("leq: index sets of different shape " + a.to_string() + " vs " +
                       b.to_string());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool geq(const IndexSet& a, const IndexSet& b) { return leq(b, a); }

inline bool comparable(const IndexSet& a, const IndexSet& b) { return leq(a, b) || leq(b, a); }

/// Whether x, a d-subset of [2d], picks exactly one of j, j* for each j <= d.
inline bool is_member_I_d(const IndexSet& x, int d) {
  if (d <= 0) throw InvalidInput("is_member_I_d: d must be positive");
  if (static_cast<int>(x.size()) != d)
    throw InvalidInput("is_member_I_d: " + x.to_string() + " does not have " + std::to_string(d) +
                       " entries");
  if (!x.empty() && x.vec().back() > 2 * d)
    throw InvalidInput("is_member_I_d: entry outside [2d] in " + x.to_string());
  for (int j = 1; j <= d; ++j)
    if (x.contains(j) == x.contains(star(j, d))) return false;
  return true;
}

inline void require_I_d(const IndexSet& x, int d, const char* who) {
  if (!is_member_I_d(x, d))
    throw InvalidInput(std::string(who) + ": " + x.to_string() + " is not in I(" +
                       std::to_string(d) + ")");
}

/// All r-subsets of [n] in lexicographic order.
inline std::vector<IndexSet> all_subsets(int r, int n) {
  std::vector<IndexSet> out;
  if (r < 0 || r > n) return out;
  std::vector<int> cur(r);
  for (int i = 0; i < r; ++i) cur[i] = i + 1;
  while (true) {
    out.emplace_back(cur, n);
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int k = i + 1; k < r; ++k) cur[k] = cur[k - 1] + 1;
  }
  return out;
}

/// I(d) in lexicographic order.
inline std::vector<IndexSet> all_I_d(int d) {
  std::vector<IndexSet> out;
  for (auto& x : all_subsets(d, 2 * d))
    if (is_member_I_d(x, d)) out.push_back(std::move(x));
  return out;
}

/// |a \ b| for sorted sets.
inline int difference_size(const IndexSet& a, const IndexSet& b) {
  int count = 0;
  for (int x : a)
    if (!b.contains(x)) ++count;
  return count;
}

/// eps-degree: |x \ [d]|.
inline int eps_degree(const IndexSet& x, int d) {
  require_I_d(x, d, "eps_degree");
  return static_cast<int>(std::count_if(x.begin(), x.end(), [d](int e) { return e > d; }));
}

/// Non-negative half-integer stored as twice its value.
struct HalfInt {
  int doubled = 0;

  double value() const { return doubled / 2.0; }
  bool is_integral() const { return doubled % 2 == 0; }

  HalfInt& operator+=(HalfInt o) {
    doubled += o.doubled;
    return *this;
  }
  friend HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend auto operator<=>(HalfInt, HalfInt) = default;
};

/// (top, bot) with top >= bot and equal eps-degrees, both in I(d).
struct AdmissiblePair {
  IndexSet top;
  IndexSet bot;

  friend auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;
  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

inline bool is_admissible(const AdmissiblePair& p, int d) {
  if (!is_member_I_d(p.top, d) || !is_member_I_d(p.bot, d)) return false;
  return leq(p.bot, p.top) && eps_degree(p.top, d) == eps_degree(p.bot, d);
}

inline AdmissiblePair make_admissible_pair(IndexSet top, IndexSet bot, int d) {
  AdmissiblePair p{std::move(top), std::move(bot)};
  if (!is_admissible(p, d))
    throw InvalidInput("(" + p.top.to_string() + "," + p.bot.to_string() +
                       ") is not an admissible pair");
  return p;
}

/// v-degree of a pair, (|top \ v| + |bot \ v|) / 2.
inline HalfInt v_degree_pair(const AdmissiblePair& p, const IndexSet& v) {
  if (p.top.size() != v.size() || p.bot.size() != v.size())
    throw InvalidInput("v_degree_pair: shape mismatch");
  return HalfInt{difference_size(p.top, v) + difference_size(p.bot, v)};
}

struct StandardTableau {
  std::vector<AdmissiblePair> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

inline HalfInt tableau_degree(const StandardTableau& t, const IndexSet& v) {
  HalfInt total;
  for (const auto& p : t.pairs) total += v_degree_pair(p, v);
  return total;
}

struct TableauFlags {
  bool standard = false;
  bool v_compatible = false;
  bool w_dominated = false;
  bool anti_dominated = false;
};

inline TableauFlags classify_tableau(const StandardTableau& t, const IndexSet& v,
                                     const IndexSet& w) {
  TableauFlags f;
  f.standard = true;
  for (std::size_t i = 0; i + 1 < t.pairs.size(); ++i)
    if (!leq(t.pairs[i + 1].top, t.pairs[i].bot)) f.standard = false;

  f.v_compatible = std::all_of(t.pairs.begin(), t.pairs.end(), [&](const AdmissiblePair& p) {
    if (p.top == v && p.bot == v) return false;
    return leq(p.top, v) || leq(v, p.bot);
  });
  f.w_dominated = t.empty() || leq(t.pairs.front().top, w);
  f.anti_dominated = t.empty() || leq(v, t.pairs.back().bot);
  return f;
}

/// Non-increasing sequence of d-subsets of [2d].
struct StandardMonomial {
  std::vector<IndexSet> words;

  std::size_t size() const { return words.size(); }
  bool empty() const { return words.empty(); }
  friend bool operator==(const StandardMonomial&, const StandardMonomial&) = default;
};

inline bool is_standard(const StandardMonomial& m) {
  for (std::size_t i = 0; i + 1 < m.words.size(); ++i)
    if (!leq(m.words[i + 1], m.words[i])) return false;
  return true;
}

/// Standard, every word comparable to v and different from v, last word >= v.
inline bool is_v_compatible_anti_dominated(const StandardMonomial& m, const IndexSet& v) {
  if (!is_standard(m)) return false;
  for (const auto& word : m.words)
    if (word == v || !comparable(word, v)) return false;
  return m.empty() || leq(v, m.words.back());
}

}  // namespace sympbrsk
