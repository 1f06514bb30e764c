#pragma once

// Bounded RSK on biwords over the Ntilde grid.
//
// P rows hold columns of U (strictly increasing), Q rows hold the bounds
// (rows of U) in insertion order, which is non-increasing. Inserting (a, b)
// freezes every P entry >= b in every row of the bump path; frozen entries
// neither bump nor move.

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sympbrsk/core_order.hpp"
#include "sympbrsk/error.hpp"
#include "sympbrsk/grid.hpp"

namespace sympbrsk {

/// One biword letter; a is a column in v, b a row outside v with b > a.
struct BiLetter {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const BiLetter&, const BiLetter&) = default;
};

using BiWord = std::vector<BiLetter>;

/// b non-increasing, ties broken with a non-increasing.
inline BiWord lex_arrange(const Monomial& u) {
  BiWord word;
  word.reserve(u.degree());
  for (Cell c : u.cells()) word.push_back(BiLetter{c.col, c.row});
  std::sort(word.begin(), word.end(), [](BiLetter x, BiLetter y) {
    return x.b != y.b ? x.b > y.b : x.a > y.a;
  });
  return word;
}

struct NotchedTableauPair {
  std::vector<std::vector<int>> P;
  std::vector<std::vector<int>> Q;

  std::size_t rows() const { return P.size(); }
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& r : P) n += r.size();
    return n;
  }
  friend bool operator==(const NotchedTableauPair&, const NotchedTableauPair&) = default;
};

/// Empty string when the pair is well formed, otherwise what is wrong.
inline std::string tableau_pair_defect(const NotchedTableauPair& t) {
  if (t.P.size() != t.Q.size()) return "P and Q have different row counts";
  for (std::size_t i = 0; i < t.P.size(); ++i) {
    const auto& p = t.P[i];
    const auto& q = t.Q[i];
    if (p.size() != q.size()) return "row " + std::to_string(i + 1) + " lengths differ";
    if (p.empty()) return "row " + std::to_string(i + 1) + " is empty";
    for (std::size_t j = 0; j + 1 < p.size(); ++j)
      if (p[j] >= p[j + 1]) return "P row " + std::to_string(i + 1) + " not strictly increasing";
    for (std::size_t j = 0; j + 1 < q.size(); ++j)
      if (q[j] < q[j + 1]) return "Q row " + std::to_string(i + 1) + " not non-increasing";
  }
  return {};
}

namespace detail {

inline void insert_in_place(NotchedTableauPair& t, int a, int b) {
  int x = a;
  for (std::size_t i = 0;; ++i) {
    if (i == t.P.size()) {
      t.P.emplace_back();
      t.Q.emplace_back();
    }
    auto& row = t.P[i];
    // smallest unfrozen entry >= x; unfrozen entries are those < b
    auto it = std::lower_bound(row.begin(), row.end(), x);
    if (it == row.end() || *it >= b) {
      row.insert(it, x);
      t.Q[i].push_back(b);
      return;
    }
    std::swap(x, *it);
  }
}

}  // namespace detail

inline NotchedTableauPair bounded_insert(NotchedTableauPair t, int a, int b) {
  detail::insert_in_place(t, a, b);
  return t;
}

inline NotchedTableauPair brsk(const Monomial& u) {
  NotchedTableauPair t;
  for (BiLetter l : lex_arrange(u)) detail::insert_in_place(t, l.a, l.b);
  return t;
}

/// Undoes brsk by popping boxes in reverse creation order: the smallest
/// rightmost Q entry, bottom-most row on ties. Reverse bumping takes the
/// largest unfrozen entry <= the travelling value.
inline Monomial brsk_inverse(const NotchedTableauPair& t, const IndexSet& v) {
  if (auto defect = tableau_pair_defect(t); !defect.empty())
    throw NotInvertible("brsk_inverse: " + defect);

  NotchedTableauPair work = t;
  std::vector<Cell> cells;
  while (!work.P.empty()) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < work.Q.size(); ++i)
      if (!work.Q[i].empty() && (!pick || work.Q[i].back() <= work.Q[*pick].back())) pick = i;
    if (!pick) throw NotInvertible("brsk_inverse: ragged rows");
    const std::size_t row = *pick;
    const int b = work.Q[row].back();
    work.Q[row].pop_back();

    auto& p = work.P[row];
    auto it = std::lower_bound(p.begin(), p.end(), b);  // first frozen entry
    if (it == p.begin()) throw NotInvertible("brsk_inverse: no unfrozen entry to eject");
    --it;
    int x = *it;
    p.erase(it);
    for (std::size_t i = row; i-- > 0;) {
      auto& above = work.P[i];
      auto jt = std::upper_bound(above.begin(), above.end(), std::min(x, b - 1));
      if (jt == above.begin()) throw NotInvertible("brsk_inverse: reverse bump failed");
      --jt;
      std::swap(x, *jt);
      std::sort(above.begin(), above.end());
    }
    cells.push_back(Cell{b, x});
    while (!work.P.empty() && work.P.back().empty()) {
      if (!work.Q.back().empty()) throw NotInvertible("brsk_inverse: ragged rows");
      work.P.pop_back();
      work.Q.pop_back();
    }
  }

  Monomial u(v, std::move(cells));
  for (Cell c : u.cells())
    if (!in_grid(c, GridKind::NTilde, v))
      throw NotInvertible("brsk_inverse: recovered cell " + c.to_string() + " outside Ntilde");
  if (brsk(u) != t) throw NotInvertible("brsk_inverse: tableau pair is not in the image of brsk");
  return u;
}

/// Row i becomes s_action(v, rows = Q row i, cols = P row i).
inline StandardMonomial rows_to_standard_monomial(const NotchedTableauPair& t, const IndexSet& v) {
  if (auto defect = tableau_pair_defect(t); !defect.empty())
    throw InvalidInput("invalid tableau pair: " + defect);
  StandardMonomial m;
  for (std::size_t i = 0; i < t.P.size(); ++i) {
    std::vector<Cell> cells;
    for (std::size_t j = 0; j < t.P[i].size(); ++j) cells.push_back(Cell{t.Q[i][j], t.P[i][j]});
    try {
      m.words.push_back(s_action(v, cells));
    } catch (const InvalidInput& e) {
      throw InvalidInput(std::string("invalid tableau pair: ") + e.what());
    }
  }
  return m;
}

/// Inverse of rows_to_standard_monomial on v-compatible standard monomials
/// anti-dominated by v: P row = v \ word ascending, Q row = word \ v descending.
inline NotchedTableauPair standard_monomial_to_tableau(const StandardMonomial& m, const IndexSet& v) {
  if (!is_v_compatible_anti_dominated(m, v))
    throw InvalidInput("standard monomial is not v-compatible and anti-dominated by v");
  NotchedTableauPair t;
  for (const auto& word : m.words) {
    std::vector<int> p, q;
    for (int x : v)
      if (!word.contains(x)) p.push_back(x);
    for (int x : word)
      if (!v.contains(x)) q.push_back(x);
    std::reverse(q.begin(), q.end());
    t.P.push_back(std::move(p));
    t.Q.push_back(std::move(q));
  }
  return t;
}

}  // namespace sympbrsk
