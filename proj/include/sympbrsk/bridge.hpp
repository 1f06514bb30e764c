#pragma once

// From standard tableaux to folded monomials (eta = fold . brsk^-1 . flatten)
// and the counting side: S_w^v(m), SM_w^v(m), SM^{v,v} and Hilbert functions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "sympbrsk/brsk.hpp"
#include "sympbrsk/core_order.hpp"
#include "sympbrsk/grid.hpp"
#include "sympbrsk/multiset.hpp"

namespace sympbrsk {

inline void require_sm_vv(const StandardTableau& t, const IndexSet& v) {
  const int d = half_ambient(v);
  require_I_d(v, d, "SM^{v,v}");
  for (const auto& p : t.pairs)
    if (!is_admissible(p, d))
      throw InvalidInput("(" + p.top.to_string() + "," + p.bot.to_string() +
                         ") is not an admissible pair");
  const auto flags = classify_tableau(t, v, v);
  if (!flags.standard) throw InvalidInput("tableau is not standard");
  if (!flags.v_compatible) throw InvalidInput("tableau is not v-compatible");
  if (!flags.anti_dominated) throw InvalidInput("tableau is not anti-dominated by v");
}

/// top(w_1) >= bot(w_1) >= top(w_2) >= ... >= bot(w_t), dropping any word
/// equal to v (only bot(w_t) can be v; such a word carries no degree).
inline StandardMonomial flatten_f(const StandardTableau& t, const IndexSet& v) {
  require_sm_vv(t, v);
  StandardMonomial m;
  for (const auto& p : t.pairs) {
    m.words.push_back(p.top);
    if (p.bot != v) m.words.push_back(p.bot);
  }
  return m;
}

struct SpecialityReport {
  bool symmetric = false;
  bool diagonal_parities_even = false;
  bool special = false;
};

inline SpecialityReport is_special(const Monomial& u) {
  const int d = u.d();
  SpecialityReport r{true, true, false};
  for (Cell c : u.support()) {
    const int k = u.multiplicity(c);
    if (u.multiplicity(mirror(c, d)) != k) r.symmetric = false;
    if (c.row == star(c.col, d) && k % 2 != 0) r.diagonal_parities_even = false;
  }
  r.special = r.symmetric && r.diagonal_parities_even;
  return r;
}

/// Mirror every cell with row > col* onto the folded side, then halve.
inline Monomial fold_g(const Monomial& u) {
  if (!is_special(u).special) throw InvalidInput("fold_g: monomial is not special");
  const int d = u.d();
  std::map<Cell, int> folded;
  for (Cell c : u.cells()) ++folded[c.row > star(c.col, d) ? mirror(c, d) : c];
  std::vector<Cell> cells;
  for (const auto& [c, k] : folded)
    cells.insert(cells.end(), static_cast<std::size_t>(k / 2), c);
  return Monomial(u.v(), std::move(cells));
}

inline Monomial unfold_g_inv(const Monomial& s) {
  require_in_grid(s, GridKind::NFolded);
  const int d = s.d();
  std::vector<Cell> cells;
  for (Cell c : s.cells()) {
    const Cell m = mirror(c, d);
    cells.push_back(c);
    cells.push_back(m);  // equals c on the antidiagonal
  }
  return Monomial(s.v(), std::move(cells));
}

/// The intermediate monomial brsk^-1(f(T)) over Ntilde.
inline Monomial unfolded_eta(const StandardTableau& t, const IndexSet& v) {
  return brsk_inverse(standard_monomial_to_tableau(flatten_f(t, v), v), v);
}

inline Monomial eta(const StandardTableau& t, const IndexSet& v) {
  Monomial u = unfolded_eta(t, v);
  if (!is_special(u).special)
    throw InternalConsistencyError("eta: intermediate monomial is not special for tableau of " +
                                   std::to_string(t.size()) + " pairs");
  return fold_g(u);
}

namespace detail {

inline void require_v_leq_w(const IndexSet& w, const IndexSet& v, const char* who) {
  const int d = half_ambient(v);
  require_I_d(v, d, who);
  require_I_d(w, d, who);
  if (!leq(v, w)) throw InvalidInput(std::string(who) + ": v is not <= w");
}

/// Admissible pairs of I(d), sorted lexicographically.
inline std::vector<AdmissiblePair> admissible_pairs(int d) {
  const auto elems = all_I_d(d);
  std::vector<AdmissiblePair> out;
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (leq(y, x) && eps_degree(x, d) == eps_degree(y, d)) out.push_back({x, y});
  std::sort(out.begin(), out.end());
  return out;
}

// DFS over standard tableaux built from `pairs` (each of positive
// v-degree) whose doubled degree stays <= max_doubled. Emits in
// prefix-first (lexicographic) order.
inline void walk_tableaux(const std::vector<AdmissiblePair>& pairs, const IndexSet& v,
                          int max_doubled,
                          const std::function<bool(const AdmissiblePair&)>& first_ok,
                          const std::function<void(const StandardTableau&, int)>& emit) {
  std::vector<int> weight;
  for (const auto& p : pairs) weight.push_back(v_degree_pair(p, v).doubled);
  StandardTableau cur;
  std::function<void(int)> rec = [&](int deg) {
    emit(cur, deg);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (deg + weight[i] > max_doubled) continue;
      if (cur.empty() ? !first_ok(pairs[i]) : !leq(pairs[i].top, cur.pairs.back().bot)) continue;
      cur.pairs.push_back(pairs[i]);
      rec(deg + weight[i]);
      cur.pairs.pop_back();
    }
  };
  rec(0);
}

inline bool pair_v_compatible(const AdmissiblePair& p, const IndexSet& v) {
  if (p.top == v && p.bot == v) return false;
  return leq(p.top, v) || leq(v, p.bot);
}

}  // namespace detail

/// All size-m multisets over R^v dominated by w.
inline std::vector<Monomial> enumerate_S_w_v(const IndexSet& w, const IndexSet& v, int m,
                                             DominationMode mode = DominationMode::MaximalChains) {
  detail::require_v_leq_w(w, v, "enumerate_S_w_v");
  const auto cells = grid_cells(v, GridKind::R);
  std::vector<Monomial> out;
  for_each_multiset(std::span<const Cell>(cells), m, [&](const std::vector<Cell>& ms) {
    Monomial u(v, ms);
    if (dominates_monomial(w, u, mode)) out.push_back(std::move(u));
  });
  return out;
}

inline std::uint64_t count_S_w_v(const IndexSet& w, const IndexSet& v, int m,
                                 DominationMode mode = DominationMode::MaximalChains) {
  detail::require_v_leq_w(w, v, "count_S_w_v");
  const auto cells = grid_cells(v, GridKind::R);
  std::uint64_t n = 0;
  for_each_multiset(std::span<const Cell>(cells), m, [&](const std::vector<Cell>& ms) {
    if (dominates_monomial(w, Monomial(v, ms), mode)) ++n;
  });
  return n;
}

/// w-dominated v-compatible standard tableaux of degree m.
inline std::vector<StandardTableau> enumerate_SM_w_v(const IndexSet& w, const IndexSet& v, int m) {
  detail::require_v_leq_w(w, v, "enumerate_SM_w_v");
  std::vector<AdmissiblePair> pairs;
  for (auto& p : detail::admissible_pairs(half_ambient(v)))
    if (detail::pair_v_compatible(p, v)) pairs.push_back(std::move(p));
  std::vector<StandardTableau> out;
  detail::walk_tableaux(
      pairs, v, 2 * m, [&](const AdmissiblePair& p) { return leq(p.top, w); },
      [&](const StandardTableau& t, int deg) {
        if (deg == 2 * m) out.push_back(t);
      });
  return out;
}

/// SM^{v,v} up to (integral) degree maxdeg.
inline std::vector<StandardTableau> enumerate_SM_vv(const IndexSet& v, int maxdeg) {
  const int d = half_ambient(v);
  require_I_d(v, d, "enumerate_SM_vv");
  std::vector<AdmissiblePair> pairs;
  for (auto& p : detail::admissible_pairs(d))
    if (detail::pair_v_compatible(p, v) && leq(v, p.bot)) pairs.push_back(std::move(p));
  std::vector<StandardTableau> out;
  detail::walk_tableaux(
      pairs, v, 2 * maxdeg, [](const AdmissiblePair&) { return true; },
      [&](const StandardTableau& t, int deg) {
        if (deg % 2 == 0) out.push_back(t);
      });
  return out;
}

struct HilbertTable {
  IndexSet v;
  IndexSet w;
  std::vector<std::uint64_t> counts;  // counts[m] = |S_w^v(m)|
};

inline HilbertTable hilbert_function(const IndexSet& w, const IndexSet& v, int max_degree,
                                     DominationMode mode = DominationMode::MaximalChains) {
  detail::require_v_leq_w(w, v, "hilbert_function");
  if (max_degree < 0) throw InvalidInput("hilbert_function: negative degree bound");
  HilbertTable table{v, w, {}};
  for (int m = 0; m <= max_degree; ++m) table.counts.push_back(count_S_w_v(w, v, m, mode));
  return table;
}

}  // namespace sympbrsk
