#pragma once

// Brute-force oracles used only by tests. They deliberately avoid the
// library's chain walker, depth DP and s-action so they can check them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "sympbrsk/grid.hpp"

namespace sympbrsk::oracle {

// Every non-empty subset of the distinct cells (row > col) that forms a
// v-chain, listed largest element first.
inline std::vector<std::vector<Cell>> all_chains(const Monomial& u) {
  std::vector<Cell> cells;
  for (Cell c : u.support())
    if (c.row > c.col) cells.push_back(c);
  std::vector<std::vector<Cell>> chains;
  const std::uint32_t n = static_cast<std::uint32_t>(cells.size());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Cell> sub;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(cells[i]);
    std::sort(sub.begin(), sub.end(), [](Cell a, Cell b) { return a.row > b.row; });
    bool ok = true;
    for (std::size_t i = 0; i + 1 < sub.size(); ++i)
      if (!(sub[i].row > sub[i + 1].row && sub[i].col < sub[i + 1].col)) ok = false;
    if (ok) chains.push_back(std::move(sub));
  }
  return chains;
}

inline std::map<Cell, int> depth_by_enumeration(const Monomial& u) {
  std::map<Cell, int> depth;
  for (Cell c : u.support()) depth[c] = 1;
  for (const auto& ch : all_chains(u)) {
    int& d = depth[ch.back()];
    d = std::max(d, static_cast<int>(ch.size()));
  }
  return depth;
}

inline std::vector<int> replace_set(const std::vector<int>& v, const std::vector<Cell>& chain) {
  std::set<int> s(v.begin(), v.end());
  for (Cell c : chain) s.erase(c.col);
  for (Cell c : chain) s.insert(c.row);
  return {s.begin(), s.end()};
}

inline bool dominates_by_enumeration(const std::vector<int>& w, const Monomial& u) {
  for (const auto& ch : all_chains(u)) {
    auto s = replace_set(u.v().vec(), ch);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] > w[i]) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> I_d_by_filter(int d) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << (2 * d)); ++mask) {
    std::vector<int> x;
    for (int i = 0; i < 2 * d; ++i)
      if (mask & (1u << i)) x.push_back(i + 1);
    if (static_cast<int>(x.size()) != d) continue;
    bool ok = true;
    for (int j = 1; j <= d; ++j) {
      const bool a = std::count(x.begin(), x.end(), j) > 0;
      const bool b = std::count(x.begin(), x.end(), 2 * d + 1 - j) > 0;
      if (a == b) ok = false;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

// Random multiset of size <= max_size over `cells`.
inline Monomial random_monomial(std::mt19937& rng, const IndexSet& v, const std::vector<Cell>& cells,
                                int max_size) {
  std::uniform_int_distribution<int> size_dist(0, max_size);
  std::vector<Cell> out;
  if (!cells.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
    for (int k = size_dist(rng); k > 0; --k) out.push_back(cells[pick(rng)]);
  }
  return Monomial(v, std::move(out));
}

}  // namespace sympbrsk::oracle
