#pragma once

// Cell grids attached to v, monomials over them, v-chains, the s-action,
// domination, depth and the block decomposition.

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sympbrsk/core_order.hpp"
#include "sympbrsk/error.hpp"

namespace sympbrsk {

struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
  friend bool operator==(const Cell&, const Cell&) = default;

  std::string to_string() const {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
  }
};

enum class GridKind { R, N, NTilde, NFolded };

inline const char* grid_name(GridKind k) {
  switch (k) {
    case GridKind::R: return "R";
    case GridKind::N: return "N";
    case GridKind::NTilde: return "Ntilde";
    case GridKind::NFolded: return "N_folded";
  }
  return "?";
}

/// d for a context set v; v lives in [2d].
inline int half_ambient(const IndexSet& v) {
  if (v.ambient() % 2 != 0) throw InvalidInput("ambient size of v must be even");
  return v.ambient() / 2;
}

inline bool in_grid(Cell c, GridKind kind, const IndexSet& v) {
  const int d = half_ambient(v);
  if (c.row < 1 || c.row > 2 * d || v.contains(c.row) || !v.contains(c.col)) return false;
  switch (kind) {
    case GridKind::R: return c.row <= star(c.col, d);
    case GridKind::N:
    case GridKind::NTilde: return c.row > c.col;
    case GridKind::NFolded: return c.col < c.row && c.row <= star(c.col, d);
  }
  return false;
}

/// Cells of one grid, sorted by (row, col). Symplectic grids need v in I(d);
/// Ntilde only needs v to be a d-subset of [2d].
inline std::vector<Cell> grid_cells(const IndexSet& v, GridKind kind) {
  const int d = half_ambient(v);
  if (static_cast<int>(v.size()) != d)
    throw InvalidInput("grid: v must have d entries in [2d]");
  if (kind != GridKind::NTilde) require_I_d(v, d, "grid");
  std::vector<Cell> out;
  for (int r = 1; r <= 2 * d; ++r)
    for (int c : v)
      if (in_grid({r, c}, kind, v)) out.push_back({r, c});
  return out;
}

struct Grids {
  std::vector<Cell> R, N, NTilde, NFolded;
};

inline Grids build_grids(const IndexSet& v, int d) {
  if (half_ambient(v) != d) throw InvalidInput("build_grids: v is not a subset of [2d]");
  return Grids{grid_cells(v, GridKind::R), grid_cells(v, GridKind::N),
               grid_cells(v, GridKind::NTilde), grid_cells(v, GridKind::NFolded)};
}

/// A finite multiset of cells; repetition encodes multiplicity. Cells are
/// kept sorted so equal monomials compare equal.
class Monomial {
 public:
  Monomial() = default;
  Monomial(IndexSet v, std::vector<Cell> cells) : v_(std::move(v)), cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
  }

  const IndexSet& v() const { return v_; }
  int d() const { return half_ambient(v_); }
  std::span<const Cell> cells() const { return cells_; }
  const std::vector<Cell>& vec() const { return cells_; }
  int degree() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }

  int multiplicity(Cell c) const {
    auto [lo, hi] = std::equal_range(cells_.begin(), cells_.end(), c);
    return static_cast<int>(hi - lo);
  }

  /// Distinct cells, sorted.
  std::vector<Cell> support() const {
    std::vector<Cell> s = cells_;
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  IndexSet v_;
  std::vector<Cell> cells_;
};

inline void require_in_grid(const Monomial& m, GridKind kind) {
  for (Cell c : m.cells())
    if (!in_grid(c, kind, m.v()))
      throw InvalidInput("cell " + c.to_string() + " is not in grid " + grid_name(kind) +
                         " of v=" + m.v().to_string());
}

/// (r, c) -> (c*, r*).
inline Cell mirror(Cell c, int d) { return Cell{star(c.col, d), star(c.row, d)}; }

/// b1 > b2 in the chain order: row strictly larger, column strictly smaller.
inline bool chain_gt(Cell b1, Cell b2) { return b1.row > b2.row && b1.col < b2.col; }

inline bool is_v_chain(std::span<const Cell> cells) {
  for (std::size_t i = 0; i + 1 < cells.size(); ++i)
    if (!chain_gt(cells[i], cells[i + 1])) return false;
  return true;
}

/// (v \ {columns}) u {rows}.
inline IndexSet s_action(const IndexSet& v, std::span<const Cell> cells) {
  std::vector<int> rows, cols;
  for (Cell c : cells) {
    if (!v.contains(c.col)) throw InvalidInput("s_action: column " + c.to_string() + " not in v");
    if (v.contains(c.row)) throw InvalidInput("s_action: row " + c.to_string() + " lies in v");
    rows.push_back(c.row);
    cols.push_back(c.col);
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(rows.begin(), rows.end()) != rows.end())
    throw InvalidInput("s_action: repeated row");
  if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
    throw InvalidInput("s_action: repeated column");
  std::vector<int> out;
  for (int x : v)
    if (!std::binary_search(cols.begin(), cols.end(), x)) out.push_back(x);
  out.insert(out.end(), rows.begin(), rows.end());
  return IndexSet::from_unsorted(std::move(out), v.ambient());
}

inline bool dominates_chain(const IndexSet& w, std::span<const Cell> chain, const IndexSet& v) {
  if (!is_v_chain(chain)) throw InvalidInput("dominates_chain: not a v-chain");
  return leq(s_action(v, chain), w);
}

enum class DominationMode {
  MaximalChains,  // walks only maximal chains (covering relations)
  AllChains,      // oracle: every chain
};

namespace detail {

// Distinct cells of S lying in N (row > col), sorted.
inline std::vector<Cell> n_support(const Monomial& s) {
  std::vector<Cell> out;
  for (Cell c : s.support())
    if (c.row > c.col) out.push_back(c);
  return out;
}

// Calls visit(chain) for chains in `cells`; returns false as soon as
// visit does. With maximal_only, only maximal chains are produced.
inline bool walk_chains(const std::vector<Cell>& cells, bool maximal_only,
                        const std::function<bool(std::span<const Cell>)>& visit) {
  const std::size_t n = cells.size();
  std::vector<std::vector<std::size_t>> next(n);
  std::vector<bool> has_above(n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!chain_gt(cells[a], cells[b])) continue;
      has_above[b] = true;
      if (maximal_only) {
        bool covered = true;
        for (std::size_t c = 0; c < n && covered; ++c)
          if (chain_gt(cells[a], cells[c]) && chain_gt(cells[c], cells[b])) covered = false;
        if (!covered) continue;
      }
      next[a].push_back(b);
    }

  std::vector<Cell> chain;
  std::function<bool(std::size_t)> dfs = [&](std::size_t a) -> bool {
    chain.push_back(cells[a]);
    if (!maximal_only || next[a].empty())
      if (!visit(chain)) return false;
    for (std::size_t b : next[a])
      if (!dfs(b)) return false;
    chain.pop_back();
    return true;
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (maximal_only && has_above[a]) continue;
    if (!dfs(a)) return false;
  }
  return true;
}

}  // namespace detail

/// Whether w dominates every v-chain drawn from S intersected with N.
inline bool dominates_monomial(const IndexSet& w, const Monomial& s,
                               DominationMode mode = DominationMode::MaximalChains) {
  const IndexSet& v = s.v();
  return detail::walk_chains(detail::n_support(s), mode == DominationMode::MaximalChains,
                             [&](std::span<const Cell> chain) { return leq(s_action(v, chain), w); });
}

/// depth(b) = length of the longest v-chain in U whose last (smallest)
/// element is b. Cells with nothing above them have depth 1.
inline std::map<Cell, int> depth_map(const Monomial& u) {
  std::vector<Cell> cells = u.support();
  std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) {
    return a.row != b.row ? a.row > b.row : a.col < b.col;
  });
  std::map<Cell, int> depth;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    int best = 0;
    // anything above cells[i] has a strictly larger row, so it came earlier
    for (std::size_t j = 0; j < i; ++j)
      if (chain_gt(cells[j], cells[i])) best = std::max(best, depth[cells[j]]);
    depth[cells[i]] = best + 1;
  }
  return depth;
}

using Block = std::vector<Cell>;

struct DepthLayer {
  int depth = 0;
  std::vector<Block> blocks;  // topmost (smallest rows) first
};

/// Splits equal-depth cells, sorted by (row, col) with multiplicity, into
/// blocks: consecutive cells stay together while row_i > col_{i+1}.
inline std::vector<DepthLayer> block_decomposition(const Monomial& u) {
  const auto depth = depth_map(u);
  std::map<int, std::vector<Cell>> by_depth;
  for (Cell c : u.cells()) by_depth[depth.at(c)].push_back(c);

  std::vector<DepthLayer> layers;
  for (auto& [k, cells] : by_depth) {
    std::sort(cells.begin(), cells.end());
    DepthLayer layer{k, {}};
    Block current{cells.front()};
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      const Cell a = cells[i];
      const Cell b = cells[i + 1];
      if (chain_gt(b, a) || chain_gt(a, b))
        throw InternalConsistencyError("equal-depth cells " + a.to_string() + ", " +
                                       b.to_string() + " are comparable");
      if (a.row <= b.col) {
        layer.blocks.push_back(std::move(current));
        current = Block{};
      }
      current.push_back(b);
    }
    layer.blocks.push_back(std::move(current));
    layers.push_back(std::move(layer));
  }
  return layers;
}

}  // namespace sympbrsk
