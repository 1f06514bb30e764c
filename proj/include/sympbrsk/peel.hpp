#pragma once

// The peeling map: one step strips a distinguished cell from every block
// and shifts the rest of the block; iterating to the empty monomial yields
// a standard monomial w_0 >= w_1 >= ... in I(d,2d).

#include <vector>

#include "sympbrsk/core_order.hpp"
#include "sympbrsk/grid.hpp"

namespace sympbrsk {

struct PeelStep {
  IndexSet w;
  Monomial remainder;
  std::vector<Cell> distinguished;  // sorted
};

struct PeelTrace {
  IndexSet v;
  std::vector<PeelStep> steps;

  StandardMonomial words() const {
    StandardMonomial m;
    for (const auto& s : steps) m.words.push_back(s.w);
    return m;
  }
};

/// For each block [(r_1,c_1),...,(r_p,c_p)] the distinguished cell is
/// (r_p, c_1) and the cells (r_1,c_2),...,(r_{p-1},c_p) remain.
inline PeelStep pi_step(const Monomial& u) {
  if (u.empty()) throw EmptyInput("pi_step: empty monomial");
  std::vector<Cell> distinguished;
  std::vector<Cell> remainder;
  for (const auto& layer : block_decomposition(u))
    for (const auto& block : layer.blocks) {
      distinguished.push_back(Cell{block.back().row, block.front().col});
      for (std::size_t i = 0; i + 1 < block.size(); ++i)
        remainder.push_back(Cell{block[i].row, block[i + 1].col});
    }
  std::sort(distinguished.begin(), distinguished.end());
  IndexSet w = s_action(u.v(), distinguished);
  return PeelStep{std::move(w), Monomial(u.v(), std::move(remainder)), std::move(distinguished)};
}

inline PeelTrace pi_tilde(const Monomial& u) {
  PeelTrace trace{u.v(), {}};
  Monomial current = u;
  while (!current.empty()) {
    PeelStep step = pi_step(current);
    if (step.remainder.degree() >= current.degree())
      throw InternalConsistencyError("pi_step did not shrink the monomial");
    current = step.remainder;
    trace.steps.push_back(std::move(step));
  }
  if (!is_standard(trace.words()))
    throw InternalConsistencyError("pi_tilde produced a non-standard monomial");
  return trace;
}

struct DominationComparison {
  bool dominates = false;  // every v-chain of U is dominated by w
  bool top_leq = false;    // w_0 of pi_tilde(U) <= w (true for empty U)
  bool agree() const { return dominates == top_leq; }
};

/// Experimental cross-check of domination against the first peeled word.
inline DominationComparison domination_equals_top(const IndexSet& w, const Monomial& u,
                                                  DominationMode mode = DominationMode::MaximalChains) {
  DominationComparison cmp;
  cmp.dominates = dominates_monomial(w, u, mode);
  cmp.top_leq = u.empty() || leq(pi_step(u).w, w);
  return cmp;
}

}  // namespace sympbrsk
