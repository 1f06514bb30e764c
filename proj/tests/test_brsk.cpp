#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sympbrsk/brsk.hpp"
#include "sympbrsk/multiset.hpp"
#include "sympbrsk/peel.hpp"

using namespace sympbrsk;

namespace {

const IndexSet v13({1, 3}, 4);
using Rows = std::vector<std::vector<int>>;

}  // namespace

TEST(LexArrange, SortsByRowThenColumnDescending) {
  EXPECT_EQ(lex_arrange(Monomial(v13, {{2, 1}, {4, 1}, {4, 3}})),
            (BiWord{{3, 4}, {1, 4}, {1, 2}}));
  EXPECT_EQ(lex_arrange(Monomial(v13, {{2, 1}})), (BiWord{{1, 2}}));
  EXPECT_EQ(lex_arrange(Monomial(v13, {{4, 1}, {4, 3}})), (BiWord{{3, 4}, {1, 4}}));
}

TEST(BoundedInsert, Examples) {
  auto t = bounded_insert(NotchedTableauPair{{{3}}, {{4}}}, 1, 4);
  EXPECT_EQ(t.P, (Rows{{1}, {3}}));
  EXPECT_EQ(t.Q, (Rows{{4}, {4}}));

  auto e = bounded_insert({}, 2, 5);
  EXPECT_EQ(e.P, (Rows{{2}}));
  EXPECT_EQ(e.Q, (Rows{{5}}));

  // 3 is frozen by the bound 2 in the second row as well
  auto f = bounded_insert(t, 1, 2);
  EXPECT_EQ(f.P, (Rows{{1}, {1, 3}}));
  EXPECT_EQ(f.Q, (Rows{{4}, {4, 2}}));
}

TEST(Brsk, Examples) {
  auto t = brsk(Monomial(v13, {{2, 1}, {4, 1}, {4, 3}}));
  EXPECT_EQ(t.P, (Rows{{1}, {1, 3}}));
  EXPECT_EQ(t.Q, (Rows{{4}, {4, 2}}));

  EXPECT_EQ(brsk(Monomial(v13, {})), NotchedTableauPair{});

  auto r = brsk(Monomial(v13, {{2, 1}, {2, 1}, {4, 3}, {4, 3}}));
  EXPECT_EQ(r.P, (Rows{{1, 3}, {1, 3}}));
  EXPECT_EQ(r.Q, (Rows{{4, 2}, {4, 2}}));
}

// Bounding only the first row sends 3 on to a third row, which cannot
// match the two peels of the same monomial.
TEST(Brsk, BoundAppliesOnEveryRow) {
  const Monomial u(v13, {{2, 1}, {4, 1}, {4, 3}});
  EXPECT_EQ(brsk(u).rows(), pi_tilde(u).steps.size());
}

TEST(BrskInverse, Examples) {
  EXPECT_EQ(brsk_inverse({{{1}, {1, 3}}, {{4}, {4, 2}}}, v13), Monomial(v13, {{2, 1}, {4, 1}, {4, 3}}));
  EXPECT_EQ(brsk_inverse({}, v13), Monomial(v13, {}));
  EXPECT_EQ(brsk_inverse({{{1, 3}, {1, 3}}, {{4, 2}, {4, 2}}}, v13),
            Monomial(v13, {{2, 1}, {2, 1}, {4, 3}, {4, 3}}));
}

TEST(BrskInverse, RejectsPairsOutsideTheImage) {
  EXPECT_THROW(brsk_inverse({{{1}}, {{4, 2}}}, v13), NotInvertible);       // ragged
  EXPECT_THROW(brsk_inverse({{{3, 1}}, {{4, 2}}}, v13), NotInvertible);    // P row unsorted
  EXPECT_THROW(brsk_inverse({{{3}}, {{2}}}, v13), NotInvertible);          // 3 frozen by 2
  EXPECT_THROW(brsk_inverse({{{1}, {3}}, {{2}, {4}}}, v13), NotInvertible);  // not a brsk output
}

TEST(RowsToStandardMonomial, Examples) {
  auto a = rows_to_standard_monomial({{{1}, {1, 3}}, {{4}, {4, 2}}}, v13);
  EXPECT_EQ(a.words, (std::vector<IndexSet>{IndexSet({3, 4}, 4), IndexSet({2, 4}, 4)}));
  EXPECT_TRUE(rows_to_standard_monomial({}, v13).empty());
  auto b = rows_to_standard_monomial({{{1, 3}, {1, 3}}, {{4, 2}, {4, 2}}}, v13);
  EXPECT_EQ(b.words, (std::vector<IndexSet>{IndexSet({2, 4}, 4), IndexSet({2, 4}, 4)}));
  EXPECT_THROW(rows_to_standard_monomial({{{1, 3}}, {{4, 4}}}, v13), InvalidInput);
}

TEST(BrskProperty, InvariantsAfterEveryInsertion) {
  std::mt19937 rng(3);
  for (int d = 2; d <= 4; ++d)
    for (const auto& v : all_subsets(d, 2 * d)) {
      const auto cells = grid_cells(v, GridKind::NTilde);
      for (int trial = 0; trial < 30; ++trial) {
        const Monomial u = oracle::random_monomial(rng, v, cells, 7);
        NotchedTableauPair t;
        for (BiLetter l : lex_arrange(u)) {
          t = bounded_insert(t, l.a, l.b);
          EXPECT_EQ(tableau_pair_defect(t), "");
        }
        std::vector<int> ps, qs, cols, rows;
        for (auto& r : t.P) ps.insert(ps.end(), r.begin(), r.end());
        for (auto& r : t.Q) qs.insert(qs.end(), r.begin(), r.end());
        for (Cell c : u.cells()) {
          cols.push_back(c.col);
          rows.push_back(c.row);
        }
        std::sort(ps.begin(), ps.end());
        std::sort(qs.begin(), qs.end());
        std::sort(cols.begin(), cols.end());
        std::sort(rows.begin(), rows.end());
        EXPECT_EQ(ps, cols);
        EXPECT_EQ(qs, rows);
      }
    }
}

TEST(BrskProperty, RoundTripAndPeelAgreement) {
  for (int d = 2; d <= 3; ++d)
    for (const auto& v : all_subsets(d, 2 * d)) {
      const auto cells = grid_cells(v, GridKind::NTilde);
      for (int k = 0; k <= (d == 2 ? 5 : 3); ++k)
        for_each_multiset(std::span<const Cell>(cells), k, [&](const std::vector<Cell>& cs) {
          const Monomial u(v, cs);
          const auto t = brsk(u);
          EXPECT_EQ(brsk_inverse(t, v), u);
          EXPECT_EQ(rows_to_standard_monomial(t, v), pi_tilde(u).words());
        });
    }
}
