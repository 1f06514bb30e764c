#include <gtest/gtest.h>

#include "sympbrsk/multiset.hpp"
#include "sympbrsk/peel.hpp"

using namespace sympbrsk;

namespace {

const IndexSet v13({1, 3}, 4);
IndexSet S(std::initializer_list<int> xs) { return IndexSet(xs, 4); }

}  // namespace

TEST(PiStep, OneInterlockedBlock) {
  const PeelStep s = pi_step(Monomial(v13, {{2, 1}, {4, 1}, {4, 3}}));
  EXPECT_EQ(s.w, S({3, 4}));
  EXPECT_EQ(s.remainder, Monomial(v13, {{2, 1}, {4, 3}}));
  EXPECT_EQ(s.distinguished, (std::vector<Cell>{{4, 1}}));
}

TEST(PiStep, SingleCell) {
  const PeelStep s = pi_step(Monomial(v13, {{2, 1}}));
  EXPECT_EQ(s.w, S({2, 3}));
  EXPECT_TRUE(s.remainder.empty());
  EXPECT_EQ(s.distinguished, (std::vector<Cell>{{2, 1}}));
}

TEST(PiStep, TwoSeparateBlocks) {
  const PeelStep s = pi_step(Monomial(v13, {{2, 1}, {4, 3}}));
  EXPECT_EQ(s.w, S({2, 4}));
  EXPECT_TRUE(s.remainder.empty());
  EXPECT_EQ(s.distinguished, (std::vector<Cell>{{2, 1}, {4, 3}}));
}

TEST(PiStep, EmptyInputIsAnError) { EXPECT_THROW(pi_step(Monomial(v13, {})), EmptyInput); }

TEST(PiTilde, TwoPeels) {
  const PeelTrace t = pi_tilde(Monomial(v13, {{2, 1}, {4, 1}, {4, 3}}));
  EXPECT_EQ(t.words().words, (std::vector<IndexSet>{S({3, 4}), S({2, 4})}));
  ASSERT_EQ(t.steps.size(), 2u);
  EXPECT_EQ(t.steps[0].distinguished, (std::vector<Cell>{{4, 1}}));
  EXPECT_EQ(t.steps[1].distinguished, (std::vector<Cell>{{2, 1}, {4, 3}}));
}

TEST(PiTilde, EmptyAndRepeated) {
  EXPECT_TRUE(pi_tilde(Monomial(v13, {})).steps.empty());
  const PeelTrace t = pi_tilde(Monomial(v13, {{2, 1}, {2, 1}, {4, 3}, {4, 3}}));
  EXPECT_EQ(t.words().words, (std::vector<IndexSet>{S({2, 4}), S({2, 4})}));
}

TEST(DominationEqualsTop, Examples) {
  auto a = domination_equals_top(S({3, 4}), Monomial(v13, {{2, 1}, {4, 1}, {4, 3}}));
  EXPECT_TRUE(a.dominates);
  EXPECT_TRUE(a.top_leq);
  auto b = domination_equals_top(S({2, 4}), Monomial(v13, {{4, 1}}));
  EXPECT_FALSE(b.dominates);
  EXPECT_FALSE(b.top_leq);
  EXPECT_TRUE(domination_equals_top(v13, Monomial(v13, {})).agree());
}

TEST(PiTildeProperty, DegreeStandardnessAntiDomination) {
  for (int d = 2; d <= 3; ++d)
    for (const auto& v : all_subsets(d, 2 * d)) {
      const auto cells = grid_cells(v, GridKind::NTilde);
      for (int k = 0; k <= (d == 2 ? 5 : 3); ++k)
        for_each_multiset(std::span<const Cell>(cells), k, [&](const std::vector<Cell>& cs) {
          const Monomial u(v, cs);
          const PeelTrace t = pi_tilde(u);
          EXPECT_TRUE(is_standard(t.words()));
          int total = 0;
          Monomial current = u;
          for (const auto& s : t.steps) {
            total += static_cast<int>(s.distinguished.size());
            EXPECT_EQ(difference_size(s.w, v), static_cast<int>(s.distinguished.size()));
            EXPECT_TRUE(leq(v, s.w));
            EXPECT_NE(s.w, v);
            EXPECT_EQ(current.degree(), s.remainder.degree() + static_cast<int>(s.distinguished.size()));
            current = s.remainder;
          }
          EXPECT_EQ(total, u.degree());
        });
    }
}
