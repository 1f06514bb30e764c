#include <gtest/gtest.h>

#include "sympbrsk/verify.hpp"

using namespace sympbrsk;

namespace {
const IndexSet v13({1, 3}, 4);
}

TEST(Multiset, CoefficientMatchesEnumeration) {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= 5; ++k) {
      std::vector<int> items(n);
      std::uint64_t seen = 0;
      for_each_multiset(std::span<const int>(items), k, [&](const std::vector<int>&) { ++seen; });
      EXPECT_EQ(seen, multiset_coefficient(n, k)) << n << " " << k;
    }
  EXPECT_EQ(multiset_count_up_to(3, 4), 35u);
}

TEST(VerifyMain, CorpusSizes) {
  auto r = verify_main_theorem(v13, 4);
  EXPECT_EQ(r.instances_checked, 35u);
  EXPECT_TRUE(r.pass);

  auto top = verify_main_theorem(IndexSet({3, 4}, 4), 5);
  EXPECT_EQ(top.instances_checked, 1u);
  EXPECT_TRUE(top.pass);

  auto six = verify_main_theorem(IndexSet({1, 2, 5}, 6), 3);
  EXPECT_TRUE(six.pass);
  EXPECT_EQ(six.instances_checked, six.instances_expected);
}

TEST(VerifyMain, RejectsMalformedV) {
  EXPECT_THROW(verify_main_theorem(IndexSet({1}, 4), 2), InvalidInput);
}

TEST(VerifyRoundtrip, Passes) {
  EXPECT_TRUE(verify_roundtrip(v13, 5).pass);
  EXPECT_TRUE(verify_roundtrip(IndexSet({1, 4, 5}, 6), 3, 4).pass);
}

TEST(VerifyEta, Cases) {
  auto a = verify_eta_bijection(v13, 2);
  EXPECT_TRUE(a.pass);
  auto zero = verify_eta_bijection(v13, 0);
  EXPECT_EQ(zero.instances_checked, 1u);
  EXPECT_TRUE(zero.pass);
  EXPECT_TRUE(verify_eta_bijection(IndexSet({1, 2, 3}, 6), 2).pass);
  EXPECT_THROW(verify_eta_bijection(IndexSet({1, 2, 5}, 6), 1), InvalidInput);
}

TEST(VerifyCounting, Cases) {
  auto a = verify_counting(v13, IndexSet({2, 4}, 4), 3);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.details["S"], json({1, 2, 3, 4}));
  auto b = verify_counting(v13, v13, 3);
  EXPECT_EQ(b.details["SM"], json({1, 1, 1, 1}));
  auto c = verify_counting(v13, IndexSet({3, 4}, 4), 0);
  EXPECT_EQ(c.details["S"], json({1}));
  EXPECT_TRUE(c.pass);
}

TEST(Report, JsonIndependentOfJobCount) {
  const IndexSet v({1, 2, 3}, 6);
  EXPECT_EQ(to_json(verify_main_theorem(v, 4, 1)).dump(), to_json(verify_main_theorem(v, 4, 8)).dump());
  EXPECT_EQ(to_json(verify_eta_bijection(v, 2, 1)).dump(), to_json(verify_eta_bijection(v, 2, 8)).dump());
}

TEST(Parallel, PropagatesWorkerExceptions) {
  std::vector<int> xs(100);
  for (int i = 0; i < 100; ++i) xs[i] = i;
  auto f = [](int x) -> int {
    if (x == 57) throw std::runtime_error("boom");
    return x;
  };
  EXPECT_THROW(parallel_map<int>(std::span<const int>(xs), 4, f), std::runtime_error);
  auto ok = parallel_map<int>(std::span<const int>(xs), 7, [](int x) { return 2 * x; });
  EXPECT_EQ(ok[99], 198);
}
