#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qsp/blambda.hpp"
#include "qsp/shifted.hpp"

using namespace qsp;

TEST(Shifted, Examples) {
  EXPECT_EQ(count_shifted({3, 3, 1}), 4);
  EXPECT_EQ(count_shifted({1}), 1);
  EXPECT_EQ(count_shifted({2, 1}), 1);
  EXPECT_EQ(count_shifted({}), 1);
  EXPECT_TRUE(distinct_parts_hypothesis({3, 3, 1}));
  EXPECT_FALSE(distinct_parts_hypothesis({4, 2, 2}));
  EXPECT_TRUE(distinct_parts_hypothesis(IntegerPartition::rectangle(3, 4)));
}

TEST(Shifted, ListsTheFourTableauxOf331) {
  std::vector<std::vector<std::vector<int>>> all;
  for_each_shifted_tableau({3, 3, 1}, [&](const std::vector<std::vector<int>>& rows) { all.push_back(rows); });
  ASSERT_EQ(all.size(), 4U);
  for (const auto& t : all) {
    EXPECT_EQ(t[0][0], 1);
    EXPECT_EQ(t[0].size(), 3U);
    EXPECT_EQ(t[1].size(), 3U);
    EXPECT_EQ(t[2].size(), 1U);
  }
}

TEST(Shifted, StrictPartitionsMatchThrall) {
  for (int n = 1; n <= 12; ++n)
    for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& l) {
      std::set<int> distinct(l.parts().begin(), l.parts().end());
      if (static_cast<int>(distinct.size()) != l.length()) return;
      ASSERT_EQ(count_shifted(l), oracle::shifted_hook(l.parts())) << l;
    });
}

TEST(Shifted, MinusOneSpecialization) {
  BLambdaCache cache;
  for (int n = 0; n <= 9; ++n)
    for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& l) {
      const BigInt v = b_lambda(l, BLambdaMethod::recursion, cache).eval(-1);
      ASSERT_EQ(v, count_odd_c(l)) << l;
      if (n > 0) ASSERT_GT(v, 0);
      if (distinct_parts_hypothesis(l)) ASSERT_EQ(count_shifted(l), v) << l;
    });
}
