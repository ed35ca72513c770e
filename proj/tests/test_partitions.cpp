#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qsp/partitions.hpp"

using qsp::Cell;
using qsp::IntegerPartition;
using qsp::PartitionConstraint;

TEST(Partitions, Validation) {
  EXPECT_THROW((IntegerPartition{2, 3}), std::invalid_argument);
  EXPECT_THROW((IntegerPartition{2, 0}), std::invalid_argument);
  EXPECT_EQ(IntegerPartition::from_unsorted({1, 3, 2}), (IntegerPartition{3, 2, 1}));
  EXPECT_EQ(IntegerPartition::parse("3,3,1"), (IntegerPartition{3, 3, 1}));
  EXPECT_EQ(IntegerPartition::parse(""), IntegerPartition{});
  EXPECT_THROW(IntegerPartition::parse("3,,1"), std::invalid_argument);
  EXPECT_THROW(IntegerPartition::parse("1,2"), std::invalid_argument);
  EXPECT_EQ((IntegerPartition{3, 3, 1}).to_string(), "3,3,1");
}

TEST(Partitions, Conjugate) {
  EXPECT_EQ(IntegerPartition{}.conjugate(), IntegerPartition{});
  EXPECT_EQ((IntegerPartition{3, 2, 2}).conjugate(), (IntegerPartition{3, 3, 1}));
  EXPECT_EQ(IntegerPartition::rectangle(4, 3).conjugate(), IntegerPartition::rectangle(3, 4));
  for (int n = 0; n <= 20; ++n)
    qsp::for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& l) {
      ASSERT_EQ(l.conjugate().conjugate(), l);
      ASSERT_EQ(l.conjugate().parts(), oracle::conjugate(l.parts()));
    });
}

TEST(Partitions, RemovableCells) {
  EXPECT_EQ((IntegerPartition{4, 3, 3, 1}).removable_cells(), (std::vector<Cell>{{1, 4}, {3, 3}, {4, 1}}));
  EXPECT_EQ((IntegerPartition{5}).removable_cells(), (std::vector<Cell>{{1, 5}}));
  EXPECT_TRUE(IntegerPartition{}.removable_cells().empty());
  for (int n = 1; n <= 12; ++n)
    qsp::for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& l) {
      std::set<int> distinct(l.parts().begin(), l.parts().end());
      ASSERT_EQ(l.removable_cells().size(), distinct.size());
      for (const Cell& c : l.removable_cells()) ASSERT_EQ(l.without_cell(c).size(), n - 1);
    });
}

TEST(Partitions, Enumeration) {
  EXPECT_EQ(qsp::enumerate_partitions(4, PartitionConstraint::exact_length(2)),
            (std::vector<IntegerPartition>{{3, 1}, {2, 2}}));
  EXPECT_EQ(qsp::enumerate_partitions(0), (std::vector<IntegerPartition>{IntegerPartition{}}));
  EXPECT_EQ(qsp::enumerate_partitions(10).size(), 42U);
  const auto p = oracle::partition_numbers(25);
  for (int n = 0; n <= 25; ++n) EXPECT_EQ(static_cast<long>(qsp::enumerate_partitions(n).size()), p[static_cast<std::size_t>(n)]);
  for (int n = 1; n <= 10; ++n)
    for (int m = 1; m <= n; ++m) {
      for (const auto& l : qsp::enumerate_partitions(n, PartitionConstraint::first_part(m))) EXPECT_EQ(l.part(1), m);
      for (const auto& l : qsp::enumerate_partitions(n, PartitionConstraint::exact_length(m))) EXPECT_EQ(l.length(), m);
    }
}

TEST(Partitions, EntrySumIdentity) {
  for (int n = 0; n <= 15; ++n)
    qsp::for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& l) {
      ASSERT_EQ(qsp::row_weight(l), qsp::tail_pair_weight(l.conjugate())) << l;
    });
}
