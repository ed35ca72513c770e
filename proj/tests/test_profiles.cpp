#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qsp/profiles.hpp"

using namespace qsp;

namespace {
const Polynomial q_1 = q_minus_one();
}

TEST(Profiles, SigmaExamples) {
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(sigma(n, {}), Polynomial(1));
  EXPECT_EQ(sigma(2, {1, 1}), q_1);
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= n; ++m) EXPECT_EQ(sigma(n, {m}), Polynomial(binomial(n, m)));
  EXPECT_TRUE(sigma(2, {2, 1}).is_zero());
}

TEST(Profiles, PivotTableForN4C13) {
  const ColumnSet c{1, 3};
  for (auto method : {PivotMethod::tableau_sum, PivotMethod::recursion}) {
    EXPECT_EQ(sigma_pivots(4, c, {2}, method), Polynomial(1));
    EXPECT_EQ(sigma_pivots(4, c, {2, 1}, method), q_1 * Polynomial::from_ints({2, 1}));
    EXPECT_EQ(sigma_pivots(4, c, {2, 2}, method), q_1 * q_1 * Polynomial::q());
    EXPECT_EQ(sigma_pivots(4, c, {2, 1, 1}, method), q_1 * q_1);
    Polynomial total;
    for (int size = 2; size <= 4; ++size)
      for_each_partition(size, PartitionConstraint::first_part(2),
                         [&](const IntegerPartition& mu) { total += sigma_pivots(4, c, mu, method); });
    EXPECT_EQ(total, Polynomial::monomial(1, 3));
  }
  EXPECT_EQ(pivot_count(4, c), Polynomial::monomial(1, 3));
  EXPECT_THROW(sigma_pivots(4, c, {3}, PivotMethod::recursion), std::invalid_argument);
  EXPECT_THROW(sigma_pivots(4, ColumnSet{1, 5}, {2}, PivotMethod::recursion), std::invalid_argument);
}

TEST(Profiles, PivotStepTableau) {
  EXPECT_FALSE(pivot_step_tableau(4, {1, 4}, {1, 2}).has_value());
  const auto t = pivot_step_tableau(4, {1, 3}, {1});
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(*t, Tableau::parse("12/3"));
}

TEST(Profiles, PivotMethodsAgreeAndSum) {
  BLambdaCache cache;
  for (int n = 0; n <= 6; ++n)
    for (int size = 0; size <= n; ++size)
      for_each_partition(size, PartitionConstraint::none(), [&](const IntegerPartition& mu) {
        Polynomial total;
        for_each_subset(n, mu.part(1), [&](const ColumnSet& c) {
          const Polynomial rec = sigma_pivots(n, c, mu, PivotMethod::recursion);
          ASSERT_EQ(sigma_pivots(n, c, mu, PivotMethod::tableau_sum), rec) << n << " " << c.to_string() << " " << mu;
          total += rec;
        });
        ASSERT_EQ(total, sigma(n, mu, cache)) << n << " " << mu;
      });
}

TEST(Profiles, PivotCountsSumToGaussianBinomial) {
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= n; ++m) {
      Polynomial total;
      for_each_subset(n, m, [&](const ColumnSet& c) {
        total += pivot_count(n, c);
        Polynomial by_profile;
        for (int size = m; size <= n; ++size)
          for_each_partition(size, PartitionConstraint::first_part(m),
                             [&](const IntegerPartition& mu) { by_profile += sigma_pivots(n, c, mu, PivotMethod::recursion); });
        ASSERT_EQ(by_profile, pivot_count(n, c));
      });
      EXPECT_EQ(total.coeffs(), oracle::gaussian_binomial(n, m));
    }
}

TEST(Profiles, PartialProfiles) {
  for (int n = 1; n <= 7; ++n)
    for (int m = 1; m <= n; ++m) EXPECT_EQ(pi(n, {m}), q_binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(m)));
  EXPECT_EQ(pi(2, {1, 1}), q_1);
  EXPECT_EQ(pi(5, {}), Polynomial(1));
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= n; ++m)
      for_each_subset(n, m, [&](const ColumnSet& c) { ASSERT_EQ(pi_pivots(n, c, {m}), pivot_count(n, c)); });
  // a partial profile that uses every dimension is a full profile
  BLambdaCache cache;
  for (int n = 1; n <= 6; ++n)
    for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& mu) { ASSERT_EQ(pi(n, mu), sigma(n, mu, cache)); });
}

TEST(Profiles, Splitting) {
  EXPECT_EQ(splitting_count(1, 2), q_1);
  for (int m = 1; m <= 4; ++m) EXPECT_EQ(splitting_count(m, 1), Polynomial(1));
  const Polynomial expect = Polynomial::q() * q_1 * q_1 * Polynomial::from_ints({2, 1});
  EXPECT_EQ(splitting_count(2, 2), expect);
  EXPECT_EQ(splitting_count(2, 2).eval(5), 560);
  EXPECT_THROW(splitting_count(0, 2), std::invalid_argument);
}

TEST(Profiles, AntiInvariant) {
  EXPECT_EQ(anti_invariant_count(2, 1, 1), q_1);
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= n; ++m)
      EXPECT_EQ(anti_invariant_count(n, m, 0), q_binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(m)));
  EXPECT_TRUE(anti_invariant_count(2, 2, 1).is_zero());
}

TEST(Profiles, RLocus) {
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= n; ++m) EXPECT_EQ(r_locus_count(n, m, m), Polynomial(binomial(n, m)));
  EXPECT_EQ(r_locus_count(2, 1, 2), q_1);
  EXPECT_EQ(r_locus_count(4, 2, 3), Polynomial(4) * q_1 * Polynomial::from_ints({2, 1}));
  EXPECT_THROW(r_locus_count(3, 2, 1), std::invalid_argument);
  BLambdaCache cache;
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= n; ++m) {
      Polynomial total;
      for (int r = m; r <= n; ++r) {
        total += r_locus_count(n, m, r);
        Polynomial by_profile;
        for_each_partition(r, PartitionConstraint::first_part(m), [&](const IntegerPartition& mu) { by_profile += sigma(n, mu, cache); });
        ASSERT_EQ(by_profile, r_locus_count(n, m, r)) << n << "," << m << "," << r;
      }
      EXPECT_EQ(total.coeffs(), oracle::gaussian_binomial(n, m));
    }
}
