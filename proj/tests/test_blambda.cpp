#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "qsp/blambda.hpp"

using namespace qsp;

TEST(BLambda, Examples) {
  for (auto m : {BLambdaMethod::tableau_sum, BLambdaMethod::setpartition_sum, BLambdaMethod::recursion}) {
    EXPECT_EQ(b_lambda({3, 3, 1}, m).to_string(), "q^4 + 5*q^3 + 15*q^2 + 28*q + 21") << to_string(m);
    EXPECT_EQ(b_lambda({1, 1, 1, 1, 1}, m), Polynomial(1));
    EXPECT_EQ(b_lambda({2, 1}, m), Polynomial::from_ints({2, 1}));
    EXPECT_EQ(b_lambda({}, m), Polynomial(1));
  }
}

TEST(BLambda, MatchesBruteForceInterlacingSum) {
  for (int n = 0; n <= 8; ++n)
    for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& l) {
      ASSERT_EQ(b_lambda(l).coeffs(), oracle::blambda_bruteforce(l.parts())) << l;
    });
}

TEST(BLambda, Specializations) {
  BLambdaCache cache;
  for (int n = 0; n <= 8; ++n)
    for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& l) {
      const Polynomial b = b_lambda(l, BLambdaMethod::recursion, cache);
      ASSERT_EQ(b.eval(1), oracle::set_partitions_of_type(l.parts()));
      ASSERT_EQ(b.eval(0), oracle::hook_length(l.parts()));
      for (const auto& c : b.coeffs()) ASSERT_GE(c, 0);
    });
}

TEST(BLambda, TwoRow) {
  EXPECT_EQ(b_two_row(2, 1), Polynomial::from_ints({2, 1}));
  EXPECT_EQ(b_two_row(5, 0), Polynomial(1));
  EXPECT_EQ(b_two_row(2, 2), Polynomial::from_ints({2, 1}));
  EXPECT_EQ(b_two_row(0, 0), Polynomial(1));
  EXPECT_THROW(b_two_row(1, 2), std::invalid_argument);
  for (int r = 0; r <= 9; ++r)
    for (int s = 0; s <= r && r + s <= 14; ++s) {
      std::vector<int> parts;
      if (r) parts.push_back(r);
      if (s) parts.push_back(s);
      EXPECT_EQ(b_two_row(r, s), b_lambda(IntegerPartition(parts))) << r << "," << s;
    }
}

TEST(BLambda, TouchardRiordan) {
  EXPECT_EQ(touchard_riordan_rhs(0), Polynomial(1));
  EXPECT_EQ(touchard_riordan_rhs(1), Polynomial::from_ints({1, -1}));
  EXPECT_EQ(touchard_riordan_rhs(2), Polynomial::from_ints({2, -3, 0, 1}));
  const Polynomial one_minus_q = Polynomial::from_ints({1, -1});
  for (int m = 0; m <= 8; ++m) {
    const Polynomial b = b_lambda(IntegerPartition::rectangle(2, m));
    EXPECT_EQ(b * pow(one_minus_q, static_cast<std::size_t>(m)), touchard_riordan_rhs(m)) << m;
    if (m <= 6) EXPECT_EQ(b.coeffs(), oracle::matching_crossings(m)) << m;
  }
}

TEST(BLambda, CatalanTriangle) {
  const auto a = q_hermite_triangle(14);
  EXPECT_EQ(a[0][0], Polynomial(1));
  EXPECT_EQ(a[2][0], b_lambda({2}));
  EXPECT_EQ(a[4][0], Polynomial::from_ints({2, 1}));
  for (int n = 0; n <= 14; ++n)
    for (int k = 0; k <= n; ++k) {
      if ((n - k) % 2) {
        EXPECT_TRUE(a[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)].is_zero());
        continue;
      }
      EXPECT_EQ(a[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)], b_lambda(hermite_shape(n, k))) << n << "," << k;
    }
  // Motzkin numbers: b_k = 1, λ_k = 1 gives a_{n,0} = M_n
  const auto motz = catalan_triangle([](long) { return Polynomial(1); }, [](long) { return Polynomial(1); }, 6);
  const std::vector<long> m{1, 1, 2, 4, 9, 21, 51};
  for (std::size_t n = 0; n < m.size(); ++n) EXPECT_EQ(motz[n][0], Polynomial(BigInt(m[n])));
}

TEST(BLambda, CacheRoundTrip) {
  BLambdaCache cache;
  warm_cache(cache, 9);
  EXPECT_EQ(cache.size(), 1U + 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22 + 30);
  std::stringstream ss;
  cache.write(ss);
  const std::string first = ss.str();
  EXPECT_NE(first.find("3,3,1:21,28,15,5,1\n"), std::string::npos);
  EXPECT_EQ(first.rfind("-:1\n", 0), 0U);
  const BLambdaCache back = BLambdaCache::read(ss);
  EXPECT_EQ(back.entries(), cache.entries());
  std::stringstream again;
  back.write(again);
  EXPECT_EQ(again.str(), first);

  std::stringstream bad("3,3,1:21,x\n");
  EXPECT_THROW(BLambdaCache::read(bad), std::runtime_error);
  std::stringstream nocolon("3,3,1\n");
  EXPECT_THROW(BLambdaCache::read(nocolon), std::runtime_error);
}

TEST(BLambda, CachedRecursionIsPure) {
  BLambdaCache warm;
  warm_cache(warm, 12);
  BLambdaCache cold;
  for_each_partition(12, PartitionConstraint::none(), [&](const IntegerPartition& l) {
    BLambdaCache fresh;
    ASSERT_EQ(b_lambda(l, BLambdaMethod::recursion, fresh), *warm.find(l));
    ASSERT_EQ(b_lambda(l, BLambdaMethod::recursion, cold), *warm.find(l));
  });
}

TEST(BLambda, MethodParsing) {
  EXPECT_EQ(parse_blambda_method("tableau_sum"), BLambdaMethod::tableau_sum);
  EXPECT_THROW(parse_blambda_method("magic"), std::invalid_argument);
}
