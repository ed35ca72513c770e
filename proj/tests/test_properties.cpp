#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qsp/bijections.hpp"
#include "qsp/blambda.hpp"
#include "qsp/profiles.hpp"
#include "qsp/qstirling.hpp"
#include "qsp/verify.hpp"

// Randomized checks over larger inputs than the exhaustive tests reach.

using namespace qsp;

namespace {

IntegerPartition random_partition(std::mt19937& rng, int n) {
  std::vector<int> parts;
  while (n > 0) {
    std::uniform_int_distribution<int> d(1, n);
    const int x = d(rng);
    parts.push_back(x);
    n -= x;
  }
  return IntegerPartition::from_unsorted(parts);
}

}  // namespace

TEST(Properties, RecursionAgreesWithTableauSumOnRandomShapes) {
  std::mt19937 rng(2024);
  BLambdaCache cache;
  for (int trial = 0; trial < 40; ++trial) {
    const IntegerPartition l = random_partition(rng, 9 + trial % 3);
    ASSERT_EQ(b_lambda(l, BLambdaMethod::recursion, cache), b_lambda(l, BLambdaMethod::tableau_sum, cache)) << l;
  }
}

TEST(Properties, RecursionUpTo12Specializes) {
  BLambdaCache cache;
  for (int n = 9; n <= 12; ++n)
    for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& l) {
      const Polynomial b = b_lambda(l, BLambdaMethod::recursion, cache);
      ASSERT_EQ(b.eval(1), oracle::set_partitions_of_type(l.parts())) << l;
      ASSERT_EQ(b.eval(0), oracle::hook_length(l.parts())) << l;
    });
}

TEST(Properties, QStirlingRowSumsViaBLambda) {
  // Σ_λ⊢n q^{Σ(i-1)(λ_i-1)} b_λ(q) at q = 1 is the Bell number
  const auto bell = oracle::bell_numbers(14);
  BLambdaCache cache;
  for (int n = 0; n <= 14; ++n) {
    BigInt total = 0;
    for (int m = 0; m <= n; ++m) total += s_q(n, m, StirlingMethod::blambda_sum, cache).eval(1);
    EXPECT_EQ(total, bell[static_cast<std::size_t>(n)]);
  }
}

TEST(Properties, SigmaSumsToGaussianBinomialAtRandomPrimes) {
  BLambdaCache cache;
  for (int n = 1; n <= 8; ++n)
    for (int m = 0; m <= n; ++m) {
      Polynomial total;
      for (int size = m; size <= n; ++size)
        for_each_partition(size, PartitionConstraint::first_part(m), [&](const IntegerPartition& mu) { total += sigma(n, mu, cache); });
      for (long q : {2, 3, 7, 11}) ASSERT_EQ(total.eval(q), oracle::eval(oracle::gaussian_binomial(n, m), q));
    }
}

TEST(Properties, ThetaRoundTripOnRandomLargePartitions) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 13 + trial % 8;
    std::vector<std::vector<int>> b(2);
    b[0].push_back(1);
    for (int x = 2; x <= n; ++x) b[rng() % 2].push_back(x);
    if (b[1].empty() || b[0].size() == b[1].size()) continue;
    const SetPartition a(b);
    const ThetaResult res = theta(a);
    ASSERT_EQ(res.interlacings, oracle::interlacings(b));
    ASSERT_EQ(theta_inverse(res.tableau, res.interlacings), a) << a;
  }
}

TEST(Properties, VerifySuitesAllPass) {
  for (const auto& r : run_suites({"all"}, VerifyOptions{}, 2)) {
    EXPECT_TRUE(r.ok()) << r.name << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.checks, 0) << r.name;
  }
  EXPECT_THROW(run_suites({"nope"}, VerifyOptions{}), std::invalid_argument);
}
