#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qsp/qstirling.hpp"

using namespace qsp;

TEST(QStirling, Examples) {
  for (StirlingMethod m : kAllStirlingMethods) {
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(s_q(n, n, m), Polynomial(1)) << to_string(m);
    EXPECT_EQ(s_q(3, 2, m), Polynomial::from_ints({2, 1})) << to_string(m);
    EXPECT_EQ(s_q(4, 2, m), Polynomial::from_ints({3, 3, 1})) << to_string(m);
    EXPECT_TRUE(s_q(2, 3, m).is_zero());
    EXPECT_TRUE(s_q(4, 0, m).is_zero());
  }
}

TEST(QStirling, FiveMethodsAgree) {
  BLambdaCache cache;
  for (int n = 0; n <= 9; ++n) {
    const auto row = s_q_row(n);
    for (int m = 0; m <= n; ++m)
      for (StirlingMethod method : kAllStirlingMethods) {
        const bool enumerative = method == StirlingMethod::setpartition_sum || method == StirlingMethod::noninterlacing_sum;
        if (enumerative && n > 8) continue;
        ASSERT_EQ(s_q(n, m, method, cache), row[static_cast<std::size_t>(m)]) << n << "," << m << " " << to_string(method);
      }
  }
}

TEST(QStirling, ClassicalValues) {
  for (int n = 0; n <= 9; ++n) {
    const auto row = s_q_row(n);
    for (int m = 0; m <= n; ++m) EXPECT_EQ(row[static_cast<std::size_t>(m)].eval(1), oracle::stirling2(n, m));
  }
  const auto c0 = classical(0);
  EXPECT_EQ(c0.stirling_row, std::vector<BigInt>{1});
  EXPECT_EQ(c0.bell, 1);
  const auto c3 = classical(3);
  EXPECT_EQ(c3.stirling_row, (std::vector<BigInt>{0, 1, 3, 1}));
  EXPECT_EQ(c3.bell, 5);
  EXPECT_EQ(classical(5).bell, 52);
  const auto bell = oracle::bell_numbers(10);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(classical(n).bell, bell[static_cast<std::size_t>(n)]);
}

TEST(QStirling, Carlitz) {
  EXPECT_EQ(carlitz_rhs(4, 2), Polynomial::from_ints({1, 1, 2, 1, 1}));
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(carlitz_rhs(n, n), Polynomial(1));
    EXPECT_EQ(carlitz_rhs(n, 0), Polynomial(1));
    for (int m = 0; m <= n; ++m) EXPECT_EQ(carlitz_rhs(n, m).coeffs(), oracle::gaussian_binomial(n, m)) << n << "," << m;
  }
  EXPECT_THROW(carlitz_rhs(2, 3), std::invalid_argument);
}

TEST(QStirling, MethodParsing) {
  for (StirlingMethod m : kAllStirlingMethods) EXPECT_EQ(parse_stirling_method(to_string(m)), m);
  EXPECT_THROW(parse_stirling_method("fast"), std::invalid_argument);
}
