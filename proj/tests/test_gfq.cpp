#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qsp/gfq.hpp"

using namespace qsp;

namespace {

Subspace span_of(int p, std::vector<std::vector<long>> rows) {
  RrefResult red = rref(FpMatrix(p, rows));
  red.matrix.truncate_rows(red.rank);
  std::vector<int> piv;
  for (int c : red.pivot_columns) piv.push_back(c + 1);
  return {p, static_cast<int>(rows[0].size()), red.matrix, ColumnSet(piv)};
}

}  // namespace

TEST(Gfq, Primes) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(5));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(9));
  EXPECT_THROW(FpMatrix(4, 1, 1), std::invalid_argument);
}

TEST(Gfq, Rref) {
  const FpMatrix id(5, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(rref(id).matrix, id);
  EXPECT_EQ(rref(id).rank, 3);
  const FpMatrix zero(3, 2, 3);
  EXPECT_EQ(rref(zero).matrix, zero);
  EXPECT_EQ(rref(zero).rank, 0);
  const auto r = rref(FpMatrix(2, {{1, 1}, {0, 1}}));
  EXPECT_EQ(r.matrix, FpMatrix(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(r.rank, 2);
  EXPECT_EQ(rref(FpMatrix(3, {{1, 2, 0}, {2, 1, 0}})).rank, 1);
  EXPECT_EQ(FpMatrix(5, {{-1}})(0, 0), 4);
}

TEST(Gfq, SubspaceCounts) {
  auto count = [](int p, int n, int m) {
    long c = 0;
    enumerate_subspaces(p, n, m, [&](const Subspace&) { ++c; });
    return c;
  };
  EXPECT_EQ(count(2, 2, 1), 3);
  EXPECT_EQ(count(3, 3, 2), 13);
  EXPECT_EQ(count(5, 3, 3), 1);
  EXPECT_EQ(count(5, 4, 2), 806);
  EXPECT_THROW(count(4, 2, 1), std::invalid_argument);
  EXPECT_THROW(enumerate_subspaces(5, 5, 2, [](const Subspace&) {}, 100), BudgetExceeded);
  EXPECT_EQ(galois_number(5, 5), 42176);
}

TEST(Gfq, EnumeratedBasesAreReduced) {
  std::set<std::vector<int>> seen;
  enumerate_subspaces(3, 4, 2, [&](const Subspace& w) {
    const RrefResult red = rref(w.basis);
    EXPECT_EQ(red.matrix, w.basis);
    EXPECT_EQ(red.rank, 2);
    std::vector<int> flat;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j) flat.push_back(w.basis(i, j));
    EXPECT_TRUE(seen.insert(flat).second);
  });
}

TEST(Gfq, DeltaProfileExamples) {
  const std::vector<int> diag{0, 1};
  auto a = delta_profile(span_of(2, {{1, 0}}), diag);
  EXPECT_EQ(a.profile, (IntegerPartition{1}));
  EXPECT_EQ(a.r, 1);
  auto b = delta_profile(span_of(2, {{1, 1}}), diag);
  EXPECT_EQ(b.profile, (IntegerPartition{1, 1}));
  EXPECT_EQ(b.r, 2);
  EXPECT_EQ(b.partial_prefixes, (std::vector<IntegerPartition>{{1}, {1, 1}}));
  auto full = delta_profile(span_of(5, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), {0, 1, 2});
  EXPECT_EQ(full.profile, (IntegerPartition{3}));
  EXPECT_EQ(full.r, 3);
  auto zero = delta_profile(Subspace{5, 3, FpMatrix(5, 0, 3), {}}, {0, 1, 2});
  EXPECT_EQ(zero.profile, IntegerPartition{});
  EXPECT_TRUE(zero.partial_prefixes.empty());
  EXPECT_THROW(delta_profile(span_of(5, {{1, 0, 0}}), {0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(delta_profile(span_of(5, {{1, 0, 0}}), {0, 1, 6}), std::invalid_argument);
  EXPECT_THROW(delta_profile(span_of(2, {{1, 0, 0}}), {0, 1, 2}), std::invalid_argument);
}

TEST(Gfq, ProfilesMatchVectorSetOracle) {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
    std::vector<int> diag;
    for (int i = 0; i < n; ++i) diag.push_back(i);
    const oracle::SubspaceWorld world(p, n);
    std::map<std::vector<int>, long> expected;
    for (const auto& w : world.all_subspaces()) ++expected[world.profile(w, diag)];
    const CensusReport rep = census(p, n, {diag, kDefaultSubspaceBudget, false, 1});
    std::map<std::vector<int>, long> got;
    for (const auto& [mu, c] : rep.by_profile) got[mu.parts()] = c.convert_to<long>();
    EXPECT_EQ(got, expected) << p << "," << n;
  }
}

TEST(Gfq, CensusSmall) {
  const CensusReport rep = census(2, 2);
  EXPECT_EQ(rep.total, 5);
  const std::map<IntegerPartition, BigInt> want{{{}, 1}, {{1}, 2}, {{1, 1}, 1}, {{2}, 1}};
  EXPECT_EQ(rep.by_profile, want);
  EXPECT_TRUE(rep.mismatches().empty());
  EXPECT_EQ(census(3, 3).by_profile.at({1}), 3);
}

TEST(Gfq, CensusAgreesWithClosedForms) {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {5, 3}, {5, 4}}) {
    const CensusReport rep = census(p, n);
    for (const auto& c : rep.mismatches()) ADD_FAILURE() << p << "," << n << " " << c.category << " " << c.key;
    EXPECT_EQ(rep.total, galois_number(n, p));
  }
  const CensusReport rep = census(5, 4);
  EXPECT_EQ(rep.by_profile.at(IntegerPartition::rectangle(2, 2)), 560);
  EXPECT_EQ(rep.by_dimension.at(2), 806);
}

TEST(Gfq, ThreadedCensusMatchesSerial) {
  CensusOptions serial, threaded;
  threaded.threads = 4;
  const CensusReport a = census(3, 3, serial), b = census(3, 3, threaded);
  EXPECT_EQ(a.by_profile, b.by_profile);
  EXPECT_EQ(a.by_pivots_partial, b.by_pivots_partial);
  EXPECT_EQ(a.by_dim_r, b.by_dim_r);
  EXPECT_EQ(a.total, b.total);
}

TEST(Gfq, DiagonalChoiceDoesNotMatter) {
  CensusOptions a, b;
  a.diagonal = std::vector<int>{0, 1, 2};
  b.diagonal = std::vector<int>{1, 3, 4};
  const CensusReport ra = census(5, 3, a), rb = census(5, 3, b);
  EXPECT_EQ(ra.by_profile, rb.by_profile);
  EXPECT_EQ(ra.by_partial, rb.by_partial);
  EXPECT_TRUE(rb.mismatches().empty());
}

TEST(Gfq, BudgetRefusal) {
  CensusOptions o;
  o.budget = 1000;
  try {
    census(5, 5, o);
    FAIL() << "expected refusal";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.required(), 42176);
  }
}
