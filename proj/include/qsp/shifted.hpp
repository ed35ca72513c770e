#pragma once

#include <cstddef>
#include <vector>

#include "qsp/partitions.hpp"
#include "qsp/poly.hpp"
#include "qsp/tableaux.hpp"

namespace qsp {

// Shifted cells use absolute columns: row i spans columns i .. λ_i + i - 1.
// Rows, columns and diagonals ((i,j) -> (i+1,j+1)) all increase.

namespace detail {

inline bool in_shifted_shape(const IntegerPartition& lambda, int i, int j) {
  return i >= 1 && i <= lambda.length() && j >= i && j <= lambda.part(i) + i - 1;
}

}  // namespace detail

/// Visits each standard shifted tableau of shape lambda as rows of entries
/// (row i listed from its first shifted column).
template <class Visit>
void for_each_shifted_tableau(const IntegerPartition& lambda, Visit&& visit) {
  const int n = lambda.size();
  const int rows = lambda.length();
  std::vector<int> filled(static_cast<std::size_t>(rows), 0);
  std::vector<std::vector<int>> entries(static_cast<std::size_t>(rows));
  // Place 1..n in order; a cell accepts the next value once its left, upper
  // and upper-left neighbours inside the shape are filled.
  auto is_filled = [&](int i, int j) {
    return j - i < filled[static_cast<std::size_t>(i - 1)];
  };
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      visit(entries);
      return;
    }
    for (int i = 1; i <= rows; ++i) {
      if (filled[static_cast<std::size_t>(i - 1)] == lambda.part(i)) continue;
      const int j = i + filled[static_cast<std::size_t>(i - 1)];
      if (detail::in_shifted_shape(lambda, i - 1, j) && !is_filled(i - 1, j)) continue;
      if (detail::in_shifted_shape(lambda, i - 1, j - 1) && !is_filled(i - 1, j - 1)) continue;
      ++filled[static_cast<std::size_t>(i - 1)];
      entries[static_cast<std::size_t>(i - 1)].push_back(next);
      self(self, next + 1);
      entries[static_cast<std::size_t>(i - 1)].pop_back();
      --filled[static_cast<std::size_t>(i - 1)];
    }
  };
  rec(rec, 1);
}

/// Number of standard shifted tableaux of shape lambda.
inline BigInt count_shifted(const IntegerPartition& lambda) {
  BigInt count = 0;
  for_each_shifted_tableau(lambda, [&](const std::vector<std::vector<int>>&) { ++count; });
  return count;
}

/// True when every part other than the largest value is distinct; equivalently
/// successive parts of the conjugate differ by at most one.
inline bool distinct_parts_hypothesis(const IntegerPartition& lambda) {
  for (int i = 2; i <= lambda.length(); ++i) {
    if (lambda.part(i) == lambda.part(1)) continue;
    if (lambda.part(i) == lambda.part(i - 1)) return false;
  }
  return true;
}

/// Number of standard tableaux T of shape lambda with c(T) odd.
inline BigInt count_odd_c(const IntegerPartition& lambda) {
  BigInt count = 0;
  for_each_syt(lambda, [&](const Tableau& t) {
    if (c_weight(t).count % 2 == 1) ++count;
  });
  return count;
}

}  // namespace qsp
