#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsp/blambda.hpp"
#include "qsp/partitions.hpp"
#include "qsp/poly.hpp"
#include "qsp/setpart.hpp"
#include "qsp/tableaux.hpp"

namespace qsp {

enum class StirlingMethod { recurrence, blambda_sum, tableau_sum, setpartition_sum, noninterlacing_sum };

inline constexpr StirlingMethod kAllStirlingMethods[] = {
    StirlingMethod::recurrence, StirlingMethod::blambda_sum, StirlingMethod::tableau_sum,
    StirlingMethod::setpartition_sum, StirlingMethod::noninterlacing_sum};

inline const char* to_string(StirlingMethod m) {
  switch (m) {
    case StirlingMethod::recurrence: return "recurrence";
    case StirlingMethod::blambda_sum: return "blambda_sum";
    case StirlingMethod::tableau_sum: return "tableau_sum";
    case StirlingMethod::setpartition_sum: return "setpartition_sum";
    case StirlingMethod::noninterlacing_sum: return "noninterlacing_sum";
  }
  return "?";
}

inline StirlingMethod parse_stirling_method(std::string_view s) {
  for (StirlingMethod m : kAllStirlingMethods)
    if (s == to_string(m)) return m;
  throw std::invalid_argument("unknown q-Stirling method '" + std::string(s) + "'");
}

/// S_q(n, m) for 0 <= m <= n from S_q(n,m) = S_q(n-1,m-1) + [m]_q S_q(n-1,m),
/// computed as one table.
inline std::vector<Polynomial> s_q_row(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Polynomial> row{Polynomial(1)};
  for (int i = 1; i <= n; ++i) {
    std::vector<Polynomial> next(static_cast<std::size_t>(i + 1));
    for (int m = 1; m <= i; ++m) {
      Polynomial v = row[static_cast<std::size_t>(m - 1)];
      if (m < static_cast<int>(row.size())) v += q_int(static_cast<std::size_t>(m)) * row[static_cast<std::size_t>(m)];
      next[static_cast<std::size_t>(m)] = std::move(v);
    }
    row = std::move(next);
  }
  return row;
}

inline Polynomial s_q(int n, int m, StirlingMethod method, BLambdaCache& cache) {
  if (n < 0 || m < 0) throw std::invalid_argument("n and m must be nonnegative");
  if (m > n) return {};
  switch (method) {
    case StirlingMethod::recurrence:
      return s_q_row(n)[static_cast<std::size_t>(m)];
    case StirlingMethod::blambda_sum: {
      Polynomial sum;
      for_each_partition(n, PartitionConstraint::exact_length(m), [&](const IntegerPartition& lambda) {
        sum += b_lambda(lambda, BLambdaMethod::recursion, cache).shifted(static_cast<std::size_t>(row_weight(lambda)));
      });
      return sum;
    }
    case StirlingMethod::tableau_sum: {
      Polynomial sum;
      for_each_partition(n, PartitionConstraint::exact_length(m), [&](const IntegerPartition& lambda) {
        Polynomial inner;
        for_each_syt(lambda, [&](const Tableau& t) { inner += c_weight(t).weight; });
        sum += inner.shifted(static_cast<std::size_t>(row_weight(lambda)));
      });
      return sum;
    }
    case StirlingMethod::setpartition_sum: {
      std::vector<BigInt> counts;
      for_each_set_partition_into(ColumnSet::range(n), m, [&](const SetPartition& a) {
        auto e = static_cast<std::size_t>(interlacing_number(a) + row_weight(a.shape()));
        if (counts.size() <= e) counts.resize(e + 1);
        ++counts[e];
      });
      return Polynomial(std::move(counts));
    }
    case StirlingMethod::noninterlacing_sum: {
      Polynomial sum;
      for_each_set_partition_into(ColumnSet::range(n), m, [&](const SetPartition& a) {
        if (interlacing_number(a) != 0) return;
        sum += c_weight(tableau_of(a)).weight.shifted(static_cast<std::size_t>(row_weight(a.shape())));
      });
      return sum;
    }
  }
  throw std::logic_error("unreachable");
}

inline Polynomial s_q(int n, int m, StirlingMethod method = StirlingMethod::recurrence) {
  BLambdaCache cache;
  return s_q(n, m, method, cache);
}

/// Σ_{r=m}^n (q-1)^{r-m} C(n,r) S_q(r,m).
inline Polynomial carlitz_rhs(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("carlitz_rhs requires 0 <= m <= n");
  Polynomial sum;
  for (int r = m; r <= n; ++r)
    sum += Polynomial(binomial(n, r)) * pow(q_minus_one(), static_cast<std::size_t>(r - m)) *
           s_q_row(r)[static_cast<std::size_t>(m)];
  return sum;
}

struct ClassicalStirling {
  std::vector<BigInt> stirling_row;  ///< S(n, m) for m = 0..n
  BigInt bell;
};

/// S(n, m) as Σ c(T) over standard tableaux with n cells and m rows; Bell number as the row sum.
inline ClassicalStirling classical(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  ClassicalStirling out{std::vector<BigInt>(static_cast<std::size_t>(n + 1)), 0};
  for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& lambda) {
    for_each_syt(lambda, [&](const Tableau& t) {
      out.stirling_row[static_cast<std::size_t>(lambda.length())] += c_weight(t).count;
    });
  });
  for (const auto& s : out.stirling_row) out.bell += s;
  return out;
}

}  // namespace qsp
