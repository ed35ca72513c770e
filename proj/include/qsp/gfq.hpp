#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qsp/blambda.hpp"
#include "qsp/partitions.hpp"
#include "qsp/poly.hpp"
#include "qsp/profiles.hpp"
#include "qsp/tableaux.hpp"

// Brute-force oracle over prime fields F_p: enumerate every subspace, compute
// its profile under a diagonal operator by rank computations, and tally.

namespace qsp {

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Dense matrix over F_p with entries in [0, p).
class FpMatrix {
 public:
  FpMatrix(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }

  FpMatrix(int p, const std::vector<std::vector<long>>& rows) : FpMatrix(p, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
    for (int i = 0; i < rows_; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != cols_) throw std::invalid_argument("ragged matrix rows");
      for (int j = 0; j < cols_; ++j) {
        long v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % p;
        (*this)(i, j) = static_cast<int>(v < 0 ? v + p : v);
      }
    }
  }

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  /// Appends the rows of other (same p and width).
  void append_rows(const FpMatrix& other) {
    if (other.cols_ != cols_ || other.p_ != p_) throw std::invalid_argument("incompatible matrices");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
  }

  /// Keeps the first k rows.
  void truncate_rows(int k) {
    rows_ = std::min(rows_, k);
    data_.resize(static_cast<std::size_t>(rows_ * cols_));
  }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  int p_;
  int rows_;
  int cols_;
  std::vector<int> data_;
};

inline int inverse_mod(int a, int p) {
  long result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

struct RrefResult {
  FpMatrix matrix;  ///< reduced row echelon form, zero rows last
  int rank = 0;
  std::vector<int> pivot_columns;  ///< 0-based
};

/// Gauss-Jordan elimination over F_p.
inline RrefResult rref(FpMatrix m) {
  const int p = m.p();
  int r = 0;
  std::vector<int> pivots;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    const int inv = inverse_mod(m(r, c), p);
    for (int j = 0; j < m.cols(); ++j) m(r, j) = static_cast<int>(static_cast<long>(m(r, j)) * inv % p);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const long f = m(i, c);
      for (int j = 0; j < m.cols(); ++j) {
        long v = (m(i, j) - f * m(r, j)) % p;
        m(i, j) = static_cast<int>(v < 0 ? v + p : v);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

inline int rank(const FpMatrix& m) { return rref(m).rank; }

/// A subspace of F_p^n held by its reduced row echelon basis.
struct Subspace {
  int p = 2;
  int n = 0;
  FpMatrix basis{2, 0, 0};
  ColumnSet pivots;  ///< 1-based
};

inline constexpr std::uint64_t kDefaultSubspaceBudget = 10'000'000;

/// Thrown when an enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const BigInt& required, std::uint64_t budget)
      : std::runtime_error("enumeration needs " + required.str() + " subspaces, over the budget of " +
                           std::to_string(budget) + " (raise it with --budget)"),
        required_(required) {}
  const BigInt& required() const { return required_; }

 private:
  BigInt required_;
};

/// Σ_m [n choose m]_p, the number of subspaces of F_p^n.
inline BigInt galois_number(int n, int p) {
  BigInt total = 0;
  for (int m = 0; m <= n; ++m) total += q_binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(m)).eval(p);
  return total;
}

/// Visits every subspace of F_p^n with the given pivots: all fillings of the
/// free entries right of each pivot outside pivot columns.
template <class Visit>
void for_each_subspace_with_pivots(int p, int n, const ColumnSet& pivots, Visit&& visit) {
  const int m = pivots.size();
  std::vector<std::pair<int, int>> free;
  for (int i = 0; i < m; ++i)
    for (int j = pivots[static_cast<std::size_t>(i)] + 1; j <= n; ++j)
      if (!pivots.contains(j)) free.emplace_back(i, j - 1);
  Subspace w{p, n, FpMatrix(p, m, n), pivots};
  for (int i = 0; i < m; ++i) w.basis(i, pivots[static_cast<std::size_t>(i)] - 1) = 1;
  std::vector<int> digits(free.size(), 0);
  while (true) {
    visit(static_cast<const Subspace&>(w));
    std::size_t k = 0;
    while (k < digits.size()) {
      if (++digits[k] < p) {
        w.basis(free[k].first, free[k].second) = digits[k];
        break;
      }
      digits[k] = 0;
      w.basis(free[k].first, free[k].second) = 0;
      ++k;
    }
    if (k == digits.size()) return;
  }
}

/// Every m-dimensional subspace of F_p^n exactly once.
template <class Visit>
void enumerate_subspaces(int p, int n, int m, Visit&& visit, std::uint64_t budget = kDefaultSubspaceBudget) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (m < 0 || m > n) throw std::invalid_argument("need 0 <= m <= n");
  BigInt required = q_binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(m)).eval(p);
  if (required > budget) throw BudgetExceeded(required, budget);
  for_each_subset(n, m, [&](const ColumnSet& c) { for_each_subspace_with_pivots(p, n, c, visit); });
}

struct ProfileResult {
  IntegerPartition profile;
  std::vector<IntegerPartition> partial_prefixes;  ///< every nonempty prefix of the profile
  int r = 0;                                       ///< dimension of the smallest invariant subspace containing W
};

inline void check_diagonal(int p, int n, const std::vector<int>& diag) {
  if (static_cast<int>(diag.size()) != n) throw std::invalid_argument("diagonal must have n entries");
  if (p < n) throw std::invalid_argument("need p >= n for n distinct diagonal entries");
  std::set<int> seen;
  for (int d : diag) {
    int v = ((d % p) + p) % p;
    if (!seen.insert(v).second) throw std::invalid_argument("diagonal entries must be distinct mod p");
  }
}

/// dim(W + ΔW + ... + Δ^{j-1}W) for j = 1, 2, ... until two consecutive
/// dimensions agree; the increments form the profile.
inline ProfileResult delta_profile(const Subspace& w, const std::vector<int>& diag) {
  check_diagonal(w.p, w.n, diag);
  const int p = w.p;
  ProfileResult out;
  FpMatrix stacked = w.basis;
  FpMatrix block = w.basis;
  int dim = rank(stacked);
  std::vector<int> parts;
  if (dim > 0) parts.push_back(dim);
  while (dim > 0) {
    for (int i = 0; i < block.rows(); ++i)
      for (int j = 0; j < block.cols(); ++j)
        block(i, j) = static_cast<int>(static_cast<long>(block(i, j)) * (((diag[static_cast<std::size_t>(j)] % p) + p) % p) % p);
    stacked.append_rows(block);
    RrefResult red = rref(stacked);
    if (red.rank == dim) break;
    parts.push_back(red.rank - dim);
    dim = red.rank;
    // keep the stacked span compact
    red.matrix.truncate_rows(red.rank);
    stacked = std::move(red.matrix);
  }
  out.r = dim;
  out.profile = IntegerPartition(parts);
  for (std::size_t k = 1; k <= parts.size(); ++k)
    out.partial_prefixes.emplace_back(std::vector<int>(parts.begin(), parts.begin() + static_cast<long>(k)));
  return out;
}

/// One tallied count next to its closed-form value at q = p.
struct Comparison {
  std::string category;
  std::string key;
  BigInt observed;
  BigInt expected;
  bool matches() const { return observed == expected; }
};

struct CensusOptions {
  std::optional<std::vector<int>> diagonal;  ///< defaults to (0, 1, ..., n-1)
  std::uint64_t budget = kDefaultSubspaceBudget;
  bool compare = true;
  unsigned threads = 1;
};

struct CensusReport {
  int p = 0;
  int n = 0;
  std::vector<int> diagonal;
  BigInt total = 0;
  std::map<int, BigInt> by_dimension;
  std::map<IntegerPartition, BigInt> by_profile;
  std::map<std::pair<ColumnSet, IntegerPartition>, BigInt> by_pivots_profile;
  std::map<IntegerPartition, BigInt> by_partial;
  std::map<std::pair<ColumnSet, IntegerPartition>, BigInt> by_pivots_partial;
  std::map<std::pair<int, int>, BigInt> by_dim_r;
  std::map<ColumnSet, BigInt> by_pivots;
  std::vector<Comparison> comparisons;

  std::vector<Comparison> mismatches() const {
    std::vector<Comparison> out;
    for (const auto& c : comparisons)
      if (!c.matches()) out.push_back(c);
    return out;
  }

  void merge(const CensusReport& o) {
    total += o.total;
    for (const auto& [k, v] : o.by_dimension) by_dimension[k] += v;
    for (const auto& [k, v] : o.by_profile) by_profile[k] += v;
    for (const auto& [k, v] : o.by_pivots_profile) by_pivots_profile[k] += v;
    for (const auto& [k, v] : o.by_partial) by_partial[k] += v;
    for (const auto& [k, v] : o.by_pivots_partial) by_pivots_partial[k] += v;
    for (const auto& [k, v] : o.by_dim_r) by_dim_r[k] += v;
    for (const auto& [k, v] : o.by_pivots) by_pivots[k] += v;
  }
};

namespace detail {

template <class Map, class Key>
BigInt lookup(const Map& m, const Key& k) {
  auto it = m.find(k);
  return it == m.end() ? BigInt(0) : it->second;
}

inline std::string pivots_key(const ColumnSet& c, const IntegerPartition& mu) {
  return "{" + c.to_string() + "}:" + mu.to_string();
}

inline void compare_with_closed_forms(CensusReport& rep) {
  const int n = rep.n;
  const BigInt q = rep.p;
  BLambdaCache cache;
  auto add = [&](std::string cat, std::string key, BigInt obs, const Polynomial& formula) {
    rep.comparisons.push_back({std::move(cat), std::move(key), std::move(obs), formula.eval(q)});
  };

  BigInt galois = 0;
  for (int m = 0; m <= n; ++m) {
    Polynomial qb = q_binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
    galois += qb.eval(q);
    add("dimension", std::to_string(m), lookup(rep.by_dimension, m), qb);
  }
  rep.comparisons.push_back({"total", "galois", rep.total, galois});

  for (int size = 0; size <= n; ++size)
    for_each_partition(size, PartitionConstraint::none(), [&](const IntegerPartition& mu) {
      add("sigma", mu.to_string(), lookup(rep.by_profile, mu), sigma(n, mu, cache));
      if (!mu.empty()) add("pi", mu.to_string(), lookup(rep.by_partial, mu), pi(n, mu));
    });

  for (int m = 0; m <= n; ++m) {
    for_each_subset(n, m, [&](const ColumnSet& c) {
      add("pivots", c.to_string(), lookup(rep.by_pivots, c), pivot_count(n, c));
      for (int size = m; size <= n; ++size)
        for_each_partition(size, PartitionConstraint::first_part(m), [&](const IntegerPartition& mu) {
          BigInt obs = lookup(rep.by_pivots_profile, std::make_pair(c, mu));
          add("sigma_pivots", pivots_key(c, mu), obs, sigma_pivots(n, c, mu, PivotMethod::recursion));
          add("sigma_pivots_tableau", pivots_key(c, mu), obs, sigma_pivots(n, c, mu, PivotMethod::tableau_sum));
          if (!mu.empty())
            add("pi_pivots", pivots_key(c, mu), lookup(rep.by_pivots_partial, std::make_pair(c, mu)), pi_pivots(n, c, mu));
        });
    });
    for (int r = m; r <= n; ++r)
      add("r_locus", std::to_string(m) + ":" + std::to_string(r), lookup(rep.by_dim_r, std::make_pair(m, r)),
          r_locus_count(n, m, r));
  }

  for (int m = 1; m <= n; ++m) {
    if (n % m == 0) {
      const int d = n / m;
      add("splitting", std::to_string(m) + ":" + std::to_string(d),
          lookup(rep.by_profile, IntegerPartition::rectangle(m, d)), splitting_count(m, d, cache));
    }
    for (int l = 1; l <= n; ++l)
      add("anti_invariant", std::to_string(m) + ":" + std::to_string(l),
          lookup(rep.by_partial, IntegerPartition::rectangle(m, l + 1)), anti_invariant_count(n, m, l));
  }
}

}  // namespace detail

/// Tallies every subspace of F_p^n by profile, pivots, partial profile and
/// r(W), then compares each tally with the matching closed form at q = p.
inline CensusReport census(int p, int n, const CensusOptions& opts = {}) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<int> diag;
  if (opts.diagonal) {
    diag = *opts.diagonal;
  } else {
    for (int i = 0; i < n; ++i) diag.push_back(i);
  }
  check_diagonal(p, n, diag);
  const BigInt required = galois_number(n, p);
  if (required > opts.budget) throw BudgetExceeded(required, opts.budget);

  std::vector<ColumnSet> work;
  for (int m = 0; m <= n; ++m) for_each_subset(n, m, [&](const ColumnSet& c) { work.push_back(c); });

  CensusReport rep;
  rep.p = p;
  rep.n = n;
  rep.diagonal = diag;

  auto tally_pivots = [&](const ColumnSet& c, CensusReport& local) {
    for_each_subspace_with_pivots(p, n, c, [&](const Subspace& w) {
      ProfileResult pr = delta_profile(w, diag);
      const int m = c.size();
      local.total += 1;
      local.by_dimension[m] += 1;
      local.by_profile[pr.profile] += 1;
      local.by_pivots_profile[{c, pr.profile}] += 1;
      local.by_pivots[c] += 1;
      local.by_dim_r[{m, pr.r}] += 1;
      for (const auto& pre : pr.partial_prefixes) {
        local.by_partial[pre] += 1;
        local.by_pivots_partial[{c, pre}] += 1;
      }
    });
  };

  const unsigned threads = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(work.size())));
  if (threads == 1) {
    for (const auto& c : work) tally_pivots(c, rep);
  } else {
    std::vector<CensusReport> partial(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t k = t; k < work.size(); k += threads) tally_pivots(work[k], partial[t]);
      });
    for (auto& th : pool) th.join();
    for (const auto& part : partial) rep.merge(part);
  }

  if (opts.compare) detail::compare_with_closed_forms(rep);
  return rep;
}

}  // namespace qsp
