#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsp/blambda.hpp"
#include "qsp/partitions.hpp"
#include "qsp/poly.hpp"
#include "qsp/qstirling.hpp"
#include "qsp/tableaux.hpp"

// Closed-form counts of subspaces of F_q^n by profile under a diagonal
// operator with n distinct eigenvalues. Every count is a polynomial in q.

namespace qsp {

enum class PivotMethod { tableau_sum, recursion };

inline const char* to_string(PivotMethod m) { return m == PivotMethod::tableau_sum ? "tableau_sum" : "recursion"; }

inline PivotMethod parse_pivot_method(std::string_view s) {
  if (s == "tableau_sum" || s == "tableau") return PivotMethod::tableau_sum;
  if (s == "recursion") return PivotMethod::recursion;
  throw std::invalid_argument("unknown pivot method '" + std::string(s) + "'");
}

/// (q-1)^{Σ_{j>=2} μ_j} q^{Σ_{j>=2} C(μ_j, 2)}
inline Polynomial profile_prefactor(const IntegerPartition& mu) {
  return pow(q_minus_one(), static_cast<std::size_t>(tail_sum(mu))).shifted(static_cast<std::size_t>(tail_pair_weight(mu)));
}

/// σ_n(μ) = C(n, |μ|) (q-1)^{...} q^{...} b_{μ'}(q).
inline Polynomial sigma(int n, const IntegerPartition& mu, BLambdaCache& cache) {
  if (mu.size() > n) return {};
  if (mu.length() <= 1) return Polynomial(binomial(n, mu.size()));
  return Polynomial(binomial(n, mu.size())) * profile_prefactor(mu) *
         b_lambda(mu.conjugate(), BLambdaMethod::recursion, cache);
}

inline Polynomial sigma(int n, const IntegerPartition& mu) {
  BLambdaCache cache;
  return sigma(n, mu, cache);
}

namespace detail {

inline void check_pivots(int n, const ColumnSet& c, const IntegerPartition& mu) {
  if (c.size() != mu.part(1))
    throw std::invalid_argument("pivot set size " + std::to_string(c.size()) + " must equal the first part " +
                                std::to_string(mu.part(1)));
  if (!c.empty() && c.max() > n) throw std::invalid_argument("pivots must lie in [n]");
}

/// Σ over T in Tab_{⊂[n]}(μ') with first column c of c_q(T) q^{γ_n(T)} (gamma optional).
inline Polynomial first_column_tableau_sum(int n, const ColumnSet& c, const IntegerPartition& mu, bool with_gamma) {
  Polynomial sum;
  if (mu.size() > n) return sum;
  for_each_tableau(mu.conjugate(), SupportMode::subset_of(n), [&](const Tableau& t) {
    if (t.first_column() != c) return;
    Polynomial w = c_weight(t).weight;
    sum += with_gamma ? w.shifted(static_cast<std::size_t>(gamma_n(t, n))) : w;
  });
  return sum;
}

/// T(C, D): first column C, second column φ_C(D), with φ_C: [n-|C|] -> [n]-C
/// order preserving. Returns nullopt when the rows fail to increase.
inline std::optional<Tableau> two_column_tableau(int n, const ColumnSet& c, const ColumnSet& d) {
  const ColumnSet rest = c.complement_in(n);
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < c.size(); ++i) {
    rows.push_back({c[static_cast<std::size_t>(i)]});
    if (i < d.size()) {
      int image = rest[static_cast<std::size_t>(d[static_cast<std::size_t>(i)] - 1)];
      if (image <= c[static_cast<std::size_t>(i)]) return std::nullopt;
      rows.back().push_back(image);
    }
  }
  return Tableau(std::move(rows));
}

}  // namespace detail

/// Two-column tableau used by the pivot recursion; exposed for tests.
inline std::optional<Tableau> pivot_step_tableau(int n, const ColumnSet& c, const ColumnSet& d) {
  return detail::two_column_tableau(n, c, d);
}

/// σ^C_n(μ): subspaces with pivots C and profile μ.
inline Polynomial sigma_pivots(int n, const ColumnSet& c, const IntegerPartition& mu, PivotMethod method) {
  detail::check_pivots(n, c, mu);
  if (method == PivotMethod::tableau_sum)
    return profile_prefactor(mu) * detail::first_column_tableau_sum(n, c, mu, false);

  if (mu.length() <= 1) return Polynomial(1);
  const int m1 = mu.part(1);
  const int m2 = mu.part(2);
  const IntegerPartition rest = mu.tail();
  Polynomial sum;
  for_each_subset(n - m1, m2, [&](const ColumnSet& d) {
    auto t = detail::two_column_tableau(n, c, d);
    if (!t) return;
    sum += c_weight(*t).weight * sigma_pivots(n - m1, d, rest, PivotMethod::recursion);
  });
  return pow(q_minus_one(), static_cast<std::size_t>(m2)).shifted(static_cast<std::size_t>(m2 * (m2 - 1) / 2)) * sum;
}

/// π^C_n(μ): subspaces with pivots C and partial profile μ.
inline Polynomial pi_pivots(int n, const ColumnSet& c, const IntegerPartition& mu) {
  detail::check_pivots(n, c, mu);
  return profile_prefactor(mu) * detail::first_column_tableau_sum(n, c, mu, true);
}

/// π_n(μ): subspaces with partial profile μ. The empty profile gives 1.
inline Polynomial pi(int n, const IntegerPartition& mu) {
  if (mu.empty()) return Polynomial(1);
  if (mu.size() > n) return {};
  Polynomial sum;
  for_each_tableau(mu.conjugate(), SupportMode::subset_of(n), [&](const Tableau& t) {
    sum += c_weight(t).weight.shifted(static_cast<std::size_t>(gamma_n(t, n)));
  });
  return profile_prefactor(mu) * sum;
}

/// Splitting subspaces of dimension m in F_q^{md}: profile (m^d).
inline Polynomial splitting_count(int m, int d, BLambdaCache& cache) {
  if (m < 1 || d < 1) throw std::invalid_argument("splitting_count requires m, d >= 1");
  return pow(q_minus_one(), static_cast<std::size_t>(m * (d - 1)))
             .shifted(static_cast<std::size_t>(m * (m - 1) / 2 * (d - 1))) *
         b_lambda(IntegerPartition::rectangle(d, m), BLambdaMethod::recursion, cache);
}

inline Polynomial splitting_count(int m, int d) {
  BLambdaCache cache;
  return splitting_count(m, d, cache);
}

/// l-fold anti-invariant subspaces of dimension m: partial profile (m^{l+1}).
inline Polynomial anti_invariant_count(int n, int m, int l) {
  if (n < 0 || m < 0 || l < 0) throw std::invalid_argument("anti_invariant_count requires n, m, l >= 0");
  if (m == 0) return Polynomial(1);
  return pi(n, IntegerPartition::rectangle(m, l + 1));
}

/// m-dimensional W with r(W) = r: (q-1)^{r-m} C(n, r) S_q(r, m).
inline Polynomial r_locus_count(int n, int m, int r) {
  if (!(n >= r && r >= m && m >= 0)) throw std::invalid_argument("r_locus_count requires n >= r >= m >= 0");
  return Polynomial(binomial(n, r)) * pow(q_minus_one(), static_cast<std::size_t>(r - m)) *
         s_q_row(r)[static_cast<std::size_t>(m)];
}

/// m-dimensional subspaces with pivots C: q^{β(C, [n]-C)}.
inline Polynomial pivot_count(int n, const ColumnSet& c) {
  if (!c.empty() && c.max() > n) throw std::invalid_argument("pivots must lie in [n]");
  return Polynomial::monomial(1, static_cast<std::size_t>(beta(c, c.complement_in(n))));
}

}  // namespace qsp
