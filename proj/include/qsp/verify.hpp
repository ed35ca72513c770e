#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsp/bijections.hpp"
#include "qsp/blambda.hpp"
#include "qsp/gfq.hpp"
#include "qsp/partitions.hpp"
#include "qsp/poly.hpp"
#include "qsp/profiles.hpp"
#include "qsp/qstirling.hpp"
#include "qsp/setpart.hpp"
#include "qsp/shifted.hpp"
#include "qsp/tableaux.hpp"

// Self-check suites run by `qsp verify`. Each suite counts the identities it
// checked and records a message per failure.

namespace qsp {

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failure_count = 0;
  std::vector<std::string> failures;  ///< first few messages only

  bool ok() const { return failure_count == 0; }

  void check(bool ok, const std::function<std::string()>& message) {
    ++checks;
    if (ok) return;
    ++failure_count;
    if (failures.size() < 20) failures.push_back(message());
  }

  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    check(got == want, [&] {
      std::ostringstream os;
      os << what << ": got " << got << ", expected " << want;
      return os.str();
    });
  }
};

struct VerifyOptions {
  std::optional<int> max_n;  ///< overrides the main size bound of a suite
  std::uint64_t budget = kDefaultSubspaceBudget;
};

namespace detail {

inline int bound(const VerifyOptions& o, int dflt) { return o.max_n ? *o.max_n : dflt; }
inline int sub_bound(const VerifyOptions& o, int dflt) { return o.max_n ? std::min(*o.max_n, dflt) : dflt; }

template <class Visit>
void for_each_partition_upto(int max_size, Visit&& visit) {
  for (int n = 0; n <= max_size; ++n) for_each_partition(n, PartitionConstraint::none(), visit);
}

/// Bell numbers by the Bell triangle.
inline std::vector<BigInt> bell_triangle(int n_max) {
  std::vector<BigInt> bell{1};
  std::vector<BigInt> row{1};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

/// n! / (Π λ_i! Π m_j!) with m_j the multiplicity of part j.
inline BigInt set_partitions_of_type(const IntegerPartition& lambda) {
  BigInt den = 1;
  std::map<int, int> mult;
  for (int x : lambda.parts()) {
    den *= factorial(x);
    ++mult[x];
  }
  for (const auto& [x, m] : mult) den *= factorial(m);
  return factorial(lambda.size()) / den;
}

inline std::string poly_multiset_key(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  std::string s;
  for (const auto& x : v) s += x + ";";
  return s;
}

}  // namespace detail

inline SuiteResult verify_fibres(const VerifyOptions& o) {
  SuiteResult r{"fibres"};
  const int nmax = detail::bound(o, 8);
  for (int n = 0; n <= nmax; ++n)
    for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& lambda) {
      for_each_syt(lambda, [&](const Tableau& t) {
        BigInt size = 0;
        fibre_generate(t, [&](const SetPartition&) { ++size; });
        r.expect_eq(size, c_weight(t).count, "|fibre(" + t.to_string(true) + ")| vs c(T)");
      });
    });

  const int lmax = detail::sub_bound(o, 6);
  for (int k = 0; k <= lmax; ++k)
    for_each_partition(k, PartitionConstraint::none(), [&](const IntegerPartition& lambda) {
      std::vector<std::string> base;
      for_each_syt(lambda, [&](const Tableau& t) { base.push_back(c_weight(t).weight.to_string()); });
      for (int n = k; n <= std::max(nmax, k); ++n) {
        std::vector<std::string> all, expect;
        for_each_tableau(lambda, SupportMode::subset_of(n), [&](const Tableau& t) { all.push_back(c_weight(t).weight.to_string()); });
        const long copies = static_cast<long>(binomial(n, k));
        for (long c = 0; c < copies; ++c) expect.insert(expect.end(), base.begin(), base.end());
        r.check(detail::poly_multiset_key(all) == detail::poly_multiset_key(expect),
                [&] { return "relabeling multiset differs for shape " + lambda.to_string() + ", n=" + std::to_string(n); });
      }
    });

  for (int n = 0; n <= detail::sub_bound(o, 7); ++n)
    for (int m = 0; m <= n; ++m)
      for_each_subset(n, m, [&](const ColumnSet& c) {
        long rhs = 0;
        for (int i = 1; i <= m; ++i) rhs += n - m - c[static_cast<std::size_t>(i - 1)] + i;
        r.expect_eq(beta(c, c.complement_in(n)), rhs, "beta for C={" + c.to_string() + "}, n=" + std::to_string(n));
      });
  return r;
}

inline SuiteResult verify_interlacing(const VerifyOptions& o) {
  SuiteResult r{"interlacing"};
  const int nmax = detail::bound(o, 8);
  for (int n = 0; n <= nmax; ++n)
    for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& lambda) {
      for_each_syt(lambda, [&](const Tableau& t) {
        std::vector<BigInt> gf;
        fibre_generate(t, [&](const SetPartition& a) {
          r.check(tableau_of(a) == t, [&] { return "tableau_of(" + a.to_string() + ") != " + t.to_string(true); });
          auto v = static_cast<std::size_t>(interlacing_number(a));
          if (gf.size() <= v) gf.resize(v + 1);
          ++gf[v];
        });
        r.expect_eq(Polynomial(std::move(gf)), c_weight(t).weight, "interlacing polynomial of " + t.to_string(true));
      });
    });

  const int bmax = detail::bound(o, 10);
  const auto bell = detail::bell_triangle(bmax);
  for (int n = 0; n <= bmax; ++n) {
    BigInt sum = 0;
    for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& lambda) {
      for_each_syt(lambda, [&](const Tableau& t) { sum += c_weight(t).count; });
    });
    r.expect_eq(sum, bell[static_cast<std::size_t>(n)], "sum of c(T) over SYT of size " + std::to_string(n));
  }

  for (int n = 0; n <= nmax; ++n) {
    BigInt count = 0;
    for_each_set_partition(ColumnSet::range(n), [&](const SetPartition& a) {
      if (interlacing_number(a) == 0) ++count;
    });
    r.expect_eq(count, involution_count(n), "noninterlacing partitions of [" + std::to_string(n) + "]");
  }
  return r;
}

inline SuiteResult verify_blambda_methods(const VerifyOptions& o) {
  SuiteResult r{"blambda-methods"};
  BLambdaCache cache;
  const int nmax = detail::bound(o, 9);
  const int spmax = detail::sub_bound(o, 8);
  detail::for_each_partition_upto(nmax, [&](const IntegerPartition& lambda) {
    Polynomial rec = b_lambda(lambda, BLambdaMethod::recursion, cache);
    r.expect_eq(b_lambda(lambda, BLambdaMethod::tableau_sum, cache), rec, "tableau_sum vs recursion at " + lambda.to_string());
    if (lambda.size() <= spmax)
      r.expect_eq(b_lambda(lambda, BLambdaMethod::setpartition_sum, cache), rec,
                  "setpartition_sum vs recursion at " + lambda.to_string());
  });
  const int tmax = detail::bound(o, 14);
  for (int n = 0; n <= tmax; ++n)
    for (int s = 0; 2 * s <= n; ++s) {
      const int rr = n - s;
      std::vector<int> parts;
      if (rr > 0) parts.push_back(rr);
      if (s > 0) parts.push_back(s);
      r.expect_eq(b_two_row(rr, s), b_lambda(IntegerPartition(parts), BLambdaMethod::recursion, cache),
                  "b_two_row(" + std::to_string(rr) + "," + std::to_string(s) + ")");
    }
  return r;
}

inline SuiteResult verify_specializations(const VerifyOptions& o) {
  SuiteResult r{"specializations"};
  BLambdaCache cache;
  detail::for_each_partition_upto(detail::bound(o, 8), [&](const IntegerPartition& lambda) {
    Polynomial b = b_lambda(lambda, BLambdaMethod::recursion, cache);
    const std::string at = " at " + lambda.to_string();
    const BigInt f = count_syt(lambda);
    r.expect_eq(b.eval(1), detail::set_partitions_of_type(lambda), "b(1)" + at);
    r.expect_eq(b.eval(0), f, "b(0)" + at);
    r.expect_eq(b.coeff(0), f, "constant term" + at);
    bool nonneg = true;
    for (const auto& c : b.coeffs()) nonneg = nonneg && c >= 0;
    r.check(nonneg, [&] { return "negative coefficient" + at; });
  });
  return r;
}

inline SuiteResult verify_qstirling(const VerifyOptions& o) {
  SuiteResult r{"qstirling"};
  BLambdaCache cache;
  const int nmax = detail::bound(o, 9);
  const int emax = detail::sub_bound(o, 8);
  std::vector<std::vector<BigInt>> s{{1}};
  for (int n = 1; n <= nmax; ++n) {
    std::vector<BigInt> row(static_cast<std::size_t>(n + 1));
    for (int m = 1; m <= n; ++m) {
      const auto& prev = s.back();
      row[static_cast<std::size_t>(m)] = prev[static_cast<std::size_t>(m - 1)] +
                                         (m < static_cast<int>(prev.size()) ? BigInt(m) * prev[static_cast<std::size_t>(m)] : BigInt(0));
    }
    s.push_back(std::move(row));
  }
  for (int n = 0; n <= nmax; ++n) {
    const auto row = s_q_row(n);
    const auto cl = classical(n);
    for (int m = 0; m <= n; ++m) {
      const std::string at = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
      const Polynomial& ref = row[static_cast<std::size_t>(m)];
      for (StirlingMethod method : kAllStirlingMethods) {
        if (method == StirlingMethod::recurrence) continue;
        const bool enumerative = method == StirlingMethod::setpartition_sum || method == StirlingMethod::noninterlacing_sum;
        if (enumerative && n > emax) continue;
        r.expect_eq(s_q(n, m, method, cache), ref, std::string(to_string(method)) + " at " + at);
      }
      r.expect_eq(ref.eval(1), s[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)], "S_q(1) at " + at);
      r.expect_eq(cl.stirling_row[static_cast<std::size_t>(m)], s[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)],
                  "tableau route to S" + at);
    }
  }
  // the noninterlacing sum visits exactly the v = 0 partitions, once per fibre
  for (int n = 0; n <= emax; ++n) {
    std::set<std::string> seen;
    bool unique = true;
    for_each_set_partition(ColumnSet::range(n), [&](const SetPartition& a) {
      if (interlacing_number(a) != 0) return;
      unique = seen.insert(tableau_of(a).to_string(false)).second && unique;
    });
    BigInt syt = 0;
    for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& l) { syt += count_syt(l); });
    r.check(unique, [&] { return "two noninterlacing partitions share a tableau at n=" + std::to_string(n); });
    r.expect_eq(BigInt(static_cast<long>(seen.size())), syt, "noninterlacing partitions vs SYT at n=" + std::to_string(n));
  }
  return r;
}

inline SuiteResult verify_carlitz(const VerifyOptions& o) {
  SuiteResult r{"carlitz"};
  BLambdaCache cache;
  const int cmax = detail::bound(o, 8);
  for (int n = 0; n <= cmax; ++n)
    for (int m = 0; m <= n; ++m) {
      const Polynomial qb = q_binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
      const std::string at = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
      r.expect_eq(carlitz_rhs(n, m), qb, "carlitz_rhs" + at);
      Polynomial sum;
      for (int rr = m; rr <= n; ++rr) sum += r_locus_count(n, m, rr);
      r.expect_eq(sum, qb, "sum of r_locus_count" + at);
      if (m >= 1) r.expect_eq(pi(n, IntegerPartition{m}), qb, "pi(n,(m))" + at);
    }
  for (int n = 0; n <= detail::sub_bound(o, 7); ++n)
    for (int m = 0; m <= n; ++m)
      for (int rr = m; rr <= n; ++rr) {
        Polynomial sum;
        for_each_partition(rr, PartitionConstraint::first_part(m), [&](const IntegerPartition& mu) { sum += sigma(n, mu, cache); });
        r.expect_eq(sum, r_locus_count(n, m, rr),
                    "profiles of size " + std::to_string(rr) + " and first part " + std::to_string(m) + ", n=" + std::to_string(n));
      }
  for (int n = 0; n <= detail::sub_bound(o, 6); ++n)
    for (int size = 0; size <= n; ++size)
      for_each_partition(size, PartitionConstraint::none(), [&](const IntegerPartition& mu) {
        Polynomial sum;
        for_each_subset(n, mu.part(1), [&](const ColumnSet& c) {
          Polynomial rec = sigma_pivots(n, c, mu, PivotMethod::recursion);
          r.expect_eq(sigma_pivots(n, c, mu, PivotMethod::tableau_sum), rec,
                      "sigma_pivots methods at n=" + std::to_string(n) + ", C={" + c.to_string() + "}, mu=" + mu.to_string());
          sum += rec;
        });
        r.expect_eq(sum, sigma(n, mu, cache), "sum over pivots of sigma at n=" + std::to_string(n) + ", mu=" + mu.to_string());
      });
  return r;
}

inline SuiteResult verify_two_row(const VerifyOptions& o) {
  SuiteResult r{"two-row"};
  const int nmax = detail::bound(o, 12);
  for (int n = 1; n <= nmax; ++n) {
    std::map<std::pair<int, int>, std::vector<BigInt>> strata;  // (r, s) -> #{v = i}
    std::map<std::pair<int, int>, std::set<std::string>> images;
    for_each_set_partition_into(ColumnSet::range(n), 2, [&](const SetPartition& a) {
      const IntegerPartition sh = a.shape();
      const int rr = sh.part(1), s = sh.part(2);
      if (rr == s) return;
      const ThetaResult res = theta(a);
      const int v = interlacing_number(a);
      r.expect_eq(res.interlacings, v, "recorded interlacings of " + a.to_string());
      const IntegerPartition expect_shape = s - v > 0 ? IntegerPartition{rr + v, s - v} : IntegerPartition{rr + v};
      r.expect_eq(res.tableau.shape(), expect_shape, "shape of theta(" + a.to_string() + ")");
      const SetPartition back = theta_inverse(res.tableau, res.interlacings);
      r.check(back == a, [&] { return "theta_inverse(theta(" + a.to_string() + ")) = " + back.to_string(); });
      r.check(images[{rr, s}].insert(res.tableau.to_string(false) + "#" + std::to_string(v)).second,
              [&] { return "theta is not injective at " + a.to_string(); });
      auto& gf = strata[{rr, s}];
      if (gf.size() <= static_cast<std::size_t>(v)) gf.resize(static_cast<std::size_t>(v) + 1);
      ++gf[static_cast<std::size_t>(v)];
    });
    for (auto& [key, gf] : strata) {
      const auto [rr, s] = key;
      BigInt image_size = 0;
      for (int i = 0; i <= s; ++i) image_size += two_row_syt_count(rr + i, s - i);
      r.expect_eq(BigInt(static_cast<long>(images[key].size())), image_size,
                  "image size for (" + std::to_string(rr) + "," + std::to_string(s) + ")");
      r.expect_eq(Polynomial(gf), b_two_row(rr, s), "stratified counts for (" + std::to_string(rr) + "," + std::to_string(s) + ")");
    }
  }
  for (int n = 0; n <= detail::sub_bound(o, 8); ++n) {
    BigInt f_sum = 0;
    for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& l) { f_sum += count_syt(l); });
    r.expect_eq(f_sum, involution_count(n), "sum of f_lambda at n=" + std::to_string(n));
  }
  return r;
}

inline SuiteResult verify_touchard(const VerifyOptions& o) {
  SuiteResult r{"touchard"};
  BLambdaCache cache;
  const Polynomial one_minus_q = Polynomial::from_ints({1, -1});
  for (int m = 0; m <= detail::bound(o, 8); ++m) {
    Polynomial b = b_lambda(IntegerPartition::rectangle(2, m), BLambdaMethod::recursion, cache);
    r.expect_eq(b * pow(one_minus_q, static_cast<std::size_t>(m)), touchard_riordan_rhs(m), "Touchard-Riordan at m=" + std::to_string(m));
  }
  return r;
}

inline SuiteResult verify_catalan_triangle(const VerifyOptions& o) {
  SuiteResult r{"catalan-triangle"};
  BLambdaCache cache;
  const int nmax = detail::bound(o, 14);
  const auto a = q_hermite_triangle(nmax);
  for (int n = 0; n <= nmax; ++n)
    for (int k = 0; k <= n; ++k) {
      const std::string at = "a_{" + std::to_string(n) + "," + std::to_string(k) + "}";
      const Polynomial& entry = a[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      if ((n - k) % 2 != 0) {
        r.expect_eq(entry, Polynomial{}, at);
        continue;
      }
      r.expect_eq(entry, b_lambda(hermite_shape(n, k), BLambdaMethod::recursion, cache), at);
    }
  return r;
}

inline SuiteResult verify_shifted(const VerifyOptions& o) {
  SuiteResult r{"shifted"};
  BLambdaCache cache;
  detail::for_each_partition_upto(detail::bound(o, 9), [&](const IntegerPartition& lambda) {
    const BigInt at_minus_one = b_lambda(lambda, BLambdaMethod::recursion, cache).eval(-1);
    const std::string at = " at " + lambda.to_string();
    r.expect_eq(at_minus_one, count_odd_c(lambda), "b(-1) vs odd c(T)" + at);
    if (!lambda.empty()) r.check(at_minus_one > 0, [&] { return "b(-1) not positive" + at; });
    if (distinct_parts_hypothesis(lambda)) r.expect_eq(count_shifted(lambda), at_minus_one, "shifted tableaux" + at);
  });
  return r;
}

inline constexpr std::pair<int, int> kOracleConfigs[] = {{2, 2}, {3, 2}, {3, 3}, {5, 4}, {5, 5}};

inline SuiteResult verify_oracle_all(const VerifyOptions& o) {
  SuiteResult r{"oracle-all"};
  for (const auto& [p, n] : kOracleConfigs) {
    if (o.max_n && n > *o.max_n) continue;
    const std::string at = " at p=" + std::to_string(p) + ", n=" + std::to_string(n);
    try {
      CensusOptions opts;
      opts.budget = o.budget;
      const CensusReport rep = census(p, n, opts);
      for (const auto& c : rep.comparisons)
        r.check(c.matches(), [&] {
          return c.category + " " + c.key + at + ": observed " + c.observed.str() + ", formula " + c.expected.str();
        });
    } catch (const std::invalid_argument& e) {
      // delta_profile refuses increments that are not weakly decreasing
      r.check(false, [&] { return std::string(e.what()) + at; });
    }
  }
  if (!o.max_n || *o.max_n >= 3) {
    CensusOptions a, b;
    a.diagonal = std::vector<int>{0, 1, 2};
    b.diagonal = std::vector<int>{1, 3, 4};
    a.compare = b.compare = false;
    const CensusReport ra = census(5, 3, a), rb = census(5, 3, b);
    r.check(ra.by_profile == rb.by_profile && ra.by_partial == rb.by_partial && ra.by_pivots_profile == rb.by_pivots_profile,
            [] { return std::string("census at p=5, n=3 depends on the choice of diagonal"); });
  }
  return r;
}

using SuiteFn = SuiteResult (*)(const VerifyOptions&);

inline const std::vector<std::pair<std::string, SuiteFn>>& verify_suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"fibres", verify_fibres},
      {"interlacing", verify_interlacing},
      {"blambda-methods", verify_blambda_methods},
      {"specializations", verify_specializations},
      {"qstirling", verify_qstirling},
      {"carlitz", verify_carlitz},
      {"two-row", verify_two_row},
      {"touchard", verify_touchard},
      {"catalan-triangle", verify_catalan_triangle},
      {"shifted", verify_shifted},
      {"oracle-all", verify_oracle_all},
  };
  return suites;
}

/// Runs the named suites ("all" expands to every suite), optionally in
/// parallel; results come back in the order requested.
inline std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const VerifyOptions& o, unsigned jobs = 1) {
  std::vector<SuiteFn> fns;
  for (const auto& name : names) {
    bool found = false;
    for (const auto& [n, fn] : verify_suites()) {
      if (name == "all" || name == n) {
        fns.push_back(fn);
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("unknown verify suite '" + name + "'");
  }
  std::vector<SuiteResult> out;
  if (jobs <= 1) {
    for (auto fn : fns) out.push_back(fn(o));
    return out;
  }
  std::vector<std::future<SuiteResult>> pending;
  std::size_t next = 0;
  while (next < fns.size() || !pending.empty()) {
    while (next < fns.size() && pending.size() < jobs) pending.push_back(std::async(std::launch::async, fns[next++], o));
    out.push_back(pending.front().get());
    pending.erase(pending.begin());
  }
  return out;
}

}  // namespace qsp
