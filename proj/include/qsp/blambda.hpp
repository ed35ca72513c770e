#pragma once

#include <cstddef>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsp/partitions.hpp"
#include "qsp/poly.hpp"
#include "qsp/setpart.hpp"
#include "qsp/tableaux.hpp"

namespace qsp {

enum class BLambdaMethod { tableau_sum, setpartition_sum, recursion };

inline const char* to_string(BLambdaMethod m) {
  switch (m) {
    case BLambdaMethod::tableau_sum: return "tableau_sum";
    case BLambdaMethod::setpartition_sum: return "setpartition_sum";
    case BLambdaMethod::recursion: return "recursion";
  }
  return "?";
}

inline BLambdaMethod parse_blambda_method(std::string_view s) {
  if (s == "tableau_sum" || s == "tableau") return BLambdaMethod::tableau_sum;
  if (s == "setpartition_sum" || s == "setpartition") return BLambdaMethod::setpartition_sum;
  if (s == "recursion") return BLambdaMethod::recursion;
  throw std::invalid_argument("unknown b_lambda method '" + std::string(s) + "'");
}

/// Memo table for the removable-cell recursion. The empty partition maps to 1.
///
/// On disk: one record per line, "<parts csv>:<coeffs csv ascending>", with
/// the empty partition keyed by "-".
class BLambdaCache {
 public:
  BLambdaCache() { table_.emplace(IntegerPartition{}, Polynomial(1)); }

  const Polynomial* find(const IntegerPartition& lambda) const {
    auto it = table_.find(lambda);
    return it == table_.end() ? nullptr : &it->second;
  }

  void put(const IntegerPartition& lambda, Polynomial value) { table_[lambda] = std::move(value); }

  std::size_t size() const { return table_.size(); }
  const std::map<IntegerPartition, Polynomial>& entries() const { return table_; }

  /// Folds another cache in; both must come from the same recursion so keys agree.
  void merge(const BLambdaCache& other) {
    for (const auto& [k, v] : other.table_) table_.emplace(k, v);
  }

  void write(std::ostream& os) const {
    for (const auto& [lambda, poly] : table_) {
      os << (lambda.empty() ? std::string("-") : lambda.to_string()) << ':';
      const auto& cs = poly.coeffs();
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) os << ',';
        os << cs[i];
      }
      os << '\n';
    }
  }

  static BLambdaCache read(std::istream& is) {
    BLambdaCache cache;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      auto colon = line.find(':');
      if (colon == std::string::npos)
        throw std::runtime_error("cache line " + std::to_string(lineno) + ": missing ':'");
      std::string key = line.substr(0, colon);
      IntegerPartition lambda = key == "-" ? IntegerPartition{} : IntegerPartition::parse(key);
      std::vector<BigInt> coeffs;
      std::stringstream ss(line.substr(colon + 1));
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          coeffs.emplace_back(tok);
        } catch (const std::exception&) {
          throw std::runtime_error("cache line " + std::to_string(lineno) + ": bad coefficient '" + tok + "'");
        }
      }
      cache.put(lambda, Polynomial(std::move(coeffs)));
    }
    return cache;
  }

  void save(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write cache file " + path);
    write(os);
  }

  static BLambdaCache load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read cache file " + path);
    return read(is);
  }

 private:
  std::map<IntegerPartition, Polynomial> table_;
};

namespace detail {

inline Polynomial blambda_recursive(const IntegerPartition& lambda, BLambdaCache& cache) {
  if (const Polynomial* hit = cache.find(lambda)) return *hit;
  const IntegerPartition mu = lambda.conjugate();
  Polynomial sum;
  for (const Cell& c : lambda.removable_cells()) {
    // factor [μ_{j-1} - (i-1)]_q, read as 1 in the first column
    std::size_t factor = c.col == 1 ? 1 : static_cast<std::size_t>(mu.part(c.col - 1) - (c.row - 1));
    sum += q_int(factor) * blambda_recursive(lambda.without_cell(c), cache);
  }
  cache.put(lambda, sum);
  return sum;
}

}  // namespace detail

/// b_λ(q) by the chosen method. The cache is read and extended only by the
/// recursion method.
inline Polynomial b_lambda(const IntegerPartition& lambda, BLambdaMethod method, BLambdaCache& cache) {
  switch (method) {
    case BLambdaMethod::tableau_sum: {
      Polynomial sum;
      for_each_syt(lambda, [&](const Tableau& t) { sum += c_weight(t).weight; });
      return sum;
    }
    case BLambdaMethod::setpartition_sum: {
      // Direct enumeration of set partitions of [n]; no tableau code involved.
      std::vector<BigInt> counts;
      for_each_set_partition(ColumnSet::range(lambda.size()), [&](const SetPartition& a) {
        if (a.shape() != lambda) return;
        auto v = static_cast<std::size_t>(interlacing_number(a));
        if (counts.size() <= v) counts.resize(v + 1);
        ++counts[v];
      });
      return Polynomial(std::move(counts));
    }
    case BLambdaMethod::recursion:
      return detail::blambda_recursive(lambda, cache);
  }
  throw std::logic_error("unreachable");
}

inline Polynomial b_lambda(const IntegerPartition& lambda, BLambdaMethod method = BLambdaMethod::recursion) {
  BLambdaCache cache;
  return b_lambda(lambda, method, cache);
}

/// Fills the cache with every partition of size up to max_size.
inline void warm_cache(BLambdaCache& cache, int max_size) {
  for (int n = 0; n <= max_size; ++n)
    for_each_partition(n, PartitionConstraint::none(), [&](const IntegerPartition& p) {
      detail::blambda_recursive(p, cache);
    });
}

/// f_(r,s) = (r+1-s)/(r+s+1) * C(r+s+1, s), the two-row SYT count.
inline BigInt two_row_syt_count(long r, long s) {
  if (s < 0 || r < s) return 0;
  return BigInt(r + 1 - s) * binomial(r + s + 1, s) / (r + s + 1);
}

/// Closed form for b_(r,s): Σ_i f_(r+i, s-i) q^i, using s-1 in place of s when r = s.
inline Polynomial b_two_row(long r, long s) {
  if (s < 0 || r < s) throw std::invalid_argument("b_two_row requires r >= s >= 0");
  const long top = r == s ? s - 1 : s;
  const long lower = r == s ? s - 1 : s;
  std::vector<BigInt> coeffs;
  for (long i = 0; i <= top; ++i) coeffs.push_back(two_row_syt_count(r + i, lower - i));
  if (r == 0 && s == 0) return Polynomial(1);
  return Polynomial(std::move(coeffs));
}

/// Σ_{i=0}^m (-1)^i [C(2m, m-i) - C(2m, m-i-1)] q^{i(i+1)/2}.
inline Polynomial touchard_riordan_rhs(long m) {
  Polynomial out;
  for (long i = 0; i <= m; ++i) {
    BigInt c = binomial(2 * m, m - i) - binomial(2 * m, m - i - 1);
    if (i % 2 == 1) c = -c;
    out += Polynomial::monomial(c, static_cast<std::size_t>(i * (i + 1) / 2));
  }
  return out;
}

using PolySequence = std::function<Polynomial(long)>;

/// Catalan triangle: a_{0,0} = 1, a_{n,k} = a_{n-1,k-1} + b_k a_{n-1,k} + λ_{k+1} a_{n-1,k+1}.
/// Returned as rows a[n][k] for 0 <= k <= n <= n_max.
inline std::vector<std::vector<Polynomial>> catalan_triangle(const PolySequence& b_seq, const PolySequence& lambda_seq,
                                                             long n_max) {
  std::vector<std::vector<Polynomial>> a;
  if (n_max < 0) return a;
  std::vector<Polynomial> b(static_cast<std::size_t>(n_max + 1));
  std::vector<Polynomial> lam(static_cast<std::size_t>(n_max + 2));
  for (long k = 0; k <= n_max; ++k) b[static_cast<std::size_t>(k)] = b_seq(k);
  for (long k = 1; k <= n_max + 1; ++k) lam[static_cast<std::size_t>(k)] = lambda_seq(k);
  a.push_back({Polynomial(1)});
  for (long n = 1; n <= n_max; ++n) {
    const auto& prev = a.back();
    auto at = [&](long k) -> Polynomial {
      return k >= 0 && k < static_cast<long>(prev.size()) ? prev[static_cast<std::size_t>(k)] : Polynomial{};
    };
    std::vector<Polynomial> row(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) {
      Polynomial v = k == 0 ? Polynomial{} : at(k - 1);
      v += b[static_cast<std::size_t>(k)] * at(k);
      v += lam[static_cast<std::size_t>(k + 1)] * at(k + 1);
      row[static_cast<std::size_t>(k)] = std::move(v);
    }
    a.push_back(std::move(row));
  }
  return a;
}

/// The q-Hermite instance: b_k = 0, λ_k = [k]_q.
inline std::vector<std::vector<Polynomial>> q_hermite_triangle(long n_max) {
  return catalan_triangle([](long) { return Polynomial{}; },
                          [](long k) { return q_int(static_cast<std::size_t>(k)); }, n_max);
}

/// (2^{(n-k)/2}, 1^k)
inline IntegerPartition hermite_shape(long n, long k) {
  std::vector<int> parts(static_cast<std::size_t>((n - k) / 2), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return IntegerPartition(std::move(parts));
}

}  // namespace qsp
