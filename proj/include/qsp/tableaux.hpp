#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsp/partitions.hpp"
#include "qsp/poly.hpp"

namespace qsp {

/// Strictly increasing set of positive integers (a column, a block, a pivot set).
class ColumnSet {
 public:
  ColumnSet() = default;
  ColumnSet(std::initializer_list<int> xs) : ColumnSet(std::vector<int>(xs)) {}

  explicit ColumnSet(std::vector<int> xs) : elems_(std::move(xs)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i] < 1) throw std::invalid_argument("column set entries must be positive");
      if (i > 0 && elems_[i] <= elems_[i - 1]) throw std::invalid_argument("column set must be strictly increasing");
    }
  }

  static ColumnSet from_unsorted(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    return ColumnSet(std::move(xs));
  }

  /// {1, ..., n}
  static ColumnSet range(int n) {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i) v.push_back(i);
    return ColumnSet(std::move(v));
  }

  const std::vector<int>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  int operator[](std::size_t i) const { return elems_[i]; }
  bool contains(int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }
  int max() const { return elems_.empty() ? 0 : elems_.back(); }

  /// [n] minus this set.
  ColumnSet complement_in(int n) const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
      if (!contains(i)) out.push_back(i);
    return ColumnSet(std::move(out));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(elems_[i]);
    }
    return s;
  }

  static ColumnSet parse(std::string_view text) {
    std::vector<int> v;
    if (text.empty()) return {};
    std::string tok;
    auto flush = [&] {
      std::size_t pos = 0;
      int x = 0;
      try {
        x = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (tok.empty() || pos != tok.size()) throw std::invalid_argument("malformed set: '" + std::string(text) + "'");
      v.push_back(x);
      tok.clear();
    };
    for (char ch : text) {
      if (ch == ',') flush();
      else if (ch != ' ') tok += ch;
    }
    flush();
    return from_unsorted(std::move(v));
  }

  friend auto operator<=>(const ColumnSet&, const ColumnSet&) = default;
  friend bool operator==(const ColumnSet&, const ColumnSet&) = default;

 private:
  std::vector<int> elems_;
};

/// β(C, C') = #{(c, c') : c < c', c ∈ C, c' ∈ C'}.
inline long beta(const ColumnSet& c, const ColumnSet& c_prime) {
  long count = 0;
  for (int x : c.elements())
    for (int y : c_prime.elements()) count += x < y ? 1 : 0;
  return count;
}

/// Visits every m-subset of [n] in lexicographic order.
template <class Visit>
void for_each_subset(int n, int m, Visit&& visit) {
  if (m < 0 || m > n) return;
  std::vector<int> cur(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    visit(ColumnSet(cur));
    int i = m - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - m + i + 1) --i;
    if (i < 0) return;
    ++cur[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < m; ++k) cur[static_cast<std::size_t>(k)] = cur[static_cast<std::size_t>(k - 1)] + 1;
  }
}

/// Tableau with distinct entries, rows increasing left to right and columns
/// increasing top to bottom. Support [n] makes it a standard Young tableau.
class Tableau {
 public:
  Tableau() = default;

  explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> lengths;
    for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
    shape_ = IntegerPartition(lengths);  // throws on ragged shapes
    std::set<int> seen;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        int v = rows_[i][j];
        if (v < 1) throw std::invalid_argument("tableau entries must be positive");
        if (!seen.insert(v).second) throw std::invalid_argument("tableau entries must be distinct");
        if (j > 0 && rows_[i][j - 1] >= v) throw std::invalid_argument("tableau rows must increase");
        if (i > 0 && rows_[i - 1][j] >= v) throw std::invalid_argument("tableau columns must increase");
      }
    }
  }

  const IntegerPartition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int num_rows() const { return shape_.length(); }
  int num_cols() const { return shape_.part(1); }
  int size() const { return shape_.size(); }

  /// 1-based entry T_{ij}.
  int at(int i, int j) const { return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }

  /// Entries of column j (1-based), top to bottom.
  ColumnSet column(int j) const {
    std::vector<int> v;
    for (const auto& r : rows_)
      if (static_cast<int>(r.size()) >= j) v.push_back(r[static_cast<std::size_t>(j - 1)]);
    return ColumnSet(std::move(v));
  }

  ColumnSet first_column() const { return column(1); }
  ColumnSet last_column() const { return num_cols() == 0 ? ColumnSet{} : column(num_cols()); }

  ColumnSet support() const {
    std::vector<int> v;
    for (const auto& r : rows_) v.insert(v.end(), r.begin(), r.end());
    return ColumnSet::from_unsorted(std::move(v));
  }

  /// Drops the first column.
  Tableau without_first_column() const {
    std::vector<std::vector<int>> out;
    for (const auto& r : rows_)
      if (r.size() > 1) out.emplace_back(r.begin() + 1, r.end());
    return Tableau(std::move(out));
  }

  /// Rows separated by '/', entries by ','. Digit shorthand when every entry is below 10.
  std::string to_string(bool allow_shorthand = true) const {
    bool shorthand = allow_shorthand;
    for (const auto& r : rows_)
      for (int v : r) shorthand = shorthand && v < 10;
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) s += '/';
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (j && !shorthand) s += ',';
        s += std::to_string(rows_[i][j]);
      }
    }
    // a trailing comma keeps single-column tableaux with large entries in comma mode
    if (!shorthand && num_cols() == 1) s += ',';
    return s;
  }

  /// Parses "1,2,9/3,6/5,8"; without any comma each character is one digit entry ("129/36/58").
  static Tableau parse(std::string_view text) {
    std::vector<std::vector<int>> rows;
    if (text.empty()) return {};
    const bool comma_mode = text.find(',') != std::string_view::npos;
    std::vector<int> row;
    std::string tok;
    auto flush_tok = [&] {
      if (tok.empty()) return;
      std::size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size()) throw std::invalid_argument("malformed tableau entry '" + tok + "'");
      row.push_back(v);
      tok.clear();
    };
    for (char ch : text) {
      if (ch == ' ') continue;
      if (ch == '/') {
        flush_tok();
        if (row.empty()) throw std::invalid_argument("malformed tableau: empty row in '" + std::string(text) + "'");
        rows.push_back(std::move(row));
        row.clear();
      } else if (comma_mode) {
        if (ch == ',') flush_tok();
        else tok += ch;
      } else {
        if (ch < '0' || ch > '9') throw std::invalid_argument("malformed tableau: unexpected '" + std::string(1, ch) + "'");
        row.push_back(ch - '0');
      }
    }
    flush_tok();
    if (row.empty()) throw std::invalid_argument("malformed tableau: empty row in '" + std::string(text) + "'");
    rows.push_back(std::move(row));
    return Tableau(std::move(rows));
  }

  friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }
  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }

  friend std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << t.to_string(); }

 private:
  std::vector<std::vector<int>> rows_;
  IntegerPartition shape_;
};

/// How generate_tableaux draws entries.
struct SupportMode {
  enum class Kind { exact, subset_of_range };
  Kind kind = Kind::exact;
  ColumnSet exact_support;
  int n = 0;

  static SupportMode exact(ColumnSet s) { return {Kind::exact, std::move(s), 0}; }
  static SupportMode subset_of(int n) { return {Kind::subset_of_range, {}, n}; }
};

namespace detail {

struct TableauFiller {
  const IntegerPartition& shape;
  std::vector<int> pool;  // sorted candidate values
  std::vector<bool> used;
  std::vector<std::vector<int>> rows;
  std::vector<Cell> order;  // row-major cells

  template <class Visit>
  void fill(std::size_t k, Visit& visit) {
    if (k == order.size()) {
      visit(Tableau(rows));
      return;
    }
    const Cell c = order[k];
    const std::size_t remaining_after = order.size() - k - 1;
    int lower = 0;
    if (c.col > 1) lower = std::max(lower, rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 2)]);
    if (c.row > 1) lower = std::max(lower, rows[static_cast<std::size_t>(c.row - 2)][static_cast<std::size_t>(c.col - 1)]);
    std::size_t unused_left = 0;
    for (bool u : used) unused_left += u ? 0 : 1;
    for (std::size_t idx = 0; idx < pool.size(); ++idx) {
      if (used[idx] || pool[idx] <= lower) continue;
      if (unused_left - 1 < remaining_after) return;
      used[idx] = true;
      rows[static_cast<std::size_t>(c.row - 1)].push_back(pool[idx]);
      fill(k + 1, visit);
      rows[static_cast<std::size_t>(c.row - 1)].pop_back();
      used[idx] = false;
    }
  }
};

}  // namespace detail

/// Visits each multilinear tableau of the given shape exactly once, in
/// lexicographic order of the row-concatenated entry sequence.
template <class Visit>
void for_each_tableau(const IntegerPartition& shape, const SupportMode& mode, Visit&& visit) {
  detail::TableauFiller f{shape, {}, {}, {}, {}};
  if (mode.kind == SupportMode::Kind::exact) {
    if (mode.exact_support.size() != shape.size())
      throw std::invalid_argument("exact support size " + std::to_string(mode.exact_support.size()) +
                                  " differs from shape size " + std::to_string(shape.size()));
    f.pool = mode.exact_support.elements();
  } else {
    if (mode.n < shape.size()) throw std::invalid_argument("subset mode requires n >= |shape|");
    for (int i = 1; i <= mode.n; ++i) f.pool.push_back(i);
  }
  f.used.assign(f.pool.size(), false);
  f.rows.assign(static_cast<std::size_t>(shape.length()), {});
  for (int i = 1; i <= shape.length(); ++i)
    for (int j = 1; j <= shape.part(i); ++j) f.order.push_back({i, j});
  f.fill(0, visit);
}

inline std::vector<Tableau> generate_tableaux(const IntegerPartition& shape, const SupportMode& mode) {
  std::vector<Tableau> out;
  for_each_tableau(shape, mode, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

/// Standard Young tableaux of the shape (support [|shape|]).
template <class Visit>
void for_each_syt(const IntegerPartition& shape, Visit&& visit) {
  for_each_tableau(shape, SupportMode::exact(ColumnSet::range(shape.size())), visit);
}

/// f_λ, by generation.
inline BigInt count_syt(const IntegerPartition& shape) {
  BigInt n = 0;
  for_each_syt(shape, [&](const Tableau&) { ++n; });
  return n;
}

/// c_{ij}(T) = #{i' >= i : T_{i',j-1} < T_{ij}} for every cell with j >= 2.
inline std::map<Cell, int> c_matrix(const Tableau& t) {
  std::map<Cell, int> out;
  for (int i = 1; i <= t.num_rows(); ++i) {
    for (int j = 2; j <= t.shape().part(i); ++j) {
      int count = 0;
      for (int ip = i; ip <= t.num_rows() && t.shape().part(ip) >= j - 1; ++ip) count += t.at(ip, j - 1) < t.at(i, j) ? 1 : 0;
      out[{i, j}] = count;
    }
  }
  return out;
}

struct CWeight {
  BigInt count;       ///< c(T)
  Polynomial weight;  ///< c_q(T)
};

inline CWeight c_weight(const Tableau& t) {
  CWeight w{1, Polynomial(1)};
  for (const auto& [cell, c] : c_matrix(t)) {
    w.count *= c;
    w.weight *= q_int(static_cast<std::size_t>(c));
  }
  return w;
}

/// γ_n(T) = β(last column of T, [n] - supp(T)).
inline long gamma_n(const Tableau& t, int n) {
  ColumnSet supp = t.support();
  if (!supp.empty() && supp.max() > n) throw std::invalid_argument("tableau support is not contained in [n]");
  return beta(t.last_column(), supp.complement_in(n));
}

}  // namespace qsp
