#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsp {

/// A cell of a Young diagram, 1-based (row, column).
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer partition: weakly decreasing positive parts.
class IntegerPartition {
 public:
  IntegerPartition() = default;

  IntegerPartition(std::initializer_list<int> parts) : IntegerPartition(std::vector<int>(parts)) {}

  explicit IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  /// Sorts arbitrary positive sizes into a partition.
  static IntegerPartition from_unsorted(std::vector<int> sizes) {
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return IntegerPartition(std::move(sizes));
  }

  /// (part^times)
  static IntegerPartition rectangle(int part, int times) {
    if (part <= 0 || times <= 0) return {};
    return IntegerPartition(std::vector<int>(static_cast<std::size_t>(times), part));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }

  /// 1-based part access; 0 beyond the length.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

  IntegerPartition conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return {};
    out.reserve(static_cast<std::size_t>(parts_.front()));
    for (int j = 1; j <= parts_.front(); ++j) {
      int count = 0;
      for (int p : parts_) count += p >= j ? 1 : 0;
      out.push_back(count);
    }
    return IntegerPartition(std::move(out));
  }

  /// Removable cells, top row first.
  std::vector<Cell> removable_cells() const {
    std::vector<Cell> cells;
    for (int i = 1; i <= length(); ++i) {
      if (part(i) > part(i + 1)) cells.push_back({i, part(i)});
    }
    return cells;
  }

  IntegerPartition without_cell(Cell c) const {
    std::vector<int> p = parts_;
    auto& v = p.at(static_cast<std::size_t>(c.row - 1));
    if (v != c.col || part(c.row + 1) == c.col) throw std::invalid_argument("cell is not removable");
    --v;
    if (v == 0) p.pop_back();
    return IntegerPartition(std::move(p));
  }

  /// Parts after removing the first one, (λ_2, λ_3, ...).
  IntegerPartition tail() const {
    if (parts_.empty()) return {};
    return IntegerPartition(std::vector<int>(parts_.begin() + 1, parts_.end()));
  }

  /// Comma-separated parts; the empty partition renders as "".
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  static IntegerPartition parse(std::string_view text) {
    std::vector<int> parts;
    std::string tok;
    auto flush = [&] {
      if (tok.empty()) throw std::invalid_argument("malformed partition: empty part in '" + std::string(text) + "'");
      std::size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size()) throw std::invalid_argument("malformed partition: bad part '" + tok + "'");
      parts.push_back(v);
      tok.clear();
    };
    if (text.empty()) return {};
    for (char ch : text) {
      if (ch == ',') {
        flush();
      } else if (ch != ' ') {
        tok += ch;
      }
    }
    flush();
    return IntegerPartition(std::move(parts));
  }

  friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;
  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntegerPartition& p) {
    return os << '(' << p.to_string() << ')';
  }

 private:
  std::vector<int> parts_;
};

/// Optional restriction for enumerate_partitions.
struct PartitionConstraint {
  enum class Kind { none, exact_length, first_part };
  Kind kind = Kind::none;
  int value = 0;

  static PartitionConstraint none() { return {}; }
  static PartitionConstraint exact_length(int m) { return {Kind::exact_length, m}; }
  static PartitionConstraint first_part(int m) { return {Kind::first_part, m}; }
};

namespace detail {

template <class Visit>
void partitions_rec(int remaining, int max_part, std::vector<int>& cur, const PartitionConstraint& c,
                    Visit& visit) {
  if (remaining == 0) {
    if (c.kind == PartitionConstraint::Kind::exact_length && static_cast<int>(cur.size()) != c.value) return;
    visit(IntegerPartition(cur));
    return;
  }
  if (c.kind == PartitionConstraint::Kind::exact_length) {
    int slots = c.value - static_cast<int>(cur.size());
    // need slots parts, each <= max_part, summing to remaining
    if (slots <= 0 || remaining < slots || static_cast<long>(slots) * max_part < remaining) return;
  }
  int top = std::min(remaining, max_part);
  if (cur.empty() && c.kind == PartitionConstraint::Kind::first_part) {
    if (c.value > remaining || c.value < 1) return;
    cur.push_back(c.value);
    partitions_rec(remaining - c.value, c.value, cur, c, visit);
    cur.pop_back();
    return;
  }
  for (int part = top; part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, c, visit);
    cur.pop_back();
  }
}

}  // namespace detail

/// Visits every partition of n meeting the constraint once, in
/// reverse-lexicographic order.
template <class Visit>
void for_each_partition(int n, PartitionConstraint constraint, Visit&& visit) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n == 0) {
    bool ok = constraint.kind == PartitionConstraint::Kind::none ||
              (constraint.kind == PartitionConstraint::Kind::exact_length && constraint.value == 0) ||
              (constraint.kind == PartitionConstraint::Kind::first_part && constraint.value == 0);
    if (ok) visit(IntegerPartition{});
    return;
  }
  std::vector<int> cur;
  detail::partitions_rec(n, n, cur, constraint, visit);
}

inline std::vector<IntegerPartition> enumerate_partitions(int n,
                                                          PartitionConstraint constraint = PartitionConstraint::none()) {
  std::vector<IntegerPartition> out;
  for_each_partition(n, constraint, [&](const IntegerPartition& p) { out.push_back(p); });
  return out;
}

/// Σ_i (i-1)(λ_i - 1).
inline int row_weight(const IntegerPartition& lambda) {
  int s = 0;
  for (int i = 1; i <= lambda.length(); ++i) s += (i - 1) * (lambda.part(i) - 1);
  return s;
}

/// Σ_{j>=2} binomial(μ_j, 2).
inline int tail_pair_weight(const IntegerPartition& mu) {
  int s = 0;
  for (int j = 2; j <= mu.length(); ++j) s += mu.part(j) * (mu.part(j) - 1) / 2;
  return s;
}

/// Σ_{j>=2} μ_j.
inline int tail_sum(const IntegerPartition& mu) { return mu.size() - mu.part(1); }

}  // namespace qsp
