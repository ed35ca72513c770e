#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsp/partitions.hpp"
#include "qsp/tableaux.hpp"

namespace qsp {

/// Set partition in standard notation: each block increasing, blocks ordered
/// by least element.
class SetPartition {
 public:
  SetPartition() = default;

  SetPartition(std::initializer_list<std::vector<int>> blocks) : SetPartition(std::vector<std::vector<int>>(blocks)) {}

  explicit SetPartition(std::vector<std::vector<int>> blocks) {
    std::set<int> seen;
    for (auto& b : blocks) {
      if (b.empty()) throw std::invalid_argument("set partition blocks must be nonempty");
      for (int x : b)
        if (!seen.insert(x).second) throw std::invalid_argument("set partition blocks must be disjoint");
      blocks_.push_back(ColumnSet::from_unsorted(std::move(b)));
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const ColumnSet& a, const ColumnSet& b) { return a[0] < b[0]; });
  }

  const std::vector<ColumnSet>& blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }

  IntegerPartition shape() const {
    std::vector<int> sizes;
    for (const auto& b : blocks_) sizes.push_back(b.size());
    return IntegerPartition::from_unsorted(std::move(sizes));
  }

  ColumnSet support() const {
    std::vector<int> v;
    for (const auto& b : blocks_) v.insert(v.end(), b.elements().begin(), b.elements().end());
    return ColumnSet::from_unsorted(std::move(v));
  }

  /// "1,2|3,8,9|5,6", or the digit shorthand "12|389|56" when every element is below 10.
  std::string to_string(bool allow_shorthand = true) const {
    bool shorthand = allow_shorthand;
    for (const auto& b : blocks_) shorthand = shorthand && b.max() < 10;
    std::string s;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i) s += '|';
      for (std::size_t j = 0; j < static_cast<std::size_t>(blocks_[i].size()); ++j) {
        if (j && !shorthand) s += ',';
        s += std::to_string(blocks_[i][j]);
      }
    }
    bool all_singletons = std::all_of(blocks_.begin(), blocks_.end(), [](const ColumnSet& b) { return b.size() == 1; });
    if (!shorthand && all_singletons && !blocks_.empty()) s += ',';
    return s;
  }

  /// Parses the text form; input must already be in standard notation.
  static SetPartition parse(std::string_view text) {
    if (text.empty()) return {};
    const bool comma_mode = text.find(',') != std::string_view::npos;
    std::vector<std::vector<int>> raw;
    std::vector<int> block;
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
      if (pos != tok.size()) throw std::invalid_argument("malformed set partition element '" + tok + "'");
      block.push_back(v);
      tok.clear();
    };
    auto flush_block = [&] {
      flush_tok();
      if (block.empty()) throw std::invalid_argument("malformed set partition: empty block in '" + std::string(text) + "'");
      raw.push_back(std::move(block));
      block.clear();
    };
    for (char ch : text) {
      if (ch == ' ') continue;
      if (ch == '|') {
        flush_block();
      } else if (comma_mode) {
        if (ch == ',') flush_tok();
        else tok += ch;
      } else {
        if (ch < '0' || ch > '9') throw std::invalid_argument("malformed set partition: unexpected '" + std::string(1, ch) + "'");
        block.push_back(ch - '0');
      }
    }
    flush_block();
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (!std::is_sorted(raw[i].begin(), raw[i].end()) || (i > 0 && raw[i].front() < raw[i - 1].front())) {
        SetPartition normalized(raw);
        throw std::invalid_argument("set partition not in standard notation; write it as " + normalized.to_string());
      }
    }
    return SetPartition(std::move(raw));
  }

  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;

  friend std::ostream& operator<<(std::ostream& os, const SetPartition& a) { return os << a.to_string(); }

 private:
  std::vector<ColumnSet> blocks_;
};

/// An arc (left, right) with right possibly at infinity.
struct Arc {
  static constexpr int kInfinity = INT_MAX;
  int left = 0;
  int right = kInfinity;

  bool at_infinity() const { return right == kInfinity; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Neither nested nor disjoint. Two arcs ending at infinity never cross.
inline bool crosses(const Arc& x, const Arc& y) {
  auto strict = [](const Arc& a, const Arc& b) {
    return a.left < b.left && b.left < a.right && a.right < b.right;
  };
  return strict(x, y) || strict(y, x);
}

/// arc_j(A) for j = 1..|A|; the last arc runs to infinity.
inline std::vector<Arc> arcs_of(const ColumnSet& block) {
  std::vector<Arc> out;
  const auto& e = block.elements();
  for (std::size_t j = 0; j < e.size(); ++j) out.push_back({e[j], j + 1 < e.size() ? e[j + 1] : Arc::kInfinity});
  return out;
}

/// v(A): pairs of same-index arcs from distinct blocks that cross.
inline int interlacing_number(const SetPartition& a) {
  std::vector<std::vector<Arc>> arcs;
  for (const auto& b : a.blocks()) arcs.push_back(arcs_of(b));
  int v = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t k = i + 1; k < arcs.size(); ++k) {
      std::size_t common = std::min(arcs[i].size(), arcs[k].size());
      for (std::size_t j = 0; j < common; ++j) v += crosses(arcs[i][j], arcs[k][j]) ? 1 : 0;
    }
  return v;
}

/// The tableau whose j-th column holds the j-th smallest elements of the
/// blocks, sorted and top-justified.
inline Tableau tableau_of(const SetPartition& a) {
  int width = 0;
  for (const auto& b : a.blocks()) width = std::max(width, b.size());
  std::vector<std::vector<int>> columns(static_cast<std::size_t>(width));
  for (const auto& b : a.blocks())
    for (int j = 0; j < b.size(); ++j) columns[static_cast<std::size_t>(j)].push_back(b[static_cast<std::size_t>(j)]);
  std::vector<std::vector<int>> rows;
  for (auto& col : columns) {
    std::sort(col.begin(), col.end());
    if (rows.size() < col.size()) rows.resize(col.size());
    for (std::size_t i = 0; i < col.size(); ++i) rows[i].push_back(col[i]);
  }
  return Tableau(std::move(rows));
}

namespace detail {

/// Maps α: second column -> first column with α(c) < c, injective; targets
/// assigned in increasing order of the second-column entries, each scanned
/// in increasing order.
template <class Visit>
void for_each_first_arc_map(const ColumnSet& first, const ColumnSet& second, Visit&& visit) {
  std::vector<int> alpha(static_cast<std::size_t>(second.size()));
  std::vector<bool> used(static_cast<std::size_t>(first.size()), false);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == alpha.size()) {
      visit(alpha, used);
      return;
    }
    for (std::size_t t = 0; t < used.size() && first[t] < second[k]; ++t) {
      if (used[t]) continue;
      used[t] = true;
      alpha[k] = first[t];
      self(self, k + 1);
      used[t] = false;
    }
  };
  rec(rec, 0);
}

/// Φ^{-1}(α, Ã): prepend α(c̃) to the block of Ã led by c̃; unused first-column
/// entries become singletons.
inline SetPartition attach_first_column(const ColumnSet& first, const ColumnSet& second, const std::vector<int>& alpha,
                                        const std::vector<bool>& used, const SetPartition& rest) {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : rest.blocks()) {
    auto it = std::lower_bound(second.elements().begin(), second.elements().end(), b[0]);
    std::vector<int> nb{alpha[static_cast<std::size_t>(it - second.elements().begin())]};
    nb.insert(nb.end(), b.elements().begin(), b.elements().end());
    blocks.push_back(std::move(nb));
  }
  for (std::size_t t = 0; t < used.size(); ++t)
    if (!used[t]) blocks.push_back({first[t]});
  return SetPartition(std::move(blocks));
}

inline SetPartition singletons(const ColumnSet& s) {
  std::vector<std::vector<int>> blocks;
  for (int x : s.elements()) blocks.push_back({x});
  return SetPartition(std::move(blocks));
}

}  // namespace detail

inline std::vector<SetPartition> fibre(const Tableau& t);

/// Visits every set partition in the fibre of tableau_of over t, once each.
template <class Visit>
void fibre_generate(const Tableau& t, Visit&& visit) {
  if (t.num_cols() <= 1) {
    visit(detail::singletons(t.support()));
    return;
  }
  const ColumnSet first = t.first_column();
  const ColumnSet second = t.column(2);
  const std::vector<SetPartition> rest = fibre(t.without_first_column());
  detail::for_each_first_arc_map(first, second, [&](const std::vector<int>& alpha, const std::vector<bool>& used) {
    for (const auto& r : rest) visit(detail::attach_first_column(first, second, alpha, used, r));
  });
}

inline std::vector<SetPartition> fibre(const Tableau& t) {
  std::vector<SetPartition> out;
  fibre_generate(t, [&](const SetPartition& a) { out.push_back(a); });
  return out;
}

/// The unique fibre element with interlacing number zero: every first-arc
/// choice takes the largest eligible target.
inline SetPartition canonical_noninterlacing(const Tableau& t) {
  if (t.num_cols() <= 1) return detail::singletons(t.support());
  const ColumnSet first = t.first_column();
  const ColumnSet second = t.column(2);
  std::vector<int> alpha(static_cast<std::size_t>(second.size()));
  std::vector<bool> used(static_cast<std::size_t>(first.size()), false);
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    std::size_t pick = used.size();
    for (std::size_t t_idx = 0; t_idx < used.size() && first[t_idx] < second[k]; ++t_idx)
      if (!used[t_idx]) pick = t_idx;
    used[pick] = true;  // a tableau always leaves at least one eligible target
    alpha[k] = first[pick];
  }
  return detail::attach_first_column(first, second, alpha, used, canonical_noninterlacing(t.without_first_column()));
}

/// Every partition of s with shape lambda: tableaux of the shape, then their fibres.
template <class Visit>
void enumerate_by_shape(const ColumnSet& s, const IntegerPartition& lambda, Visit&& visit) {
  if (s.size() != lambda.size()) throw std::invalid_argument("|S| must equal |lambda|");
  for_each_tableau(lambda, SupportMode::exact(s), [&](const Tableau& t) { fibre_generate(t, visit); });
}

/// Every partition of s into exactly k blocks, via restricted growth strings.
/// Independent of the tableau machinery.
template <class Visit>
void for_each_set_partition_into(const ColumnSet& s, int k, Visit&& visit) {
  const std::size_t n = static_cast<std::size_t>(s.size());
  if (k < 0) return;
  const std::size_t target = static_cast<std::size_t>(k);
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (blocks.size() + (n - i) < target) return;
    if (i == n) {
      visit(SetPartition(blocks));
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(s[i]);
      self(self, i + 1);
      blocks[b].pop_back();
    }
    if (blocks.size() < target) {
      blocks.push_back({s[i]});
      self(self, i + 1);
      blocks.pop_back();
    }
  };
  rec(rec, 0);
}

/// Every partition of s.
template <class Visit>
void for_each_set_partition(const ColumnSet& s, Visit&& visit) {
  for (int k = 0; k <= s.size(); ++k) for_each_set_partition_into(s, k, visit);
}

}  // namespace qsp
