#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsp/poly.hpp"
#include "qsp/setpart.hpp"
#include "qsp/tableaux.hpp"

namespace qsp {

enum class Step { NE, SE };

/// Path of NE/SE steps that never drops below its starting level.
class PrefixDyckPath {
 public:
  PrefixDyckPath() = default;

  explicit PrefixDyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    long level = 0;
    for (Step s : steps_) {
      level += s == Step::NE ? 1 : -1;
      if (level < 0) throw std::invalid_argument("prefix Dyck path goes below the axis");
    }
  }

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }

  long final_level() const {
    long level = 0;
    for (Step s : steps_) level += s == Step::NE ? 1 : -1;
    return level;
  }

  bool is_dyck() const { return final_level() == 0; }

  std::string to_string() const {
    std::string s;
    for (Step st : steps_) s += st == Step::NE ? 'U' : 'D';
    return s;
  }

  friend bool operator==(const PrefixDyckPath&, const PrefixDyckPath&) = default;

 private:
  std::vector<Step> steps_;
};

/// Step j is NE when j lies in the first row of a standard tableau with at most two rows.
inline PrefixDyckPath path_of_tableau(const Tableau& t) {
  if (t.num_rows() > 2) throw std::invalid_argument("path_of_tableau needs at most two rows");
  const int n = t.size();
  if (t.support() != ColumnSet::range(n)) throw std::invalid_argument("path_of_tableau needs a standard tableau");
  std::vector<Step> steps(static_cast<std::size_t>(n), Step::NE);
  if (t.num_rows() == 2)
    for (int v : t.rows()[1]) steps[static_cast<std::size_t>(v - 1)] = Step::SE;
  return PrefixDyckPath(std::move(steps));
}

inline Tableau tableau_of_path(const PrefixDyckPath& p) {
  std::vector<int> top, bottom;
  for (std::size_t j = 0; j < p.length(); ++j) (p.steps()[j] == Step::NE ? top : bottom).push_back(static_cast<int>(j + 1));
  std::vector<std::vector<int>> rows;
  if (!top.empty()) rows.push_back(std::move(top));
  if (!bottom.empty()) rows.push_back(std::move(bottom));
  return Tableau(std::move(rows));
}

namespace detail {

/// Relabels a partition of a contiguous range lo..hi as a partition of 1..(hi-lo+1).
inline SetPartition shift_partition(const SetPartition& a, int offset) {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : a.blocks()) {
    std::vector<int> nb;
    for (int x : b.elements()) nb.push_back(x + offset);
    blocks.push_back(std::move(nb));
  }
  return SetPartition(std::move(blocks));
}

}  // namespace detail

struct ThetaResult {
  Tableau tableau;
  int interlacings = 0;
};

/// Θ: a two-block partition of [r+s] with sizes r > s and i interlacings goes
/// to a standard tableau of shape (r+i, s-i).
inline ThetaResult theta(const SetPartition& a) {
  if (a.num_blocks() != 2) throw std::invalid_argument("theta needs a partition with exactly two blocks");
  const IntegerPartition shape = a.shape();
  if (shape.part(1) == shape.part(2)) throw std::invalid_argument("theta needs block sizes r > s");
  const int n = shape.size();
  if (a.support() != ColumnSet::range(n)) throw std::invalid_argument("theta needs a partition of [n]");

  const auto arcs_a = arcs_of(a.blocks()[0]);
  const auto arcs_b = arcs_of(a.blocks()[1]);
  // Cut after 2j whenever the j-th arcs cross; everything up to there is [2j].
  std::vector<int> cuts;
  const std::size_t common = std::min(arcs_a.size(), arcs_b.size());
  for (std::size_t j = 0; j < common; ++j)
    if (crosses(arcs_a[j], arcs_b[j])) cuts.push_back(2 * static_cast<int>(j + 1));
  const int i = static_cast<int>(cuts.size());

  std::vector<Step> steps;
  int lo = 1;
  for (int seg = 0; seg <= i; ++seg) {
    const int hi = seg < i ? cuts[static_cast<std::size_t>(seg)] : n;
    std::vector<std::vector<int>> blocks;
    for (const auto& b : a.blocks()) {
      std::vector<int> part;
      for (int x : b.elements())
        if (x >= lo && x <= hi) part.push_back(x - lo + 1);
      if (!part.empty()) blocks.push_back(std::move(part));
    }
    PrefixDyckPath path = path_of_tableau(tableau_of(SetPartition(std::move(blocks))));
    std::vector<Step> seg_steps = path.steps();
    if (seg < i) seg_steps.back() = Step::NE;  // last SE of each closed Dyck path
    steps.insert(steps.end(), seg_steps.begin(), seg_steps.end());
    lo = hi + 1;
  }
  return {tableau_of_path(PrefixDyckPath(std::move(steps))), i};
}

/// Inverse of Θ given the recorded number of interlacings.
inline SetPartition theta_inverse(const Tableau& t, int interlacings) {
  if (interlacings < 0) throw std::invalid_argument("interlacing count must be nonnegative");
  PrefixDyckPath path = path_of_tableau(t);
  const long r_minus_s = path.final_level() - 2L * interlacings;
  if (r_minus_s <= 0)
    throw std::invalid_argument("tableau shape is inconsistent with " + std::to_string(interlacings) +
                                " interlacings (needs r > s)");
  std::vector<Step> steps = path.steps();

  // For level 2j, the cut sits after the right-most NE step from 2j-1 to 2j.
  std::vector<std::size_t> cut_after;
  for (int j = 1; j <= interlacings; ++j) {
    long level = 0;
    std::size_t found = steps.size();
    for (std::size_t k = 0; k < steps.size(); ++k) {
      long next = level + (steps[k] == Step::NE ? 1 : -1);
      if (steps[k] == Step::NE && level == 2 * j - 1 && next == 2 * j) found = k;
      level = next;
    }
    if (found == steps.size() || (!cut_after.empty() && found <= cut_after.back()))
      throw std::invalid_argument("no valid cut point for level " + std::to_string(2 * j));
    cut_after.push_back(found);
  }

  std::vector<SetPartition> segments;
  std::size_t start = 0;
  for (int seg = 0; seg <= interlacings; ++seg) {
    const std::size_t end = seg < interlacings ? cut_after[static_cast<std::size_t>(seg)] + 1 : steps.size();
    std::vector<Step> seg_steps(steps.begin() + static_cast<long>(start), steps.begin() + static_cast<long>(end));
    if (seg < interlacings) seg_steps.back() = Step::SE;
    PrefixDyckPath seg_path(seg_steps);
    if (seg < interlacings && !seg_path.is_dyck())
      throw std::invalid_argument("segment " + std::to_string(seg + 1) + " is not a Dyck path");
    segments.push_back(detail::shift_partition(canonical_noninterlacing(tableau_of_path(seg_path)),
                                               static_cast<int>(start)));
    start = end;
  }

  // Reattach: the block holding a segment's largest element continues into
  // the next segment's block with the larger least element (a missing block
  // counts as having least element at infinity).
  std::vector<int> x = segments[0].blocks()[0].elements();
  std::vector<int> y = segments[0].num_blocks() > 1 ? segments[0].blocks()[1].elements() : std::vector<int>{};
  for (std::size_t s = 1; s < segments.size(); ++s) {
    const auto& nb = segments[s].blocks();
    std::vector<int> small = nb[0].elements();
    std::vector<int> large = nb.size() > 1 ? nb[1].elements() : std::vector<int>{};
    const bool x_has_max = !x.empty() && (y.empty() || x.back() > y.back());
    auto& with_max = x_has_max ? x : y;
    auto& other = x_has_max ? y : x;
    with_max.insert(with_max.end(), large.begin(), large.end());
    other.insert(other.end(), small.begin(), small.end());
  }
  std::vector<std::vector<int>> blocks;
  if (!x.empty()) blocks.push_back(std::move(x));
  if (!y.empty()) blocks.push_back(std::move(y));
  return SetPartition(std::move(blocks));
}

/// I(n) = I(n-1) + (n-1) I(n-2).
inline BigInt involution_count(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  BigInt prev = 1, cur = 1;
  for (int k = 2; k <= n; ++k) {
    BigInt next = cur + BigInt(k - 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace qsp
