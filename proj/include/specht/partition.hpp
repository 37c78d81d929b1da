#pragma once

#include <compare>
#include <vector>

#include "specht/common.hpp"

namespace specht {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition (weight 0) is a legal value; it shows up as the base
/// case of restriction arguments and as sh_{<n} of a one-row tail tableau.
class Partition {
 public:
  Partition() = default;
  /// Validating constructor: parts must be weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  /// Sorts descending and drops zeros, then validates.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part by 1-based row index; rows past the end have size 0.
  int part(int i) const;
  int first() const { return parts_.empty() ? 0 : parts_[0]; }

  /// Transpose of the Young diagram (column lengths).
  Partition conjugate() const;

  /// Adds one box to row i (1-based) and re-sorts, so adding to a row that
  /// would break monotonicity just bumps the count of (part value + 1).
  /// Any i > length() appends a new part 1.
  Partition add_box(int i) const;

  bool operator==(const Partition&) const = default;
  /// Lexicographic on the part vector; used only as a canonical tie-break.
  std::strong_ordering operator<=>(const Partition& o) const;

  std::string str() const;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Dominance: lam >= mu in the dominance order (prefix sums of lam weakly
/// exceed those of mu). Throws if the weights differ.
bool dominates(const Partition& lam, const Partition& mu);

/// Strict dominance lam > mu.
bool strictly_dominates(const Partition& lam, const Partition& mu);

/// lam covers mu in the dominance order: lam > mu with nothing in between.
/// Decided by scanning all partitions of the common weight.
bool covers(const Partition& lam, const Partition& mu);

/// True if moving one box from row i to row i' of lam yields mu, i.e. the
/// two-row pattern mu_i = lam_i - 1, mu_i' = lam_i' + 1, all other rows equal.
/// Every cover has this shape; not every such move is a cover.
bool one_box_drop(const Partition& lam, const Partition& mu);

/// All partitions of m whose first part is at least min_first, in
/// lex-decreasing order: (m) first, (1,1,...,1) last (if it qualifies).
std::vector<Partition> enumerate_partitions(int m, int min_first = 1);

/// Cached enumerate_partitions(m, 1).
const std::vector<Partition>& all_partitions(int m);

}  // namespace specht
