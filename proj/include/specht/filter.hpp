#pragma once

#include <vector>

#include "specht/partition.hpp"

namespace specht {

/// A lower or upper filter (down-set / up-set) of the dominance poset
/// [P_{n+l-1}]_{>= l}, the partitions of n+l-1 whose first part is at least l.
/// Stored by its frontier antichain: maximal elements for a lower filter,
/// minimal elements for an upper filter.
class Filter {
 public:
  enum class Kind { lower, upper };

  Filter() = default;
  /// Frontier elements must lie in the poset; dominated duplicates are pruned
  /// so the stored frontier is an antichain.
  Filter(int n, int l, Kind kind, std::vector<Partition> frontier);

  /// The principal lower filter {mu : mu trianglelefteq p}.
  static Filter principal_lower(int n, int l, const Partition& p);
  /// Builds a filter of the given kind from an explicit member list.
  static Filter from_members(int n, int l, Kind kind,
                             const std::vector<Partition>& members);

  int n() const { return n_; }
  int l() const { return l_; }
  /// Weight of the partitions in the ambient poset, n + l - 1.
  int weight() const { return n_ + l_ - 1; }
  Kind kind() const { return kind_; }
  const std::vector<Partition>& frontier() const { return frontier_; }
  bool empty() const { return frontier_.empty(); }

  bool contains(const Partition& p) const;
  /// All members, in lex-decreasing order.
  std::vector<Partition> members() const;
  /// The poset complement, which has the opposite kind.
  Filter complement() const;

  /// Restriction along add_box: {mu of weight m-1 : mu + <i> in F}, with the
  /// same first-part threshold l. Preserves kind for lower filters; only
  /// lower filters are supported since that is the only use.
  Filter restrict_add_box(int i) const;

  bool operator==(const Filter&) const = default;
  std::string str() const;

 private:
  int n_ = 1;
  int l_ = 1;
  Kind kind_ = Kind::lower;
  std::vector<Partition> frontier_;
};

/// Every member of the ambient poset [P_{n+l-1}]_{>= l}, lex-decreasing.
std::vector<Partition> poset_elements(int n, int l);

/// All lower filters of the poset, the empty one first, the full one last,
/// ordered by (member count, member list). proper_only drops those two.
std::vector<Filter> all_lower_filters(int n, int l, bool proper_only = false);

}  // namespace specht
