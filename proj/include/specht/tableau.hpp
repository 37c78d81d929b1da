#pragma once

#include <map>
#include <utility>
#include <vector>

#include "specht/filter.hpp"
#include "specht/partition.hpp"

namespace specht {

/// Which label is repeated l times: 1 (head) or n (tail).
enum class Variant { head, tail };

/// A filling of a Young diagram of weight n+l-1 by the labels 1..n where the
/// special label (1 for head, n for tail) occurs l times, every other label
/// once, and no column holds the special label twice. Rows are stored as
/// given; entries need not be sorted (see column_standardize).
class Tableau {
 public:
  Tableau(Partition shape, int l, Variant variant,
          std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  int l() const { return l_; }
  Variant variant() const { return variant_; }
  /// Number of distinct labels, weight(shape) - l + 1.
  int n() const { return n_; }
  int special_label() const { return variant_ == Variant::head ? 1 : n_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int r, int c) const { return rows_[r - 1][c - 1]; }  // 1-based
  /// Column j (1-based), top to bottom.
  std::vector<int> column(int j) const;
  int column_count() const { return shape_.first(); }

  bool columns_sorted() const;
  /// Columns strictly increasing and rows weakly increasing.
  bool is_standard() const;

  /// Exponent vector (index i-1 holds the exponent of x_i) of the initial
  /// monomial of f_T under lex with x_1 smallest: each cell contributes
  /// (row - 1) to its label's variable. Requires a standard tableau.
  std::vector<int> initial_exponents() const;

  /// Row index of each non-special label. Requires sorted columns.
  std::map<int, int> label_rows() const;
  /// Row indices of the l copies of the special label, by column order.
  std::vector<int> special_rows() const;

  bool operator==(const Tableau&) const = default;
  std::string str() const;

 private:
  Partition shape_;
  int l_ = 1;
  Variant variant_ = Variant::head;
  int n_ = 1;
  std::vector<std::vector<int>> rows_;
};

/// Sorts every column increasingly; the sign is the parity of the
/// rearrangement, matching the alternating column factors of f_T.
std::pair<Tableau, int> column_standardize(const Tableau& t);

/// All standard tableaux of the given shape and variant, ordered by
/// row-reading word. Errors if shape_1 < l (the special label cannot
/// avoid a column collision).
std::vector<Tableau> enumerate_standard(int l, const Partition& shape,
                                        Variant variant);

/// Number of squares of a standard tail tableau lying above a copy of n.
int w_statistic(const Tableau& t);

/// Shape formed by the squares of a standard tail tableau holding labels
/// below n.
Partition shape_below_n(const Tableau& t);

/// One way of growing mu (weight n-1) by l bottom squares in distinct
/// columns; lambda is the grown shape and w the total number of squares
/// sitting above the new ones.
struct NSquareProfile {
  Partition lambda;
  Partition mu;
  std::vector<int> columns;
  int w = 0;
};

/// Every shape obtainable from mu by adding l bottom squares in distinct
/// columns, i.e. the shapes of standard tail tableaux T with sh_{<n}(T) = mu.
/// Ordered by lambda lex-decreasing.
std::vector<NSquareProfile> shapes_over(const Partition& mu, int n, int l);

/// The greedy (lexicographically maximal) element of
/// {rho in shapes_over(mu) : rho trianglelefteq lambda}; it dominates every
/// member and minimizes w over the set. Errors when the set is empty.
NSquareProfile min_w_shape(const Partition& lambda, const Partition& mu, int l);

/// The k-th shadow of a lower filter F of [P_{n+l-1}]_{>= l}: all mu of
/// weight n-1 reachable from F by some profile of weight-above at most k.
/// Returns a lower filter of P_{n-1}.
Filter filter_power(const Filter& f, int k);

}  // namespace specht
