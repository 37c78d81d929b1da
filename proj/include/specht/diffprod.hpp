#pragma once

#include <map>
#include <utility>
#include <vector>

#include "specht/poly.hpp"

namespace specht {

/// A signed product of difference factors (x_i - x_j) with i < j, kept in
/// factored form: a multiset of index pairs plus a sign. Specht and mixed
/// generators all have this shape, which makes divisibility, lcm, and
/// vanishing checks exact combinatorial operations instead of polynomial
/// arithmetic.
class DiffProduct {
 public:
  using Factor = std::pair<int, int>;  // 1-based variable indices, first < second

  DiffProduct() = default;  // the constant 1

  /// Delta of a label sequence: product of (x_a - x_b) over positions a
  /// before b. Sorting the sequence flips the sign by the inversion parity.
  /// Repeated labels are rejected (the product would be zero).
  static DiffProduct of_sequence(const std::vector<int>& labels);
  /// Delta over several column sequences multiplied together.
  static DiffProduct of_columns(const std::vector<std::vector<int>>& cols);
  /// Delta_m = Delta(1, 2, ..., m).
  static DiffProduct delta(int m);

  int sign() const { return sign_; }
  const std::map<Factor, int>& factors() const { return factors_; }
  int degree() const { return degree_; }
  bool is_constant() const { return factors_.empty(); }
  /// Largest variable index mentioned, 0 for the constant.
  int max_index() const;

  DiffProduct operator*(const DiffProduct& o) const;
  /// Factor-wise max multiplicity; the resulting sign is +1.
  static DiffProduct lcm(const DiffProduct& a, const DiffProduct& b);
  /// Multiset containment, i.e. divisibility of the expanded polynomials.
  bool divides(const DiffProduct& o) const;
  /// The complementary factor list; requires divides(o).
  DiffProduct quotient_of(const DiffProduct& o) const;
  /// Equal factor multisets, ignoring sign.
  bool same_factors(const DiffProduct& o) const { return factors_ == o.factors_; }

  bool operator==(const DiffProduct& o) const = default;
  std::strong_ordering operator<=>(const DiffProduct& o) const = default;

  /// True exactly when the expanded polynomial vanishes under x_i -> t_{cls[i-1]}:
  /// some factor joins two coordinates of the same class. Exactness relies on
  /// the coefficient field being infinite.
  bool vanishes_on(const std::vector<int>& cls) const;

  template <class K>
  Polynomial<K> expand() const {
    Polynomial<K> p{K(sign_)};
    for (const auto& [f, mult] : factors_) {
      Polynomial<K> lin = Polynomial<K>::difference(f.first, f.second);
      for (int k = 0; k < mult; ++k) p = p * lin;
    }
    return p;
  }

  std::string str() const;

 private:
  int sign_ = 1;
  int degree_ = 0;
  std::map<Factor, int> factors_;
};

/// Factor-containment pruning of a generator list: an element whose factor
/// multiset contains another's is a polynomial multiple of it and can be
/// dropped without changing the ideal; its leading monomial stays inside the
/// initial ideal of what remains. kept lists surviving indices; the
/// certificate maps each dropped index to a kept divisor.
struct PruneResult {
  std::vector<int> kept;
  std::vector<std::pair<int, int>> certificate;  // (dropped, kept divisor)
};
PruneResult prune_by_divisibility(const std::vector<DiffProduct>& gens);

}  // namespace specht
