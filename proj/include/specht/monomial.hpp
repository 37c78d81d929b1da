#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "specht/common.hpp"

namespace specht {

/// Hard cap on the number of variables; desk-scale instances stay well below.
constexpr int kMaxVars = 16;

/// A power product x_1^{e_1} ... x_n^{e_n} with a cached total degree.
/// Exponents beyond the active variable count are simply zero.
struct Monomial {
  std::array<uint16_t, kMaxVars> e{};
  uint32_t deg = 0;

  static Monomial one() { return Monomial{}; }
  static Monomial variable(int i) {
    Monomial m;
    m.set(i, 1);
    return m;
  }
  static Monomial from_exponents(const std::vector<int>& exps);

  int operator[](int i) const { return e[i]; }  // 0-based variable index
  void set(int i, int exp);
  bool is_one() const { return deg == 0; }

  Monomial operator*(const Monomial& o) const;
  /// Componentwise test.
  bool divides(const Monomial& o) const;
  /// Quotient; requires divisibility.
  Monomial operator/(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  /// Bitmask of variables with positive exponent.
  uint32_t support_mask() const;

  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
  /// Fixed storage order (lex with x_1 smallest); canonical, order-independent.
  std::strong_ordering operator<=>(const Monomial& o) const;

  std::string str(int n) const;
};

Monomial lcm(const Monomial& a, const Monomial& b);

/// A monomial well-order on n variables: lex or graded reverse lex over a
/// permutation of the variables, or a nonnegative weight vector refined by a
/// tie-break order. Permutations are written smallest variable first, so
/// "lex:1,2,3" is lex with x_1 < x_2 < x_3.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, weight };

  static MonomialOrder lex(std::vector<int> vars_smallest_first);
  static MonomialOrder grevlex(std::vector<int> vars_smallest_first);
  static MonomialOrder weight(std::vector<long> weights, MonomialOrder tie);

  /// Default order used throughout: lex with x_1 < ... < x_n.
  static MonomialOrder default_lex(int n);
  /// Lex with x_1 > x_2 > ... > x_n (x_1 largest).
  static MonomialOrder reverse_lex(int n);

  /// Parses "lex:5,4,3,2,1", "grevlex:1,2,3", or
  /// "weight:1,2,0,0;tie=lex:1,2,3,4".
  static MonomialOrder parse(const std::string& s);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  std::string str() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

 private:
  MonomialOrder() = default;
  Kind kind_ = Kind::lex;
  int n_ = 0;
  std::vector<int> vars_;      // permutation, smallest first (lex/grevlex)
  std::vector<long> weights_;  // weight kind
  std::shared_ptr<MonomialOrder> tie_;
};

}  // namespace specht
