#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specht/diffprod.hpp"
#include "specht/filter.hpp"
#include "specht/tableau.hpp"

namespace specht {

enum class Family {
  specht_head,    // I_{l,lambda}: head tableaux of one shape
  specht_tail,    // I_{lambda,l}: tail tableaux of one shape
  specht_filter,  // I_{l,F}: head tableaux over a lower filter
  lili,           // chain ideal generated by cover products
  mixed,          // I_{l,m,lambda}: lcm(Delta_m, f_T) over one shape
  mixed_filter    // the same over a lower filter
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Everything needed to name one ideal from the families above.
struct IdealSpec {
  Family family = Family::specht_head;
  int n = 0;  // number of variables
  int l = 1;
  int m = 1;                            // mixed families
  Partition lambda;                     // single-shape families
  std::optional<Filter> filter;         // filter families
  std::vector<std::vector<int>> chain;  // lili: Y_1 superset ... superset Y_{k-1}

  static IdealSpec specht_head(int l, Partition lambda);
  static IdealSpec specht_tail(int l, Partition lambda);
  static IdealSpec specht_filter(Filter f);
  static IdealSpec mixed(int l, int m, Partition lambda);
  static IdealSpec mixed_filter(int m, Filter f);
  static IdealSpec lili_chain(int n, std::vector<std::vector<int>> chain);

  std::string str() const;
};

/// One generator in factored form, together with where it came from.
struct Generator {
  DiffProduct poly;
  Partition shape;                        // tableau families
  std::vector<std::vector<int>> columns;  // column contents (sorted)
  bool standard = false;                  // produced by the standard enumeration
};

/// The generator list of the ideal named by spec, deduplicated by factor
/// multiset. With standard_only, tableau families enumerate standard tableaux
/// only; the mixed families reject it (no standard system generates them) and
/// lili ignores it. Order is deterministic: shapes lex-decreasing, then the
/// enumeration order within a shape.
std::vector<Generator> generators(const IdealSpec& spec, bool standard_only);

/// The Specht polynomial of a tableau: product of column deltas, expanded.
QPoly specht_polynomial(const Tableau& t);
/// Its factored form (sign included).
DiffProduct specht_factors(const Tableau& t);
/// lcm(Delta_m, f_T) in factored form; sign normalized to +1.
DiffProduct mixed_generator(const Tableau& t, int m);

/// Writes f_T as the unique rational combination of standard-tableau Specht
/// polynomials of the same shape and variant.
struct StraightenResult {
  std::vector<Rational> coefficients;  // parallel to basis
  std::vector<Tableau> basis;          // the standard tableaux
};
StraightenResult straighten(const Tableau& t);

/// Solver that can straighten many tableaux of one shape: the standard
/// expansion matrix is factorized once.
class StraightenSolver {
 public:
  StraightenSolver(int l, const Partition& shape, Variant variant);
  const std::vector<Tableau>& standard_basis() const { return std_; }
  /// Coefficients of f on the standard basis; throws if f is outside the span.
  std::vector<Rational> solve(const QPoly& f) const;

 private:
  std::vector<Tableau> std_;
  std::vector<QPoly> std_polys_;
  std::vector<Monomial> pivot_monomials_;
  // Inverse of the pivot submatrix, row-major k x k.
  std::vector<std::vector<Rational>> inverse_;
};

/// Both sides of the one-box migration identity for Delta(A) Delta(B):
/// moving each eligible a_i of A to the end of B with its sign and correction
/// product. |A| must exceed |B| by at least two; entries must be disjoint and
/// strictly increasing.
struct ExpansionIdentity {
  QPoly lhs;
  QPoly rhs;
  bool holds = false;
};
ExpansionIdentity expansion_identity(const std::vector<int>& A,
                                     const std::vector<int>& B);

}  // namespace specht
