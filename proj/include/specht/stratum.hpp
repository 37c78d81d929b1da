#pragma once

#include <vector>

#include "specht/diffprod.hpp"
#include "specht/partition.hpp"
#include "specht/poly.hpp"
#include "specht/tableau.hpp"

namespace specht {

/// An equality pattern on n coordinates: cls[i] is the 0-based class of
/// coordinate i+1, classes numbered by first appearance. Together with l and
/// the variant it names one piece of a stratum: the points whose coordinates
/// coincide exactly as the pattern says, with the class of coordinate 1
/// (head) or n (tail) counted l times.
struct StratumPattern {
  std::vector<int> cls;
  int classes = 0;
  int l = 1;
  Variant variant = Variant::head;
  Partition profile;  // inflated class sizes, sorted
};

/// Every equality pattern on n coordinates as a restricted growth string,
/// in lexicographic order. cls only; profile fields are left default.
std::vector<std::vector<int>> set_partitions(int n);

/// Class sizes of the pattern with the special coordinate counted l times.
Partition pattern_profile(const std::vector<int>& cls, int l, Variant variant);

/// All patterns on n coordinates whose inflated profile is mu.
std::vector<StratumPattern> patterns_with_profile(const Partition& mu, int n,
                                                  int l, Variant variant);

/// The inflated coincidence partition of an explicit point.
Partition lambda_map(const std::vector<Rational>& a, int l, Variant variant);

/// Exact test for f vanishing identically on the points realizing one
/// pattern: substitute a fresh parameter per class and compare to zero.
/// Exactness needs the coefficient field infinite, hence rationals only.
bool vanishes_on_pattern(const QPoly& f, const std::vector<int>& cls);

/// f vanishes identically on the stratum of mu: every pattern with that
/// profile kills it. Throws if weight(mu) != n + l - 1; vacuously true when
/// no pattern realizes mu.
bool vanishes_on_class(const QPoly& f, const Partition& mu, int n, int l,
                       Variant variant);
/// Factored fast path: scans for a factor joining two merged coordinates.
bool vanishes_on_class(const DiffProduct& f, const Partition& mu, int n, int l,
                       Variant variant);

}  // namespace specht
