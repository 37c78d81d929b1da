#pragma once

#include <map>
#include <vector>

#include "specht/monomial.hpp"

namespace specht {

/// Minimal generating set of the monomial ideal spanned by gens:
/// divisibility-redundant elements and duplicates removed, storage order.
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens);

/// Krull dimension of S/(gens) with S in n variables: the largest coordinate
/// subspace avoiding every generator. Empty input gives n; a unit ideal
/// (a generator with empty support) gives -1.
int monomial_ideal_dimension(const std::vector<Monomial>& gens, int n);

/// Hilbert function of S/(gens) in degrees 0..max_deg by direct counting of
/// standard monomials.
std::vector<long> hilbert_function(const std::vector<Monomial>& gens, int n,
                                   int max_deg);

/// degree -> count over a monomial list.
std::map<int, int> degree_histogram(const std::vector<Monomial>& ms);

}  // namespace specht
