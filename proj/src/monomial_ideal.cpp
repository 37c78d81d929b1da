#include "specht/monomial_ideal.hpp"

#include <algorithm>

#include "specht/common.hpp"

namespace specht {

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> kept;
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& k : kept)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

int monomial_ideal_dimension(const std::vector<Monomial>& gens, int n) {
  if (n < 0 || n > kMaxVars) throw Error("variable count out of range");
  std::vector<Monomial> mins = minimal_generators(gens);
  std::vector<uint32_t> supports;
  supports.reserve(mins.size());
  for (const Monomial& m : mins) supports.push_back(m.support_mask());
  int best = -1;
  for (uint32_t y = 0; y < (uint32_t{1} << n); ++y) {
    bool ok = true;
    for (uint32_t s : supports)
      if ((s & ~y) == 0) {
        ok = false;
        break;
      }
    if (ok) best = std::max(best, __builtin_popcount(y));
  }
  return best;
}

namespace {

void count_monomials(const std::vector<Monomial>& mins, int n, int var,
                     Monomial& cur, int degree_left, long& count) {
  if (var == n) {
    if (degree_left != 0) return;
    for (const Monomial& m : mins)
      if (m.divides(cur)) return;
    count++;
    return;
  }
  for (int e = 0; e <= degree_left; ++e) {
    cur.set(var, e);
    count_monomials(mins, n, var + 1, cur, degree_left - e, count);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<long> hilbert_function(const std::vector<Monomial>& gens, int n,
                                   int max_deg) {
  if (n < 0 || n > kMaxVars) throw Error("variable count out of range");
  if (max_deg < 0) throw Error("max degree must be nonnegative");
  std::vector<Monomial> mins = minimal_generators(gens);
  std::vector<long> h(max_deg + 1, 0);
  for (int d = 0; d <= max_deg; ++d) {
    Monomial cur;
    count_monomials(mins, n, 0, cur, d, h[d]);
  }
  return h;
}

std::map<int, int> degree_histogram(const std::vector<Monomial>& ms) {
  std::map<int, int> h;
  for (const Monomial& m : ms) h[static_cast<int>(m.deg)]++;
  return h;
}

}  // namespace specht
