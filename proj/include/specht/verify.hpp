#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "specht/groebner.hpp"
#include "specht/specht_ideal.hpp"
#include "specht/stratum.hpp"

namespace specht {

/// Outcome of one theorem-level check. Failing reports carry a reproducible
/// witness in evidence (an order string plus a stuck monomial, a pattern, or
/// a polynomial, depending on the claim).
struct ClaimReport {
  std::string claim;
  std::string params;
  bool pass = false;
  nlohmann::json evidence;
  double seconds = 0.0;
};

struct VerifyOptions {
  Caps caps;
  /// Drop generators whose factor multiset contains another's before the
  /// Groebner checks. Sound: a dropped element is a polynomial multiple of
  /// its certificate, so the basis property and the ideal are unchanged.
  bool prune = true;
};

/// The head family statement: standard generators over a proper lower filter
/// form a Groebner basis of the vanishing ideal of the complementary strata.
/// Checks (i) is_groebner under ord, (ii) every generator vanishes on every
/// complement stratum, (iii) per member stratum a standard generator that
/// does not vanish on it (the filter is exactly separated).
ClaimReport check_main1(int n, int l, const Filter& f, const MonomialOrder& ord,
                        const VerifyOptions& opt = {});

/// The tail family statement: standard tail generators over a lower filter,
/// checked as a Groebner basis under lex with x_1 smallest. For a principal
/// filter additionally confirms the basis generates the same ideal as the
/// top shape alone. Non-principal filters may legitimately fail; the report
/// then carries the stuck leading monomial.
ClaimReport check_main1_5(int n, int l, const Filter& f,
                          const VerifyOptions& opt = {});

/// The mixed family statement: lcm-with-Delta_m generators over a proper
/// lower filter form a Groebner basis of their span inside (Delta_m) cap the
/// complement vanishing ideal. Checks divisibility by Delta_m, stratum
/// vanishing, and is_groebner, mirroring check_main1.
ClaimReport check_main2(int n, int l, int m, const Filter& f,
                        const MonomialOrder& ord,
                        const VerifyOptions& opt = {});

/// Codimension of the single-shape head ideal: n minus the dimension of the
/// initial ideal of the verified basis must equal lambda_1 - l + 1. Throws
/// for a one-row shape (the ideal is the whole ring).
ClaimReport check_codimension(int n, int l, const Partition& lambda,
                              const VerifyOptions& opt = {});

/// Certifies f as a non-radicality witness for the ideal named by spec:
/// normal_form(f) != 0 and normal_form(f^2) = 0 against a Buchberger basis.
/// pass means the witness is confirmed.
ClaimReport check_radicality_witness(const IdealSpec& spec, const QPoly& f,
                                     const VerifyOptions& opt = {});

/// Scans factor-submultiset divisors of the generators (degree at most twice
/// the largest generator degree) for a witness. pass means a witness was
/// found and certified; a failing report only says the scan saw nothing up
/// to the bound, never that the ideal is radical.
ClaimReport search_radicality_witness(const IdealSpec& spec,
                                      const VerifyOptions& opt = {});

/// The m = 2 radicality statement: the single-shape mixed ideal equals its
/// radical presentation, the same generators taken over the full principal
/// filter below the shape.
ClaimReport check_m_le_2(int n, int l, const Partition& lambda,
                         const VerifyOptions& opt = {});

/// Evidence gathering for the universality question: is_groebner of the full
/// tableau generating set below lambda under every permuted lex order (n! of
/// them, n small) and/or random positive weight orders from a seeded PRNG.
/// Lex with x_1 smallest and with x_1 largest are always included. pass
/// means no counterexample; a failure report names the order and the stuck
/// monomial and deserves independent rechecking.
ClaimReport universal_search(int n, int l, const Partition& lambda,
                             bool lex_exhaustive, int random_weight_trials,
                             uint64_t seed, const VerifyOptions& opt = {});

}  // namespace specht
