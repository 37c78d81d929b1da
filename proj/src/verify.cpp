#include "specht/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "specht/monomial_ideal.hpp"

namespace specht {

namespace {

using nlohmann::json;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

/// Factored generators with the divisibility pruning applied. kept indexes
/// into gens; every dropped index is certified by a kept divisor, so the
/// kept polynomials generate the same ideal and inherit the basis property.
struct GenSet {
  std::vector<Generator> gens;
  std::vector<int> kept;
  std::vector<std::pair<int, int>> certificates;
  std::vector<QPoly> kept_polys;
};

GenSet prepare(const IdealSpec& spec, bool standard_only, bool prune) {
  GenSet out;
  out.gens = generators(spec, standard_only);
  if (prune) {
    std::vector<DiffProduct> dps;
    dps.reserve(out.gens.size());
    for (const auto& g : out.gens) dps.push_back(g.poly);
    PruneResult pr = prune_by_divisibility(dps);
    out.kept = std::move(pr.kept);
    out.certificates = std::move(pr.certificate);
  } else {
    for (size_t i = 0; i < out.gens.size(); ++i)
      out.kept.push_back(static_cast<int>(i));
  }
  out.kept_polys.reserve(out.kept.size());
  for (int i : out.kept)
    out.kept_polys.push_back(out.gens[i].poly.expand<Rational>());
  return out;
}

json gb_failure(const GBReport<Rational>& rep, int n) {
  json j;
  j["pair"] = {rep.fail_i, rep.fail_j};
  j["stuck_monomial"] = rep.fail_lm.str(n);
  j["order"] = rep.order;
  return j;
}

/// Column-first filling: the special label tops the first l columns, the
/// rest fill column by column. Standard by construction; its row pattern
/// realizes exactly the stratum of its own shape and no column factor joins
/// two coordinates of one row, which makes it the canonical separating
/// witness below.
Tableau column_superstandard(int l, const Partition& shape) {
  const Partition conj = shape.conjugate();
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= shape.length(); ++r)
    rows.emplace_back(shape.part(r), 0);
  for (int c = 1; c <= l; ++c) rows[0][c - 1] = 1;
  int label = 2;
  for (int j = 1; j <= shape.first(); ++j)
    for (int r = (j <= l ? 2 : 1); r <= conj.part(j); ++r)
      rows[r - 1][j - 1] = label++;
  return Tableau(shape, l, Variant::head, std::move(rows));
}

/// Coordinate classes by row: label v sits in class row(v) - 1.
std::vector<int> row_pattern(const Tableau& t) {
  std::vector<int> cls(t.n(), 0);
  for (int r = 1; r <= t.shape().length(); ++r)
    for (int c = 1; c <= t.shape().part(r); ++c)
      cls[t.entry(r, c) - 1] = r - 1;
  return cls;
}

void require_filter(const Filter& f, int n, int l) {
  if (f.kind() != Filter::Kind::lower)
    throw Error("expected a lower filter");
  if (f.n() != n || f.l() != l)
    throw Error("filter parameters disagree with n, l");
}

std::string order_tag(const MonomialOrder& ord) { return ord.str(); }

}  // namespace

ClaimReport check_main1(int n, int l, const Filter& f, const MonomialOrder& ord,
                        const VerifyOptions& opt) {
  require_filter(f, n, l);
  const Filter fc = f.complement();
  if (fc.empty()) throw Error("filter must be proper");

  Timer timer;
  ClaimReport rep;
  rep.claim = "main1";
  rep.params = "n=" + std::to_string(n) + " l=" + std::to_string(l) +
               " filter=" + f.str() + " order=" + order_tag(ord);

  GenSet gs = prepare(IdealSpec::specht_filter(f), true, opt.prune);
  rep.evidence["generators"] = gs.gens.size();
  rep.evidence["kept"] = gs.kept.size();

  GBReport<Rational> gb = is_groebner(gs.kept_polys, ord, opt.caps);
  rep.evidence["spairs"] = gb.spair_count;
  bool ok = gb.verified;
  if (!gb.verified) rep.evidence["gb_failure"] = gb_failure(gb, n);

  // Containment side: every generator dies on every complement stratum.
  size_t strata = 0;
  for (const Partition& mu : fc.members()) {
    const auto patterns = patterns_with_profile(mu, n, l, Variant::head);
    strata += patterns.size();
    for (size_t gi = 0; gi < gs.gens.size() && ok; ++gi)
      for (const auto& p : patterns)
        if (!gs.gens[gi].poly.vanishes_on(p.cls)) {
          ok = false;
          rep.evidence["vanishing_failure"] = {
              {"generator", gi},
              {"mu", mu.str()},
              {"pattern", p.cls}};
          break;
        }
  }
  rep.evidence["complement_patterns"] = strata;

  // Separation side: per member stratum a generator that survives on it.
  size_t separated = 0;
  for (const Partition& mu : f.members()) {
    Tableau t = column_superstandard(l, mu);
    if (specht_factors(t).vanishes_on(row_pattern(t))) {
      ok = false;
      rep.evidence["separation_failure"] = mu.str();
      break;
    }
    ++separated;
  }
  rep.evidence["separating_witnesses"] = separated;

  rep.pass = ok;
  rep.seconds = timer.elapsed();
  return rep;
}

ClaimReport check_main1_5(int n, int l, const Filter& f,
                          const VerifyOptions& opt) {
  require_filter(f, n, l);
  const MonomialOrder ord = MonomialOrder::default_lex(n);

  Timer timer;
  ClaimReport rep;
  rep.claim = "main1_5";
  rep.params = "n=" + std::to_string(n) + " l=" + std::to_string(l) +
               " filter=" + f.str() + " order=" + order_tag(ord);

  // Tail standard tableaux over the filter, deduplicated across shapes.
  std::vector<Generator> gens;
  std::set<std::map<DiffProduct::Factor, int>> seen;
  for (const Partition& rho : f.members())
    for (auto& g : generators(IdealSpec::specht_tail(l, rho), true))
      if (seen.insert(g.poly.factors()).second) gens.push_back(std::move(g));

  std::vector<DiffProduct> dps;
  for (const auto& g : gens) dps.push_back(g.poly);
  PruneResult pr = opt.prune ? prune_by_divisibility(dps) : PruneResult{};
  if (!opt.prune)
    for (size_t i = 0; i < dps.size(); ++i)
      pr.kept.push_back(static_cast<int>(i));
  std::vector<QPoly> kept_polys;
  for (int i : pr.kept) kept_polys.push_back(gens[i].poly.expand<Rational>());

  rep.evidence["generators"] = gens.size();
  rep.evidence["kept"] = pr.kept.size();

  GBReport<Rational> gb = is_groebner(kept_polys, ord, opt.caps);
  rep.evidence["spairs"] = gb.spair_count;
  bool ok = gb.verified;

  if (gb.verified) {
    std::vector<Monomial> lms;
    for (const auto& g : kept_polys) lms.push_back(g.leading_monomial(ord));
    json degs = json::object();
    for (auto& [d, c] : degree_histogram(minimal_generators(lms)))
      degs[std::to_string(d)] = c;
    rep.evidence["initial_degrees"] = degs;
  } else {
    rep.evidence["gb_failure"] = gb_failure(gb, n);
    // The declared set is not a basis of what it generates; compute one and
    // report how the true initial ideal looks, witness included.
    GBReport<Rational> full = buchberger(kept_polys, ord, opt.caps);
    std::vector<Monomial> mins =
        minimal_generators(leading_monomials(full, ord));
    json degs = json::object();
    for (auto& [d, c] : degree_histogram(mins)) degs[std::to_string(d)] = c;
    rep.evidence["initial_degrees"] = degs;
    json extra = json::array();
    for (const Monomial& m : mins) {
      bool covered = false;
      for (const auto& g : kept_polys)
        if (g.leading_monomial(ord).divides(m)) {
          covered = true;
          break;
        }
      if (!covered) extra.push_back(m.str(n));
    }
    rep.evidence["initial_monomials_missed"] = extra;
  }

  // For a principal filter the basis must generate the same ideal as the
  // top shape alone (the lower shapes add nothing).
  if (f.frontier().size() == 1) {
    const Partition& top = f.frontier().front();
    GenSet top_set =
        prepare(IdealSpec::specht_tail(l, top), true, opt.prune);
    GBReport<Rational> top_gb = buchberger(top_set.kept_polys, ord, opt.caps);
    size_t outside = 0;
    for (const auto& g : kept_polys)
      if (!normal_form(g, top_gb.basis, ord).is_zero()) ++outside;
    rep.evidence["outside_top_ideal"] = outside;
    if (outside > 0) ok = false;
  }

  rep.pass = ok;
  rep.seconds = timer.elapsed();
  return rep;
}

ClaimReport check_main2(int n, int l, int m, const Filter& f,
                        const MonomialOrder& ord, const VerifyOptions& opt) {
  require_filter(f, n, l);
  const Filter fc = f.complement();
  if (fc.empty()) throw Error("filter must be proper");

  Timer timer;
  ClaimReport rep;
  rep.claim = "main2";
  rep.params = "n=" + std::to_string(n) + " l=" + std::to_string(l) +
               " m=" + std::to_string(m) + " filter=" + f.str() +
               " order=" + order_tag(ord);

  GenSet gs = prepare(IdealSpec::mixed_filter(m, f), false, opt.prune);
  rep.evidence["generators"] = gs.gens.size();
  rep.evidence["kept"] = gs.kept.size();

  bool ok = true;
  const DiffProduct dm = DiffProduct::delta(m);
  for (size_t gi = 0; gi < gs.gens.size(); ++gi)
    if (!dm.divides(gs.gens[gi].poly)) {
      ok = false;
      rep.evidence["delta_failure"] = gi;
      break;
    }

  size_t strata = 0;
  for (const Partition& mu : fc.members()) {
    const auto patterns = patterns_with_profile(mu, n, l, Variant::head);
    strata += patterns.size();
    for (size_t gi = 0; gi < gs.gens.size() && ok; ++gi)
      for (const auto& p : patterns)
        if (!gs.gens[gi].poly.vanishes_on(p.cls)) {
          ok = false;
          rep.evidence["vanishing_failure"] = {
              {"generator", gi}, {"mu", mu.str()}, {"pattern", p.cls}};
          break;
        }
  }
  rep.evidence["complement_patterns"] = strata;

  GBReport<Rational> gb = is_groebner(gs.kept_polys, ord, opt.caps);
  rep.evidence["spairs"] = gb.spair_count;
  if (!gb.verified) {
    ok = false;
    rep.evidence["gb_failure"] = gb_failure(gb, n);
  }

  rep.pass = ok;
  rep.seconds = timer.elapsed();
  return rep;
}

ClaimReport check_codimension(int n, int l, const Partition& lambda,
                              const VerifyOptions& opt) {
  if (lambda.length() == 1)
    throw Error("one-row shape generates the whole ring");
  const MonomialOrder ord = MonomialOrder::default_lex(n);

  Timer timer;
  ClaimReport rep;
  rep.claim = "codimension";
  rep.params = "n=" + std::to_string(n) + " l=" + std::to_string(l) +
               " lambda=" + lambda.str();

  Filter f = Filter::principal_lower(n, l, lambda);
  GenSet gs = prepare(IdealSpec::specht_filter(f), true, opt.prune);
  GBReport<Rational> gb = is_groebner(gs.kept_polys, ord, opt.caps);
  bool ok = gb.verified;
  if (!gb.verified) rep.evidence["gb_failure"] = gb_failure(gb, n);

  std::vector<Monomial> lms;
  for (const auto& g : gs.kept_polys) lms.push_back(g.leading_monomial(ord));
  lms = minimal_generators(std::move(lms));
  const int dim = monomial_ideal_dimension(lms, n);
  const int expected = lambda.first() - l + 1;
  rep.evidence["initial_generators"] = lms.size();
  rep.evidence["dimension"] = dim;
  rep.evidence["codimension"] = n - dim;
  rep.evidence["expected"] = expected;
  if (n - dim != expected) ok = false;

  rep.pass = ok;
  rep.seconds = timer.elapsed();
  return rep;
}

namespace {

bool family_uses_standard(Family f) {
  return f == Family::specht_head || f == Family::specht_tail ||
         f == Family::specht_filter;
}

}  // namespace

ClaimReport check_radicality_witness(const IdealSpec& spec, const QPoly& f,
                                     const VerifyOptions& opt) {
  Timer timer;
  ClaimReport rep;
  rep.claim = "radicality_witness";
  rep.params = spec.str();

  const MonomialOrder ord = MonomialOrder::default_lex(spec.n);
  GenSet gs = prepare(spec, family_uses_standard(spec.family), opt.prune);
  GBReport<Rational> gb = buchberger(gs.kept_polys, ord, opt.caps);

  const QPoly nf1 = normal_form(f, gb.basis, ord);
  const QPoly nf2 = normal_form(f * f, gb.basis, ord);
  rep.evidence["candidate"] = f.str(spec.n);
  rep.evidence["nf_nonzero"] = !nf1.is_zero();
  rep.evidence["nf_square_zero"] = nf2.is_zero();
  if (!nf1.is_zero())
    rep.evidence["nf_leading"] = nf1.leading_monomial(ord).str(spec.n);
  rep.pass = !nf1.is_zero() && nf2.is_zero();
  rep.seconds = timer.elapsed();
  return rep;
}

ClaimReport search_radicality_witness(const IdealSpec& spec,
                                      const VerifyOptions& opt) {
  Timer timer;
  ClaimReport rep;
  rep.claim = "radicality_search";
  rep.params = spec.str();

  const MonomialOrder ord = MonomialOrder::default_lex(spec.n);
  GenSet gs = prepare(spec, family_uses_standard(spec.family), opt.prune);
  GBReport<Rational> gb = buchberger(gs.kept_polys, ord, opt.caps);

  int bound = 0;
  for (const auto& g : gs.gens) bound = std::max(bound, g.poly.degree());
  bound *= 2;
  rep.evidence["degree_bound"] = bound;

  // Candidates: factor-submultiset divisors of the generators, plus the
  // full difference products on prefixes. Ordered by degree so the first
  // hit is a smallest witness.
  std::set<DiffProduct> pool;
  for (const auto& g : gs.gens) {
    std::vector<std::pair<DiffProduct::Factor, int>> fs(
        g.poly.factors().begin(), g.poly.factors().end());
    std::vector<int> take(fs.size(), 0);
    std::function<void(size_t, const DiffProduct&)> walk =
        [&](size_t i, const DiffProduct& acc) {
          if (i == fs.size()) {
            if (!acc.is_constant()) pool.insert(acc);
            return;
          }
          DiffProduct cur = acc;
          walk(i + 1, cur);
          for (int t = 0; t < fs[i].second; ++t) {
            cur = cur * DiffProduct::of_sequence(
                            {fs[i].first.first, fs[i].first.second});
            walk(i + 1, cur);
          }
        };
    walk(0, DiffProduct());
  }
  for (int k = 2; k <= spec.n; ++k) {
    DiffProduct d = DiffProduct::delta(k);
    if (d.degree() <= bound) pool.insert(d);
  }

  std::vector<DiffProduct> candidates;
  for (const auto& c : pool)
    if (c.degree() <= bound) candidates.push_back(c);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const DiffProduct& a, const DiffProduct& b) {
                     return a.degree() < b.degree();
                   });

  size_t scanned = 0;
  for (const auto& c : candidates) {
    ++scanned;
    QPoly cq = c.expand<Rational>();
    if (normal_form(cq, gb.basis, ord).is_zero()) continue;
    if (!normal_form(cq * cq, gb.basis, ord).is_zero()) continue;
    rep.evidence["witness"] = c.str();
    rep.evidence["scanned"] = scanned;
    rep.pass = true;
    rep.seconds = timer.elapsed();
    return rep;
  }
  rep.evidence["witness"] = nullptr;
  rep.evidence["scanned"] = scanned;
  rep.pass = false;  // nothing found up to the bound; not a radicality proof
  rep.seconds = timer.elapsed();
  return rep;
}

ClaimReport check_m_le_2(int n, int l, const Partition& lambda,
                         const VerifyOptions& opt) {
  Timer timer;
  ClaimReport rep;
  rep.claim = "m_le_2";
  rep.params = "n=" + std::to_string(n) + " l=" + std::to_string(l) +
               " lambda=" + lambda.str();

  const MonomialOrder ord = MonomialOrder::default_lex(n);
  GenSet single = prepare(IdealSpec::mixed(l, 2, lambda), false, opt.prune);
  Filter f = Filter::principal_lower(n, l, lambda);
  GenSet filt = prepare(IdealSpec::mixed_filter(2, f), false, opt.prune);
  rep.evidence["single_generators"] = single.gens.size();
  rep.evidence["filter_generators"] = filt.gens.size();

  // One containment is free: the single-shape generators reappear verbatim
  // in the filter set.
  std::set<std::map<DiffProduct::Factor, int>> in_filter;
  for (const auto& g : filt.gens) in_filter.insert(g.poly.factors());
  bool ok = true;
  for (const auto& g : single.gens)
    if (!in_filter.count(g.poly.factors())) {
      ok = false;
      rep.evidence["missing_from_filter"] = g.poly.str();
      break;
    }

  // The other needs work: every filter generator reduces to zero against a
  // basis of the single-shape ideal.
  GBReport<Rational> gb = buchberger(single.kept_polys, ord, opt.caps);
  size_t outside = 0;
  for (const auto& g : filt.kept_polys)
    if (!normal_form(g, gb.basis, ord).is_zero()) ++outside;
  rep.evidence["outside_single_ideal"] = outside;
  if (outside > 0) ok = false;

  rep.pass = ok;
  rep.seconds = timer.elapsed();
  return rep;
}

ClaimReport universal_search(int n, int l, const Partition& lambda,
                             bool lex_exhaustive, int random_weight_trials,
                             uint64_t seed, const VerifyOptions& opt) {
  if (lex_exhaustive && n > 6)
    throw Error("exhaustive order sweep is capped at n = 6");

  Timer timer;
  ClaimReport rep;
  rep.claim = "universal";
  rep.params = "n=" + std::to_string(n) + " l=" + std::to_string(l) +
               " lambda=" + lambda.str() +
               " exhaustive=" + (lex_exhaustive ? "1" : "0") +
               " trials=" + std::to_string(random_weight_trials) +
               " seed=" + std::to_string(seed);

  Filter f = Filter::principal_lower(n, l, lambda);
  GenSet gs = prepare(IdealSpec::specht_filter(f), false, opt.prune);
  rep.evidence["generators"] = gs.gens.size();
  rep.evidence["kept"] = gs.kept.size();

  size_t checked = 0;
  bool ok = true;
  json orders = json::array();
  auto run = [&](const MonomialOrder& ord, const char* kind) {
    if (!ok) return;
    GBReport<Rational> gb = is_groebner(gs.kept_polys, ord, opt.caps);
    ++checked;
    orders.push_back(ord.str());
    if (!gb.verified) {
      ok = false;
      json j = gb_failure(gb, n);
      j["kind"] = kind;
      rep.evidence["counterexample"] = j;
    }
  };

  // The two guaranteed orders first, then the sweep.
  run(MonomialOrder::default_lex(n), "x1-smallest");
  run(MonomialOrder::reverse_lex(n), "x1-largest");

  std::set<std::string> done;
  done.insert(MonomialOrder::default_lex(n).str());
  done.insert(MonomialOrder::reverse_lex(n).str());
  if (lex_exhaustive) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    do {
      MonomialOrder ord = MonomialOrder::lex(perm);
      if (done.insert(ord.str()).second) run(ord, "lex-sweep");
    } while (ok && std::next_permutation(perm.begin(), perm.end()));
  }

  std::mt19937_64 rng(seed);
  for (int t = 0; t < random_weight_trials && ok; ++t) {
    std::vector<long> w(n);
    for (auto& x : w) x = 1 + static_cast<long>(rng() % 100);
    run(MonomialOrder::weight(w, MonomialOrder::default_lex(n)),
        "random-weight");
  }

  rep.evidence["orders_checked"] = checked;
  rep.evidence["orders"] = std::move(orders);
  if (ok) rep.evidence["counterexample"] = nullptr;
  rep.pass = ok;
  rep.seconds = timer.elapsed();
  return rep;
}

}  // namespace specht
