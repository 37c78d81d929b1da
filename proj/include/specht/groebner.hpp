#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "specht/division.hpp"
#include "specht/poly.hpp"

namespace specht {

/// Outcome of a Groebner computation or verification.
template <class K>
struct GBReport {
  std::vector<Polynomial<K>> basis;
  std::string order;
  size_t spair_count = 0;           // S-pairs actually reduced
  size_t reductions_to_zero = 0;
  size_t max_intermediate_terms = 0;
  bool verified = false;
  // Filled by the static check when an S-pair does not reduce to zero: the
  // offending pair and the stuck head, a monomial of the ideal outside the
  // span of the basis leading monomials.
  int fail_i = -1;
  int fail_j = -1;
  Monomial fail_lm;
};

/// S(f,g) = (lcm/lt f) f - (lcm/lt g) g under ord.
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g,
                           const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero())
    throw Error("s-polynomial of a zero polynomial");
  const Monomial& lf = f.leading_monomial(ord);
  const Monomial& lg = g.leading_monomial(ord);
  Monomial l = lcm(lf, lg);
  Polynomial<K> a = f.times_monomial(l / lf).scaled(
      K::one_like(f.leading_coefficient(ord)) / f.leading_coefficient(ord));
  Polynomial<K> b = g.times_monomial(l / lg).scaled(
      K::one_like(g.leading_coefficient(ord)) / g.leading_coefficient(ord));
  return a - b;
}

/// Remainder of f on division by basis (in list order) under ord.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f,
                          const std::vector<Polynomial<K>>& basis,
                          const MonomialOrder& ord) {
  ReductionEngine<K> eng(ord);
  for (const auto& g : basis)
    if (!g.is_zero()) eng.add_basis(eng.to_ord(g));
  return eng.to_canonical(eng.reduce(eng.to_ord(f)).remainder);
}

/// Division with cofactors: f = sum_i quotients[i] * basis[i] + remainder.
template <class K>
struct DivisionResult {
  Polynomial<K> remainder;
  std::vector<Polynomial<K>> quotients;
};

template <class K>
DivisionResult<K> divide(const Polynomial<K>& f,
                         const std::vector<Polynomial<K>>& basis,
                         const MonomialOrder& ord) {
  ReductionEngine<K> eng(ord);
  std::vector<int> slot(basis.size(), -1);
  for (size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].is_zero()) slot[i] = eng.add_basis(eng.to_ord(basis[i]));
  std::vector<std::pair<int, OrdPoly<K>>> q;
  auto res = eng.reduce(eng.to_ord(f), false, &q);
  DivisionResult<K> out;
  out.remainder = eng.to_canonical(res.remainder);
  out.quotients.assign(basis.size(), Polynomial<K>());
  for (auto& [engine_idx, poly] : q)
    for (size_t i = 0; i < basis.size(); ++i)
      if (slot[i] == engine_idx) out.quotients[i] = eng.to_canonical(poly);
  return out;
}

namespace detail {

template <class K>
struct SPair {
  int i, j;
  Monomial l;
};

/// Orders pairs by (lcm under ord, i, j): the normal selection strategy.
template <class K>
struct SPairCmp {
  const MonomialOrder* ord;
  bool operator()(const SPair<K>& a, const SPair<K>& b) const {
    auto c = ord->compare(a.l, b.l);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

template <class K>
OrdPoly<K> make_monic(OrdPoly<K> g) {
  if (g.is_zero() || g.lc().is_one()) return g;
  K inv = K::one_like(g.lc()) / g.lc();
  for (auto& t : g.t) t.c *= inv;
  return g;
}

template <class K>
OrdPoly<K> s_poly_ord(const ReductionEngine<K>& eng, const OrdPoly<K>& f,
                      const OrdPoly<K>& g, const Monomial& l) {
  // Both inputs are monic, so the S-polynomial is a plain shifted difference.
  Monomial mf = l / f.lm(), mg = l / g.lm();
  std::vector<Term<K>> out;
  out.reserve(f.t.size() + g.t.size());
  size_t i = 1, j = 1;
  while (i < f.t.size() && j < g.t.size()) {
    Monomial a = f.t[i].m * mf, b = g.t[j].m * mg;
    auto cmp = eng.ord().compare(a, b);
    if (cmp == std::strong_ordering::greater) {
      out.push_back({a, f.t[i++].c});
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({b, -g.t[j++].c});
    } else {
      K c = f.t[i].c - g.t[j].c;
      if (!c.is_zero()) out.push_back({a, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < f.t.size(); ++i) out.push_back({f.t[i].m * mf, f.t[i].c});
  for (; j < g.t.size(); ++j) out.push_back({g.t[j].m * mg, -g.t[j].c});
  return OrdPoly<K>{std::move(out)};
}

}  // namespace detail

/// Buchberger's algorithm with the Gebauer-Moeller pair update and normal
/// selection. Returns the reduced Groebner basis (monic, sorted by leading
/// monomial ascending under ord); deterministic for a fixed input order.
template <class K>
GBReport<K> buchberger(const std::vector<Polynomial<K>>& gens,
                       const MonomialOrder& ord, const Caps& caps = {}) {
  using detail::SPair;
  detail::CapState capstate(caps);
  ReductionEngine<K> eng(ord);
  GBReport<K> rep;
  rep.order = ord.str();

  detail::SPairCmp<K> cmp{&eng.ord()};
  std::set<SPair<K>, detail::SPairCmp<K>> pairs(cmp);

  auto lm = [&](int i) { return eng.basis(i).lm(); };

  // Gebauer-Moeller update for a freshly added basis element t.
  auto update = [&](int t) {
    std::vector<SPair<K>> cand;
    for (int s = 0; s < t; ++s)
      cand.push_back({s, t, lcm(lm(s), lm(t))});
    std::vector<bool> dropped(cand.size(), false);
    std::vector<SPair<K>> kept;
    for (size_t a = 0; a < cand.size(); ++a) {
      bool coprime = lm(cand[a].i).coprime(lm(t));
      bool shadowed = false;
      if (!coprime) {
        for (size_t b = 0; b < cand.size() && !shadowed; ++b) {
          if (b == a || dropped[b]) continue;
          if (cand[b].l.divides(cand[a].l) && !(cand[b].l == cand[a].l))
            shadowed = true;
          // Equal lcm: keep only the later candidate, matching the
          // remove-as-you-go formulation.
          if (cand[b].l == cand[a].l && b > a) shadowed = true;
        }
      }
      if (coprime || shadowed)
        dropped[a] = true;
      if (!shadowed && !coprime) kept.push_back(cand[a]);
    }
    // Prune old pairs strictly dominated by the new leading monomial.
    for (auto it = pairs.begin(); it != pairs.end();) {
      const SPair<K>& p = *it;
      bool prune = lm(t).divides(p.l) &&
                   !(lcm(lm(p.i), lm(t)) == p.l) &&
                   !(lcm(lm(p.j), lm(t)) == p.l);
      it = prune ? pairs.erase(it) : ++it;
    }
    for (auto& p : kept) pairs.insert(std::move(p));
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int idx = eng.add_basis(detail::make_monic(eng.to_ord(g)));
    update(idx);
  }

  while (!pairs.empty()) {
    capstate.check_time();
    SPair<K> p = *pairs.begin();
    pairs.erase(pairs.begin());
    OrdPoly<K> s = detail::s_poly_ord(eng, eng.basis(p.i), eng.basis(p.j), p.l);
    rep.spair_count++;
    auto res = eng.reduce(std::move(s), false, nullptr, &capstate);
    rep.max_intermediate_terms = std::max(rep.max_intermediate_terms, res.max_terms);
    if (res.zero) {
      rep.reductions_to_zero++;
    } else {
      int idx = eng.add_basis(detail::make_monic(std::move(res.remainder)));
      update(idx);
    }
  }

  // Minimalize: drop elements whose leading monomial another one divides.
  size_t m = eng.basis_size();
  std::vector<int> order_by_lm(m);
  for (size_t i = 0; i < m; ++i) order_by_lm[i] = static_cast<int>(i);
  std::sort(order_by_lm.begin(), order_by_lm.end(), [&](int a, int b) {
    auto c = ord.compare(lm(a), lm(b));
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return a < b;
  });
  std::vector<bool> active(m, false);
  std::vector<int> kept;
  for (int i : order_by_lm) {
    bool divisible = false;
    for (int k : kept)
      if (lm(k).divides(lm(i))) {
        divisible = true;
        break;
      }
    if (!divisible) {
      kept.push_back(i);
      active[i] = true;
    }
  }
  // Tail-reduce each survivor against the others to reach the reduced basis.
  for (int i : kept) {
    active[i] = false;
    eng.set_active(active);
    auto res = eng.reduce(eng.basis(i));
    eng.replace_basis(i, detail::make_monic(std::move(res.remainder)));
    active[i] = true;
  }
  eng.set_active({});
  for (int i : kept) rep.basis.push_back(eng.to_canonical(eng.basis(i)));
  rep.verified = true;  // by construction: all surviving S-pairs reduce to zero
  return rep;
}

/// Checks whether basis is already a Groebner basis under ord without
/// changing it: every S-pair not excused by the coprimality or chain
/// criterion must reduce to zero.
template <class K>
GBReport<K> is_groebner(const std::vector<Polynomial<K>>& basis,
                        const MonomialOrder& ord, const Caps& caps = {}) {
  using detail::SPair;
  detail::CapState capstate(caps);
  ReductionEngine<K> eng(ord);
  GBReport<K> rep;
  rep.order = ord.str();
  rep.basis = basis;
  for (const auto& g : basis)
    if (!g.is_zero()) eng.add_basis(detail::make_monic(eng.to_ord(g)));

  int m = static_cast<int>(eng.basis_size());
  auto lm = [&](int i) { return eng.basis(i).lm(); };
  std::vector<SPair<K>> todo;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (lm(i).coprime(lm(j))) continue;
      todo.push_back({i, j, lcm(lm(i), lm(j))});
    }
  std::sort(todo.begin(), todo.end(), detail::SPairCmp<K>{&eng.ord()});

  rep.verified = true;
  for (const SPair<K>& p : todo) {
    capstate.check_time();
    // Chain criterion, both-sides-proper form: sound for any processing
    // order because the justifying lcms are strictly smaller under ord.
    bool chained = false;
    for (int k = 0; k < m && !chained; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!lm(k).divides(p.l)) continue;
      Monomial lik = lcm(lm(p.i), lm(k)), ljk = lcm(lm(p.j), lm(k));
      if (!(lik == p.l) && !(ljk == p.l)) chained = true;
    }
    if (chained) continue;
    OrdPoly<K> s = detail::s_poly_ord(eng, eng.basis(p.i), eng.basis(p.j), p.l);
    rep.spair_count++;
    auto res = eng.reduce(std::move(s), true, nullptr, &capstate);
    rep.max_intermediate_terms = std::max(rep.max_intermediate_terms, res.max_terms);
    if (res.zero) {
      rep.reductions_to_zero++;
    } else {
      rep.verified = false;
      rep.fail_i = p.i;
      rep.fail_j = p.j;
      rep.fail_lm = res.remainder.lm();
      break;
    }
  }
  return rep;
}

/// Ideal equality by mutual normal-form reduction against the two computed
/// Groebner bases.
template <class K>
bool ideal_equal(const std::vector<Polynomial<K>>& F,
                 const std::vector<Polynomial<K>>& G, const MonomialOrder& ord,
                 const Caps& caps = {}) {
  GBReport<K> gf = buchberger(F, ord, caps);
  GBReport<K> gg = buchberger(G, ord, caps);
  for (const auto& f : F)
    if (!normal_form(f, gg.basis, ord).is_zero()) return false;
  for (const auto& g : G)
    if (!normal_form(g, gf.basis, ord).is_zero()) return false;
  return true;
}

/// Leading monomials of a report's basis.
template <class K>
std::vector<Monomial> leading_monomials(const GBReport<K>& rep,
                                        const MonomialOrder& ord) {
  std::vector<Monomial> lms;
  for (const auto& g : rep.basis)
    if (!g.is_zero()) lms.push_back(g.leading_monomial(ord));
  return lms;
}

/// Reduces a rational polynomial mod p. Throws if p divides a denominator.
inline FpPoly to_prime(const QPoly& f, uint32_t p) {
  std::vector<Term<PrimeField>> terms;
  for (const auto& t : f.terms()) {
    const mpq_class& q = t.c.value();
    unsigned long den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (den == 0) throw Error("prime divides a denominator");
    unsigned long num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    PrimeField c =
        PrimeField(static_cast<long>(num), p) / PrimeField(static_cast<long>(den), p);
    if (!c.is_zero()) terms.push_back({t.m, c});
  }
  return FpPoly::from_terms(std::move(terms));
}

/// Rational-versus-prime cross-check of the reduced basis leading monomials.
/// A disagreement flags p as unlucky for this input instead of trusting it.
struct CrossCheck {
  bool agree = false;
  size_t rational_basis_size = 0;
  size_t prime_basis_size = 0;
};

inline CrossCheck crosscheck_leading_terms(const std::vector<QPoly>& gens,
                                           const MonomialOrder& ord, uint32_t p,
                                           const Caps& caps = {}) {
  GBReport<Rational> over_q = buchberger(gens, ord, caps);
  std::vector<FpPoly> gens_p;
  for (const auto& g : gens) gens_p.push_back(to_prime(g, p));
  GBReport<PrimeField> over_p = buchberger(gens_p, ord, caps);
  std::vector<Monomial> lq = leading_monomials(over_q, ord);
  std::vector<Monomial> lp = leading_monomials(over_p, ord);
  std::sort(lq.begin(), lq.end());
  std::sort(lp.begin(), lp.end());
  CrossCheck res;
  res.rational_basis_size = over_q.basis.size();
  res.prime_basis_size = over_p.basis.size();
  res.agree = lq == lp;
  return res;
}

}  // namespace specht
