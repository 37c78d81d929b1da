#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "specht/groebner.hpp"
#include "specht/monomial_ideal.hpp"
#include "specht/specht_ideal.hpp"

using namespace specht;

namespace {

Monomial mono(const std::vector<int>& exps) { return Monomial::from_exponents(exps); }

std::vector<QPoly> expanded(const IdealSpec& spec, bool standard_only) {
  std::vector<QPoly> out;
  for (const Generator& g : generators(spec, standard_only))
    out.push_back(g.poly.expand<Rational>());
  return out;
}

std::map<int, int> lm_degree_table(const GBReport<Rational>& rep,
                                   const MonomialOrder& ord) {
  return degree_histogram(minimal_generators(leading_monomials(rep, ord)));
}

// Canonical fingerprint of a basis: sorted printed forms.
std::set<std::string> basis_strings(const std::vector<QPoly>& basis, int n) {
  std::set<std::string> out;
  for (const auto& g : basis) out.insert(g.str(n));
  return out;
}

}  // namespace

TEST_CASE("normal form reduces members to zero and leaves remainders reduced") {
  MonomialOrder ord = MonomialOrder::default_lex(3);
  std::vector<QPoly> basis = {QPoly::parse("x3^2 - x1", 3),
                              QPoly::parse("x2 - x1", 3)};
  CHECK(normal_form(basis[0], basis, ord).is_zero());
  CHECK(normal_form(basis[1], basis, ord).is_zero());
  CHECK(normal_form(QPoly::zero(), basis, ord).is_zero());

  // A combination of basis elements reduces to zero.
  QPoly comb = basis[0].times_monomial(mono({1, 2, 0})) -
               basis[1].scaled(Rational(3, 2));
  CHECK(normal_form(comb, basis, ord).is_zero());

  // Nothing in the remainder is divisible by a basis leading monomial.
  QPoly r = normal_form(QPoly::parse("x3^3 + x2*x3 + x1", 3), basis, ord);
  CHECK_FALSE(r.is_zero());
  for (const auto& t : r.terms()) {
    CHECK_FALSE(mono({0, 0, 2}).divides(t.m));
    CHECK_FALSE(mono({0, 1, 0}).divides(t.m));
  }
}

TEST_CASE("division reconstructs the input exactly") {
  MonomialOrder ord = MonomialOrder::default_lex(3);
  std::vector<QPoly> basis = {QPoly::parse("x3^2 - x1*x2", 3),
                              QPoly::parse("x2^2 - 1", 3),
                              QPoly::parse("x1*x3 - x2", 3)};
  std::mt19937 rng(41);
  for (int t = 0; t < 40; ++t) {
    std::vector<Term<Rational>> ts;
    for (int k = 0; k < 4; ++k) {
      std::vector<int> e = {static_cast<int>(rng() % 4),
                            static_cast<int>(rng() % 4),
                            static_cast<int>(rng() % 4)};
      ts.push_back({mono(e), Rational(static_cast<long>(rng() % 9) - 4)});
    }
    QPoly f = QPoly::from_terms(std::move(ts));
    DivisionResult<Rational> d = divide(f, basis, ord);
    REQUIRE(d.quotients.size() == basis.size());
    QPoly rebuilt = d.remainder;
    for (size_t i = 0; i < basis.size(); ++i)
      rebuilt = rebuilt + d.quotients[i] * basis[i];
    CHECK(rebuilt == f);
  }
}

TEST_CASE("s-polynomial pins") {
  MonomialOrder rev3 = MonomialOrder::reverse_lex(3);
  QPoly f1 = QPoly::parse("x1*x2 - x3^2", 3);
  QPoly f2 = QPoly::parse("x2*x3 - 1", 3);
  // lcm of the heads is x1*x2*x3; the cross terms cancel to x1 - x3^3.
  CHECK(s_polynomial(f1, f2, rev3) == QPoly::parse("x1 - x3^3", 3));
  CHECK(s_polynomial(f1, f1, rev3).is_zero());
  CHECK_THROWS_AS(s_polynomial(f1, QPoly::zero(), rev3), Error);

  // Coprime leading monomials: the s-polynomial reduces to zero by the pair.
  QPoly g1 = QPoly::parse("x1^2 + x2", 3);
  QPoly g2 = QPoly::parse("x3^2 - x2", 3);
  MonomialOrder ord = MonomialOrder::default_lex(3);
  CHECK(normal_form(s_polynomial(g1, g2, ord), {g1, g2}, ord).is_zero());
}

TEST_CASE("is_groebner flags the stuck monomial on a non-basis") {
  MonomialOrder ord = MonomialOrder::default_lex(3);
  std::vector<QPoly> F = {QPoly::parse("x1*x2 - x3^2", 3),
                          QPoly::parse("x2*x3 - 1", 3)};
  GBReport<Rational> rep = is_groebner(F, ord);
  CHECK_FALSE(rep.verified);
  CHECK(rep.fail_i >= 0);
  CHECK(rep.fail_j >= 0);
  // The one s-pair leaves remainder -x1*x2^2 + x3, whose head x3 lies outside
  // the span of the two leading monomials.
  CHECK(rep.fail_lm == mono({0, 0, 1}));

  // Completing with buchberger repairs it without changing the ideal.
  GBReport<Rational> gb = buchberger(F, ord);
  CHECK(gb.verified);
  CHECK(is_groebner(gb.basis, ord).verified);
  CHECK(ideal_equal(F, gb.basis, ord));
}

TEST_CASE("buchberger output is reduced, monic, and input-order independent") {
  MonomialOrder ord = MonomialOrder::default_lex(3);
  GBReport<Rational> tiny =
      buchberger(std::vector<QPoly>{QPoly::parse("x1 - x2", 3)}, ord);
  REQUIRE(tiny.basis.size() == 1);
  CHECK(tiny.basis[0] == QPoly::parse("x2 - x1", 3));
  CHECK(buchberger(std::vector<QPoly>{}, ord).basis.empty());
  CHECK(buchberger(std::vector<QPoly>{}, ord).verified);

  std::vector<QPoly> F = {QPoly::parse("x1*x2 - x3^2", 3),
                          QPoly::parse("x2*x3 - 1", 3),
                          QPoly::parse("x1^2*x2 - x3", 3)};
  GBReport<Rational> gb = buchberger(F, ord);
  CHECK(gb.verified);
  for (size_t i = 0; i < gb.basis.size(); ++i) {
    CHECK(gb.basis[i].leading_coefficient(ord) == Rational(1));
    // No term of one element is divisible by the head of another.
    for (size_t j = 0; j < gb.basis.size(); ++j) {
      if (i == j) continue;
      Monomial lj = gb.basis[j].leading_monomial(ord);
      for (const auto& t : gb.basis[i].terms()) CHECK_FALSE(lj.divides(t.m));
    }
  }

  // Shuffling and rescaling the input reproduces the same reduced basis.
  std::mt19937 rng(9);
  for (int t = 0; t < 4; ++t) {
    std::vector<QPoly> G = F;
    std::shuffle(G.begin(), G.end(), rng);
    G[0] = G[0].scaled(Rational(-7, 3));
    GBReport<Rational> gb2 = buchberger(G, ord);
    CHECK(basis_strings(gb2.basis, 3) == basis_strings(gb.basis, 3));
  }
}

TEST_CASE("two-row column tableau ideal: head degree tables under both orders") {
  std::vector<QPoly> gens =
      expanded(IdealSpec::specht_head(2, Partition({3, 3})), true);
  CHECK(gens.size() == 3);

  GBReport<Rational> gb1 = buchberger(gens, MonomialOrder::default_lex(5));
  CHECK(gb1.verified);
  CHECK(lm_degree_table(gb1, MonomialOrder::default_lex(5)) ==
        std::map<int, int>{{3, 3}, {4, 2}});

  GBReport<Rational> gb2 = buchberger(gens, MonomialOrder::reverse_lex(5));
  CHECK(gb2.verified);
  CHECK(lm_degree_table(gb2, MonomialOrder::reverse_lex(5)) ==
        std::map<int, int>{{3, 3}, {4, 3}, {6, 1}});

  // The single-shape ideal coincides with its principal filter ideal, and for
  // the filter the standard generators are already a basis.
  Filter f = Filter::principal_lower(5, 2, Partition({3, 3}));
  std::vector<QPoly> fgens = expanded(IdealSpec::specht_filter(f), true);
  CHECK(fgens.size() == 21);
  CHECK(is_groebner(fgens, MonomialOrder::default_lex(5)).verified);
  CHECK(ideal_equal(gens, fgens, MonomialOrder::default_lex(5)));
}

TEST_CASE("standard generators span the full tableau ideal") {
  IdealSpec spec = IdealSpec::specht_head(2, Partition({2, 2}));
  MonomialOrder ord = MonomialOrder::default_lex(3);
  CHECK(ideal_equal(expanded(spec, true), expanded(spec, false), ord));
}

TEST_CASE("ideal_equal separates the mixed ideal from its cofactor") {
  // The generators of the l=1, m=3 ideal over a two-row square all share the
  // small delta as a factor, but the principal ideal it spans is larger.
  std::vector<QPoly> principal = {DiffProduct::delta(3).expand<Rational>()};
  std::vector<QPoly> mixed =
      expanded(IdealSpec::mixed(1, 3, Partition({2, 2})), false);
  CHECK(mixed.size() == 3);
  MonomialOrder ord = MonomialOrder::default_lex(4);
  CHECK_FALSE(ideal_equal(principal, mixed, ord));
  // One-sided containment does hold.
  GBReport<Rational> gb = buchberger(principal, ord);
  for (const auto& f : mixed) CHECK(normal_form(f, gb.basis, ord).is_zero());
}

TEST_CASE("prime cross-check agrees on good primes and catches bad ones") {
  std::vector<QPoly> gens =
      expanded(IdealSpec::specht_head(1, Partition({2, 2})), true);
  MonomialOrder ord = MonomialOrder::default_lex(4);
  CrossCheck cc = crosscheck_leading_terms(gens, ord, PrimeField::kDefaultPrime);
  CHECK(cc.agree);
  CHECK(cc.rational_basis_size == cc.prime_basis_size);

  // p = 2 kills the coefficient of x2 and changes the leading monomial.
  std::vector<QPoly> unlucky = {QPoly::parse("x1 - 2*x2", 2)};
  CHECK_FALSE(crosscheck_leading_terms(unlucky, MonomialOrder::default_lex(2), 2)
                  .agree);

  CHECK_THROWS_AS(to_prime(QPoly::parse("1/2*x1", 1), 2), Error);
  CHECK(to_prime(QPoly::parse("3*x1 - 1", 1), 3) == FpPoly(PrimeField(2, 3u)));
}

TEST_CASE("caps interrupt long runs") {
  // x1^2 - x2, x2^2 - x3, ... chains force degree growth under default lex.
  std::vector<QPoly> F = {QPoly::parse("x3^2 - x1*x2^3", 3),
                          QPoly::parse("x2^3 - x1*x3", 3)};
  Caps tight;
  tight.degree_cap = 2;
  CHECK_THROWS_AS(buchberger(F, MonomialOrder::default_lex(3), tight),
                  CapExceeded);
}

TEST_CASE("monomial ideal helpers") {
  CHECK(minimal_generators({mono({1, 0, 0}), mono({1, 1, 0}), mono({2, 0, 1})}) ==
        std::vector<Monomial>{mono({1, 0, 0})});
  CHECK(minimal_generators({}).empty());

  CHECK(monomial_ideal_dimension({mono({1, 0, 0})}, 3) == 2);
  CHECK(monomial_ideal_dimension({}, 3) == 3);
  CHECK(monomial_ideal_dimension({Monomial::one()}, 3) == -1);
  CHECK(monomial_ideal_dimension({mono({1, 0}), mono({0, 1})}, 2) == 0);

  CHECK(hilbert_function({}, 2, 5) ==
        std::vector<long>{1, 2, 3, 4, 5, 6});
  CHECK(hilbert_function({mono({2})}, 1, 4) ==
        std::vector<long>{1, 1, 0, 0, 0});

  CHECK(degree_histogram({mono({2, 0, 0}), mono({0, 3, 1})}) ==
        std::map<int, int>{{2, 1}, {4, 1}});
}

TEST_CASE("initial ideals of the same ideal share a hilbert function") {
  std::vector<QPoly> gens =
      expanded(IdealSpec::specht_head(2, Partition({3, 3})), true);
  MonomialOrder o1 = MonomialOrder::default_lex(5);
  MonomialOrder o2 = MonomialOrder::reverse_lex(5);
  std::vector<Monomial> in1 = leading_monomials(buchberger(gens, o1), o1);
  std::vector<Monomial> in2 = leading_monomials(buchberger(gens, o2), o2);
  CHECK(hilbert_function(in1, 5, 8) == hilbert_function(in2, 5, 8));
  CHECK(monomial_ideal_dimension(in1, 5) == monomial_ideal_dimension(in2, 5));
}
