#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "specht/poly.hpp"

using namespace specht;

namespace {

Monomial mono(const std::vector<int>& exps) { return Monomial::from_exponents(exps); }

Monomial random_monomial(std::mt19937& rng, int n, int max_exp) {
  std::vector<int> e(n);
  for (int& x : e) x = static_cast<int>(rng() % (max_exp + 1));
  return mono(e);
}

Rational random_rational(std::mt19937& rng) {
  long num = static_cast<long>(rng() % 21) - 10;
  long den = static_cast<long>(rng() % 9) + 1;
  return Rational(num, den);
}

// Three-way result as an int so totality checks read cleanly.
int cmp(const MonomialOrder& ord, const Monomial& a, const Monomial& b) {
  auto c = ord.compare(a, b);
  if (c == std::strong_ordering::less) return -1;
  if (c == std::strong_ordering::greater) return 1;
  return 0;
}

}  // namespace

TEST_CASE("monomial basics") {
  Monomial one = Monomial::one();
  CHECK(one.is_one());
  CHECK(one.deg == 0);
  CHECK(one.str(3) == "1");

  CHECK(Monomial::variable(0).str(3) == "x1");
  CHECK(Monomial::variable(2).str(3) == "x3");

  Monomial m = mono({2, 0, 1});
  CHECK(m.deg == 3);
  CHECK(m.str(3) == "x1^2*x3");
  CHECK(m[0] == 2);
  CHECK(m[1] == 0);
  CHECK(m[2] == 1);

  Monomial p = m * mono({0, 1, 1});
  CHECK(p == mono({2, 1, 2}));
  CHECK(p.deg == 5);

  CHECK(mono({1, 0, 1}).divides(m));
  CHECK_FALSE(mono({0, 1, 0}).divides(m));
  CHECK(m / mono({1, 0, 1}) == mono({1, 0, 0}));
  CHECK_THROWS_AS(m / mono({0, 1, 0}), Error);

  CHECK(lcm(mono({2, 0, 1}), mono({1, 3, 0})) == mono({2, 3, 1}));
  CHECK(mono({1, 0, 0}).coprime(mono({0, 2, 1})));
  CHECK_FALSE(mono({1, 0, 1}).coprime(mono({0, 0, 2})));
}

TEST_CASE("order strings parse and print") {
  CHECK(MonomialOrder::default_lex(5).str() == "lex:1,2,3,4,5");
  CHECK(MonomialOrder::reverse_lex(5).str() == "lex:5,4,3,2,1");
  CHECK(MonomialOrder::default_lex(1).str() == "lex:1");

  // parse . str is the identity on canonical strings.
  for (const std::string s : {"lex:2,1,3", "grevlex:1,2,3,4",
                              "weight:1,2,0;tie=lex:1,2,3",
                              "weight:1,1;tie=grevlex:2,1"}) {
    MonomialOrder ord = MonomialOrder::parse(s);
    CHECK(ord.str() == s);
  }
  CHECK(MonomialOrder::parse("lex:5,4,3,2,1").n() == 5);

  // A parsed copy of an order compares exactly like the original.
  MonomialOrder a = MonomialOrder::default_lex(4);
  MonomialOrder b = MonomialOrder::parse(a.str());
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    Monomial x = random_monomial(rng, 4, 4);
    Monomial y = random_monomial(rng, 4, 4);
    CHECK(cmp(a, x, y) == cmp(b, x, y));
  }
}

TEST_CASE("order strings reject malformed input") {
  CHECK_THROWS_AS(MonomialOrder::parse("lex"), Error);
  CHECK_THROWS_AS(MonomialOrder::parse("foo:1,2"), Error);
  CHECK_THROWS_AS(MonomialOrder::parse("lex:1,1"), Error);
  CHECK_THROWS_AS(MonomialOrder::parse("lex:1,3"), Error);
  CHECK_THROWS_AS(MonomialOrder::parse("lex:0,1"), Error);
  CHECK_THROWS_AS(MonomialOrder::parse("lex:1,,2"), Error);
  CHECK_THROWS_AS(MonomialOrder::parse("weight:1,2"), Error);
  CHECK_THROWS_AS(MonomialOrder::parse("weight:1,2;tie=lex:1"), Error);
  CHECK_THROWS_AS(MonomialOrder::parse("weight:-1,2;tie=lex:1,2"), Error);
}

TEST_CASE("lex order: the list runs from smallest variable to largest") {
  MonomialOrder ord = MonomialOrder::default_lex(5);
  // x2 beats any power of x1.
  CHECK(ord.greater(mono({0, 1, 0, 0, 0}), mono({5, 0, 0, 0, 0})));
  // x5 beats anything supported on x1..x4.
  CHECK(ord.greater(mono({0, 0, 0, 0, 1}), mono({9, 9, 9, 9, 0})));

  // Reversing the list turns x1 into the largest variable.
  MonomialOrder rev = MonomialOrder::reverse_lex(5);
  CHECK(rev.greater(mono({1, 0, 0, 0, 0}), mono({0, 5, 0, 0, 0})));

  // All monomials of degree <= 2 in three variables, fully sorted.
  MonomialOrder l3 = MonomialOrder::default_lex(3);
  std::vector<Monomial> ms = {
      mono({0, 0, 0}), mono({1, 0, 0}), mono({2, 0, 0}), mono({0, 1, 0}),
      mono({1, 1, 0}), mono({0, 2, 0}), mono({0, 0, 1}), mono({1, 0, 1}),
      mono({0, 1, 1}), mono({0, 0, 2})};
  std::vector<Monomial> sorted = ms;
  std::mt19937 rng(3);
  std::shuffle(sorted.begin(), sorted.end(), rng);
  std::sort(sorted.begin(), sorted.end(),
            [&](const Monomial& x, const Monomial& y) { return l3.greater(y, x); });
  CHECK(sorted == ms);
}

TEST_CASE("grevlex order: graded, ties favor less of the small variables") {
  MonomialOrder ord = MonomialOrder::parse("grevlex:1,2,3");
  // Degree dominates.
  CHECK(ord.greater(mono({5, 0, 0}), mono({0, 1, 0})));
  CHECK(ord.greater(mono({1, 0, 0}), mono({0, 0, 0})));
  // Within degree 2 the full chain is x1^2 < x1x2 < x1x3 < x2^2 < x2x3 < x3^2.
  std::vector<Monomial> chain = {mono({2, 0, 0}), mono({1, 1, 0}),
                                 mono({1, 0, 1}), mono({0, 2, 0}),
                                 mono({0, 1, 1}), mono({0, 0, 2})};
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    CHECK(ord.greater(chain[i + 1], chain[i]));
}

TEST_CASE("weight order pins") {
  MonomialOrder ord = MonomialOrder::parse("weight:1,2,0;tie=lex:1,2,3");
  // x3 has weight zero, so any power of it loses to x1.
  CHECK(ord.greater(mono({1, 0, 0}), mono({0, 0, 7})));
  // Weight 3 beats weight 2.
  CHECK(ord.greater(mono({3, 0, 0}), mono({0, 1, 0})));
  // Equal weights fall through to the tie-break order.
  CHECK(ord.greater(mono({0, 1, 0}), mono({2, 0, 0})));
  CHECK(cmp(ord, mono({0, 0, 3}), mono({0, 0, 1})) == 1);
}

TEST_CASE("monomial orders are total, transitive, multiplicative well-orders") {
  std::vector<MonomialOrder> orders = {
      MonomialOrder::default_lex(4), MonomialOrder::reverse_lex(4),
      MonomialOrder::parse("grevlex:2,4,1,3"),
      MonomialOrder::parse("weight:3,1,0,2;tie=lex:4,3,2,1")};
  std::mt19937 rng(17);
  for (const MonomialOrder& ord : orders) {
    for (int t = 0; t < 150; ++t) {
      Monomial a = random_monomial(rng, 4, 3);
      Monomial b = random_monomial(rng, 4, 3);
      Monomial c = random_monomial(rng, 4, 3);
      int ab = cmp(ord, a, b);
      CHECK(ab == -cmp(ord, b, a));
      CHECK((ab == 0) == (a == b));
      if (ab == cmp(ord, b, c) && ab != 0) CHECK(cmp(ord, a, c) == ab);
      // Multiplying both sides by c never flips the comparison.
      CHECK(cmp(ord, a * c, b * c) == ab);
      // 1 is the global minimum.
      CHECK(cmp(ord, a, Monomial::one()) >= 0);
    }
  }
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(3, 6) == Rational(1, 2));
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("0").is_zero());
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);

  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    Rational c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK(a / b * b == a);
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("prime field arithmetic") {
  CHECK(PrimeField::kDefaultPrime == 32749);
  CHECK(PrimeField(32749).is_zero());
  CHECK(PrimeField(-1) == PrimeField(32748));
  CHECK(PrimeField(1, 2, 32749) * PrimeField(2) == PrimeField(1));
  CHECK_THROWS_AS(PrimeField(1) / PrimeField(0), Error);

  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    PrimeField a(static_cast<long>(rng() % 100000) - 50000);
    PrimeField b(static_cast<long>(rng() % 100000) - 50000);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == PrimeField(0));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == PrimeField(1));
      CHECK(b / a * a == b);
    }
  }
}

TEST_CASE("polynomial parse, print, and normal form of the term list") {
  // Terms print from the storage-largest monomial down, so output is stable.
  CHECK(QPoly::zero().str(3) == "0");
  CHECK(QPoly(Rational(-5)).str(3) == "-5");
  CHECK(QPoly::parse("x2 - x1", 2).str(2) == "x2 - x1");
  CHECK(QPoly::parse("x1 - x2", 2).str(2) == "-x2 + x1");
  CHECK(QPoly::parse("1/2*x1^2 - x1*x2 + 3", 2).str(2) ==
        "-x1*x2 + 1/2*x1^2 + 3");
  CHECK(QPoly::difference(1, 2) == QPoly::parse("x1 - x2", 2));

  // Like terms combine; cancellation drops terms entirely.
  CHECK(QPoly::parse("x1 + x1", 1) == QPoly::parse("2*x1", 1));
  CHECK(QPoly::parse("x1*x2 - x2*x1", 2).is_zero());
  CHECK(QPoly::parse("x1 + 0", 1) == QPoly::parse("x1", 1));

  QPoly f = QPoly::parse("2*x1^3*x3 - 1/3*x2^2 + x1 - 7", 3);
  CHECK(QPoly::parse(f.str(3), 3) == f);
  CHECK(f.term_count() == 4);
  CHECK(f.total_degree() == 4);
}

TEST_CASE("polynomial parse rejects malformed input") {
  CHECK_THROWS_AS(QPoly::parse("", 2), Error);
  CHECK_THROWS_AS(QPoly::parse("  ", 2), Error);
  CHECK_THROWS_AS(QPoly::parse("x", 2), Error);
  CHECK_THROWS_AS(QPoly::parse("x0", 2), Error);
  CHECK_THROWS_AS(QPoly::parse("x3", 2), Error);
  CHECK_THROWS_AS(QPoly::parse("x1^", 2), Error);
  CHECK_THROWS_AS(QPoly::parse("3*", 2), Error);
  CHECK_THROWS_AS(QPoly::parse("+ +", 2), Error);
}

TEST_CASE("polynomial ring axioms on random inputs") {
  std::mt19937 rng(23);
  auto random_poly = [&](int n) {
    std::vector<Term<Rational>> ts;
    int k = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < k; ++t)
      ts.push_back({random_monomial(rng, n, 3), random_rational(rng)});
    return QPoly::from_terms(std::move(ts));
  };
  for (int t = 0; t < 60; ++t) {
    QPoly f = random_poly(3);
    QPoly g = random_poly(3);
    QPoly h = random_poly(3);
    CHECK(f + g == g + f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f + g) - g == f);
    CHECK(f * g == g * f);
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK((f - f).is_zero());
    CHECK(-(-f) == f);
    Monomial m = random_monomial(rng, 3, 2);
    CHECK(f.times_monomial(m) == f * QPoly::monomial(m, Rational(1)));
    Rational c = random_rational(rng);
    CHECK(f.scaled(c) == f * QPoly(c));
    CHECK(QPoly::parse(f.str(3), 3) == f);
  }
}

TEST_CASE("leading terms depend on the order") {
  QPoly f = QPoly::parse("x1^3 + x2", 2);
  CHECK(f.leading_monomial(MonomialOrder::default_lex(2)) == mono({0, 1}));
  CHECK(f.leading_monomial(MonomialOrder::reverse_lex(2)) == mono({3, 0}));
  CHECK(f.leading_coefficient(MonomialOrder::default_lex(2)) == Rational(1));

  QPoly g = QPoly::parse("-2*x1*x2 + x1", 2);
  CHECK(g.leading_monomial(MonomialOrder::default_lex(2)) == mono({1, 1}));
  CHECK(g.leading_coefficient(MonomialOrder::default_lex(2)) == Rational(-2));

  CHECK_THROWS_AS(QPoly::zero().leading_monomial(MonomialOrder::default_lex(2)),
                  Error);
}
