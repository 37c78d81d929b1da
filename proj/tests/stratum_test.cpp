#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "specht/filter.hpp"
#include "specht/specht_ideal.hpp"
#include "specht/stratum.hpp"

using namespace specht;

namespace {

// Substitute one fresh value per class into f and evaluate.
Rational evaluate_on(const QPoly& f, const std::vector<int>& cls,
                     const std::vector<Rational>& vals) {
  Rational total(0);
  for (const auto& t : f.terms()) {
    Rational prod = t.c;
    for (size_t i = 0; i < cls.size(); ++i)
      for (uint32_t k = 0; k < t.m[static_cast<int>(i)]; ++k)
        prod *= vals[cls[i]];
    total += prod;
  }
  return total;
}

int count_classes(const std::vector<int>& cls) {
  return 1 + *std::max_element(cls.begin(), cls.end());
}

}  // namespace

TEST_CASE("set partitions enumerate restricted growth strings") {
  const std::vector<size_t> bell = {1, 2, 5, 15, 52};
  for (int n = 1; n <= 5; ++n) {
    auto all = set_partitions(n);
    CHECK(all.size() == bell[n - 1]);
    // First all-equal, last all-distinct, lexicographic in between.
    CHECK(all.front() == std::vector<int>(n, 0));
    std::vector<int> distinct(n);
    for (int i = 0; i < n; ++i) distinct[i] = i;
    CHECK(all.back() == distinct);
    for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] < all[i + 1]);
    for (const auto& cls : all) {
      CHECK(cls[0] == 0);
      int seen = 0;
      for (int c : cls) {
        CHECK(c <= seen + 1);
        CHECK(c >= 0);
        seen = std::max(seen, c);
      }
    }
  }
}

TEST_CASE("pattern profiles inflate the special coordinate") {
  // Classes {1,4}, {2}, {3,5,6} as a growth string.
  std::vector<int> cls = {0, 1, 2, 0, 2, 2};
  CHECK(pattern_profile(cls, 1, Variant::head) == Partition({3, 2, 1}));
  CHECK(pattern_profile(cls, 3, Variant::head) == Partition({4, 3, 1}));
  CHECK(pattern_profile(cls, 3, Variant::tail) == Partition({5, 2, 1}));

  // The profile always weighs n + l - 1.
  for (int l : {1, 2, 3})
    for (const auto& p : set_partitions(5))
      for (Variant v : {Variant::head, Variant::tail})
        CHECK(pattern_profile(p, l, v).weight() == 5 + l - 1);
}

TEST_CASE("patterns grouped by profile partition the growth strings") {
  // Class sizes (2,1,1) on four coordinates: 4!/2! / 2! = 6 patterns.
  CHECK(patterns_with_profile(Partition({2, 1, 1}), 4, 1, Variant::head).size() ==
        6);

  for (int l : {1, 2}) {
    for (Variant v : {Variant::head, Variant::tail}) {
      size_t total = 0;
      for (const Partition& mu : enumerate_partitions(4 + l - 1)) {
        auto pats = patterns_with_profile(mu, 4, l, v);
        total += pats.size();
        for (const StratumPattern& p : pats) {
          CHECK(p.profile == mu);
          CHECK(p.l == l);
          CHECK(p.variant == v);
          CHECK(p.classes == count_classes(p.cls));
          CHECK(pattern_profile(p.cls, l, v) == mu);
        }
      }
      // Every growth string lands in exactly one profile.
      CHECK(total == set_partitions(4).size());
    }
  }

  CHECK_THROWS_AS(patterns_with_profile(Partition({3, 3}), 4, 1, Variant::head),
                  Error);
  // A profile whose largest class cannot absorb the inflated special
  // coordinate is realized by no pattern at all.
  CHECK(patterns_with_profile(Partition({1, 1, 1, 1, 1}), 4, 2, Variant::head)
            .empty());
}

TEST_CASE("coincidence partition of explicit points") {
  std::vector<Rational> a = {Rational(1), Rational(0), Rational(2),
                             Rational(1), Rational(2), Rational(2)};
  CHECK(lambda_map(a, 1, Variant::head) == Partition({3, 2, 1}));
  CHECK(lambda_map(a, 3, Variant::head) == Partition({4, 3, 1}));
  CHECK(lambda_map(a, 3, Variant::tail) == Partition({5, 2, 1}));

  std::vector<Rational> distinct = {Rational(1), Rational(5), Rational(-2),
                                    Rational(1, 3)};
  CHECK(lambda_map(distinct, 1, Variant::head) == Partition({1, 1, 1, 1}));
  CHECK(lambda_map(distinct, 2, Variant::head) == Partition({2, 1, 1, 1}));

  std::vector<Rational> equal = {Rational(7), Rational(7), Rational(7)};
  CHECK(lambda_map(equal, 2, Variant::head) == Partition({4}));
}

TEST_CASE("pattern vanishing agrees with numeric substitution") {
  QPoly vdm = DiffProduct::delta(3).expand<Rational>();
  CHECK(vanishes_on_pattern(vdm, {0, 0, 1}));
  CHECK(vanishes_on_pattern(vdm, {0, 1, 1}));
  CHECK_FALSE(vanishes_on_pattern(vdm, {0, 1, 2}));

  QPoly f = QPoly::parse("x1", 1) - QPoly::parse("x1", 1);  // zero
  CHECK(vanishes_on_pattern(f, {0}));

  // A sum of products that does not vanish although each summand has a zero.
  QPoly g =
      QPoly::difference(1, 2) * QPoly::difference(3, 4) +
      QPoly::difference(1, 3) * QPoly::difference(2, 4);
  CHECK_FALSE(vanishes_on_pattern(g, {0, 0, 1, 1}));
  CHECK(vanishes_on_pattern(g, {0, 0, 0, 0}));

  // Exactness: symbolic answer matches evaluation at generic-looking values.
  std::mt19937 rng(31);
  std::vector<Rational> vals = {Rational(2), Rational(-3), Rational(5, 7),
                                Rational(11)};
  for (const auto& cls : set_partitions(4)) {
    for (int t = 0; t < 6; ++t) {
      std::vector<int> seq;
      for (int v = 1; v <= 4; ++v)
        if (rng() % 2) seq.push_back(v);
      if (seq.size() < 2) continue;
      std::shuffle(seq.begin(), seq.end(), rng);
      QPoly p = DiffProduct::of_sequence(seq).expand<Rational>();
      bool symbolic = vanishes_on_pattern(p, cls);
      // Distinct values per class make the evaluation faithful.
      CHECK(symbolic == evaluate_on(p, cls, vals).is_zero());
    }
  }
}

TEST_CASE("factored and expanded class vanishing agree") {
  std::mt19937 rng(37);
  for (int n : {4, 5}) {
    for (int l : {1, 2}) {
      auto shapes = enumerate_partitions(n + l - 1);
      for (int t = 0; t < 30; ++t) {
        std::vector<int> seq;
        for (int v = 1; v <= n; ++v)
          if (rng() % 2) seq.push_back(v);
        if (seq.size() < 2) continue;
        std::shuffle(seq.begin(), seq.end(), rng);
        DiffProduct p = DiffProduct::of_sequence(seq);
        const Partition& mu = shapes[rng() % shapes.size()];
        for (Variant v : {Variant::head, Variant::tail})
          CHECK(vanishes_on_class(p, mu, n, l, v) ==
                vanishes_on_class(p.expand<Rational>(), mu, n, l, v));
      }
    }
  }
}

TEST_CASE("a shape survives exactly on the strata it dominates") {
  // Some tableau of shape sigma stays nonzero on the mu stratum exactly when
  // sigma dominates mu; below that every filling dies.
  for (int l : {1, 2}) {
    int n = 5 - l + 1;
    for (const Partition& sigma : enumerate_partitions(5)) {
      if (sigma.first() < l) continue;
      auto tabs = enumerate_standard(l, sigma, Variant::head);
      for (const Partition& mu : enumerate_partitions(5)) {
        // Profiles with first part below l have no realizing pattern.
        if (mu.first() < l) continue;
        bool some_alive = false;
        for (const Tableau& t : tabs)
          if (!vanishes_on_class(specht_factors(t), mu, n, l, Variant::head))
            some_alive = true;
        CHECK(some_alive == dominates(sigma, mu));
      }
    }
  }
}
