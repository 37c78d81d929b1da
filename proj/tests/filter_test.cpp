#include "specht/filter.hpp"

#include <algorithm>

#include "doctest.h"

using namespace specht;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(parts); }

bool is_antichain(const std::vector<Partition>& v) {
  for (const auto& a : v)
    for (const auto& b : v)
      if (!(a == b) && dominates(a, b)) return false;
  return true;
}

}  // namespace

TEST_CASE("poset elements and their order") {
  auto p6 = poset_elements(5, 2);  // weight 6, first part >= 2
  CHECK(p6.size() == 10);
  CHECK(p6.front() == P({6}));
  CHECK(p6.back() == P({2, 1, 1, 1, 1}));
  CHECK(std::is_sorted(p6.begin(), p6.end(),
                       [](const Partition& x, const Partition& y) {
                         return y < x;
                       }));
}

TEST_CASE("principal lower filter membership") {
  Filter f = Filter::principal_lower(5, 2, P({3, 3}));
  CHECK(f.n() == 5);
  CHECK(f.l() == 2);
  CHECK(f.weight() == 6);
  CHECK(f.kind() == Filter::Kind::lower);
  CHECK(f.frontier() == std::vector<Partition>{P({3, 3})});
  CHECK(f.str() == "lower{(3,3)} in P_6>=2");

  auto members = f.members();
  CHECK(members.size() == 6);
  CHECK(f.contains(P({3, 3})));
  CHECK(f.contains(P({2, 2, 2})));
  CHECK(f.contains(P({2, 1, 1, 1, 1})));
  CHECK_FALSE(f.contains(P({4, 2})));
  CHECK_FALSE(f.contains(P({6})));

  Filter c = f.complement();
  CHECK(c.kind() == Filter::Kind::upper);
  auto cm = c.members();
  CHECK(cm.size() == 4);
  CHECK(c.contains(P({6})));
  CHECK(c.contains(P({4, 2})));
  CHECK(c.contains(P({4, 1, 1})));
  CHECK(c.contains(P({5, 1})));
  CHECK_FALSE(c.contains(P({3, 3})));
}

TEST_CASE("frontier construction prunes dominated duplicates") {
  Filter f(5, 2, Filter::Kind::lower, {P({3, 3}), P({2, 2, 2}), P({3, 3})});
  CHECK(f.frontier() == std::vector<Partition>{P({3, 3})});
  CHECK(f == Filter::principal_lower(5, 2, P({3, 3})));
  // Elements outside the poset are rejected.
  CHECK_THROWS_AS(Filter(5, 2, Filter::Kind::lower, {P({3, 2})}), Error);
  CHECK_THROWS_AS(Filter(5, 2, Filter::Kind::lower, {P({1, 1, 1, 1, 1, 1})}),
                  Error);
}

TEST_CASE("filters are closed in the right direction") {
  for (const Filter& f : all_lower_filters(4, 2)) {
    auto members = f.members();
    CHECK(is_antichain(f.frontier()));
    for (const auto& mu : members)
      for (const auto& rho : poset_elements(4, 2))
        if (dominates(mu, rho)) CHECK(f.contains(rho));
    Filter c = f.complement();
    for (const auto& mu : c.members())
      for (const auto& rho : poset_elements(4, 2))
        if (dominates(rho, mu)) CHECK(c.contains(rho));
    CHECK(Filter::from_members(4, 2, Filter::Kind::lower, members) == f);
    CHECK(c.complement() == f);
  }
}

TEST_CASE("all_lower_filters on a chain poset") {
  // The dominance order on P_4 is a total order with 5 elements, so its
  // lower filters are the 6 prefixes.
  CHECK(all_lower_filters(4, 1).size() == 6);
  CHECK(all_lower_filters(4, 1, true).size() == 4);
  auto filters = all_lower_filters(4, 1);
  CHECK(filters.front().empty());
  CHECK(filters.back().members().size() == 5);
}

TEST_CASE("restriction along add_box: worked example") {
  Filter f = Filter::principal_lower(7, 1, P({3, 2, 2}));
  Filter r = f.restrict_add_box(2);
  CHECK(r.weight() == 6);
  CHECK(r.frontier() == std::vector<Partition>{P({3, 1, 1, 1}), P({2, 2, 2})});
}

TEST_CASE("restriction along add_box: small principal case") {
  Filter f = Filter::principal_lower(4, 1, P({2, 2}));
  Filter r = f.restrict_add_box(1);
  CHECK(r.frontier() == std::vector<Partition>{P({1, 1, 1})});
}

TEST_CASE("restricting the full filter gives the full filter") {
  Filter full =
      Filter::from_members(5, 2, Filter::Kind::lower, poset_elements(5, 2));
  for (int i = 1; i <= 7; ++i) {
    Filter r = full.restrict_add_box(i);
    CHECK(r.members().size() == poset_elements(4, 2).size());
  }
}

TEST_CASE("restriction agrees with the defining membership test") {
  for (int weight_case = 0; weight_case < 2; ++weight_case) {
    const int n = weight_case == 0 ? 5 : 6;
    const int l = weight_case == 0 ? 2 : 1;
    for (const Filter& f : all_lower_filters(n, l)) {
      for (int i = 1; i <= n + l - 1; ++i) {
        Filter r = f.restrict_add_box(i);
        CHECK(r.kind() == Filter::Kind::lower);
        CHECK(is_antichain(r.frontier()));
        for (const auto& mu : poset_elements(n - 1, l))
          CHECK(r.contains(mu) == f.contains(mu.add_box(i)));
      }
    }
  }
}
