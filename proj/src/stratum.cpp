#include "specht/stratum.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "specht/common.hpp"

namespace specht {

std::vector<std::vector<int>> set_partitions(int n) {
  if (n < 1) throw Error("need at least one coordinate");
  std::vector<std::vector<int>> out;
  std::vector<int> cls(n, 0);
  std::function<void(int, int)> grow = [&](int i, int used) {
    if (i == n) {
      out.push_back(cls);
      return;
    }
    for (int c = 0; c <= used; ++c) {
      cls[i] = c;
      grow(i + 1, std::max(used, c + 1));
    }
  };
  grow(0, 0);
  return out;
}

Partition pattern_profile(const std::vector<int>& cls, int l, Variant variant) {
  if (cls.empty()) throw Error("empty pattern");
  if (l < 1) throw Error("l must be positive");
  int classes = 0;
  for (int c : cls) classes = std::max(classes, c + 1);
  std::vector<int> size(classes, 0);
  for (int c : cls) ++size[c];
  const int special = variant == Variant::head ? cls.front() : cls.back();
  size[special] += l - 1;
  return Partition::from_unsorted(std::move(size));
}

std::vector<StratumPattern> patterns_with_profile(const Partition& mu, int n,
                                                  int l, Variant variant) {
  if (mu.weight() != n + l - 1)
    throw Error("profile weight must be n + l - 1");
  std::vector<StratumPattern> out;
  for (auto& cls : set_partitions(n)) {
    Partition p = pattern_profile(cls, l, variant);
    if (p != mu) continue;
    StratumPattern sp;
    sp.classes = *std::max_element(cls.begin(), cls.end()) + 1;
    sp.cls = std::move(cls);
    sp.l = l;
    sp.variant = variant;
    sp.profile = p;
    out.push_back(std::move(sp));
  }
  return out;
}

Partition lambda_map(const std::vector<Rational>& a, int l, Variant variant) {
  if (a.empty()) throw Error("empty point");
  std::vector<int> cls;
  std::vector<Rational> values;
  for (const Rational& x : a) {
    int c = -1;
    for (size_t i = 0; i < values.size(); ++i)
      if (values[i] == x) {
        c = static_cast<int>(i);
        break;
      }
    if (c < 0) {
      c = static_cast<int>(values.size());
      values.push_back(x);
    }
    cls.push_back(c);
  }
  return pattern_profile(cls, l, variant);
}

bool vanishes_on_pattern(const QPoly& f, const std::vector<int>& cls) {
  const int n = static_cast<int>(cls.size());
  std::vector<Term<Rational>> mapped;
  mapped.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m = Monomial::one();
    for (int i = 0; i < kMaxVars; ++i) {
      const int e = t.m[i];
      if (e == 0) continue;
      if (i >= n) throw Error("polynomial mentions a variable past n");
      m.set(cls[i], m[cls[i]] + e);
    }
    mapped.push_back({m, t.c});
  }
  return QPoly::from_terms(std::move(mapped)).is_zero();
}

bool vanishes_on_class(const QPoly& f, const Partition& mu, int n, int l,
                       Variant variant) {
  for (const auto& p : patterns_with_profile(mu, n, l, variant))
    if (!vanishes_on_pattern(f, p.cls)) return false;
  return true;
}

bool vanishes_on_class(const DiffProduct& f, const Partition& mu, int n, int l,
                       Variant variant) {
  if (f.max_index() > n) throw Error("product mentions a variable past n");
  for (const auto& p : patterns_with_profile(mu, n, l, variant))
    if (!f.vanishes_on(p.cls)) return false;
  return true;
}

}  // namespace specht
