#include "specht/filter.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace specht {

namespace {

/// Keeps only the maximal (lower kind) or minimal (upper kind) elements.
std::vector<Partition> antichain_of(std::vector<Partition> v, Filter::Kind kind) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<Partition> keep;
  for (const Partition& p : v) {
    bool shadowed = false;
    for (const Partition& q : v) {
      if (p == q) continue;
      bool q_covers_p = (kind == Filter::Kind::lower) ? dominates(q, p)
                                                      : dominates(p, q);
      if (q_covers_p) {
        shadowed = true;
        break;
      }
    }
    if (!shadowed) keep.push_back(p);
  }
  std::sort(keep.begin(), keep.end(), std::greater<Partition>());
  return keep;
}

}  // namespace

Filter::Filter(int n, int l, Kind kind, std::vector<Partition> frontier)
    : n_(n), l_(l), kind_(kind) {
  if (n < 1 || l < 1) throw Error("filter poset needs n >= 1 and l >= 1");
  for (const Partition& p : frontier) {
    if (p.weight() != weight())
      throw Error("frontier element has wrong weight for the poset");
    if (p.first() < l)
      throw Error("frontier element below the first-part threshold");
  }
  frontier_ = antichain_of(std::move(frontier), kind);
}

Filter Filter::principal_lower(int n, int l, const Partition& p) {
  return Filter(n, l, Kind::lower, {p});
}

Filter Filter::from_members(int n, int l, Kind kind,
                            const std::vector<Partition>& members) {
  Filter f(n, l, kind, members);
  std::set<Partition> given(members.begin(), members.end());
  for (const Partition& p : f.members())
    if (!given.count(p))
      throw Error("member set is not a filter of the poset");
  std::vector<Partition> closure = f.members();
  if (closure.size() != given.size())
    throw Error("member set is not a filter of the poset");
  return f;
}

bool Filter::contains(const Partition& p) const {
  if (p.weight() != weight()) throw Error("partition outside the filter poset");
  if (p.first() < l_) return false;
  for (const Partition& f : frontier_) {
    if (kind_ == Kind::lower && dominates(f, p)) return true;
    if (kind_ == Kind::upper && dominates(p, f)) return true;
  }
  return false;
}

std::vector<Partition> Filter::members() const {
  std::vector<Partition> out;
  for (const Partition& p : poset_elements(n_, l_))
    if (contains(p)) out.push_back(p);
  return out;
}

Filter Filter::complement() const {
  std::vector<Partition> rest;
  for (const Partition& p : poset_elements(n_, l_))
    if (!contains(p)) rest.push_back(p);
  Kind other = (kind_ == Kind::lower) ? Kind::upper : Kind::lower;
  return Filter(n_, l_, other, antichain_of(std::move(rest), other));
}

Filter Filter::restrict_add_box(int i) const {
  if (kind_ != Kind::lower) throw Error("restriction expects a lower filter");
  if (n_ < 2) throw Error("poset too small to restrict");
  std::vector<Partition> members;
  for (const Partition& mu : poset_elements(n_ - 1, l_)) {
    Partition grown = mu.add_box(i);
    if (grown.first() >= l_ && contains(grown)) members.push_back(mu);
  }
  return Filter(n_ - 1, l_, Kind::lower, antichain_of(std::move(members), Kind::lower));
}

std::string Filter::str() const {
  std::ostringstream out;
  out << (kind_ == Kind::lower ? "lower{" : "upper{");
  for (size_t i = 0; i < frontier_.size(); ++i) {
    if (i) out << ' ';
    out << frontier_[i].str();
  }
  out << "} in P_" << weight() << ">=" << l_;
  return out.str();
}

std::vector<Partition> poset_elements(int n, int l) {
  return enumerate_partitions(n + l - 1, l);
}

std::vector<Filter> all_lower_filters(int n, int l, bool proper_only) {
  std::vector<Partition> elems = poset_elements(n, l);
  size_t k = elems.size();
  if (k > 22) throw Error("poset too large to enumerate filters");
  // down[i]: bitmask of poset elements dominated by element i.
  std::vector<uint32_t> down(k, 0);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (dominates(elems[i], elems[j])) down[i] |= uint32_t{1} << j;

  std::vector<std::pair<size_t, std::vector<Partition>>> sets;
  for (uint32_t mask = 0; mask < (uint32_t{1} << k); ++mask) {
    bool closed = true;
    for (size_t i = 0; i < k && closed; ++i)
      if (mask & (uint32_t{1} << i))
        closed = (down[i] & ~mask) == 0;
    if (!closed) continue;
    std::vector<Partition> members;
    for (size_t i = 0; i < k; ++i)
      if (mask & (uint32_t{1} << i)) members.push_back(elems[i]);
    if (proper_only && (members.empty() || members.size() == k)) continue;
    sets.emplace_back(members.size(), std::move(members));
  }
  std::sort(sets.begin(), sets.end());
  std::vector<Filter> out;
  out.reserve(sets.size());
  for (auto& [count, members] : sets)
    out.push_back(Filter::from_members(n, l, Filter::Kind::lower, members));
  return out;
}

}  // namespace specht
