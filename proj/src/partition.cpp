#include "specht/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace specht {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

int Partition::part(int i) const {
  if (i < 1) throw Error("row index is 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.resize(parts_[0]);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) cols[j]++;
  }
  return Partition(std::move(cols));
}

Partition Partition::add_box(int i) const {
  if (i < 1) throw Error("row index is 1-based");
  std::vector<int> p = parts_;
  if (i <= length())
    p[i - 1]++;
  else
    p.push_back(1);
  return Partition::from_unsorted(std::move(p));
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  return parts_ <=> o.parts_;
}

std::string Partition::str() const {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ')';
  return out.str();
}

bool dominates(const Partition& lam, const Partition& mu) {
  if (lam.weight() != mu.weight())
    throw Error("dominance compares partitions of equal weight");
  int acc_l = 0, acc_m = 0;
  int rows = std::max(lam.length(), mu.length());
  for (int i = 1; i <= rows; ++i) {
    acc_l += lam.part(i);
    acc_m += mu.part(i);
    if (acc_l < acc_m) return false;
  }
  return true;
}

bool strictly_dominates(const Partition& lam, const Partition& mu) {
  return lam != mu && dominates(lam, mu);
}

bool covers(const Partition& lam, const Partition& mu) {
  if (!strictly_dominates(lam, mu)) return false;
  for (const Partition& rho : all_partitions(lam.weight()))
    if (strictly_dominates(lam, rho) && strictly_dominates(rho, mu))
      return false;
  return true;
}

bool one_box_drop(const Partition& lam, const Partition& mu) {
  if (lam.weight() != mu.weight()) return false;
  int rows = std::max(lam.length(), mu.length());
  int from = 0, to = 0;
  for (int i = 1; i <= rows; ++i) {
    int d = mu.part(i) - lam.part(i);
    if (d == 0) continue;
    if (d == -1 && from == 0)
      from = i;
    else if (d == 1 && to == 0)
      to = i;
    else
      return false;
  }
  return from != 0 && to != 0 && from < to;
}

namespace {

void extend(std::vector<int>& cur, int remaining, int max_part,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    extend(cur, remaining - p, p, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int m, int min_first) {
  if (m < 0) throw Error("partition weight must be nonnegative");
  std::vector<Partition> out;
  if (m == 0) {
    if (min_first <= 1) out.push_back(Partition());
    return out;
  }
  std::vector<int> cur;
  for (int first = m; first >= std::max(min_first, 1); --first) {
    cur.push_back(first);
    extend(cur, m - first, first, out);
    cur.pop_back();
  }
  return out;
}

const std::vector<Partition>& all_partitions(int m) {
  static std::map<int, std::vector<Partition>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, enumerate_partitions(m)).first;
  return it->second;
}

}  // namespace specht
