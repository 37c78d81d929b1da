#include "specht/diffprod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace specht {

DiffProduct DiffProduct::of_sequence(const std::vector<int>& labels) {
  DiffProduct p;
  for (size_t a = 0; a < labels.size(); ++a)
    for (size_t b = a + 1; b < labels.size(); ++b) {
      int i = labels[a], j = labels[b];
      if (i < 1 || j < 1) throw Error("labels are 1-based");
      if (i == j) throw Error("degenerate column");
      if (i > j) {
        std::swap(i, j);
        p.sign_ = -p.sign_;
      }
      p.factors_[{i, j}]++;
      p.degree_++;
    }
  return p;
}

DiffProduct DiffProduct::of_columns(const std::vector<std::vector<int>>& cols) {
  DiffProduct p;
  for (const auto& col : cols) p = p * of_sequence(col);
  return p;
}

DiffProduct DiffProduct::delta(int m) {
  if (m < 1) throw Error("delta needs m >= 1");
  std::vector<int> seq(m);
  std::iota(seq.begin(), seq.end(), 1);
  return of_sequence(seq);
}

int DiffProduct::max_index() const {
  int mx = 0;
  for (const auto& [f, mult] : factors_) mx = std::max(mx, f.second);
  return mx;
}

DiffProduct DiffProduct::operator*(const DiffProduct& o) const {
  DiffProduct p = *this;
  p.sign_ *= o.sign_;
  for (const auto& [f, mult] : o.factors_) p.factors_[f] += mult;
  p.degree_ += o.degree_;
  return p;
}

DiffProduct DiffProduct::lcm(const DiffProduct& a, const DiffProduct& b) {
  DiffProduct p;
  p.factors_ = a.factors_;
  for (const auto& [f, mult] : b.factors_) {
    int& m = p.factors_[f];
    m = std::max(m, mult);
  }
  p.sign_ = 1;
  p.degree_ = 0;
  for (const auto& [f, mult] : p.factors_) p.degree_ += mult;
  return p;
}

bool DiffProduct::divides(const DiffProduct& o) const {
  if (degree_ > o.degree_) return false;
  for (const auto& [f, mult] : factors_) {
    auto it = o.factors_.find(f);
    if (it == o.factors_.end() || it->second < mult) return false;
  }
  return true;
}

DiffProduct DiffProduct::quotient_of(const DiffProduct& o) const {
  if (!divides(o)) throw Error("factor multiset does not divide");
  DiffProduct q;
  q.factors_ = o.factors_;
  for (const auto& [f, mult] : factors_) {
    auto it = q.factors_.find(f);
    it->second -= mult;
    if (it->second == 0) q.factors_.erase(it);
  }
  q.degree_ = o.degree_ - degree_;
  q.sign_ = o.sign_ * sign_;
  return q;
}

bool DiffProduct::vanishes_on(const std::vector<int>& cls) const {
  for (const auto& [f, mult] : factors_) {
    size_t i = static_cast<size_t>(f.first) - 1;
    size_t j = static_cast<size_t>(f.second) - 1;
    if (i >= cls.size() || j >= cls.size())
      throw Error("class pattern shorter than the variable range");
    if (cls[i] == cls[j]) return true;
  }
  return false;
}

std::string DiffProduct::str() const {
  std::ostringstream out;
  if (sign_ < 0) out << '-';
  if (factors_.empty()) {
    out << '1';
    return out.str();
  }
  bool first = true;
  for (const auto& [f, mult] : factors_) {
    if (!first) out << '*';
    first = false;
    out << "(x" << f.first << "-x" << f.second << ')';
    if (mult > 1) out << '^' << mult;
  }
  return out.str();
}

PruneResult prune_by_divisibility(const std::vector<DiffProduct>& gens) {
  std::vector<int> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return gens[a].degree() < gens[b].degree();
  });
  PruneResult res;
  for (int i : order) {
    int divisor = -1;
    for (int k : res.kept)
      if (gens[k].divides(gens[i])) {
        divisor = k;
        break;
      }
    if (divisor < 0)
      res.kept.push_back(i);
    else
      res.certificate.push_back({i, divisor});
  }
  std::sort(res.kept.begin(), res.kept.end());
  std::sort(res.certificate.begin(), res.certificate.end());
  return res;
}

}  // namespace specht
