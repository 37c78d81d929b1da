#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "specht/monomial.hpp"
#include "specht/poly.hpp"

namespace specht {

/// Degree / wall-clock caps for long computations; zero means unlimited.
struct Caps {
  uint32_t degree_cap = 0;
  double time_cap_seconds = 0;
};

namespace detail {

/// Deadline tracker shared by a whole Buchberger run.
struct CapState {
  uint32_t degree_cap = 0;
  bool has_deadline = false;
  std::chrono::steady_clock::time_point deadline;

  explicit CapState(const Caps& caps) : degree_cap(caps.degree_cap) {
    if (caps.time_cap_seconds > 0) {
      has_deadline = true;
      deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(caps.time_cap_seconds));
    }
  }
  void check_degree(uint32_t deg) const {
    if (degree_cap && deg > degree_cap) throw CapExceeded("degree cap exceeded");
  }
  void check_time() const {
    if (has_deadline && std::chrono::steady_clock::now() > deadline)
      throw CapExceeded("time cap exceeded");
  }
};

}  // namespace detail

/// A polynomial as a term vector sorted descending under one fixed order;
/// the working representation of the division engine.
template <class K>
struct OrdPoly {
  std::vector<Term<K>> t;
  bool is_zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().m; }
  const K& lc() const { return t.front().c; }
};

/// Division with remainder against an indexed basis under a fixed order.
/// The reducer for a term is always the basis element of lowest index whose
/// leading monomial divides it, which makes every result deterministic.
template <class K>
class ReductionEngine {
 public:
  explicit ReductionEngine(MonomialOrder ord) : ord_(std::move(ord)) {}

  const MonomialOrder& ord() const { return ord_; }

  OrdPoly<K> to_ord(const Polynomial<K>& f) const {
    OrdPoly<K> g;
    g.t = f.terms();
    std::sort(g.t.begin(), g.t.end(), [this](const Term<K>& a, const Term<K>& b) {
      return ord_.greater(a.m, b.m);
    });
    return g;
  }
  Polynomial<K> to_canonical(const OrdPoly<K>& f) const {
    return Polynomial<K>::from_terms(f.t);
  }

  /// Appends a nonzero basis element; returns its index.
  int add_basis(OrdPoly<K> g) {
    if (g.is_zero()) throw Error("zero polynomial cannot join a basis");
    masks_.push_back(g.lm().support_mask());
    basis_.push_back(std::move(g));
    return static_cast<int>(basis_.size()) - 1;
  }
  size_t basis_size() const { return basis_.size(); }
  const OrdPoly<K>& basis(int i) const { return basis_[i]; }
  /// Replaces an element, keeping its leading term (used by tail reduction).
  void replace_basis(int i, OrdPoly<K> g) { basis_[i] = std::move(g); }

  /// Marks elements to skip during reduction (minimalization).
  void set_active(std::vector<bool> active) { active_ = std::move(active); }

  struct Result {
    OrdPoly<K> remainder;
    size_t steps = 0;
    size_t max_terms = 0;
    bool zero = false;
    /// True only when stop_early cut the reduction; remainder is partial.
    bool truncated = false;
  };

  /// Full normal form of f. With stop_early, bails out as soon as one term
  /// of the remainder is known, which already certifies NF != 0.
  /// With quotients, also accumulates per-basis-element cofactors such that
  /// f = sum_i q_i b_i + remainder.
  Result reduce(OrdPoly<K> f, bool stop_early = false,
                std::vector<std::pair<int, OrdPoly<K>>>* quotients = nullptr,
                const detail::CapState* caps = nullptr) const {
    Result res;
    std::vector<Term<K>>& work = f.t;
    size_t start = 0;
    std::vector<Term<K>> rem, next;
    size_t step_budget_check = 0;
    res.max_terms = work.size();
    while (start < work.size()) {
      const Term<K>& head = work[start];
      if (caps) {
        caps->check_degree(head.m.deg);
        if ((++step_budget_check & 0xff) == 0) caps->check_time();
      }
      int gi = find_reducer(head.m);
      if (gi < 0) {
        rem.push_back(head);
        ++start;
        if (stop_early) {
          res.truncated = true;
          break;
        }
        continue;
      }
      ++res.steps;
      const OrdPoly<K>& g = basis_[gi];
      Monomial qm = head.m / g.lm();
      K qc = head.c / g.lc();
      if (quotients) record_quotient(*quotients, gi, qm, qc);
      // work[start..] - qc * x^qm * g, with the leading terms cancelling.
      next.clear();
      size_t i = start + 1, j = 1;
      while (i < work.size() && j < g.t.size()) {
        Monomial gm = g.t[j].m * qm;
        auto cmp = ord_.compare(work[i].m, gm);
        if (cmp == std::strong_ordering::greater) {
          next.push_back(work[i++]);
        } else if (cmp == std::strong_ordering::less) {
          next.push_back({gm, -(g.t[j].c * qc)});
          ++j;
        } else {
          K c = work[i].c - g.t[j].c * qc;
          if (!c.is_zero()) next.push_back({work[i].m, std::move(c)});
          ++i;
          ++j;
        }
      }
      for (; i < work.size(); ++i) next.push_back(work[i]);
      for (; j < g.t.size(); ++j)
        next.push_back({g.t[j].m * qm, -(g.t[j].c * qc)});
      work.swap(next);
      start = 0;
      res.max_terms = std::max(res.max_terms, work.size() + rem.size());
    }
    res.remainder.t = std::move(rem);
    res.zero = res.remainder.t.empty() && !res.truncated;
    return res;
  }

 private:
  int find_reducer(const Monomial& m) const {
    uint32_t mask = m.support_mask();
    for (size_t i = 0; i < basis_.size(); ++i) {
      if (!active_.empty() && !active_[i]) continue;
      if (masks_[i] & ~mask) continue;
      if (basis_[i].lm().divides(m)) return static_cast<int>(i);
    }
    return -1;
  }

  static void record_quotient(std::vector<std::pair<int, OrdPoly<K>>>& q, int gi,
                              const Monomial& qm, const K& qc) {
    for (auto& [idx, poly] : q)
      if (idx == gi) {
        poly.t.push_back({qm, qc});
        return;
      }
    q.push_back({gi, OrdPoly<K>{{{qm, qc}}}});
  }

  MonomialOrder ord_;
  std::vector<OrdPoly<K>> basis_;
  std::vector<uint32_t> masks_;
  std::vector<bool> active_;
};

}  // namespace specht
