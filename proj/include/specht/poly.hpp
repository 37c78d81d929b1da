#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "specht/field.hpp"
#include "specht/monomial.hpp"

namespace specht {

template <class K>
struct Term {
  Monomial m;
  K c;
};

/// Sparse multivariate polynomial over K. Terms are kept combined, nonzero,
/// and sorted descending in the fixed storage order, so equal polynomials
/// compare equal as vectors regardless of how they were produced.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(K constant) {
    if (!constant.is_zero()) terms_.push_back({Monomial::one(), std::move(constant)});
  }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial from_terms(std::vector<Term<K>> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }
  static Polynomial monomial(Monomial m, K c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  /// x_i - x_j (1-based indices), the building block of difference products.
  static Polynomial difference(int i, int j) {
    Polynomial p;
    p.terms_.push_back({Monomial::variable(i - 1), K(1)});
    p.terms_.push_back({Monomial::variable(j - 1), K(-1)});
    p.normalize();
    return p;
  }

  const std::vector<Term<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  uint32_t total_degree() const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.deg);
    return d;
  }

  /// Ord-greatest monomial; scans the term list.
  const Monomial& leading_monomial(const MonomialOrder& ord) const {
    if (terms_.empty()) throw Error("zero polynomial has no leading monomial");
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
      if (ord.greater(terms_[i].m, terms_[best].m)) best = i;
    return terms_[best].m;
  }
  const K& leading_coefficient(const MonomialOrder& ord) const {
    if (terms_.empty()) throw Error("zero polynomial has no leading coefficient");
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
      if (ord.greater(terms_[i].m, terms_[best].m)) best = i;
    return terms_[best].c;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }
  Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
  Polynomial operator-(const Polynomial& o) const { return merged(o, true); }
  Polynomial operator*(const Polynomial& o) const {
    std::vector<Term<K>> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) prod.push_back({a.m * b.m, a.c * b.c});
    return from_terms(std::move(prod));
  }
  Polynomial scaled(const K& c) const {
    if (c.is_zero()) return Polynomial();
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
  }
  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.m = t.m * m;
    return r;  // shifting preserves the storage order
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].m == o.terms_[i].m) || !(terms_[i].c == o.terms_[i].c))
        return false;
    return true;
  }

  std::string str(int n) const;
  static Polynomial parse(const std::string& text, int n);

 private:
  Polynomial merged(const Polynomial& o, bool subtract) const {
    std::vector<Term<K>> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() ||
          (i < terms_.size() && terms_[i].m > o.terms_[j].m)) {
        out.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].m > terms_[i].m) {
        out.push_back(o.terms_[j]);
        if (subtract) out.back().c = -out.back().c;
        ++j;
      } else {
        K c = subtract ? terms_[i].c - o.terms_[j].c : terms_[i].c + o.terms_[j].c;
        if (!c.is_zero()) out.push_back({terms_[i].m, std::move(c)});
        ++i;
        ++j;
      }
    }
    Polynomial r;
    r.terms_ = std::move(out);
    return r;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term<K>& a, const Term<K>& b) { return a.m > b.m; });
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().m == t.m)
        out.back().c += t.c;
      else
        out.push_back(std::move(t));
      if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
  }

  std::vector<Term<K>> terms_;
};

template <class K>
std::string Polynomial<K>::str(int n) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.c.str();
    bool neg = !c.empty() && c[0] == '-';
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    std::string mag = neg ? c.substr(1) : c;
    if (t.m.is_one())
      out << mag;
    else if (mag == "1")
      out << t.m.str(n);
    else
      out << mag << '*' << t.m.str(n);
  }
  return out.str();
}

template <class K>
Polynomial<K> Polynomial<K>::parse(const std::string& text, int n) {
  std::vector<Term<K>> terms;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw Error("empty polynomial text");
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    }
    std::string coeff;
    while (i < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
      coeff.push_back(text[i++]);
    Monomial m;
    bool any = !coeff.empty();
    skip_ws();
    while (i < text.size() && (text[i] == '*' || text[i] == 'x')) {
      if (text[i] == '*') {
        ++i;
        skip_ws();
      }
      if (i >= text.size() || text[i] != 'x') throw Error("malformed polynomial text");
      ++i;
      std::string idx;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        idx.push_back(text[i++]);
      if (idx.empty()) throw Error("malformed polynomial text");
      int var = std::stoi(idx);
      if (var < 1 || var > n) throw Error("variable index out of range");
      int exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string es;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          es.push_back(text[i++]);
        if (es.empty()) throw Error("malformed polynomial text");
        exp = std::stoi(es);
      }
      m.set(var - 1, m[var - 1] + exp);
      any = true;
      skip_ws();
    }
    if (!any) throw Error("malformed polynomial text");
    K c = coeff.empty() ? K(1) : K::parse(coeff);
    if (sign < 0) c = -c;
    terms.push_back({m, std::move(c)});
    skip_ws();
  }
  return from_terms(std::move(terms));
}

using QPoly = Polynomial<Rational>;
using FpPoly = Polynomial<PrimeField>;

}  // namespace specht
