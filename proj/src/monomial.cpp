#include "specht/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace specht {

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  if (static_cast<int>(exps.size()) > kMaxVars)
    throw Error("too many variables");
  Monomial m;
  for (size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
  return m;
}

void Monomial::set(int i, int exp) {
  if (i < 0 || i >= kMaxVars) throw Error("variable index out of range");
  if (exp < 0 || exp > 0xffff) throw Error("exponent out of range");
  deg += exp - e[i];
  e[i] = static_cast<uint16_t>(exp);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    uint32_t s = uint32_t{e[i]} + o.e[i];
    if (s > 0xffff) throw Error("exponent overflow");
    r.e[i] = static_cast<uint16_t>(s);
  }
  r.deg = deg + o.deg;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    if (e[i] < o.e[i]) throw Error("monomial quotient is not a monomial");
    r.e[i] = static_cast<uint16_t>(e[i] - o.e[i]);
  }
  r.deg = deg - o.deg;
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] && o.e[i]) return false;
  return true;
}

uint32_t Monomial::support_mask() const {
  uint32_t m = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i]) m |= uint32_t{1} << i;
  return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (e[i] != o.e[i]) return e[i] <=> o.e[i];
  return std::strong_ordering::equal;
}

std::string Monomial::str(int n) const {
  if (deg == 0) return "1";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (!e[i]) continue;
    if (!first) out << '*';
    first = false;
    out << 'x' << (i + 1);
    if (e[i] > 1) out << '^' << e[i];
  }
  return out.str();
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  uint32_t d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

namespace {

void check_permutation(const std::vector<int>& vars) {
  if (vars.empty()) throw Error("order needs at least one variable");
  if (static_cast<int>(vars.size()) > kMaxVars) throw Error("too many variables");
  std::vector<bool> seen(vars.size() + 1, false);
  for (int v : vars) {
    if (v < 1 || v > static_cast<int>(vars.size()) || seen[v])
      throw Error("order variable list must be a permutation of 1..n");
    seen[v] = true;
  }
}

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw Error("malformed order string");
    out.push_back(std::stoi(tok));
  }
  return out;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::vector<int> vars) {
  check_permutation(vars);
  MonomialOrder o;
  o.kind_ = Kind::lex;
  o.n_ = static_cast<int>(vars.size());
  o.vars_ = std::move(vars);
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::vector<int> vars) {
  MonomialOrder o = lex(std::move(vars));
  o.kind_ = Kind::grevlex;
  return o;
}

MonomialOrder MonomialOrder::weight(std::vector<long> weights, MonomialOrder tie) {
  if (weights.empty() || static_cast<int>(weights.size()) != tie.n())
    throw Error("weight vector length must match the tie-break order");
  for (long w : weights)
    if (w < 0) throw Error("weights must be nonnegative for a well-order");
  MonomialOrder o;
  o.kind_ = Kind::weight;
  o.n_ = tie.n();
  o.weights_ = std::move(weights);
  o.tie_ = std::make_shared<MonomialOrder>(std::move(tie));
  return o;
}

MonomialOrder MonomialOrder::default_lex(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return lex(std::move(v));
}

MonomialOrder MonomialOrder::reverse_lex(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return lex(std::move(v));
}

MonomialOrder MonomialOrder::parse(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw Error("malformed order string");
  std::string head = s.substr(0, colon);
  std::string rest = s.substr(colon + 1);
  if (head == "lex") return lex(split_ints(rest));
  if (head == "grevlex") return grevlex(split_ints(rest));
  if (head == "weight") {
    auto semi = rest.find(";tie=");
    if (semi == std::string::npos)
      throw Error("weight order needs a ;tie= clause");
    std::vector<int> w = split_ints(rest.substr(0, semi));
    MonomialOrder tie = parse(rest.substr(semi + 5));
    return weight(std::vector<long>(w.begin(), w.end()), std::move(tie));
  }
  throw Error("unknown order kind: " + head);
}

std::string MonomialOrder::str() const {
  std::ostringstream out;
  if (kind_ == Kind::weight) {
    out << "weight:";
    for (size_t i = 0; i < weights_.size(); ++i) {
      if (i) out << ',';
      out << weights_[i];
    }
    out << ";tie=" << tie_->str();
    return out.str();
  }
  out << (kind_ == Kind::lex ? "lex:" : "grevlex:");
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i) out << ',';
    out << vars_[i];
  }
  return out.str();
}

std::strong_ordering MonomialOrder::compare(const Monomial& a,
                                            const Monomial& b) const {
  switch (kind_) {
    case Kind::lex:
      for (int k = n_ - 1; k >= 0; --k) {
        int v = vars_[k] - 1;
        if (a.e[v] != b.e[v]) return a.e[v] <=> b.e[v];
      }
      return std::strong_ordering::equal;
    case Kind::grevlex: {
      if (a.deg != b.deg) return a.deg <=> b.deg;
      for (int k = 0; k < n_; ++k) {
        int v = vars_[k] - 1;
        // Ties break toward the monomial with less of the small variables.
        if (a.e[v] != b.e[v]) return b.e[v] <=> a.e[v];
      }
      return std::strong_ordering::equal;
    }
    case Kind::weight: {
      long da = 0, db = 0;
      for (int i = 0; i < n_; ++i) {
        da += weights_[i] * a.e[i];
        db += weights_[i] * b.e[i];
      }
      if (da != db) return da <=> db;
      return tie_->compare(a, b);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace specht
