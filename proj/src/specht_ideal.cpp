#include "specht/specht_ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "specht/monomial.hpp"

namespace specht {

std::string family_name(Family f) {
  switch (f) {
    case Family::specht_head:
      return "specht_head";
    case Family::specht_tail:
      return "specht_tail";
    case Family::specht_filter:
      return "specht_filter";
    case Family::lili:
      return "lili";
    case Family::mixed:
      return "mixed";
    case Family::mixed_filter:
      return "mixed_filter";
  }
  throw Error("unhandled family");
}

Family family_from_name(const std::string& name) {
  if (name == "specht_head") return Family::specht_head;
  if (name == "specht_tail") return Family::specht_tail;
  if (name == "specht_filter") return Family::specht_filter;
  if (name == "lili") return Family::lili;
  if (name == "mixed") return Family::mixed;
  if (name == "mixed_filter") return Family::mixed_filter;
  throw Error("unknown ideal family: " + name);
}

namespace {

void check_shape_args(int l, const Partition& lambda) {
  if (l < 1) throw Error("l must be positive");
  if (lambda.empty()) throw Error("shape must be nonempty");
  if (lambda.first() < l)
    throw Error("first part must be at least l, or no tableau exists");
}

}  // namespace

IdealSpec IdealSpec::specht_head(int l, Partition lambda) {
  check_shape_args(l, lambda);
  IdealSpec s;
  s.family = Family::specht_head;
  s.l = l;
  s.n = lambda.weight() - l + 1;
  s.lambda = std::move(lambda);
  return s;
}

IdealSpec IdealSpec::specht_tail(int l, Partition lambda) {
  IdealSpec s = specht_head(l, std::move(lambda));
  s.family = Family::specht_tail;
  return s;
}

IdealSpec IdealSpec::specht_filter(Filter f) {
  if (f.kind() != Filter::Kind::lower)
    throw Error("generator filters must be lower filters");
  IdealSpec s;
  s.family = Family::specht_filter;
  s.n = f.n();
  s.l = f.l();
  s.filter = std::move(f);
  return s;
}

IdealSpec IdealSpec::mixed(int l, int m, Partition lambda) {
  IdealSpec s = specht_head(l, std::move(lambda));
  s.family = Family::mixed;
  if (m < 1 || m > s.n) throw Error("need 1 <= m <= n");
  s.m = m;
  return s;
}

IdealSpec IdealSpec::mixed_filter(int m, Filter f) {
  IdealSpec s = specht_filter(std::move(f));
  s.family = Family::mixed_filter;
  if (m < 1 || m > s.n) throw Error("need 1 <= m <= n");
  s.m = m;
  return s;
}

IdealSpec IdealSpec::lili_chain(int n, std::vector<std::vector<int>> chain) {
  if (n < 1) throw Error("need at least one variable");
  if (chain.empty()) throw Error("chain must have at least one set");
  if (chain.size() > 20) throw Error("chain too long");
  for (auto& y : chain) {
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());
    for (int e : y)
      if (e < 1 || e > n) throw Error("chain entries must lie in 1..n");
  }
  for (size_t i = 1; i < chain.size(); ++i)
    if (!std::includes(chain[i - 1].begin(), chain[i - 1].end(),
                       chain[i].begin(), chain[i].end()))
      throw Error("chain sets must be nested, largest first");
  IdealSpec s;
  s.family = Family::lili;
  s.n = n;
  s.chain = std::move(chain);
  return s;
}

std::string IdealSpec::str() const {
  auto set_str = [](const std::vector<int>& v) {
    std::string out = "{";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(v[i]);
    }
    return out + "}";
  };
  switch (family) {
    case Family::specht_head:
      return "specht_head(l=" + std::to_string(l) + ", lambda=" + lambda.str() +
             ")";
    case Family::specht_tail:
      return "specht_tail(lambda=" + lambda.str() + ", l=" + std::to_string(l) +
             ")";
    case Family::specht_filter:
      return "specht_filter(" + filter->str() + ")";
    case Family::mixed:
      return "mixed(l=" + std::to_string(l) + ", m=" + std::to_string(m) +
             ", lambda=" + lambda.str() + ")";
    case Family::mixed_filter:
      return "mixed_filter(m=" + std::to_string(m) + ", " + filter->str() + ")";
    case Family::lili: {
      std::string out = "lili(n=" + std::to_string(n) + ", chain=";
      for (size_t i = 0; i < chain.size(); ++i) {
        if (i) out += ">";
        out += set_str(chain[i]);
      }
      return out + ")";
    }
  }
  throw Error("unhandled family");
}

namespace {

// Sorts each column ascending and orders the list by (size descending,
// content lex ascending). Column systems with equal factor multisets share a
// canonical form, so this doubles as the deduplication key.
std::vector<std::vector<int>> canonical_columns(
    std::vector<std::vector<int>> cols) {
  for (auto& c : cols) std::sort(c.begin(), c.end());
  std::sort(cols.begin(), cols.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  return cols;
}

Tableau tableau_from_columns(const Partition& shape, int l, Variant variant,
                             const std::vector<std::vector<int>>& cols) {
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= shape.length(); ++r) {
    std::vector<int> row;
    for (const auto& c : cols)
      if (static_cast<int>(c.size()) >= r) row.push_back(c[r - 1]);
    rows.push_back(std::move(row));
  }
  return Tableau(shape, l, variant, std::move(rows));
}

// Every way to split the label multiset of Tab(l, shape) into the columns of
// the diagram, one representative per canonical form. Labels are placed in
// increasing order; the special label picks its l columns in one step.
std::vector<std::vector<std::vector<int>>> all_column_systems(
    const Partition& shape, int l, Variant variant) {
  const Partition conj = shape.conjugate();
  const int k = conj.length();
  const int n = shape.weight() - l + 1;
  const int special = variant == Variant::head ? 1 : n;
  if (shape.first() < l)
    throw Error("repeated label cannot avoid a column collision");

  std::vector<std::vector<int>> cols(k);
  std::vector<int> room = conj.parts();
  std::vector<std::vector<std::vector<int>>> out;
  std::set<std::vector<std::vector<int>>> seen;

  std::function<void(int)> place_label;
  std::function<void(int, int, int)> place_special;
  place_label = [&](int label) {
    if (label > n) {
      auto canon = canonical_columns(cols);
      if (seen.insert(canon).second) out.push_back(std::move(canon));
      return;
    }
    if (label == special) {
      place_special(label, 0, l);
      return;
    }
    for (int j = 0; j < k; ++j) {
      if (room[j] == 0) continue;
      cols[j].push_back(label);
      --room[j];
      place_label(label + 1);
      ++room[j];
      cols[j].pop_back();
    }
  };
  place_special = [&](int label, int from, int left) {
    if (left == 0) {
      place_label(label + 1);
      return;
    }
    for (int j = from; j <= k - left; ++j) {
      if (room[j] == 0) continue;
      cols[j].push_back(label);
      --room[j];
      place_special(label, j + 1, left - 1);
      ++room[j];
      cols[j].pop_back();
    }
  };
  place_label(1);
  return out;
}

std::vector<Generator> chain_generators(const IdealSpec& spec) {
  const int rounds = static_cast<int>(spec.chain.size());
  const unsigned full = (1u << rounds) - 1;
  std::vector<unsigned> forced(spec.n + 1, 0);
  for (int i = 0; i < rounds; ++i)
    for (int e : spec.chain[i]) forced[e] |= 1u << i;

  std::vector<Generator> out;
  std::set<std::map<DiffProduct::Factor, int>> seen;
  std::vector<unsigned> mask(spec.n + 1, 0);
  std::function<void(int)> assign = [&](int e) {
    if (e > spec.n) {
      std::vector<std::vector<int>> sets(rounds);
      for (int v = 1; v <= spec.n; ++v)
        for (int i = 0; i < rounds; ++i)
          if (mask[v] & (1u << i)) sets[i].push_back(v);
      DiffProduct prod;
      for (const auto& x : sets) prod = prod * DiffProduct::of_sequence(x);
      if (!seen.insert(prod.factors()).second) return;
      Generator g;
      g.poly = std::move(prod);
      g.columns = std::move(sets);
      out.push_back(std::move(g));
      return;
    }
    const unsigned opt = full & ~forced[e];
    // every superset of forced[e] inside full, smallest extension first
    unsigned s = 0;
    while (true) {
      const unsigned m = forced[e] | s;
      if (m != 0) {
        mask[e] = m;
        assign(e + 1);
      }
      s = (s - opt) & opt;
      if (s == 0) break;
    }
    mask[e] = 0;
  };
  assign(1);
  return out;
}

}  // namespace

std::vector<Generator> generators(const IdealSpec& spec, bool standard_only) {
  if (spec.family == Family::lili) return chain_generators(spec);

  const bool is_mixed =
      spec.family == Family::mixed || spec.family == Family::mixed_filter;
  if (is_mixed && standard_only)
    throw Error("mixed ideals are not generated by a standard system");

  std::vector<Partition> shapes;
  if (spec.family == Family::specht_filter ||
      spec.family == Family::mixed_filter) {
    shapes = spec.filter->members();
  } else {
    shapes.push_back(spec.lambda);
  }

  const Variant variant =
      spec.family == Family::specht_tail ? Variant::tail : Variant::head;
  const DiffProduct dm = DiffProduct::delta(spec.m);

  std::vector<Generator> out;
  std::set<std::map<DiffProduct::Factor, int>> seen;
  auto push = [&](Generator g) {
    if (seen.insert(g.poly.factors()).second) out.push_back(std::move(g));
  };

  for (const Partition& shape : shapes) {
    if (standard_only) {
      for (const Tableau& t : enumerate_standard(spec.l, shape, variant)) {
        Generator g;
        g.poly = specht_factors(t);
        g.shape = shape;
        for (int j = 1; j <= t.column_count(); ++j)
          g.columns.push_back(t.column(j));
        g.standard = true;
        push(std::move(g));
      }
      continue;
    }
    for (auto& cols : all_column_systems(shape, spec.l, variant)) {
      Generator g;
      g.poly = DiffProduct::of_columns(cols);
      if (is_mixed) g.poly = DiffProduct::lcm(dm, g.poly);
      g.shape = shape;
      g.standard =
          tableau_from_columns(shape, spec.l, variant, cols).is_standard();
      g.columns = std::move(cols);
      push(std::move(g));
    }
  }
  return out;
}

DiffProduct specht_factors(const Tableau& t) {
  std::vector<std::vector<int>> cols;
  for (int j = 1; j <= t.column_count(); ++j) cols.push_back(t.column(j));
  return DiffProduct::of_columns(cols);
}

QPoly specht_polynomial(const Tableau& t) {
  return specht_factors(t).expand<Rational>();
}

DiffProduct mixed_generator(const Tableau& t, int m) {
  if (m < 1 || m > t.n()) throw Error("need 1 <= m <= n");
  return DiffProduct::lcm(DiffProduct::delta(m), specht_factors(t));
}

namespace {

Rational coefficient_of(const QPoly& p, const Monomial& m) {
  const auto& ts = p.terms();
  auto it = std::lower_bound(
      ts.begin(), ts.end(), m,
      [](const Term<Rational>& t, const Monomial& mm) { return t.m > mm; });
  if (it != ts.end() && it->m == m) return it->c;
  return Rational(0);
}

// Gauss-Jordan over the rationals; the callers only pass invertible
// (triangular up to row order) matrices, but fail loudly anyway.
std::vector<std::vector<Rational>> invert(
    std::vector<std::vector<Rational>> a) {
  const int k = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> inv(k, std::vector<Rational>(k, 0));
  for (int i = 0; i < k; ++i) inv[i][i] = Rational(1);
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("expansion matrix is singular");
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    const Rational d = a[col][col];
    for (int c = 0; c < k; ++c) {
      a[col][c] = a[col][c] / d;
      inv[col][c] = inv[col][c] / d;
    }
    for (int r = 0; r < k; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (int c = 0; c < k; ++c) {
        a[r][c] = a[r][c] - f * a[col][c];
        inv[r][c] = inv[r][c] - f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace

StraightenSolver::StraightenSolver(int l, const Partition& shape,
                                   Variant variant) {
  std_ = enumerate_standard(l, shape, variant);
  if (std_.empty()) throw Error("no standard tableaux of this shape");
  const int n = std_.front().n();
  const MonomialOrder ord = MonomialOrder::default_lex(n);

  std::vector<QPoly> polys;
  polys.reserve(std_.size());
  for (const Tableau& t : std_) polys.push_back(specht_polynomial(t));

  // Sort by leading monomial, largest first. Every polynomial then has zero
  // coefficient on the pivots before its own, so the pivot matrix is
  // triangular and the standard expansions are visibly independent.
  std::vector<int> idx(std_.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return ord.compare(polys[b].leading_monomial(ord),
                       polys[a].leading_monomial(ord)) ==
           std::strong_ordering::less;
  });
  std::vector<Tableau> st;
  std::vector<QPoly> sp;
  for (int i : idx) {
    st.push_back(std_[i]);
    sp.push_back(polys[i]);
    pivot_monomials_.push_back(polys[i].leading_monomial(ord));
  }
  for (size_t i = 1; i < pivot_monomials_.size(); ++i)
    if (pivot_monomials_[i] == pivot_monomials_[i - 1])
      throw Error("standard leading monomials collide");
  std_ = std::move(st);
  std_polys_ = std::move(sp);

  const int k = static_cast<int>(std_.size());
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      m[j][i] = coefficient_of(std_polys_[i], pivot_monomials_[j]);
  inverse_ = invert(std::move(m));
}

std::vector<Rational> StraightenSolver::solve(const QPoly& f) const {
  const int k = static_cast<int>(std_.size());
  std::vector<Rational> b(k, 0);
  for (int j = 0; j < k; ++j) b[j] = coefficient_of(f, pivot_monomials_[j]);
  std::vector<Rational> c(k, 0);
  for (int i = 0; i < k; ++i) {
    Rational s(0);
    for (int j = 0; j < k; ++j) s = s + inverse_[i][j] * b[j];
    c[i] = s;
  }
  // The pivot projection alone would accept anything; reconstruct exactly.
  QPoly recon;
  for (int i = 0; i < k; ++i)
    if (!c[i].is_zero()) recon = recon + std_polys_[i].scaled(c[i]);
  if (!(recon == f)) throw Error("polynomial is outside the standard span");
  return c;
}

StraightenResult straighten(const Tableau& t) {
  StraightenSolver solver(t.l(), t.shape(), t.variant());
  StraightenResult r;
  r.coefficients = solver.solve(specht_polynomial(t));
  r.basis = solver.standard_basis();
  return r;
}

ExpansionIdentity expansion_identity(const std::vector<int>& A,
                                     const std::vector<int>& B) {
  auto check = [](const std::vector<int>& v, const char* name) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1) throw Error(std::string(name) + " entries must be positive");
      if (i > 0 && v[i] <= v[i - 1])
        throw Error(std::string(name) + " must be strictly increasing");
    }
  };
  check(A, "A");
  check(B, "B");
  for (int b : B)
    if (std::binary_search(A.begin(), A.end(), b))
      throw Error("A and B must be disjoint");
  const int k = static_cast<int>(A.size());
  const int kp = static_cast<int>(B.size());
  if (k < kp + 2) throw Error("need |A| >= |B| + 2");

  ExpansionIdentity out;
  out.lhs =
      (DiffProduct::of_sequence(A) * DiffProduct::of_sequence(B))
          .expand<Rational>();
  for (int i = k - kp; i <= k; ++i) {
    std::vector<int> rest;
    for (int j = 1; j <= k; ++j)
      if (j != i) rest.push_back(A[j - 1]);
    std::vector<int> bext = B;
    bext.push_back(A[i - 1]);
    DiffProduct term =
        DiffProduct::of_sequence(rest) * DiffProduct::of_sequence(bext);
    for (int ip = 1; ip < k - kp; ++ip)
      term = term * DiffProduct::of_sequence({A[ip - 1], A[i - 1]});
    // Moving a_i to the end of A costs one transposition per later element,
    // so the term enters with the parity of k - i.
    const Rational sign((k - i) % 2 ? -1 : 1);
    out.rhs = out.rhs + term.expand<Rational>().scaled(sign);
  }
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace specht
