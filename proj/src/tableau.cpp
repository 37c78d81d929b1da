#include "specht/tableau.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace specht {

Tableau::Tableau(Partition shape, int l, Variant variant,
                 std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), l_(l), variant_(variant), rows_(std::move(rows)) {
  if (l_ < 1) throw Error("tableau needs l >= 1");
  n_ = shape_.weight() - l_ + 1;
  if (n_ < 1) throw Error("tableau shape too small for l");
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw Error("row count does not match shape");
  for (int r = 1; r <= shape_.length(); ++r)
    if (static_cast<int>(rows_[r - 1].size()) != shape_.part(r))
      throw Error("row length does not match shape");

  std::vector<int> count(n_ + 1, 0);
  for (const auto& row : rows_)
    for (int v : row) {
      if (v < 1 || v > n_) throw Error("label out of range");
      count[v]++;
    }
  for (int v = 1; v <= n_; ++v) {
    int want = (v == special_label()) ? l_ : 1;
    if (count[v] != want) throw Error("label multiset does not match variant");
  }
  for (int j = 1; j <= column_count(); ++j) {
    std::vector<int> col = column(j);
    int copies = static_cast<int>(std::count(col.begin(), col.end(), special_label()));
    if (copies > 1) throw Error("column holds the repeated label twice");
  }
}

std::vector<int> Tableau::column(int j) const {
  std::vector<int> col;
  for (const auto& row : rows_)
    if (j <= static_cast<int>(row.size())) col.push_back(row[j - 1]);
  return col;
}

bool Tableau::columns_sorted() const {
  for (int j = 1; j <= column_count(); ++j) {
    std::vector<int> col = column(j);
    if (!std::is_sorted(col.begin(), col.end())) return false;
    if (std::adjacent_find(col.begin(), col.end()) != col.end()) return false;
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!columns_sorted()) return false;
  for (const auto& row : rows_)
    if (!std::is_sorted(row.begin(), row.end())) return false;
  return true;
}

std::vector<int> Tableau::initial_exponents() const {
  if (!is_standard()) throw Error("initial monomial needs a standard tableau");
  std::vector<int> e(n_, 0);
  for (int r = 1; r <= shape_.length(); ++r)
    for (int v : rows_[r - 1]) e[v - 1] += r - 1;
  return e;
}

std::map<int, int> Tableau::label_rows() const {
  std::map<int, int> d;
  for (int r = 1; r <= shape_.length(); ++r)
    for (int v : rows_[r - 1])
      if (v != special_label()) d[v] = r;
  return d;
}

std::vector<int> Tableau::special_rows() const {
  std::vector<int> rows_of_special;
  for (int j = 1; j <= column_count(); ++j) {
    std::vector<int> col = column(j);
    for (size_t r = 0; r < col.size(); ++r)
      if (col[r] == special_label())
        rows_of_special.push_back(static_cast<int>(r) + 1);
  }
  return rows_of_special;
}

std::string Tableau::str() const {
  std::ostringstream out;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) out << " / ";
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out << ' ';
      out << rows_[r][c];
    }
  }
  return out.str();
}

std::pair<Tableau, int> column_standardize(const Tableau& t) {
  int cols = t.column_count();
  std::vector<std::vector<int>> sorted_cols(cols);
  int sign = 1;
  for (int j = 1; j <= cols; ++j) {
    std::vector<int> col = t.column(j);
    if (std::set<int>(col.begin(), col.end()).size() != col.size())
      throw Error("degenerate column");
    // Parity of the sort = parity of the inversion count.
    int inversions = 0;
    for (size_t a = 0; a < col.size(); ++a)
      for (size_t b = a + 1; b < col.size(); ++b)
        if (col[a] > col[b]) inversions++;
    if (inversions % 2) sign = -sign;
    std::sort(col.begin(), col.end());
    sorted_cols[j - 1] = std::move(col);
  }
  std::vector<std::vector<int>> rows(t.shape().length());
  for (int r = 1; r <= t.shape().length(); ++r)
    for (int c = 1; c <= t.shape().part(r); ++c)
      rows[r - 1].push_back(sorted_cols[c - 1][r - 1]);
  return {Tableau(t.shape(), t.l(), t.variant(), std::move(rows)), sign};
}

namespace {

void fill_standard(const Partition& shape, int l, Variant variant, int n,
                   std::vector<std::vector<int>>& rows, std::vector<int>& left,
                   int r, int c, std::vector<Tableau>& out) {
  if (r > shape.length()) {
    out.emplace_back(shape, l, variant, rows);
    return;
  }
  int next_r = r, next_c = c + 1;
  if (c == shape.part(r)) {
    next_r = r + 1;
    next_c = 1;
  }
  int above = (r > 1 && shape.part(r - 1) >= c) ? rows[r - 2][c - 1] : 0;
  int before = (c > 1) ? rows[r - 1][c - 2] : 0;
  for (int v = 1; v <= n; ++v) {
    if (left[v] == 0) continue;
    if (v <= above) continue;           // columns strict
    if (v < before) continue;           // rows weak
    left[v]--;
    rows[r - 1].push_back(v);
    fill_standard(shape, l, variant, n, rows, left, next_r, next_c, out);
    rows[r - 1].pop_back();
    left[v]++;
  }
}

}  // namespace

std::vector<Tableau> enumerate_standard(int l, const Partition& shape,
                                        Variant variant) {
  if (l < 1) throw Error("enumerate_standard needs l >= 1");
  if (shape.first() < l)
    throw Error("repeated label cannot avoid a column collision");
  int n = shape.weight() - l + 1;
  std::vector<int> left(n + 1, 1);
  left[0] = 0;
  left[variant == Variant::head ? 1 : n] = l;
  std::vector<std::vector<int>> rows(shape.length());
  std::vector<Tableau> out;
  fill_standard(shape, l, variant, n, rows, left, 1, 1, out);
  return out;
}

int w_statistic(const Tableau& t) {
  if (t.variant() != Variant::tail) throw Error("w statistic is for tail tableaux");
  if (!t.is_standard()) throw Error("w statistic needs a standard tableau");
  int w = 0;
  for (int r : t.special_rows()) w += r - 1;
  return w;
}

Partition shape_below_n(const Tableau& t) {
  if (t.variant() != Variant::tail) throw Error("shape_below_n is for tail tableaux");
  if (!t.is_standard()) throw Error("shape_below_n needs a standard tableau");
  std::vector<int> row_len;
  for (const auto& row : t.rows()) {
    int len = 0;
    for (int v : row)
      if (v != t.special_label()) len++;
    if (len > 0) row_len.push_back(len);
  }
  return Partition(row_len);
}

std::vector<NSquareProfile> shapes_over(const Partition& mu, int n, int l) {
  if (mu.weight() != n - 1) throw Error("shapes_over expects weight(mu) = n-1");
  if (l < 1) throw Error("shapes_over needs l >= 1");
  Partition muc = mu.conjugate();
  int max_col = mu.first() + l;
  std::vector<int> heights(max_col, 0);
  for (int j = 1; j <= muc.length(); ++j) heights[j - 1] = muc.part(j);

  std::vector<NSquareProfile> out;
  std::vector<int> pick;
  // Choose l distinct columns whose heights, each bumped by one, still form
  // a weakly decreasing sequence.
  auto valid = [&](const std::vector<int>& cols) {
    std::vector<int> h = heights;
    for (int c : cols) h[c - 1]++;
    return std::is_sorted(h.begin(), h.end(), std::greater<int>());
  };
  std::function<void(int, int)> rec = [&](int start, int need) {
    if (need == 0) {
      if (!valid(pick)) return;
      std::vector<int> h = heights;
      int w = 0;
      for (int c : pick) {
        w += h[c - 1];
        h[c - 1]++;
      }
      while (!h.empty() && h.back() == 0) h.pop_back();
      NSquareProfile prof;
      prof.lambda = Partition(std::move(h)).conjugate();
      prof.mu = mu;
      prof.columns = pick;
      prof.w = w;
      out.push_back(std::move(prof));
      return;
    }
    for (int c = start; c <= max_col; ++c) {
      pick.push_back(c);
      rec(c + 1, need - 1);
      pick.pop_back();
    }
  };
  rec(1, l);
  std::sort(out.begin(), out.end(),
            [](const NSquareProfile& a, const NSquareProfile& b) {
              return a.lambda > b.lambda;
            });
  return out;
}

NSquareProfile min_w_shape(const Partition& lambda, const Partition& mu, int l) {
  int n = mu.weight() + 1;
  if (lambda.weight() != n + l - 1)
    throw Error("min_w_shape shape weights are inconsistent");
  std::vector<NSquareProfile> profiles = shapes_over(mu, n, l);
  const NSquareProfile* best = nullptr;
  for (const NSquareProfile& p : profiles) {
    if (!dominates(lambda, p.lambda)) continue;
    // Greedy: profiles arrive lex-decreasing in lambda, so the first
    // admissible one realizes max rho_1, then max rho_2, and so on.
    if (!best) {
      best = &p;
      break;
    }
  }
  if (!best) throw Error("no compatible shape");
  return *best;
}

Filter filter_power(const Filter& f, int k) {
  if (f.kind() != Filter::Kind::lower)
    throw Error("filter_power expects a lower filter");
  if (f.n() < 2) throw Error("poset too small for filter_power");
  int n = f.n(), l = f.l();
  std::vector<Partition> members;
  for (const Partition& mu : all_partitions(n - 1)) {
    bool in = false;
    for (const NSquareProfile& p : shapes_over(mu, n, l)) {
      if (p.w <= k && p.lambda.first() >= l && f.contains(p.lambda)) {
        in = true;
        break;
      }
    }
    if (in) members.push_back(mu);
  }
  return Filter::from_members(n - 1, 1, Filter::Kind::lower, members);
}

}  // namespace specht
