#include "detrig/matrix.hpp"

#include <algorithm>
#include <thread>

#include "detrig/error.hpp"

namespace detrig {

Subset::Subset(std::vector<int> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  for (std::size_t u = 0; u + 1 < elems_.size(); ++u)
    if (elems_[u] == elems_[u + 1]) fail(Errc::InvalidArgument, "subset with repeated element");
  if (!elems_.empty() && elems_.front() < 1) fail(Errc::InvalidArgument, "subset indices are 1-based");
}

Subset Subset::full(int k) {
  std::vector<int> e(k);
  for (int u = 0; u < k; ++u) e[u] = u + 1;
  return Subset(std::move(e));
}

bool Subset::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

int Subset::index_of(int x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x) return -1;
  return static_cast<int>(it - elems_.begin());
}

Subset Subset::exchange(int out, int in) const {
  return exchange_many({out}, {in});
}

Subset Subset::exchange2(int out1, int out2, int in1, int in2) const {
  return exchange_many({out1, out2}, {in1, in2});
}

Subset Subset::exchange_many(const std::vector<int>& outs, const std::vector<int>& ins) const {
  if (outs.size() != ins.size()) fail(Errc::InvalidArgument, "exchange arity mismatch");
  std::vector<int> e = elems_;
  for (int o : outs) {
    auto it = std::find(e.begin(), e.end(), o);
    if (it == e.end()) fail(Errc::InvalidArgument, "exchange removes a non-member");
    e.erase(it);
  }
  for (int i : ins) {
    if (std::find(e.begin(), e.end(), i) != e.end())
      fail(Errc::InvalidArgument, "exchange adds an existing member");
    e.push_back(i);
  }
  return Subset(std::move(e));
}

std::vector<int> Subset::complement(int n) const {
  std::vector<int> out;
  for (int x = 1; x <= n; ++x)
    if (!contains(x)) out.push_back(x);
  return out;
}

int Subset::symmetric_difference_size(const Subset& a, const Subset& b) {
  std::vector<int> d;
  std::set_symmetric_difference(a.elems_.begin(), a.elems_.end(), b.elems_.begin(),
                                b.elems_.end(), std::back_inserter(d));
  return static_cast<int>(d.size());
}

std::vector<int> Subset::difference(const Subset& other) const {
  std::vector<int> d;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                      std::back_inserter(d));
  return d;
}

std::vector<Subset> all_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int u = 0; u < k; ++u) cur[u] = u + 1;
  while (true) {
    out.emplace_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int u = pos + 1; u < k; ++u) cur[u] = cur[u - 1] + 1;
  }
  return out;
}

long binomial_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (int u = 1; u <= k; ++u) {
    if (r > (1L << 50) / n) fail(Errc::InvalidArgument, "binomial overflow");
    r = r * (n - k + u) / u;
  }
  return r;
}

SymbolicMatrix::SymbolicMatrix(int rows, int cols, int dims)
    : rows_(rows), cols_(cols), dims_(dims),
      entries_(static_cast<std::size_t>(rows) * cols, LaurentPoly::zero(dims)) {}

const LaurentPoly& SymbolicMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) fail(Errc::InvalidArgument, "matrix index");
  return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

void SymbolicMatrix::set(int r, int c, LaurentPoly v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) fail(Errc::InvalidArgument, "matrix index");
  if (v.dims() != dims_) fail(Errc::ContextMismatch, "entry context mismatch");
  entries_[static_cast<std::size_t>(r) * cols_ + c] = std::move(v);
}

SymbolicMatrix SymbolicMatrix::transposed() const {
  SymbolicMatrix out(cols_, rows_, dims_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
  return out;
}

std::vector<std::vector<Coeff>> SymbolicMatrix::eval(const std::vector<Coeff>& point) const {
  std::vector<std::vector<Coeff>> out(rows_, std::vector<Coeff>(cols_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r][c] = at(r, c).eval(point);
  return out;
}

LaurentPoly determinant_cofactor(const std::vector<std::vector<LaurentPoly>>& m) {
  std::size_t n = m.size();
  if (n == 0) fail(Errc::InvalidArgument, "empty determinant");
  int dims = m[0][0].dims();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  LaurentPoly acc = LaurentPoly::zero(dims);
  std::vector<std::vector<LaurentPoly>> sub(n - 1, std::vector<LaurentPoly>(n - 1));
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c2 = 0; c2 < n; ++c2)
        if (c2 != c) sub[r - 1][cc++] = m[r][c2];
    }
    LaurentPoly term = m[0][c] * determinant_cofactor(sub);
    if (c % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m) {
  std::size_t n = m.size();
  if (n == 0) fail(Errc::InvalidArgument, "empty determinant");
  if (n <= 3) return determinant_cofactor(m);
  int dims = m[0][0].dims();
  std::vector<std::vector<LaurentPoly>> a = m;
  LaurentPoly prev = LaurentPoly::constant(dims, Coeff(1));
  int sign = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (a[p][p].is_zero()) {
      std::size_t swap_row = p + 1;
      while (swap_row < n && a[swap_row][p].is_zero()) ++swap_row;
      if (swap_row == n) return LaurentPoly::zero(dims);
      std::swap(a[p], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t r = p + 1; r < n; ++r) {
      for (std::size_t c = p + 1; c < n; ++c) {
        LaurentPoly num = a[r][c] * a[p][p] - a[r][p] * a[p][c];
        a[r][c] = num.divide_exact(prev);
      }
      a[r][p] = LaurentPoly::zero(dims);
    }
    prev = a[p][p];
  }
  LaurentPoly det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

Coeff determinant_coeff(std::vector<std::vector<Coeff>> m) {
  std::size_t n = m.size();
  Coeff det(1);
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t pivot = p;
    while (pivot < n && m[pivot][p].is_zero()) ++pivot;
    if (pivot == n) return Coeff(0);
    if (pivot != p) {
      std::swap(m[pivot], m[p]);
      det = -det;
    }
    det *= m[p][p];
    Coeff inv = m[p][p].inverse();
    for (std::size_t r = p + 1; r < n; ++r) {
      if (m[r][p].is_zero()) continue;
      Coeff f = m[r][p] * inv;
      for (std::size_t c = p; c < n; ++c) m[r][c] -= f * m[p][c];
    }
  }
  return det;
}

LaurentPoly minor_on_columns(const SymbolicMatrix& m, const Subset& cols) {
  int k = m.rows();
  if (cols.size() != k) fail(Errc::DimensionMismatch, "minor_on_columns: |cols| != k");
  if (cols.elems().back() > m.cols()) fail(Errc::DimensionMismatch, "column index out of range");
  std::vector<std::vector<LaurentPoly>> sub(k, std::vector<LaurentPoly>(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) sub[r][c] = m.at(r, cols[c] - 1);
  return determinant(sub);
}

LaurentPoly minor_on_rows(const SymbolicMatrix& m, const Subset& rows) {
  int k = m.cols();
  if (rows.size() != k) fail(Errc::DimensionMismatch, "minor_on_rows: |rows| != k");
  if (rows.elems().back() > m.rows()) fail(Errc::DimensionMismatch, "row index out of range");
  std::vector<std::vector<LaurentPoly>> sub(k, std::vector<LaurentPoly>(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) sub[r][c] = m.at(rows[r] - 1, c);
  return determinant(sub);
}

namespace {
int sgn(long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
} // namespace

int gp_sign_c1(int i, int j, int alpha, int beta) {
  return sgn(static_cast<long>(i - j) * (alpha - beta) * (i - beta) * (alpha - j));
}

int gp_sign_c2(int i, int j, int alpha, int beta) {
  return sgn(static_cast<long>(i - j) * (alpha - beta) * (i - alpha) * (j - beta));
}

bool cauchy_binet_check(const SymbolicMatrix& L, const SymbolicMatrix& R) {
  int k = L.rows(), n = L.cols();
  if (R.rows() != n || R.cols() != k) fail(Errc::DimensionMismatch, "cauchy_binet_check shapes");
  int dims = L.dims();
  std::vector<std::vector<LaurentPoly>> prod(k, std::vector<LaurentPoly>(k, LaurentPoly::zero(dims)));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      for (int m = 0; m < n; ++m) prod[r][c] += L.at(r, m) * R.at(m, c);
  LaurentPoly lhs = determinant(prod);
  LaurentPoly rhs = LaurentPoly::zero(dims);
  for (const Subset& s : all_subsets(n, k)) rhs += minor_on_columns(L, s) * minor_on_rows(R, s);
  return lhs == rhs;
}

const LaurentPoly& HTermTable::h(const Subset& s) const {
  auto it = table_.find(s);
  return it != table_.end() ? it->second : zero_;
}

const Coeff& HTermTable::h_at_one(const Subset& s) const {
  static const Coeff zero(0);
  auto it = at_one_.find(s);
  return it == at_one_.end() ? zero : it->second;
}

void HTermTable::insert(const Subset& s, LaurentPoly h, Coeff at_one) {
  if (h.is_zero()) return;
  at_one_.emplace(s, std::move(at_one));
  table_.emplace(s, std::move(h));
}

HTermTable h_table(const SymbolicMatrix& L, const SymbolicMatrix& R, const HTableOptions& opts) {
  int k = L.rows(), n = L.cols();
  if (R.rows() != n || R.cols() != k) fail(Errc::DimensionMismatch, "h_table shapes");
  if (binomial_count(n, k) > opts.cache_cap)
    fail(Errc::InvalidArgument, "subset count exceeds cache cap");
  std::vector<Subset> subsets = all_subsets(n, k);
  std::vector<LaurentPoly> hs(subsets.size());
  std::vector<Coeff> ones(subsets.size());
  std::vector<Coeff> point(L.dims(), Coeff(1));

  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t u = lo; u < hi; ++u) {
      LaurentPoly dl = minor_on_columns(L, subsets[u]);
      if (dl.is_zero()) continue;
      LaurentPoly dr = minor_on_rows(R, subsets[u]);
      if (dr.is_zero()) continue;
      hs[u] = dl * dr;
      ones[u] = hs[u].eval(point);
    }
  };

  unsigned hw = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
  if (subsets.size() < 64 || hw <= 1) {
    work(0, subsets.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (subsets.size() + hw - 1) / hw;
    for (unsigned t = 0; t < hw; ++t) {
      std::size_t lo = t * chunk, hi = std::min(subsets.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  HTermTable table(n, k, L.dims());
  for (std::size_t u = 0; u < subsets.size(); ++u)
    if (!hs[u].is_zero()) table.insert(subsets[u], std::move(hs[u]), std::move(ones[u]));
  return table;
}

std::map<Subset, MonomialityEntry> monomiality_report(const HTermTable& table) {
  std::map<Subset, MonomialityEntry> out;
  for (const auto& [s, h] : table.entries()) {
    MonomialityEntry e;
    e.is_monomial = h.is_unit();
    if (e.is_monomial) e.degree = h.unit_exponent();
    out.emplace(s, std::move(e));
  }
  return out;
}

bool all_monomial(const std::map<Subset, MonomialityEntry>& report) {
  for (const auto& [s, e] : report)
    if (!e.is_monomial) return false;
  return true;
}

bool genericity_check(const SymbolicMatrix& R) {
  int n = R.rows(), k = R.cols();
  std::vector<Coeff> point(R.dims(), Coeff(1));
  std::vector<std::vector<Coeff>> r1 = R.eval(point);
  for (const Subset& s : all_subsets(n, k)) {
    std::vector<std::vector<Coeff>> sub(k, std::vector<Coeff>(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sub[r][c] = r1[s[r] - 1][c];
    if (determinant_coeff(sub).is_zero()) return false;
  }
  return true;
}

bool genericity_check_functional(const SymbolicMatrix& R) {
  int n = R.rows(), k = R.cols();
  // a nonzero value at any point certifies a nonzero polynomial; fixed
  // coprime-ish coordinates keep the scan deterministic
  std::vector<std::vector<Coeff>> points;
  for (long base : {1L, 2L, 3L, 5L}) {
    std::vector<Coeff> pt;
    for (int u = 0; u < R.dims(); ++u) {
      Rational q(base + u, base == 1 ? 1 : base - 1);
      q.canonicalize();
      pt.emplace_back(q);
    }
    points.push_back(std::move(pt));
  }
  std::vector<std::vector<std::vector<Coeff>>> evals;
  for (const auto& pt : points) evals.push_back(R.eval(pt));
  for (const Subset& s : all_subsets(n, k)) {
    bool nonzero = false;
    for (const auto& ev : evals) {
      std::vector<std::vector<Coeff>> sub(k, std::vector<Coeff>(k));
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) sub[r][c] = ev[s[r] - 1][c];
      if (!determinant_coeff(sub).is_zero()) {
        nonzero = true;
        break;
      }
    }
    if (!nonzero && minor_on_rows(R, s).is_zero()) return false;
  }
  return true;
}

} // namespace detrig
