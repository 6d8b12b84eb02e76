#include "hg/linalg.hpp"

#include <sstream>

namespace hg {

Vect zero_vec(const Ctx& ctx, int n) { return Vect(n, Cyc(ctx, Q(0))); }

Vect unit_vec(const Ctx& ctx, int n, int i) {
  Vect v = zero_vec(ctx, n);
  v[i] = Cyc(ctx, Q(1));
  return v;
}

bool is_zero(const Vect& v) {
  for (auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

Vect add(const Vect& a, const Vect& b) {
  Vect r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vect sub(const Vect& a, const Vect& b) {
  Vect r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vect scale(const Cyc& c, const Vect& v) {
  Vect r = v;
  for (auto& x : r)
    if (!x.is_zero()) x = c * x;
  return r;
}

void axpy(Vect& y, const Cyc& c, const Vect& x) {
  if (c.is_zero()) return;
  for (size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

std::string vec_str(const Vect& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
  os << "]";
  return os.str();
}

Mat::Mat(const Ctx& ctx, int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Cyc(ctx, Q(0))) {}

Mat Mat::identity(const Ctx& ctx, int n) {
  Mat m(ctx, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Cyc(ctx, Q(1));
  return m;
}

Mat Mat::from_columns(const std::vector<Vect>& cols) {
  if (cols.empty()) return Mat();
  Mat m(cols[0][0].ctx(), static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < m.rows; ++i) m(i, j) = cols[j][i];
  return m;
}

Vect Mat::column(int j) const {
  Vect v;
  v.reserve(rows);
  for (int i = 0; i < rows; ++i) v.push_back((*this)(i, j));
  return v;
}

Vect Mat::row(int i) const {
  Vect v;
  v.reserve(cols);
  for (int j = 0; j < cols; ++j) v.push_back((*this)(i, j));
  return v;
}

Mat Mat::operator*(const Mat& o) const {
  Mat r(ctx(), rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int t = 0; t < cols; ++t) {
      const Cyc& x = (*this)(i, t);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) {
        const Cyc& y = o(t, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

Vect Mat::operator*(const Vect& v) const {
  Vect r = zero_vec(ctx(), rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const Cyc& x = (*this)(i, j);
      if (!x.is_zero() && !v[j].is_zero()) r[i] += x * v[j];
    }
  return r;
}

bool Mat::operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

Mat Mat::transpose() const {
  Mat t(ctx(), cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Echelon rref(std::vector<Vect> rows) {
  Echelon e;
  if (rows.empty()) return e;
  int n = static_cast<int>(rows[0].size());
  size_t r = 0;
  for (int c = 0; c < n && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Cyc inv = rows[r][c].inv();
    if (!inv.is_one()) rows[r] = scale(inv, rows[r]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Cyc f = -rows[i][c];
      axpy(rows[i], f, rows[r]);
    }
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

int rank_of(const std::vector<Vect>& rows) { return static_cast<int>(rref(rows).rows.size()); }

std::vector<Vect> kernel(const Mat& M) {
  std::vector<Vect> rows;
  for (int i = 0; i < M.rows; ++i) rows.push_back(M.row(i));
  const Ctx& ctx = M.ctx();
  Echelon e = rref(rows);
  std::vector<bool> is_piv(M.cols, false);
  for (int p : e.pivots) is_piv[p] = true;
  std::vector<Vect> out;
  for (int f = 0; f < M.cols; ++f) {
    if (is_piv[f]) continue;
    Vect v = zero_vec(ctx, M.cols);
    v[f] = Cyc(ctx, Q(1));
    for (size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rows[k][f];
    out.push_back(v);
  }
  return out;
}

std::optional<Mat> inverse(const Mat& M) {
  if (M.rows != M.cols) return std::nullopt;
  int n = M.rows;
  const Ctx& ctx = M.ctx();
  std::vector<Vect> rows;
  for (int i = 0; i < n; ++i) {
    Vect r = M.row(i);
    Vect id = unit_vec(ctx, n, i);
    r.insert(r.end(), id.begin(), id.end());
    rows.push_back(r);
  }
  Echelon e = rref(rows);
  if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(ctx, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.rows[i][n + j];
  return inv;
}

std::optional<Vect> express(const std::vector<Vect>& basis, const Vect& v) {
  const Ctx& ctx = v[0].ctx();
  int k = static_cast<int>(basis.size());
  int n = static_cast<int>(v.size());
  if (k == 0) {
    if (is_zero(v)) return Vect{};
    return std::nullopt;
  }
  // solve sum c_i b_i = v via rref of the augmented transpose
  std::vector<Vect> rows;
  for (int i = 0; i < n; ++i) {
    Vect r;
    r.reserve(k + 1);
    for (int j = 0; j < k; ++j) r.push_back(basis[j][i]);
    r.push_back(v[i]);
    rows.push_back(r);
  }
  Echelon e = rref(rows);
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  Vect c = zero_vec(ctx, k);
  for (size_t t = 0; t < e.pivots.size(); ++t) c[e.pivots[t]] = e.rows[t][k];
  // a dependent basis still yields some valid combination
  Vect chk = zero_vec(ctx, n);
  for (int j = 0; j < k; ++j) axpy(chk, c[j], basis[j]);
  if (chk != v) return std::nullopt;
  return c;
}

bool in_span(const std::vector<Vect>& basis, const Vect& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  std::vector<Vect> rows = basis;
  int r0 = rank_of(rows);
  rows.push_back(v);
  return rank_of(rows) == r0;
}

std::vector<Vect> intersect(const std::vector<Vect>& A, const std::vector<Vect>& B, const Ctx& ctx, int n) {
  if (A.empty() || B.empty()) return {};
  // solve sum a_i A_i - sum b_j B_j = 0
  int ka = static_cast<int>(A.size()), kb = static_cast<int>(B.size());
  Mat M(ctx, n, ka + kb);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < ka; ++j) M(i, j) = A[j][i];
    for (int j = 0; j < kb; ++j) M(i, ka + j) = -B[j][i];
  }
  std::vector<Vect> out;
  for (auto& k : kernel(M)) {
    Vect v = zero_vec(ctx, n);
    for (int j = 0; j < ka; ++j) axpy(v, k[j], A[j]);
    if (!is_zero(v)) out.push_back(v);
  }
  return rref(out).rows;
}

bool same_span(const std::vector<Vect>& A, const std::vector<Vect>& B) {
  auto ea = rref(A), eb = rref(B);
  if (ea.rows.size() != eb.rows.size()) return false;
  for (size_t i = 0; i < ea.rows.size(); ++i)
    if (ea.rows[i] != eb.rows[i]) return false;
  return true;
}

}  // namespace hg
