#include "hg/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "hg/scalars.hpp"

namespace hg {

namespace {

IntMat identity(size_t n) {
  IntMat I(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

IntMat int_matmul(const IntMat& A, const IntMat& B) {
  size_t n = A.size(), m = B.empty() ? 0 : B[0].size(), k = B.size();
  IntMat C(n, IntVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (A[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) C[i][j] += A[i][t] * B[t][j];
    }
  return C;
}

mpz_class int_det(const IntMat& A) {
  // Bareiss fraction-free elimination
  size_t n = A.size();
  if (n == 0) return 1;
  IntMat M = A;
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && M[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(M[k], M[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class v = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M[i][j] = v;
      }
    prev = M[k][k];
  }
  return sign * M[n - 1][n - 1];
}

SNF smith_normal_form(const IntMat& A) {
  size_t m = A.size(), n = m ? A[0].size() : 0;
  SNF s{identity(m), A, identity(n)};
  IntMat& D = s.D;
  IntMat& U = s.U;
  IntMat& V = s.V;
  auto row_addmul = [&](size_t dst, size_t src, const mpz_class& c) {  // row dst -= c*row src
    if (c == 0) return;
    for (size_t j = 0; j < n; ++j) D[dst][j] -= c * D[src][j];
    for (size_t j = 0; j < m; ++j) U[dst][j] -= c * U[src][j];
  };
  auto col_addmul = [&](size_t dst, size_t src, const mpz_class& c) {  // col dst -= c*col src
    if (c == 0) return;
    for (size_t i = 0; i < m; ++i) D[i][dst] -= c * D[i][src];
    for (size_t i = 0; i < n; ++i) V[i][dst] -= c * V[i][src];
  };
  auto swap_rows = [&](size_t a, size_t b) {
    if (a == b) return;
    std::swap(D[a], D[b]);
    std::swap(U[a], U[b]);
  };
  auto swap_cols = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < m; ++i) std::swap(D[i][a], D[i][b]);
    for (size_t i = 0; i < n; ++i) std::swap(V[i][a], V[i][b]);
  };

  size_t lim = std::min(m, n);
  for (size_t t = 0; t < lim; ++t) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block, first in row-major order
      size_t pr = m, pc = n;
      mpz_class best = 0;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j) {
          if (D[i][j] == 0) continue;
          mpz_class a = abs(D[i][j]);
          if (pr == m || a < best) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      if (pr == m) goto done;
      swap_rows(t, pr);
      swap_cols(t, pc);
      bool clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        row_addmul(i, t, fdiv(D[i][t], D[t][t]));
        if (D[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        col_addmul(j, t, fdiv(D[t][j], D[t][t]));
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: pull an offending row into row t
      bool fixed = true;
      for (size_t i = t + 1; i < m && fixed; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (D[i][j] % D[t][t] != 0) {
            row_addmul(t, i, -1);
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    if (D[t][t] < 0) {
      for (size_t j = 0; j < n; ++j) D[t][j] = -D[t][j];
      for (size_t j = 0; j < m; ++j) U[t][j] = -U[t][j];
    }
  }
done:
  return s;
}

std::string AbGroup::str() const {
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (auto& d : torsion) parts.push_back("Z_" + d.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

Group canonicalize(const AbPresentation& p) {
  int n = p.n_gens;
  IntMat R;
  for (auto& row : p.relations) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("relation length mismatch");
    bool nz = std::any_of(row.begin(), row.end(), [](const mpz_class& v) { return v != 0; });
    if (nz) R.push_back(row);
  }
  auto g = std::make_shared<AbGroup>();
  if (n == 0) return g;
  IntMat V;
  std::vector<mpz_class> diag(n, 0);
  if (R.empty()) {
    V = identity(n);
  } else {
    SNF s = smith_normal_form(R);
    V = s.V;
    for (size_t i = 0; i < std::min<size_t>(R.size(), n); ++i) diag[i] = s.D[i][i];
  }
  std::vector<int> free_idx, tors_idx;
  for (int j = 0; j < n; ++j) {
    if (diag[j] == 0) {
      free_idx.push_back(j);
    } else if (diag[j] > 1) {
      tors_idx.push_back(j);
    }
  }
  g->rank = static_cast<int>(free_idx.size());
  for (int j : tors_idx) g->torsion.push_back(diag[j]);
  g->gen_images.assign(n, IntVec());
  for (int i = 0; i < n; ++i) {
    IntVec v;
    for (int j : free_idx) v.push_back(V[i][j]);
    for (int j : tors_idx) v.push_back(mod_pos(V[i][j], diag[j]));
    g->gen_images[i] = v;
  }
  return g;
}

Group make_group(int rank, const std::vector<long>& torsion) {
  auto g = std::make_shared<AbGroup>();
  g->rank = rank;
  for (long d : torsion) {
    if (d < 2) throw std::invalid_argument("torsion moduli must be at least 2");
    g->torsion.push_back(d);
  }
  int n = g->ncoords();
  for (int i = 0; i < n; ++i) {
    IntVec v(n, 0);
    v[i] = 1;
    g->gen_images.push_back(v);
  }
  return g;
}

Group parse_group(const std::string& text) {
  // "Z^r x Z_d x Z_{d} x Z_d^k" or "0"
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::vector<long> mods;  // 0 = free
  if (s == "0" || s == "1" || s.empty()) return canonicalize(AbPresentation{0, {}});
  size_t p = 0;
  auto num = [&]() {
    bool brace = p < s.size() && s[p] == '{';
    if (brace) ++p;
    size_t st = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (st == p) throw std::invalid_argument("bad group text: " + text);
    long v = std::stol(s.substr(st, p - st));
    if (brace) {
      if (p >= s.size() || s[p] != '}') throw std::invalid_argument("bad group text: " + text);
      ++p;
    }
    return v;
  };
  for (;;) {
    if (p >= s.size() || s[p] != 'Z') throw std::invalid_argument("bad group text: " + text);
    ++p;
    long mod = 0;
    if (p < s.size() && s[p] == '_') {
      ++p;
      mod = num();
    }
    long rep = 1;
    if (p < s.size() && s[p] == '^') {
      ++p;
      rep = num();
    }
    for (long i = 0; i < rep; ++i) mods.push_back(mod);
    if (p == s.size()) break;
    if (s[p] != 'x' && s[p] != '*') throw std::invalid_argument("bad group text: " + text);
    ++p;
  }
  AbPresentation pr;
  pr.n_gens = static_cast<int>(mods.size());
  for (size_t i = 0; i < mods.size(); ++i) {
    if (mods[i] == 0) continue;
    IntVec row(mods.size(), 0);
    row[i] = mods[i];
    pr.relations.push_back(row);
  }
  return canonicalize(pr);
}

GroupElt::GroupElt(Group g, IntVec coords) : g_(std::move(g)), x_(std::move(coords)) {
  if (static_cast<int>(x_.size()) != g_->ncoords()) throw std::invalid_argument("group element length mismatch");
  for (size_t i = 0; i < g_->torsion.size(); ++i) {
    auto& c = x_[g_->rank + i];
    c = mod_pos(c, g_->torsion[i]);
  }
}

GroupElt GroupElt::zero(const Group& g) { return GroupElt(g, IntVec(g->ncoords(), 0)); }

GroupElt GroupElt::gen(const Group& g, int i) { return GroupElt(g, g->gen_images.at(i)); }

void GroupElt::same(const GroupElt& o) const {
  if (!g_ || !o.g_) throw std::invalid_argument("uninitialised group element");
  if (g_ != o.g_) throw std::invalid_argument("group element arithmetic across different groups");
}

GroupElt GroupElt::operator+(const GroupElt& o) const {
  same(o);
  IntVec r = x_;
  for (size_t i = 0; i < r.size(); ++i) r[i] += o.x_[i];
  return GroupElt(g_, r);
}

GroupElt GroupElt::operator-(const GroupElt& o) const { return *this + (-o); }

GroupElt GroupElt::operator-() const {
  IntVec r = x_;
  for (auto& v : r) v = -v;
  return GroupElt(g_, r);
}

GroupElt GroupElt::times(long k) const {
  IntVec r = x_;
  for (auto& v : r) v *= k;
  return GroupElt(g_, r);
}

bool GroupElt::operator==(const GroupElt& o) const {
  same(o);
  return x_ == o.x_;
}

bool GroupElt::operator<(const GroupElt& o) const {
  same(o);
  return x_ < o.x_;
}

bool GroupElt::is_zero() const {
  for (auto& v : x_)
    if (v != 0) return false;
  return true;
}

std::optional<mpz_class> GroupElt::order() const {
  for (int i = 0; i < g_->rank; ++i)
    if (x_[i] != 0) return std::nullopt;
  mpz_class o = 1;
  for (size_t i = 0; i < g_->torsion.size(); ++i) {
    const auto& d = g_->torsion[i];
    mpz_class gg = gcd(x_[g_->rank + i], d);
    mpz_class oi = d / gg;
    o = lcm(o, oi);
  }
  return o;
}

std::string GroupElt::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < g_->rank; ++i) os << (i ? "," : "") << x_[i].get_str();
  if (!g_->torsion.empty()) {
    os << ";";
    for (size_t i = 0; i < g_->torsion.size(); ++i) os << (i ? "," : "") << x_[g_->rank + i].get_str();
  }
  os << ")";
  return os.str();
}

GroupElt combine(const Group& g, const IntVec& coeffs) {
  IntVec r(g->ncoords(), 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (size_t j = 0; j < r.size(); ++j) r[j] += coeffs[i] * g->gen_images[i][j];
  }
  return GroupElt(g, r);
}

}  // namespace hg
