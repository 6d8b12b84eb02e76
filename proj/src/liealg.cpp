#include "hg/liealg.hpp"

#include <random>
#include <stdexcept>

namespace hg {

Algebra::Algebra(Ctx c, std::vector<std::string> l, std::vector<int> p)
    : ctx(std::move(c)), dim(static_cast<int>(l.size())), labels(std::move(l)), parity(std::move(p)) {
  if (static_cast<int>(parity.size()) != dim) throw std::invalid_argument("parity length mismatch");
  table.assign(dim, std::vector<SparseVec>(dim));
}

void Algebra::set(int i, int j, const Vect& v) {
  SparseVec s;
  for (int k = 0; k < dim; ++k)
    if (!v[k].is_zero()) s.emplace_back(k, v[k]);
  table[i][j] = std::move(s);
}

void Algebra::set_pair(int i, int j, const Vect& v) {
  set(i, j, v);
  if (i == j) return;
  Cyc s(ctx, Q((parity[i] && parity[j]) ? 1 : -1));
  set(j, i, scale(s, v));
}

Vect Algebra::basis_bracket(int i, int j) const {
  Vect v = zero();
  for (auto& [k, c] : table[i][j]) v[k] = c;
  return v;
}

Vect Algebra::bracket(const Vect& a, const Vect& b) const {
  if (static_cast<int>(a.size()) != dim || static_cast<int>(b.size()) != dim)
    throw std::invalid_argument("bracket: dimension mismatch");
  Vect r = zero();
  for (int i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j].is_zero() || table[i][j].empty()) continue;
      Cyc ab = a[i] * b[j];
      for (auto& [k, c] : table[i][j]) r[k] += ab * c;
    }
  }
  return r;
}

int Algebra::index(const std::string& label) const {
  for (int i = 0; i < dim; ++i)
    if (labels[i] == label) return i;
  throw std::invalid_argument("unknown basis label " + label);
}

bool Algebra::is_super() const {
  for (int p : parity)
    if (p) return true;
  return false;
}

Algebra heisenberg(int k, Ctx ctx) {
  if (k < 1) throw std::invalid_argument("heisenberg: k >= 1");
  if (!ctx) ctx = ctx_new(1);
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) {
    labels.push_back("e" + std::to_string(i));
    labels.push_back("eh" + std::to_string(i));
  }
  labels.push_back("z");
  Algebra A(ctx, labels, std::vector<int>(2 * k + 1, 0));
  A.kind = "heisenberg";
  int z = 2 * k;
  for (int i = 0; i < k; ++i) A.set_pair(2 * i, 2 * i + 1, A.unit(z));
  return A;
}

Algebra heisenberg_super(int k, int m, Ctx ctx) {
  if (k < 0 || m < 0 || k + m < 1) throw std::invalid_argument("heisenberg_super: k,m >= 0, k+m >= 1");
  // i is needed by the odd basis changes of the fine gradings
  if (!ctx) ctx = ctx_new(4);
  if (ctx->N() % 4 != 0) throw std::invalid_argument("heisenberg_super: conductor must be divisible by 4");
  std::vector<std::string> labels;
  std::vector<int> par;
  for (int i = 1; i <= k; ++i) {
    labels.push_back("e" + std::to_string(i));
    labels.push_back("eh" + std::to_string(i));
    par.push_back(0);
    par.push_back(0);
  }
  labels.push_back("z");
  par.push_back(0);
  for (int j = 1; j <= m; ++j) {
    labels.push_back("w" + std::to_string(j));
    par.push_back(1);
  }
  Algebra A(ctx, labels, par);
  A.kind = "super";
  int z = 2 * k;
  for (int i = 0; i < k; ++i) A.set_pair(2 * i, 2 * i + 1, A.unit(z));
  for (int j = 0; j < m; ++j) A.set(z + 1 + j, z + 1 + j, A.unit(z));
  return A;
}

Algebra twisted(const std::vector<Cyc>& lambda) {
  if (lambda.empty()) throw std::invalid_argument("twisted: empty lambda");
  Ctx ctx = lambda[0].ctx();
  if (ctx->N() % 4 != 0) throw std::invalid_argument("twisted: conductor must be divisible by 4");
  int k = static_cast<int>(lambda.size());
  std::vector<std::string> labels{"z", "u"};
  for (int i = 1; i <= k; ++i) {
    labels.push_back("e" + std::to_string(i));
    labels.push_back("eh" + std::to_string(i));
  }
  Algebra A(ctx, labels, std::vector<int>(2 * k + 2, 0));
  A.kind = "twisted";
  for (int i = 0; i < k; ++i) {
    const Cyc& l = lambda[i];
    if (l.is_zero()) throw std::invalid_argument("twisted: lambda entries must be nonzero");
    int e = 2 + 2 * i, eh = e + 1;
    A.set_pair(e, eh, scale(l, A.unit(0)));
    A.set_pair(1, e, scale(l, A.unit(eh)));
    A.set_pair(1, eh, scale(l, A.unit(e)));
  }
  return A;
}

std::vector<Vect> center(const Algebra& A) {
  // x in Z(A) iff [x, b_j] = 0 for every j
  int n = A.dim;
  Mat M(A.ctx, n * n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (auto& [k, c] : A.table[i][j]) M(j * n + k, i) = c;
  return rref(kernel(M)).rows;
}

std::vector<Vect> derived(const Algebra& A) {
  std::vector<Vect> rows;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      if (!A.table[i][j].empty()) rows.push_back(A.basis_bracket(i, j));
  return rref(rows).rows;
}

AxiomReport verify_axioms(const Algebra& A) {
  return verify_axioms(A, [&A](int i, int j) {
    return Cyc(A.ctx, Q((A.parity[i] && A.parity[j]) ? -1 : 1));
  });
}

AxiomReport verify_axioms(const Algebra& A, const CommFactor& eps) {
  AxiomReport rep;
  int n = A.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& [k, c] : A.table[i][j])
        if (A.parity[k] != ((A.parity[i] + A.parity[j]) & 1)) {
          rep = {false, "parity", {i, j}, "[" + A.labels[i] + "," + A.labels[j] + "] leaves its parity"};
          return rep;
        }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Vect lhs = A.basis_bracket(i, j);
      Vect rhs = scale(-eps(i, j), A.basis_bracket(j, i));
      if (lhs != rhs) {
        rep = {false, "skew", {i, j},
               "[" + A.labels[i] + "," + A.labels[j] + "] = " + vec_str(lhs) + " but -eps*[" + A.labels[j] + "," +
                   A.labels[i] + "] = " + vec_str(rhs)};
        return rep;
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Vect ea = A.unit(a), eb = A.unit(b), ec = A.unit(c);
        Vect t1 = scale(eps(c, a), A.bracket(ea, A.basis_bracket(b, c)));
        Vect t2 = scale(eps(a, b), A.bracket(eb, A.basis_bracket(c, a)));
        Vect t3 = scale(eps(b, c), A.bracket(ec, A.basis_bracket(a, b)));
        Vect s = add(add(t1, t2), t3);
        if (!is_zero(s)) {
          rep = {false, "jacobi", {a, b, c},
                 "Jacobi sum on (" + A.labels[a] + "," + A.labels[b] + "," + A.labels[c] + ") = " + vec_str(s)};
          return rep;
        }
      }
  return rep;
}

bool is_automorphism(const Mat& f, const Algebra& A) {
  if (f.rows != A.dim || f.cols != A.dim) throw std::invalid_argument("is_automorphism: size mismatch");
  if (!inverse(f)) return false;
  for (int j = 0; j < A.dim; ++j)
    for (int i = 0; i < A.dim; ++i)
      if (!f(i, j).is_zero() && A.parity[i] != A.parity[j]) return false;
  std::vector<Vect> img;
  for (int j = 0; j < A.dim; ++j) img.push_back(f.column(j));
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      Vect lhs = f * A.basis_bracket(i, j);
      Vect rhs = A.bracket(img[i], img[j]);
      if (lhs != rhs) return false;
    }
  return true;
}

std::optional<Cyc> similitude_factor(const Mat& f, const Algebra& A) {
  auto Z = center(A);
  if (Z.size() != 1) return std::nullopt;
  const Vect& z = Z[0];
  Vect fz = f * z;
  int p = 0;
  while (z[p].is_zero()) ++p;
  Cyc lam = fz[p] / z[p];
  if (fz != scale(lam, z)) return std::nullopt;
  return lam;
}

Mat exp_ad(const Algebra& A, const Vect& x) {
  // ad(x)^3 = 0 here, so exp = 1 + ad + ad^2/2
  Mat ad(A.ctx, A.dim, A.dim);
  for (int j = 0; j < A.dim; ++j) {
    Vect c = A.bracket(x, A.unit(j));
    for (int i = 0; i < A.dim; ++i) ad(i, j) = c[i];
  }
  Mat ad2 = ad * ad;
  Mat ad3 = ad2 * ad;
  for (auto& c : ad3.a)
    if (!c.is_zero()) throw std::invalid_argument("exp_ad: ad(x) is not nilpotent of order 3");
  Mat r = Mat::identity(A.ctx, A.dim);
  for (size_t t = 0; t < r.a.size(); ++t) r.a[t] += ad.a[t] + ad2.a[t].scaled(Q(1, 2));
  return r;
}

Mat random_automorphism(const Algebra& A, std::mt19937_64& rng) {
  const Ctx& K = A.ctx;
  std::uniform_int_distribution<int> small(-3, 3), pick(1, 3);
  auto rnd = [&]() { return Cyc(K, small(rng)); };
  auto nonzero = [&]() { return Cyc(K, Q(pick(rng) * (small(rng) < 0 ? -1 : 1), pick(rng))); };
  Mat f = Mat::identity(K, A.dim);
  bool tw = A.kind == "twisted";
  int z = tw ? 0 : -1;
  std::vector<int> ev, odd;
  for (int i = 0; i < A.dim; ++i) {
    if (A.labels[i] == "z") z = i;
    else if (A.labels[i] == "u") continue;
    else if (A.parity[i]) odd.push_back(i);
    else ev.push_back(i);
  }
  if (A.kind == "custom" || z < 0) throw std::invalid_argument("random_automorphism: unsupported algebra");
  auto omega = [&](const Vect& a, const Vect& b) { return A.bracket(a, b)[z]; };
  if (!tw) {
    // transvections x -> x + c omega(v,x) v preserve the form
    for (int t = 0; t < 3; ++t) {
      Vect v = A.zero();
      for (int i : ev) v[i] = rnd();
      Cyc c = rnd();
      Mat T = Mat::identity(K, A.dim);
      for (int j : ev) {
        Cyc w = c * omega(v, A.unit(j));
        for (int i : ev) T(i, j) += w * v[i];
      }
      f = T * f;
    }
    for (int t = 0; t < 2 && !odd.empty(); ++t) {
      Vect v = A.zero();
      for (int i : odd) v[i] = rnd();
      Cyc n = omega(v, v);
      if (n.is_zero()) continue;
      Mat R = Mat::identity(K, A.dim);
      for (int j : odd) {
        Cyc w = Cyc(K, 2) * omega(A.unit(j), v) / n;
        for (int i : odd) R(i, j) -= w * v[i];
      }
      f = R * f;
    }
  } else {
    // e_i, eh_i -> a_i e_i, a_i eh_i with a_i^2 = c; one sign per pair
    Cyc a = nonzero();
    Mat D = Mat::identity(K, A.dim);
    for (int i = 2; i + 1 < A.dim; i += 2) D(i, i) = D(i + 1, i + 1) = (small(rng) < 0 ? -a : a);
    D(z, z) = a * a;
    f = D * f;
  }
  Vect x = A.zero();
  for (int i : ev) x[i] = rnd();
  return exp_ad(A, x) * f;
}

}  // namespace hg
