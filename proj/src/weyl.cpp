#include "hg/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace hg {

GradedAut induced_permutation(const Mat& f, const Grading& G) {
  const Algebra& A = *G.alg;
  if (!is_automorphism(f, A)) throw MathError("induced_permutation: not an automorphism");
  GradedAut out;
  out.map = f;
  int n = static_cast<int>(G.comps.size());
  for (int a = 0; a < n; ++a) {
    std::vector<Vect> img;
    for (auto& v : G.comps[a].basis) img.push_back(f * v);
    int hit = -1;
    for (int c = 0; c < n && hit < 0; ++c) {
      if (G.comps[c].basis.size() != img.size()) continue;
      bool all = true;
      for (auto& v : img)
        if (!in_span(G.comps[c].basis, v)) all = false;
      if (all) hit = c;
    }
    if (hit < 0) throw MathError("induced_permutation: image of component " + std::to_string(a) + " is not a component");
    out.perm.push_back(hit);
  }
  return out;
}

StructureTable structure_table(const Grading& G) {
  if (!G.one_dimensional()) throw MathError("structure table needs one-dimensional components");
  const Algebra& A = *G.alg;
  StructureTable T;
  T.n = static_cast<int>(G.comps.size());
  for (auto& c : G.comps) {
    T.basis.push_back(c.basis[0]);
    int p = 0;
    for (int i = 0; i < A.dim; ++i)
      if (!c.basis[0][i].is_zero()) p = A.parity[i];
    T.parity.push_back(p);
  }
  T.target.assign(T.n, std::vector<int>(T.n, -1));
  T.kappa.assign(T.n, std::vector<Cyc>(T.n, Cyc(A.ctx, 0)));
  std::vector<int> piv(T.n);
  for (int t = 0; t < T.n; ++t) {
    int p = 0;
    while (T.basis[t][p].is_zero()) ++p;
    piv[t] = p;
  }
  for (int a = 0; a < T.n; ++a)
    for (int b = 0; b < T.n; ++b) {
      Vect w = A.bracket(T.basis[a], T.basis[b]);
      if (is_zero(w)) continue;
      for (int t = 0; t < T.n; ++t) {
        Cyc k = w[piv[t]] / T.basis[t][piv[t]];
        if (k.is_zero() || scale(k, T.basis[t]) != w) continue;
        T.target[a][b] = t;
        T.kappa[a][b] = k;
        break;
      }
      if (T.target[a][b] < 0) throw MathError("structure table: bracket of two components is not homogeneous");
    }
  return T;
}

Mat graded_map(const StructureTable& from, const StructureTable& to, const Perm& perm, const std::vector<Cyc>& c) {
  std::vector<Vect> img;
  for (int a = 0; a < from.n; ++a) img.push_back(scale(c[a], to.basis[perm[a]]));
  auto Binv = inverse(Mat::from_columns(from.basis));
  if (!Binv) throw MathError("graded_map: components do not form a basis");
  return Mat::from_columns(img) * *Binv;
}

MultSolver::MultSolver(const StructureTable& from, const StructureTable& to) : a_(from), b_(to) {
  int n = from.n;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      if (from.target[a][b] >= 0) rows_.push_back({a, b, from.target[a][b]});
  if (rows_.empty()) return;
  IntMat M(rows_.size(), IntVec(n, 0));
  for (size_t r = 0; r < rows_.size(); ++r) {
    M[r][rows_[r].a] += 1;
    M[r][rows_[r].b] += 1;
    M[r][rows_[r].t] -= 1;
  }
  SNF s = smith_normal_form(M);
  U_ = s.U;
  V_ = s.V;
  for (size_t i = 0; i < std::min(rows_.size(), static_cast<size_t>(n)); ++i) {
    diag_.push_back(s.D[i][i]);
    if (s.D[i][i] != 0) rank_ = static_cast<int>(i) + 1;
  }
}

bool MultSolver::pattern_ok(const Perm& perm) const {
  int n = a_.n;
  if (b_.n != n) return false;
  for (int a = 0; a < n; ++a)
    if (a_.parity[a] != b_.parity[perm[a]]) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int t = a_.target[a][b], t2 = b_.target[perm[a]][perm[b]];
      if ((t < 0) != (t2 < 0)) return false;
      if (t >= 0 && perm[t] != t2) return false;
    }
  return true;
}

std::vector<Cyc> MultSolver::gammas(const Perm& perm) const {
  std::vector<Cyc> g;
  for (auto& r : rows_) g.push_back(a_.kappa[r.a][r.b] / b_.kappa[perm[r.a]][perm[r.b]]);
  return g;
}

static Cyc prod_pow(const std::vector<Cyc>& g, const IntVec& e, const Ctx& K) {
  Cyc r(K, 1);
  for (size_t i = 0; i < g.size(); ++i)
    if (e[i] != 0) r *= g[i].pow(e[i].get_si());
  return r;
}

bool MultSolver::consistent(const Perm& perm) const {
  if (rows_.empty()) return true;
  auto g = gammas(perm);
  const Ctx& K = g[0].ctx();
  for (size_t r = rank_; r < rows_.size(); ++r)
    if (!prod_pow(g, U_[r], K).is_one()) return false;
  return true;
}

std::optional<std::vector<Cyc>> MultSolver::witness(const Perm& perm) const {
  int n = a_.n;
  const Ctx& K = a_.basis[0][0].ctx();
  if (rows_.empty()) return std::vector<Cyc>(n, Cyc(K, 1));
  if (!consistent(perm)) return std::nullopt;
  auto g = gammas(perm);
  std::vector<Cyc> d(n, Cyc(K, 1));
  for (int r = 0; r < rank_; ++r) {
    Cyc gr = prod_pow(g, U_[r], K);
    long e = diag_[r].get_si();
    if (e < 0) {
      e = -e;
      gr = gr.inv();
    }
    auto root = try_root(gr, e);
    if (!root) return std::nullopt;
    d[r] = *root;
  }
  std::vector<Cyc> c;
  for (int j = 0; j < n; ++j) c.push_back(prod_pow(d, V_[j], K));
  return c;
}

std::optional<GradedAut> realize(const Grading& G, const Perm& perm, const std::string& name) {
  auto T = structure_table(G);
  MultSolver S(T, T);
  if (!S.pattern_ok(perm) || !S.consistent(perm)) return std::nullopt;
  GradedAut out{name, perm, std::nullopt};
  if (auto c = S.witness(perm)) out.map = graded_map(T, T, perm, *c);
  return out;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

static Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

PermGroup closure(const std::vector<Perm>& gens, int degree, size_t limit) {
  PermGroup G;
  G.degree = degree;
  G.gens = gens;
  std::set<Perm> seen{identity_perm(degree)};
  std::deque<Perm> todo{identity_perm(degree)};
  while (!todo.empty()) {
    Perm p = todo.front();
    todo.pop_front();
    for (auto& g : gens) {
      Perm q = perm_compose(g, p);
      if (seen.insert(q).second) {
        if (seen.size() > limit) throw CapExceeded("closure: more than " + std::to_string(limit) + " elements");
        todo.push_back(q);
      }
    }
  }
  G.elements.assign(seen.begin(), seen.end());
  return G;
}

bool PermGroup::is_abelian() const {
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (perm_compose(gens[i], gens[j]) != perm_compose(gens[j], gens[i])) return false;
  return true;
}

long PermGroup::element_order(const Perm& p) const {
  Perm id = identity_perm(degree), q = p;
  long k = 1;
  while (q != id) {
    q = perm_compose(p, q);
    ++k;
  }
  return k;
}

bool PermGroup::dihedral_pattern() const {
  if (is_abelian() || order() % 2) return false;
  long half = static_cast<long>(order() / 2);
  for (auto& e : elements)
    if (element_order(e) == half) return true;
  return false;
}

std::string cycle_str(const Perm& p, const std::vector<std::string>& names) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : " ") + names[j];
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

PQSplit compute_pq(const std::vector<Cyc>& lambda, const FineTwistedParams& p) {
  const Ctx& K = lambda[0].ctx();
  long m1 = type1_modulus(p.l), m2 = p.l;
  bool useb = p.s > 0;
  const auto& P = useb ? p.betas : p.alphas;
  long m = useb ? m1 : m2;
  std::vector<Cyc> reps;
  for (auto& x : P)
    for (long t = 0; t < m; ++t) {
      Cyc eps = x / P[0] * root_of_unity(K, m, t);
      if (!classes_match(p.betas, p.betas, eps, m1) || !classes_match(p.alphas, p.alphas, eps, m2)) continue;
      bool dup = false;
      for (auto& r : reps)
        if (m_related(r, eps, m)) dup = true;
      if (!dup) reps.push_back(eps);
    }
  PQSplit out;
  out.q = static_cast<long>(reps.size());
  for (auto& e : reps) {
    long k = 1;
    Cyc x = e;
    while (!x.pow(m).is_one()) {
      x *= e;
      ++k;
    }
    if (k == out.q) {
      out.eps = e;
      break;
    }
  }
  out.p = out.q > 1 ? out.q * m : 1;
  return out;
}

static mpz_class fact(long n) {
  mpz_class r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

static mpz_class ipow(long b, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
  return r;
}

mpz_class weyl_order_heisenberg(int k) { return ipow(2, k) * fact(k); }

mpz_class weyl_order_super(int k, int m, int r) { return ipow(2, r + k) * fact(k) * fact(r) * fact(m - 2 * r); }

static std::vector<int> class_multiplicities(const std::vector<Cyc>& xs, long m) {
  std::vector<Cyc> reps;
  std::vector<int> mult;
  for (auto& x : xs) {
    bool found = false;
    for (size_t i = 0; i < reps.size(); ++i)
      if (m_related(reps[i], x, m)) {
        ++mult[i];
        found = true;
        break;
      }
    if (!found) {
      reps.push_back(x);
      mult.push_back(1);
    }
  }
  return mult;
}

mpz_class weyl_order_twisted(const std::vector<Cyc>& lambda, const FineTwistedParams& p) {
  PQSplit pq = compute_pq(lambda, p);
  mpz_class r = pq.q;
  for (int n : class_multiplicities(p.betas, type1_modulus(p.l))) r *= fact(n);
  if (p.l % 2 == 0) {
    for (int n : class_multiplicities(p.alphas, p.l)) r *= fact(n);
    r *= ipow(2L * p.l, p.s) * ipow(2, p.r);
  } else {
    r *= 2 * ipow(p.l, p.s);
  }
  return r;
}

namespace {

GradedAut explicit_aut(const Grading& G, const StructureTable& T, const std::string& name, const Perm& perm,
                       const std::vector<Cyc>& c) {
  Mat f = graded_map(T, T, perm, c);
  GradedAut g = induced_permutation(f, G);
  if (g.perm != perm) throw MathError("generator " + name + " permutes components unexpectedly");
  g.name = name;
  return g;
}

}  // namespace

std::vector<GradedAut> generators_heisenberg(const Grading& G, int k) {
  auto T = structure_table(G);
  const Ctx& K = G.alg->ctx;
  int n = T.n;
  std::vector<GradedAut> out;
  auto e = [](int i) { return 1 + 2 * i; };
  for (int i = 0; i + 1 < k; ++i) {
    Perm p = identity_perm(n);
    std::swap(p[e(i)], p[e(i + 1)]);
    std::swap(p[e(i) + 1], p[e(i + 1) + 1]);
    out.push_back(explicit_aut(G, T, "sigma(" + std::to_string(i + 1) + "," + std::to_string(i + 2) + ")", p,
                               std::vector<Cyc>(n, Cyc(K, 1))));
  }
  if (k >= 1) {
    Perm p = identity_perm(n);
    std::swap(p[e(0)], p[e(0) + 1]);
    std::vector<Cyc> c(n, Cyc(K, 1));
    c[e(0) + 1] = Cyc(K, -1);
    out.push_back(explicit_aut(G, T, "mu1", p, c));
  }
  return out;
}

std::vector<GradedAut> generators_super(const Grading& G, int k, int m, int r) {
  if (m == 0) return generators_heisenberg(G, k);
  auto T = structure_table(G);
  const Ctx& K = G.alg->ctx;
  int n = T.n, q = m - 2 * r;
  std::vector<Cyc> ones(n, Cyc(K, 1));
  std::vector<GradedAut> out;
  auto e = [](int i) { return 1 + 2 * i; };
  auto u = [&](int j) { return 1 + 2 * k + 2 * j; };
  auto z = [&](int l) { return 1 + 2 * k + 2 * r + l; };
  auto tag = [](int i) { return "(" + std::to_string(i + 1) + "," + std::to_string(i + 2) + ")"; };
  for (int i = 0; i + 1 < k; ++i) {
    Perm p = identity_perm(n);
    std::swap(p[e(i)], p[e(i + 1)]);
    std::swap(p[e(i) + 1], p[e(i + 1) + 1]);
    out.push_back(explicit_aut(G, T, "sigma~" + tag(i), p, ones));
  }
  if (k >= 1) {
    Perm p = identity_perm(n);
    std::swap(p[e(0)], p[e(0) + 1]);
    std::vector<Cyc> c = ones;
    c[e(0) + 1] = Cyc(K, -1);
    out.push_back(explicit_aut(G, T, "mu1", p, c));
  }
  for (int j = 0; j + 1 < r; ++j) {
    Perm p = identity_perm(n);
    std::swap(p[u(j)], p[u(j + 1)]);
    std::swap(p[u(j) + 1], p[u(j + 1) + 1]);
    out.push_back(explicit_aut(G, T, "sigma-" + tag(j), p, ones));
  }
  if (r >= 1) {
    Perm p = identity_perm(n);
    std::swap(p[u(0)], p[u(0) + 1]);
    out.push_back(explicit_aut(G, T, "mu'1", p, ones));
  }
  for (int l = 0; l + 1 < q; ++l) {
    Perm p = identity_perm(n);
    std::swap(p[z(l)], p[z(l + 1)]);
    out.push_back(explicit_aut(G, T, "sigma^" + tag(l), p, ones));
  }
  return out;
}

namespace {

struct BlockMove {
  std::vector<int> to1, to2;  // image block of each type I / type II block
};

// search shift/swap variants of the blocks that move (or all blocks when all = true)
std::optional<GradedAut> realize_block_map(const FineTwisted& F, const StructureTable& T, const MultSolver& S,
                                           const BlockMove& mv, bool all, const std::string& name) {
  int l = F.params.l, s = F.params.s, r = F.params.r;
  std::vector<int> free1, free2;
  for (int j = 0; j < s; ++j)
    if (all || mv.to1[j] != j) free1.push_back(j);
  for (int t = 0; t < r; ++t)
    if (all || mv.to2[t] != t) free2.push_back(t);
  std::vector<int> d1(s, 0), sw(s, 0), d2(r, 0);
  Perm perm = identity_perm(T.n);
  std::optional<GradedAut> found;
  auto build = [&]() {
    for (int j = 0; j < s; ++j) {
      int J = mv.to1[j];
      for (int i = 0; i < l; ++i) {
        int ii = (i + d1[j]) % l;
        perm[F.cx[j][i]] = sw[j] ? F.cy[J][ii] : F.cx[J][ii];
        perm[F.cy[j][i]] = sw[j] ? F.cx[J][ii] : F.cy[J][ii];
      }
    }
    for (int t = 0; t < r; ++t)
      for (int i = 0; i < l; ++i) perm[F.ca[t][i]] = F.ca[mv.to2[t]][(i + d2[t]) % l];
  };
  std::function<void(size_t)> rec2;
  std::function<void(size_t)> rec1 = [&](size_t a) {
    if (found) return;
    if (a == free1.size()) {
      rec2(0);
      return;
    }
    int j = free1[a];
    for (int d = 0; d < l && !found; ++d)
      for (int w = 0; w < 2 && !found; ++w) {
        d1[j] = d;
        sw[j] = w;
        rec1(a + 1);
      }
    d1[j] = sw[j] = 0;
  };
  rec2 = [&](size_t a) {
    if (found) return;
    if (a == free2.size()) {
      build();
      if (S.pattern_ok(perm) && S.consistent(perm)) {
        GradedAut g{name, perm, std::nullopt};
        if (auto c = S.witness(perm)) g.map = graded_map(T, T, perm, *c);
        found = g;
      }
      return;
    }
    int t = free2[a];
    for (int d = 0; d < l && !found; ++d) {
      d2[t] = d;
      rec2(a + 1);
    }
    d2[t] = 0;
  };
  rec1(0);
  return found;
}

}  // namespace

std::vector<GradedAut> generators_twisted(const FineTwisted& F) {
  const Grading& G = F.grading;
  const Ctx& K = G.alg->ctx;
  auto T = structure_table(G);
  MultSolver S(T, T);
  int n = T.n, l = F.params.l, s = F.params.s, r = F.params.r;
  std::vector<Cyc> ones(n, Cyc(K, 1));
  std::vector<GradedAut> out;
  auto js = [](int j) { return std::to_string(j + 1); };
  Cyc m1(K, -1);
  auto sgn = [&](int e) { return e % 2 ? m1 : Cyc(K, 1); };
  // theta_j: x_i -> x_{i+1}, y_1 -> (-1)^{l+1} y_l, y_i -> -y_{i-1}
  if (l > 1)
    for (int j = 0; j < s; ++j) {
      Perm p = identity_perm(n);
      std::vector<Cyc> c = ones;
      for (int i = 0; i < l; ++i) {
        p[F.cx[j][i]] = F.cx[j][(i + 1) % l];
        p[F.cy[j][i]] = F.cy[j][(i + l - 1) % l];
        c[F.cy[j][i]] = i == 0 ? sgn(l + 1) : m1;
      }
      out.push_back(explicit_aut(G, T, "theta" + js(j), p, c));
    }
  if (l % 2 == 0) {
    // x_i -> y_i, y_i -> -x_i
    for (int j = 0; j < s; ++j) {
      Perm p = identity_perm(n);
      std::vector<Cyc> c = ones;
      for (int i = 0; i < l; ++i) {
        p[F.cx[j][i]] = F.cy[j][i];
        p[F.cy[j][i]] = F.cx[j][i];
        c[F.cy[j][i]] = m1;
      }
      out.push_back(explicit_aut(G, T, "vartheta" + js(j), p, c));
    }
    // a_i -> i^{l/2} a_{i+l/2}
    for (int t = 0; t < r; ++t) {
      Perm p = identity_perm(n);
      std::vector<Cyc> c = ones;
      for (int i = 0; i < l; ++i) {
        p[F.ca[t][i]] = F.ca[t][(i + l / 2) % l];
        c[F.ca[t][i]] = imag_unit(K).pow(l / 2);
      }
      out.push_back(explicit_aut(G, T, "varrho" + js(t), p, c));
    }
  } else if (s > 0) {
    // u -> -u, x_i -> (-1)^i y_i, y_i -> (-1)^{i+1} x_i
    Perm p = identity_perm(n);
    std::vector<Cyc> c = ones;
    c[F.cu] = m1;
    for (int j = 0; j < s; ++j)
      for (int i = 0; i < l; ++i) {
        p[F.cx[j][i]] = F.cy[j][i];
        p[F.cy[j][i]] = F.cx[j][i];
        c[F.cx[j][i]] = sgn(i + 1);
        c[F.cy[j][i]] = sgn(i + 2);
      }
    out.push_back(explicit_aut(G, T, "vartheta'", p, c));
  }
  BlockMove idm;
  for (int j = 0; j < s; ++j) idm.to1.push_back(j);
  for (int t = 0; t < r; ++t) idm.to2.push_back(t);
  long mI = type1_modulus(l);
  // Upsilon: transpositions of consecutive blocks in the same class
  for (int j = 0; j < s; ++j)
    for (int j2 = j + 1; j2 < s; ++j2)
      if (m_related(F.params.betas[j], F.params.betas[j2], mI)) {
        BlockMove mv = idm;
        std::swap(mv.to1[j], mv.to1[j2]);
        if (auto g = realize_block_map(F, T, S, mv, false, "upsilon(" + js(j) + "," + js(j2) + ")"))
          out.push_back(*g);
        break;
      }
  for (int t = 0; t < r; ++t)
    for (int t2 = t + 1; t2 < r; ++t2)
      if (m_related(F.params.alphas[t], F.params.alphas[t2], l)) {
        BlockMove mv = idm;
        std::swap(mv.to2[t], mv.to2[t2]);
        if (auto g = realize_block_map(F, T, S, mv, false, "upsilon'(" + js(t) + "," + js(t2) + ")"))
          out.push_back(*g);
        break;
      }
  // g_p: blocks follow multiplication of their scalars by eps
  PQSplit pq = compute_pq(F.lambda, F.params);
  if (pq.q > 1 && pq.eps) {
    BlockMove mv;
    auto match = [&](const std::vector<Cyc>& xs, long m) {
      std::vector<int> to(xs.size(), -1);
      std::vector<bool> used(xs.size(), false);
      for (size_t j = 0; j < xs.size(); ++j)
        for (size_t j2 = 0; j2 < xs.size(); ++j2)
          if (!used[j2] && m_related(*pq.eps * xs[j], xs[j2], m)) {
            used[j2] = true;
            to[j] = static_cast<int>(j2);
            break;
          }
      return to;
    };
    mv.to1 = match(F.params.betas, mI);
    mv.to2 = match(F.params.alphas, l);
    if (auto g = realize_block_map(F, T, S, mv, true, "g_p")) out.push_back(*g);
  }
  return out;
}

static WeylReport finish(std::vector<GradedAut> gens, int degree, mpz_class formula) {
  WeylReport w;
  std::vector<Perm> ps;
  for (auto& g : gens) ps.push_back(g.perm);
  w.group = closure(ps, degree);
  w.generators = std::move(gens);
  w.formula = formula;
  w.agree = w.formula == static_cast<unsigned long>(w.group.order());
  return w;
}

WeylReport weyl_heisenberg(int k) {
  Grading G = gamma_Hn(k);
  return finish(generators_heisenberg(G, k), static_cast<int>(G.comps.size()), weyl_order_heisenberg(k));
}

WeylReport weyl_super(int k, int m, int r) {
  Grading G = m == 0 ? gamma_Hn(k) : gamma_super(k, m, r);
  return finish(generators_super(G, k, m, r), static_cast<int>(G.comps.size()), weyl_order_super(k, m, r));
}

WeylReport weyl_twisted(const FineTwisted& F) {
  auto w = finish(generators_twisted(F), static_cast<int>(F.grading.comps.size()),
                  weyl_order_twisted(F.lambda, F.params));
  w.pq = compute_pq(F.lambda, F.params);
  return w;
}

namespace {

std::vector<std::vector<long>> invariants(const Grading& G, const StructureTable& T) {
  auto U = universal_group(G);
  auto D = derived(*G.alg);
  auto Zc = center(*G.alg);
  std::vector<std::vector<long>> key(T.n);
  for (int a = 0; a < T.n; ++a) {
    auto o = U.grading.comps[a].deg.order();
    long rows = 0, hits = 0, self = T.target[a][a] >= 0;
    for (int b = 0; b < T.n; ++b) {
      if (T.target[a][b] >= 0) ++rows;
      for (int c = 0; c < T.n; ++c)
        if (T.target[b][c] == a) ++hits;
    }
    key[a] = {T.parity[a], o ? o->get_si() : -1, in_span(D, T.basis[a]), in_span(Zc, T.basis[a]), rows, hits, self};
  }
  return key;
}

// all (or the first) bijections from G's components to H's realized by automorphisms
std::vector<Perm> search(const Grading& G, const Grading& H, int cap, bool first) {
  int n = static_cast<int>(G.comps.size());
  if (n > cap || static_cast<int>(H.comps.size()) > cap)
    throw CapExceeded("support size " + std::to_string(std::max<size_t>(n, H.comps.size())) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<Perm> out;
  if (static_cast<int>(H.comps.size()) != n) return out;
  auto TA = structure_table(G), TB = structure_table(H);
  MultSolver S(TA, TB);
  auto ka = invariants(G, TA), kb = invariants(H, TB);
  Perm perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> rec = [&](int a) {
    if (first && !out.empty()) return;
    if (a == n) {
      if (S.pattern_ok(perm) && S.consistent(perm)) out.push_back(perm);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || ka[a] != kb[c]) continue;
      perm[a] = c;
      bool ok = true;
      for (int b = 0; b <= a && ok; ++b)
        for (int pass = 0; pass < 2 && ok; ++pass) {
          int x = pass ? b : a, y = pass ? a : b;
          int t = TA.target[x][y], t2 = TB.target[perm[x]][perm[y]];
          if ((t < 0) != (t2 < 0)) ok = false;
          else if (t >= 0 && t <= a && perm[t] != t2) ok = false;
        }
      if (ok) {
        used[c] = true;
        rec(a + 1);
        used[c] = false;
      }
      perm[a] = -1;
    }
  };
  rec(0);
  return out;
}

}  // namespace

PermGroup weyl_bruteforce(const Grading& G, int cap) {
  PermGroup P;
  P.degree = static_cast<int>(G.comps.size());
  P.elements = search(G, G, cap, false);
  std::sort(P.elements.begin(), P.elements.end());
  P.gens = P.elements;
  return P;
}

std::optional<Perm> equivalence_oracle(const Grading& G, const Grading& H, int cap) {
  auto r = search(G, H, cap, true);
  if (r.empty()) return std::nullopt;
  return r[0];
}

}  // namespace hg
