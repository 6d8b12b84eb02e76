#include "hg/fine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hg {

namespace {

Component comp1(const Group& G, const IntVec& coords, Vect v, std::string name) {
  return Component{GroupElt(G, coords), {std::move(v)}, {std::move(name)}};
}

std::string list_str(const std::vector<Cyc>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].str();
  return s;
}

}  // namespace

Grading gamma_Hn(int k, Ctx ctx) {
  auto A = std::make_shared<Algebra>(heisenberg(k, ctx));
  Group G = make_group(k + 1, {});
  std::vector<Component> comps;
  IntVec cz(k + 1, 0);
  cz[k] = 2;
  comps.push_back(comp1(G, cz, A->unit(2 * k), "z"));
  for (int i = 0; i < k; ++i) {
    IntVec ce(k + 1, 0), ch(k + 1, 0);
    ce[i] = 1;
    ce[k] = 1;
    ch[i] = -1;
    ch[k] = 1;
    comps.push_back(comp1(G, ce, A->unit(2 * i), "e" + std::to_string(i + 1)));
    comps.push_back(comp1(G, ch, A->unit(2 * i + 1), "eh" + std::to_string(i + 1)));
  }
  return make_grading(A, G, std::move(comps));
}

Grading gamma_super(int k, int m, int r, Ctx ctx) {
  if (r < 0 || 2 * r > m) throw std::invalid_argument("gamma_super: need 0 <= 2r <= m");
  auto A = std::make_shared<Algebra>(heisenberg_super(k, m, ctx));
  const Ctx& K = A->ctx;
  int q = m - 2 * r;
  int nf = 1 + k + r;
  Group G = make_group(nf, std::vector<long>(q, 2));
  int nc = nf + q;
  int z = 2 * k;
  auto w = [&](int j) { return A->unit(z + j); };  // j is 1-based
  std::vector<Component> comps;
  IntVec cz(nc, 0);
  cz[0] = 2;
  comps.push_back(comp1(G, cz, A->unit(z), "z"));
  for (int i = 0; i < k; ++i) {
    IntVec ce(nc, 0), ch(nc, 0);
    ce[0] = ch[0] = 1;
    ce[1 + i] = 1;
    ch[1 + i] = -1;
    comps.push_back(comp1(G, ce, A->unit(2 * i), "e" + std::to_string(i + 1)));
    comps.push_back(comp1(G, ch, A->unit(2 * i + 1), "eh" + std::to_string(i + 1)));
  }
  Cyc I = imag_unit(K);
  for (int j = 1; j <= r; ++j) {
    Vect u = add(w(2 * j - 1), scale(I, w(2 * j)));
    Vect v = scale(Cyc(K, Q(1, 2)), sub(w(2 * j - 1), scale(I, w(2 * j))));
    IntVec cu(nc, 0), cv(nc, 0);
    cu[0] = cv[0] = 1;
    cu[k + j] = 1;
    cv[k + j] = -1;
    comps.push_back(comp1(G, cu, u, "u" + std::to_string(j)));
    comps.push_back(comp1(G, cv, v, "v" + std::to_string(j)));
  }
  for (int l = 1; l <= q; ++l) {
    IntVec c(nc, 0);
    c[0] = 1;
    c[nf + l - 1] = 1;
    comps.push_back(comp1(G, c, w(2 * r + l), "z" + std::to_string(l)));
  }
  return make_grading(A, G, std::move(comps));
}

Grading gamma1(const std::vector<Cyc>& lambda) {
  auto A = std::make_shared<Algebra>(twisted(lambda));
  int k = static_cast<int>(lambda.size());
  Group G = make_group(1, std::vector<long>(k, 2));
  int nc = 1 + k;
  std::vector<Component> comps;
  IntVec cz(nc, 0), cu(nc, 0);
  cz[0] = 2;
  cz[1] = 1;
  cu[1] = 1;
  comps.push_back(comp1(G, cz, A->unit(0), "z"));
  comps.push_back(comp1(G, cu, A->unit(1), "u"));
  for (int i = 0; i < k; ++i) {
    IntVec ce(nc, 0), ch(nc, 0);
    ce[0] = ch[0] = 1;
    ce[1] = 1;
    if (i < k - 1) ce[2 + i] = ch[2 + i] = 1;
    comps.push_back(comp1(G, ce, A->unit(2 + 2 * i), "e" + std::to_string(i + 1)));
    comps.push_back(comp1(G, ch, A->unit(3 + 2 * i), "eh" + std::to_string(i + 1)));
  }
  return make_grading(A, G, std::move(comps));
}

Grading gamma2(const std::vector<Cyc>& lambda) {
  auto A = std::make_shared<Algebra>(twisted(lambda));
  int k = static_cast<int>(lambda.size());
  Group G = make_group(1 + k, {});
  int nc = 1 + k;
  std::vector<Component> comps;
  IntVec cz(nc, 0), cu(nc, 0);
  cz[0] = 2;
  comps.push_back(comp1(G, cz, A->unit(0), "z"));
  comps.push_back(comp1(G, cu, A->unit(1), "u"));
  for (int i = 0; i < k; ++i) {
    IntVec a(nc, 0), b(nc, 0);
    a[0] = b[0] = 1;
    a[1 + i] = 1;
    b[1 + i] = -1;
    Vect e = A->unit(2 + 2 * i), eh = A->unit(3 + 2 * i);
    comps.push_back(comp1(G, a, add(e, eh), "u" + std::to_string(i + 1)));
    comps.push_back(comp1(G, b, sub(e, eh), "v" + std::to_string(i + 1)));
  }
  return make_grading(A, G, std::move(comps));
}

std::string FineTwistedParams::str() const {
  std::ostringstream os;
  os << "(" << l << "," << s << "," << r << ";" << list_str(betas) << ";" << list_str(alphas) << ")";
  return os.str();
}

bool m_related(const Cyc& a, const Cyc& b, long m) { return (a / b).pow(m).is_one(); }

long type1_modulus(int l) { return l % 2 == 0 ? l : 2L * l; }

static std::vector<Cyc> sorted(std::vector<Cyc> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool spectrum_check(const std::vector<Cyc>& lambda, const FineTwistedParams& p) {
  if (lambda.empty()) return false;
  const Ctx& K = lambda[0].ctx();
  int k = static_cast<int>(lambda.size());
  if (p.l < 1 || p.s < 0 || p.r < 0) return false;
  if (p.l * (p.r + 2 * p.s) != 2 * k) return false;
  if (p.l % 2 == 1 && p.r != 0) return false;
  if (static_cast<int>(p.betas.size()) != p.s || static_cast<int>(p.alphas.size()) != p.r) return false;
  if (K->N() % p.l != 0) return false;
  Cyc xi = root_of_unity(K, p.l, 1);
  std::vector<Cyc> lhs, rhs;
  for (auto& x : lambda) {
    lhs.push_back(x);
    lhs.push_back(-x);
  }
  for (auto& b : p.betas) {
    Cyc c = b;
    for (int t = 0; t < p.l; ++t, c *= xi) {
      rhs.push_back(c);
      rhs.push_back(-c);
    }
  }
  for (auto& a : p.alphas) {
    Cyc c = a;
    for (int t = 0; t < p.l; ++t, c *= xi) rhs.push_back(c);
  }
  return sorted(lhs) == sorted(rhs);
}

BlockI block_I(const Algebra& A, int l, const Cyc& alpha, const std::vector<Vect>& U, const std::vector<Vect>& V) {
  if (static_cast<int>(U.size()) != l || static_cast<int>(V.size()) != l)
    throw std::invalid_argument("block_I: need l pairs");
  const Ctx& K = A.ctx;
  Cyc xi = root_of_unity(K, l, 1);
  BlockI b;
  b.l = l;
  b.alpha = alpha;
  Cyc c = Cyc(K, Q(-1, 2 * l));
  for (int j = 1; j <= l; ++j) {
    Vect x = A.zero(), y = A.zero();
    for (int t = 1; t <= l; ++t) {
      axpy(x, xi.pow(static_cast<long>(j) * t), U[t - 1]);
      axpy(y, xi.pow(static_cast<long>(j - 1) * t), V[t - 1]);
    }
    b.x.push_back(x);
    b.y.push_back(scale(j % 2 ? -c : c, y));
  }
  return b;
}

BlockII block_II(const Algebra& A, int l, const Cyc& alpha, const std::vector<Vect>& U, const std::vector<Vect>& V) {
  if (static_cast<int>(U.size()) != l || static_cast<int>(V.size()) != l)
    throw std::invalid_argument("block_II: need l pairs");
  const Ctx& K = A.ctx;
  if (K->N() % (4 * l) != 0 || K->N() % (2 * l) != 0)
    throw MathError("block_II: conductor must be divisible by " + std::to_string(4 * l));
  Cyc zeta2l = root_of_unity(K, 2 * l, 1);
  Cyc c = imag_unit(K) / (Cyc(K, 2) * sqrt_int(l, K));
  BlockII b;
  b.n = 2 * l;
  b.alpha = alpha;
  for (int j = 1; j <= 2 * l; ++j) {
    Vect x = A.zero();
    Cyc sg(K, Q((j - 1) % 2 ? -1 : 1));
    for (int t = 1; t <= l; ++t) {
      Cyc w = zeta2l.pow(static_cast<long>(j - 1) * t);
      axpy(x, w, U[t - 1]);
      axpy(x, w * sg, V[t - 1]);
    }
    b.a.push_back(scale(c, x));
  }
  return b;
}

namespace {

bool expect(const Algebra& A, const Vect& a, const Vect& b, const Vect& want, const std::string& what,
            std::string* why) {
  Vect got = A.bracket(a, b);
  if (got == want) return true;
  if (why) *why = what + ": got " + vec_str(got) + ", expected " + vec_str(want);
  return false;
}

}  // namespace

bool check_block_I(const Algebra& A, const Vect& u, const Vect& z, const BlockI& b, std::string* why) {
  int l = b.l;
  const Cyc& al = b.alpha;
  const Ctx& K = A.ctx;
  std::vector<Vect> all;
  for (int i = 0; i < l; ++i) {
    all.push_back(b.x[i]);
    all.push_back(b.y[i]);
  }
  if (rank_of(all) != 2 * l) {
    if (why) *why = "block elements are dependent";
    return false;
  }
  Cyc sl(K, Q(l % 2 ? -1 : 1));
  for (int i = 0; i < l; ++i) {
    int n = (i + 1) % l;
    std::string is = std::to_string(i + 1);
    if (!expect(A, u, b.x[i], scale(al, b.x[n]), "[u,x" + is + "]", why)) return false;
    Cyc f = (i == l - 1) ? sl * al : al;
    if (!expect(A, u, b.y[i], scale(f, b.y[n]), "[u,y" + is + "]", why)) return false;
  }
  Vect zero = A.zero();
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      std::string ij = std::to_string(i) + "," + std::to_string(j);
      if (!expect(A, b.x[i - 1], b.x[j - 1], zero, "[x" + ij + "]", why)) return false;
      if (!expect(A, b.y[i - 1], b.y[j - 1], zero, "[y" + ij + "]", why)) return false;
      Vect want = zero;
      if (i < l && j == l - i) want = scale(Cyc(K, Q((l - i) % 2 ? -1 : 1)) * al, z);
      if (i == l && j == l) want = scale(sl * al, z);
      if (!expect(A, b.x[i - 1], b.y[j - 1], want, "[x" + std::to_string(i) + ",y" + std::to_string(j) + "]", why))
        return false;
    }
  return true;
}

bool check_block_II(const Algebra& A, const Vect& u, const Vect& z, const BlockII& b, std::string* why) {
  int n = b.n;
  const Ctx& K = A.ctx;
  if (rank_of(b.a) != n) {
    if (why) *why = "block elements are dependent";
    return false;
  }
  for (int i = 0; i < n; ++i)
    if (!expect(A, u, b.a[i], scale(b.alpha, b.a[(i + 1) % n]), "[u,a" + std::to_string(i + 1) + "]", why))
      return false;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Vect want = A.zero();
      if (i + j == n + 1) want = scale(Cyc(K, Q(i % 2 ? -1 : 1)) * b.alpha, z);
      if (!expect(A, b.a[i - 1], b.a[j - 1], want, "[a" + std::to_string(i) + ",a" + std::to_string(j) + "]", why))
        return false;
    }
  return true;
}

static void validate_params(const std::vector<Cyc>& lambda, const FineTwistedParams& p) {
  int k = static_cast<int>(lambda.size());
  if (p.l < 1 || p.s < 0 || p.r < 0 || p.l * (p.r + 2 * p.s) != 2 * k)
    throw MathError("params " + p.str() + ": need l(r+2s) = 2k = " + std::to_string(2 * k));
  if (p.l % 2 == 1 && p.r != 0) throw MathError("params " + p.str() + ": r must be 0 for odd l");
  if (static_cast<int>(p.betas.size()) != p.s || static_cast<int>(p.alphas.size()) != p.r)
    throw MathError("params " + p.str() + ": scalar counts do not match s and r");
  if (!spectrum_check(lambda, p)) throw MathError("params " + p.str() + ": spectrum condition fails");
}

Group predicted_universal_group(const FineTwistedParams& p) {
  std::vector<long> mods;
  if (p.l > 1) mods.push_back(p.l);
  for (int t = 0; t + 1 < p.r; ++t) mods.push_back(2);
  int n = p.s + 1 + static_cast<int>(mods.size());
  AbPresentation P;
  P.n_gens = n;
  for (size_t t = 0; t < mods.size(); ++t) {
    IntVec row(n, 0);
    row[p.s + 1 + t] = mods[t];
    P.relations.push_back(row);
  }
  return canonicalize(P);
}

FineTwisted fine_twisted(const std::vector<Cyc>& lambda, const FineTwistedParams& p) {
  validate_params(lambda, p);
  const Ctx& K = lambda[0].ctx();
  int l = p.l, s = p.s, r = p.r;
  if (r > 0 && K->N() % (2 * l) != 0)
    throw MathError("fine_twisted: conductor must be divisible by " + std::to_string(2 * l));
  auto A = std::make_shared<Algebra>(twisted(lambda));
  int k = static_cast<int>(lambda.size());
  std::vector<Vect> Ui, Vi;
  for (int i = 0; i < k; ++i) {
    Vect e = A->unit(2 + 2 * i), eh = A->unit(3 + 2 * i);
    Ui.push_back(add(e, eh));
    Vi.push_back(sub(e, eh));
  }
  std::vector<bool> used(k, false);
  auto take = [&](const Cyc& mu, std::vector<Vect>& U, std::vector<Vect>& V) {
    for (int i = 0; i < k; ++i) {
      if (used[i]) continue;
      if (lambda[i] == mu) {
        used[i] = true;
        U.push_back(Ui[i]);
        V.push_back(Vi[i]);
        return;
      }
      if (lambda[i] == -mu) {
        used[i] = true;
        U.push_back(Vi[i]);
        V.push_back(Ui[i]);
        return;
      }
    }
    throw MathError("fine_twisted: no eigenvalue " + mu.str() + " left");
  };

  FineTwisted F;
  F.lambda = lambda;
  F.params = p;
  F.z = A->unit(0);
  F.u = A->unit(1);
  Cyc xi = root_of_unity(K, l, 1);
  for (int j = 0; j < s; ++j) {
    std::vector<Vect> U, V;
    Cyc mu = p.betas[j];
    for (int t = 1; t <= l; ++t) {
      mu *= xi;
      take(mu, U, V);
    }
    F.b1.push_back(block_I(*A, l, p.betas[j], U, V));
  }
  for (int t = 0; t < r; ++t) {
    int h = l / 2;
    std::vector<Vect> U, V;
    Cyc mu = p.alphas[t];
    for (int i = 1; i <= h; ++i) {
      mu *= xi;
      take(mu, U, V);
    }
    F.b2.push_back(block_II(*A, h, p.alphas[t], U, V));
  }
  std::string why;
  for (auto& b : F.b1)
    if (!check_block_I(*A, F.u, F.z, b, &why)) throw MathError("fine_twisted: type I block broken: " + why);
  for (auto& b : F.b2)
    if (!check_block_II(*A, F.u, F.z, b, &why)) throw MathError("fine_twisted: type II block broken: " + why);

  // coordinates: e_1..e_s, c (free), then Z_l if l > 1, then Z_2^{r-1}
  std::vector<long> mods;
  int lc = -1;
  if (l > 1) {
    lc = s + 1;
    mods.push_back(l);
  }
  int tc = s + 1 + static_cast<int>(mods.size());
  for (int t = 0; t + 1 < r; ++t) mods.push_back(2);
  Group G = make_group(s + 1, mods);
  int nc = s + 1 + static_cast<int>(mods.size());
  auto coords = [&](long zl, int ej, long ejv, long c, int tt) {
    IntVec v(nc, 0);
    if (lc >= 0) v[lc] = zl;
    if (ej >= 0) v[ej] = ejv;
    v[s] = c;
    if (tt >= 0 && tt + 1 < r) v[tc + tt] = 1;
    return v;
  };
  std::vector<Component> comps;
  comps.push_back(comp1(G, coords(1, -1, 0, 2, -1), F.z, "z"));
  comps.push_back(comp1(G, coords(1, -1, 0, 0, -1), F.u, "u"));
  for (int j = 0; j < s; ++j) {
    std::vector<int> cx, cy;
    for (int i = 1; i <= l; ++i) {
      std::string tag = std::to_string(i) + "^" + std::to_string(j + 1);
      cx.push_back(static_cast<int>(comps.size()));
      comps.push_back(comp1(G, coords(i + 1, j, 1, 1, -1), F.b1[j].x[i - 1], "x" + tag));
      cy.push_back(static_cast<int>(comps.size()));
      comps.push_back(comp1(G, coords(i, j, -1, 1, -1), F.b1[j].y[i - 1], "y" + tag));
    }
    F.cx.push_back(cx);
    F.cy.push_back(cy);
  }
  for (int t = 0; t < r; ++t) {
    std::vector<int> ca;
    for (int i = 1; i <= l; ++i) {
      ca.push_back(static_cast<int>(comps.size()));
      comps.push_back(comp1(G, coords(i, -1, 0, 1, t), F.b2[t].a[i - 1], "a" + std::to_string(i) + "^" + std::to_string(t + 1)));
    }
    F.ca.push_back(ca);
  }
  F.grading = make_grading(A, G, std::move(comps));
  return F;
}

long twisted_conductor(int k, long zeta_lcm) {
  long N = lcm_l(8, zeta_lcm);
  for (int l = 1; l <= 2 * k; ++l)
    if ((2 * k) % l == 0) N = lcm_l(N, 4L * l);
  return N;
}

namespace {

// position of x in (lambda_1..lambda_k, -lambda_1..-lambda_k); used for canonical representatives
struct ScalarOrder {
  std::vector<Cyc> seq;
  explicit ScalarOrder(const std::vector<Cyc>& lambda) {
    seq = lambda;
    for (auto& x : lambda) seq.push_back(-x);
  }
  // first element of seq in the m-class of x
  std::pair<int, Cyc> rep(const Cyc& x, long m) const {
    for (size_t i = 0; i < seq.size(); ++i)
      if (m_related(seq[i], x, m)) return {static_cast<int>(i), seq[i]};
    return {static_cast<int>(seq.size()), x};
  }
};

}  // namespace

bool classes_match(const std::vector<Cyc>& p, const std::vector<Cyc>& q, const Cyc& eps, long m) {
  if (p.size() != q.size()) return false;
  std::vector<bool> used(p.size(), false);
  for (auto& b : q) {
    Cyc e = eps * b;
    bool found = false;
    for (size_t j = 0; j < p.size(); ++j)
      if (!used[j] && m_related(e, p[j], m)) {
        used[j] = found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool equivalent_fine(const std::vector<Cyc>& lambda, const FineTwistedParams& p, const FineTwistedParams& q) {
  if (p.l != q.l || p.s != q.s || p.r != q.r) return false;
  const Ctx& K = lambda[0].ctx();
  long m1 = type1_modulus(p.l), m2 = p.l;
  const std::vector<Cyc>& P = p.s > 0 ? p.betas : p.alphas;
  const std::vector<Cyc>& Qv = p.s > 0 ? q.betas : q.alphas;
  long m = p.s > 0 ? m1 : m2;
  if (P.empty()) return true;
  if (K->N() % m != 0) throw MathError("equivalent_fine: conductor too small for the class modulus");
  for (auto& x : P)
    for (long t = 0; t < m; ++t) {
      Cyc eps = x / Qv[0] * root_of_unity(K, m, t);
      if (classes_match(p.betas, q.betas, eps, m1) && classes_match(p.alphas, q.alphas, eps, m2)) return true;
    }
  return false;
}

EnumerationResult enumerate_fine_twisted(const std::vector<Cyc>& lambda) {
  if (lambda.empty()) throw std::invalid_argument("enumerate_fine_twisted: empty lambda");
  const Ctx& K = lambda[0].ctx();
  int k = static_cast<int>(lambda.size());
  ScalarOrder order(lambda);
  EnumerationResult out;
  std::vector<FineTwistedParams> cands;
  for (int l = 1; l <= 2 * k; ++l) {
    if ((2 * k) % l != 0) continue;
    // the multiset {±lambda_i} must be a union of cosets c*mu_l
    std::vector<Cyc> rest = order.seq;
    std::vector<Cyc> orbits;
    bool ok = K->N() % l == 0;
    Cyc xi = ok ? root_of_unity(K, l, 1) : Cyc(K, 1);
    while (ok && !rest.empty()) {
      Cyc c = rest.front();
      Cyc x = c;
      for (int t = 0; t < l; ++t, x *= xi) {
        auto it = std::find(rest.begin(), rest.end(), x);
        if (it == rest.end()) {
          ok = false;
          break;
        }
        rest.erase(it);
      }
      orbits.push_back(c);
    }
    if (!ok) {
      out.rejected_l.push_back(l);
      continue;
    }
    long m1 = type1_modulus(l);
    if (l % 2 == 1) {
      // each orbit pairs with its negative
      FineTwistedParams p{l, k / l, 0, {}, {}};
      std::vector<bool> used(orbits.size(), false);
      for (size_t a = 0; a < orbits.size(); ++a) {
        if (used[a]) continue;
        used[a] = true;
        for (size_t b = a + 1; b < orbits.size(); ++b)
          if (!used[b] && m_related(orbits[b], -orbits[a], l)) {
            used[b] = true;
            break;
          }
        p.betas.push_back(order.rep(orbits[a], m1).second);
      }
      cands.push_back(p);
      continue;
    }
    // l even: classes with multiplicities
    std::vector<Cyc> cls;
    std::vector<int> mult;
    for (auto& o : orbits) {
      bool found = false;
      for (size_t c = 0; c < cls.size(); ++c)
        if (m_related(cls[c], o, l)) {
          ++mult[c];
          found = true;
          break;
        }
      if (!found) {
        cls.push_back(order.rep(o, l).second);
        mult.push_back(1);
      }
    }
    for (int s = 0; l * 2 * s <= 2 * k; ++s) {
      int r = (2 * k) / l - 2 * s;
      // distribute s type I blocks: d_c <= mult_c / 2
      std::vector<int> d(cls.size(), 0);
      std::function<void(size_t, int)> rec = [&](size_t c, int left) {
        if (c == cls.size()) {
          if (left != 0) return;
          FineTwistedParams p{l, s, r, {}, {}};
          for (size_t t = 0; t < cls.size(); ++t) {
            for (int x = 0; x < d[t]; ++x) p.betas.push_back(cls[t]);
            for (int x = 0; x < mult[t] - 2 * d[t]; ++x) p.alphas.push_back(cls[t]);
          }
          cands.push_back(p);
          return;
        }
        for (int x = std::min(left, mult[c] / 2); x >= 0; --x) {
          d[c] = x;
          rec(c + 1, left - x);
        }
        d[c] = 0;
      };
      rec(0, s);
    }
  }
  // canonical order: l, then s descending, then representatives by position in lambda
  auto key = [&](const FineTwistedParams& p) {
    std::vector<int> kk{p.l, -p.s};
    std::vector<int> bs, as;
    for (auto& b : p.betas) bs.push_back(order.rep(b, type1_modulus(p.l)).first);
    for (auto& a : p.alphas) as.push_back(order.rep(a, p.l).first);
    std::sort(bs.begin(), bs.end());
    std::sort(as.begin(), as.end());
    kk.insert(kk.end(), bs.begin(), bs.end());
    kk.push_back(-1);
    kk.insert(kk.end(), as.begin(), as.end());
    return kk;
  };
  for (auto& p : cands) {
    auto sort_by = [&](std::vector<Cyc>& v, long m) {
      std::stable_sort(v.begin(), v.end(),
                       [&](const Cyc& a, const Cyc& b) { return order.rep(a, m).first < order.rep(b, m).first; });
    };
    sort_by(p.betas, type1_modulus(p.l));
    sort_by(p.alphas, p.l);
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [&](const FineTwistedParams& a, const FineTwistedParams& b) { return key(a) < key(b); });
  for (auto& p : cands) {
    if (!spectrum_check(lambda, p)) throw MathError("enumerate_fine_twisted: internal spectrum mismatch " + p.str());
    out.param_types.push_back(p);
    bool dup = false;
    for (auto& q : out.classes)
      if (equivalent_fine(lambda, q, p)) {
        dup = true;
        break;
      }
    if (!dup) out.classes.push_back(p);
  }
  return out;
}

std::vector<Cyc> lambda_of(const Algebra& A) {
  if (A.kind != "twisted") throw MathError("expected a twisted Heisenberg algebra");
  int k = (A.dim - 2) / 2;
  std::vector<Cyc> lam;
  for (int i = 0; i < k; ++i) lam.push_back(A.basis_bracket(1, 2 + 2 * i)[3 + 2 * i]);
  return lam;
}

Homogenized homogenize_u(const Grading& G) {
  const Algebra& A = *G.alg;
  auto lam = lambda_of(A);
  auto rep = verify_grading(G);
  if (!rep.ok) throw MathError("homogenize_u: not a grading (" + rep.detail + ")");
  auto D = derived(A);
  Homogenized h;
  h.z = A.unit(0);
  for (size_t c = 0; c < G.comps.size() && h.comp < 0; ++c)
    for (auto& x : G.comps[c].basis)
      if (!in_span(D, x)) {
        h.u = scale(x[1].inv(), x);
        h.comp = static_cast<int>(c);
        break;
      }
  if (h.comp < 0) throw MathError("homogenize_u: no homogeneous element outside [L,L]");
  int k = static_cast<int>(lam.size());
  const Ctx& K = A.ctx;
  for (int i = 0; i < k; ++i) {
    const Cyc& a = h.u[2 + 2 * i];
    const Cyc& b = h.u[3 + 2 * i];
    Cyc ai = (a + b).scaled(Q(1, 2)), bi = (a - b).scaled(Q(1, 2));
    Vect e = A.unit(2 + 2 * i), eh = A.unit(3 + 2 * i);
    Vect ui = add(e, eh), vi = sub(e, eh);
    axpy(ui, bi * Cyc(K, 2), h.z);
    axpy(vi, ai * Cyc(K, 2), h.z);
    h.up.push_back(ui);
    h.vp.push_back(vi);
  }
  return h;
}

Decomposition decompose_twisted_grading(const Grading& G) {
  const Algebra& A = *G.alg;
  const Ctx& K = A.ctx;
  auto lam = lambda_of(A);
  Homogenized h = homogenize_u(G);
  auto ord = G.comps[h.comp].deg.order();
  if (!ord) throw MathError("decompose: the degree of u has infinite order");
  int l = static_cast<int>(ord->get_si());
  const Vect& z = h.z;
  auto phi = [&](const Vect& v) { return A.bracket(h.u, v); };
  auto phin = [&](Vect v, int n) {
    for (int i = 0; i < n; ++i) v = phi(v);
    return v;
  };
  auto zc = [&](const Vect& v) {
    // bracket values of [L,L]-elements in the z direction
    return v[0];
  };
  std::vector<Cyc> pm;
  for (auto& x : lam) pm.push_back(x);
  for (auto& x : lam) pm.push_back(-x);
  std::vector<Cyc> eig;
  for (auto& mu : pm) {
    Cyc c = mu.pow(l);
    if (std::find(eig.begin(), eig.end(), c) == eig.end()) eig.push_back(c);
  }
  // homogeneous pieces of [u', L]
  std::vector<std::vector<Vect>> R;
  for (auto& c : G.comps) {
    std::vector<Vect> img;
    for (auto& v : c.basis) img.push_back(phi(v));
    auto e = rref(img).rows;
    if (!e.empty()) R.push_back(e);
  }
  auto eigvecs = [&](const std::vector<Vect>& P, const Cyc& c) {
    if (P.empty()) return std::vector<Vect>{};
    Mat M(K, A.dim, static_cast<int>(P.size()));
    for (size_t t = 0; t < P.size(); ++t) {
      Vect w = sub(phin(P[t], l), scale(c, P[t]));
      for (int i = 0; i < A.dim; ++i) M(i, static_cast<int>(t)) = w[i];
    }
    std::vector<Vect> out;
    for (auto& co : kernel(M)) {
      Vect v = A.zero();
      for (size_t t = 0; t < P.size(); ++t) axpy(v, co[t], P[t]);
      out.push_back(v);
    }
    return out;
  };
  auto first_root = [&](const Cyc& c) -> std::vector<Cyc> {
    std::vector<Cyc> out;
    for (auto& mu : pm)
      if (mu.pow(l) == c && std::find(out.begin(), out.end(), mu) == out.end()) out.push_back(mu);
    return out;
  };
  Decomposition d;
  d.u = h.u;
  d.z = z;
  auto remaining = [&]() {
    for (auto& P : R)
      if (!P.empty()) return true;
    return false;
  };
  while (remaining()) {
    Vect x;
    Cyc c;
    bool got = false;
    for (auto& P : R) {
      for (auto& ev : eig) {
        auto E = eigvecs(P, ev);
        if (!E.empty()) {
          x = E[0];
          c = ev;
          got = true;
          break;
        }
      }
      if (got) break;
    }
    if (!got) throw MathError("decompose: no eigenvector of ad(u)^l in the remaining space");
    std::vector<Vect> block;
    int tII = -1;
    for (int t = 0; t < l && tII < 0; ++t) {
      Vect y = phin(x, t);
      if (!is_zero(A.bracket(y, phin(y, l - 1)))) tII = t;
    }
    if (tII >= 0) {
      if (l % 2) throw MathError("decompose: non-isotropic orbit for odd l");
      Vect y = phin(x, tII);
      bool done = false;
      for (auto& al : first_root(c)) {
        std::vector<Vect> a;
        Vect cur = y;
        for (int j = 0; j < l; ++j) {
          a.push_back(cur);
          cur = scale(al.inv(), phi(cur));
        }
        Cyc kappa = zc(A.bracket(a[0], a[l - 1]));
        auto sq = try_sqrt(-al / kappa);
        if (!sq) continue;
        for (auto& v : a) v = scale(*sq, v);
        BlockII b{l, al, a};
        std::string why;
        if (!check_block_II(A, h.u, z, b, &why)) throw MathError("decompose: type II block broken: " + why);
        d.b2.push_back(b);
        block = b.a;
        done = true;
        break;
      }
      if (!done) throw MathError("decompose: type II normalization needs a square root outside the field");
    } else {
      Cyc c2 = (l % 2) ? -c : c;
      Vect yy;
      int ty = -1;
      for (auto& P : R) {
        for (auto& e : eigvecs(P, c2)) {
          for (int t = 0; t < l; ++t)
            if (!zc(A.bracket(x, phin(e, t))).is_zero()) {
              yy = e;
              ty = t;
              break;
            }
          if (ty >= 0) break;
        }
        if (ty >= 0) break;
      }
      if (ty < 0) throw MathError("decompose: no partner for a type I orbit");
      auto roots = first_root(c);
      if (roots.empty()) throw MathError("decompose: eigenvalue outside the spectrum");
      Cyc be = roots[0];
      int pidx = l >= 2 ? l - 1 : 1;
      int shift = ((ty - (pidx - 1)) % l + l) % l;
      Vect y1 = phin(yy, shift);
      BlockI b;
      b.l = l;
      b.alpha = be;
      Vect cx = x, cy = y1;
      for (int i = 0; i < l; ++i) {
        b.x.push_back(cx);
        b.y.push_back(cy);
        cx = scale(be.inv(), phi(cx));
        cy = scale(be.inv(), phi(cy));
      }
      Cyc kappa = zc(A.bracket(b.x[0], b.y[pidx - 1]));
      Cyc tau = (l == 1) ? -be : Cyc(K, Q((l - 1) % 2 ? -1 : 1)) * be;
      for (auto& v : b.y) v = scale(tau / kappa, v);
      std::string why;
      if (!check_block_I(A, h.u, z, b, &why)) throw MathError("decompose: type I block broken: " + why);
      d.b1.push_back(b);
      block = b.x;
      block.insert(block.end(), b.y.begin(), b.y.end());
    }
    // continue in the centralizer of the block inside [u', L]
    for (auto& P : R) {
      if (P.empty()) continue;
      Mat M(K, static_cast<int>(block.size()), static_cast<int>(P.size()));
      for (size_t i = 0; i < block.size(); ++i)
        for (size_t t = 0; t < P.size(); ++t) M(static_cast<int>(i), static_cast<int>(t)) = zc(A.bracket(P[t], block[i]));
      std::vector<Vect> np;
      for (auto& co : kernel(M)) {
        Vect v = A.zero();
        for (size_t t = 0; t < P.size(); ++t) axpy(v, co[t], P[t]);
        np.push_back(v);
      }
      P = rref(np).rows;
    }
  }
  d.params.l = l;
  d.params.s = static_cast<int>(d.b1.size());
  d.params.r = static_cast<int>(d.b2.size());
  for (auto& b : d.b1) d.params.betas.push_back(b.alpha);
  for (auto& b : d.b2) d.params.alphas.push_back(b.alpha);
  return d;
}

std::vector<SuperFine> enumerate_fine_super(int k, int m, Ctx ctx) {
  std::vector<SuperFine> out;
  if (m == 0) {
    Grading g = gamma_Hn(k, ctx);
    out.push_back({0, g, universal_group(g).group});
    return out;
  }
  for (int r = 0; 2 * r <= m; ++r) {
    Grading g = gamma_super(k, m, r, ctx);
    out.push_back({r, g, universal_group(g).group});
  }
  return out;
}

}  // namespace hg
