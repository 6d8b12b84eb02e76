#include "hg/color.hpp"

#include <stdexcept>

namespace hg {

Cyc Bicharacter::operator()(const GroupElt& g, const GroupElt& h) const {
  const Ctx& K = values[0][0].ctx();
  Cyc r(K, 1);
  const auto& a = g.coords();
  const auto& b = h.coords();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpz_class e = a[i] * b[j];
      r *= values[i][j].pow(e.get_si());
    }
  }
  return r;
}

Bicharacter make_bicharacter(Group group, std::vector<std::vector<Cyc>> values) {
  int n = group->ncoords();
  if (n == 0) {
    // trivial group: keep a 1x1 table so the field is known
    if (values.size() != 1 || values[0].size() != 1 || !values[0][0].is_one())
      throw std::invalid_argument("bicharacter on the trivial group must be [[1]]");
    return {group, values};
  }
  if (static_cast<int>(values.size()) != n) throw std::invalid_argument("bicharacter: need one row per generator");
  for (auto& row : values)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("bicharacter: need a square table");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (values[i][j].is_zero()) throw std::invalid_argument("bicharacter: zero value");
      if (!(values[i][j] * values[j][i]).is_one())
        throw std::invalid_argument("bicharacter: eps(g,h) eps(h,g) != 1 at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
    }
  for (int i = group->rank; i < n; ++i) {
    long d = group->torsion[i - group->rank].get_si();
    for (int j = 0; j < n; ++j)
      if (!values[i][j].pow(d).is_one())
        throw std::invalid_argument("bicharacter: not well defined on a generator of order " + std::to_string(d));
  }
  return {group, std::move(values)};
}

void validate_color_type(const ColorType& t) {
  if (!t.eps.group->same_as(*t.group)) throw std::invalid_argument("color type: bicharacter on another group");
  auto dim = [&](const GroupElt& g) {
    auto it = t.dims.find(g);
    return it == t.dims.end() ? 0 : it->second;
  };
  for (auto& [g, d] : t.dims)
    if (d < 0) throw std::invalid_argument("color type: negative dimension at " + g.str());
  if (dim(t.g0) < 1) throw std::invalid_argument("color type: the center needs dim V_g0 >= 1");
  for (auto& [g, d] : t.dims) {
    if (d == 0) continue;
    GroupElt p = t.g0 - g;
    int own = d - (g == t.g0 ? 1 : 0);
    int other = dim(p) - (p == t.g0 ? 1 : 0);
    if (p == g) {
      if (g.is_zero()) {
        if (own % 2) throw std::invalid_argument("color type: dim V_0 - 1 must be even when g0 = 0");
      } else if (t.eps(g, g) != Cyc(t.eps(g, g).ctx(), -1)) {
        throw std::invalid_argument("color type: eps(g,g) must be -1 when 2g = g0, g = " + g.str());
      }
    } else if (own != other) {
      throw std::invalid_argument("color type: dim V_" + g.str() + " does not match its partner " + p.str());
    }
  }
}

ColorAlgebra color_algebra(const ColorType& t) {
  validate_color_type(t);
  const Ctx& K = t.eps.values[0][0].ctx();
  std::vector<std::string> labels{"z"};
  std::vector<GroupElt> deg{t.g0};
  struct Pair {
    int a, b;  // b = -1 for an orthonormal vector
  };
  std::vector<Pair> pairs;
  int np = 0, nw = 0;
  for (auto& [g, d] : t.dims) {
    GroupElt p = t.g0 - g;
    int own = d - (g == t.g0 ? 1 : 0);
    if (own == 0) continue;
    if (p == g && !g.is_zero()) {
      for (int i = 0; i < own; ++i) {
        pairs.push_back({static_cast<int>(labels.size()), -1});
        labels.push_back("w" + std::to_string(++nw));
        deg.push_back(g);
      }
    } else if (p == g || g < p) {
      int cnt = p == g ? own / 2 : own;
      for (int i = 0; i < cnt; ++i) {
        ++np;
        int a = static_cast<int>(labels.size());
        labels.push_back("u" + std::to_string(np));
        deg.push_back(g);
        labels.push_back("uh" + std::to_string(np));
        deg.push_back(p);
        pairs.push_back({a, a + 1});
      }
    }
  }
  int n = static_cast<int>(labels.size());
  auto A = std::make_shared<Algebra>(K, labels, std::vector<int>(n, 0));
  A->kind = "color";
  Vect z = A->unit(0);
  for (auto& pr : pairs) {
    if (pr.b < 0) {
      A->set(pr.a, pr.a, z);
      continue;
    }
    A->set(pr.a, pr.b, z);
    A->set(pr.b, pr.a, scale(-t.eps(deg[pr.b], deg[pr.a]), z));
  }
  std::map<GroupElt, std::vector<int>> by;
  for (int i = 0; i < n; ++i) by[deg[i]].push_back(i);
  std::vector<Component> comps;
  for (auto& [g, idx] : by) {
    Component c{g, {}, {}};
    for (int i : idx) {
      c.basis.push_back(A->unit(i));
      c.names.push_back(labels[i]);
    }
    comps.push_back(c);
  }
  ColorAlgebra out;
  out.alg = A;
  out.grading = make_grading(A, t.group, std::move(comps));
  out.type = t;
  out.deg = deg;
  return out;
}

namespace {

// structure constants of A in another basis
Algebra rebase(const Algebra& A, const std::vector<Vect>& basis) {
  auto Binv = inverse(Mat::from_columns(basis));
  if (!Binv) throw MathError("homogeneous vectors do not form a basis");
  std::vector<std::string> labels;
  for (size_t i = 0; i < basis.size(); ++i) labels.push_back("b" + std::to_string(i + 1));
  Algebra R(A.ctx, labels, std::vector<int>(basis.size(), 0));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      Vect w = A.bracket(basis[i], basis[j]);
      if (!is_zero(w)) R.set(static_cast<int>(i), static_cast<int>(j), *Binv * w);
    }
  return R;
}

}  // namespace

AxiomReport verify_color_axioms(const Grading& G, const Bicharacter& eps) {
  std::vector<Vect> basis;
  std::vector<GroupElt> deg;
  for (auto& c : G.comps)
    for (auto& v : c.basis) {
      basis.push_back(v);
      deg.push_back(c.deg);
    }
  Algebra R = rebase(*G.alg, basis);
  return verify_axioms(R, [&](int i, int j) { return eps(deg[i], deg[j]); });
}

std::optional<Grading> is_super_realizable(const ColorAlgebra& C) {
  const auto& t = C.type;
  const Ctx& K = C.alg->ctx;
  Cyc one(K, 1), mone(K, -1);
  std::vector<Vect> ev, od;
  for (auto& c : C.grading.comps) {
    Cyc v = t.eps(c.deg, t.g0 - c.deg);
    if (v != one && v != mone) return std::nullopt;
    auto& dst = v == one ? ev : od;
    dst.insert(dst.end(), c.basis.begin(), c.basis.end());
  }
  Group Z2 = make_group(0, {2});
  std::vector<Component> comps;
  if (!ev.empty()) comps.push_back({GroupElt(Z2, {0}), ev, {}});
  if (!od.empty()) comps.push_back({GroupElt(Z2, {1}), od, {}});
  Grading S = make_grading(C.alg, Z2, std::move(comps));
  auto rep = verify_grading(S);
  if (!rep.ok) throw MathError("super split is not a grading: " + rep.detail);
  return S;
}

namespace {

struct NeedsConductor : MathError {
  long cond;
  NeedsConductor(long c, const std::string& w) : MathError(w), cond(c) {}
};

// sqrt(x) for rational x lives in Q(zeta_{4s}), s the squarefree part of |num*den|
[[noreturn]] void no_sqrt(const Cyc& x) {
  std::string what = "classify_color: normalizing needs sqrt(" + x.str() + ") outside the field";
  if (!x.is_rational()) throw MathError(what);
  Q r = x.rational();
  Z a = abs(r.get_num() * r.get_den());
  Z s = 1;
  for (Z p = 2; p * p <= a; ++p) {
    int e = 0;
    while (a % p == 0) {
      a /= p;
      ++e;
    }
    if (e % 2) s *= p;
  }
  s *= a;
  throw NeedsConductor(4 * s.get_si(), what);
}

Vect embed_vec(const Vect& v, const Ctx& K) {
  Vect w;
  for (auto& c : v) w.push_back(embed(c, K));
  return w;
}

ColorClassification classify_impl(const Grading& G, const Bicharacter& eps);

}  // namespace

ColorClassification classify_color(const Grading& G, const Bicharacter& eps) {
  try {
    return classify_impl(G, eps);
  } catch (const NeedsConductor& e) {
    const Algebra& A = *G.alg;
    Ctx K = ctx_new(static_cast<int>(lcm_l(A.ctx->N(), e.cond)));
    auto B = std::make_shared<Algebra>(K, A.labels, A.parity);
    B->kind = A.kind;
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < A.dim; ++j)
        if (!A.table[i][j].empty()) B->set(i, j, embed_vec(A.basis_bracket(i, j), K));
    Grading H = G;
    H.alg = B;
    for (auto& c : H.comps)
      for (auto& v : c.basis) v = embed_vec(v, K);
    auto vals = eps.values;
    for (auto& row : vals)
      for (auto& x : row) x = embed(x, K);
    return classify_impl(H, make_bicharacter(eps.group, vals));
  }
}

namespace {

ColorClassification classify_impl(const Grading& G, const Bicharacter& eps) {
  const Algebra& A = *G.alg;
  const Ctx& K = A.ctx;
  auto gr = verify_grading(G);
  if (!gr.ok) throw MathError("classify_color: not a grading (" + gr.detail + ")");
  auto ax = verify_color_axioms(G, eps);
  if (!ax.ok) throw MathError("classify_color: color axioms fail (" + ax.detail + ")");
  auto Zc = center(A);
  if (Zc.size() != 1) throw MathError("classify_color: center is not one-dimensional");
  if (!same_span(derived(A), Zc)) throw MathError("classify_color: [L,L] is not the center");
  Vect z = Zc[0];
  int zc = -1;
  for (size_t c = 0; c < G.comps.size(); ++c)
    if (in_span(G.comps[c].basis, z)) zc = static_cast<int>(c);
  if (zc < 0) throw MathError("classify_color: center is not homogeneous");
  GroupElt g0 = G.comps[zc].deg;
  int p = 0;
  while (z[p].is_zero()) ++p;
  auto B = [&](const Vect& x, const Vect& y) { return A.bracket(x, y)[p] / z[p]; };

  int nc = static_cast<int>(G.comps.size());
  std::vector<std::vector<Vect>> W(nc);
  for (int c = 0; c < nc; ++c) {
    if (c != zc) {
      W[c] = G.comps[c].basis;
      continue;
    }
    std::vector<Vect> r;
    for (auto& v : G.comps[c].basis) {
      Vect w = v;
      axpy(w, -(v[p] / z[p]), z);
      r.push_back(w);
    }
    W[c] = rref(r).rows;
  }
  ColorClassification out;
  out.basis.push_back(z);
  out.names.push_back("z");
  out.comp.push_back(zc);
  // role: 0 z, 1 u, 2 uh, 3 w; partner index in out.basis
  std::vector<int> role{0}, mate{-1};
  auto push = [&](const Vect& v, const std::string& name, int c, int r, int m) {
    out.basis.push_back(v);
    out.names.push_back(name);
    out.comp.push_back(c);
    role.push_back(r);
    mate.push_back(m);
  };
  int np = 0, nw = 0;
  for (int c = 0; c < nc; ++c) {
    if (W[c].empty()) continue;
    GroupElt g = G.comps[c].deg;
    int q = G.find(g0 - g);
    if (q < 0 || W[q].empty()) throw MathError("classify_color: component " + g.str() + " has no partner");
    if (q == c) {
      int d = static_cast<int>(W[c].size());
      Mat M(K, d, d);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) M(a, b) = B(W[c][a], W[c][b]);
      std::vector<Vect> units;
      for (int a = 0; a < d; ++a) units.push_back(unit_vec(K, d, a));
      auto lift = [&](const Vect& co) {
        Vect v = A.zero();
        for (int a = 0; a < d; ++a) axpy(v, co[a], W[c][a]);
        return v;
      };
      if (eps(g, g).is_one()) {
        auto sb = homogeneous_symplectic_basis({{units}, M, FormKind::Alternating});
        for (size_t i = 0; i < sb.u.size(); ++i) {
          ++np;
          int at = static_cast<int>(out.basis.size());
          push(lift(sb.u[i]), "u" + std::to_string(np), c, 1, at + 1);
          push(lift(sb.up[i]), "uh" + std::to_string(np), c, 2, at);
        }
      } else {
        auto ob = homogeneous_orthogonal_basis({{units}, M, FormKind::Symmetric});
        for (auto& co : ob.z) {
          Vect v = lift(co);
          auto s = try_sqrt(B(v, v));
          if (!s) no_sqrt(B(v, v));
          int at = static_cast<int>(out.basis.size());
          push(scale(s->inv(), v), "w" + std::to_string(++nw), c, 3, at);
        }
      }
    } else if (c < q) {
      const auto& E = W[c];
      const auto& F = W[q];
      int d = static_cast<int>(E.size());
      if (static_cast<int>(F.size()) != d) throw MathError("classify_color: paired components differ in dimension");
      Mat P(K, d, d);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) P(a, b) = B(E[a], F[b]);
      auto Pi = inverse(P);
      if (!Pi) throw MathError("classify_color: degenerate pairing between " + g.str() + " and " + (g0 - g).str());
      for (int a = 0; a < d; ++a) {
        Vect f = A.zero();
        for (int b = 0; b < d; ++b) axpy(f, (*Pi)(b, a), F[b]);
        ++np;
        int at = static_cast<int>(out.basis.size());
        push(E[a], "u" + std::to_string(np), c, 1, at + 1);
        push(f, "uh" + std::to_string(np), q, 2, at);
      }
    }
  }
  if (rank_of(out.basis) != A.dim) throw MathError("classify_color: standard basis is incomplete");
  // products must match the standard tables
  int n = static_cast<int>(out.basis.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vect want = A.zero();
      if (mate[a] == b && role[a] == 1) want = z;
      if (mate[a] == b && role[a] == 3) want = z;
      if (mate[a] == b && role[a] == 2)
        want = scale(-eps(G.comps[out.comp[a]].deg, G.comps[out.comp[b]].deg), z);
      if (A.bracket(out.basis[a], out.basis[b]) != want)
        throw MathError("classify_color: product [" + out.names[a] + "," + out.names[b] + "] is not standard");
    }
  out.type.group = G.group;
  out.type.g0 = g0;
  out.type.eps = eps;
  for (auto& c : G.comps) out.type.dims[c.deg] = static_cast<int>(c.basis.size());
  // does the support generate the group?
  const AbGroup& Gr = *G.group;
  AbPresentation P;
  P.n_gens = Gr.ncoords();
  for (auto& c : G.comps) P.relations.push_back(c.deg.coords());
  for (size_t i = 0; i < Gr.torsion.size(); ++i) {
    IntVec row(P.n_gens, 0);
    row[Gr.rank + i] = Gr.torsion[i];
    P.relations.push_back(row);
  }
  out.support_generates = P.n_gens == 0 || canonicalize(P)->is_trivial();
  return out;
}

}  // namespace

}  // namespace hg
