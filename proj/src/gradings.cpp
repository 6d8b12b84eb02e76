#include "hg/gradings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hg {

int Grading::find(const GroupElt& g) const {
  for (size_t i = 0; i < comps.size(); ++i)
    if (comps[i].deg == g) return static_cast<int>(i);
  return -1;
}

int Grading::total_dim() const {
  int d = 0;
  for (auto& c : comps) d += static_cast<int>(c.basis.size());
  return d;
}

bool Grading::one_dimensional() const {
  for (auto& c : comps)
    if (c.basis.size() != 1) return false;
  return true;
}

std::vector<Vect> Grading::homogeneous_basis() const {
  std::vector<Vect> out;
  for (auto& c : comps) out.insert(out.end(), c.basis.begin(), c.basis.end());
  return out;
}

void Grading::sort_components() {
  std::stable_sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) { return a.deg < b.deg; });
}

Grading make_grading(AlgPtr alg, Group group, std::vector<Component> comps) {
  if (!alg || !group) throw std::invalid_argument("make_grading: null algebra or group");
  for (auto& c : comps) {
    if (c.deg.group() != group) throw std::invalid_argument("make_grading: degree in a different group");
    for (auto& v : c.basis)
      if (static_cast<int>(v.size()) != alg->dim) throw std::invalid_argument("make_grading: vector length mismatch");
  }
  return Grading{std::move(alg), std::move(group), std::move(comps)};
}

namespace {

std::string deg_str(const Grading& G, int i) { return G.comps[i].deg.str(); }

// nonzero [L_i, L_j] pairs with the target component (-1 if absent)
struct BracketPair {
  int i, j, t;
};

}  // namespace

GradingReport verify_grading(const Grading& G) {
  GradingReport r;
  const Algebra& A = *G.alg;
  int m = static_cast<int>(G.comps.size());
  auto fail = [&](std::string kind, std::vector<int> comps, std::vector<Vect> w, std::string detail) {
    r.ok = false;
    r.failure = std::move(kind);
    r.comps = std::move(comps);
    r.witness = std::move(w);
    r.detail = std::move(detail);
    return r;
  };
  for (int i = 0; i < m; ++i) {
    if (G.comps[i].basis.empty()) return fail("empty", {i}, {}, "component of degree " + deg_str(G, i) + " is empty");
    for (int j = 0; j < i; ++j)
      if (G.comps[i].deg == G.comps[j].deg)
        return fail("duplicate", {j, i}, {}, "degree " + deg_str(G, i) + " appears twice");
  }
  for (int i = 0; i < m; ++i) {
    auto& B = G.comps[i].basis;
    if (rank_of(B) != static_cast<int>(B.size()))
      return fail("dependent", {i}, B, "basis of the component of degree " + deg_str(G, i) + " is dependent");
    for (auto& v : B) {
      int p = -1;
      for (int k = 0; k < A.dim; ++k) {
        if (v[k].is_zero()) continue;
        if (p < 0) p = A.parity[k];
        else if (p != A.parity[k])
          return fail("parity", {i}, {v}, "vector " + vec_str(v) + " of degree " + deg_str(G, i) + " mixes parities");
      }
    }
  }
  auto all = G.homogeneous_basis();
  int rk = rank_of(all);
  if (rk != static_cast<int>(all.size()))
    return fail("dependent", {}, {}, "components are not independent");
  if (rk != A.dim)
    return fail("span", {}, {}, "components span " + std::to_string(rk) + " of " + std::to_string(A.dim) + " dimensions");
  std::vector<std::vector<Vect>> ech(m);
  for (int i = 0; i < m; ++i) ech[i] = rref(G.comps[i].basis).rows;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int t = G.find(G.comps[i].deg + G.comps[j].deg);
      for (auto& x : G.comps[i].basis)
        for (auto& y : G.comps[j].basis) {
          Vect b = A.bracket(x, y);
          if (is_zero(b)) continue;
          if (t < 0 || !in_span(ech[t], b))
            return fail("bracket", {i, j}, {x, y, b},
                        "[" + vec_str(x) + ", " + vec_str(y) + "] = " + vec_str(b) + " is not of degree " +
                            (G.comps[i].deg + G.comps[j].deg).str());
        }
    }
  return r;
}

static std::vector<BracketPair> bracket_pairs(const Grading& G) {
  const Algebra& A = *G.alg;
  int m = static_cast<int>(G.comps.size());
  std::vector<BracketPair> out;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool nz = false;
      for (auto& x : G.comps[i].basis) {
        for (auto& y : G.comps[j].basis)
          if (!is_zero(A.bracket(x, y))) {
            nz = true;
            break;
          }
        if (nz) break;
      }
      if (nz) out.push_back({i, j, G.find(G.comps[i].deg + G.comps[j].deg)});
    }
  return out;
}

UniversalResult universal_group(const Grading& G) {
  auto rep = verify_grading(G);
  if (!rep.ok) throw MathError("universal_group: not a grading (" + rep.detail + ")");
  int m = static_cast<int>(G.comps.size());
  AbPresentation P;
  P.n_gens = m;
  std::set<IntVec> seen;
  for (auto& bp : bracket_pairs(G)) {
    IntVec row(m, 0);
    row[bp.i] += 1;
    row[bp.j] += 1;
    row[bp.t] -= 1;
    if (seen.insert(row).second) P.relations.push_back(row);
  }
  Group U = canonicalize(P);
  std::vector<Component> comps;
  for (int i = 0; i < m; ++i) comps.push_back({GroupElt::gen(U, i), G.comps[i].basis, G.comps[i].names});
  return {U, make_grading(G.alg, U, std::move(comps)), P};
}

bool is_toral_fine(const Grading& G) { return universal_group(G).group->is_torsion_free(); }

Grading coarsen(const Grading& G, const Group& target, const std::vector<GroupElt>& images) {
  if (images.size() != G.comps.size()) throw std::invalid_argument("coarsen: one image per component required");
  for (auto& g : images)
    if (g.group() != target) throw std::invalid_argument("coarsen: image outside the target group");
  for (auto& bp : bracket_pairs(G))
    if (images[bp.i] + images[bp.j] != images[bp.t])
      throw MathError("coarsen: images do not respect the relation deg " + deg_str(G, bp.i) + " + deg " +
                      deg_str(G, bp.j) + " = deg " + deg_str(G, bp.t));
  std::vector<Component> out;
  for (size_t i = 0; i < G.comps.size(); ++i) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Component& c) { return c.deg == images[i]; });
    if (it == out.end()) {
      out.push_back({images[i], G.comps[i].basis, G.comps[i].names});
    } else {
      it->basis.insert(it->basis.end(), G.comps[i].basis.begin(), G.comps[i].basis.end());
      it->names.insert(it->names.end(), G.comps[i].names.begin(), G.comps[i].names.end());
    }
  }
  return make_grading(G.alg, target, std::move(out));
}

Grading transport(const Grading& G, const Mat& f) {
  Grading H = G;
  for (auto& c : H.comps)
    for (auto& v : c.basis) v = f * v;
  return H;
}

Cyc form_eval(const Mat& B, const Vect& x, const Vect& y) {
  Cyc s(B.ctx(), Q(0));
  for (int i = 0; i < B.rows; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < B.cols; ++j)
      if (!y[j].is_zero() && !B(i, j).is_zero()) s += x[i] * B(i, j) * y[j];
  }
  return s;
}

std::vector<int> pairing_partners(const PairedDecomposition& d) {
  const Mat& B = d.form;
  int n = B.rows;
  if (B.cols != n) throw std::invalid_argument("form must be square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cyc want = d.kind == FormKind::Alternating ? -B(j, i) : B(j, i);
      if (B(i, j) != want) throw MathError("form is not " + std::string(d.kind == FormKind::Alternating ? "alternating" : "symmetric"));
    }
  if (d.kind == FormKind::Alternating)
    for (int i = 0; i < n; ++i)
      if (!B(i, i).is_zero()) throw MathError("form is not alternating");
  std::vector<Vect> all;
  for (auto& s : d.spaces) all.insert(all.end(), s.begin(), s.end());
  if (rank_of(all) != static_cast<int>(all.size()) || static_cast<int>(all.size()) != n)
    throw MathError("spaces do not form a direct sum decomposition");
  std::vector<Vect> rows;
  for (int i = 0; i < n; ++i) rows.push_back(B.row(i));
  if (rank_of(rows) != n) throw MathError("degenerate form");
  int s = static_cast<int>(d.spaces.size());
  std::vector<int> partner(s, -1);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      bool nz = false;
      for (auto& x : d.spaces[i])
        for (auto& y : d.spaces[j])
          if (!form_eval(B, x, y).is_zero()) nz = true;
      if (!nz) continue;
      if (partner[i] >= 0 && partner[i] != j)
        throw MathError("pairing condition violated: space " + std::to_string(i) + " pairs with spaces " +
                        std::to_string(partner[i]) + " and " + std::to_string(j));
      partner[i] = j;
    }
  for (int i = 0; i < s; ++i)
    if (partner[i] < 0) throw MathError("degenerate form on space " + std::to_string(i));
  return partner;
}

namespace {

// e_a paired with f_b, <e_a, f_b> = delta_ab
std::vector<Vect> dual_basis(const Mat& B, const std::vector<Vect>& E, const std::vector<Vect>& F) {
  int q = static_cast<int>(E.size());
  if (static_cast<int>(F.size()) != q) throw MathError("paired spaces of different dimensions");
  Mat P(B.ctx(), q, q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) P(a, b) = form_eval(B, E[a], F[b]);
  auto Pi = inverse(P);
  if (!Pi) throw MathError("degenerate pairing between spaces");
  std::vector<Vect> out;
  for (int b = 0; b < q; ++b) {
    Vect f = zero_vec(B.ctx(), B.rows);
    for (int c = 0; c < q; ++c) axpy(f, (*Pi)(c, b), F[c]);
    out.push_back(f);
  }
  return out;
}

}  // namespace

SymplecticBasis homogeneous_symplectic_basis(const PairedDecomposition& d) {
  if (d.kind != FormKind::Alternating) throw std::invalid_argument("symplectic basis needs an alternating form");
  auto partner = pairing_partners(d);
  const Mat& B = d.form;
  SymplecticBasis out;
  int s = static_cast<int>(d.spaces.size());
  for (int i = 0; i < s; ++i) {
    int j = partner[i];
    if (j == i) {
      std::vector<Vect> W = d.spaces[i];
      while (!W.empty()) {
        Vect u = W.front();
        W.erase(W.begin());
        auto it = std::find_if(W.begin(), W.end(), [&](const Vect& w) { return !form_eval(B, u, w).is_zero(); });
        if (it == W.end()) throw MathError("degenerate form on space " + std::to_string(i));
        Vect up = scale(form_eval(B, u, *it).inv(), *it);
        W.erase(it);
        for (auto& w : W) {
          Cyc a = form_eval(B, w, up), b = form_eval(B, u, w);
          axpy(w, -a, u);
          axpy(w, -b, up);
        }
        out.u.push_back(u);
        out.up.push_back(up);
        out.comp_u.push_back(i);
        out.comp_up.push_back(i);
      }
    } else if (i < j) {
      auto F = dual_basis(B, d.spaces[i], d.spaces[j]);
      for (size_t a = 0; a < F.size(); ++a) {
        out.u.push_back(d.spaces[i][a]);
        out.up.push_back(F[a]);
        out.comp_u.push_back(i);
        out.comp_up.push_back(j);
      }
    }
  }
  return out;
}

OrthogonalBasis homogeneous_orthogonal_basis(const PairedDecomposition& d) {
  if (d.kind != FormKind::Symmetric) throw std::invalid_argument("orthogonal basis needs a symmetric form");
  auto partner = pairing_partners(d);
  const Mat& B = d.form;
  OrthogonalBasis out;
  int s = static_cast<int>(d.spaces.size());
  for (int i = 0; i < s; ++i) {
    int j = partner[i];
    if (j == i) {
      std::vector<Vect> W = d.spaces[i];
      while (!W.empty()) {
        auto it = std::find_if(W.begin(), W.end(), [&](const Vect& w) { return !form_eval(B, w, w).is_zero(); });
        if (it == W.end()) {
          // isotropic basis: w_a + w_b is anisotropic when <w_a, w_b> != 0
          bool done = false;
          for (size_t a = 0; a < W.size() && !done; ++a)
            for (size_t b = a + 1; b < W.size() && !done; ++b)
              if (!form_eval(B, W[a], W[b]).is_zero()) {
                W[a] = add(W[a], W[b]);
                it = W.begin() + static_cast<long>(a);
                done = true;
              }
          if (!done) throw MathError("degenerate form on space " + std::to_string(i));
        }
        Vect z = *it;
        W.erase(it);
        Cyc nz = form_eval(B, z, z).inv();
        for (auto& w : W) axpy(w, -(form_eval(B, w, z) * nz), z);
        out.z.push_back(z);
        out.comp_z.push_back(i);
      }
    } else if (i < j) {
      auto F = dual_basis(B, d.spaces[i], d.spaces[j]);
      for (size_t a = 0; a < F.size(); ++a) {
        out.u.push_back(d.spaces[i][a]);
        out.v.push_back(F[a]);
        out.comp_u.push_back(i);
        out.comp_v.push_back(j);
      }
    }
  }
  return out;
}

DarbouxBasis darboux_homogeneous_basis(const Grading& G) {
  const Algebra& A = *G.alg;
  auto rep = verify_grading(G);
  if (!rep.ok) throw MathError("darboux: not a grading (" + rep.detail + ")");
  auto Zc = center(A);
  if (Zc.size() != 1) throw MathError("darboux: center is not one-dimensional");
  const Vect z = Zc[0];
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      Vect b = A.basis_bracket(i, j);
      if (!in_span({z}, b)) throw MathError("darboux: derived algebra is not the center");
    }
  int p = 0;
  while (z[p].is_zero()) ++p;
  Cyc zp_inv = z[p].inv();
  int n = A.dim;
  auto proj = [&](const Vect& x) {
    Vect y = x;
    axpy(y, -(x[p] * zp_inv), z);
    Vect r;
    for (int k = 0; k < n; ++k)
      if (k != p) r.push_back(y[k]);
    return r;
  };
  auto lift_unit = [&](int k) { return A.unit(k < p ? k : k + 1); };
  Mat B(A.ctx, n - 1, n - 1);
  for (int a = 0; a < n - 1; ++a)
    for (int b = 0; b < n - 1; ++b) B(a, b) = A.bracket(lift_unit(a), lift_unit(b))[p] * zp_inv;

  int zc = -1;
  for (size_t i = 0; i < G.comps.size(); ++i)
    if (in_span(G.comps[i].basis, z)) zc = static_cast<int>(i);
  if (zc < 0) throw MathError("darboux: center is not homogeneous");

  PairedDecomposition d;
  d.form = B;
  d.kind = FormKind::Alternating;
  std::vector<int> which;
  std::vector<std::vector<Vect>> projected;
  for (size_t i = 0; i < G.comps.size(); ++i) {
    std::vector<Vect> pr;
    for (auto& v : G.comps[i].basis) pr.push_back(proj(v));
    projected.push_back(pr);
    auto e = rref(pr).rows;
    if (e.empty()) continue;
    d.spaces.push_back(e);
    which.push_back(static_cast<int>(i));
  }
  SymplecticBasis sb = homogeneous_symplectic_basis(d);
  auto lift = [&](const Vect& v, int space) {
    int c = which[space];
    auto coef = express(projected[c], v);
    if (!coef) throw MathError("darboux: lift failed");
    Vect x = zero_vec(A.ctx, n);
    for (size_t t = 0; t < coef->size(); ++t) axpy(x, (*coef)[t], G.comps[c].basis[t]);
    if (c == zc) axpy(x, -(x[p] * zp_inv), z);
    return x;
  };
  DarbouxBasis out;
  out.z = z;
  out.comp_z_u = {zc};
  for (size_t a = 0; a < sb.u.size(); ++a) {
    out.u.push_back(lift(sb.u[a], sb.comp_u[a]));
    out.up.push_back(lift(sb.up[a], sb.comp_up[a]));
    out.comp_u.push_back(which[sb.comp_u[a]]);
    out.comp_up.push_back(which[sb.comp_up[a]]);
  }
  return out;
}

}  // namespace hg
