#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "hg/io.hpp"
#include "hg/weyl.hpp"

namespace hg {

namespace {

struct Opts {
  std::string twisted, params, super_km, input, format = "text";
  int heisenberg = 0, r = -1, cap = 12;
  long conductor = 0;
  long seed = -1;
  bool fine = false, brute = false;
};

struct ValidationFailure : std::runtime_error {
  Json report;
  ValidationFailure(const std::string& w, Json r) : std::runtime_error(w), report(std::move(r)) {}
};

// "c1*e1 + c2*eh1"
std::string lin(const Algebra& A, const Vect& v) {
  std::string s;
  for (int i = 0; i < A.dim; ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].str();
    bool neg = c[0] == '-' && c.find_first_of("+-", 1) == std::string::npos;
    if (neg) c = c.substr(1);
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    if (c == "1") s += A.labels[i];
    else if (c.find_first_of("+-", 1) != std::string::npos) s += "(" + c + ")*" + A.labels[i];
    else s += c + "*" + A.labels[i];
  }
  return s.empty() ? "0" : s;
}

std::string list_text(const std::vector<Cyc>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

Json deg_json(const GroupElt& g) {
  Json d = Json::array();
  for (auto& x : g.coords()) d.push_back(x.get_si());
  return d;
}

std::vector<std::string> comp_names(const Grading& G) {
  std::vector<std::string> out;
  for (auto& c : G.comps) {
    if (c.names.size() == 1) out.push_back(c.names[0]);
    else out.push_back(c.deg.str());
  }
  return out;
}

struct Source {
  Grading G;
  std::optional<FineTwisted> F;
  std::vector<Cyc> lambda;
  std::string what;
  int k = -1, m = -1, r = -1;
};

std::optional<long> cond(const Opts& o) {
  if (o.conductor) return o.conductor;
  return std::nullopt;
}

std::vector<Cyc> lambda_of_opts(const Opts& o) {
  Ctx K = twisted_context(o.twisted, cond(o));
  return parse_scalar_list(o.twisted, K);
}

std::pair<int, int> super_km(const Opts& o) {
  auto p = split_top(o.super_km, ',');
  if (p.size() != 2) throw ParseError("--super expects k,m");
  try {
    return {std::stoi(p[0]), std::stoi(p[1])};
  } catch (const std::exception&) {
    throw ParseError("--super expects two integers");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Grading scramble(const Grading& G, long seed) {
  std::mt19937_64 rng(static_cast<uint64_t>(seed));
  return transport(G, random_automorphism(*G.alg, rng));
}

Source load(const Opts& o) {
  Source s;
  int given = !o.input.empty() + !o.twisted.empty() + (o.heisenberg > 0) + !o.super_km.empty();
  if (given != 1) throw ParseError("give exactly one of --input, --twisted, --heisenberg, --super");
  if (!o.input.empty()) {
    s.G = grading_from_json(read_json_file(o.input));
    s.what = "input " + o.input;
    if (s.G.alg->kind == "twisted") s.lambda = lambda_of(*s.G.alg);
  } else if (o.heisenberg > 0) {
    s.k = o.heisenberg;
    s.G = gamma_Hn(s.k, o.conductor ? ctx_new(static_cast<int>(o.conductor)) : nullptr);
    s.what = "fine grading of H_" + std::to_string(2 * s.k + 1);
  } else if (!o.super_km.empty()) {
    auto [k, m] = super_km(o);
    s.k = k;
    s.m = m;
    s.r = o.r < 0 ? 0 : o.r;
    Ctx K = o.conductor ? ctx_new(static_cast<int>(o.conductor)) : nullptr;
    s.G = m == 0 ? gamma_Hn(k, K) : gamma_super(k, m, s.r, K);
    s.what = "fine grading r=" + std::to_string(s.r) + " of the superalgebra (k,m)=(" + std::to_string(k) + "," +
             std::to_string(m) + ")";
  } else {
    s.lambda = lambda_of_opts(o);
    if (o.params.empty()) throw ParseError("--twisted needs --params for this command");
    auto p = parse_params(o.params, s.lambda[0].ctx());
    s.F = fine_twisted(s.lambda, p);
    s.G = s.F->grading;
    s.what = "fine grading " + p.str() + " of the twisted algebra " + list_text(s.lambda);
  }
  if (o.seed >= 0) {
    s.G = scramble(s.G, o.seed);
    s.what += ", transported by the random automorphism of seed " + std::to_string(o.seed);
  }
  return s;
}

bool is_json(const Opts& o) { return o.format == "json"; }

// ---- verify

int cmd_verify(const Opts& o, std::ostream& out) {
  Source s = load(o);
  const Algebra& A = *s.G.alg;
  auto ax = verify_axioms(A);
  auto gr = verify_grading(s.G);
  Json j;
  j["command"] = "verify";
  j["source"] = s.what;
  j["algebra"] = A.kind;
  j["dim"] = A.dim;
  j["group"] = s.G.group->str();
  j["components"] = s.G.comps.size();
  j["axioms"] = ax.ok ? Json("ok") : Json({{"failure", ax.failure}, {"detail", ax.detail}});
  if (gr.ok) {
    j["grading"] = "ok";
  } else {
    Json w = Json::array();
    for (auto& v : gr.witness) w.push_back(vect_json(A, v));
    j["grading"] = {{"failure", gr.failure}, {"components", gr.comps}, {"detail", gr.detail}, {"witness", w}};
  }
  bool ok = ax.ok && gr.ok;
  j["ok"] = ok;
  if (is_json(o)) {
    out << j.dump(2) << "\n";
  } else {
    out << "source: " << s.what << "\n";
    out << "algebra: " << A.kind << ", dim " << A.dim << "\n";
    out << "group: " << s.G.group->str() << "\n";
    out << "components: " << s.G.comps.size() << "\n";
    out << "axioms: " << (ax.ok ? "ok" : "FAIL (" + ax.failure + ") " + ax.detail) << "\n";
    if (gr.ok) {
      out << "grading: ok\n";
    } else {
      out << "grading: FAIL (" << gr.failure << ") " << gr.detail << "\n";
      if (gr.failure == "bracket" && gr.witness.size() == 3)
        out << "witness: [" << lin(A, gr.witness[0]) << ", " << lin(A, gr.witness[1]) << "] = " << lin(A, gr.witness[2])
            << "\n";
    }
  }
  return ok ? 0 : 3;
}

// ---- universal-group

Json universal_json(const Grading& G, const UniversalResult& U) {
  Json j;
  j["group"] = U.group->str();
  j["toral"] = is_toral_fine(G);
  Json comps = Json::array();
  for (size_t c = 0; c < G.comps.size(); ++c) {
    Json cj;
    cj["degree"] = deg_json(U.grading.comps[c].deg);
    cj["dim"] = G.comps[c].basis.size();
    if (!G.comps[c].names.empty()) cj["names"] = G.comps[c].names;
    comps.push_back(cj);
  }
  j["components"] = comps;
  return j;
}

int cmd_universal(const Opts& o, std::ostream& out) {
  Source s = load(o);
  auto gr = verify_grading(s.G);
  if (!gr.ok) throw ValidationFailure("not a grading: " + gr.detail, {{"failure", gr.failure}, {"detail", gr.detail}});
  auto U = universal_group(s.G);
  Json j = universal_json(s.G, U);
  if (s.F) {
    j["params"] = params_json(s.F->params);
    j["predicted"] = predicted_universal_group(s.F->params)->str();
  }
  if (is_json(o)) {
    Json r;
    r["command"] = "universal-group";
    r["source"] = s.what;
    r.update(j);
    out << r.dump(2) << "\n";
    return 0;
  }
  out << "source: " << s.what << "\n";
  out << "universal group: " << U.group->str() << "\n";
  if (s.F) out << "predicted: " << j["predicted"].get<std::string>() << "\n";
  out << "toral: " << (j["toral"].get<bool>() ? "yes" : "no") << "\n";
  auto names = comp_names(s.G);
  for (size_t c = 0; c < s.G.comps.size(); ++c)
    out << "  " << std::left << std::setw(8) << names[c] << " " << U.grading.comps[c].deg.str() << "\n";
  return 0;
}

// ---- enumerate-fine

Json fine_class_json(const FineTwisted& F) {
  auto U = universal_group(F.grading);
  Json j;
  j["params"] = params_json(F.params);
  j["group"] = U.group->str();
  j["predicted"] = predicted_universal_group(F.params)->str();
  j["toral"] = is_toral_fine(F.grading);
  Json blocks = Json::array();
  const Algebra& A = *F.grading.alg;
  for (auto& b : F.b1) {
    Json x = Json::array(), y = Json::array();
    for (auto& v : b.x) x.push_back(vect_json(A, v));
    for (auto& v : b.y) y.push_back(vect_json(A, v));
    blocks.push_back({{"type", "I"}, {"l", b.l}, {"alpha", b.alpha.str()}, {"x", x}, {"y", y}});
  }
  for (auto& b : F.b2) {
    Json a = Json::array();
    for (auto& v : b.a) a.push_back(vect_json(A, v));
    blocks.push_back({{"type", "II"}, {"n", b.n}, {"alpha", b.alpha.str()}, {"a", a}});
  }
  j["u"] = vect_json(A, F.u);
  j["z"] = vect_json(A, F.z);
  j["blocks"] = blocks;
  j["grading"] = grading_json(F.grading);
  return j;
}

int enumerate_twisted(const Opts& o, std::ostream& out) {
  auto lambda = lambda_of_opts(o);
  auto E = enumerate_fine_twisted(lambda);
  std::vector<FineTwisted> classes;
  for (auto& p : E.classes) classes.push_back(fine_twisted(lambda, p));
  std::vector<int> type_class;
  for (auto& p : E.param_types) {
    int c = -1;
    for (size_t i = 0; i < E.classes.size() && c < 0; ++i)
      if (equivalent_fine(lambda, p, E.classes[i])) c = static_cast<int>(i);
    type_class.push_back(c);
  }
  if (is_json(o)) {
    Json j;
    j["command"] = "enumerate-fine";
    Json l = Json::array();
    for (auto& x : lambda) l.push_back(x.str());
    j["lambda"] = l;
    j["conductor"] = lambda[0].N();
    j["rejected_l"] = E.rejected_l;
    Json cs = Json::array();
    for (auto& F : classes) cs.push_back(fine_class_json(F));
    j["classes"] = cs;
    Json ts = Json::array();
    for (size_t t = 0; t < E.param_types.size(); ++t)
      ts.push_back({{"params", params_json(E.param_types[t])}, {"class", type_class[t] + 1}});
    j["param_types"] = ts;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "lambda: " << list_text(lambda) << "\n";
  out << "conductor: " << lambda[0].N() << "\n";
  out << "rejected l:";
  for (int l : E.rejected_l) out << " " << l;
  out << (E.rejected_l.empty() ? " none\n" : "\n");
  out << "classes: " << classes.size() << "\n";
  for (size_t i = 0; i < classes.size(); ++i) {
    auto U = universal_group(classes[i].grading);
    out << "  " << i + 1 << ". " << std::left << std::setw(30) << classes[i].params.str() << " " << U.group->str()
        << (is_toral_fine(classes[i].grading) ? "  toral" : "") << "\n";
  }
  out << "parameter types: " << E.param_types.size() << "\n";
  for (size_t t = 0; t < E.param_types.size(); ++t)
    out << "  " << std::left << std::setw(30) << E.param_types[t].str() << " class " << type_class[t] + 1 << "\n";
  return 0;
}

int enumerate_super(const Opts& o, std::ostream& out) {
  auto [k, m] = super_km(o);
  auto list = enumerate_fine_super(k, m, o.conductor ? ctx_new(static_cast<int>(o.conductor)) : nullptr);
  if (is_json(o)) {
    Json j;
    j["command"] = "enumerate-fine";
    j["super"] = {k, m};
    Json cs = Json::array();
    for (auto& f : list)
      cs.push_back({{"r", f.r}, {"group", f.universal->str()}, {"toral", is_toral_fine(f.grading)},
                    {"grading", grading_json(f.grading)}});
    j["classes"] = cs;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "superalgebra (k,m): (" << k << "," << m << ")\n";
  out << "classes: " << list.size() << "\n";
  for (auto& f : list)
    out << "  r=" << f.r << "  " << f.universal->str() << (is_toral_fine(f.grading) ? "  toral" : "") << "\n";
  return 0;
}

int cmd_enumerate(const Opts& o, std::ostream& out) {
  if (!o.twisted.empty()) return enumerate_twisted(o, out);
  if (!o.super_km.empty()) return enumerate_super(o, out);
  if (o.heisenberg > 0) {
    Grading G = gamma_Hn(o.heisenberg);
    auto U = universal_group(G);
    if (is_json(o)) {
      Json j;
      j["command"] = "enumerate-fine";
      j["heisenberg"] = o.heisenberg;
      j["classes"] = Json::array({{{"group", U.group->str()}, {"toral", true}, {"grading", grading_json(G)}}});
      out << j.dump(2) << "\n";
    } else {
      out << "heisenberg k: " << o.heisenberg << "\n";
      out << "classes: 1\n  1. " << U.group->str() << "  toral\n";
    }
    return 0;
  }
  throw ParseError("enumerate-fine needs --twisted, --super or --heisenberg");
}

// ---- weyl

struct WeylRow {
  std::string label;
  Grading G;
  WeylReport R;
  std::optional<size_t> brute;
};

Json weyl_json(const WeylRow& w) {
  Json j;
  j["grading"] = w.label;
  j["closure_order"] = w.R.group.order();
  j["formula_order"] = w.R.formula.get_str();
  j["agree"] = w.R.agree;
  if (w.brute) j["bruteforce_order"] = *w.brute;
  j["abelian"] = w.R.group.is_abelian();
  j["dihedral_pattern"] = w.R.group.dihedral_pattern();
  j["p"] = w.R.pq.p;
  j["q"] = w.R.pq.q;
  auto names = comp_names(w.G);
  Json gens = Json::array();
  for (auto& g : w.R.generators) {
    Json gj{{"name", g.name}, {"cycles", cycle_str(g.perm, names)}};
    if (g.map) gj["matrix"] = mat_json(*g.map);
    gens.push_back(gj);
  }
  j["generators"] = gens;
  return j;
}

void weyl_text(const WeylRow& w, std::ostream& out) {
  out << "grading: " << w.label << "\n";
  out << "closure order: " << w.R.group.order() << "\n";
  out << "formula order: " << w.R.formula.get_str() << (w.R.agree ? " (agrees)" : " (DISAGREES)") << "\n";
  if (w.brute) out << "bruteforce order: " << *w.brute << "\n";
  out << "abelian: " << (w.R.group.is_abelian() ? "yes" : "no")
      << ", dihedral pattern: " << (w.R.group.dihedral_pattern() ? "yes" : "no") << "\n";
  auto names = comp_names(w.G);
  out << "generators:\n";
  for (auto& g : w.R.generators) out << "  " << std::left << std::setw(10) << g.name << " " << cycle_str(g.perm, names) << "\n";
}

int cmd_weyl(const Opts& o, std::ostream& out) {
  std::vector<WeylRow> rows;
  bool table = false;
  std::vector<Cyc> lambda;
  auto add = [&](std::string label, Grading G, WeylReport R, bool brute) {
    WeylRow w{std::move(label), std::move(G), std::move(R), std::nullopt};
    if (brute) w.brute = weyl_bruteforce(w.G, o.cap).order();
    rows.push_back(std::move(w));
  };
  if (!o.input.empty()) throw ParseError("weyl works on --heisenberg, --super or --twisted");
  if (o.heisenberg > 0) {
    add("fine grading of H_" + std::to_string(2 * o.heisenberg + 1), gamma_Hn(o.heisenberg), weyl_heisenberg(o.heisenberg),
        o.brute);
  } else if (!o.super_km.empty()) {
    auto [k, m] = super_km(o);
    if (m == 0) throw ParseError("--super needs m >= 1; use --heisenberg for m = 0");
    int lo = o.r < 0 ? 0 : o.r, hi = o.r < 0 ? m / 2 : o.r;
    for (int r = lo; r <= hi; ++r)
      add("r=" + std::to_string(r), gamma_super(k, m, r), weyl_super(k, m, r), o.brute);
  } else if (!o.twisted.empty()) {
    lambda = lambda_of_opts(o);
    std::vector<FineTwistedParams> ps;
    if (!o.params.empty()) {
      ps.push_back(parse_params(o.params, lambda[0].ctx()));
    } else {
      ps = enumerate_fine_twisted(lambda).param_types;
      table = true;
    }
    for (auto& p : ps) {
      auto F = fine_twisted(lambda, p);
      add(p.str(), F.grading, weyl_twisted(F), o.brute || table);
    }
  } else {
    throw ParseError("weyl needs --heisenberg, --super or --twisted");
  }
  if (is_json(o)) {
    Json j;
    j["command"] = "weyl";
    Json rs = Json::array();
    for (auto& w : rows) rs.push_back(weyl_json(w));
    j["gradings"] = rs;
    out << j.dump(2) << "\n";
    return 0;
  }
  if (table) {
    out << "lambda: " << list_text(lambda) << "\n";
    out << std::left << std::setw(30) << "grading" << std::right << std::setw(9) << "closure" << std::setw(9) << "formula"
        << std::setw(9) << "brute" << std::setw(4) << "p" << std::setw(4) << "q" << "  shape\n";
    for (auto& w : rows) {
      std::string shape = w.R.group.is_abelian() ? "abelian" : (w.R.group.dihedral_pattern() ? "dihedral" : "non-abelian");
      out << std::left << std::setw(30) << w.label << std::right << std::setw(9) << w.R.group.order() << std::setw(9)
          << w.R.formula.get_str() << std::setw(9) << (w.brute ? std::to_string(*w.brute) : "-") << std::setw(4) << w.R.pq.p
          << std::setw(4) << w.R.pq.q << "  " << shape << "\n";
    }
    return 0;
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) out << "\n";
    weyl_text(rows[i], out);
  }
  return 0;
}

// ---- decompose

int cmd_decompose(const Opts& o, std::ostream& out) {
  Source s = load(o);
  const Algebra& A = *s.G.alg;
  auto gr = verify_grading(s.G);
  if (!gr.ok) throw ValidationFailure("not a grading: " + gr.detail, {{"failure", gr.failure}, {"detail", gr.detail}});
  Json j;
  j["command"] = "decompose";
  j["source"] = s.what;
  std::ostringstream t;
  t << "source: " << s.what << "\n";
  if (A.kind == "twisted") {
    auto D = decompose_twisted_grading(s.G);
    bool all = true;
    Json blocks = Json::array();
    std::ostringstream bt;
    for (auto& b : D.b1) {
      std::string why;
      bool ok = check_block_I(A, D.u, D.z, b, &why);
      all = all && ok;
      Json x = Json::array(), y = Json::array();
      for (auto& v : b.x) x.push_back(vect_json(A, v));
      for (auto& v : b.y) y.push_back(vect_json(A, v));
      blocks.push_back({{"type", "I"}, {"l", b.l}, {"alpha", b.alpha.str()}, {"verified", ok}, {"x", x}, {"y", y}});
      bt << "  type I  l=" << b.l << " alpha=" << b.alpha.str() << (ok ? "  verified" : "  FAILED " + why) << "\n";
      for (int i = 0; i < b.l; ++i)
        bt << "    x" << i + 1 << " = " << lin(A, b.x[i]) << "\n    y" << i + 1 << " = " << lin(A, b.y[i]) << "\n";
    }
    for (auto& b : D.b2) {
      std::string why;
      bool ok = check_block_II(A, D.u, D.z, b, &why);
      all = all && ok;
      Json a = Json::array();
      for (auto& v : b.a) a.push_back(vect_json(A, v));
      blocks.push_back({{"type", "II"}, {"n", b.n}, {"alpha", b.alpha.str()}, {"verified", ok}, {"a", a}});
      bt << "  type II n=" << b.n << " alpha=" << b.alpha.str() << (ok ? "  verified" : "  FAILED " + why) << "\n";
      for (int i = 0; i < b.n; ++i) bt << "    a" << i + 1 << " = " << lin(A, b.a[i]) << "\n";
    }
    j["params"] = params_json(D.params);
    j["u"] = vect_json(A, D.u);
    j["z"] = vect_json(A, D.z);
    j["blocks"] = blocks;
    t << "params: " << D.params.str() << "\n";
    if (s.F) {
      bool same = equivalent_fine(s.lambda, s.F->params, D.params);
      j["equivalent_to_input"] = same;
      t << "equivalent to " << s.F->params.str() << ": " << (same ? "yes" : "no") << "\n";
    }
    t << "u' = " << lin(A, D.u) << "\nz = " << lin(A, D.z) << "\nblocks:\n" << bt.str();
    if (!all) throw ValidationFailure("a recovered block fails its relations", j);
  } else if (A.kind == "heisenberg" || A.kind == "super") {
    auto D = darboux_homogeneous_basis(s.G);
    Json pairs = Json::array();
    t << "z = " << lin(A, D.z) << "\npairs:\n";
    for (size_t i = 0; i < D.u.size(); ++i) {
      pairs.push_back({{"u", vect_json(A, D.u[i])}, {"up", vect_json(A, D.up[i])}});
      t << "  u" << i + 1 << " = " << lin(A, D.u[i]) << "\n  u" << i + 1 << "' = " << lin(A, D.up[i]) << "\n";
    }
    j["z"] = vect_json(A, D.z);
    j["pairs"] = pairs;
  } else {
    throw ParseError("decompose handles twisted, heisenberg and super algebras");
  }
  if (is_json(o)) out << j.dump(2) << "\n";
  else out << t.str();
  return 0;
}

// ---- color-classify

int cmd_color(const Opts& o, std::ostream& out) {
  if (o.input.empty()) throw ParseError("color-classify needs --input <color type json>");
  Json in = read_json_file(o.input);
  ColorType t = color_type_from_json(in);
  ColorAlgebra C = color_algebra(t);
  Grading G = C.grading;
  if (o.seed >= 0) {
    // random change of basis inside every component
    std::mt19937_64 rng(static_cast<uint64_t>(o.seed));
    std::uniform_int_distribution<int> d(-3, 3);
    for (auto& c : G.comps) {
      int n = static_cast<int>(c.basis.size());
      std::vector<Vect> nb;
      do {
        nb.clear();
        for (int a = 0; a < n; ++a) {
          Vect v = C.alg->zero();
          for (int b = 0; b < n; ++b) axpy(v, Cyc(C.alg->ctx, d(rng)), c.basis[b]);
          nb.push_back(v);
        }
      } while (rank_of(nb) != n);
      c.basis = nb;
      c.names.clear();
    }
  }
  auto ax = verify_color_axioms(G, t.eps);
  if (!ax.ok) throw ValidationFailure("color axioms fail: " + ax.detail, {{"failure", ax.failure}, {"detail", ax.detail}});
  auto cls = classify_color(G, t.eps);
  auto sup = is_super_realizable(C);
  const Algebra& A = *G.alg;
  // the classification may have moved to a larger field
  int N = cls.basis[0][0].N();
  Json j;
  j["command"] = "color-classify";
  j["type"] = color_type_json(cls.type);
  j["support_generates"] = cls.support_generates;
  j["conductor"] = N;
  Json basis = Json::array();
  for (size_t i = 0; i < cls.basis.size(); ++i) {
    Json v = Json::object();
    for (int a = 0; a < A.dim; ++a)
      if (!cls.basis[i][a].is_zero()) v[A.labels[a]] = cls.basis[i][a].str();
    basis.push_back({{"name", cls.names[i]}, {"degree", deg_json(G.comps[cls.comp[i]].deg)}, {"vector", v}});
  }
  j["standard_basis"] = basis;
  if (sup) {
    int ev = 0, od = 0;
    for (auto& c : sup->comps) (c.deg.coords()[0] == 0 ? ev : od) += static_cast<int>(c.basis.size());
    j["super"] = {{"even", ev}, {"odd", od}};
  } else {
    j["super"] = nullptr;
  }
  if (is_json(o)) {
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "group: " << t.group->str() << "\n";
  out << "g0: " << t.g0.str() << "\n";
  out << "dims:";
  for (auto& [g, d] : cls.type.dims) out << " " << g.str() << ":" << d;
  out << "\n";
  out << "support generates: " << (cls.support_generates ? "yes" : "no") << "\n";
  out << "super: ";
  if (sup) out << "even " << j["super"]["even"].get<int>() << ", odd " << j["super"]["odd"].get<int>() << "\n";
  else out << "no\n";
  if (N != A.ctx->N()) out << "field extended to conductor " << N << "\n";
  out << "standard basis:\n";
  for (size_t i = 0; i < cls.basis.size(); ++i) {
    out << "  " << std::left << std::setw(5) << cls.names[i] << " " << std::setw(10) << G.comps[cls.comp[i]].deg.str()
        << " " << lin(A, cls.basis[i]) << "\n";
  }
  return 0;
}

void add_common(CLI::App* sc, Opts& o) {
  sc->add_option("--twisted", o.twisted, "twisted algebra: comma separated lambda list");
  sc->add_option("--heisenberg", o.heisenberg, "Heisenberg algebra H_{2k+1}: k");
  sc->add_option("--super", o.super_km, "Heisenberg superalgebra: k,m");
  sc->add_option("--r", o.r, "superalgebra fine grading index r");
  sc->add_option("--params", o.params, "fine grading parameters \"l,s,r;betas;alphas\"");
  sc->add_option("--input", o.input, "JSON input file");
  sc->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sc->add_option("--conductor", o.conductor, "override the cyclotomic conductor")->check(CLI::PositiveNumber);
  sc->add_option("--cap", o.cap, "largest component count for brute force")->check(CLI::PositiveNumber);
  sc->add_option("--seed", o.seed, "transport by a random automorphism first")->check(CLI::NonNegativeNumber);
  sc->add_flag("--fine", o.fine, "use the fine grading (the default)");
  sc->add_flag("--bruteforce", o.brute, "also compute the Weyl group by brute force");
}

void emit_error(const Opts& o, std::ostream& out, std::ostream& err, const std::string& kind, const std::string& msg,
                const Json& extra = Json()) {
  if (is_json(o)) {
    Json j{{"error", {{"kind", kind}, {"message", msg}}}};
    if (!extra.is_null()) j["error"]["report"] = extra;
    out << j.dump(2) << "\n";
  }
  err << "error (" << kind << "): " << msg << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"heisgrad: fine gradings of Heisenberg, twisted Heisenberg and color algebras"};
  app.name("heisgrad");
  app.require_subcommand(1);
  Opts o;
  std::vector<std::pair<CLI::App*, int (*)(const Opts&, std::ostream&)>> cmds = {
      {app.add_subcommand("verify", "check the axioms and a grading"), cmd_verify},
      {app.add_subcommand("universal-group", "universal group of a grading"), cmd_universal},
      {app.add_subcommand("enumerate-fine", "fine gradings up to equivalence"), cmd_enumerate},
      {app.add_subcommand("weyl", "Weyl groups of fine gradings"), cmd_weyl},
      {app.add_subcommand("decompose", "recover the homogeneous block structure"), cmd_decompose},
      {app.add_subcommand("color-classify", "classify a graded color algebra"), cmd_color},
  };
  for (auto& [sc, f] : cmds) add_common(sc, o);
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error (parse): " << e.what() << "\n";
    return 2;
  }
  for (auto& [sc, f] : cmds) {
    if (!sc->parsed()) continue;
    try {
      return f(o, out);
    } catch (const ParseError& e) {
      emit_error(o, out, err, "parse", e.what());
      return 2;
    } catch (const nlohmann::json::exception& e) {
      emit_error(o, out, err, "parse", e.what());
      return 2;
    } catch (const CapExceeded& e) {
      emit_error(o, out, err, "cap", e.what());
      return 4;
    } catch (const ValidationFailure& e) {
      emit_error(o, out, err, "validation", e.what(), e.report);
      return 3;
    } catch (const MathError& e) {
      emit_error(o, out, err, "validation", e.what());
      return 3;
    } catch (const std::invalid_argument& e) {
      emit_error(o, out, err, "validation", e.what());
      return 3;
    } catch (const std::domain_error& e) {
      emit_error(o, out, err, "validation", e.what());
      return 3;
    }
  }
  return 2;
}

}  // namespace hg
