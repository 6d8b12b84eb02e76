#include "hg/io.hpp"

#include <algorithm>
#include <cctype>

namespace hg {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

Cyc scalar(const std::string& text, const Ctx& ctx) {
  try {
    return parse_cyc(text, ctx);
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

Cyc scalar_json(const Json& j, const Ctx& ctx) {
  if (j.is_number_integer()) return Cyc(ctx, j.get<long>());
  if (j.is_string()) return scalar(j.get<std::string>(), ctx);
  throw ParseError("expected a scalar (string or integer), got " + j.dump());
}

Ctx ctx_for(long N) {
  if (N < 1) throw ParseError("conductor must be positive");
  return ctx_new(static_cast<int>(N));
}

}  // namespace

std::vector<std::string> split_top(const std::string& text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<Cyc> parse_scalar_list(const std::string& text, const Ctx& ctx) {
  std::vector<Cyc> out;
  if (trim(text).empty()) return out;
  for (auto& piece : split_top(text, ',')) {
    if (piece.empty()) throw ParseError("empty entry in scalar list \"" + text + "\"");
    out.push_back(scalar(piece, ctx));
  }
  return out;
}

Ctx twisted_context(const std::string& lambda_text, std::optional<long> conductor) {
  auto pieces = split_top(lambda_text, ',');
  if (trim(lambda_text).empty()) throw ParseError("empty lambda");
  int k = static_cast<int>(pieces.size());
  long zl = zeta_orders_lcm(lambda_text);
  long N = conductor ? *conductor : twisted_conductor(k, zl);
  if (N % 4 != 0) throw ParseError("twisted algebras need a conductor divisible by 4");
  return ctx_for(N);
}

FineTwistedParams parse_params(const std::string& text, const Ctx& ctx) {
  auto parts = split_top(text, ';');
  if (parts.size() > 3) throw ParseError("params: expected \"l,s,r;betas;alphas\"");
  while (parts.size() < 3) parts.push_back("");
  auto head = split_top(parts[0], ',');
  if (head.size() != 3) throw ParseError("params: expected l,s,r before the first ';'");
  FineTwistedParams p;
  try {
    p.l = std::stoi(head[0]);
    p.s = std::stoi(head[1]);
    p.r = std::stoi(head[2]);
  } catch (const std::exception&) {
    throw ParseError("params: l, s, r must be integers");
  }
  p.betas = parse_scalar_list(parts[1], ctx);
  p.alphas = parse_scalar_list(parts[2], ctx);
  return p;
}

Json vect_json(const Algebra& A, const Vect& v) {
  Json j = Json::object();
  for (int i = 0; i < A.dim; ++i)
    if (!v[i].is_zero()) j[A.labels[i]] = v[i].str();
  return j;
}

Vect vect_from_json(const Algebra& A, const Json& j) {
  Vect v = A.zero();
  if (j.is_object()) {
    for (auto& [k, x] : j.items()) {
      int i;
      try {
        i = A.index(k);
      } catch (const std::exception& e) {
        throw ParseError(e.what());
      }
      v[i] = scalar_json(x, A.ctx);
    }
    return v;
  }
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != A.dim) throw ParseError("vector has the wrong length");
    for (int i = 0; i < A.dim; ++i) v[i] = scalar_json(j[i], A.ctx);
    return v;
  }
  throw ParseError("expected a vector (object label -> scalar, or array)");
}

Json mat_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json r = Json::array();
    for (int j = 0; j < m.cols; ++j) r.push_back(m(i, j).str());
    rows.push_back(r);
  }
  return rows;
}

Json algebra_json(const Algebra& A) {
  Json j;
  j["kind"] = A.kind;
  j["conductor"] = A.ctx->N();
  j["labels"] = A.labels;
  j["parity"] = A.parity;
  Json br = Json::array();
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < A.dim; ++b)
      if (!A.table[a][b].empty())
        br.push_back({{"left", A.labels[a]}, {"right", A.labels[b]}, {"value", vect_json(A, A.basis_bracket(a, b))}});
  j["brackets"] = br;
  return j;
}

Algebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("algebra must be a JSON object");
  std::optional<long> N;
  if (j.contains("conductor")) N = j["conductor"].get<long>();
  try {
    if (j.contains("heisenberg")) return heisenberg(j["heisenberg"].get<int>(), ctx_for(N.value_or(1)));
    if (j.contains("super")) {
      auto km = j["super"].get<std::vector<int>>();
      if (km.size() != 2) throw ParseError("super expects [k, m]");
      return heisenberg_super(km[0], km[1], ctx_for(N.value_or(4)));
    }
    if (j.contains("twisted")) {
      std::string text;
      for (auto& x : j["twisted"]) text += (text.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
      Ctx K = twisted_context(text, N);
      return twisted(parse_scalar_list(text, K));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  if (!j.contains("labels")) throw ParseError("algebra needs labels (or heisenberg/super/twisted)");
  auto labels = j["labels"].get<std::vector<std::string>>();
  std::vector<int> parity(labels.size(), 0);
  if (j.contains("parity")) parity = j["parity"].get<std::vector<int>>();
  if (parity.size() != labels.size()) throw ParseError("parity and labels differ in length");
  if (!N) {
    long zl = zeta_orders_lcm(j.contains("brackets") ? j["brackets"].dump() : "");
    N = zl;
  }
  Algebra A(ctx_for(*N), labels, parity);
  if (j.contains("kind")) A.kind = j["kind"].get<std::string>();
  if (A.kind != "heisenberg" && A.kind != "super" && A.kind != "twisted" && A.kind != "color") A.kind = "custom";
  if (j.contains("brackets"))
    for (auto& b : j["brackets"]) {
      int l, r;
      try {
        l = A.index(b.at("left").get<std::string>());
        r = A.index(b.at("right").get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
      A.set(l, r, vect_from_json(A, b.at("value")));
    }
  return A;
}

Json grading_json(const Grading& G) {
  Json j;
  j["algebra"] = algebra_json(*G.alg);
  j["group"] = G.group->str();
  j["free"] = G.group->rank;
  Json tor = Json::array();
  for (auto& t : G.group->torsion) tor.push_back(t.get_si());
  j["torsion"] = tor;
  Json comps = Json::array();
  for (auto& c : G.comps) {
    Json cj;
    Json deg = Json::array();
    for (auto& x : c.deg.coords()) deg.push_back(x.get_si());
    cj["degree"] = deg;
    if (!c.names.empty()) cj["names"] = c.names;
    Json basis = Json::array();
    for (auto& v : c.basis) basis.push_back(vect_json(*G.alg, v));
    cj["basis"] = basis;
    comps.push_back(cj);
  }
  j["components"] = comps;
  return j;
}

Grading grading_from_json(const Json& j) {
  try {
    auto A = std::make_shared<Algebra>(algebra_from_json(j.at("algebra")));
    Group G;
    if (j.contains("free") || j.contains("torsion")) {
      std::vector<long> tor;
      if (j.contains("torsion")) tor = j["torsion"].get<std::vector<long>>();
      G = make_group(j.value("free", 0), tor);
    } else {
      G = parse_group(j.at("group").get<std::string>());
    }
    std::vector<Component> comps;
    for (auto& cj : j.at("components")) {
      IntVec coords;
      for (auto& x : cj.at("degree")) coords.emplace_back(x.get<long>());
      if (static_cast<int>(coords.size()) != G->ncoords()) throw ParseError("degree has the wrong number of coordinates");
      Component c{GroupElt(G, coords), {}, {}};
      for (auto& v : cj.at("basis")) c.basis.push_back(vect_from_json(*A, v));
      if (cj.contains("names")) c.names = cj["names"].get<std::vector<std::string>>();
      comps.push_back(c);
    }
    return make_grading(A, G, std::move(comps));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("grading: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("grading: ") + e.what());
  }
}

Json params_json(const FineTwistedParams& p) {
  Json j;
  j["text"] = p.str();
  j["l"] = p.l;
  j["s"] = p.s;
  j["r"] = p.r;
  Json b = Json::array(), a = Json::array();
  for (auto& x : p.betas) b.push_back(x.str());
  for (auto& x : p.alphas) a.push_back(x.str());
  j["betas"] = b;
  j["alphas"] = a;
  return j;
}

ColorType color_type_from_json(const Json& j) {
  try {
    Group G = parse_group(j.at("group").get<std::string>());
    long zl = zeta_orders_lcm(j.at("eps").dump());
    Ctx K = ctx_for(j.contains("conductor") ? j["conductor"].get<long>() : lcm_l(4, zl));
    auto coords = [&](const Json& a) {
      IntVec c;
      for (auto& x : a) c.emplace_back(x.get<long>());
      if (static_cast<int>(c.size()) != G->ncoords()) throw ParseError("group element has the wrong number of coordinates");
      return GroupElt(G, c);
    };
    std::vector<std::vector<Cyc>> vals;
    for (auto& row : j.at("eps")) {
      std::vector<Cyc> r;
      for (auto& x : row) r.push_back(scalar_json(x, K));
      vals.push_back(r);
    }
    ColorType t{G, coords(j.at("g0")), make_bicharacter(G, vals), {}};
    for (auto& d : j.at("dims")) t.dims[coords(d.at("degree"))] = d.at("dim").get<int>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("color type: ") + e.what());
  }
}

Json color_type_json(const ColorType& t) {
  Json j;
  j["group"] = t.group->str();
  Json g0 = Json::array();
  for (auto& x : t.g0.coords()) g0.push_back(x.get_si());
  j["g0"] = g0;
  Json eps = Json::array();
  for (auto& row : t.eps.values) {
    Json r = Json::array();
    for (auto& x : row) r.push_back(x.str());
    eps.push_back(r);
  }
  j["eps"] = eps;
  Json dims = Json::array();
  for (auto& [g, d] : t.dims) {
    Json deg = Json::array();
    for (auto& x : g.coords()) deg.push_back(x.get_si());
    dims.push_back({{"degree", deg}, {"dim", d}});
  }
  j["dims"] = dims;
  j["conductor"] = t.eps.values[0][0].N();
  return j;
}

}  // namespace hg
