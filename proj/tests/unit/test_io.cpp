#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hg/io.hpp"
#include "hg/weyl.hpp"

using namespace hg;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = run_cli(args, o, e);
  return {c, o.str(), e.str()};
}

std::string tmp_file(const std::string& name, const std::string& text) {
  std::string p = "/tmp/hg_io_" + name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("split and scalar lists") {
    auto p = split_top("1, zeta(8)^3*(1+i) ,2", ',');
    REQUIRE(p.size() == 3);
    CHECK(p[1] == "zeta(8)^3*(1+i)");
    auto K = ctx_new(8);
    auto v = parse_scalar_list("1,-1/2,zeta(8)^2", K);
    REQUIRE(v.size() == 3);
    CHECK(v[2] == imag_unit(K));
    CHECK(parse_scalar_list("  ", K).empty());
    CHECK_THROWS_AS(parse_scalar_list("1,,2", K), ParseError);
    CHECK_THROWS_AS(parse_scalar_list("1,zeta(", K), ParseError);
  }

  TEST_CASE("twisted context picks the conductor") {
    CHECK(twisted_context("1,1,i,i", std::nullopt)->N() == 32);
    CHECK(twisted_context("1,2", std::nullopt)->N() == 16);
    CHECK(twisted_context("1,2", 40L)->N() == 40);
    CHECK_THROWS_AS(twisted_context("1,2", 6L), ParseError);
    CHECK_THROWS_AS(twisted_context("", std::nullopt), ParseError);
  }

  TEST_CASE("params text") {
    auto K = ctx_new(32);
    auto p = parse_params("2,1,2;1;i,i", K);
    CHECK(p.l == 2);
    CHECK(p.s == 1);
    CHECK(p.r == 2);
    REQUIRE(p.alphas.size() == 2);
    CHECK(p.alphas[0] == imag_unit(K));
    CHECK(parse_params(p.str().substr(1, p.str().size() - 2), K).str() == p.str());
    auto q = parse_params("4,0,2;;1,1", K);
    CHECK(q.betas.empty());
    CHECK_THROWS_AS(parse_params("a,0,2", K), ParseError);
    CHECK_THROWS_AS(parse_params("1,2", K), ParseError);
    CHECK_THROWS_AS(parse_params("1,2,0;;;", K), ParseError);
  }

  TEST_CASE("algebra json round trip") {
    auto K = twisted_context("1,1,i,i", std::nullopt);
    Algebra T = twisted(parse_scalar_list("1,1,i,i", K));
    for (const Algebra& A : {heisenberg(3), heisenberg_super(1, 3), T}) {
      Algebra B = algebra_from_json(algebra_json(A));
      CHECK(B.labels == A.labels);
      CHECK(B.parity == A.parity);
      CHECK(B.kind == A.kind);
      for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) CHECK(B.basis_bracket(i, j) == A.basis_bracket(i, j));
    }
    Algebra S = algebra_from_json(Json::parse(R"({"super": [2, 1]})"));
    CHECK(S.dim == 6);
    Algebra W = algebra_from_json(Json::parse(R"({"twisted": ["1", "2"]})"));
    CHECK(W.ctx->N() == 16);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"labels": ["a"], "brackets": [{"left": "a", "right": "b", "value": {}}]})")),
                    ParseError);
  }

  TEST_CASE("grading json round trip keeps raw groups") {
    auto lam = parse_scalar_list("1,1,i,i", twisted_context("1,1,i,i", std::nullopt));
    auto F = fine_twisted(lam, parse_params("4,0,2;;1,1", lam[0].ctx()));
    Json j = grading_json(F.grading);
    Grading G = grading_from_json(Json::parse(j.dump()));
    CHECK(verify_grading(G).ok);
    CHECK(G.group->same_as(*F.grading.group));
    REQUIRE(G.comps.size() == F.grading.comps.size());
    for (size_t c = 0; c < G.comps.size(); ++c) {
      CHECK(G.comps[c].deg.coords() == F.grading.comps[c].deg.coords());
      CHECK(G.comps[c].basis == F.grading.comps[c].basis);
    }
    CHECK(universal_group(G).group->str() == "Z x Z_2 x Z_4");
    // canonical group by name when the raw factors are absent
    Json h = grading_json(gamma_Hn(2));
    h.erase("free");
    h.erase("torsion");
    CHECK(verify_grading(grading_from_json(h)).ok);
    h["components"][0]["degree"] = {1};
    CHECK_THROWS_AS(grading_from_json(h), ParseError);
  }

  TEST_CASE("color type json") {
    Json j = Json::parse(R"J({"group": "Z_3 x Z_3", "g0": [1, 0], "eps": [["1", "zeta(3)"], ["zeta(3)^2", "1"]],
                              "dims": [{"degree": [1, 0], "dim": 1}, {"degree": [0, 1], "dim": 2}, {"degree": [1, 2], "dim": 2}]})J");
    ColorType t = color_type_from_json(j);
    CHECK(t.eps.values[0][0].N() == 12);
    CHECK_NOTHROW(validate_color_type(t));
    ColorType u = color_type_from_json(color_type_json(t));
    CHECK(color_type_json(u).dump() == color_type_json(t).dump());
    CHECK(u.g0.str() == t.g0.str());
    j["g0"] = {1};
    CHECK_THROWS_AS(color_type_from_json(j), ParseError);
  }

  TEST_CASE("cli exit codes") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"nonsense"}).code == 2);
    CHECK(cli({"weyl", "--heisenberg", "x"}).code == 2);
    CHECK(cli({"verify", "--twisted", "1,zeta("}).code == 2);
    CHECK(cli({"verify", "--twisted", "1,1,i,i", "--params", "3,0,0"}).code == 3);
    CHECK(cli({"weyl", "--twisted", "1,1,i,i", "--params", "2,0,4;;1,1,i,i", "--bruteforce", "--cap", "5"}).code == 4);
    CHECK(cli({"verify", "--input", "/nonexistent.json"}).code == 2);
    auto h = cli({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("enumerate-fine") != std::string::npos);
  }

  TEST_CASE("cli verify reports the witness bracket") {
    Json g = grading_json(gamma_Hn(2));
    for (auto& c : g["components"])
      if (c["names"][0] == "e1") c["basis"] = Json::array({{{"e1", "1"}, {"eh2", "1"}}});
    auto p = tmp_file("corrupt.json", g.dump());
    auto r = cli({"verify", "--input", p});
    CHECK(r.code == 3);
    CHECK(r.out.find("witness: [e1 + eh2, e2] = -z") != std::string::npos);
    auto rj = cli({"verify", "--input", p, "--format", "json"});
    CHECK(rj.code == 3);
    Json out = Json::parse(rj.out);
    CHECK(out["ok"] == false);
    CHECK(out["grading"]["failure"] == "bracket");
    CHECK(out["grading"]["witness"].size() == 3);
    std::remove(p.c_str());
  }

  TEST_CASE("cli reports are deterministic and re-parse") {
    std::vector<std::string> args{"enumerate-fine", "--twisted", "1,1,zeta(4),zeta(4)", "--format", "json"};
    auto a = cli(args), b = cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    Json j = Json::parse(a.out);
    CHECK(j["classes"].size() == 6);
    CHECK(j["param_types"].size() == 7);
    CHECK(j["rejected_l"] == Json::array({8}));
    for (auto& c : j["classes"]) {
      Grading G = grading_from_json(c["grading"]);
      CHECK(verify_grading(G).ok);
      CHECK(universal_group(G).group->str() == c["group"].get<std::string>());
      CHECK(c["group"] == c["predicted"]);
    }
  }

  TEST_CASE("cli weyl and decompose") {
    auto w = cli({"weyl", "--heisenberg", "2", "--fine", "--format", "json"});
    REQUIRE(w.code == 0);
    Json j = Json::parse(w.out);
    CHECK(j["gradings"][0]["closure_order"] == 8);
    CHECK(j["gradings"][0]["formula_order"] == "8");
    CHECK(j["gradings"][0]["generators"].size() == 2);
    auto d = cli({"decompose", "--twisted", "1,1,i,i", "--params", "4,0,2;;1,1", "--seed", "11", "--format", "json"});
    REQUIRE(d.code == 0);
    Json dj = Json::parse(d.out);
    CHECK(dj["equivalent_to_input"] == true);
    for (auto& b : dj["blocks"]) CHECK(b["verified"] == true);
    auto s = cli({"weyl", "--super", "1,3"});
    CHECK(s.code == 0);
    CHECK(s.out.find("r=1") != std::string::npos);
  }
}
