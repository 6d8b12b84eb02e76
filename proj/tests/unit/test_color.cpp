#include <doctest.h>

#include <random>

#include "hg/color.hpp"

using namespace hg;

namespace {

ColorType z4_type(const Ctx& K) {
  // Z_4, g0 = 2, eps(1,1) = -1 (so eps(g,g) = -1 for 2g = g0 = 2 at g = 1, 3)
  Group G = parse_group("Z_4");
  auto eps = make_bicharacter(G, {{Cyc(K, -1)}});
  ColorType t{G, GroupElt(G, {2}), eps, {}};
  t.dims[GroupElt(G, {0})] = 1;
  t.dims[GroupElt(G, {1})] = 2;
  t.dims[GroupElt(G, {2})] = 2;
  t.dims[GroupElt(G, {3})] = 1;
  return t;
}

}  // namespace

TEST_SUITE("color") {
  TEST_CASE("bicharacter validation") {
    auto K = ctx_new(12);
    Group G = parse_group("Z_2");
    CHECK_NOTHROW(make_bicharacter(G, {{Cyc(K, -1)}}));
    CHECK_THROWS_AS(make_bicharacter(G, {{Cyc(K, 2)}}), std::invalid_argument);
    Group H = parse_group("Z_3 x Z_3");
    Cyc w = root_of_unity(K, 3, 1);
    CHECK_NOTHROW(make_bicharacter(H, {{Cyc(K, 1), w}, {w.inv(), Cyc(K, 1)}}));
    CHECK_THROWS_AS(make_bicharacter(H, {{Cyc(K, 1), w}, {w, Cyc(K, 1)}}), std::invalid_argument);
    auto e = make_bicharacter(H, {{Cyc(K, 1), w}, {w.inv(), Cyc(K, 1)}});
    CHECK(e(GroupElt(H, {1, 0}), GroupElt::zero(H)).is_one());
  }

  TEST_CASE("trivial group gives a Heisenberg algebra") {
    auto K = ctx_new(4);
    Group G = parse_group("0");
    ColorType t{G, GroupElt::zero(G), make_bicharacter(G, {{Cyc(K, 1)}}), {}};
    t.dims[GroupElt::zero(G)] = 5;
    auto C = color_algebra(t);
    CHECK(C.alg->dim == 5);
    CHECK(verify_axioms(*C.alg).ok);
    CHECK(center(*C.alg).size() == 1);
    auto s = is_super_realizable(C);
    REQUIRE(s);
    CHECK(s->comps.size() == 1);
  }

  TEST_CASE("Z_2 sign rule") {
    auto K = ctx_new(4);
    Group G = parse_group("Z_2");
    ColorType t{G, GroupElt(G, {1}), make_bicharacter(G, {{Cyc(K, -1)}}), {}};
    t.dims[GroupElt(G, {0})] = 2;
    t.dims[GroupElt(G, {1})] = 3;
    auto C = color_algebra(t);
    CHECK(verify_color_axioms(C.grading, t.eps).ok);
    CHECK(is_super_realizable(C).has_value());
  }

  TEST_CASE("torsion-free pairs") {
    auto K = ctx_new(4);
    Group G = parse_group("Z^2");
    auto eps = make_bicharacter(G, {{Cyc(K, 1), Cyc(K, -1)}, {Cyc(K, -1), Cyc(K, 1)}});
    ColorType t{G, GroupElt::zero(G), eps, {}};
    t.dims[GroupElt::zero(G)] = 1;
    t.dims[GroupElt(G, {1, 0})] = 1;
    t.dims[GroupElt(G, {-1, 0})] = 1;
    t.dims[GroupElt(G, {0, 1})] = 1;
    t.dims[GroupElt(G, {0, -1})] = 1;
    auto C = color_algebra(t);
    CHECK(verify_color_axioms(C.grading, eps).ok);
    auto cl = classify_color(C.grading, eps);
    CHECK(cl.type.dims == t.dims);
    CHECK(cl.support_generates);
  }

  TEST_CASE("flipped sign is caught") {
    auto K = ctx_new(4);
    auto t = z4_type(K);
    auto C = color_algebra(t);
    CHECK(verify_color_axioms(C.grading, t.eps).ok);
    Algebra B = *C.alg;
    B.set(1, 2, scale(Cyc(K, -1), B.basis_bracket(1, 2)));
    Grading H = C.grading;
    H.alg = std::make_shared<Algebra>(B);
    auto r = verify_color_axioms(H, t.eps);
    CHECK_FALSE(r.ok);
    CHECK(r.failure == "skew");
  }

  TEST_CASE("non-real values are not super") {
    auto K = ctx_new(12);
    Group G = parse_group("Z_3 x Z_3");
    Cyc w = root_of_unity(K, 3, 1);
    auto eps = make_bicharacter(G, {{Cyc(K, 1), w}, {w.inv(), Cyc(K, 1)}});
    // z in degree (1,0); (0,1) pairs with (1,2) and eps((0,1),(1,2)) = w^-1
    ColorType t{G, GroupElt(G, {1, 0}), eps, {}};
    t.dims[GroupElt(G, {1, 0})] = 1;
    t.dims[GroupElt(G, {0, 1})] = 1;
    t.dims[GroupElt(G, {1, 2})] = 1;
    auto C = color_algebra(t);
    CHECK(verify_color_axioms(C.grading, eps).ok);
    CHECK_FALSE(is_super_realizable(C).has_value());
  }

  TEST_CASE("scrambled Z_4 type is recognized") {
    auto K = ctx_new(4);
    auto t = z4_type(K);
    auto C = color_algebra(t);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-2, 2);
    Grading S = C.grading;
    for (auto& c : S.comps) {
      int n = static_cast<int>(c.basis.size());
      if (n < 2) continue;
      std::vector<Vect> nb;
      do {
        nb.clear();
        for (int i = 0; i < n; ++i) {
          Vect v = C.alg->zero();
          for (int j = 0; j < n; ++j) axpy(v, Cyc(K, d(rng)), c.basis[j]);
          nb.push_back(v);
        }
      } while (rank_of(nb) < n);
      c.basis = nb;
    }
    auto cl = classify_color(S, t.eps);
    CHECK(cl.type.g0 == t.g0);
    CHECK(cl.type.dims == t.dims);
    CHECK(cl.basis.size() == 6);
    // the orthonormal vectors may need a larger field
    CHECK(cl.basis[0][0].N() % 4 == 0);
  }

  TEST_CASE("invalid types") {
    auto K = ctx_new(4);
    auto t = z4_type(K);
    t.dims[GroupElt(t.group, {0})] = 3;
    CHECK_THROWS_AS(color_algebra(t), std::invalid_argument);
  }
}
