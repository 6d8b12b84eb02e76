#include <doctest.h>

#include <random>

#include "hg/fine.hpp"

using namespace hg;

namespace {

std::vector<Cyc> ex1(Ctx& K) {
  K = ctx_new(twisted_conductor(4, 4));
  return {Cyc(K, 1), Cyc(K, 1), imag_unit(K), imag_unit(K)};
}

std::vector<Cyc> ints(Ctx& K, std::vector<long> xs) {
  K = ctx_new(twisted_conductor(static_cast<int>(xs.size()), 1));
  std::vector<Cyc> v;
  for (long x : xs) v.emplace_back(K, x);
  return v;
}

// the pairs (u_i, v_i) of twisted(lambda) with u = unit(1), z = unit(0)
void pairs(const Algebra& A, std::vector<Vect>& U, std::vector<Vect>& V) {
  int k = (A.dim - 2) / 2;
  for (int i = 0; i < k; ++i) {
    U.push_back(add(A.unit(2 + 2 * i), A.unit(3 + 2 * i)));
    V.push_back(sub(A.unit(2 + 2 * i), A.unit(3 + 2 * i)));
  }
}

}  // namespace

TEST_SUITE("fine") {
  TEST_CASE("gamma1 and gamma2") {
    Ctx K;
    auto lam = ints(K, {1, 2});
    auto g1 = gamma1(lam), g2 = gamma2(lam);
    CHECK(verify_grading(g1).ok);
    CHECK(verify_grading(g2).ok);
    CHECK(universal_group(g1).group->str() == "Z x Z_2 x Z_2");
    CHECK(universal_group(g2).group->str() == "Z^3");
  }

  TEST_CASE("spectrum condition") {
    Ctx K;
    auto lam = ex1(K);
    Cyc one(K, 1);
    CHECK(spectrum_check(lam, {4, 0, 2, {}, {one, one}}));
    CHECK(spectrum_check(lam, {4, 1, 0, {one}, {}}));
    CHECK_FALSE(spectrum_check(lam, {8, 0, 1, {}, {one}}));
    auto l2 = ints(K, {1, 2});
    CHECK(spectrum_check(l2, {2, 0, 2, {}, {Cyc(K, 1), Cyc(K, 2)}}));
    CHECK_FALSE(spectrum_check(l2, {4, 0, 1, {}, {Cyc(K, 1)}}));
  }

  TEST_CASE("type I blocks") {
    for (int l = 1; l <= 4; ++l) {
      auto K = ctx_new(static_cast<int>(lcm_l(4, 2 * l)));
      Cyc xi = root_of_unity(K, l, 1);
      Cyc al = Cyc(K, 2);
      std::vector<Cyc> lam;
      for (int t = 1; t <= l; ++t) lam.push_back(xi.pow(t) * al);
      Algebra A = twisted(lam);
      std::vector<Vect> U, V;
      pairs(A, U, V);
      auto b = block_I(A, l, al, U, V);
      std::string why;
      CHECK_MESSAGE(check_block_I(A, A.unit(1), A.unit(0), b, &why), why);
      if (l == 3) {
        // [x_3, y_3] = (-1)^3 alpha z
        CHECK(A.bracket(b.x[2], b.y[2]) == scale(-al, A.unit(0)));
      }
    }
  }

  TEST_CASE("type II blocks") {
    for (int l = 1; l <= 4; ++l) {
      auto K = ctx_new(static_cast<int>(lcm_l(8, 4 * l)));
      Cyc zeta = root_of_unity(K, 2 * l, 1);
      Cyc al = Cyc(K, 1);
      std::vector<Cyc> lam;
      for (int t = 1; t <= l; ++t) lam.push_back(zeta.pow(t) * al);
      Algebra A = twisted(lam);
      std::vector<Vect> U, V;
      pairs(A, U, V);
      auto b = block_II(A, l, al, U, V);
      CHECK(b.n == 2 * l);
      std::string why;
      CHECK_MESSAGE(check_block_II(A, A.unit(1), A.unit(0), b, &why), why);
      if (l == 2) {
        CHECK(A.bracket(b.a[0], b.a[3]) == scale(Cyc(K, -1), A.unit(0)));
        CHECK(A.bracket(b.a[1], b.a[2]) == A.unit(0));
      }
    }
  }

  TEST_CASE("broken block is caught") {
    auto K = ctx_new(8);
    Algebra A = twisted({Cyc(K, 1)});
    std::vector<Vect> U, V;
    pairs(A, U, V);
    auto b = block_I(A, 1, Cyc(K, 1), U, V);
    b.y[0] = scale(Cyc(K, 2), b.y[0]);
    std::string why;
    CHECK_FALSE(check_block_I(A, A.unit(1), A.unit(0), b, &why));
    CHECK(why.find("[x1,y1]") != std::string::npos);
  }

  TEST_CASE("example enumeration") {
    Ctx K;
    auto lam = ex1(K);
    auto E = enumerate_fine_twisted(lam);
    CHECK(E.rejected_l == std::vector<int>{8});
    CHECK(E.param_types.size() == 7);
    // (2,1,2;i;1,1) and (2,1,2;1;i,i) are identified by eps = i
    CHECK(E.classes.size() == 6);
    std::vector<std::string> groups;
    for (auto& p : E.classes) {
      auto F = fine_twisted(lam, p);
      CHECK(verify_grading(F.grading).ok);
      auto U = universal_group(F.grading).group;
      CHECK(U->same_as(*predicted_universal_group(p)));
      groups.push_back(U->str());
      auto D = decompose_twisted_grading(F.grading);
      CHECK(equivalent_fine(lam, p, D.params));
    }
    CHECK(groups == std::vector<std::string>{"Z^5", "Z^3 x Z_2", "Z^2 x Z_2 x Z_2", "Z x Z_2 x Z_2 x Z_2 x Z_2",
                                             "Z^2 x Z_4", "Z x Z_2 x Z_4"});
  }

  TEST_CASE("generic lambda gives gamma1 and gamma2") {
    Ctx K;
    for (auto xs : {std::vector<long>{1, 2}, std::vector<long>{1, 3, 9}}) {
      auto lam = ints(K, xs);
      auto E = enumerate_fine_twisted(lam);
      REQUIRE(E.classes.size() == 2);
      int k = static_cast<int>(xs.size());
      CHECK(E.classes[0].l == 1);
      CHECK(E.classes[0].s == k);
      CHECK(E.classes[1].l == 2);
      CHECK(E.classes[1].r == k);
      CHECK(decompose_twisted_grading(gamma2(lam)).params.l == 1);
      auto d1 = decompose_twisted_grading(gamma1(lam)).params;
      CHECK(d1.l == 2);
      CHECK(d1.r == k);
    }
  }

  TEST_CASE("equivalence") {
    Ctx K;
    auto lam = ints(K, {1, 2});
    FineTwistedParams p{1, 2, 0, {Cyc(K, 1), Cyc(K, 2)}, {}};
    FineTwistedParams q{1, 2, 0, {Cyc(K, 2), Cyc(K, 4)}, {}};
    CHECK(equivalent_fine(lam, p, q));
    CHECK(equivalent_fine(lam, p, p));
    FineTwistedParams r{1, 2, 0, {Cyc(K, 1), Cyc(K, 3)}, {}};
    CHECK_FALSE(equivalent_fine(lam, p, r));
  }

  TEST_CASE("homogenize after a transport") {
    Ctx K;
    auto lam = ints(K, {1, 2});
    Grading G = gamma2(lam);
    auto h0 = homogenize_u(G);
    CHECK(h0.u == G.alg->unit(1));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 4; ++t) {
      Mat f = random_automorphism(*G.alg, rng);
      Grading H = transport(G, f);
      REQUIRE(verify_grading(H).ok);
      auto h = homogenize_u(H);
      const Algebra& A = *H.alg;
      for (size_t i = 0; i < lam.size(); ++i) {
        CHECK(A.bracket(h.u, h.up[i]) == scale(lam[i], h.up[i]));
        CHECK(A.bracket(h.u, h.vp[i]) == scale(-lam[i], h.vp[i]));
        CHECK(A.bracket(h.up[i], h.vp[i]) == scale(Cyc(K, -2) * lam[i], h.z));
      }
      CHECK(G.comps[h.comp].deg.order().has_value());
      CHECK(decompose_twisted_grading(H).params.l == 1);
    }
  }

  TEST_CASE("fine super gradings") {
    CHECK(enumerate_fine_super(1, 4).size() == 3);
    CHECK(enumerate_fine_super(1, 3).size() == 2);
    auto m0 = enumerate_fine_super(2, 0);
    REQUIRE(m0.size() == 1);
    CHECK(m0[0].universal->str() == "Z^3");
    auto s = enumerate_fine_super(2, 4);
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = i + 1; j < s.size(); ++j) CHECK_FALSE(s[i].universal->same_as(*s[j].universal));
  }

  TEST_CASE("bad params") {
    Ctx K;
    auto lam = ints(K, {1, 2});
    CHECK_THROWS_AS(fine_twisted(lam, {3, 1, 0, {Cyc(K, 1)}, {}}), MathError);
    CHECK_THROWS_AS(fine_twisted(lam, {1, 2, 0, {Cyc(K, 1), Cyc(K, 3)}, {}}), MathError);
  }
}
