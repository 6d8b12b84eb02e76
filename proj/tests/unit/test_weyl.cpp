#include <doctest.h>

#include "hg/weyl.hpp"

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

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("induced permutations") {
    Grading G = gamma_Hn(3);
    auto gens = generators_heisenberg(G, 3);
    const GradedAut& mu = gens.back();
    CHECK(mu.name == "mu1");
    CHECK(cycle_str(mu.perm, {"z", "e1", "eh1", "e2", "eh2", "e3", "eh3"}) == "(e1 eh1)");
    // the map has order 4, its class order 2
    Mat f = *mu.map;
    CHECK_FALSE(f * f == Mat::identity(f.ctx(), 7));
    CHECK(f * f * f * f == Mat::identity(f.ctx(), 7));
    CHECK(perm_compose(mu.perm, mu.perm) == Perm{0, 1, 2, 3, 4, 5, 6});

    const Ctx& K = G.alg->ctx;
    Mat t = Mat::identity(K, 7);
    t(0, 0) = Cyc(K, 2);
    t(1, 1) = Cyc(K, Q(1, 2));
    CHECK(induced_permutation(t, G).perm == Perm{0, 1, 2, 3, 4, 5, 6});

    Mat bad = Mat::identity(K, 7);
    bad(1, 0) = Cyc(K, 1);  // e1 -> e1 + eh1
    CHECK_THROWS_AS(induced_permutation(bad, G), MathError);
  }

  TEST_CASE("generator relations hold on permutations") {
    Grading G = gamma_Hn(3);
    auto gens = generators_heisenberg(G, 3);
    const Perm& s12 = gens[0].perm;
    const Perm& mu1 = gens.back().perm;
    // sigma mu_1 = mu_2 sigma for sigma = (1 2)
    Perm mu2 = perm_compose(perm_compose(s12, mu1), s12);
    CHECK(perm_compose(s12, mu1) == perm_compose(mu2, s12));
    CHECK(mu2 == Perm{0, 1, 2, 4, 3, 5, 6});
  }

  TEST_CASE("closure") {
    CHECK(closure({{1, 0}}, 2).order() == 2);
    CHECK(closure({{1, 2, 0}, {1, 0, 2}}, 3).order() == 6);
    CHECK(closure({}, 4).order() == 1);
  }

  TEST_CASE("heisenberg and super orders") {
    for (int k = 1; k <= 3; ++k) {
      auto w = weyl_heisenberg(k);
      CHECK(w.agree);
      CHECK(w.group.order() == weyl_order_heisenberg(k).get_ui());
    }
    auto w = weyl_super(1, 3, 1);
    CHECK(w.group.order() == 4);
    CHECK(w.agree);
  }

  TEST_CASE("pq split") {
    Ctx K;
    auto lam = ex1(K);
    Cyc one(K, 1), i = imag_unit(K);
    auto a = compute_pq(lam, {1, 4, 0, {one, one, i, i}, {}});
    CHECK(a.p == 4);
    CHECK(a.q == 2);
    auto b = compute_pq(lam, {2, 0, 4, {}, {one, one, i, i}});
    CHECK(b.p == 4);
    CHECK(b.q == 2);
    auto l2 = ints(K, {1, 2});
    auto c = compute_pq(l2, {1, 2, 0, {Cyc(K, 1), Cyc(K, 2)}, {}});
    CHECK(c.p == 1);
    CHECK(c.q == 1);
  }

  TEST_CASE("example orders") {
    Ctx K;
    auto lam = ex1(K);
    Cyc one(K, 1), i = imag_unit(K);
    auto g2 = weyl_twisted(fine_twisted(lam, {1, 4, 0, {one, one, i, i}, {}}));
    CHECK(g2.group.order() == 16);
    CHECK(g2.formula == 16);
    auto g1 = weyl_twisted(fine_twisted(lam, {2, 0, 4, {}, {one, one, i, i}}));
    CHECK(g1.group.order() == 128);
    CHECK(g1.formula == 128);
    auto d4 = weyl_twisted(fine_twisted(lam, {4, 1, 0, {one}, {}}));
    CHECK(d4.group.order() == 8);
    CHECK(d4.group.dihedral_pattern());
  }

  TEST_CASE("generic twisted") {
    Ctx K;
    auto lam = ints(K, {1, 2});
    auto E = enumerate_fine_twisted(lam);
    auto w2 = weyl_twisted(fine_twisted(lam, E.classes[0]));
    auto w1 = weyl_twisted(fine_twisted(lam, E.classes[1]));
    CHECK(w2.group.order() == 2);
    CHECK(w1.group.order() == 4);
    CHECK(weyl_bruteforce(fine_twisted(lam, E.classes[0]).grading).order() == 2);
    CHECK(weyl_bruteforce(gamma1(lam)).order() == 4);
  }

  TEST_CASE("every generator is a self-equivalence") {
    Ctx K;
    auto lam = ex1(K);
    for (auto& p : enumerate_fine_twisted(lam).param_types) {
      auto F = fine_twisted(lam, p);
      for (auto& g : generators_twisted(F)) {
        REQUIRE(g.map);
        CHECK(is_automorphism(*g.map, *F.grading.alg));
        CHECK(induced_permutation(*g.map, F.grading).perm == g.perm);
      }
    }
  }

  TEST_CASE("brute force matches closure on H_5") {
    auto w = weyl_heisenberg(2);
    auto b = weyl_bruteforce(gamma_Hn(2));
    CHECK(b.order() == 8);
    CHECK(b.elements == w.group.elements);
  }

  TEST_CASE("cap") {
    CHECK_THROWS_AS(weyl_bruteforce(gamma_Hn(6), 12), CapExceeded);
  }

  TEST_CASE("equivalence oracle") {
    Ctx K;
    auto lam = ex1(K);
    Cyc one(K, 1), i = imag_unit(K);
    auto a = fine_twisted(lam, {2, 1, 2, {i}, {one, one}});
    auto b = fine_twisted(lam, {2, 1, 2, {one}, {i, i}});
    auto c = fine_twisted(lam, {2, 2, 0, {one, i}, {}});
    CHECK(equivalence_oracle(a.grading, b.grading).has_value());
    CHECK_FALSE(equivalence_oracle(a.grading, c.grading).has_value());
  }
}
