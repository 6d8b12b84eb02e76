#include <doctest.h>

#include <random>

#include "hg/liealg.hpp"

using namespace hg;

TEST_SUITE("liealg") {
  TEST_CASE("heisenberg") {
    Algebra A = heisenberg(3);
    CHECK(A.dim == 7);
    CHECK(verify_axioms(A).ok);
    auto Z = center(A);
    REQUIRE(Z.size() == 1);
    CHECK(Z[0] == A.unit(6));
    CHECK(derived(A).size() == 1);
  }

  TEST_CASE("super heisenberg") {
    Algebra A = heisenberg_super(1, 3);
    CHECK(A.dim == 6);
    CHECK(A.is_super());
    CHECK(verify_axioms(A).ok);
    CHECK(A.bracket(A.unit(3), A.unit(3)) == A.unit(2));
  }

  TEST_CASE("twisted") {
    auto K = ctx_new(4);
    Algebra A = twisted({Cyc(K, 1), imag_unit(K)});
    CHECK(A.dim == 6);
    CHECK(verify_axioms(A).ok);
    CHECK(center(A).size() == 1);
    int u = A.index("u"), e2 = A.index("e2"), eh2 = A.index("eh2");
    CHECK(A.basis_bracket(u, e2) == scale(imag_unit(K), A.unit(eh2)));
  }

  TEST_CASE("broken tables are caught") {
    Algebra A = heisenberg(1);
    A.set(0, 1, A.unit(2));
    A.set(1, 0, A.unit(2));
    auto r = verify_axioms(A);
    CHECK(!r.ok);
    CHECK(r.failure == "skew");
    Algebra B(ctx_new(1), {"a", "b", "c"}, {0, 0, 0});
    B.set_pair(0, 1, B.unit(2));
    B.set_pair(1, 2, B.unit(0));
    B.set_pair(0, 2, B.unit(0));
    auto s = verify_axioms(B);
    CHECK(!s.ok);
    CHECK(s.failure == "jacobi");
  }

  TEST_CASE("automorphisms") {
    auto K = ctx_new(4);
    Algebra A = twisted({Cyc(K, 1), Cyc(K, 2)});
    Mat e = exp_ad(A, A.unit(A.index("e1")));
    CHECK(is_automorphism(e, A));
    auto f = similitude_factor(e, A);
    REQUIRE(f);
    CHECK(f->is_one());
    Mat s = Mat::identity(K, A.dim);
    s(0, 0) = Cyc(K, 2);
    CHECK(!is_automorphism(s, A));
  }

  TEST_CASE("random automorphisms") {
    auto K = ctx_new(16);
    std::vector<Algebra> algs{heisenberg(2), heisenberg_super(1, 3), heisenberg_super(2, 2),
                              twisted({Cyc(K, 1), Cyc(K, 2)}), twisted({Cyc(K, 1), Cyc(K, -3)})};
    std::mt19937_64 rng(5);
    for (auto& A : algs)
      for (int t = 0; t < 20; ++t) CHECK(is_automorphism(random_automorphism(A, rng), A));
  }
}
