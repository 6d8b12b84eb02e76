#include <doctest.h>

#include "hg/scalars.hpp"

using namespace hg;

TEST_SUITE("scalars") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<Z>{-1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<Z>{1, 0, 1});
    CHECK(cyclotomic_poly(12) == std::vector<Z>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_poly(15).size() == 9);
  }

  TEST_CASE("field arithmetic") {
    auto K = ctx_new(12);
    Cyc z = zeta(K);
    CHECK(z.pow(12).is_one());
    CHECK(!z.pow(6).is_one());
    CHECK(z.pow(6) == Cyc(K, -1));
    Cyc a = z + Cyc(K, Q(1, 3)) * z.pow(5);
    CHECK((a * a.inv()).is_one());
    CHECK(a / a == Cyc(K, 1));
    CHECK((a - a).is_zero());
    Cyc i = imag_unit(K);
    CHECK(i * i == Cyc(K, -1));
  }

  TEST_CASE("square roots by the Gauss sum") {
    for (long l : {2L, 3L, 5L, 6L, 8L, 12L}) {
      long N = 4 * l;
      auto K = ctx_new(static_cast<int>(N));
      Cyc s = sqrt_int(l, K);
      CHECK(s * s == Cyc(K, l));
    }
    auto K = ctx_new(8);
    CHECK_THROWS_AS(sqrt_int(3, K), MathError);
  }

  TEST_CASE("roots of unity") {
    auto K = ctx_new(24);
    Cyc w = root_of_unity(K, 8, 3);
    CHECK(root_of_unity_order(w) == 8);
    CHECK(root_of_unity_order(Cyc(K, 2)) == std::nullopt);
    CHECK(root_of_unity_order(Cyc(K, -1)) == 2);
    auto e = root_of_unity_exponent(w);
    REQUIRE(e);
    CHECK(zeta_pow(K, *e) == w);
  }

  TEST_CASE("try_sqrt and try_root") {
    auto K = ctx_new(24);
    Cyc x = imag_unit(K) * Cyc(K, 9);
    auto r = try_sqrt(x);
    REQUIRE(r);
    CHECK(*r * *r == x);
    auto s = try_sqrt(Cyc(K, 6));
    REQUIRE(s);
    CHECK(*s * *s == Cyc(K, 6));
    CHECK(!try_root(root_of_unity(K, 3, 1), 3));
    auto t = try_root(root_of_unity(K, 8, 1) * Cyc(K, 8), 3);
    REQUIRE(t);
    CHECK(t->pow(3) == root_of_unity(K, 8, 1) * Cyc(K, 8));
    CHECK(!try_root(Cyc(K, 2), 3));
  }

  TEST_CASE("parse and print") {
    auto K = ctx_new(8);
    CHECK(parse_cyc("i", K) == imag_unit(K));
    CHECK(parse_cyc("zeta(4)", K) == imag_unit(K));
    CHECK(parse_cyc("-3/4", K) == Cyc(K, Q(-3, 4)));
    CHECK(parse_cyc("sqrt(2)^2", K) == Cyc(K, 2));
    CHECK(parse_cyc("(1+i)*(1-i)", K) == Cyc(K, 2));
    CHECK(parse_cyc(parse_cyc("zeta(8)^3", K).str(), K) == zeta_pow(K, 3));
    CHECK(Cyc(K, Q(5, 2)).str() == "5/2");
    CHECK(Cyc(K, -1).str() == "-1");
    CHECK(zeta_orders_lcm("zeta(3) + zeta(8)^2") == 24);
    CHECK(zeta_orders_lcm("1 + i") == 4);
    CHECK_THROWS(parse_cyc("zeta(3)", K));
    CHECK_THROWS(parse_cyc("1 +", K));
  }

  TEST_CASE("embedding") {
    auto K = ctx_new(4), L = ctx_new(12);
    Cyc i = imag_unit(K);
    CHECK(embed(i, L) == imag_unit(L));
  }
}
