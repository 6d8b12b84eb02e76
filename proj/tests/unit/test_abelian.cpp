#include <doctest.h>

#include "hg/abelian.hpp"

using namespace hg;

static IntMat mat(std::vector<std::vector<long>> r) {
  IntMat m;
  for (auto& row : r) {
    IntVec v;
    for (long x : row) v.emplace_back(x);
    m.push_back(v);
  }
  return m;
}

TEST_SUITE("abelian") {
  TEST_CASE("smith normal form") {
    IntMat A = mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    SNF s = smith_normal_form(A);
    CHECK(int_matmul(int_matmul(s.U, A), s.V) == s.D);
    CHECK(s.D[0][0] == 2);
    CHECK(s.D[1][1] == 6);
    CHECK(s.D[2][2] == 12);
    CHECK(abs(int_det(s.U)) == 1);
    CHECK(abs(int_det(s.V)) == 1);
  }

  TEST_CASE("canonical form") {
    AbPresentation p{3, mat({{2, 0, 0}, {0, 3, 0}})};
    Group g = canonicalize(p);
    CHECK(g->str() == "Z x Z_6");
    AbPresentation q{2, mat({{1, -1}})};
    CHECK(canonicalize(q)->str() == "Z");
    AbPresentation t{1, mat({{1}})};
    CHECK(canonicalize(t)->str() == "0");
  }

  TEST_CASE("generator images respect relations") {
    AbPresentation p{4, mat({{1, 1, -1, 0}, {0, 2, 0, -2}, {4, 0, 0, 0}})};
    Group g = canonicalize(p);
    for (auto& rel : p.relations) CHECK(combine(g, rel).is_zero());
    CHECK(g->rank == 1);
    CHECK(g->str() == "Z x Z_2 x Z_4");
  }

  TEST_CASE("parse") {
    CHECK(parse_group("Z^2 x Z_2 x Z_4")->str() == "Z^2 x Z_2 x Z_4");
    CHECK(parse_group("Z_2 x Z_3")->str() == "Z_6");
    CHECK(parse_group("0")->is_trivial());
    CHECK(parse_group("Z_{4} x Z")->str() == "Z x Z_4");
    CHECK(parse_group("Z_2^3")->str() == "Z_2 x Z_2 x Z_2");
    CHECK_THROWS(parse_group("Q"));
  }

  TEST_CASE("elements") {
    Group g = make_group(1, {4});
    GroupElt a(g, {mpz_class(1), mpz_class(3)});
    GroupElt b(g, {mpz_class(-1), mpz_class(2)});
    CHECK((a + b).coords() == IntVec{0, 1});
    CHECK((a + b).order() == 4);
    CHECK(a.order() == std::nullopt);
    CHECK(a.times(4) == GroupElt(g, {mpz_class(4), mpz_class(0)}));
    Group h = make_group(1, {4});
    CHECK_THROWS(a + GroupElt::zero(h));
  }
}
