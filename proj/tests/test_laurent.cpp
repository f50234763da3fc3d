#include "doctest.h"
#include "oracles.hpp"
#include "rimforge/laurent.hpp"

using namespace rimforge;

TEST_CASE("laurent arithmetic") {
  LaurentPoly t = LaurentPoly::monomial(1, 1);
  LaurentPoly one(Int(1));
  LaurentPoly f = t * t - t + one;  // t^2 - t + 1
  CHECK(f.to_string() == "1 - t + t^2");
  CHECK(f.evaluate(1) == 1);
  CHECK(f.evaluate(-1) == 3);
  CHECK((f * f).evaluate(-1) == 9);
  CHECK(f.reversed().to_string() == "t^-2 - t^-1 + 1");
  CHECK((f - f).zero());
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly::monomial(2, -1).to_string() == "2*t^-1");
  CHECK(f.pow(2) == f * f);
}

TEST_CASE("exact division") {
  LaurentPoly t = LaurentPoly::monomial(1, 1);
  LaurentPoly one(Int(1));
  LaurentPoly f = (t * t - one) * (t + one);
  CHECK(f.divided_exact(t + one) == t * t - one);
  CHECK_THROWS_AS((t * t + one).divided_exact(t + one), error);
  // division by a unit monomial shifts
  CHECK(f.divided_exact(LaurentPoly::monomial(1, 2)) == f.shifted(-2));
}

TEST_CASE("normal form") {
  LaurentPoly t = LaurentPoly::monomial(1, 1);
  LaurentPoly one(Int(1));
  LaurentPoly f = t * t - t + one;
  // invariance under multiplication by -t^k
  AlexNormalForm a = AlexNormalForm::normalize(f);
  AlexNormalForm b = AlexNormalForm::normalize(-f.shifted(-3));
  CHECK(a == b);
  CHECK(a.poly == f);
  CHECK(a.palindromic);
  AlexNormalForm c = AlexNormalForm::normalize(t - LaurentPoly(Int(2)));
  CHECK(!c.palindromic);
  CHECK(a.coefficient_multiset() == std::vector<Int>{-1, 1, 1});
}

TEST_CASE("integer determinants by Bareiss") {
  CHECK(integer_determinant({}) == 1);
  CHECK(integer_determinant({{5}}) == 5);
  CHECK(integer_determinant({{1, 2}, {3, 4}}) == -2);
  CHECK(integer_determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(integer_determinant({{2, 0, 1}, {0, 0, 3}, {1, 1, 1}}) == -6);
  CHECK(integer_determinant({{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("laurent determinants: unit pivots plus Bareiss") {
  LaurentPoly t = LaurentPoly::monomial(1, 1);
  LaurentPoly one(Int(1));
  // 2x2 with a unit pivot
  std::vector<std::vector<LaurentPoly>> m{{t, one}, {one - t, t * t}};
  // det = t^3 - (1 - t) = t^3 + t - 1
  CHECK(laurent_determinant(m) == t.pow(3) + t - one);
  // dense without unit monomials
  LaurentPoly a = t + one, b = t - one;
  std::vector<std::vector<LaurentPoly>> m2{{a * a, a * b}, {a * b, b * b}};
  CHECK(laurent_determinant(m2).zero());
  std::vector<std::vector<LaurentPoly>> m3{{a + one, b}, {b, a}};
  CHECK(laurent_determinant(m3) == (a + one) * a - b * b);
  CHECK(laurent_determinant({}) == one);
}

TEST_CASE("cyclotomic resultants match the Sylvester oracle") {
  LaurentPoly t = LaurentPoly::monomial(1, 1);
  LaurentPoly one(Int(1));
  LaurentPoly tref = t * t - t + one;
  LaurentPoly fig8 = t * t - LaurentPoly(Int(3)) * t + one;
  for (int d = 2; d <= 6; ++d) {
    CHECK(cyclotomic_resultant_magnitude(tref, d) ==
          oracles::sylvester_resultant_magnitude(tref, d));
    CHECK(cyclotomic_resultant_magnitude(fig8, d) ==
          oracles::sylvester_resultant_magnitude(fig8, d));
  }
  // frozen small values: trefoil covers 3, 4, 3, 1; infinite at d = 6
  CHECK(cyclotomic_resultant_magnitude(tref, 2) == 3);
  CHECK(cyclotomic_resultant_magnitude(tref, 3) == 4);
  CHECK(cyclotomic_resultant_magnitude(tref, 4) == 3);
  CHECK(cyclotomic_resultant_magnitude(tref, 5) == 1);
  CHECK(cyclotomic_resultant_magnitude(tref, 6) == 0);
  // figure-eight: 5, 16, 45, 121, 320
  CHECK(cyclotomic_resultant_magnitude(fig8, 2) == 5);
  CHECK(cyclotomic_resultant_magnitude(fig8, 3) == 16);
  CHECK(cyclotomic_resultant_magnitude(fig8, 4) == 45);
  CHECK(cyclotomic_resultant_magnitude(fig8, 5) == 121);
  CHECK(cyclotomic_resultant_magnitude(fig8, 6) == 320);
}

TEST_CASE("torus-knot polynomial formula oracle") {
  LaurentPoly d35 = oracles::torus_alexander(3, 5);
  // 1 - t + t^3 - t^4 + t^5 - t^7 + t^8
  CHECK(d35.to_string() == "1 - t + t^3 - t^4 + t^5 - t^7 + t^8");
  CHECK(d35.evaluate(-1) == 1);
  LaurentPoly d23 = oracles::torus_alexander(2, 3);
  CHECK(d23.to_string() == "1 - t + t^2");
}
