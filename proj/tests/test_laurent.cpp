#include <doctest.h>

#include <random>

#include <jring/laurent.hpp>

using jring::Int;
using jring::LaurentPoly;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 6), lo(-5, 5), coef(-9, 9);
  int n = len(rng);
  std::vector<Int> c;
  for (int i = 0; i < n; ++i) c.emplace_back(coef(rng));
  return LaurentPoly(lo(rng), std::move(c));
}

}  // namespace

TEST_CASE("laurent products") {
  LaurentPoly x(-1, {1, 0, 1});  // v^-1 + v
  CHECK(x * x == LaurentPoly(-2, {1, 0, 2, 0, 1}));
  CHECK((LaurentPoly() * x).is_zero());
  CHECK(LaurentPoly::monomial(1, -1) * LaurentPoly::monomial(1, 1) ==
        LaurentPoly::constant(1));
}

TEST_CASE("laurent coefficients and evaluation") {
  LaurentPoly x(-1, {1, 0, 1});
  CHECK(x.coeff(1) == 1);
  CHECK(x.coeff(0) == 0);
  CHECK(x.coeff(7) == 0);
  CHECK(x.eval_one() == 2);
  CHECK(LaurentPoly().eval_one() == 0);
  CHECK((x * x).eval_one() == 4);
}

TEST_CASE("laurent canonical form") {
  LaurentPoly z(3, {0, 0, 0});
  CHECK(z.is_zero());
  LaurentPoly t(-2, {0, 5, 0});
  CHECK(t.lowest() == -1);
  CHECK(t.highest() == -1);
  LaurentPoly s = LaurentPoly(0, {1, -1});
  CHECK((s + LaurentPoly(0, {-1, 1})).is_zero());
}

TEST_CASE("laurent ring properties on random triples") {
  std::mt19937 rng(20240817);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).eval_one() == a.eval_one() * b.eval_one());
    // coefficient sum agrees with evaluation at 1
    if (!a.is_zero()) {
      Int sum = 0;
      for (int k = a.lowest(); k <= a.highest(); ++k) sum += a.coeff(k);
      CHECK(sum == a.eval_one());
    }
  }
}

TEST_CASE("laurent shift and stretch") {
  LaurentPoly x(-1, {1, 0, 1});
  CHECK(x.shifted(2) == LaurentPoly(1, {1, 0, 1}));
  CHECK(LaurentPoly(0, {1, 2}).stretched(2) == LaurentPoly(0, {1, 0, 2}));
  CHECK(LaurentPoly().shifted(3).is_zero());
}

TEST_CASE("laurent text rendering is stable") {
  CHECK(LaurentPoly().str() == "0");
  CHECK(LaurentPoly(-1, {1, 0, 1}).str() == "1*v^-1 + 1*v^1");
  CHECK(LaurentPoly(0, {-3}).str() == "-3*v^0");
  CHECK(LaurentPoly(-2, {1, 0, 2, 0, 1}).str() == "1*v^-2 + 2*v^0 + 1*v^2");
}
