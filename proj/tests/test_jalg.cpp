#include <doctest.h>

#include <random>

#include <jring/jalg.hpp>

using namespace jring;

namespace {

struct Ctx {
  CoxeterGroup W;
  KLTable kl;
  HTable h;
  CellPartition cells;
  GammaTable gt;
  explicit Ctx(const std::string& label)
      : W(CartanDatum::parse(label)), kl(W), h(kl), cells(cell_partition(h)), gt(h) {
    gt.find_distinguished(cells.left_cell_members());
    set_deltas(cells, gt.distinguished());
    annotate_a(cells, h);
  }
};

JElt t(Elt x) { return JElt{{x, Rational(1)}}; }

// t-basis product with Laurent coefficients, for the generic-v map.
std::map<Elt, LaurentPoly> jl_mul(const GammaTable& gt,
                                  const std::map<Elt, LaurentPoly>& a,
                                  const std::map<Elt, LaurentPoly>& b) {
  std::map<Elt, LaurentPoly> out;
  for (const auto& [x, px] : a)
    for (const auto& [y, py] : b) {
      const auto* row = gt.product(x, y);
      if (!row) continue;
      LaurentPoly c = px * py;
      for (const auto& [z, g] : *row) {
        auto [it, fresh] = out.try_emplace(z, c * Int(g));
        if (!fresh) {
          it->second += c * Int(g);
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
  return out;
}

}  // namespace

TEST_CASE("t-basis products") {
  Ctx c("A1");
  CHECK(j_mul(c.gt, t(1), t(1)) == t(1));  // t_s t_s = t_s

  Ctx a2("A2");
  // cross-cell products vanish
  for (Elt x = 0; x < a2.W.size(); ++x)
    for (Elt y = 0; y < a2.W.size(); ++y)
      if (a2.cells.two_of[x] != a2.cells.two_of[y])
        CHECK(j_mul(a2.gt, t(x), t(y)).empty());
  // global unit
  JElt unit;
  for (Elt d : a2.gt.distinguished()) unit[d] = 1;
  for (Elt x = 0; x < a2.W.size(); ++x) {
    CHECK(j_mul(a2.gt, unit, t(x)) == t(x));
    CHECK(j_mul(a2.gt, t(x), unit) == t(x));
  }
}

TEST_CASE("cell units") {
  Ctx a1("A1");
  CHECK(unit_of_cell(a1.gt, a1.cells, a1.cells.two_of[1]) == t(1));
  CHECK(unit_of_cell(a1.gt, a1.cells, a1.cells.two_of[0]) == t(0));

  Ctx a2("A2");
  Elt s1 = a2.W.left_mul(0, 0), s2 = a2.W.left_mul(1, 0);
  JElt mid = unit_of_cell(a2.gt, a2.cells, a2.cells.two_of[s1]);
  CHECK(mid == JElt{{s1, Rational(1)}, {s2, Rational(1)}});
}

TEST_CASE("theta antiautomorphism") {
  Ctx a2("A2");
  const CoxeterGroup& W = a2.W;
  Elt s1s2 = W.mul(W.left_mul(0, 0), W.left_mul(1, 0));
  CHECK(j_theta(W, t(s1s2)) == t(W.inverse(s1s2)));
  const auto& mid = a2.cells.two[a2.cells.two_of[W.left_mul(0, 0)]].members;
  for (Elt x : mid)
    for (Elt y : mid) {
      JElt lhs = j_theta(W, j_mul(a2.gt, t(x), t(y)));
      JElt rhs = j_mul(a2.gt, j_theta(W, t(y)), j_theta(W, t(x)));
      CHECK(lhs == rhs);
      CHECK(j_theta(W, j_theta(W, t(x))) == t(x));
    }
}

TEST_CASE("specialization map on A1 matches the known values") {
  Ctx c("A1");
  PsiData psi = PsiData::build(c.h, c.gt, c.cells);
  // images of c_1 and c_s
  CHECK(psi.psi_c[0][0] == 1);
  CHECK(psi.psi_c[1][0] == 1);
  CHECK(psi.psi_c[0][1] == 0);
  CHECK(psi.psi_c[1][1] == 2);
  // images of group elements 1 and s
  CHECK(psi.psi_g[0][0] == 1);
  CHECK(psi.psi_g[1][0] == 1);
  CHECK(psi.psi_g[0][1] == -1);
  CHECK(psi.psi_g[1][1] == 1);
}

TEST_CASE("specialization is a ring homomorphism") {
  for (const char* label : {"A2", "B2", "G2"}) {
    Ctx c(label);
    PsiData psi = PsiData::build(c.h, c.gt, c.cells);
    const Elt n = c.W.size();
    auto column = [&](Elt w) {
      JElt out;
      for (Elt z = 0; z < n; ++z)
        if (psi.psi_g[z][w] != 0) out[z] = Rational(psi.psi_g[z][w]);
      return out;
    };
    // the identity goes to the global unit
    JElt unit;
    for (Elt d : c.gt.distinguished()) unit[d] = 1;
    CHECK(column(0) == unit);
    for (Elt x = 0; x < n; ++x)
      for (Elt y = 0; y < n; ++y)
        CHECK(j_mul(c.gt, column(x), column(y)) == column(c.W.mul(x, y)));
  }
}

TEST_CASE("transported traces solve the transpose system") {
  Ctx c("A2");
  PsiData psi = PsiData::build(c.h, c.gt, c.cells);
  const Elt n = c.W.size();
  std::vector<std::vector<Rational>> chi(1, std::vector<Rational>(n));
  for (Elt w = 0; w < n; ++w) chi[0][w] = Rational(1);  // trivial character
  auto xs = psi.transport_traces(chi);
  for (Elt w = 0; w < n; ++w) {
    Rational acc = 0;
    for (Elt z = 0; z < n; ++z) acc += Rational(psi.psi_g[z][w]) * xs[0][z];
    CHECK(acc == chi[0][w]);
  }
}

TEST_CASE("generic-v coefficients") {
  Ctx c("A1");
  auto m = psi_coeffs(c.h, c.gt, c.cells, 1);
  REQUIRE(m.size() == 1);
  CHECK(m.at(1) == LaurentPoly(-1, {1, 0, 1}));
  auto u = psi_coeffs(c.h, c.gt, c.cells, 0);
  CHECK(u == std::map<Elt, LaurentPoly>{{0, LaurentPoly::constant(1)},
                                        {1, LaurentPoly::constant(1)}});
}

TEST_CASE("generic-v map is multiplicative") {
  for (const char* label : {"B2", "A3"}) {
    Ctx c(label);
    const Elt n = c.W.size();
    std::vector<std::map<Elt, LaurentPoly>> psis(n);
    for (Elt x = 0; x < n; ++x) psis[x] = psi_coeffs(c.h, c.gt, c.cells, x);

    std::mt19937 rng(42);
    std::uniform_int_distribution<Elt> pick(0, n - 1);
    int pairs = n <= 8 ? 0 : 120;  // full scan for small n
    auto check_pair = [&](Elt x, Elt y) {
      auto lhs = jl_mul(c.gt, psis[x], psis[y]);
      std::map<Elt, LaurentPoly> rhs;
      for (const auto& [z, hp] : c.h.c_product(x, y))
        for (const auto& [u, pu] : psis[z]) {
          auto [it, fresh] = rhs.try_emplace(u, hp * pu);
          if (!fresh) {
            it->second += hp * pu;
            if (it->second.is_zero()) rhs.erase(it);
          }
        }
      CHECK(lhs == rhs);
    };
    if (pairs == 0) {
      for (Elt x = 0; x < n; ++x)
        for (Elt y = 0; y < n; ++y) check_pair(x, y);
    } else {
      for (int i = 0; i < pairs; ++i) check_pair(pick(rng), pick(rng));
    }
    // specializing at v = 1 reproduces the v=1 matrix
    PsiData psi = PsiData::build(c.h, c.gt, c.cells);
    for (Elt x = 0; x < n; ++x) {
      std::vector<Int> col(n, Int(0));
      for (const auto& [z, p] : psis[x]) col[z] = p.eval_one();
      for (Elt z = 0; z < n; ++z) CHECK(col[z] == psi.psi_c[z][x]);
    }
  }
}

TEST_CASE("block structure of the t-basis product") {
  Ctx c("B2");
  for (const auto& tc : c.cells.two)
    for (Elt x : tc.members)
      for (Elt y : tc.members)
        for (const auto& [z, coeff] : j_mul(c.gt, t(x), t(y))) {
          (void)coeff;
          CHECK(c.cells.two_of[z] == c.cells.two_of[x]);
        }
}
