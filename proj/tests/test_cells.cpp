#include <doctest.h>

#include <json.hpp>

#include <jring/cells.hpp>

using namespace jring;

namespace {

struct Ctx {
  CoxeterGroup W;
  KLTable kl;
  HTable h;
  CellPartition cells;
  explicit Ctx(const std::string& label)
      : W(CartanDatum::parse(label)), kl(W), h(kl), cells(cell_partition(h)) {}
};

}  // namespace

TEST_CASE("cells of A1") {
  Ctx c("A1");
  CHECK(c.cells.left.size() == 2);
  CHECK(c.cells.two.size() == 2);
  CHECK(c.cells.left[0].members == std::vector<Elt>{0});
  CHECK(c.cells.left[1].members == std::vector<Elt>{1});
}

TEST_CASE("cells of A2") {
  Ctx c("A2");
  const CoxeterGroup& W = c.W;
  REQUIRE(c.cells.left.size() == 4);
  REQUIRE(c.cells.two.size() == 3);

  Elt s1 = W.left_mul(0, 0), s2 = W.left_mul(1, 0);
  Elt s2s1 = W.mul(s2, s1), s1s2 = W.mul(s1, s2);
  CHECK(c.cells.left_of[s1] == c.cells.left_of[s2s1]);
  CHECK(c.cells.left_of[s2] == c.cells.left_of[s1s2]);
  CHECK(c.cells.left_of[s1] != c.cells.left_of[s2]);
  CHECK(c.cells.left_of[0] != c.cells.left_of[s1]);
  CHECK(c.cells.left_of[W.w0()] != c.cells.left_of[s1]);

  // two-sided: {e}, middle of 4, {w0}
  CHECK(c.cells.two[c.cells.two_of[0]].members == std::vector<Elt>{0});
  CHECK(c.cells.two[c.cells.two_of[W.w0()]].members == std::vector<Elt>{W.w0()});
  CHECK(c.cells.two[c.cells.two_of[s1]].members.size() == 4);
  CHECK(c.cells.two[c.cells.two_of[s1]].left_cells.size() == 2);
}

TEST_CASE("identity is always its own two-sided cell") {
  for (const char* label : {"A1", "A2", "B2", "B3", "G2"}) {
    Ctx c(label);
    CHECK(c.cells.two[c.cells.two_of[0]].members == std::vector<Elt>{0});
  }
}

TEST_CASE("s_gamma per left cell in A2") {
  Ctx c("A2");
  const CoxeterGroup& W = c.W;
  CHECK(c.cells.left[c.cells.left_of[0]].s_gamma == 0u);
  CHECK(c.cells.left[c.cells.left_of[W.w0()]].s_gamma == 3u);
  Elt s1 = W.left_mul(0, 0);
  CHECK(c.cells.left[c.cells.left_of[s1]].s_gamma == 1u);
}

TEST_CASE("a and a_prime per two-sided cell in A2") {
  Ctx c("A2");
  annotate_a(c.cells, c.h);
  const CoxeterGroup& W = c.W;
  const auto& te = c.cells.two[c.cells.two_of[0]];
  CHECK(te.a == 0);
  CHECK(te.a_prime == 3);
  const auto& tw0 = c.cells.two[c.cells.two_of[W.w0()]];
  CHECK(tw0.a == 4 - 1);  // a(w0) = l(w0) = 3
  CHECK(tw0.a_prime == 0);
  const auto& mid = c.cells.two[c.cells.two_of[W.left_mul(0, 0)]];
  CHECK(mid.a == 1);
  CHECK(mid.a_prime == 1);
}

TEST_CASE("left cell relation matches gamma support (2.1(c))") {
  for (const char* label : {"A2", "B2", "G2"}) {
    Ctx c(label);
    GammaTable gt(c.h);
    for (Elt y = 0; y < c.W.size(); ++y)
      for (Elt z = 0; z < c.W.size(); ++z) {
        bool same_left = c.cells.left_of[y] == c.cells.left_of[z];
        bool nonzero = gt.product(y, c.W.inverse(z)) != nullptr;
        CHECK(same_left == nonzero);
      }
  }
}

TEST_CASE("right cells through inversion; blocks nonempty") {
  Ctx c("B2");
  const CoxeterGroup& W = c.W;
  for (Elt w = 0; w < W.size(); ++w)
    CHECK(c.cells.right_of(W, w) == c.cells.left_of[W.inverse(w)]);
  for (const auto& tc : c.cells.two)
    for (int g : tc.left_cells)
      for (int gp : tc.left_cells) CHECK(!c.cells.block(W, g, gp).empty());
}

TEST_CASE("deltas live in their cells") {
  Ctx c("B2");
  GammaTable gt(c.h);
  auto d = gt.find_distinguished(c.cells.left_cell_members());
  set_deltas(c.cells, d);
  for (size_t g = 0; g < c.cells.left.size(); ++g) {
    const auto& lc = c.cells.left[g];
    REQUIRE(lc.has_delta);
    CHECK(c.cells.left_of[lc.delta] == static_cast<int>(g));
    CHECK(c.W.inverse(lc.delta) == lc.delta);
  }
}

TEST_CASE("cells dump parses") {
  Ctx c("A2");
  annotate_a(c.cells, c.h);
  GammaTable gt(c.h);
  set_deltas(c.cells, gt.find_distinguished(c.cells.left_cell_members()));
  auto doc = nlohmann::json::parse(dump_cells_json(c.W, c.cells));
  CHECK(doc["left_cells"].size() == 4);
  CHECK(doc["two_sided_cells"].size() == 3);
}
