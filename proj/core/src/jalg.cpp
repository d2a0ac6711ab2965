#include "jring/jalg.hpp"

#include "jring/errors.hpp"

namespace jring {

JElt j_mul(const GammaTable& gt, const JElt& a, const JElt& b) {
  JElt out;
  for (const auto& [x, ax] : a)
    for (const auto& [y, by] : b) {
      const auto* row = gt.product(x, y);
      if (!row) continue;
      Rational c = ax * by;
      for (const auto& [z, g] : *row) {
        Rational& v = out[z];
        v += c * g;
        if (v == 0) out.erase(z);
      }
    }
  return out;
}

JElt j_theta(const CoxeterGroup& W, const JElt& a) {
  JElt out;
  for (const auto& [x, c] : a) out[W.inverse(x)] = c;
  return out;
}

JElt unit_of_cell(const GammaTable& gt, const CellPartition& cells, int two_cell) {
  JElt u;
  for (Elt d : gt.distinguished())
    if (cells.two_of[d] == two_cell) u[d] = 1;
  // exact two-sided unit check on the block
  for (Elt x : cells.two[two_cell].members) {
    JElt tx{{x, Rational(1)}};
    if (j_mul(gt, u, tx) != tx || j_mul(gt, tx, u) != tx)
      throw structural_error("cell unit fails the unit property");
  }
  return u;
}

PsiData PsiData::build(HTable& h, const GammaTable& gt, const CellPartition& cells) {
  const CoxeterGroup& W = h.group();
  const Elt n = W.size();
  PsiData out;
  out.psi_c.assign(n, std::vector<Int>(n, Int(0)));
  out.psi_g.assign(n, std::vector<Int>(n, Int(0)));

  for (Elt x = 0; x < n; ++x)
    for (Elt d : gt.distinguished())
      for (const auto& [z, hp] : h.c_product(x, d))
        if (cells.left_of[z] == cells.left_of[d]) out.psi_c[z][x] += hp.eval_one();

  // Images of group elements by triangular inversion of the v=1 basis
  // change: c_w|_{v=1} = sum_{y<=w} P_{y,w}(1) y with unitriangular matrix.
  KLTable& kl = h.kl();
  for (Elt w = 0; w < n; ++w) {
    std::vector<Int> col(n, Int(0));
    for (Elt z = 0; z < n; ++z) col[z] = out.psi_c[z][w];
    for (Elt y = 0; y < w; ++y) {
      if (!W.bruhat_leq(y, w)) continue;
      Int p1 = kl.kl_poly(y, w).eval_one();
      if (p1 == 0) continue;
      for (Elt z = 0; z < n; ++z) col[z] -= p1 * out.psi_g[z][y];
    }
    for (Elt z = 0; z < n; ++z) out.psi_g[z][w] = std::move(col[z]);
  }
  return out;
}

std::vector<std::vector<Rational>> PsiData::transport_traces(
    const std::vector<std::vector<Rational>>& chis) const {
  const size_t n = psi_g.size();
  const size_t k = chis.size();
  // Augmented Gaussian elimination on psi_g^T with k right-hand sides.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + k));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rational(psi_g[j][i]);
    for (size_t j = 0; j < k; ++j) a[i][n + j] = chis[j][i];
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw structural_error("specialization matrix is singular");
    std::swap(a[col], a[piv]);
    Rational d = a[col][col];
    for (size_t j = col; j < n + k; ++j) a[col][j] /= d;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (size_t j = col; j < n + k; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> xs(k, std::vector<Rational>(n));
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < n; ++i) xs[j][i] = a[i][n + j];
  return xs;
}

std::map<Elt, LaurentPoly> psi_coeffs(HTable& h, const GammaTable& gt,
                                      const CellPartition& cells, Elt x) {
  std::map<Elt, LaurentPoly> out;
  for (Elt d : gt.distinguished())
    for (const auto& [z, hp] : h.c_product(x, d))
      if (cells.left_of[z] == cells.left_of[d]) {
        auto [it, fresh] = out.try_emplace(z, hp);
        if (!fresh) it->second += hp;
      }
  return out;
}

}  // namespace jring
