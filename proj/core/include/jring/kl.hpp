#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include <jring/coxeter.hpp>
#include <jring/laurent.hpp>

namespace jring {

/// Hecke algebra element in the T-basis: sparse map with no zero values.
using HeckeElt = std::map<Elt, LaurentPoly>;

/// One c-basis product row: c_x c_y = sum_z h_{x,y,z} c_z, sorted by z,
/// zero h's omitted.
using HRow = std::vector<std::pair<Elt, LaurentPoly>>;

/// Kazhdan-Lusztig polynomials P_{y,w} (in q = v^2), mu values, and the
/// c-basis elements c_w = v^{-l(w)} sum_y P_{y,w}(v^2) T_y.
class KLTable {
 public:
  explicit KLTable(const CoxeterGroup& W) : W_(W) {}

  const CoxeterGroup& group() const { return W_; }

  /// P_{y,w} as a polynomial in q; zero unless y <= w.
  const LaurentPoly& kl_poly(Elt y, Elt w);

  /// Symmetrized mu: top-degree coefficient of P for the comparable order,
  /// zero for incomparable pairs or even length difference.
  long mu(Elt y, Elt w);

  const HeckeElt& c_elt(Elt w);

  // T-basis arithmetic.
  HeckeElt t_mul_gen(const HeckeElt& a, int s) const;  // a * T_s
  HeckeElt t_mul(const HeckeElt& a, const HeckeElt& b) const;

 private:
  const CoxeterGroup& W_;
  // node-based map: references stay valid across later insertions
  std::map<std::uint64_t, LaurentPoly> p_;
  std::vector<HeckeElt> c_;
  std::vector<std::uint8_t> c_done_;
};

/// Cache of c-basis products and the a-function data derived from them.
class HTable {
 public:
  explicit HTable(KLTable& kl) : kl_(kl) {}

  KLTable& kl() { return kl_; }
  const CoxeterGroup& group() const { return kl_.group(); }

  /// h_{x,y,*} row, computed on demand and cached. Every coefficient is
  /// checked nonnegative (structural_error on violation).
  const HRow& c_product(Elt x, Elt y);

  /// Runs the complete (x,y) scan and computes a-values.
  void fill_all();
  bool filled() const { return filled_; }

  /// a(z): maximal v-degree of h_{x,y,z} over all x,y. Requires fill_all().
  int a_value(Elt z) const;
  const std::vector<int>& a_values() const { return a_; }

  /// gamma_{x,y,z}: coefficient of v^{a(z^{-1})} in h_{x,y,z^{-1}}.
  long gamma(Elt x, Elt y, Elt z);

 private:
  KLTable& kl_;
  std::map<std::uint64_t, HRow> rows_;
  std::vector<int> a_;
  bool filled_ = false;
};

/// The structure constants of the asymptotic ring in product form:
/// t_x t_y = sum_z gamma_{x,y,z^{-1}} t_z, nonzero rows only.
class GammaTable {
 public:
  /// Requires H.fill_all() already done.
  explicit GammaTable(HTable& h);

  const CoxeterGroup& group() const { return W_; }

  /// Product row of t_x t_y, or nullptr when the product vanishes.
  const std::vector<std::pair<Elt, long>>* product(Elt x, Elt y) const;

  long gamma(Elt x, Elt y, Elt u) const;

  const std::vector<int>& a_values() const { return a_; }
  int a_value(Elt z) const { return a_[z]; }

  /// All stored triples as (x, y, z, gamma_{x,y,z^{-1}})).
  template <typename F>
  void for_each_product(F&& f) const {
    for (const auto& [key, row] : prod_)
      for (const auto& [z, g] : row)
        f(static_cast<Elt>(key >> 32), static_cast<Elt>(key & 0xffffffffu), z, g);
  }

  /// Finds the distinguished involutions, one per left cell: the unique
  /// d with gamma_{x^{-1},x,d} != 0 for every x in the cell. Asserts
  /// gamma = 1, d an involution, and the two-sided unit property of
  /// sum_d t_d. Returns D sorted; also retained in distinguished().
  const std::vector<Elt>& find_distinguished(const std::vector<std::vector<Elt>>& left_cells);

  const std::vector<Elt>& distinguished() const { return dist_; }
  bool is_distinguished(Elt w) const { return is_dist_[w]; }

 private:
  const CoxeterGroup& W_;
  std::unordered_map<std::uint64_t, std::vector<std::pair<Elt, long>>> prod_;
  std::vector<int> a_;
  std::vector<Elt> dist_;
  std::vector<std::uint8_t> is_dist_;
};

}  // namespace jring
