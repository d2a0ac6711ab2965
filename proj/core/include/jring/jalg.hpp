#pragma once

#include <map>
#include <vector>

#include <jring/cells.hpp>
#include <jring/kl.hpp>
#include <jring/numeric.hpp>

namespace jring {

/// Element of the asymptotic ring in the t-basis; no zero values stored.
using JElt = std::map<Elt, Rational>;

JElt j_mul(const GammaTable& gt, const JElt& a, const JElt& b);

/// Antiautomorphism t_x -> t_{x^{-1}}.
JElt j_theta(const CoxeterGroup& W, const JElt& a);

/// sum of t_d over the distinguished involutions of one two-sided cell;
/// asserted to be a two-sided unit of that block.
JElt unit_of_cell(const GammaTable& gt, const CellPartition& cells, int two_cell);

/// The specialization homomorphism from the group algebra (v = 1) and its
/// generic-v coefficients.
///
/// psi_c[z][x] = coefficient of t_z in the image of c_x;
/// psi_g[z][x] = coefficient of t_z in the image of the group element x.
/// Both are exact integer matrices; psi_g is invertible over the rationals.
struct PsiData {
  std::vector<std::vector<Int>> psi_c;
  std::vector<std::vector<Int>> psi_g;

  static PsiData build(HTable& h, const GammaTable& gt, const CellPartition& cells);

  /// For each class function chi (indexed by element), solves for the
  /// trace vector x with x[z] = trace of t_z on the module transported
  /// through the inverse map: psi_g^T x = chi. Exact; throws
  /// structural_error if the matrix is singular.
  std::vector<std::vector<Rational>> transport_traces(
      const std::vector<std::vector<Rational>>& chis) const;
};

/// Generic-v image of c_x in the t-basis: z -> h_{x, delta(z), z} summed over
/// the distinguished involution of the left cell of z.
std::map<Elt, LaurentPoly> psi_coeffs(HTable& h, const GammaTable& gt,
                                      const CellPartition& cells, Elt x);

}  // namespace jring
