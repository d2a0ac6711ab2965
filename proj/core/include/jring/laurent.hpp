#pragma once

#include <string>
#include <vector>

#include <jring/numeric.hpp>

namespace jring {

/// Integer Laurent polynomial in one indeterminate v.
///
/// Stored as a contiguous coefficient block starting at exponent `lowest`.
/// Canonical form: the zero polynomial has an empty coefficient vector;
/// nonzero polynomials have nonzero first and last coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int lowest, std::vector<Int> coeffs);

  static LaurentPoly constant(Int c) { return monomial(std::move(c), 0); }
  static LaurentPoly monomial(Int c, int k);

  bool is_zero() const { return c_.empty(); }
  int lowest() const;
  int highest() const;
  Int coeff(int k) const;
  Int top_coeff() const;

  /// Sum of all coefficients, i.e. the value at v = 1.
  Int eval_one() const;
  double eval(double v) const;
  bool nonnegative() const;

  LaurentPoly shifted(int k) const;    // multiply by v^k
  LaurentPoly stretched(int m) const;  // substitute v -> v^m

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const Int& s);
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& o) const = default;

  /// Renders as signed monomials "c*v^k" in ascending k, joined by " + ".
  /// The zero polynomial renders as "0". Stable across runs.
  std::string str() const;

 private:
  void trim();

  int lo_ = 0;
  std::vector<Int> c_;
};

}  // namespace jring
