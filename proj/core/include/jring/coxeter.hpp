#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <jring/errors.hpp>

namespace jring {

/// Dense element index into CoxeterGroup tables. Ids are ordered by
/// (length, ShortLex-minimal reduced word), so the identity is 0 and the
/// longest element comes last.
using Elt = std::uint32_t;

/// A type label resolved to a Coxeter matrix.
///
/// Supported labels: A1..., B2..., C2..., D3..., E6, F4, G2, H3, I2(m) with
/// m >= 3. B and C resolve to the same Coxeter matrix (same abstract group).
struct CartanDatum {
  std::string label;
  int rank = 0;
  std::vector<std::vector<int>> coxeter_matrix;  // m(s,s)=1, m(s,t)>=2
  std::uint64_t expected_order = 0;

  static CartanDatum parse(const std::string& label);
};

struct ConjClasses {
  std::vector<int> class_of;               // element -> class id
  std::vector<std::vector<Elt>> classes;   // sorted members, classes ordered by min member
  std::vector<Elt> reps;                   // minimal member of each class
};

/// A finite Coxeter group enumerated as permutations of its root system.
///
/// The reflection representation uses unit-norm simple roots with Gram
/// matrix B(a_s, a_t) = -cos(pi/m(s,t)); roots carry floating coordinates
/// in the simple-root basis, but group elements are interned as exact
/// permutations of the (finite) root list, so all table arithmetic is exact.
class CoxeterGroup {
 public:
  /// Enumerates the group. Throws size_error if the order exceeds `cap`,
  /// datum_error for an invalid datum, structural_error if the root
  /// permutation interning is ambiguous (separation check).
  explicit CoxeterGroup(CartanDatum datum, std::uint64_t cap = 1200);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }
  Elt size() const { return n_; }
  Elt identity() const { return 0; }
  Elt w0() const { return w0_; }

  int length(Elt w) const { return lengths_[w]; }
  Elt inverse(Elt w) const { return inv_[w]; }
  const std::vector<std::uint8_t>& word(Elt w) const { return words_[w]; }

  Elt left_mul(int s, Elt w) const { return left_cayley_[s][w]; }    // s*w
  Elt right_mul(Elt w, int s) const { return right_cayley_[s][w]; }  // w*s

  Elt mul(Elt x, Elt y) const;

  std::uint32_t right_descents(Elt w) const { return rdesc_[w]; }
  std::uint32_t left_descents(Elt w) const { return ldesc_[w]; }
  bool is_right_descent(Elt w, int s) const { return rdesc_[w] >> s & 1u; }
  bool is_left_descent(Elt w, int s) const { return ldesc_[w] >> s & 1u; }

  /// Bruhat order (subword order).
  bool bruhat_leq(Elt y, Elt w) const { return bruhat_[static_cast<size_t>(y) * n_ + w]; }

  int num_positive_roots() const { return n_pos_; }

  /// Trace of w in the reflection representation.
  double reflection_trace(Elt w) const;

  ConjClasses conjugacy_classes() const;

  /// JSON document describing the element table.
  std::string dump_json() const;

 private:
  void build_roots();
  void enumerate();
  void fill_bruhat();

  CartanDatum datum_;
  std::uint64_t cap_;
  Elt n_ = 0;
  Elt w0_ = 0;
  int n_pos_ = 0;

  std::vector<std::vector<double>> roots_;       // simple-basis coordinates
  std::vector<std::vector<double>> gram_;
  std::vector<int> simple_root_;                 // generator -> root index
  std::vector<std::vector<std::uint16_t>> gen_perm_;  // generator -> root permutation

  std::vector<int> lengths_;
  std::vector<Elt> inv_;
  std::vector<std::vector<std::uint8_t>> words_;
  std::vector<std::uint32_t> rdesc_, ldesc_;
  std::vector<std::vector<Elt>> left_cayley_, right_cayley_;  // [s][w]
  std::vector<std::vector<std::uint16_t>> simple_image_;      // [w][s] root index of w(a_s)
  std::vector<std::uint8_t> bruhat_;
};

}  // namespace jring
