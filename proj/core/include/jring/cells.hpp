#pragma once

#include <string>
#include <vector>

#include <jring/kl.hpp>

namespace jring {

/// Left / right / two-sided cell partition of W, with per-left-cell
/// descent data and per-two-sided-cell a and a' values.
struct CellPartition {
  struct LeftCell {
    int two_sided = -1;
    std::vector<Elt> members;    // ascending ids
    std::uint32_t s_gamma = 0;   // common right-descent set
    Elt delta = 0;               // distinguished involution (set_deltas)
    bool has_delta = false;
  };
  struct TwoCell {
    int a = -1;        // common a-value (annotate_a)
    int a_prime = -1;  // a(x w0) for any member (annotate_a)
    std::vector<int> left_cells;  // ascending left-cell ids
    std::vector<Elt> members;     // ascending ids
  };

  std::vector<int> left_of;  // element -> left cell id
  std::vector<int> two_of;   // element -> two-sided cell id
  std::vector<LeftCell> left;
  std::vector<TwoCell> two;

  int right_of(const CoxeterGroup& W, Elt w) const { return left_of[W.inverse(w)]; }

  std::vector<std::vector<Elt>> left_cell_members() const {
    std::vector<std::vector<Elt>> out;
    out.reserve(left.size());
    for (const auto& c : left) out.push_back(c.members);
    return out;
  }

  /// Position of u inside its two-sided cell's member list.
  int index_in_two(Elt u) const;

  /// Gamma cap Gamma'^{-1}: members of left cell g whose inverses lie in g'.
  std::vector<Elt> block(const CoxeterGroup& W, int g, int gp) const;
};

/// Partitions W into cells from the generator rows of the product table.
/// Left cells are the strong components of the preorder generated by
/// w -> y whenever h_{s,w,y} != 0; two-sided cells add the inverted edges.
CellPartition cell_partition(HTable& h);

/// Fills in a and a' per two-sided cell; requires h.fill_all().
/// Throws structural_error if a is not constant on a cell or a' not
/// constant over x -> a(x w0).
void annotate_a(CellPartition& cells, HTable& h);

/// Records the distinguished involution of each left cell (exactly one
/// member of D per cell, structural_error otherwise).
void set_deltas(CellPartition& cells, const std::vector<Elt>& distinguished);

std::string dump_cells_json(const CoxeterGroup& W, const CellPartition& cells);

}  // namespace jring
