#pragma once

#include <string>
#include <vector>

#include <jring/cells.hpp>
#include <jring/kl.hpp>

namespace jring {

struct PerronConfig {
  double residual_tol = 1e-12;  // power-iteration stop, ||Mv - lambda v||_inf
  long max_iters = 100000;
  double rel_tol = 1e-8;    // proportionality / consistency comparisons
  double trace_tol = 1e-10;
  double orth_tol = 1e-6;
};

/// Right multiplication by the diagonal-block sum, restricted to one block:
/// column x holds the image of t_x expanded over the block basis.
struct TransferMatrix {
  int base = -1;  // left-cell id Gamma
  int line = -1;  // left-cell id Gamma'
  std::vector<Elt> index;              // Gamma cap Gamma'^{-1}, ascending
  std::vector<std::vector<long>> m;    // m[row z][col x]
};

/// Builds the transfer matrix; throws structural_error on any entry < 1.
TransferMatrix transfer_matrix(const GammaTable& gt, const CellPartition& cells,
                               int base, int line);

struct PerronLine {
  std::vector<double> vec;  // strictly positive, max entry 1
  double eigenvalue = 0;
  double residual = 0;
  long iters = 0;
};

/// Power iteration from the all-ones vector (or `start`).
PerronLine perron_line(const std::vector<std::vector<long>>& m, const PerronConfig& cfg,
                       const std::vector<double>* start = nullptr);

/// The distinguished submodule assembled from one Perron line per block.
///
/// On the exact path (all-ones vectors exactly stationary in every block,
/// an integer check) the basis and the whole action table are integers.
struct SpecialModule {
  int two_cell = -1;
  int base = -1;             // left-cell id Gamma
  std::vector<int> lines;    // left-cell ids Gamma' in ascending order
  std::vector<std::vector<Elt>> support;   // per line
  std::vector<std::vector<double>> basis;  // per line; max entry 1 (float path)
  std::vector<std::vector<long>> basis_exact;  // per line; set iff exact
  bool exact = false;
  std::vector<double> residuals;
  std::vector<double> eigenvalues;

  // action constants, indexed by position of u in cells.two[c].members
  std::vector<double> lambda;
  std::vector<long> lambda_exact;  // set iff exact
  double lambda_dev = 0;           // worst consistency deviation seen

  int line_index(int left_cell) const;
};

SpecialModule special_module(const GammaTable& gt, const CellPartition& cells,
                             int base, const PerronConfig& cfg);

/// Trace of the t_u action; zero off the diagonal blocks.
double module_trace(const CoxeterGroup& W, const SpecialModule& m,
                    const CellPartition& cells, Elt u);

/// Traces of all t_u, indexed like cells.two[c].members.
std::vector<double> trace_vector(const CoxeterGroup& W, const SpecialModule& m,
                                 const CellPartition& cells);

/// sum over u in the cell of trA(u) * trB(u^{-1}).
double orthogonality_sum(const CoxeterGroup& W, const CellPartition& cells, int two_cell,
                         const std::vector<double>& tr_a, const std::vector<double>& tr_b);

struct CheckItem {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct Theorem12Report {
  int two_cell = -1;
  bool pass = true;
  bool exact = false;
  double max_residual = 0;
  double max_dev = 0;      // worst proportionality deviation
  double perturb_dev = 0;  // uniqueness re-derivation deviation
  std::vector<CheckItem> items;

  void add(const std::string& name, bool ok, const std::string& detail = "");
};

/// Runs clauses (a)-(f) over every base left cell of the two-sided cell.
Theorem12Report verify_theorem12(const GammaTable& gt, const CellPartition& cells,
                                 int two_cell, const PerronConfig& cfg);

/// Block product vanishing: products across mismatched blocks are zero.
bool check_block_products(const GammaTable& gt, const CellPartition& cells, int two_cell,
                          std::string* detail = nullptr);

/// Positive-cone transport: each t_u maps the all-ones generator of every
/// compatible block to a strictly positive vector of the target block.
bool check_cone_transport(const GammaTable& gt, const CellPartition& cells, int two_cell,
                          std::string* detail = nullptr);

/// Right-submodule characterization of each line: the line is stable under
/// right multiplication by every diagonal t_y, and perturbed positive
/// lines are not.
bool check_right_stability(const GammaTable& gt, const CellPartition& cells,
                           const SpecialModule& m, const PerronConfig& cfg,
                           std::string* detail = nullptr);

}  // namespace jring
