#pragma once

#include <string>
#include <vector>

#include "dgp/graph.hpp"

namespace dgp {

/// Signed cycle-edge matrix of a basis of small cycles. Column j belongs to
/// the j-th edge of the graph in list order (edge id g.edges()[j].id).
struct CycleMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> entries;  // row-major, values in {-1, 0, 1}
  EdgeSet tree;              // spanning tree the rows were built from
  std::vector<int> column_ids;

  int at(int r, int c) const { return entries[r * cols + c]; }
};

/// Fundamental cycles of the BFS tree rooted at vertex 0, scanning incident
/// edges in increasing id order. The row of a non-tree edge e is the cycle
/// e + path(target(e) -> source(e)) oriented along e, so the non-tree columns
/// form an identity block. Throws InputError if g is disconnected or
/// degenerate.
CycleMatrix small_cycle_basis(const MultiGraph& g);

/// det of F with the columns of t removed; |t| must be N - h.
int cycle_minor_det(const CycleMatrix& f, const EdgeSet& t);

/// Entry of L_G: constant, or a single variable alpha_var (var > 0).
struct SymEntry {
  int value = 0;
  int var = 0;
  bool zero() const { return var == 0 && value == 0; }
};

/// The (N+h) x (N+h) matrix [[Delta(alpha), F^t], [-F, 0]]. Row/column i < N
/// belongs to edge index_ids[i].
struct BlockMatrix {
  int size = 0;
  std::vector<SymEntry> entries;
  std::vector<int> index_ids;  // edge id per leading row, N entries

  const SymEntry& at(int r, int c) const { return entries[r * size + c]; }
};

BlockMatrix build_L(const MultiGraph& g, const CycleMatrix& f);

/// The block [[Delta(alpha), E^t], [-E, 0]] with E the incidence matrix
/// without the row of vertex 0; its minors are the Dodgson polynomials of
/// Psi_G.
BlockMatrix build_incidence_block(const MultiGraph& g);

/// Whitespace-separated grid, one matrix row per line.
std::string format_grid(const CycleMatrix& f);
std::string format_grid(const BlockMatrix& m);

/// Smith normal form invariant factors of F (nonzero diagonal entries).
std::vector<long long> invariant_factors(const CycleMatrix& f);

}  // namespace dgp
