#pragma once

#include <vector>

#include "dgp/cycle_basis.hpp"
#include "dgp/graph.hpp"
#include "dgp/poly.hpp"

namespace dgp {

/// Symbolic determinant of an n x n matrix whose entries are 0, +-1 or single
/// variables, each variable occurring at most once. The result is multilinear
/// and is recovered from the 2^m integer determinants on the 0/1 grid of the
/// m variables by Moebius inversion. Throws InputError for entries outside
/// that alphabet and ResourceError for m > 24.
SparsePoly det_multilinear(const std::vector<SymEntry>& entries, int n);
SparsePoly det_multilinear(const BlockMatrix& m);

enum class PhiBackend { tree_sum, determinant };

/// Dual graph polynomial: sum over spanning trees of the product of their
/// edge variables. Zero for degenerate or disconnected graphs.
SparsePoly phi(const MultiGraph& g, PhiBackend backend = PhiBackend::determinant);

/// Graph polynomial: sum over spanning trees of the product of the variables
/// of the complementary edges. Zero for degenerate or disconnected graphs.
SparsePoly psi(const MultiGraph& g);

/// det L_G with the rows of I and columns of J removed and alpha_K = 0, for
/// the canonical cycle basis. |I| must equal |J|. Zero for degenerate or
/// disconnected graphs.
SparsePoly dual_dodgson(const MultiGraph& g, const EdgeSet& i, const EdgeSet& j,
                        const EdgeSet& k = {});

/// The same minors of the incidence block, giving the Dodgson polynomials of
/// Psi_G.
SparsePoly psi_dodgson(const MultiGraph& g, const EdgeSet& i, const EdgeSet& j,
                       const EdgeSet& k = {});

/// dual_dodgson of the minor G \ b // a. a and b must be disjoint from each
/// other and from i, j, k.
SparsePoly minor_transfer(const MultiGraph& g, const EdgeSet& i, const EdgeSet& j,
                          const EdgeSet& k, const EdgeSet& a, const EdgeSet& b);

/// Replaces every monomial by its complement in `universe`. f must be
/// multilinear, homogeneous and supported on `universe`.
SparsePoly cremona(const SparsePoly& f, const EdgeSet& universe);
/// cremona over a1..a_nvars.
SparsePoly cremona(const SparsePoly& f, int nvars);

/// f^e g_e - f_e g^e. Throws InputError unless both are linear in a_e.
SparsePoly resultant(const SparsePoly& f, const SparsePoly& g, int var);

}  // namespace dgp
