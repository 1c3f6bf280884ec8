#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dgp/graph.hpp"
#include "dgp/poly.hpp"

namespace dgp {

/// Outcome of one symbolic check. `signs` holds any signs found by search;
/// `detail` names a witness monomial or the observed sign on failure.
struct VerificationRecord {
  std::string statement;
  bool pass = false;
  std::string detail;
  std::vector<int> signs;
};

/// Passing record when lhs == rhs, else a record naming the leading monomial
/// of lhs - rhs.
VerificationRecord compare_polys(const std::string& statement, const SparsePoly& lhs,
                                 const SparsePoly& rhs);

/// Row relation of the cycle given in cyclic order (3 or more edges):
/// phi^{1} = sum_{j>=2} (-1)^j phi^{1,j} in the face-adapted labeling.
VerificationRecord jacobi_row_relation(const MultiGraph& g, const std::vector<int>& cycle);

/// sum_{k=n}^{2n} (-1)^k phi^{{i_1..i_{n-1},i_k},{i_n..^i_k..i_2n}} = 0. The
/// relation holds for increasing index sequences, so the indices are sorted
/// first. Throws InputError unless there are 2n distinct edges.
VerificationRecord plucker_check(const MultiGraph& g, std::vector<int> indices, int n);

enum class DodgsonKind { first, second };

/// First identity (|I| = |J|, extra edges a,b,c,d):
///   phi^{Ia,Jb}_S phi^{Ic,Jd}_S - phi^{Ia,Jd}_S phi^{Ic,Jb}_S
///     = e phi^{I,J}_S phi^{Iac,Jbd}_S,  e = +1 iff (a-c)(b-d) > 0.
/// Second identity (|J| = |I| + 1, extra edges a,b,c; d ignored):
///   phi^{Ia,J}_S phi^{Ibc,Jc}_S - phi^{Iac,Jc}_S phi^{Ib,J}_S
///     = +-phi^{Ic,J}_S phi^{Iab,Jc}_S,
/// with the sign reported in `signs`. When c lies between a and b the minus
/// on the left becomes a plus. S is the union of all indices.
VerificationRecord dodgson_identity_check(const MultiGraph& g, const EdgeSet& i, const EdgeSet& j,
                                          const std::vector<int>& extra, DodgsonKind kind);

enum class RelationMode { cycle, corolla };

/// cycle: phi^1 = sum_j l_j phi^{1,j}; corolla: phi_1 = sum_j l_j a_j phi^{1,j}
/// with l_j = +-1 found by exhaustive search. The first listed edge plays
/// the role of e_1. A corolla must be the complete set of non-loop edges at
/// one vertex.
VerificationRecord cycle_corolla_relations(const MultiGraph& g, const std::vector<int>& edges,
                                           RelationMode mode);

/// Triangle reconstruction of phi_G and g0 g123 = g1 g2 + g2 g3 + g1 g3.
std::vector<VerificationRecord> triangle_identities(const MultiGraph& g, const std::array<int, 3>& tri);

/// Face relations for a 4-cycle given in cyclic order: the three families
/// of relations between a, b, c and the minors, the expansion
/// phi^{12,34} = b^2_4 - b^1_4, the constant-term identity
/// phi^{24}_{13} phi^1_{234} - a phi_{1234} = b^4_3 phi^{1,2}_{34} + b^2_3 phi^{1,4}_{23},
/// the row relation, and (b^i_t)^2 = phi^{ij}_{kt} phi^{ik}_{jt} on V(a),
/// sampled at `samples` points over F_p.
std::vector<VerificationRecord> fourface_identities(const MultiGraph& g, const std::array<int, 4>& face,
                                                    std::uint64_t seed = 0, int samples = 50,
                                                    std::uint64_t p = 10007);

/// phi^S_K = iota(Psi^K_S) over the variables outside S and K.
VerificationRecord cremona_duality(const MultiGraph& g, const EdgeSet& s, const EdgeSet& k);

/// phi^{Si,Sj}_K = +-iota(Psi^{Ki,Kj}_S).
VerificationRecord cremona_duality_pair(const MultiGraph& g, const EdgeSet& s, const EdgeSet& k,
                                        int i, int j);

/// linear_split(phi_G, e) = (phi_{G//e}, phi_{G\e}) for every edge.
VerificationRecord contraction_deletion(const MultiGraph& g);

/// Every monomial of phi^{I,J}_K occurs in phi^{I,I}_{J u K} and phi^{J,J}_{I u K}.
VerificationRecord support_containment(const MultiGraph& g, const EdgeSet& i, const EdgeSet& j,
                                       const EdgeSet& k);

/// phi^{I,J}_{G\B//A,K} = +-phi^{IuA,JuA}_{G,KuB}.
VerificationRecord minor_transfer_check(const MultiGraph& g, const EdgeSet& i, const EdgeSet& j,
                                        const EdgeSet& k, const EdgeSet& a, const EdgeSet& b);

}  // namespace dgp
