#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dgp/bigint.hpp"
#include "dgp/count.hpp"
#include "dgp/graph.hpp"

namespace dgp {

/// One point-count statement checked at one q. Counts are raw [.]_q values
/// in the order they were computed; residues are the quantities claimed to
/// vanish (remainders, or differences for exact identities).
struct CongruenceReport {
  std::string statement;
  std::string graph;
  std::uint32_t q = 0;
  std::vector<std::pair<std::string, BigInt>> counts;
  BigInt modulus = 0;  // 0 for an exact identity
  std::vector<std::pair<std::string, BigInt>> residues;
  bool pass = false;
  bool skipped = false;
  std::string detail;
  double millis = 0;

  /// Sets pass from the residues.
  void finish();
};

/// The same graph with its edges renumbered 1..N in list order.
MultiGraph compact_edges(const MultiGraph& g);

/// [f_1..f_k]_q with the variables of `ambient` as coordinates. Throws
/// InputError if a polynomial uses a variable outside `ambient`.
BigInt count_over(PointCounter& counter, const std::vector<SparsePoly>& polys, const EdgeSet& ambient);

/// [Z_G]_q = [phi_G]_q in A^N, and [X_G]_q = [Psi_G]_q.
BigInt dual_hypersurface_count(PointCounter& counter, const MultiGraph& g);
BigInt hypersurface_count(PointCounter& counter, const MultiGraph& g);

/// [Z_G]_q / q^2 mod q. Requires a connected graph with h >= 2; throws
/// ConsistencyError if q^2 does not divide the count.
std::uint32_t c2_dual(PointCounter& counter, const MultiGraph& g);
std::uint32_t c2_dual(const MultiGraph& g, std::uint32_t q);
/// The same for X_G = V(Psi_G).
std::uint32_t c2_parametric(PointCounter& counter, const MultiGraph& g);
std::uint32_t c2_parametric(const MultiGraph& g, std::uint32_t q);

/// -[phi^{13,24}, phi^{14,23}]_q mod q in the variables off the face, for a
/// log-divergent graph and a 4-cycle given in cyclic order.
std::uint32_t c2_dual_fourface(PointCounter& counter, const MultiGraph& g, const std::array<int, 4>& face);

/// Chevalley-Warning: [f_1..f_k]_q = 0 mod q. Throws PreconditionError unless
/// the degrees sum to less than nvars.
CongruenceReport cw_check(PointCounter& counter, const std::vector<SparsePoly>& polys, int nvars);

/// q^2 | [Z_G], q | [phi^1, phi_1] and q | [phi^{1,2}] for edges e1 != e2.
/// Needs h >= 2.
CongruenceReport verify_divisibility(PointCounter& counter, const MultiGraph& g, int e1, int e2);

/// [Z_G] = q[phi^1, phi_1] + q^{N-1} - [phi^1] for the edge e.
CongruenceReport verify_one_variable(PointCounter& counter, const MultiGraph& g, int e);

/// [Z_G] = q^{N-1} - [phi^1] + q^2[phi^{12}, phi^1_2, phi^2_1, phi_{12}]
///         + q[phi^{1,2}] - q[phi^{12}, phi^2_1]  for edges e1 != e2.
CongruenceReport verify_two_variable(PointCounter& counter, const MultiGraph& g, int e1, int e2);

/// For a triangle given in cyclic order: [Z_G] = q^2[phi^{1,2}_3, phi^{13,23}]
/// mod q^3, and [Z_G] = q^{N-1} - q^2[g0..g3] + q^3[g0..g3, g123] exactly.
/// Needs h >= 3 and N >= 4.
std::vector<CongruenceReport> verify_triangle(PointCounter& counter, const MultiGraph& g,
                                              const std::array<int, 3>& tri);

/// For N > 2n, h >= 3 and a cycle of length 1, 2 or 3 through e = cycle[0]:
/// [Z_G] = 0 mod q^3 and [phi^e, phi_e] = 0 mod q^2.
CongruenceReport verify_triangle_vanishing(PointCounter& counter, const MultiGraph& g,
                                           const std::vector<int>& cycle);

/// For a 4-cycle in cyclic order (e1 and e3 opposite):
///   fourface_five_term: [phi^{12}, phi^1_2, phi^2_1, phi_{12}] =
///     [phi^{12,34}] - [a, phi^{12,34}] + [a, b^1_3] - [a, b^1_4]
///     + [phi^{st}_{G'}, phi^{s,t}_{G'}]  mod q   (h >= 3; it fails for h <= 2)
///   fourface_surgery: [a, phi^{12}_{34} phi^{34}_{12}] = [phi^{st}_{G'}, phi^{s,t}_{G'}]
///   fourface_system_vanishing (N >= 2n): the four-polynomial system = 0 mod q
///   fourface_minor_vanishing (N > 2n): [phi^{1,2}] = 0 mod q^2
///   fourface_vanishing (N > 2n): [Z_G] = 0 mod q^3
/// Statements outside their edge-count bound come back skipped.
std::vector<CongruenceReport> verify_fourface(PointCounter& counter, const MultiGraph& g,
                                              const std::array<int, 4>& face);

/// c2_dual against the 4-face formula; log-divergent graphs only.
CongruenceReport verify_fourface_formula(PointCounter& counter, const MultiGraph& g,
                                         const std::array<int, 4>& face);

/// c2_parametric against c2_dual; needs h >= 2.
CongruenceReport verify_c2_coincidence(PointCounter& counter, const MultiGraph& g);

}  // namespace dgp
