#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgp/bigint.hpp"
#include "dgp/graph.hpp"

namespace dgp {

/// G \ I // J with I = deleted, J = contracted.
struct SubquotientSpec {
  EdgeSet deleted;
  EdgeSet contracted;
};

/// Calls `visit` for every (I, J) with I, J disjoint, |J| > |I| >= 0 and
/// |I| <= n - 3, ordered by |I|, then I, then |J|, then J (sets in
/// lexicographic order). Stops early when `visit` returns false. Throws
/// PreconditionError unless g is connected with n >= 3.
void for_each_subquotient(const MultiGraph& g, const std::function<bool(const SubquotientSpec&)>& visit);
std::vector<SubquotientSpec> subquotients(const MultiGraph& g);
/// Length of the full stream, by binomial sums.
BigInt subquotient_count(const MultiGraph& g);

MultiGraph subquotient_graph(const MultiGraph& g, const SubquotientSpec& s);

enum class CertificateMode { combinatorial, pointcount };

/// Per-spec outcome. A spec whose J contains a cycle contracts a self-loop;
/// it is marked degenerate and not checked.
struct SubquotientVerdict {
  SubquotientSpec spec;
  bool degenerate = false;
  bool disconnected = false;
  int witness = 0;                                // shortest cycle length <= 4, or 0
  std::vector<std::pair<std::uint32_t, BigInt>> residues;  // pointcount: count mod q^3
  bool pass = false;
};

struct AdmissibilityCertificate {
  std::string graph;
  CertificateMode mode = CertificateMode::combinatorial;
  BigInt total_specs = 0;
  std::uint64_t checked = 0;
  std::uint64_t degenerate = 0;
  std::vector<SubquotientSpec> failures;
  std::vector<SubquotientSpec> flagged_girth5;
  std::vector<SubquotientSpec> flagged_disconnected;
  std::map<std::uint32_t, std::pair<std::uint64_t, std::uint64_t>> per_q;  // q -> (checked, failed)
  bool exhaustive = true;
  bool partial = false;
  bool pass = false;
};

struct AdmissibilityOptions {
  /// Stop after this many checked specs (0: no limit); the certificate is
  /// then partial.
  std::uint64_t max_specs = 0;
  /// Instead of the full stream: all specs with |I u J| <= sample_size plus
  /// `random_specs` seeded random ones. Marks the certificate partial.
  bool sample = false;
  int sample_size = 4;
  std::uint64_t random_specs = 0;
  std::uint64_t seed = 0;
  /// Leaf budget per point count; an exhausted budget leaves the spec
  /// unchecked and the certificate partial.
  std::uint64_t count_budget = std::uint64_t{1} << 31;
};

/// Passes iff every non-degenerate spec has a cycle of length <= 4 (self
/// loops and parallel pairs included).
AdmissibilityCertificate check_admissible_combinatorial(const MultiGraph& g, const AdmissibilityOptions& opt = {});

/// [phi^{J,J}_{G,I}]_q = 0 mod q^3 over the variables outside I u J, for
/// every non-degenerate spec and every q.
AdmissibilityCertificate check_admissible_pointcount(const MultiGraph& g, const std::vector<std::uint32_t>& qs,
                                                     const AdmissibilityOptions& opt = {});

/// {graph, mode, total_specs, checked, degenerate, failures, flagged_girth5,
/// flagged_disconnected, per_q, exhaustive, partial, pass}
nlohmann::json to_json(const AdmissibilityCertificate& c);
nlohmann::json to_json(const SubquotientSpec& s);

struct SearchResult {
  int v = 0;
  int min_edges = 0;  // witnesses need at least this many edges, 2(v-1) + 1
  std::vector<MultiGraph> witnesses;
  bool exhaustive = false;
  std::uint64_t classes = 0;  // girth >= 5 graphs on v vertices, up to isomorphism
  int max_edges = 0;          // largest edge count among them
};

/// Simple graphs on v vertices with girth >= 5 (forests included), one per
/// isomorphism class. Each graph on k + 1 vertices arises from one on k
/// vertices by adding a vertex joined to a set of vertices at pairwise
/// distance >= 3.
std::vector<std::vector<MultiGraph>> girth5_graphs_up_to(int v);

/// Witnesses on v vertices with girth >= 5 and more than 2(v-1) edges. The
/// search runs when v <= exhaustive_limit; otherwise the result is empty and
/// not exhaustive.
SearchResult girth5_search(int v, int exhaustive_limit = 10);

nlohmann::json to_json(const SearchResult& r);

/// graph6 text of a simple graph.
std::string to_graph6(const MultiGraph& g);

struct RobertsonReport {
  MultiGraph completed;
  MultiGraph decompleted;
  nlohmann::json table;
  bool pass = false;
};

/// The Robertson graph and its one-vertex deletion, with their properties
/// recomputed: 19 vertices, 38 edges, 4-regular, girth 5; N = 34, h = n = 17,
/// girth 5.
RobertsonReport robertson();

}  // namespace dgp
