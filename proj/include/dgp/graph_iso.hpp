#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dgp/graph.hpp"

namespace dgp {

/// Isomorphism-invariant hash (degree sequence, loop counts and a few rounds
/// of colour refinement). Equal graphs up to relabeling hash equal.
std::uint64_t invariant_hash(const MultiGraph& g);

/// Unlabeled isomorphism of the underlying multigraphs (orientation and edge
/// ids ignored). Backtracking over refined colour classes.
bool isomorphic(const MultiGraph& a, const MultiGraph& b);

/// Keeps one representative per isomorphism class.
class IsoClassSet {
 public:
  /// True if g was new.
  bool insert(const MultiGraph& g);
  const std::vector<MultiGraph>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

 private:
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
  std::vector<MultiGraph> items_;
};

enum class GraphClass { simple, loopless, multigraph };

/// All connected graphs with exactly `edges` edges, one per isomorphism
/// class, no isolated vertices. The single-vertex graph counts for edges = 0.
/// Built level by level: every connected graph arises from one with an edge
/// less by adding an edge between existing vertices, a loop, or a pendant
/// edge.
std::vector<std::vector<MultiGraph>> connected_graphs_up_to(int edges, GraphClass cls);

}  // namespace dgp
