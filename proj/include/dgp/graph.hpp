#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace dgp {

/// Sorted, duplicate-free set of edge ids.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<int> ids);
  explicit EdgeSet(std::vector<int> ids);

  bool contains(int id) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  int operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<int>& ids() const { return ids_; }

  auto operator<=>(const EdgeSet&) const = default;

 private:
  std::vector<int> ids_;
};

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b);
bool disjoint(const EdgeSet& a, const EdgeSet& b);
bool is_subset(const EdgeSet& a, const EdgeSet& b);

struct Edge {
  int id = 0;
  int source = 0;
  int target = 0;

  bool is_loop() const { return source == target; }
  bool operator==(const Edge&) const = default;
};

/// Oriented multigraph with stable edge ids.
///
/// Edge ids are assigned 1..N in list order at construction and survive
/// deletion and contraction, so minors of a graph share its variable
/// universe. Contracting a self-loop marks the result degenerate; every
/// polynomial of a degenerate graph is zero.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(int vertex_count, const std::vector<std::pair<int, int>>& endpoints);

  /// Builds a graph from explicit edge records. Ids must be strictly increasing.
  static MultiGraph from_edges(int vertex_count, std::vector<Edge> edges,
                               bool degenerate = false);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  bool degenerate() const { return degenerate_; }

  bool has_edge(int id) const;
  const Edge& edge(int id) const;
  /// Position of edge `id` in list order.
  int edge_index(int id) const;
  EdgeSet edge_ids() const;
  int max_edge_id() const;

  std::vector<int> degrees() const;

  bool operator==(const MultiGraph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  bool degenerate_ = false;
};

/// G \ I. Vertices are unchanged; surviving edges keep their ids.
MultiGraph delete_edges(const MultiGraph& g, const EdgeSet& ids);

/// G // J. Edges are contracted one at a time in increasing id order; the
/// merged vertex takes the smaller index and the vertex list is compacted.
MultiGraph contract_edges(const MultiGraph& g, const EdgeSet& ids);

bool is_connected(const MultiGraph& g);
int component_count(const MultiGraph& g);

/// h = N - |V| + 1. Throws InputError for a disconnected graph.
int loop_number(const MultiGraph& g);

/// n = |V| - 1. Throws InputError for a disconnected graph.
int vertex_rank(const MultiGraph& g);

/// Log-divergent means N = 2h, equivalently N = 2n.
bool is_log_divergent(const MultiGraph& g);

/// Length of a shortest cycle; nullopt for a forest.
std::optional<int> girth(const MultiGraph& g);

bool has_cycle_at_most(const MultiGraph& g, int k);

/// Streams every spanning tree, in a deterministic order. Nothing is emitted
/// for a disconnected or degenerate graph.
void for_each_spanning_tree(const MultiGraph& g,
                            const std::function<void(const EdgeSet&)>& visit);
std::vector<EdgeSet> spanning_trees(const MultiGraph& g);

/// Number of spanning trees from the Laplacian determinant.
long long matrix_tree_count(const MultiGraph& g);

/// Simple cycles with `length` distinct vertices, each reported once as an
/// edge-id sequence in cyclic order starting from its smallest edge id and
/// continuing towards the smaller of its two neighbours.
std::vector<std::vector<int>> cycles_of_length(const MultiGraph& g, int length);

bool is_cycle_sequence(const MultiGraph& g, std::span<const int> ids);

}  // namespace dgp
