#pragma once

#include <optional>
#include <string>

#include "dgp/graph.hpp"
#include "dgp/rng.hpp"

namespace dgp {

MultiGraph cycle_graph(int n);
MultiGraph path_graph(int vertices);
MultiGraph complete_graph(int n);
MultiGraph complete_bipartite(int a, int b);
/// Two vertices joined by k parallel edges.
MultiGraph banana(int k);
MultiGraph petersen();

/// The 4-regular girth-5 graph on 19 vertices, from its Hamiltonian cycle
/// and chord list. Its defining properties are checked on every call.
MultiGraph robertson_graph();
/// robertson_graph() with vertex 0 and its four edges removed.
MultiGraph robertson_decompleted();

/// Removes vertex v and its edges; remaining vertices are renumbered in
/// order and edges get fresh ids 1..N.
MultiGraph delete_vertex(const MultiGraph& g, int v);

/// Resolves "C3", "K4", "K3,3", "petersen", "banana3", "robertson",
/// "robertson-decompleted", "path5".
std::optional<MultiGraph> named_graph(const std::string& name);

struct RandomGraphOptions {
  int min_vertices = 2;
  int max_vertices = 6;
  int min_edges = 1;
  int max_edges = 10;
  bool loops = true;
  bool multi_edges = true;
};

/// Connected graph: a random spanning tree plus random extra edges, random
/// orientations and a shuffled edge order.
MultiGraph random_connected(Rng& rng, const RandomGraphOptions& opt);

/// Random connected graph whose edges 1, 2, 3 form a triangle.
MultiGraph random_with_triangle(Rng& rng, int max_edges, bool multi_edges = true);

/// Random connected graph whose edges 1, 2, 3, 4 form a 4-cycle in cyclic
/// order.
MultiGraph random_with_square(Rng& rng, int max_edges, bool multi_edges = true);

}  // namespace dgp
