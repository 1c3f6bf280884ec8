#include <doctest.h>

#include <sstream>

#include "dgp/error.hpp"
#include "dgp/graph.hpp"
#include "dgp/graph_gen.hpp"
#include "dgp/graph_io.hpp"
#include "dgp/graph_iso.hpp"

using namespace dgp;

TEST_SUITE("graph") {

TEST_CASE("edge sets are sorted and reject duplicates") {
  EdgeSet s{3, 1, 2};
  CHECK(s.ids() == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(EdgeSet({1, 1}), InputError);
  CHECK(set_union(EdgeSet{1, 4}, EdgeSet{2, 4}).ids() == std::vector<int>{1, 2, 4});
  CHECK(set_difference(EdgeSet{1, 2, 3}, EdgeSet{2}).ids() == std::vector<int>{1, 3});
  CHECK(disjoint(EdgeSet{1, 2}, EdgeSet{3}));
  CHECK(is_subset(EdgeSet{2}, EdgeSet{1, 2}));
}

TEST_CASE("loop number and rank") {
  const MultiGraph k4 = complete_graph(4);
  CHECK(k4.edge_count() == 6);
  CHECK(loop_number(k4) == 3);
  CHECK(vertex_rank(k4) == 3);
  CHECK(is_log_divergent(k4));
  CHECK(loop_number(banana(3)) == 2);
  CHECK_FALSE(is_log_divergent(cycle_graph(3)));
  CHECK_THROWS_AS(loop_number(MultiGraph(3, {{0, 1}})), InputError);
}

TEST_CASE("deletion keeps ids, contraction merges vertices") {
  const MultiGraph c3 = cycle_graph(3);
  const MultiGraph d = delete_edges(c3, EdgeSet{2});
  CHECK(d.edge_count() == 2);
  CHECK(d.has_edge(1));
  CHECK(d.has_edge(3));
  CHECK_FALSE(d.has_edge(2));
  const MultiGraph c = contract_edges(c3, EdgeSet{1});
  CHECK(c.vertex_count() == 2);
  CHECK(c.edge_count() == 2);
  CHECK_FALSE(c.degenerate());
  const MultiGraph cc = contract_edges(c, EdgeSet{2});
  CHECK(cc.edge(3).is_loop());
  CHECK(contract_edges(cc, EdgeSet{3}).degenerate());
}

TEST_CASE("spanning trees match the matrix-tree count") {
  CHECK(spanning_trees(complete_graph(4)).size() == 16);
  CHECK(matrix_tree_count(complete_graph(4)) == 16);
  CHECK(matrix_tree_count(complete_graph(5)) == 125);
  CHECK(spanning_trees(petersen()).size() == 2000);
  CHECK(spanning_trees(banana(3)).size() == 3);
  CHECK(spanning_trees(MultiGraph(3, {{0, 1}})).empty());
  // A loop is never in a tree.
  CHECK(spanning_trees(MultiGraph(2, {{0, 1}, {1, 1}})).size() == 1);
}

TEST_CASE("girth and short cycles") {
  CHECK(girth(petersen()) == 5);
  CHECK(girth(complete_graph(4)) == 3);
  CHECK(girth(banana(2)) == 2);
  CHECK(girth(MultiGraph(1, {{0, 0}})) == 1);
  CHECK_FALSE(girth(path_graph(4)).has_value());
  CHECK(has_cycle_at_most(complete_bipartite(3, 3), 4));
  CHECK_FALSE(has_cycle_at_most(petersen(), 4));
  CHECK(cycles_of_length(complete_graph(4), 3).size() == 4);
  CHECK(cycles_of_length(complete_graph(4), 4).size() == 3);
  const auto c = cycles_of_length(complete_graph(4), 4).front();
  CHECK(is_cycle_sequence(complete_graph(4), c));
}

TEST_CASE("graph file round trip") {
  const std::string text = "# triangle\ngraph 3 3\n0 1\n1 2\n\n2 0\n";
  const MultiGraph g = parse_graph(text);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(parse_graph(format_graph(g)) == g);
}

TEST_CASE("graph file errors carry line numbers") {
  try {
    parse_graph("graph 3 2\n0 1\n1 7\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_graph("graph 2 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("nonsense\n"), ParseError);
  CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.txt"), InputError);
}

TEST_CASE("named graphs") {
  CHECK(named_graph("K4")->edge_count() == 6);
  CHECK(named_graph("petersen")->edge_count() == 15);
  CHECK(named_graph("robertson")->edge_count() == 38);
  CHECK_FALSE(named_graph("no-such-graph").has_value());
}

TEST_CASE("isomorphism") {
  const MultiGraph a = MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const MultiGraph b = MultiGraph(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(isomorphic(a, b));
  CHECK_FALSE(isomorphic(a, complete_bipartite(1, 3)));
  IsoClassSet set;
  CHECK(set.insert(a));
  CHECK_FALSE(set.insert(b));
}

TEST_CASE("connected graph counts") {
  // Connected simple graphs by edge count.
  const auto simple = connected_graphs_up_to(6, GraphClass::simple);
  std::vector<std::size_t> sizes;
  for (const auto& level : simple) sizes.push_back(level.size());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 1, 3, 5, 12, 30});
  const auto multi = connected_graphs_up_to(4, GraphClass::multigraph);
  CHECK(multi[2].size() == 4);
  CHECK(multi[4].size() == 30);
}

TEST_CASE("random graphs are connected and seeded") {
  Rng a(9), b(9);
  RandomGraphOptions o;
  for (int i = 0; i < 20; ++i) {
    const MultiGraph g = random_connected(a, o);
    CHECK(is_connected(g));
    CHECK(g == random_connected(b, o));
  }
  Rng r(2);
  const MultiGraph sq = random_with_square(r, 9);
  CHECK_FALSE(cycles_of_length(sq, 4).empty());
}

}
