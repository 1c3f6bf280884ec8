#include <doctest.h>

#include "dgp/cycle_basis.hpp"
#include "dgp/graph_gen.hpp"
#include "dgp/matrix.hpp"

using namespace dgp;

TEST_SUITE("cycle-basis") {

TEST_CASE("cycle matrix shape") {
  const CycleMatrix f = small_cycle_basis(complete_graph(4));
  CHECK(f.rows == 3);
  CHECK(f.cols == 6);
  for (int v : f.entries) CHECK((v >= -1 && v <= 1));
}

TEST_CASE("basis of small cycles has trivial invariant factors") {
  for (const MultiGraph& g : {complete_graph(4), complete_graph(5), petersen(), banana(4), complete_bipartite(3, 3)}) {
    const auto d = invariant_factors(small_cycle_basis(g));
    for (long long x : d) CHECK(x == 1);
  }
}

TEST_CASE("minors are unimodular exactly on spanning trees") {
  const MultiGraph g = complete_graph(4);
  const CycleMatrix f = small_cycle_basis(g);
  int trees = 0;
  for (const EdgeSet& t : spanning_trees(g)) {
    CHECK(std::abs(cycle_minor_det(f, t)) == 1);
    ++trees;
  }
  CHECK(trees == 16);
}

TEST_CASE("2-banana block matrix") {
  const BlockMatrix m = build_L(banana(2), small_cycle_basis(banana(2)));
  CHECK(m.size == 3);
  CHECK(format_grid(m) == "a1 0 -1\n0 a2 1\n1 -1 0\n");
}

TEST_CASE("Bareiss determinant") {
  CHECK(det_bareiss({2, 0, 0, 3}, 2) == 6);
  CHECK(det_bareiss({0, 1, 1, 0}, 2) == -1);
  CHECK(det_bareiss({1, 2, 3, 4, 5, 6, 7, 8, 9}, 3) == 0);
  CHECK(det_bareiss({}, 0) == 1);
}

}
