#include <doctest.h>

#include "dgp/admissibility.hpp"
#include "dgp/graph_gen.hpp"

using namespace dgp;

TEST_SUITE("admissibility") {

TEST_CASE("sub-quotient stream of K4") {
  const MultiGraph k4 = complete_graph(4);
  CHECK(subquotient_count(k4) == 63);
  CHECK(subquotients(k4).size() == 63);
  const auto first = subquotients(k4).front();
  CHECK(first.deleted.empty());
  CHECK(first.contracted.size() == 1);
}

TEST_CASE("K4 certificates") {
  const MultiGraph k4 = complete_graph(4);
  const auto comb = check_admissible_combinatorial(k4);
  CHECK(comb.pass);
  CHECK(comb.total_specs == 63);
  CHECK(comb.degenerate == 26);
  CHECK(comb.checked == 37);
  CHECK(comb.exhaustive);
  const auto pc = check_admissible_pointcount(k4, {2, 3});
  CHECK(pc.pass);
  CHECK(pc.checked == 37);
  CHECK(pc.per_q.at(2).second == 0);
}

TEST_CASE("a short limit gives a partial certificate") {
  AdmissibilityOptions o;
  o.max_specs = 5;
  const auto c = check_admissible_combinatorial(complete_graph(4), o);
  CHECK(c.partial);
  CHECK_FALSE(c.exhaustive);
  CHECK(to_json(c)["partial"] == true);
}

TEST_CASE("girth-5 class counts") {
  const auto levels = girth5_graphs_up_to(9);
  std::vector<std::size_t> sizes;
  for (std::size_t v = 1; v < levels.size(); ++v) sizes.push_back(levels[v].size());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3, 6, 11, 23, 48, 114, 293});
}

TEST_CASE("no girth-5 witnesses up to 10 vertices") {
  for (int v = 4; v <= 10; ++v) {
    const auto r = girth5_search(v);
    CHECK(r.exhaustive);
    CHECK(r.witnesses.empty());
    CHECK(r.min_edges == 2 * (v - 1) + 1);
  }
  CHECK(girth5_search(10).max_edges == 15);
}

TEST_CASE("graph6") {
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(petersen()).size() == 9);
}

TEST_CASE("Robertson values") {
  const auto r = robertson();
  CHECK(r.pass);
  CHECK(r.table["completed"]["vertices"] == 19);
  CHECK(r.table["completed"]["edges"] == 38);
  CHECK(r.table["decompleted"]["edges"] == 34);
  CHECK(r.table["decompleted"]["h"] == 17);
  CHECK(r.table["decompleted"]["girth"] == 5);
}

}
