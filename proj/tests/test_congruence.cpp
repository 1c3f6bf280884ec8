#include <doctest.h>

#include "dgp/congruence.hpp"
#include "dgp/dodgson.hpp"
#include "dgp/error.hpp"
#include "dgp/graph_gen.hpp"
#include "dgp/report.hpp"

using namespace dgp;

namespace {

MultiGraph k4_plus(const std::vector<std::pair<int, int>>& more) {
  const MultiGraph k4 = complete_graph(4);
  std::vector<std::pair<int, int>> ends;
  for (const Edge& e : k4.edges()) ends.push_back({e.source, e.target});
  ends.insert(ends.end(), more.begin(), more.end());
  return MultiGraph(4, ends);
}

}  // namespace

TEST_SUITE("congruence") {

TEST_CASE("c2 of K4 is q - 1 in both representations") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    CHECK(c2_dual(complete_graph(4), q) == q - 1);
    CHECK(c2_parametric(complete_graph(4), q) == q - 1);
  }
}

TEST_CASE("c2 of the 3-banana") { CHECK(c2_dual(banana(3), 3) == 1); }

TEST_CASE("c2 needs two loops") { CHECK_THROWS_AS(c2_dual(cycle_graph(3), 2), PreconditionError); }

TEST_CASE("4-face formula for K4") {
  PointCounter c(5);
  const auto s = cycles_of_length(complete_graph(4), 4).front();
  CHECK(c2_dual_fourface(c, complete_graph(4), {s[0], s[1], s[2], s[3]}) == 4);
  CHECK(verify_fourface_formula(c, complete_graph(4), {s[0], s[1], s[2], s[3]}).pass);
}

TEST_CASE("Chevalley-Warning") {
  PointCounter c(3);
  CHECK(cw_check(c, {phi(complete_graph(4))}, 6).pass);
  CHECK_THROWS_AS(cw_check(c, {phi(cycle_graph(3))}, 2), PreconditionError);
}

TEST_CASE("reductions and divisibility on K4 and denser graphs") {
  for (const MultiGraph& g : {complete_graph(4), k4_plus({{0, 1}}), complete_bipartite(3, 3)}) {
    for (std::uint32_t q : {2u, 3u}) {
      PointCounter c(q);
      CHECK(verify_divisibility(c, g, 1, 2).pass);
      CHECK(verify_one_variable(c, g, 1).pass);
      CHECK(verify_two_variable(c, g, 1, 2).pass);
      if (is_log_divergent(g)) CHECK(verify_c2_coincidence(c, g).pass);
    }
  }
  PointCounter c(2);
  CHECK_THROWS_AS(verify_divisibility(c, MultiGraph(1, {{0, 0}, {0, 0}}), 1, 2), PreconditionError);
}

TEST_CASE("triangle statements") {
  const MultiGraph g = k4_plus({{0, 1}, {2, 3}});
  const auto t = cycles_of_length(g, 3).front();
  for (std::uint32_t q : {2u, 3u}) {
    PointCounter c(q);
    const auto rs = verify_triangle(c, g, {t[0], t[1], t[2]});
    CHECK(rs.size() == 2);
    for (const auto& r : rs) CHECK(r.pass);
    CHECK(verify_triangle_vanishing(c, g, t).pass);
  }
}

TEST_CASE("4-face statements with N > 2n") {
  const MultiGraph k5 = complete_graph(5);
  const auto s = cycles_of_length(k5, 4).front();
  PointCounter c(2);
  const auto rs = verify_fourface(c, k5, {s[0], s[1], s[2], s[3]});
  CHECK(rs.size() == 5);
  for (const auto& r : rs) {
    INFO(r.statement);
    CHECK_FALSE(r.skipped);
    CHECK(r.pass);
  }
}

TEST_CASE("five-term congruence is skipped below three loops") {
  const MultiGraph c4 = cycle_graph(4);
  PointCounter c(3);
  const auto rs = verify_fourface(c, c4, {1, 2, 3, 4});
  bool saw = false;
  for (const auto& r : rs)
    if (r.statement == "fourface_five_term") {
      saw = true;
      CHECK(r.skipped);
    }
  CHECK(saw);
}

TEST_CASE("report serialisation") {
  PointCounter c(2);
  CongruenceReport r = verify_divisibility(c, complete_graph(4), 1, 2);
  r.graph = "K4";
  const auto j = to_json(r, false);
  CHECK(j["statement"] == "dual_divisibility");
  CHECK(j["counts"]["Z"] == 36);
  CHECK_FALSE(j.contains("millis"));
  CHECK(to_json(r, true).contains("millis"));
  CHECK(csv_header() == "statement,graph,q,modulus,pass,skipped,residues,millis");
  CHECK(to_csv(r, false).rfind("dual_divisibility,K4,2,4,1,0,", 0) == 0);
}

}
