#include <doctest.h>

#include "dgp/graph_gen.hpp"
#include "dgp/suite.hpp"

using namespace dgp;

TEST_SUITE("suite") {

TEST_CASE("K4 passes every applicable statement") {
  SuiteOptions opt;
  opt.timing = false;
  SuiteResult res;
  run_suite(complete_graph(4), "K4", opt, res);
  CHECK(res.failed == 0);
  CHECK(res.passed > 30);
  for (const auto& r : res.records) CHECK(r["graph"] == "K4");
}

TEST_CASE("disconnected graphs skip the counts") {
  SuiteOptions opt;
  SuiteResult res;
  run_suite(MultiGraph(4, {{0, 1}, {2, 3}}), "split", opt, res);
  CHECK(res.failed == 0);
  CHECK(res.skipped >= 1);
}

TEST_CASE("same seed, same JSON") {
  SuiteOptions opt;
  opt.timing = false;
  opt.seed = 3;
  SuiteResult a, b;
  run_suite(complete_bipartite(3, 3), "K33", opt, a);
  run_suite(complete_bipartite(3, 3), "K33", opt, b);
  CHECK(a.records.dump() == b.records.dump());
}

}
