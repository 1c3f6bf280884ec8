#include <doctest.h>

#include "dgp/count.hpp"
#include "dgp/dodgson.hpp"
#include "dgp/error.hpp"
#include "dgp/graph_gen.hpp"
#include "dgp/rng.hpp"

using namespace dgp;

namespace {
SparsePoly P(const std::string& s) { return SparsePoly::parse(s); }
}

TEST_SUITE("fq-count") {

TEST_CASE("small affine counts") {
  CHECK(count_affine({P("+a1 +a2")}, 2, 3) == 3);
  CHECK(count_affine({}, 4, 3) == 81);
  CHECK(count_affine({phi(cycle_graph(3))}, 3, 2) == 4);
  CHECK(count_affine({P("+1")}, 3, 5) == 0);
  CHECK(count_affine({P("0")}, 2, 5) == 25);
  CHECK(count_affine({P("+a1^2 +1")}, 1, 3) == 0);
  CHECK(count_affine({P("+a1^2 +1")}, 1, 5) == 2);
  CHECK(count_affine({P("+a1*a2 -1")}, 2, 4) == 3);
}

TEST_CASE("eliminated count agrees with enumeration") {
  Rng rng(5);
  RandomGraphOptions o;
  o.max_edges = 8;
  for (int i = 0; i < 40; ++i) {
    const MultiGraph g = random_connected(rng, o);
    const int m = g.max_edge_id();
    for (std::uint32_t q : {2u, 3u, 4u}) {
      const std::vector<SparsePoly> sys = {phi(g)};
      CHECK(count_affine(sys, m, q) == count_affine_eliminated(sys, m, q));
      if (m >= 2) {
        const std::vector<SparsePoly> two = {dual_dodgson(g, {1}, {1}), dual_dodgson(g, {}, {}, {1})};
        CHECK(count_affine(two, m, q) == count_affine_eliminated(two, m, q));
      }
    }
  }
}

TEST_CASE("nonlinear systems fall back to enumeration") {
  const std::vector<SparsePoly> sys = {P("+a1^2 +a2^2 -1"), P("+a1*a3 -a2")};
  for (std::uint32_t q : {3u, 5u, 7u, 9u})
    CHECK(count_affine(sys, 3, q) == count_affine_eliminated(sys, 3, q));
}

TEST_CASE("K4 dual hypersurface counts") {
  const SparsePoly f = phi(complete_graph(4));
  CHECK(count_affine_eliminated({f}, 6, 2) == 36);
  CHECK(count_affine_eliminated({f}, 6, 3) == 261);
  CHECK(count_affine_eliminated({f}, 6, 4) == 1072);
  CHECK(count_affine_eliminated({f}, 6, 5) == 3225);
  CHECK(count_affine_eliminated({f}, 6, 7) == 17101);
  CHECK(count_affine({f}, 6, 5) == 3225);
}

TEST_CASE("budget is enforced before enumeration") {
  const SparsePoly f = phi(complete_graph(5));
  CHECK_THROWS_AS(count_affine({f}, 10, 5, 1000), ResourceError);
  CHECK_THROWS_AS(PointCounter(6), InputError);
}

TEST_CASE("cross-check mode and statistics") {
  PointCounter c(3);
  c.set_cross_check(1u << 20);
  c.eliminated({phi(complete_graph(4))}, 6);
  CHECK(c.stats().cross_checked >= 1);
  CHECK(c.stats().eliminations + c.stats().enumerations >= 1);
}

}
