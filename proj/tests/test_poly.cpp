#include <doctest.h>

#include "dgp/dodgson.hpp"
#include "dgp/error.hpp"
#include "dgp/graph_gen.hpp"
#include "dgp/poly.hpp"

using namespace dgp;

namespace {
SparsePoly P(const std::string& s) { return SparsePoly::parse(s); }
}

TEST_SUITE("polyring") {

TEST_CASE("arithmetic and canonical text") {
  const SparsePoly x = SparsePoly::variable(1), y = SparsePoly::variable(2);
  CHECK((x + y).to_text() == "+a1 +a2");
  CHECK(((x + y) * (x - y)).to_text() == "+a1^2 -a2^2");
  CHECK((x - x).to_text() == "0");
  CHECK((x - x).is_zero());
  CHECK(SparsePoly::constant(-3).to_text() == "-3");
  CHECK((x * y).scaled(2).to_text() == "+2*a1*a2");
}

TEST_CASE("parser accepts both coefficient styles") {
  CHECK(P("+1*a1*a2 +a3") == P("+a3 +a1*a2"));
  CHECK(P("-2*a1^2 +1").to_text() == "-2*a1^2 +1");
  CHECK(P("0").is_zero());
  CHECK_THROWS_AS(P("+a1 +"), InputError);
}

TEST_CASE("degrees, splits and substitution") {
  const SparsePoly f = P("+a1*a2 +a1*a3 +a2*a3");
  CHECK(f.total_degree() == 2);
  CHECK(f.degree_in(1) == 1);
  CHECK(f.is_homogeneous());
  CHECK(f.is_multilinear());
  CHECK(f.unit_coefficients());
  const auto [hi, lo] = f.linear_split(1);
  CHECK(hi == P("+a2 +a3"));
  CHECK(lo == P("+a2*a3"));
  CHECK(f.substitute_zero(3) == P("+a1*a2"));
  CHECK(f.variables() == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(P("+a1^2").linear_split(1), InputError);
  CHECK(f.eval_mod({0, 1, 2, 3}, 5) == 1);
}

TEST_CASE("resultant in a variable") {
  // Res_x(x - a2, x - a3) = +-(a2 - a3)
  const SparsePoly r = resultant(P("+a1 -a2"), P("+a1 -a3"), 1);
  CHECK((r == P("+a2 -a3") || r == P("-a2 +a3")));
}

}

TEST_SUITE("dodgson") {

TEST_CASE("triangle polynomials") {
  const MultiGraph c3 = cycle_graph(3);
  CHECK(psi(c3).to_text() == "+a1 +a2 +a3");
  CHECK(phi(c3).to_text() == "+a1*a2 +a1*a3 +a2*a3");
  CHECK(phi(c3, PhiBackend::tree_sum) == phi(c3));
}

TEST_CASE("banana polynomials") {
  CHECK(phi(banana(2)) == P("+a1 +a2"));
  CHECK(psi(banana(2)) == P("+a1 +a2"));
  CHECK(phi(banana(3)) == P("+a1 +a2 +a3"));
  CHECK(psi(banana(3)) == P("+a1*a2 +a1*a3 +a2*a3"));
}

TEST_CASE("K4 has sixteen spanning-tree monomials") {
  const SparsePoly f = phi(complete_graph(4));
  CHECK(f.size() == 16);
  CHECK(f.total_degree() == 3);
  CHECK(f.unit_coefficients());
  CHECK(f == phi(complete_graph(4), PhiBackend::tree_sum));
}

TEST_CASE("Dodgson minors of the triangle") {
  const MultiGraph c3 = cycle_graph(3);
  const SparsePoly m = dual_dodgson(c3, EdgeSet{1}, EdgeSet{2});
  CHECK((m == P("+a3") || m == P("-a3")));
  CHECK(dual_dodgson(c3, EdgeSet{1}, EdgeSet{1}) == P("+a2 +a3"));
  CHECK(dual_dodgson(c3, EdgeSet{}, EdgeSet{}, EdgeSet{3}) == P("+a1*a2"));
  CHECK(dual_dodgson(c3, EdgeSet{}, EdgeSet{}) == phi(c3));
}

TEST_CASE("Cremona transform swaps the two polynomials") {
  for (const MultiGraph& g : {cycle_graph(3), complete_graph(4), banana(3), petersen()}) {
    CHECK(cremona(phi(g), g.edge_ids()) == psi(g));
    CHECK(cremona(psi(g), g.edge_ids()) == phi(g));
  }
}

TEST_CASE("degenerate and disconnected graphs give zero") {
  CHECK(phi(MultiGraph(3, {{0, 1}})).is_zero());
  CHECK(phi(contract_edges(MultiGraph(1, {{0, 0}}), EdgeSet{1})).is_zero());
}

}
