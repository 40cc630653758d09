#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "parity/generate.hpp"
#include "parity/instances.hpp"
#include "parity/oracles.hpp"
#include "parity/rng.hpp"
#include "parity/serialize.hpp"

using namespace parity;

namespace {

EdgeWeightedGraph triangle_graph(Int w1, Int w2, Int w3, Int bound, bool directed = true) {
  EdgeWeightedGraph g;
  g.directed = directed;
  g.n = 3;
  g.weight_bound = bound;
  g.edges = {{0, 1, w1}, {1, 2, w2}, {2, 0, w3}};
  return g;
}

}  // namespace

TEST_CASE("validate flags the first violated invariant") {
  EdgeWeightedGraph g = triangle_graph(7, 1, 1, 5);
  auto v = validate(g);
  REQUIRE(v.has_value());
  CHECK(v->substr(0, 5) == "bound");

  KnapsackInstance k;
  k.variant = KnapsackVariant::indexed;
  k.target = 3;
  k.items = {{1, 0}, {2, 0}, {2, 0}};
  auto kv = validate(k);
  REQUIRE(kv.has_value());
  CHECK(kv->substr(0, 15) == "indexed weights");

  CHECK_FALSE(validate(triangle_graph(1, 1, -3, 3)).has_value());

  EdgeWeightedGraph loop;
  loop.n = 2;
  loop.directed = true;
  loop.edges = {{1, 1, 0}};
  CHECK(validate(loop).has_value());

  NodeWeightedTree t;
  t.n = 2;
  t.parent = {1, 0};
  t.node_weight = {0, 0};
  CHECK(validate(t).has_value());  // two-node cycle, no root
}

TEST_CASE("planted generators deliver what they promise") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EdgeWeightedGraph g = generate_graph(5, 3, seed, true, Planted::negative_triangle);
    CHECK_FALSE(validate(g).has_value());
    CHECK(has_negative_triangle(g));

    EdgeWeightedGraph z = generate_graph(5, 3, seed, true, Planted::zero_triangle);
    CHECK(has_zero_triangle(z));

    IntVector sup = generate_vector(5, 12, seed, Planted::superadditive);
    CHECK(is_superadditive(sup));
    CHECK(sup.values.front() == 0);
    CHECK(sup.values.back() == sup.weight_bound);

    IntVector bad = generate_vector(5, 12, seed, Planted::not_superadditive);
    CHECK_FALSE(is_superadditive(bad));
  }
  CHECK(is_superadditive(generate_vector(3, 5, 2, Planted::superadditive)));
}

TEST_CASE("infeasible plants are rejected") {
  CHECK_THROWS_AS(generate_graph(2, 3, 0, true, Planted::negative_triangle), InfeasiblePlant);
  CHECK_THROWS_AS(generate_graph(5, 0, 0, true, Planted::negative_triangle), InfeasiblePlant);
  CHECK_THROWS_AS(generate_vector(5, 3, 0, Planted::superadditive), InfeasiblePlant);
  CHECK_THROWS_AS(generate_vector(4, 3, 0, Planted::not_superadditive), InfeasiblePlant);
  CHECK_THROWS_AS(generate_graph(0, 1, 0, true), InfeasiblePlant);
}

TEST_CASE("round trip: parse(serialize(x)) equals x across all kinds") {
  SeededRng rng(7);
  int trips = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    std::uint64_t seed = rng.next();
    int n = 1 + static_cast<int>(rng.range(0, 6));
    Int m = rng.range(0, 9);
    Instance inst;
    switch (iter % 6) {
      case 0: inst = generate_graph(n, m, seed, rng.coin()); break;
      case 1: inst = generate_vector(n, m, seed); break;
      case 2: inst = generate_matrix(n, m, seed); break;
      case 3:
        inst = generate_knapsack(n, m, seed,
                                 rng.coin() ? KnapsackVariant::multiset
                                            : KnapsackVariant::indexed);
        break;
      case 4: inst = generate_sum3(n, m, seed); break;
      case 5: inst = generate_tree(n, m, seed); break;
    }
    Instance back = parse_instance(serialize(inst));
    REQUIRE(back == inst);
    ++trips;
  }
  CHECK(trips == 1000);
}

TEST_CASE("round trip: a planted triangle instance survives and stays planted") {
  EdgeWeightedGraph g = generate_graph(3, 3, 1, true, Planted::negative_triangle);
  Instance back = parse_instance(serialize(g));
  REQUIRE(std::holds_alternative<EdgeWeightedGraph>(back));
  CHECK(std::get<EdgeWeightedGraph>(back) == g);
  CHECK(has_negative_triangle(std::get<EdgeWeightedGraph>(back)));
}

TEST_CASE("generators are reproducible byte for byte") {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
    CHECK(serialize(generate_graph(6, 4, seed, true)) ==
          serialize(generate_graph(6, 4, seed, true)));
    CHECK(serialize(generate_sum3(5, 7, seed)) == serialize(generate_sum3(5, 7, seed)));
  }
  CHECK(serialize(generate_graph(6, 4, 1, true)) != serialize(generate_graph(6, 4, 2, true)));
}

TEST_CASE("parse reports line numbers on malformed input") {
  // Header promises three edges, body carries two.
  std::string text = "graph directed n=3 m=3 M=1\nedge 0 1 1\nedge 1 2 1\n";
  try {
    parse_instance(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line >= 3);
  }

  CHECK_THROWS_AS(parse_instance("graph directed n=2 m=1 M=1\nedge 0 5 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("widget n=1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("vector n=2 M=1\nval 1\nval x\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("vector n=1 M=1\nval 1\nval 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance(""), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
  std::string text = "# a triangle\n\ngraph directed n=3 m=3 M=3\nedge 0 1 1 # one\nedge 1 2 1\nedge 2 0 -3\n";
  Instance inst = parse_instance(text);
  CHECK(std::get<EdgeWeightedGraph>(inst) == triangle_graph(1, 1, -3, 3));
}

TEST_CASE("sum3 normalizes the three bounds to their maximum") {
  IntVector a{{1}, 1}, b{{2}, 2}, c{{3}, 3};
  Sum3Instance s = make_sum3(a, b, c);
  CHECK(s.a.weight_bound == 3);
  CHECK(s.b.weight_bound == 3);
  CHECK_FALSE(validate(s).has_value());
}

TEST_CASE("completion fills every ordered pair including the diagonal") {
  EdgeWeightedGraph g = triangle_graph(1, 1, -3, 3);
  auto w = complete_weights(g, 12);
  CHECK(w[0][1] == 1);
  CHECK(w[1][0] == 12);
  CHECK(w[0][0] == 12);
  CHECK(w[2][0] == -3);
}
