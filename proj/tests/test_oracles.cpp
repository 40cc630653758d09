#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "parity/generate.hpp"
#include "parity/oracles.hpp"
#include "parity/parity_oracle.hpp"
#include "parity/rng.hpp"

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

IntMatrix mat2(Int a, Int b, Int c, Int d) {
  IntMatrix m;
  m.rows = m.cols = 2;
  m.values = {a, b, c, d};
  m.weight_bound = std::max({int_abs(a), int_abs(b), int_abs(c), int_abs(d)});
  return m;
}

IntVector vec(std::vector<Int> vals) {
  IntVector v;
  Int bound = 0;
  for (Int x : vals) bound = std::max(bound, int_abs(x));
  v.values = std::move(vals);
  v.weight_bound = bound;
  return v;
}

// Exhaustive reference for the path oracles: every simple s-to-t path by
// depth-first enumeration.
void all_simple_paths(const std::vector<std::vector<Int>>& w, int cur, int t,
                      std::vector<char>& used, Int weight, std::vector<int>& path,
                      const std::function<void(const std::vector<int>&, Int)>& fn) {
  if (cur == t) {
    fn(path, weight);
    return;
  }
  const int n = static_cast<int>(w.size());
  for (int v = 0; v < n; ++v) {
    if (used[v] || w[cur][v] >= kInf) continue;
    used[v] = 1;
    path.push_back(v);
    all_simple_paths(w, v, t, used, weight + w[cur][v], path, fn);
    path.pop_back();
    used[v] = 0;
  }
}

}  // namespace

TEST_CASE("min-plus product matches the hand example") {
  IntMatrix a = mat2(0, 1, 2, 3), b = mat2(0, 1, 1, 0);
  IntMatrix c = min_plus_product(a, b);
  CHECK(c.values == std::vector<Int>{0, 1, 2, 3});
}

TEST_CASE("max consecutive subsums of [1,-2,3] is [3,1,2]") {
  IntVector out = max_consecutive_subsums(vec({1, -2, 3}));
  CHECK(out.values == std::vector<Int>{3, 1, 2});
}

TEST_CASE("median of a bidirectional 2-vertex edge is its weight") {
  EdgeWeightedGraph g;
  g.directed = false;
  g.n = 2;
  g.weight_bound = 5;
  g.edges = {{0, 1, 5}};
  CHECK(median_value(g) == 5);
}

TEST_CASE("negative-triangle existence on the {1,1,-3} cycle") {
  CHECK(has_negative_triangle(triangle_graph(1, 1, -3, 3)));
  CHECK_FALSE(has_negative_triangle(triangle_graph(1, 1, -2, 3)));
}

TEST_CASE("triangle counts split by sign and always sum to the total") {
  TriangleCounts c = count_triangles(triangle_graph(1, 1, -3, 3));
  CHECK(c.total == 1);
  CHECK(c.negative == 1);
  CHECK(c.zero == 0);
  CHECK(c.positive == 0);

  c = count_triangles(triangle_graph(1, 1, -2, 3));
  CHECK(c.total == 1);
  CHECK(c.zero == 1);

  EdgeWeightedGraph empty;
  empty.n = 4;
  empty.directed = true;
  c = count_triangles(empty);
  CHECK(c.total == 0);

  SeededRng rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    EdgeWeightedGraph g =
        generate_graph(2 + iter % 6, 3, rng.next(), iter % 2 == 0);
    TriangleCounts tc = count_triangles(g);
    CHECK(tc.total == tc.negative + tc.zero + tc.positive);
    // Negating weights swaps the sign classes and fixes the zero class.
    EdgeWeightedGraph neg = g;
    for (Edge& e : neg.edges) e.w = -e.w;
    TriangleCounts nc = count_triangles(neg);
    CHECK(nc.negative == tc.positive);
    CHECK(nc.positive == tc.negative);
    CHECK(nc.zero == tc.zero);
  }
}

TEST_CASE("negative-triangle vertex counts") {
  CHECK(negative_triangle_vertex_count(triangle_graph(1, 1, -3, 3)) == 3);
  EdgeWeightedGraph empty;
  empty.n = 3;
  CHECK(negative_triangle_vertex_count(empty) == 0);

  EdgeWeightedGraph two;
  two.directed = true;
  two.n = 6;
  two.weight_bound = 2;
  two.edges = {{0, 1, -1}, {1, 2, 0}, {2, 0, 0}, {3, 4, -1}, {4, 5, 0}, {5, 3, 0}};
  CHECK(negative_triangle_vertex_count(two) == 6);
}

TEST_CASE("apsp invariants on random inputs") {
  SeededRng rng(11);
  int checked = 0;
  for (int iter = 0; iter < 200; ++iter) {
    EdgeWeightedGraph g = generate_graph(2 + iter % 5, 4, rng.next(), iter % 2 == 0);
    DistanceMatrix d;
    try {
      d = apsp(g);
    } catch (const OracleError&) {
      continue;  // negative cycle: rejected by contract
    }
    for (int i = 0; i < g.n; ++i) CHECK(d.at(i, i) == 0);
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        for (int k = 0; k < g.n; ++k)
          if (d.at(i, k) < kInf && d.at(k, j) < kInf && d.at(i, j) < kInf)
            CHECK(d.at(i, j) <= d.at(i, k) + d.at(k, j));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("negative cycles are rejected") {
  EdgeWeightedGraph g;
  g.directed = true;
  g.n = 2;
  g.weight_bound = 3;
  g.edges = {{0, 1, 1}, {1, 0, -2}};
  CHECK_THROWS_AS(apsp(g), OracleError);
}

TEST_CASE("distance aggregates demand strong connectivity") {
  EdgeWeightedGraph g;
  g.directed = true;
  g.n = 2;
  g.weight_bound = 1;
  g.edges = {{0, 1, 1}};
  CHECK_THROWS_AS(median_value(g), OracleError);
  CHECK_THROWS_AS(radius_value(g), OracleError);
}

TEST_CASE("radius <= eccentricities <= diameter, and sum-ecc >= n * radius") {
  SeededRng rng(23);
  int checked = 0;
  for (int iter = 0; iter < 300; ++iter) {
    EdgeWeightedGraph g = generate_graph(2 + iter % 5, 4, rng.next(), false);
    for (Edge& e : g.edges) e.w = int_abs(e.w);
    if (!strongly_connected(g)) continue;
    Int r = radius_value(g), d = diameter_value(g), s = sum_of_eccentricities(g);
    CHECK(r <= d);
    CHECK(s >= r * g.n);
    CHECK(s <= d * g.n);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("second shortest path is at least the shortest") {
  SeededRng rng(5);
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    int n = 3 + iter % 3;
    EdgeWeightedGraph g = generate_graph(n, 4, rng.next(), true);
    for (Edge& e : g.edges) e.w = int_abs(e.w);
    DistanceMatrix d;
    try {
      d = apsp(g);
    } catch (const OracleError&) {
      continue;
    }
    if (d.at(0, n - 1) >= kInf) continue;
    Int ssp;
    try {
      ssp = second_shortest_path(g, 0, n - 1);
    } catch (const OracleError&) {
      continue;
    }
    CHECK(ssp >= d.at(0, n - 1));
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("path oracles agree with exhaustive simple-path enumeration") {
  SeededRng rng(17);
  int checked_ssp = 0, checked_rp = 0;
  for (int iter = 0; iter < 400; ++iter) {
    int n = 3 + iter % 3;
    EdgeWeightedGraph g = generate_graph(n, 3, rng.next(), true);
    DistanceMatrix d;
    try {
      d = apsp(g);
    } catch (const OracleError&) {
      continue;
    }
    if (d.at(0, n - 1) >= kInf) continue;
    auto w = complete_weights(g, kInf);
    std::vector<int> fixed = fixed_shortest_path(g, 0, n - 1);

    // Second shortest: best simple path differing from the fixed one.
    Int best_other = kInf;
    std::vector<char> used(n, 0);
    used[0] = 1;
    std::vector<int> path{0};
    all_simple_paths(w, 0, n - 1, used, 0, path,
                     [&](const std::vector<int>& p, Int weight) {
                       if (p != fixed) best_other = std::min(best_other, weight);
                     });
    if (best_other < kInf) {
      CHECK(second_shortest_path(g, 0, n - 1) == best_other);
      ++checked_ssp;
    } else {
      CHECK_THROWS_AS(second_shortest_path(g, 0, n - 1), OracleError);
    }

    // Replacement paths: per avoided edge, the best simple path without it.
    std::vector<Int> rp = replacement_paths(g, 0, n - 1);
    REQUIRE(rp.size() == fixed.size() - 1);
    for (std::size_t i = 0; i + 1 < fixed.size(); ++i) {
      Int best = kInf;
      std::fill(used.begin(), used.end(), 0);
      used[0] = 1;
      path.assign(1, 0);
      all_simple_paths(w, 0, n - 1, used, 0, path,
                       [&](const std::vector<int>& p, Int weight) {
                         for (std::size_t j = 0; j + 1 < p.size(); ++j)
                           if (p[j] == fixed[i] && p[j + 1] == fixed[i + 1]) return;
                         best = std::min(best, weight);
                       });
      CHECK(rp[i] == best);
      ++checked_rp;
    }
  }
  CHECK(checked_ssp > 30);
  CHECK(checked_rp > 30);
}

TEST_CASE("knapsack DP matches exhaustive search on small instances") {
  SeededRng rng(29);
  for (int iter = 0; iter < 200; ++iter) {
    KnapsackInstance k = generate_knapsack(1 + iter % 5, 6, rng.next(),
                                           iter % 2 ? KnapsackVariant::zero_one
                                                    : KnapsackVariant::multiset);
    Int brute = 0;
    long long t = static_cast<long long>(k.target);
    if (k.variant == KnapsackVariant::zero_one) {
      int n = static_cast<int>(k.items.size());
      for (int mask = 0; mask < (1 << n); ++mask) {
        Int weight = 0, value = 0;
        for (int i = 0; i < n; ++i)
          if (mask & (1 << i)) {
            weight += k.items[i].weight;
            value += k.items[i].value;
          }
        if (weight <= t) brute = std::max(brute, value);
      }
    } else {
      // Bounded depth-first over multisets by remaining capacity.
      std::function<Int(long long)> best = [&](long long cap) {
        Int b = 0;
        for (const KnapsackItem& it : k.items)
          if (static_cast<long long>(it.weight) <= cap)
            b = std::max(b, it.value + best(cap - static_cast<long long>(it.weight)));
        return b;
      };
      brute = best(t);
    }
    CHECK(knapsack_optimum(k) == brute);
  }
}

TEST_CASE("coin change demands the exact target weight") {
  KnapsackInstance k;
  k.variant = KnapsackVariant::coin_change;
  k.target = 3;
  k.items = {{1, 5}, {2, -1}, {3, 1}};
  // Exact weight 3: {3} -> 1, {1,2} -> 4, {1,1,1} -> 15.
  CHECK(knapsack_optimum(k) == 15);
}

TEST_CASE("tree sparsity matches connected-subset enumeration") {
  SeededRng rng(31);
  for (int iter = 0; iter < 120; ++iter) {
    int n = 1 + iter % 7;
    NodeWeightedTree t = generate_tree(n, 8, rng.next());
    auto connected = [&](int mask) {
      int root = -1, count = 0;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) {
          ++count;
          if (t.parent[i] == -1 || !(mask & (1 << t.parent[i]))) {
            if (root != -1) return false;
            root = i;
          }
        }
      return count > 0 && root != -1;
    };
    for (int k = 1; k <= n; ++k) {
      Int brute = -kInf;
      for (int mask = 1; mask < (1 << n); ++mask) {
        if (__builtin_popcount(mask) != k || !connected(mask)) continue;
        Int sum = 0;
        for (int i = 0; i < n; ++i)
          if (mask & (1 << i)) sum += t.node_weight[i];
        brute = std::max(brute, sum);
      }
      CHECK(tree_sparsity(t, k) == brute);
    }
  }
}

TEST_CASE("max subarray on small matrices") {
  IntMatrix m = mat2(1, -2, -1, 3);
  CHECK(max_subarray(m) == 3);
  IntMatrix all_neg = mat2(-5, -2, -3, -4);
  CHECK(max_subarray(all_neg) == -2);

  SeededRng rng(37);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 1 + iter % 3;
    IntMatrix a = generate_matrix(n, 5, rng.next());
    Int brute = -kInf;
    for (int r1 = 0; r1 < n; ++r1)
      for (int r2 = r1; r2 < n; ++r2)
        for (int c1 = 0; c1 < n; ++c1)
          for (int c2 = c1; c2 < n; ++c2) {
            Int sum = 0;
            for (int r = r1; r <= r2; ++r)
              for (int c = c1; c <= c2; ++c) sum += a.at(r, c);
            brute = std::max(brute, sum);
          }
    CHECK(max_subarray(a) == brute);
  }
}

TEST_CASE("parity view exposes bits and counts every query") {
  auto oracle = ParityOracle<EdgeWeightedGraph>::from_exact(
      "median-parity",
      [](const EdgeWeightedGraph& g) { return std::vector<Int>{median_value(g)}; });
  EdgeWeightedGraph g;
  g.directed = false;
  g.n = 2;
  g.weight_bound = 5;
  g.edges = {{0, 1, 5}};
  CHECK(oracle.query_bit(g) == 1);  // median 5
  CHECK(oracle.query_bit(g) == 1);
  CHECK(oracle.ledger().calls == 2);
  CHECK(oracle.ledger().sizes == std::vector<long long>{2, 2});

  auto mcs_oracle = ParityOracle<IntVector>::from_exact(
      "mcs-parity", [](const IntVector& v) { return max_consecutive_subsums(v).values; });
  std::vector<int> bits = mcs_oracle.query(vec({1, -2, 3}));
  CHECK(bits == std::vector<int>{1, 1, 0});
}

TEST_CASE("exact_solve dispatches with extras") {
  EdgeWeightedGraph g = triangle_graph(1, 1, -3, 3);
  CHECK(exact_solve(ProblemKind::negative_triangle, g) == std::vector<Int>{1});
  CHECK(exact_solve(ProblemKind::triangle_counts, g) == std::vector<Int>{1, 1, 0, 0});

  SolveExtras extras;
  extras.k = 2;
  NodeWeightedTree t;
  t.n = 3;
  t.parent = {-1, 0, 0};
  t.node_weight = {1, 5, -2};
  CHECK(exact_solve(ProblemKind::tree_sparsity, t, extras) == std::vector<Int>{6});

  CHECK_THROWS_AS(exact_solve(ProblemKind::tree_sparsity, t, {}), OracleError);
  CHECK_THROWS_AS(exact_solve(ProblemKind::median, t, {}), OracleError);
}

TEST_CASE("reach centrality and betweenness behave on a directed path") {
  // 0 -> 1 -> 2 plus the return arc 2 -> 0: every pair is connected.
  EdgeWeightedGraph g;
  g.directed = true;
  g.n = 3;
  g.weight_bound = 2;
  g.edges = {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  CHECK(integer_betweenness(g, 1) == 1);  // only the pair (0,2) routes through 1
  CHECK(reach_centrality(g, 1) >= 1);
  EdgeWeightedGraph isolated;
  isolated.n = 2;
  isolated.directed = true;
  CHECK(reach_centrality(isolated, 0) == 0);
}
