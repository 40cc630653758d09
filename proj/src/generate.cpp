#include "parity/generate.hpp"

#include <algorithm>

#include "parity/rng.hpp"

namespace parity {

const char* to_string(Planted p) {
  switch (p) {
    case Planted::none: return "none";
    case Planted::negative_triangle: return "negative_triangle";
    case Planted::zero_triangle: return "zero_triangle";
    case Planted::superadditive: return "superadditive";
    case Planted::not_superadditive: return "not_superadditive";
  }
  return "?";
}

namespace {

bool has_triangle_with_sign(const EdgeWeightedGraph& g, bool want_zero) {
  auto w = complete_weights(g, kInf);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      for (int t = 0; t < g.n; ++t) {
        if (u == v || v == t || u == t) continue;
        if (w[u][v] >= kInf || w[v][t] >= kInf || w[t][u] >= kInf) continue;
        Int s = w[u][v] + w[v][t] + w[t][u];
        if (want_zero ? (s == 0) : (s < 0)) return true;
      }
  return false;
}

void set_edge(EdgeWeightedGraph& g, int u, int v, Int w) {
  for (Edge& e : g.edges) {
    bool hit = g.directed ? (e.u == u && e.v == v)
                          : ((e.u == u && e.v == v) || (e.u == v && e.v == u));
    if (hit) {
      e.u = u;
      e.v = v;
      e.w = w;
      return;
    }
  }
  g.edges.push_back({u, v, w});
}

bool superadditive_holds(const std::vector<Int>& a) {
  int n = static_cast<int>(a.size());
  for (int i = 1; i < n; ++i)
    for (int j = i; i + j <= n - 1; ++j)
      if (a[i] + a[j] > a[i + j]) return false;
  return true;
}

IntVector increasing_from_increments(std::vector<Int> inc, Int m) {
  IntVector v;
  v.weight_bound = m;
  v.values.push_back(0);
  for (Int d : inc) v.values.push_back(v.values.back() + d);
  return v;
}

}  // namespace

EdgeWeightedGraph generate_graph(int n, Int M, std::uint64_t seed, bool directed,
                                 Planted planted) {
  if (n < 1) throw InfeasiblePlant("graph needs n >= 1");
  if (M < 0) throw InfeasiblePlant("graph needs M >= 0");
  SeededRng rng(seed);
  EdgeWeightedGraph g;
  g.directed = directed;
  g.n = n;
  g.weight_bound = M;
  for (int u = 0; u < n; ++u)
    for (int v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v) continue;
      if (rng.coin()) g.edges.push_back({u, v, rng.range(-(long long)M, (long long)M)});
    }

  if (planted == Planted::negative_triangle || planted == Planted::zero_triangle) {
    bool zero = planted == Planted::zero_triangle;
    if (n < 3) throw InfeasiblePlant("triangle plant needs n >= 3");
    if (!zero && M < 1) throw InfeasiblePlant("negative triangle plant needs M >= 1");
    int r0 = static_cast<int>(rng.range(0, n - 1));
    int r1 = static_cast<int>(rng.range(0, n - 2));
    if (r1 >= r0) ++r1;
    int r2 = static_cast<int>(rng.range(0, n - 3));
    for (int taken : {std::min(r0, r1), std::max(r0, r1)})
      if (r2 >= taken) ++r2;
    Int w1, w2, w3;
    if (zero) {
      w1 = rng.range(-(long long)M, (long long)M);
      w2 = rng.range(std::max(-(long long)M, -(long long)M - (long long)w1),
                     std::min((long long)M, (long long)M - (long long)w1));
      w3 = -(w1 + w2);
    } else {
      w1 = rng.range(-(long long)M, 0);
      w2 = rng.range(-(long long)M, 0);
      w3 = rng.range(-(long long)M, std::min((long long)M, -(long long)(w1 + w2) - 1));
    }
    set_edge(g, r0, r1, w1);
    set_edge(g, r1, r2, w2);
    set_edge(g, r2, r0, w3);
    if (!has_triangle_with_sign(g, zero))
      throw std::logic_error("plant verification failed");
  } else if (planted != Planted::none) {
    throw InfeasiblePlant("plant kind does not apply to graphs");
  }
  return g;
}

IntVector generate_vector(int n, Int M, std::uint64_t seed, Planted planted) {
  if (n < 1) throw InfeasiblePlant("vector needs n >= 1");
  if (M < 0) throw InfeasiblePlant("vector needs M >= 0");
  SeededRng rng(seed);
  if (planted == Planted::none) {
    IntVector v;
    v.weight_bound = M;
    for (int i = 0; i < n; ++i) v.values.push_back(rng.range(-(long long)M, (long long)M));
    return v;
  }
  if (planted == Planted::superadditive) {
    // Nondecreasing positive increments give a convex vector with A[0] = 0,
    // which is always super-additive.
    if (n == 1) {
      if (M != 0) throw InfeasiblePlant("length-1 increasing vector forces M = 0");
      return IntVector{{0}, 0};
    }
    if (M < n - 1) throw InfeasiblePlant("strictly increasing vector needs M >= n-1");
    std::vector<Int> extra(n - 1, 0);
    long long budget = (long long)(M - (n - 1));
    for (long long r = 0; r < budget; ++r) ++extra[rng.range(0, n - 2)];
    std::sort(extra.begin(), extra.end());
    std::vector<Int> inc;
    for (Int e : extra) inc.push_back(1 + e);
    IntVector v = increasing_from_increments(inc, M);
    if (!superadditive_holds(v.values)) throw std::logic_error("plant verification failed");
    return v;
  }
  if (planted == Planted::not_superadditive) {
    if (n < 3 || M <= n - 1)
      throw InfeasiblePlant("no strictly increasing non-super-additive vector for this n, M");
    for (int attempt = 0; attempt < 1000; ++attempt) {
      // Random strictly increasing vector: increments >= 1 summing to M.
      std::vector<Int> inc(n - 1, 1);
      long long budget = (long long)(M - (n - 1));
      for (long long r = 0; r < budget; ++r) ++inc[rng.range(0, n - 2)];
      IntVector v = increasing_from_increments(inc, M);
      if (!superadditive_holds(v.values)) return v;
    }
    // Deterministic violator: front-load the first increment.
    std::vector<Int> inc(n - 1, 1);
    inc[0] = M - (n - 2);
    IntVector v = increasing_from_increments(inc, M);
    if (superadditive_holds(v.values)) throw std::logic_error("plant verification failed");
    return v;
  }
  throw InfeasiblePlant("plant kind does not apply to vectors");
}

IntMatrix generate_matrix(int n, Int M, std::uint64_t seed) {
  if (n < 1) throw InfeasiblePlant("matrix needs n >= 1");
  SeededRng rng(seed);
  IntMatrix m;
  m.rows = m.cols = n;
  m.weight_bound = M;
  for (int i = 0; i < n * n; ++i) m.values.push_back(rng.range(-(long long)M, (long long)M));
  return m;
}

KnapsackInstance generate_knapsack(int n, Int M, std::uint64_t seed, KnapsackVariant variant) {
  if (n < 1) throw InfeasiblePlant("knapsack needs n >= 1");
  SeededRng rng(seed);
  KnapsackInstance k;
  k.variant = variant;
  if (variant == KnapsackVariant::indexed || variant == KnapsackVariant::coin_change) {
    std::vector<Int> ws;
    for (int i = 1; i <= n; ++i) ws.push_back(i);
    for (int i = n - 1; i > 0; --i)
      std::swap(ws[i], ws[rng.range(0, i)]);
    for (Int w : ws) k.items.push_back({w, rng.range(-(long long)M, (long long)M)});
    k.target = n;
  } else {
    k.target = n + rng.range(0, n);
    for (int i = 0; i < n; ++i)
      k.items.push_back({rng.range(1, (long long)k.target),
                         rng.range(-(long long)M, (long long)M)});
  }
  return k;
}

Sum3Instance generate_sum3(int n, Int M, std::uint64_t seed) {
  SeededRng rng(seed);
  auto vec = [&] {
    IntVector v;
    v.weight_bound = M;
    for (int i = 0; i < n; ++i) v.values.push_back(rng.range(-(long long)M, (long long)M));
    return v;
  };
  IntVector a = vec(), b = vec(), c = vec();
  return make_sum3(std::move(a), std::move(b), std::move(c));
}

NodeWeightedTree generate_tree(int n, Int M, std::uint64_t seed) {
  if (n < 1) throw InfeasiblePlant("tree needs n >= 1");
  SeededRng rng(seed);
  NodeWeightedTree t;
  t.n = n;
  t.parent.push_back(-1);
  t.node_weight.push_back(rng.range(-(long long)M, (long long)M));
  for (int i = 1; i < n; ++i) {
    t.parent.push_back(static_cast<int>(rng.range(0, i - 1)));
    t.node_weight.push_back(rng.range(-(long long)M, (long long)M));
  }
  return t;
}

Instance generate_instance(const std::string& kind, int n, Int M, std::uint64_t seed,
                           bool directed, Planted planted) {
  if (kind == "graph") return generate_graph(n, M, seed, directed, planted);
  if (kind == "vector") return generate_vector(n, M, seed, planted);
  if (kind == "matrix") return generate_matrix(n, M, seed);
  if (kind == "knapsack") return generate_knapsack(n, M, seed);
  if (kind == "sum3") return generate_sum3(n, M, seed);
  if (kind == "tree") return generate_tree(n, M, seed);
  throw InfeasiblePlant("unknown instance kind '" + kind + "'");
}

}  // namespace parity
