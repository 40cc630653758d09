#include "parity/oracles.hpp"

#include <algorithm>

namespace parity {

// --- distances ------------------------------------------------------------

DistanceMatrix apsp(const EdgeWeightedGraph& g) {
  const int n = g.n;
  DistanceMatrix dm;
  dm.n = n;
  dm.d.assign(static_cast<std::size_t>(n) * n, kInf);
  for (int i = 0; i < n; ++i) dm.at(i, i) = 0;
  for (const Edge& e : g.edges) {
    dm.at(e.u, e.v) = std::min(dm.at(e.u, e.v), e.w);
    if (!g.directed) dm.at(e.v, e.u) = std::min(dm.at(e.v, e.u), e.w);
  }
  Int* d = dm.d.data();
  for (int k = 0; k < n; ++k) {
    const Int* dk = d + static_cast<std::size_t>(k) * n;
    for (int i = 0; i < n; ++i) {
      Int dik = d[static_cast<std::size_t>(i) * n + k];
      if (dik >= kInf) continue;
      Int* di = d + static_cast<std::size_t>(i) * n;
      for (int j = 0; j < n; ++j) {
        if (dk[j] >= kInf) continue;
        Int cand = dik + dk[j];
        if (cand < di[j]) di[j] = cand;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (dm.at(i, i) < 0) throw OracleError("negative cycle");
  return dm;
}

namespace {

DistanceMatrix apsp_all_finite(const EdgeWeightedGraph& g, const char* problem) {
  DistanceMatrix dm = apsp(g);
  if (!dm.all_finite())
    throw OracleError(std::string(problem) + ": graph is not strongly connected");
  return dm;
}

Int row_sum(const DistanceMatrix& dm, int u) {
  Int s = 0;
  for (int v = 0; v < dm.n; ++v) s += dm.at(u, v);
  return s;
}

Int eccentricity(const DistanceMatrix& dm, int u) {
  Int e = 0;
  for (int v = 0; v < dm.n; ++v) e = std::max(e, dm.at(u, v));
  return e;
}

}  // namespace

Int median_value(const EdgeWeightedGraph& g) {
  DistanceMatrix dm = apsp_all_finite(g, "median");
  Int best = kInf;
  for (int u = 0; u < g.n; ++u) best = std::min(best, row_sum(dm, u));
  return best;
}

Int wiener_index(const EdgeWeightedGraph& g) {
  DistanceMatrix dm = apsp_all_finite(g, "wiener index");
  Int s = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v = g.directed ? 0 : u + 1; v < g.n; ++v) s += dm.at(u, v);
  return s;
}

Int radius_value(const EdgeWeightedGraph& g) {
  DistanceMatrix dm = apsp_all_finite(g, "radius");
  Int best = kInf;
  for (int u = 0; u < g.n; ++u) best = std::min(best, eccentricity(dm, u));
  return best;
}

Int diameter_value(const EdgeWeightedGraph& g) {
  DistanceMatrix dm = apsp_all_finite(g, "diameter");
  Int best = 0;
  for (int u = 0; u < g.n; ++u) best = std::max(best, eccentricity(dm, u));
  return best;
}

Int sum_of_eccentricities(const EdgeWeightedGraph& g) {
  DistanceMatrix dm = apsp_all_finite(g, "sum of eccentricities");
  Int s = 0;
  for (int u = 0; u < g.n; ++u) s += eccentricity(dm, u);
  return s;
}

Int max_row_sum(const EdgeWeightedGraph& g) {
  DistanceMatrix dm = apsp_all_finite(g, "max row sum");
  Int best = -kInf;
  for (int u = 0; u < g.n; ++u) best = std::max(best, row_sum(dm, u));
  return best;
}

Int integer_betweenness(const EdgeWeightedGraph& g, int x) {
  if (x < 0 || x >= g.n) throw OracleError("betweenness: vertex out of range");
  DistanceMatrix dm = apsp(g);
  Int count = 0;
  for (int u = 0; u < g.n; ++u) {
    if (u == x || dm.at(u, x) >= kInf) continue;
    for (int v = 0; v < g.n; ++v) {
      if (v == x || dm.at(x, v) >= kInf || dm.at(u, v) >= kInf) continue;
      if (dm.at(u, x) + dm.at(x, v) == dm.at(u, v)) ++count;
    }
  }
  return count;
}

Int reach_centrality(const EdgeWeightedGraph& g, int x) {
  if (x < 0 || x >= g.n) throw OracleError("reach centrality: vertex out of range");
  DistanceMatrix dm = apsp(g);
  Int best = 0;
  for (int s = 0; s < g.n; ++s) {
    if (s == x || dm.at(s, x) >= kInf) continue;
    for (int t = 0; t < g.n; ++t) {
      if (t == x || dm.at(x, t) >= kInf || dm.at(s, t) >= kInf) continue;
      if (dm.at(s, x) + dm.at(x, t) == dm.at(s, t))
        best = std::max(best, std::min(dm.at(s, x), dm.at(x, t)));
    }
  }
  return best;
}

namespace {

std::vector<std::vector<Int>> arc_weights(const EdgeWeightedGraph& g) {
  auto w = complete_weights(g, kInf);
  return w;
}

// Depth-first search for the lexicographically smallest simple path from
// cur to t that only walks tight edges (edges on some shortest path).
bool lex_path_dfs(const std::vector<std::vector<Int>>& w, const DistanceMatrix& dm, int cur,
                  int t, std::vector<char>& used, std::vector<int>& path) {
  if (cur == t) return true;
  for (int v = 0; v < dm.n; ++v) {
    if (used[v] || w[cur][v] >= kInf || dm.at(v, t) >= kInf) continue;
    if (w[cur][v] + dm.at(v, t) != dm.at(cur, t)) continue;
    used[v] = 1;
    path.push_back(v);
    if (lex_path_dfs(w, dm, v, t, used, path)) return true;
    path.pop_back();
    used[v] = 0;
  }
  return false;
}

}  // namespace

std::vector<int> fixed_shortest_path(const EdgeWeightedGraph& g, int s, int t) {
  if (s < 0 || s >= g.n || t < 0 || t >= g.n)
    throw OracleError("shortest path: vertex out of range");
  DistanceMatrix dm = apsp(g);
  if (dm.at(s, t) >= kInf) throw OracleError("shortest path: t unreachable from s");
  auto w = arc_weights(g);
  std::vector<char> used(g.n, 0);
  std::vector<int> path{s};
  used[s] = 1;
  if (!lex_path_dfs(w, dm, s, t, used, path))
    throw OracleError("shortest path: could not realize a simple shortest path");
  return path;
}

namespace {

EdgeWeightedGraph without_edge(const EdgeWeightedGraph& g, int u, int v) {
  EdgeWeightedGraph h = g;
  h.edges.clear();
  for (const Edge& e : g.edges) {
    bool hit = g.directed ? (e.u == u && e.v == v)
                          : ((e.u == u && e.v == v) || (e.u == v && e.v == u));
    if (!hit) h.edges.push_back(e);
  }
  return h;
}

}  // namespace

std::vector<Int> replacement_paths(const EdgeWeightedGraph& g, int s, int t) {
  std::vector<int> path = fixed_shortest_path(g, s, t);
  std::vector<Int> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    DistanceMatrix dm = apsp(without_edge(g, path[i], path[i + 1]));
    out.push_back(dm.at(s, t));
  }
  return out;
}

Int second_shortest_path(const EdgeWeightedGraph& g, int s, int t) {
  // Every simple s-to-t path other than the fixed one avoids at least one of
  // its edges, and the best path avoiding a given edge is itself simple, so
  // the minimum over per-edge removals is exactly the second shortest value.
  std::vector<Int> rp = replacement_paths(g, s, t);
  Int best = kInf;
  for (Int v : rp) best = std::min(best, v);
  if (best >= kInf) throw OracleError("no second shortest path exists");
  return best;
}

// --- triangles ------------------------------------------------------------

void for_each_triangle(const EdgeWeightedGraph& g,
                       const std::function<void(int, int, int, Int)>& fn) {
  auto w = complete_weights(g, kInf);
  const int n = g.n;
  if (g.directed) {
    // u is the smallest vertex of the 3-cycle u -> v -> t -> u.
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (w[u][v] >= kInf) continue;
        for (int t = u + 1; t < n; ++t) {
          if (t == v || w[v][t] >= kInf || w[t][u] >= kInf) continue;
          fn(u, v, t, w[u][v] + w[v][t] + w[t][u]);
        }
      }
  } else {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (w[u][v] >= kInf) continue;
        for (int t = v + 1; t < n; ++t) {
          if (w[v][t] >= kInf || w[u][t] >= kInf) continue;
          fn(u, v, t, w[u][v] + w[v][t] + w[u][t]);
        }
      }
  }
}

TriangleCounts count_triangles(const EdgeWeightedGraph& g) {
  TriangleCounts c;
  for_each_triangle(g, [&](int, int, int, Int w) {
    ++c.total;
    if (w < 0)
      ++c.negative;
    else if (w == 0)
      ++c.zero;
    else
      ++c.positive;
  });
  return c;
}

bool has_negative_triangle(const EdgeWeightedGraph& g) {
  return count_triangles(g).negative > 0;
}

bool has_zero_triangle(const EdgeWeightedGraph& g) { return count_triangles(g).zero > 0; }

std::vector<char> vertices_in_negative_triangle(const EdgeWeightedGraph& g) {
  std::vector<char> mark(g.n, 0);
  for_each_triangle(g, [&](int u, int v, int t, Int w) {
    if (w < 0) mark[u] = mark[v] = mark[t] = 1;
  });
  return mark;
}

Int negative_triangle_vertex_count(const EdgeWeightedGraph& g) {
  Int c = 0;
  for (char m : vertices_in_negative_triangle(g)) c += m;
  return c;
}

std::vector<int> conegative_vertices(const EdgeWeightedGraph& g) {
  std::vector<char> mark = vertices_in_negative_triangle(g);
  std::vector<int> out;
  for (int u = 0; u < g.n; ++u)
    if (!mark[u]) out.push_back(u);
  return out;
}

Int min_weight_triangle(const EdgeWeightedGraph& g) {
  Int best = kInf;
  for_each_triangle(g, [&](int, int, int, Int w) { best = std::min(best, w); });
  if (best >= kInf) throw OracleError("graph has no triangle");
  return best;
}

std::vector<Int> min_weight_triangle_per_vertex(const EdgeWeightedGraph& g) {
  std::vector<Int> best(g.n, kInf);
  for_each_triangle(g, [&](int u, int v, int t, Int w) {
    best[u] = std::min(best[u], w);
    best[v] = std::min(best[v], w);
    best[t] = std::min(best[t], w);
  });
  return best;
}

// --- sequences ------------------------------------------------------------

IntMatrix min_plus_product(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw OracleError("min-plus product: shape mismatch");
  IntMatrix c;
  c.rows = a.rows;
  c.cols = b.cols;
  c.values.assign(static_cast<std::size_t>(c.rows) * c.cols, kInf);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      Int best = kInf;
      for (int k = 0; k < a.cols; ++k) best = std::min(best, a.at(i, k) + b.at(k, j));
      c.at(i, j) = best;
    }
  c.weight_bound = 0;
  for (Int v : c.values) c.weight_bound = std::max(c.weight_bound, int_abs(v));
  return c;
}

IntVector min_plus_convolution(const IntVector& a, const IntVector& b) {
  const int na = static_cast<int>(a.values.size());
  const int nb = static_cast<int>(b.values.size());
  IntVector c;
  c.values.assign(na + nb - 1, kInf);
  for (int j = 0; j < na; ++j)
    for (int k = 0; k < nb; ++k)
      c.values[j + k] = std::min(c.values[j + k], a.values[j] + b.values[k]);
  for (Int v : c.values) c.weight_bound = std::max(c.weight_bound, int_abs(v));
  return c;
}

IntVector max_consecutive_subsums(const IntVector& x) {
  const int n = static_cast<int>(x.values.size());
  IntVector out;
  out.values.assign(n, -kInf);
  for (int i = 0; i < n; ++i) {
    Int sum = 0;
    for (int len = 1; i + len <= n; ++len) {
      sum += x.values[i + len - 1];
      out.values[len - 1] = std::max(out.values[len - 1], sum);
    }
  }
  for (Int v : out.values) out.weight_bound = std::max(out.weight_bound, int_abs(v));
  return out;
}

IntVector diff_vector(const IntVector& a) {
  const int n = static_cast<int>(a.values.size());
  IntVector out;
  out.values.assign(n, -kInf);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i + k < n; ++i)
      out.values[k] = std::max(out.values[k], a.values[i + k] - a.values[i]);
  for (Int v : out.values) out.weight_bound = std::max(out.weight_bound, int_abs(v));
  return out;
}

Int knapsack_optimum(const KnapsackInstance& k) {
  if (k.target < 1) throw OracleError("knapsack: target must be positive");
  if (k.target > 10'000'000) throw OracleError("knapsack: target too large for exact DP");
  const long long t = static_cast<long long>(k.target);
  const Int kUnreached = -kInf;
  // best[w] = best value among selections of total weight exactly w.
  std::vector<Int> best(static_cast<std::size_t>(t) + 1, kUnreached);
  best[0] = 0;
  if (k.variant == KnapsackVariant::zero_one) {
    for (const KnapsackItem& it : k.items) {
      long long w = static_cast<long long>(it.weight);
      for (long long cap = t; cap >= w; --cap)
        if (best[cap - w] != kUnreached)
          best[cap] = std::max(best[cap], best[cap - w] + it.value);
    }
  } else {
    // multiset / indexed / coin_change: items may repeat.
    for (long long cap = 1; cap <= t; ++cap)
      for (const KnapsackItem& it : k.items) {
        long long w = static_cast<long long>(it.weight);
        if (w <= cap && best[cap - w] != kUnreached)
          best[cap] = std::max(best[cap], best[cap - w] + it.value);
      }
  }
  if (k.variant == KnapsackVariant::coin_change) {
    if (best[t] == kUnreached) throw OracleError("coin change: target weight unreachable");
    return best[t];
  }
  Int opt = 0;  // the empty selection is always available
  for (long long cap = 0; cap <= t; ++cap)
    if (best[cap] != kUnreached) opt = std::max(opt, best[cap]);
  return opt;
}

bool is_superadditive(const IntVector& a) {
  const int n = static_cast<int>(a.values.size());
  for (int i = 1; i < n; ++i)
    for (int j = i; i + j <= n - 1; ++j)
      if (a.values[i] + a.values[j] > a.values[i + j]) return false;
  return true;
}

Int tree_sparsity(const NodeWeightedTree& t, Int k) {
  if (k < 0 || k > t.n) throw OracleError("tree sparsity: k out of range");
  if (k == 0) return 0;
  const int kk = static_cast<int>(k);
  std::vector<std::vector<int>> children(t.n);
  int root = -1;
  for (int i = 0; i < t.n; ++i) {
    if (t.parent[i] == -1)
      root = i;
    else
      children[t.parent[i]].push_back(i);
  }
  // dp[v][s]: best weight of a connected subgraph of size s inside v's
  // subtree that contains v.  Children combine knapsack-style.
  std::vector<std::vector<Int>> dp(t.n);
  std::vector<int> order;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c : children[v]) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<Int>& row = dp[v];
    row.assign(kk + 1, -kInf);
    row[1] = t.node_weight[v];
    for (int c : children[v]) {
      std::vector<Int> merged = row;
      const std::vector<Int>& crow = dp[c];
      for (int s = 1; s <= kk; ++s) {
        if (row[s] == -kInf) continue;
        for (int cs = 1; s + cs <= kk; ++cs)
          if (crow[cs] != -kInf)
            merged[s + cs] = std::max(merged[s + cs], row[s] + crow[cs]);
      }
      row = std::move(merged);
    }
  }
  Int best = -kInf;
  for (int v = 0; v < t.n; ++v) best = std::max(best, dp[v][kk]);
  if (best == -kInf) throw OracleError("tree sparsity: no subtree of that size");
  return best;
}

Int sum3_max(const Sum3Instance& s) {
  const int n = static_cast<int>(s.a.values.size());
  Int best = -kInf;
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j)
      best = std::max(best, s.a.values[i] + s.b.values[j] + s.c.values[i + j]);
  if (best == -kInf) throw OracleError("sum3: no valid index pair");
  return best;
}

bool sum3_decision(const Sum3Instance& s) { return sum3_max(s) >= 0; }

Int max_subarray(const IntMatrix& m) {
  // Prefix sums over rows, then best contiguous column run per row band.
  std::vector<std::vector<Int>> pref(m.rows + 1, std::vector<Int>(m.cols, 0));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) pref[r + 1][c] = pref[r][c] + m.at(r, c);
  Int best = -kInf;
  for (int r1 = 0; r1 < m.rows; ++r1)
    for (int r2 = r1; r2 < m.rows; ++r2) {
      Int run = 0;
      bool open = false;
      for (int c = 0; c < m.cols; ++c) {
        Int col = pref[r2 + 1][c] - pref[r1][c];
        run = open ? run + col : col;
        open = true;
        best = std::max(best, run);
        if (run < 0) open = false;
      }
    }
  return best;
}

// --- uniform entry point ---------------------------------------------------

const char* to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::apsp: return "apsp";
    case ProblemKind::median: return "median";
    case ProblemKind::wiener_index: return "wiener-index";
    case ProblemKind::radius: return "radius";
    case ProblemKind::diameter: return "diameter";
    case ProblemKind::sum_of_eccentricities: return "sum-of-eccentricities";
    case ProblemKind::max_row_sum: return "max-row-sum";
    case ProblemKind::integer_betweenness: return "integer-betweenness";
    case ProblemKind::reach_centrality: return "reach-centrality";
    case ProblemKind::second_shortest_path: return "second-shortest-path";
    case ProblemKind::replacement_paths: return "replacement-paths";
    case ProblemKind::negative_triangle: return "negative-triangle";
    case ProblemKind::zero_triangle: return "zero-triangle";
    case ProblemKind::triangle_counts: return "triangle-counts";
    case ProblemKind::negative_triangle_vertex_count: return "negative-triangle-vertex-count";
    case ProblemKind::min_weight_triangle: return "min-weight-triangle";
    case ProblemKind::min_weight_triangle_per_vertex: return "min-weight-triangle-per-vertex";
    case ProblemKind::min_plus_product: return "min-plus-product";
    case ProblemKind::min_plus_convolution: return "min-plus-convolution";
    case ProblemKind::max_consecutive_subsums: return "max-consecutive-subsums";
    case ProblemKind::diff: return "diff";
    case ProblemKind::knapsack: return "knapsack";
    case ProblemKind::tree_sparsity: return "tree-sparsity";
    case ProblemKind::sum3_max: return "sum3-max";
    case ProblemKind::max_subarray: return "max-subarray";
  }
  return "?";
}

std::optional<ProblemKind> problem_kind_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(ProblemKind::max_subarray); ++i) {
    ProblemKind k = static_cast<ProblemKind>(i);
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

namespace {

const EdgeWeightedGraph& as_graph(const Instance& inst) {
  if (auto* g = std::get_if<EdgeWeightedGraph>(&inst)) return *g;
  throw OracleError("problem expects a graph instance");
}

int required(const std::optional<int>& v, const char* what) {
  if (!v) throw OracleError(std::string("missing extra: ") + what);
  return *v;
}

}  // namespace

std::vector<Int> exact_solve(ProblemKind kind, const Instance& inst, const SolveExtras& extras) {
  switch (kind) {
    case ProblemKind::apsp: {
      DistanceMatrix dm = apsp(as_graph(inst));
      return dm.d;
    }
    case ProblemKind::median: return {median_value(as_graph(inst))};
    case ProblemKind::wiener_index: return {wiener_index(as_graph(inst))};
    case ProblemKind::radius: return {radius_value(as_graph(inst))};
    case ProblemKind::diameter: return {diameter_value(as_graph(inst))};
    case ProblemKind::sum_of_eccentricities: return {sum_of_eccentricities(as_graph(inst))};
    case ProblemKind::max_row_sum: return {max_row_sum(as_graph(inst))};
    case ProblemKind::integer_betweenness:
      return {integer_betweenness(as_graph(inst), required(extras.x, "x"))};
    case ProblemKind::reach_centrality:
      return {reach_centrality(as_graph(inst), required(extras.x, "x"))};
    case ProblemKind::second_shortest_path:
      return {second_shortest_path(as_graph(inst), required(extras.s, "s"),
                                   required(extras.t, "t"))};
    case ProblemKind::replacement_paths:
      return replacement_paths(as_graph(inst), required(extras.s, "s"), required(extras.t, "t"));
    case ProblemKind::negative_triangle:
      return {has_negative_triangle(as_graph(inst)) ? Int(1) : Int(0)};
    case ProblemKind::zero_triangle:
      return {has_zero_triangle(as_graph(inst)) ? Int(1) : Int(0)};
    case ProblemKind::triangle_counts: {
      TriangleCounts c = count_triangles(as_graph(inst));
      return {c.total, c.negative, c.zero, c.positive};
    }
    case ProblemKind::negative_triangle_vertex_count:
      return {negative_triangle_vertex_count(as_graph(inst))};
    case ProblemKind::min_weight_triangle: return {min_weight_triangle(as_graph(inst))};
    case ProblemKind::min_weight_triangle_per_vertex:
      return min_weight_triangle_per_vertex(as_graph(inst));
    case ProblemKind::min_plus_product: {
      if (auto* p = std::get_if<MatPair>(&inst)) return min_plus_product(p->a, p->b).values;
      if (auto* m = std::get_if<IntMatrix>(&inst)) return min_plus_product(*m, *m).values;
      throw OracleError("min-plus product expects a matrix pair");
    }
    case ProblemKind::min_plus_convolution: {
      if (auto* p = std::get_if<VecPair>(&inst)) return min_plus_convolution(p->a, p->b).values;
      throw OracleError("min-plus convolution expects a vector pair");
    }
    case ProblemKind::max_consecutive_subsums: {
      if (auto* v = std::get_if<IntVector>(&inst)) return max_consecutive_subsums(*v).values;
      throw OracleError("max consecutive subsums expects a vector");
    }
    case ProblemKind::diff: {
      if (auto* v = std::get_if<IntVector>(&inst)) return diff_vector(*v).values;
      throw OracleError("diff expects a vector");
    }
    case ProblemKind::knapsack: {
      if (auto* k = std::get_if<KnapsackInstance>(&inst)) return {knapsack_optimum(*k)};
      throw OracleError("knapsack expects a knapsack instance");
    }
    case ProblemKind::tree_sparsity: {
      if (auto* t = std::get_if<NodeWeightedTree>(&inst)) {
        if (!extras.k) throw OracleError("missing extra: k");
        return {tree_sparsity(*t, *extras.k)};
      }
      throw OracleError("tree sparsity expects a tree");
    }
    case ProblemKind::sum3_max: {
      if (auto* s = std::get_if<Sum3Instance>(&inst)) return {sum3_max(*s)};
      throw OracleError("sum3 expects a sum3 instance");
    }
    case ProblemKind::max_subarray: {
      if (auto* m = std::get_if<IntMatrix>(&inst)) return {max_subarray(*m)};
      throw OracleError("max subarray expects a matrix");
    }
  }
  throw OracleError("unhandled problem kind");
}

}  // namespace parity
