#include "parity/instances.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace parity {

const char* to_string(KnapsackVariant v) {
  switch (v) {
    case KnapsackVariant::multiset: return "multiset";
    case KnapsackVariant::zero_one: return "zero_one";
    case KnapsackVariant::indexed: return "indexed";
    case KnapsackVariant::coin_change: return "coin_change";
  }
  return "?";
}

std::optional<KnapsackVariant> knapsack_variant_from_string(const std::string& s) {
  if (s == "multiset") return KnapsackVariant::multiset;
  if (s == "zero_one") return KnapsackVariant::zero_one;
  if (s == "indexed") return KnapsackVariant::indexed;
  if (s == "coin_change") return KnapsackVariant::coin_change;
  return std::nullopt;
}

bool operator==(const Edge& a, const Edge& b) {
  return a.u == b.u && a.v == b.v && a.w == b.w;
}

static std::vector<Edge> sorted_edges(const EdgeWeightedGraph& g) {
  std::vector<Edge> es = g.edges;
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.w < b.w;
  });
  return es;
}

bool operator==(const EdgeWeightedGraph& a, const EdgeWeightedGraph& b) {
  return a.directed == b.directed && a.n == b.n && a.weight_bound == b.weight_bound &&
         sorted_edges(a) == sorted_edges(b);
}

bool operator==(const IntVector& a, const IntVector& b) {
  return a.weight_bound == b.weight_bound && a.values == b.values;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.weight_bound == b.weight_bound &&
         a.values == b.values;
}

bool operator==(const KnapsackItem& a, const KnapsackItem& b) {
  return a.weight == b.weight && a.value == b.value;
}

bool operator==(const KnapsackInstance& a, const KnapsackInstance& b) {
  return a.target == b.target && a.variant == b.variant && a.items == b.items;
}

bool operator==(const Sum3Instance& a, const Sum3Instance& b) {
  return a.a == b.a && a.b == b.b && a.c == b.c;
}

bool operator==(const NodeWeightedTree& a, const NodeWeightedTree& b) {
  return a.n == b.n && a.parent == b.parent && a.node_weight == b.node_weight;
}

Sum3Instance make_sum3(IntVector a, IntVector b, IntVector c) {
  Int m = std::max(a.weight_bound, std::max(b.weight_bound, c.weight_bound));
  a.weight_bound = b.weight_bound = c.weight_bound = m;
  return Sum3Instance{std::move(a), std::move(b), std::move(c)};
}

std::optional<std::string> validate(const EdgeWeightedGraph& g) {
  if (g.n < 0) return "size: negative vertex count";
  if (g.weight_bound < 0) return "bound: negative weight bound";
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges) {
    if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n)
      return "endpoint: edge endpoint out of range";
    if (e.u == e.v) return "self-loop: edge " + std::to_string(e.u);
    if (int_abs(e.w) > g.weight_bound)
      return "bound: edge weight " + int_to_string(e.w) + " exceeds declared bound " +
             int_to_string(g.weight_bound);
    std::pair<int, int> key =
        g.directed ? std::pair{e.u, e.v} : std::pair{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (!seen.insert(key).second) return "duplicate edge: pair repeated";
  }
  return std::nullopt;
}

std::optional<std::string> validate(const IntVector& v) {
  if (v.values.empty()) return "size: vector must have length >= 1";
  if (v.weight_bound < 0) return "bound: negative weight bound";
  for (Int x : v.values)
    if (int_abs(x) > v.weight_bound)
      return "bound: value " + int_to_string(x) + " exceeds declared bound " +
             int_to_string(v.weight_bound);
  return std::nullopt;
}

std::optional<std::string> validate(const IntMatrix& m) {
  if (m.rows < 1 || m.cols < 1) return "size: matrix dimensions must be positive";
  if (m.weight_bound < 0) return "bound: negative weight bound";
  if (m.values.size() != static_cast<std::size_t>(m.rows) * m.cols)
    return "size: expected rows*cols values";
  for (Int x : m.values)
    if (int_abs(x) > m.weight_bound) return "bound: entry exceeds declared bound";
  return std::nullopt;
}

std::optional<std::string> validate(const KnapsackInstance& k) {
  if (k.target < 1) return "target: must be positive";
  for (const KnapsackItem& it : k.items)
    if (it.weight < 1) return "weight: item weights must be >= 1";
  if (k.variant == KnapsackVariant::indexed || k.variant == KnapsackVariant::coin_change) {
    Int n = static_cast<Int>(k.items.size());
    if (k.target != n) return "indexed weights: target must equal item count";
    std::vector<Int> ws;
    for (const KnapsackItem& it : k.items) ws.push_back(it.weight);
    std::sort(ws.begin(), ws.end());
    for (Int i = 0; i < n; ++i)
      if (ws[static_cast<std::size_t>(i)] != i + 1)
        return "indexed weights: item weights must be a permutation of 1..n";
  }
  return std::nullopt;
}

std::optional<std::string> validate(const Sum3Instance& s) {
  if (auto e = validate(s.a)) return *e;
  if (auto e = validate(s.b)) return *e;
  if (auto e = validate(s.c)) return *e;
  if (s.a.values.size() != s.b.values.size() || s.b.values.size() != s.c.values.size())
    return "size: the three vectors must have equal length";
  return std::nullopt;
}

std::optional<std::string> validate(const NodeWeightedTree& t) {
  if (t.n < 1) return "size: tree must have at least one node";
  if (t.parent.size() != static_cast<std::size_t>(t.n) ||
      t.node_weight.size() != static_cast<std::size_t>(t.n))
    return "size: parent/weight arrays must have n entries";
  int roots = 0;
  for (int i = 0; i < t.n; ++i) {
    if (t.parent[i] == -1) {
      ++roots;
      continue;
    }
    if (t.parent[i] < 0 || t.parent[i] >= t.n) return "parent: index out of range";
  }
  if (roots != 1) return "root: tree must have exactly one root";
  // Climbing to the root from every node must terminate: no cycles.
  for (int i = 0; i < t.n; ++i) {
    int steps = 0, cur = i;
    while (t.parent[cur] != -1) {
      cur = t.parent[cur];
      if (++steps > t.n) return "cycle: parent array is not a tree";
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Int>> complete_weights(const EdgeWeightedGraph& g, Int fill) {
  std::vector<std::vector<Int>> w(g.n, std::vector<Int>(g.n, fill));
  for (const Edge& e : g.edges) {
    w[e.u][e.v] = e.w;
    if (!g.directed) w[e.v][e.u] = e.w;
  }
  return w;
}

Int max_abs_weight(const EdgeWeightedGraph& g) {
  Int m = 0;
  for (const Edge& e : g.edges) m = std::max(m, int_abs(e.w));
  return m;
}

bool strongly_connected(const EdgeWeightedGraph& g) {
  if (g.n <= 1) return true;
  std::vector<std::vector<int>> adj(g.n), radj(g.n);
  for (const Edge& e : g.edges) {
    adj[e.u].push_back(e.v);
    radj[e.v].push_back(e.u);
    if (!g.directed) {
      adj[e.v].push_back(e.u);
      radj[e.u].push_back(e.v);
    }
  }
  auto reaches_all = [&](const std::vector<std::vector<int>>& a) {
    std::vector<char> vis(g.n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : a[u])
        if (!vis[v]) {
          vis[v] = 1;
          ++count;
          stack.push_back(v);
        }
    }
    return count == g.n;
  };
  return reaches_all(adj) && reaches_all(radj);
}

}  // namespace parity
