#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parity/int128.hpp"

namespace parity {

// ---------------------------------------------------------------------------
// Instance types.  All are immutable values after construction; every module
// shares them.  Vertices and indices are 0-based throughout.
// ---------------------------------------------------------------------------

struct Edge {
  int u = 0;
  int v = 0;
  Int w = 0;
};

/// Directed or undirected integer-weighted graph with a declared bound M on
/// |w|.  Stored sparsely; constructions that need a complete weight function
/// apply an explicit completion (see complete_weights).
struct EdgeWeightedGraph {
  bool directed = true;
  int n = 0;
  std::vector<Edge> edges;
  Int weight_bound = 0;  // M, with |w| <= M for every edge
};

struct IntVector {
  std::vector<Int> values;
  Int weight_bound = 0;
};

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> values;  // row-major
  Int weight_bound = 0;

  Int at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
  Int& at(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }
};

enum class KnapsackVariant { multiset, zero_one, indexed, coin_change };

struct KnapsackItem {
  Int weight = 0;  // >= 1
  Int value = 0;
};

struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  Int target = 0;  // t
  KnapsackVariant variant = KnapsackVariant::multiset;
};

/// Three equal-length vectors sharing one weight bound.
struct Sum3Instance {
  IntVector a, b, c;
};

struct NodeWeightedTree {
  int n = 0;
  std::vector<int> parent;  // parent[i], or -1 for the root
  std::vector<Int> node_weight;
};

// ---------------------------------------------------------------------------

const char* to_string(KnapsackVariant v);
std::optional<KnapsackVariant> knapsack_variant_from_string(const std::string& s);

bool operator==(const Edge& a, const Edge& b);
bool operator==(const EdgeWeightedGraph& a, const EdgeWeightedGraph& b);
bool operator==(const IntVector& a, const IntVector& b);
bool operator==(const IntMatrix& a, const IntMatrix& b);
bool operator==(const KnapsackItem& a, const KnapsackItem& b);
bool operator==(const KnapsackInstance& a, const KnapsackInstance& b);
bool operator==(const Sum3Instance& a, const Sum3Instance& b);
bool operator==(const NodeWeightedTree& a, const NodeWeightedTree& b);

/// Builds a Sum3Instance, normalizing all three bounds to their maximum.
Sum3Instance make_sum3(IntVector a, IntVector b, IntVector c);

// validate: returns std::nullopt on success, otherwise a description of the
// first violated invariant.  The first word of the description is a stable
// token ("bound", "indexed weights", ...).
std::optional<std::string> validate(const EdgeWeightedGraph& g);
std::optional<std::string> validate(const IntVector& v);
std::optional<std::string> validate(const IntMatrix& m);
std::optional<std::string> validate(const KnapsackInstance& k);
std::optional<std::string> validate(const Sum3Instance& s);
std::optional<std::string> validate(const NodeWeightedTree& t);

/// Complete weight function: W[u][v] for every ordered pair, including the
/// diagonal, with `fill` where the graph stores no edge.  Undirected graphs
/// yield a symmetric matrix.  Completion never creates a negative triangle
/// when fill >= 4M.
std::vector<std::vector<Int>> complete_weights(const EdgeWeightedGraph& g, Int fill);

/// Max |w| over stored edges (0 when edgeless).
Int max_abs_weight(const EdgeWeightedGraph& g);

/// True when every ordered pair is mutually reachable.
bool strongly_connected(const EdgeWeightedGraph& g);

}  // namespace parity
