#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parity/instances.hpp"
#include "parity/serialize.hpp"

namespace parity {

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All-pairs distances; kInf marks unreachable pairs.
struct DistanceMatrix {
  int n = 0;
  std::vector<Int> d;

  Int at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
  Int& at(int u, int v) { return d[static_cast<std::size_t>(u) * n + v]; }
  bool all_finite() const {
    for (Int x : d)
      if (x >= kInf) return false;
    return true;
  }
};

struct TriangleCounts {
  Int total = 0;
  Int negative = 0;
  Int zero = 0;
  Int positive = 0;
};

// --- distances ------------------------------------------------------------

/// Floyd-Warshall.  Throws OracleError on a negative cycle.
DistanceMatrix apsp(const EdgeWeightedGraph& g);

// Single-value distance aggregates.  All of these demand a strongly
// connected input (every distance finite) and throw OracleError otherwise.
Int median_value(const EdgeWeightedGraph& g);
Int wiener_index(const EdgeWeightedGraph& g);  // ordered pairs if directed, unordered otherwise
Int radius_value(const EdgeWeightedGraph& g);
Int diameter_value(const EdgeWeightedGraph& g);
Int sum_of_eccentricities(const EdgeWeightedGraph& g);
Int max_row_sum(const EdgeWeightedGraph& g);

/// Ordered pairs (u,v) with u,v != x and d(u,x) + d(x,v) = d(u,v), all finite.
Int integer_betweenness(const EdgeWeightedGraph& g, int x);

/// max over ordered pairs (s,t), s,t != x, with d(s,x)+d(x,t)=d(s,t) of
/// min(d(s,x), d(x,t)); 0 when no such pair exists.
Int reach_centrality(const EdgeWeightedGraph& g, int x);

/// The lexicographically smallest (by vertex sequence) shortest s-to-t path.
/// Throws when t is unreachable.
std::vector<int> fixed_shortest_path(const EdgeWeightedGraph& g, int s, int t);

/// For each edge of the fixed shortest path, the shortest s-to-t distance
/// avoiding that edge; kInf where none exists.
std::vector<Int> replacement_paths(const EdgeWeightedGraph& g, int s, int t);

/// Minimum weight over simple s-to-t paths that differ from the fixed
/// shortest path in at least one edge.  Throws when no such path exists.
Int second_shortest_path(const EdgeWeightedGraph& g, int s, int t);

// --- triangles ------------------------------------------------------------

/// Enumerates each triangle once.  Directed: 3-cycles u->v->t->u (two
/// orientations of a triple are distinct triangles).  Undirected: vertex
/// triples with all three edges present.
void for_each_triangle(const EdgeWeightedGraph& g,
                       const std::function<void(int, int, int, Int)>& fn);

TriangleCounts count_triangles(const EdgeWeightedGraph& g);
bool has_negative_triangle(const EdgeWeightedGraph& g);
bool has_zero_triangle(const EdgeWeightedGraph& g);
Int negative_triangle_vertex_count(const EdgeWeightedGraph& g);
std::vector<char> vertices_in_negative_triangle(const EdgeWeightedGraph& g);
/// Vertices that belong to no negative triangle.
std::vector<int> conegative_vertices(const EdgeWeightedGraph& g);
/// Throws when the graph has no triangle at all.
Int min_weight_triangle(const EdgeWeightedGraph& g);
/// Per-vertex minimum triangle weight; kInf for vertices in no triangle.
std::vector<Int> min_weight_triangle_per_vertex(const EdgeWeightedGraph& g);

// --- sequences ------------------------------------------------------------

IntMatrix min_plus_product(const IntMatrix& a, const IntMatrix& b);
IntVector min_plus_convolution(const IntVector& a, const IntVector& b);
/// B[k] = max over windows of length k+1 of the window sum, k = 0..n-1.
IntVector max_consecutive_subsums(const IntVector& x);
/// Diff(A)[k] = max_i (A[k+i] - A[i]), k = 0..n-1.
IntVector diff_vector(const IntVector& a);

Int knapsack_optimum(const KnapsackInstance& k);
bool is_superadditive(const IntVector& a);

/// Maximum node-weight sum over connected subgraphs with exactly k nodes.
/// Throws when k exceeds n; k = 0 yields 0.
Int tree_sparsity(const NodeWeightedTree& t, Int k);

/// max over i, j >= 0 with i+j < n of A[i]+B[j]+C[i+j].
Int sum3_max(const Sum3Instance& s);
bool sum3_decision(const Sum3Instance& s);  // sum3_max >= 0

/// Maximum sum over nonempty contiguous submatrices.
Int max_subarray(const IntMatrix& m);

// --- uniform entry point ---------------------------------------------------

enum class ProblemKind {
  apsp,
  median,
  wiener_index,
  radius,
  diameter,
  sum_of_eccentricities,
  max_row_sum,
  integer_betweenness,
  reach_centrality,
  second_shortest_path,
  replacement_paths,
  negative_triangle,
  zero_triangle,
  triangle_counts,
  negative_triangle_vertex_count,
  min_weight_triangle,
  min_weight_triangle_per_vertex,
  min_plus_product,
  min_plus_convolution,
  max_consecutive_subsums,
  diff,
  knapsack,
  tree_sparsity,
  sum3_max,
  max_subarray,
};

const char* to_string(ProblemKind k);
std::optional<ProblemKind> problem_kind_from_string(const std::string& s);

struct SolveExtras {
  std::optional<int> x;      // IBC / reach centrality
  std::optional<int> s;      // path problems
  std::optional<int> t;
  std::optional<Int> k;      // tree sparsity
};

/// Exhaustive/textbook exact answer, flattened to a value vector (row-major
/// for matrix outputs; single element for scalar problems; booleans as 0/1).
std::vector<Int> exact_solve(ProblemKind kind, const Instance& inst,
                             const SolveExtras& extras = {});

}  // namespace parity
