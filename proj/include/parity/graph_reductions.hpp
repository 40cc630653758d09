#pragma once

#include <cstdint>
#include <optional>

#include "parity/instances.hpp"
#include "parity/parity_oracle.hpp"
#include "parity/report.hpp"
#include "parity/rng.hpp"

namespace parity {

/// Gadget scale shared by the copy constructions: even and far above the
/// instance weight bound, so gadget edges dominate every instance weight.
struct GadgetParams {
  Int H = 0;
  Int M = 0;

  static GadgetParams for_bound(Int M);
  /// Rejects inputs whose constructed gadgets could leave the exact range
  /// of 128-bit arithmetic (weights scale by ~64*H*n*4n and sums by another
  /// (5n)^3, so the closed-form cap is M * n^6 <= 2^96 / 3.2e6).
  static void require_weight_budget(long long n, Int M);
};

/// F(u,v) = min(0, min_t w(v,u)+w(u,t)+w(t,v)) over a completed weight
/// function; F(u,v) = 0 iff edge (v,u) lies on no negative triangle.
struct TriangleSlack {
  int n = 0;
  std::vector<Int> f;
  Int at(int u, int v) const { return f[static_cast<std::size_t>(u) * n + v]; }
};
TriangleSlack triangle_slack(const EdgeWeightedGraph& g);

int ceil_log2(long long n);
EdgeWeightedGraph scale_weights(const EdgeWeightedGraph& g, Int factor);

using GraphParityOracle = ParityOracle<EdgeWeightedGraph>;
using GraphExactOracle = ExactOracle<EdgeWeightedGraph>;
using IbcParityOracle = ParityOracle<IbcQuery>;
using RcParityOracle = ParityOracle<RcQuery>;
using PathParityOracle = ParityOracle<PathQuery>;

struct NwtResult {
  bool has_negative_triangle = false;
  std::optional<int> candidate_vertex;
  ReductionReport report;
};

struct ParityResult {
  int parity = 0;
  ReductionReport report;
};

struct ValueResult {
  Int value = 0;
  ReductionReport report;
};

struct VertexSearchResult {
  std::optional<int> vertex;
  ReductionReport report;
};

struct PerVertexParityResult {
  std::vector<int> bits;  // one per original vertex
  bool any_odd = false;
  ReductionReport report;
};

struct ZwtCountResult {
  Int zero_triangles = 0;
  ReductionReport report;
};

// --- gadget builders (exposed so identity tests can probe them) -----------

/// Undirected five-copy graph whose median row comes from the A copies and
/// equals (16n-1)H + sum_v F(u,v).  `perturb_s`, when given, marks A rows
/// whose B/C edges drop by one and B' edges rise by one (applied after
/// scaling by `scale`).
EdgeWeightedGraph build_median_gadget(const EdgeWeightedGraph& g, const GadgetParams& p,
                                      Int scale = 1,
                                      const std::vector<char>* perturb_s = nullptr);

/// Directed variant with B'->C and C'->C shortcut edges and weight-H filler
/// on every remaining ordered pair; max row sum is (16n-1)H exactly when
/// some vertex lies on no negative triangle.  `shift_ac` subtracts that
/// amount from every A->C edge; `perturb_s` adds one to the A->C edges of
/// marked rows.
EdgeWeightedGraph build_max_row_sum_gadget(const EdgeWeightedGraph& g, const GadgetParams& p,
                                           Int scale = 1, Int shift_ac = 0,
                                           const std::vector<char>* perturb_s = nullptr);

/// Doubled weights plus a hub x joined to every vertex with weight-k edges;
/// the sum of eccentricities equals 2kn+k exactly when the radius is >= k.
EdgeWeightedGraph build_hub_probe_graph(const EdgeWeightedGraph& g, Int k, bool add_y_hub);

/// Zero-weight path p_0..p_N over the vertices of g plus detour layers; the
/// replacement path for the i-th path edge costs offset_e plus the minimum
/// triangle weight at vertex i.  offset_e is even.
struct DetourGadget {
  EdgeWeightedGraph graph;
  int s = 0;
  int t = 0;
  Int offset_e = 0;
  int base_n = 0;
};
DetourGadget build_detour_gadget(const EdgeWeightedGraph& g);

/// Multiplies weights by four, adds one, and attaches a zero-weight triangle
/// to every vertex; afterwards each vertex's minimum triangle weight is odd
/// exactly when that vertex lay on a negative triangle.
EdgeWeightedGraph augment_with_zero_triangles(const EdgeWeightedGraph& g);

// --- reductions ------------------------------------------------------------

NwtResult nwt_via_median_parity(const EdgeWeightedGraph& g, GraphParityOracle& median_parity);

/// Three-layer lift; preserves existence of negative and zero triangles.
EdgeWeightedGraph nwt_to_tripartite(const EdgeWeightedGraph& g);

/// One-sided randomized detection on an undirected instance.
NwtResult nwt_via_ntvp(const EdgeWeightedGraph& g, GraphParityOracle& ntvp_parity, int rounds,
                       std::uint64_t seed);
/// Single detection round; succeeds with probability exactly 1/2 on
/// instances that contain a negative triangle, never on others.
bool ntvp_round_detects(const EdgeWeightedGraph& g, GraphParityOracle& ntvp_parity,
                        SeededRng& rng);

ParityResult ntvp_via_wiener_parity_directed(const EdgeWeightedGraph& g,
                                             GraphParityOracle& wiener_parity);
ParityResult ntvp_via_wiener_parity_undirected(const EdgeWeightedGraph& g,
                                               GraphParityOracle& wiener_parity);
ParityResult ntvp_via_sum_ecc_parity(const EdgeWeightedGraph& g,
                                     GraphParityOracle& sum_ecc_parity);
ParityResult ntvp_via_ibc_parity(const EdgeWeightedGraph& g, IbcParityOracle& ibc_parity);

NwtResult nwt_via_ibc_parity(const EdgeWeightedGraph& g, IbcParityOracle& ibc_parity, int rounds,
                             std::uint64_t seed);
bool ibc_round_detects(const EdgeWeightedGraph& g, IbcParityOracle& ibc_parity, SeededRng& rng);

ZwtCountResult zwt_count_via_nt_count(const EdgeWeightedGraph& g,
                                      GraphExactOracle& negative_count);
ParityResult zwt_parity_via_nt_parity(const EdgeWeightedGraph& g,
                                      GraphParityOracle& negative_parity);

/// One-sided randomized zero-triangle detection; per-round success is at
/// least 1/4 on instances with a zero triangle.
NwtResult zwt_via_zwt_parity(const EdgeWeightedGraph& g, GraphParityOracle& zwt_count_parity,
                             int rounds, std::uint64_t seed);
bool zwt_round_detects(const EdgeWeightedGraph& g, GraphParityOracle& zwt_count_parity,
                       SeededRng& rng);

// Distance-value searches.  These require a strongly connected input with
// nonnegative weights (hub edges of weight k must not be undercut).
ValueResult radius_via_sum_ecc(const EdgeWeightedGraph& g, GraphExactOracle& sum_ecc);
ValueResult radius_via_radius_parity(const EdgeWeightedGraph& g,
                                     GraphParityOracle& radius_parity);
ValueResult diameter_via_diameter_parity(const EdgeWeightedGraph& g,
                                         GraphParityOracle& diameter_parity);
ValueResult diameter_via_rc_parity(const EdgeWeightedGraph& g, RcParityOracle& rc_parity);

NwtResult nwt_via_mwt_parity(const EdgeWeightedGraph& g, GraphParityOracle& mwt_parity);
PerVertexParityResult nwt_via_mwt_parity_per_vertex(const EdgeWeightedGraph& g,
                                                    GraphParityOracle& mwt_per_vertex_parity);

NwtResult nwt_via_replacement_paths_parity(const EdgeWeightedGraph& g,
                                           PathParityOracle& rp_parity);
NwtResult nwt_via_second_shortest_parity(const EdgeWeightedGraph& g,
                                         PathParityOracle& ssp_parity);

VertexSearchResult coneg_via_max_row_sum_parity(const EdgeWeightedGraph& g,
                                                GraphParityOracle& max_row_sum_parity);

}  // namespace parity
