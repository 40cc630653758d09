#include "parity/registry.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "parity/oracles.hpp"

namespace parity {

// --------------------------------------------------------------------------
// External oracle protocol
// --------------------------------------------------------------------------

std::string run_external_process(const ExternalOracleSpec& spec, const std::string& input) {
  char path[] = "/tmp/parity_oracle_XXXXXX";
  int fd = mkstemp(path);
  if (fd < 0) throw OracleError("oracle protocol: could not create temp file");
  FILE* f = fdopen(fd, "w");
  fwrite(input.data(), 1, input.size(), f);
  fclose(f);

  std::string cmd = "timeout " + std::to_string(spec.timeout_sec) + "s " + spec.command + " < " +
                    path + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    unlink(path);
    throw OracleError("oracle protocol: could not spawn oracle command");
  }
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  unlink(path);
  if (status != 0) {
    if (WIFEXITED(status) && WEXITSTATUS(status) == 124)
      throw OracleError("oracle protocol: oracle command timed out");
    throw OracleError("oracle protocol: oracle command failed");
  }
  return out;
}

namespace {

std::vector<std::string> reply_tokens(const std::string& reply, const char* head1,
                                      const char* head2) {
  std::istringstream is(reply);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty() && (toks[0] == head1 || toks[0] == head2)) return toks;
  }
  throw OracleError("oracle protocol: malformed reply (expected a parity/value line)");
}

}  // namespace

std::vector<int> parse_parity_reply(const std::string& reply) {
  std::vector<std::string> toks = reply_tokens(reply, "parity", "parities");
  std::vector<int> bits;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    if (toks[i] != "0" && toks[i] != "1")
      throw OracleError("oracle protocol: parity bits must be 0 or 1");
    bits.push_back(toks[i] == "1" ? 1 : 0);
  }
  if (bits.empty()) throw OracleError("oracle protocol: reply carried no bits");
  return bits;
}

std::vector<Int> parse_value_reply(const std::string& reply) {
  std::vector<std::string> toks = reply_tokens(reply, "value", "values");
  std::vector<Int> vals;
  for (std::size_t i = 1; i < toks.size(); ++i) vals.push_back(int_from_string(toks[i]));
  if (vals.empty()) throw OracleError("oracle protocol: reply carried no values");
  return vals;
}

// --------------------------------------------------------------------------
// Query serialization for external oracles
// --------------------------------------------------------------------------

namespace {

std::string query_header(const std::string& problem, const std::string& extras = "") {
  return "# query " + problem + (extras.empty() ? "" : " " + extras) + "\n";
}

std::string query_text(const std::string& p, const EdgeWeightedGraph& g) {
  return query_header(p) + serialize(g);
}
std::string query_text(const std::string& p, const IbcQuery& q) {
  return query_header(p, "x=" + std::to_string(q.x)) + serialize(q.graph);
}
std::string query_text(const std::string& p, const RcQuery& q) {
  return query_header(p, "x=" + std::to_string(q.x)) + serialize(q.graph);
}
std::string query_text(const std::string& p, const PathQuery& q) {
  return query_header(p, "s=" + std::to_string(q.s) + " t=" + std::to_string(q.t)) +
         serialize(q.graph);
}
std::string query_text(const std::string& p, const MatPairQuery& q) {
  return query_header(p) + serialize(MatPair{q.a, q.b});
}
std::string query_text(const std::string& p, const VecPairQuery& q) {
  return query_header(p) + serialize(VecPair{q.a, q.b});
}
std::string query_text(const std::string& p, const IntMatrix& q) {
  return query_header(p) + serialize(q);
}
std::string query_text(const std::string& p, const IntVector& q) {
  return query_header(p) + serialize(q);
}
std::string query_text(const std::string& p, const KnapsackInstance& q) {
  return query_header(p) + serialize(q);
}
std::string query_text(const std::string& p, const Sum3Instance& q) {
  return query_header(p) + serialize(q);
}

template <class Q>
ParityOracle<Q> parity_oracle(const RunContext& ctx, const std::string& name,
                              typename ParityOracle<Q>::ExactFn exact) {
  if (ctx.external) {
    ExternalOracleSpec spec = *ctx.external;
    std::string problem = name;
    return ParityOracle<Q>::from_bits(name, [spec, problem](const Q& q) {
      return parse_parity_reply(run_external_process(spec, query_text(problem, q)));
    });
  }
  return ParityOracle<Q>::from_exact(name, std::move(exact));
}

template <class Q>
ExactOracle<Q> exact_oracle(const RunContext& ctx, const std::string& name,
                            typename ExactOracle<Q>::ExactFn exact) {
  if (ctx.external) {
    ExternalOracleSpec spec = *ctx.external;
    std::string problem = name;
    return ExactOracle<Q>(name, [spec, problem](const Q& q) {
      return parse_value_reply(run_external_process(spec, query_text(problem, q)));
    });
  }
  return ExactOracle<Q>(name, std::move(exact));
}

// --------------------------------------------------------------------------
// Canonical answer strings
// --------------------------------------------------------------------------

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string bits_str(const std::vector<int>& bits) {
  std::string s;
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::string values_str(const std::vector<Int>& vals) {
  std::string s;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) s.push_back(',');
    s += int_to_string(vals[i]);
  }
  return s;
}

// --------------------------------------------------------------------------
// Instance accessors / preparation
// --------------------------------------------------------------------------

const EdgeWeightedGraph& graph_of(const Instance& inst) {
  if (auto* g = std::get_if<EdgeWeightedGraph>(&inst)) return *g;
  throw std::invalid_argument("this reduction expects a graph instance");
}
const IntVector& vector_of(const Instance& inst) {
  if (auto* v = std::get_if<IntVector>(&inst)) return *v;
  throw std::invalid_argument("this reduction expects a vector instance");
}
const Sum3Instance& sum3_of(const Instance& inst) {
  if (auto* s = std::get_if<Sum3Instance>(&inst)) return *s;
  throw std::invalid_argument("this reduction expects a sum3 instance");
}
const VecPair& vecpair_of(const Instance& inst) {
  if (auto* p = std::get_if<VecPair>(&inst)) return *p;
  throw std::invalid_argument("this reduction expects a vecpair instance");
}
const MatPair& matpair_of(const Instance& inst) {
  if (auto* p = std::get_if<MatPair>(&inst)) return *p;
  throw std::invalid_argument("this reduction expects a matpair instance");
}

Instance prepare_graph_directed(int n, Int m, std::uint64_t seed, Planted planted) {
  return generate_graph(n, m, seed, true, planted);
}
Instance prepare_graph_undirected(int n, Int m, std::uint64_t seed, Planted planted) {
  return generate_graph(n, m, seed, false, planted);
}

// Strongly connected, nonnegative weights: the distance-search probes embed
// the input's distances and need both.
Instance prepare_graph_metric(int n, Int m, std::uint64_t seed, Planted) {
  EdgeWeightedGraph g = generate_graph(n, m, seed, true, Planted::none);
  for (Edge& e : g.edges) e.w = int_abs(e.w);
  SeededRng rng(seed ^ 0x5bd1e995u);
  auto w = complete_weights(g, kInf);
  for (int u = 0; u < n; ++u) {
    int v = (u + 1) % n;
    if (u != v && w[u][v] >= kInf)
      g.edges.push_back({u, v, rng.range(0, (long long)m)});
  }
  return g;
}

Instance prepare_superadd_vector(int n, Int m, std::uint64_t seed, Planted planted) {
  if (planted == Planted::none) planted = (seed % 2 == 0) ? Planted::superadditive
                                                          : Planted::not_superadditive;
  if (planted == Planted::not_superadditive) {
    try {
      return generate_vector(n, m, seed, planted);
    } catch (const InfeasiblePlant&) {
      planted = Planted::superadditive;  // only the linear vector exists
    }
  }
  return generate_vector(n, m, seed, planted);
}

Instance prepare_vecpair(int n, Int m, std::uint64_t seed, Planted) {
  SeededRng rng(seed);
  return VecPair{generate_vector(n, m, rng.fork(1).seed(), Planted::none),
                 generate_vector(n, m, rng.fork(2).seed(), Planted::none)};
}

Instance prepare_matpair(int n, Int m, std::uint64_t seed, Planted) {
  SeededRng rng(seed);
  return MatPair{generate_matrix(n, m, rng.fork(1).seed()),
                 generate_matrix(n, m, rng.fork(2).seed())};
}

Instance prepare_vector(int n, Int m, std::uint64_t seed, Planted planted) {
  return generate_vector(n, m, seed, planted);
}

Instance prepare_sum3(int n, Int m, std::uint64_t seed, Planted) {
  return generate_sum3(n, m, seed);
}

// --------------------------------------------------------------------------
// Shared oracle factories (brute force unless the context plugs a command)
// --------------------------------------------------------------------------

GraphParityOracle median_parity_oracle(const RunContext& ctx) {
  return parity_oracle<EdgeWeightedGraph>(
      ctx, "median-parity", [](const EdgeWeightedGraph& g) {
        return std::vector<Int>{median_value(g)};
      });
}
GraphParityOracle ntvp_parity_oracle(const RunContext& ctx) {
  return parity_oracle<EdgeWeightedGraph>(
      ctx, "negative-triangle-vertex-parity", [](const EdgeWeightedGraph& g) {
        return std::vector<Int>{negative_triangle_vertex_count(g)};
      });
}
GraphParityOracle wiener_parity_oracle(const RunContext& ctx) {
  return parity_oracle<EdgeWeightedGraph>(ctx, "wiener-parity", [](const EdgeWeightedGraph& g) {
    return std::vector<Int>{wiener_index(g)};
  });
}
GraphParityOracle sum_ecc_parity_oracle(const RunContext& ctx) {
  return parity_oracle<EdgeWeightedGraph>(
      ctx, "sum-of-eccentricities-parity", [](const EdgeWeightedGraph& g) {
        return std::vector<Int>{sum_of_eccentricities(g)};
      });
}
GraphParityOracle max_row_sum_parity_oracle(const RunContext& ctx) {
  return parity_oracle<EdgeWeightedGraph>(
      ctx, "max-row-sum-parity", [](const EdgeWeightedGraph& g) {
        return std::vector<Int>{max_row_sum(g)};
      });
}
GraphParityOracle radius_parity_oracle(const RunContext& ctx) {
  return parity_oracle<EdgeWeightedGraph>(ctx, "radius-parity", [](const EdgeWeightedGraph& g) {
    return std::vector<Int>{radius_value(g)};
  });
}
GraphParityOracle diameter_parity_oracle(const RunContext& ctx) {
  return parity_oracle<EdgeWeightedGraph>(
      ctx, "diameter-parity", [](const EdgeWeightedGraph& g) {
        return std::vector<Int>{diameter_value(g)};
      });
}
GraphParityOracle mwt_parity_oracle(const RunContext& ctx) {
  return parity_oracle<EdgeWeightedGraph>(
      ctx, "min-weight-triangle-parity", [](const EdgeWeightedGraph& g) {
        return std::vector<Int>{min_weight_triangle(g)};
      });
}
GraphParityOracle mwt_per_vertex_parity_oracle(const RunContext& ctx) {
  return parity_oracle<EdgeWeightedGraph>(
      ctx, "min-weight-triangle-per-vertex-parity",
      [](const EdgeWeightedGraph& g) { return min_weight_triangle_per_vertex(g); });
}
GraphParityOracle zwt_count_parity_oracle(const RunContext& ctx) {
  return parity_oracle<EdgeWeightedGraph>(
      ctx, "zero-triangle-count-parity", [](const EdgeWeightedGraph& g) {
        return std::vector<Int>{count_triangles(g).zero};
      });
}
GraphParityOracle nt_count_parity_oracle(const RunContext& ctx) {
  return parity_oracle<EdgeWeightedGraph>(
      ctx, "negative-triangle-count-parity", [](const EdgeWeightedGraph& g) {
        return std::vector<Int>{count_triangles(g).negative};
      });
}
IbcParityOracle ibc_parity_oracle(const RunContext& ctx) {
  return parity_oracle<IbcQuery>(ctx, "integer-betweenness-parity", [](const IbcQuery& q) {
    return std::vector<Int>{integer_betweenness(q.graph, q.x)};
  });
}
RcParityOracle rc_parity_oracle(const RunContext& ctx) {
  return parity_oracle<RcQuery>(ctx, "reach-centrality-parity", [](const RcQuery& q) {
    return std::vector<Int>{reach_centrality(q.graph, q.x)};
  });
}
PathParityOracle rp_parity_oracle(const RunContext& ctx) {
  return parity_oracle<PathQuery>(ctx, "replacement-paths-parity", [](const PathQuery& q) {
    return replacement_paths(q.graph, q.s, q.t);
  });
}
PathParityOracle ssp_parity_oracle(const RunContext& ctx) {
  return parity_oracle<PathQuery>(ctx, "second-shortest-path-parity", [](const PathQuery& q) {
    return std::vector<Int>{second_shortest_path(q.graph, q.s, q.t)};
  });
}
GraphExactOracle sum_ecc_exact_oracle(const RunContext& ctx) {
  return exact_oracle<EdgeWeightedGraph>(
      ctx, "sum-of-eccentricities", [](const EdgeWeightedGraph& g) {
        return std::vector<Int>{sum_of_eccentricities(g)};
      });
}
GraphExactOracle nt_count_exact_oracle(const RunContext& ctx) {
  return exact_oracle<EdgeWeightedGraph>(
      ctx, "negative-triangle-count", [](const EdgeWeightedGraph& g) {
        return std::vector<Int>{count_triangles(g).negative};
      });
}
MatPairParityOracle minplus_parity_oracle(const RunContext& ctx) {
  return parity_oracle<MatPairQuery>(
      ctx, "min-plus-product-parity", [](const MatPairQuery& q) {
        return min_plus_product(q.a, q.b).values;
      });
}
MatSelfParityOracle minplus_self_parity_oracle(const RunContext& ctx) {
  return parity_oracle<IntMatrix>(
      ctx, "min-plus-self-product-parity", [](const IntMatrix& q) {
        return min_plus_product(q, q).values;
      });
}
VecPairParityOracle conv_parity_oracle(const RunContext& ctx) {
  return parity_oracle<VecPairQuery>(
      ctx, "min-plus-convolution-parity", [](const VecPairQuery& q) {
        return min_plus_convolution(q.a, q.b).values;
      });
}
DiffParityOracle diff_parity_oracle(const RunContext& ctx) {
  return parity_oracle<IntVector>(ctx, "diff-parity", [](const IntVector& q) {
    return diff_vector(q).values;
  });
}
KnapsackParityOracle knapsack_parity_oracle(const RunContext& ctx) {
  return parity_oracle<KnapsackInstance>(
      ctx, "knapsack-parity", [](const KnapsackInstance& q) {
        return std::vector<Int>{knapsack_optimum(q)};
      });
}
KnapsackExactOracle knapsack_exact_oracle(const RunContext& ctx) {
  return exact_oracle<KnapsackInstance>(ctx, "knapsack", [](const KnapsackInstance& q) {
    return std::vector<Int>{knapsack_optimum(q)};
  });
}
Sum3ParityOracle maxsum_parity_oracle(const RunContext& ctx) {
  return parity_oracle<Sum3Instance>(ctx, "sum3-max-parity", [](const Sum3Instance& q) {
    return std::vector<Int>{sum3_max(q)};
  });
}

// --------------------------------------------------------------------------
// Registry
// --------------------------------------------------------------------------

ReductionEntry make_entry(std::string name, std::string summary, std::string kind) {
  ReductionEntry e;
  e.name = std::move(name);
  e.summary = std::move(summary);
  e.instance_kind = std::move(kind);
  if (e.instance_kind == "graph") e.prepare = prepare_graph_directed;
  if (e.instance_kind == "vector") e.prepare = prepare_vector;
  if (e.instance_kind == "vecpair") e.prepare = prepare_vecpair;
  if (e.instance_kind == "matpair") e.prepare = prepare_matpair;
  if (e.instance_kind == "sum3") e.prepare = prepare_sum3;
  return e;
}

std::vector<ReductionEntry> build_registry() {
  std::vector<ReductionEntry> entries;

  {
    ReductionEntry e = make_entry("nwt-via-median-parity",
                                  "negative-triangle detection from median parity bits", "graph");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = median_parity_oracle(ctx);
      NwtResult r = nwt_via_median_parity(graph_of(inst), oracle);
      RunOutcome out{bool_str(r.has_negative_triangle), std::move(r.report)};
      if (r.candidate_vertex)
        out.report.note("candidate_vertex", std::to_string(*r.candidate_vertex));
      return out;
    };
    e.brute = [](const Instance& inst) { return bool_str(has_negative_triangle(graph_of(inst))); };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("nwt-via-ntvp",
                                  "randomized negative-triangle detection from vertex-parity "
                                  "queries (one-sided)",
                                  "graph");
    e.randomized = true;
    e.round_rate_lo = 0.45;
    e.round_rate_hi = 0.55;
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = ntvp_parity_oracle(ctx);
      const EdgeWeightedGraph& g = graph_of(inst);
      EdgeWeightedGraph und = g.directed ? nwt_to_tripartite(g) : g;
      NwtResult r = nwt_via_ntvp(und, oracle, ctx.rounds, ctx.seed);
      return RunOutcome{bool_str(r.has_negative_triangle), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) { return bool_str(has_negative_triangle(graph_of(inst))); };
    e.single_round = [](const Instance& inst, std::uint64_t round_seed) {
      RunContext ctx;
      auto oracle = ntvp_parity_oracle(ctx);
      const EdgeWeightedGraph& g = graph_of(inst);
      EdgeWeightedGraph und = g.directed ? nwt_to_tripartite(g) : g;
      SeededRng rng(round_seed);
      return ntvp_round_detects(und, oracle, rng);
    };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("ntvp-via-wiener-parity",
                                  "vertex parity from one Wiener-index parity query (directed)",
                                  "graph");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = wiener_parity_oracle(ctx);
      ParityResult r = ntvp_via_wiener_parity_directed(graph_of(inst), oracle);
      return RunOutcome{std::to_string(r.parity), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) {
      return std::to_string(parity_bit(negative_triangle_vertex_count(graph_of(inst))));
    };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("ntvp-via-wiener-parity-undirected",
                                  "vertex parity from one Wiener-index parity query (undirected)",
                                  "graph");
    e.prepare = prepare_graph_undirected;
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = wiener_parity_oracle(ctx);
      ParityResult r = ntvp_via_wiener_parity_undirected(graph_of(inst), oracle);
      return RunOutcome{std::to_string(r.parity), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) {
      return std::to_string(parity_bit(negative_triangle_vertex_count(graph_of(inst))));
    };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("ntvp-via-sum-ecc-parity",
                                  "vertex parity from one eccentricity-sum parity query", "graph");
    e.prepare = prepare_graph_undirected;
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = sum_ecc_parity_oracle(ctx);
      ParityResult r = ntvp_via_sum_ecc_parity(graph_of(inst), oracle);
      return RunOutcome{std::to_string(r.parity), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) {
      return std::to_string(parity_bit(negative_triangle_vertex_count(graph_of(inst))));
    };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("ntvp-via-ibc-parity",
                                  "vertex parity from one betweenness parity query", "graph");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = ibc_parity_oracle(ctx);
      ParityResult r = ntvp_via_ibc_parity(graph_of(inst), oracle);
      return RunOutcome{std::to_string(r.parity), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) {
      return std::to_string(parity_bit(negative_triangle_vertex_count(graph_of(inst))));
    };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("nwt-via-ibc-parity",
                                  "randomized negative-triangle detection from betweenness "
                                  "parity (one-sided)",
                                  "graph");
    e.randomized = true;
    e.round_rate_lo = 0.45;
    e.round_rate_hi = 0.55;
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = ibc_parity_oracle(ctx);
      NwtResult r = nwt_via_ibc_parity(graph_of(inst), oracle, ctx.rounds, ctx.seed);
      return RunOutcome{bool_str(r.has_negative_triangle), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) { return bool_str(has_negative_triangle(graph_of(inst))); };
    e.single_round = [](const Instance& inst, std::uint64_t round_seed) {
      RunContext ctx;
      auto oracle = ibc_parity_oracle(ctx);
      SeededRng rng(round_seed);
      return ibc_round_detects(graph_of(inst), oracle, rng);
    };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("zwt-count-via-nt-count",
                                  "zero-triangle count from two negative-triangle counts",
                                  "graph");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = nt_count_exact_oracle(ctx);
      ZwtCountResult r = zwt_count_via_nt_count(graph_of(inst), oracle);
      return RunOutcome{int_to_string(r.zero_triangles), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) {
      return int_to_string(count_triangles(graph_of(inst)).zero);
    };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("zwt-parity-via-nt-parity",
                                  "zero-triangle parity from two negative-triangle parities",
                                  "graph");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = nt_count_parity_oracle(ctx);
      ParityResult r = zwt_parity_via_nt_parity(graph_of(inst), oracle);
      return RunOutcome{std::to_string(r.parity), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) {
      return std::to_string(parity_bit(count_triangles(graph_of(inst)).zero));
    };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("zwt-via-zwt-parity",
                                  "randomized zero-triangle detection from count-parity queries "
                                  "(one-sided)",
                                  "graph");
    e.randomized = true;
    e.round_rate_lo = 0.20;
    e.round_rate_hi = 1.0;
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = zwt_count_parity_oracle(ctx);
      NwtResult r = zwt_via_zwt_parity(graph_of(inst), oracle, ctx.rounds, ctx.seed);
      return RunOutcome{bool_str(r.has_negative_triangle), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) { return bool_str(has_zero_triangle(graph_of(inst))); };
    e.single_round = [](const Instance& inst, std::uint64_t round_seed) {
      RunContext ctx;
      auto oracle = zwt_count_parity_oracle(ctx);
      SeededRng rng(round_seed);
      return zwt_round_detects(graph_of(inst), oracle, rng);
    };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("radius-via-sum-ecc",
                                  "exact radius by probing eccentricity sums", "graph");
    e.prepare = prepare_graph_metric;
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = sum_ecc_exact_oracle(ctx);
      ValueResult r = radius_via_sum_ecc(graph_of(inst), oracle);
      return RunOutcome{int_to_string(r.value), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) { return int_to_string(radius_value(graph_of(inst))); };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("radius-via-radius-parity",
                                  "exact radius from its own parity bits", "graph");
    e.prepare = prepare_graph_metric;
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = radius_parity_oracle(ctx);
      ValueResult r = radius_via_radius_parity(graph_of(inst), oracle);
      return RunOutcome{int_to_string(r.value), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) { return int_to_string(radius_value(graph_of(inst))); };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("diameter-via-diameter-parity",
                                  "exact diameter from its own parity bits", "graph");
    e.prepare = prepare_graph_metric;
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = diameter_parity_oracle(ctx);
      ValueResult r = diameter_via_diameter_parity(graph_of(inst), oracle);
      return RunOutcome{int_to_string(r.value), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) { return int_to_string(diameter_value(graph_of(inst))); };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("diameter-via-rc-parity",
                                  "exact diameter from reach-centrality parity bits", "graph");
    e.prepare = prepare_graph_metric;
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = rc_parity_oracle(ctx);
      ValueResult r = diameter_via_rc_parity(graph_of(inst), oracle);
      return RunOutcome{int_to_string(r.value), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) { return int_to_string(diameter_value(graph_of(inst))); };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("nwt-via-mwt-parity",
                                  "negative-triangle detection from one min-triangle parity "
                                  "query",
                                  "graph");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = mwt_parity_oracle(ctx);
      NwtResult r = nwt_via_mwt_parity(graph_of(inst), oracle);
      return RunOutcome{bool_str(r.has_negative_triangle), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) { return bool_str(has_negative_triangle(graph_of(inst))); };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("nwt-via-mwt-parity-per-vertex",
                                  "per-vertex negative-triangle indicators from one parity-vector "
                                  "query",
                                  "graph");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = mwt_per_vertex_parity_oracle(ctx);
      PerVertexParityResult r = nwt_via_mwt_parity_per_vertex(graph_of(inst), oracle);
      return RunOutcome{bits_str(r.bits), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) {
      std::vector<char> marks = vertices_in_negative_triangle(graph_of(inst));
      std::vector<int> bits(marks.begin(), marks.end());
      return bits_str(bits);
    };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("nwt-via-replacement-paths-parity",
                                  "negative-triangle detection from one replacement-paths "
                                  "parity vector",
                                  "graph");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = rp_parity_oracle(ctx);
      NwtResult r = nwt_via_replacement_paths_parity(graph_of(inst), oracle);
      return RunOutcome{bool_str(r.has_negative_triangle), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) { return bool_str(has_negative_triangle(graph_of(inst))); };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("nwt-via-second-shortest-parity",
                                  "negative-triangle detection from one second-shortest-path "
                                  "parity bit",
                                  "graph");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = ssp_parity_oracle(ctx);
      NwtResult r = nwt_via_second_shortest_parity(graph_of(inst), oracle);
      return RunOutcome{bool_str(r.has_negative_triangle), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) { return bool_str(has_negative_triangle(graph_of(inst))); };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("coneg-via-max-row-sum-parity",
                                  "find a vertex on no negative triangle via max-row-sum parity",
                                  "graph");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = max_row_sum_parity_oracle(ctx);
      VertexSearchResult r = coneg_via_max_row_sum_parity(graph_of(inst), oracle);
      std::string answer = r.vertex ? "vertex=" + std::to_string(*r.vertex) : "none";
      return RunOutcome{answer, std::move(r.report)};
    };
    e.brute = [](const Instance& inst) {
      std::vector<int> cv = conegative_vertices(graph_of(inst));
      return cv.empty() ? std::string("none") : "vertex=" + std::to_string(cv.front());
    };
    // Several answers may be correct: any vertex off all negative triangles.
    e.check = [](const Instance& inst, const RunOutcome& outcome) -> std::optional<std::string> {
      std::vector<int> cv = conegative_vertices(graph_of(inst));
      if (outcome.answer == "none") {
        if (cv.empty()) return std::nullopt;
        return "reduction reported none, but vertex " + std::to_string(cv.front()) +
               " is on no negative triangle";
      }
      int v = std::stoi(outcome.answer.substr(outcome.answer.find('=') + 1));
      for (int u : cv)
        if (u == v) return std::nullopt;
      return "reported vertex " + std::to_string(v) + " lies on a negative triangle";
    };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("matmul-via-parity",
                                  "full min-plus product from parity-matrix queries", "matpair");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = minplus_parity_oracle(ctx);
      const MatPair& p = matpair_of(inst);
      MatmulResult r = matmul_via_parity(p.a, p.b, oracle);
      return RunOutcome{values_str(r.product.values), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) {
      const MatPair& p = matpair_of(inst);
      return values_str(min_plus_product(p.a, p.b).values);
    };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("matmul-via-self-parity",
                                  "min-plus product through a self-product parity interface",
                                  "matpair");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = minplus_self_parity_oracle(ctx);
      const MatPair& p = matpair_of(inst);
      MatmulResult r = matmul_via_self_product_parity(p.a, p.b, oracle);
      return RunOutcome{values_str(r.product.values), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) {
      const MatPair& p = matpair_of(inst);
      return values_str(min_plus_product(p.a, p.b).values);
    };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("conv-via-parity",
                                  "full min-plus convolution from parity-vector queries",
                                  "vecpair");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = conv_parity_oracle(ctx);
      const VecPair& p = vecpair_of(inst);
      ConvResult r = conv_via_parity(p.a, p.b, oracle);
      return RunOutcome{values_str(r.conv.values), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) {
      const VecPair& p = vecpair_of(inst);
      return values_str(min_plus_convolution(p.a, p.b).values);
    };
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("mcs-via-parity",
                                  "full maximum consecutive subsums from Diff-parity queries",
                                  "vector");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = diff_parity_oracle(ctx);
      McsResult r = mcs_via_parity(vector_of(inst), oracle);
      return RunOutcome{values_str(r.mcs.values), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) {
      return values_str(max_consecutive_subsums(vector_of(inst)).values);
    };
    entries.push_back(std::move(e));
  }

  auto add_superadd = [&](std::string name, std::string summary,
                          SuperaddVerdict (*fn_parity)(const IntVector&, KnapsackParityOracle&),
                          bool exact_mode) {
    ReductionEntry e = make_entry(std::move(name), std::move(summary), "vector");
    e.prepare = prepare_superadd_vector;
    if (exact_mode) {
      e.run = [](const Instance& inst, const RunContext& ctx) {
        auto oracle = knapsack_exact_oracle(ctx);
        SuperaddVerdict v = superadd_via_knapsack_exact(vector_of(inst), oracle);
        return RunOutcome{bool_str(v.superadditive), std::move(v.report)};
      };
    } else {
      e.run = [fn_parity](const Instance& inst, const RunContext& ctx) {
        auto oracle = knapsack_parity_oracle(ctx);
        SuperaddVerdict v = fn_parity(vector_of(inst), oracle);
        return RunOutcome{bool_str(v.superadditive), std::move(v.report)};
      };
    }
    e.brute = [](const Instance& inst) { return bool_str(is_superadditive(vector_of(inst))); };
    entries.push_back(std::move(e));
  };
  add_superadd("superadd-via-knapsack-exact",
               "super-additivity verdict from one exact knapsack value", nullptr, true);
  add_superadd("superadd-via-knapsack-parity",
               "super-additivity verdict from one knapsack parity bit",
               &superadd_via_knapsack_parity, false);
  add_superadd("superadd-via-01-knapsack-parity",
               "super-additivity verdict from one 0/1-knapsack parity bit (with doubled-index "
               "pre-check)",
               &superadd_via_zero_one_knapsack_parity, false);
  add_superadd("superadd-via-coin-change-parity",
               "super-additivity verdict from one coin-change parity bit",
               &superadd_via_coin_change_parity, false);

  auto sum3_check = [](const Instance& inst, const RunOutcome& outcome) -> std::optional<std::string> {
    const Sum3Instance& s = sum3_of(inst);
    Int best = sum3_max(s);
    std::istringstream is(outcome.answer);
    std::string decision_tok, i_tok, max_tok;
    is >> decision_tok >> i_tok >> max_tok;
    bool decision = decision_tok.substr(decision_tok.find('=') + 1) == "true";
    int i = std::stoi(i_tok.substr(i_tok.find('=') + 1));
    Int reported = int_from_string(max_tok.substr(max_tok.find('=') + 1));
    if (decision != (best >= 0)) return "decision disagrees with the brute-force maximum";
    if (reported != best) return "reported maximum differs from brute force";
    Int at_i = -kInf;
    const int n = static_cast<int>(s.a.values.size());
    for (int j = 0; i + j < n; ++j)
      at_i = std::max(at_i, s.a.values[i] + s.b.values[j] + s.c.values[i + j]);
    if (at_i != best) return "witness index does not attain the maximum";
    return std::nullopt;
  };
  {
    ReductionEntry e = make_entry("sum3-via-maxsum-parity",
                                  "maximizing index and sign decision from max-sum parity bits",
                                  "sum3");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = maxsum_parity_oracle(ctx);
      Sum3Result r = sum3_via_maxsum_parity(sum3_of(inst), oracle);
      std::string answer = "decision=" + bool_str(r.decision) +
                           " i=" + std::to_string(r.witness_i) +
                           " max=" + int_to_string(r.max_value);
      return RunOutcome{answer, std::move(r.report)};
    };
    e.brute = [](const Instance& inst) {
      Int best = sum3_max(sum3_of(inst));
      return "decision=" + bool_str(best >= 0) + " max=" + int_to_string(best);
    };
    e.check = sum3_check;
    entries.push_back(std::move(e));
  }
  {
    ReductionEntry e = make_entry("sum3-via-tree-sparsity-parity",
                                  "the same recursion behind a tree-sparsity parity adapter "
                                  "(simulated external gadget)",
                                  "sum3");
    e.run = [](const Instance& inst, const RunContext& ctx) {
      const Sum3Instance& s = sum3_of(inst);
      Int m = s.a.weight_bound;
      TreeSparsityParitySource source;
      if (ctx.external) {
        ExternalOracleSpec spec = *ctx.external;
        source = [spec](const Sum3Instance& q) {
          std::string text = "# query tree-sparsity-parity\n" + serialize(q);
          return parse_parity_reply(run_external_process(spec, text)).at(0);
        };
      } else {
        source = simulated_tree_sparsity_source(m);
      }
      auto oracle = treesparsity_parity_adapter(std::move(source), m);
      Sum3Result r = sum3_via_maxsum_parity(s, oracle);
      std::string answer = "decision=" + bool_str(r.decision) +
                           " i=" + std::to_string(r.witness_i) +
                           " max=" + int_to_string(r.max_value);
      return RunOutcome{answer, std::move(r.report)};
    };
    e.brute = [](const Instance& inst) {
      Int best = sum3_max(sum3_of(inst));
      return "decision=" + bool_str(best >= 0) + " max=" + int_to_string(best);
    };
    e.check = sum3_check;
    entries.push_back(std::move(e));
  }
  {
    // Self-test fixture: runs the genuine median pipeline but inverts the
    // final certificate, so every verification trial produces a mismatch.
    ReductionEntry e = make_entry("demo-corrupt-median",
                                  "intentionally corrupted median reduction (harness self-test)",
                                  "graph");
    e.fixture = true;
    e.run = [](const Instance& inst, const RunContext& ctx) {
      auto oracle = median_parity_oracle(ctx);
      NwtResult r = nwt_via_median_parity(graph_of(inst), oracle);
      return RunOutcome{bool_str(!r.has_negative_triangle), std::move(r.report)};
    };
    e.brute = [](const Instance& inst) { return bool_str(has_negative_triangle(graph_of(inst))); };
    entries.push_back(std::move(e));
  }

  for (ReductionEntry& e : entries)
    if (!e.check) {
      auto brute = e.brute;
      e.check = [brute](const Instance& inst,
                        const RunOutcome& outcome) -> std::optional<std::string> {
        std::string expect = brute(inst);
        if (expect == outcome.answer) return std::nullopt;
        return "expected " + expect + ", got " + outcome.answer;
      };
    }
  return entries;
}

}  // namespace

const std::vector<ReductionEntry>& reduction_registry() {
  static const std::vector<ReductionEntry> entries = build_registry();
  return entries;
}

const ReductionEntry* find_reduction(const std::string& name) {
  for (const ReductionEntry& e : reduction_registry())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace parity
