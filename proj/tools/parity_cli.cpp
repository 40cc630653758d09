// Command-line front end: instance generation, reduction execution with
// pluggable parity oracles, verification campaigns against brute force, and
// call-count benchmarks.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage or IO error.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "parity/generate.hpp"
#include "parity/oracles.hpp"
#include "parity/registry.hpp"

using namespace parity;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PARITY_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("PARITY_SEED must be an unsigned integer");
    }
  }
  return 0;
}

std::optional<Planted> planted_from_string(const std::string& s) {
  if (s == "none") return Planted::none;
  if (s == "neg-triangle") return Planted::negative_triangle;
  if (s == "zero-triangle") return Planted::zero_triangle;
  if (s == "superadditive") return Planted::superadditive;
  if (s == "not-superadditive") return Planted::not_superadditive;
  return std::nullopt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("could not open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void list_registry(std::ostream& os) {
  os << "reductions:\n";
  for (const ReductionEntry& e : reduction_registry()) {
    os << "  " << e.name << " [" << e.instance_kind;
    if (e.randomized) os << ", randomized";
    if (e.fixture) os << ", self-test fixture";
    os << "] " << e.summary << "\n";
  }
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string kind = "graph";
  int n = 0;
  long long m = 0;
  std::uint64_t seed = 0;
  bool undirected = false;
  std::string plant = "none";
  std::string out;
};

int cmd_generate(const GenerateArgs& args) {
  auto planted = planted_from_string(args.plant);
  if (!planted) {
    std::cerr << "error: unknown plant '" << args.plant << "'\n";
    return 2;
  }
  if (args.n < 1) {
    std::cerr << "error: --n must be at least 1\n";
    return 2;
  }
  Instance inst;
  try {
    inst = generate_instance(args.kind, args.n, args.m, args.seed, !args.undirected, *planted);
  } catch (const InfeasiblePlant& e) {
    std::cerr << "error: infeasible plant: " << e.what() << "\n";
    return 2;
  }
  std::string text = serialize(inst);
  if (args.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.out);
    if (!out) {
      std::cerr << "error: could not write " << args.out << "\n";
      return 2;
    }
    out << text;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// reduce
// ---------------------------------------------------------------------------

struct ReduceArgs {
  std::string name;
  std::string in;
  std::string oracle_cmd;
  int oracle_timeout = 30;
  int rounds = 32;
  std::uint64_t seed = 0;
};

int cmd_reduce(const ReduceArgs& args) {
  const ReductionEntry* entry = find_reduction(args.name);
  if (!entry) {
    std::cerr << "error: unknown reduction '" << args.name << "'\n";
    list_registry(std::cerr);
    return 2;
  }
  Instance inst;
  try {
    inst = parse_instance(read_file(args.in));
  } catch (const std::exception& e) {
    std::cerr << "error: " << args.in << ": " << e.what() << "\n";
    return 2;
  }
  auto violation = std::visit([](const auto& x) { return validate(x); }, inst);
  if (violation) {
    std::cerr << "error: invalid instance: " << *violation << "\n";
    return 2;
  }
  RunContext ctx;
  ctx.seed = args.seed;
  ctx.rounds = args.rounds;
  if (!args.oracle_cmd.empty())
    ctx.external = ExternalOracleSpec{args.oracle_cmd, args.oracle_timeout};
  try {
    RunOutcome outcome = entry->run(inst, ctx);
    std::cout << "reduction=" << entry->name << "\n";
    std::cout << "instance_kind=" << instance_kind_name(inst) << "\n";
    std::cout << "answer=" << outcome.answer << "\n";
    std::cout << outcome.report.render();
    if (!outcome.report.seed && entry->randomized) std::cout << "seed=" << args.seed << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string name;
  std::string mode = "random";
  long long trials = 200;
  int n_min = 1;
  int n_max = 6;
  long long m_min = 0;
  long long m_max = 4;
  std::uint64_t seed = 0;
  int rounds = 32;
  std::string plant = "none";
  int workers = 0;
  bool single_round_rate = false;
  int counterexample_cap = 3;
};

struct TrialRecord {
  bool ran = false;
  bool mismatch = false;
  bool detected = false;  // single-round mode
  long long calls = 0;
  std::string description;
  std::string instance_text;
  std::string expected, got;
};

// Lazily decodable exhaustive spaces, one per instance size.
struct ExhaustiveSpace {
  long long total = 0;
  std::function<Instance(long long)> decode;
};

long long pow_ll(long long base, long long exp) {
  long long r = 1;
  for (long long i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<Int> decode_values(long long code, int count, int maxw) {
  std::vector<Int> vals;
  int states = 2 * maxw + 1;
  for (int i = 0; i < count; ++i) {
    vals.push_back(code % states - maxw);
    code /= states;
  }
  return vals;
}

ExhaustiveSpace exhaustive_graphs(int n, int maxw, bool directed) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = directed ? 0 : u + 1; v < n; ++v)
      if (u != v) pairs.push_back({u, v});
  int states = 2 * maxw + 2;  // absent or one of the weights
  long long total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= states;
  return {total, [pairs, states, n, maxw, directed](long long code) {
            EdgeWeightedGraph g;
            g.directed = directed;
            g.n = n;
            g.weight_bound = maxw;
            long long c = code;
            for (auto [u, v] : pairs) {
              int s = static_cast<int>(c % states);
              c /= states;
              if (s > 0) g.edges.push_back({u, v, s - 1 - maxw});
            }
            return Instance{g};
          }};
}

// The undirected entries generate undirected graphs; probe the generator.
bool entry_wants_directed(const ReductionEntry& entry) {
  Instance probe = entry.prepare(2, 1, 0, Planted::none);
  if (auto* g = std::get_if<EdgeWeightedGraph>(&probe)) return g->directed;
  return true;
}

ExhaustiveSpace exhaustive_space(const ReductionEntry& entry, int n, int maxw) {
  int states = 2 * maxw + 1;
  if (entry.instance_kind == "graph")
    return exhaustive_graphs(n, maxw, entry_wants_directed(entry));
  if (entry.instance_kind == "vector")
    return {pow_ll(states, n), [n, maxw](long long code) {
              IntVector v;
              v.values = decode_values(code, n, maxw);
              v.weight_bound = maxw;
              return Instance{v};
            }};
  if (entry.instance_kind == "vecpair")
    return {pow_ll(states, 2 * n), [n, maxw, states](long long code) {
              IntVector a, b;
              a.values = decode_values(code % pow_ll(states, n), n, maxw);
              b.values = decode_values(code / pow_ll(states, n), n, maxw);
              a.weight_bound = b.weight_bound = maxw;
              return Instance{VecPair{a, b}};
            }};
  if (entry.instance_kind == "matpair")
    return {pow_ll(states, 2LL * n * n), [n, maxw, states](long long code) {
              IntMatrix a, b;
              a.rows = a.cols = b.rows = b.cols = n;
              a.values = decode_values(code % pow_ll(states, n * n), n * n, maxw);
              b.values = decode_values(code / pow_ll(states, n * n), n * n, maxw);
              a.weight_bound = b.weight_bound = maxw;
              return Instance{MatPair{a, b}};
            }};
  if (entry.instance_kind == "sum3")
    return {pow_ll(states, 3LL * n), [n, maxw, states](long long code) {
              IntVector a, b, c;
              a.values = decode_values(code % pow_ll(states, n), n, maxw);
              code /= pow_ll(states, n);
              b.values = decode_values(code % pow_ll(states, n), n, maxw);
              c.values = decode_values(code / pow_ll(states, n), n, maxw);
              a.weight_bound = b.weight_bound = c.weight_bound = maxw;
              return Instance{make_sum3(a, b, c)};
            }};
  throw std::runtime_error("no exhaustive space for kind " + entry.instance_kind);
}

int cmd_verify(const VerifyArgs& args) {
  const ReductionEntry* entry = find_reduction(args.name);
  if (!entry) {
    std::cerr << "error: unknown reduction '" << args.name << "'\n";
    list_registry(std::cerr);
    return 2;
  }
  auto planted = planted_from_string(args.plant);
  if (!planted) {
    std::cerr << "error: unknown plant '" << args.plant << "'\n";
    return 2;
  }
  if (args.mode != "random" && args.mode != "exhaustive") {
    std::cerr << "error: --mode must be random or exhaustive\n";
    return 2;
  }
  if (args.single_round_rate && !entry->single_round) {
    std::cerr << "error: " << entry->name << " is not a randomized reduction\n";
    return 2;
  }

  struct WorkItem {
    int space;       // index into spaces, or -1 for a random trial
    long long code;  // exhaustive code or trial index
  };
  std::vector<WorkItem> items;
  std::vector<ExhaustiveSpace> spaces;
  if (args.mode == "exhaustive") {
    bool graph_kind = entry->instance_kind == "graph";
    int n_cap = graph_kind ? 4 : 3;
    long long w_cap = 2;
    if (args.n_max > n_cap || args.m_max > w_cap) {
      std::cerr << "error: exhaustive caps are n<=" << n_cap << ", |w|<=" << w_cap
                << " for this kind\n";
      return 2;
    }
    for (int n = std::max(args.n_min, 1); n <= args.n_max; ++n) {
      ExhaustiveSpace space = exhaustive_space(*entry, n, static_cast<int>(args.m_max));
      int idx = static_cast<int>(spaces.size());
      spaces.push_back(std::move(space));
      for (long long code = 0; code < spaces.back().total; ++code) items.push_back({idx, code});
    }
  } else {
    for (long long i = 0; i < args.trials; ++i) items.push_back({-1, i});
  }

  auto make_instance = [&](const WorkItem& item) -> Instance {
    if (item.space >= 0) return spaces[item.space].decode(item.code);
    SeededRng rng(args.seed);
    SeededRng trial_rng = rng.fork(static_cast<std::uint64_t>(item.code));
    int n = static_cast<int>(trial_rng.range(args.n_min, args.n_max));
    Int m = trial_rng.range(args.m_min, args.m_max);
    std::uint64_t inst_seed = trial_rng.next();
    for (int attempt = 0;; ++attempt) {
      try {
        return entry->prepare(n, m, inst_seed + attempt, *planted);
      } catch (const InfeasiblePlant&) {
        if (attempt >= 64)
          throw std::runtime_error("could not prepare an instance for this size range");
        n = std::max(n, 3);
        m = m + 1;
      }
    }
  };

  auto start = std::chrono::steady_clock::now();
  std::vector<TrialRecord> records(items.size());
  std::atomic<long long> cursor{0};
  auto worker = [&] {
    for (;;) {
      long long i = cursor.fetch_add(1);
      if (i >= static_cast<long long>(items.size())) return;
      TrialRecord& rec = records[i];
      try {
        Instance inst = make_instance(items[i]);
        if (args.single_round_rate) {
          SeededRng rng(args.seed);
          rec.detected =
              entry->single_round(inst, rng.fork(static_cast<std::uint64_t>(i)).next());
          rec.ran = true;
          continue;
        }
        RunContext ctx;
        ctx.seed = SeededRng(args.seed).fork(static_cast<std::uint64_t>(i)).next();
        ctx.rounds = args.rounds;
        RunOutcome outcome = entry->run(inst, ctx);
        rec.calls = outcome.report.total_calls();
        auto mismatch = entry->check(inst, outcome);
        if (mismatch) {
          rec.mismatch = true;
          rec.description = *mismatch;
          rec.instance_text = serialize(inst);
          rec.expected = entry->brute(inst);
          rec.got = outcome.answer;
        }
        rec.ran = true;
      } catch (const std::invalid_argument&) {
        // Instance outside this reduction's preconditions: skipped.
      } catch (const std::exception& e) {
        rec.mismatch = true;
        rec.description = std::string("exception: ") + e.what();
        rec.ran = true;
      }
    }
  };
  int workers = args.workers > 0
                    ? args.workers
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  // Deterministic merge by trial index.
  long long ran = 0, mismatches = 0, detections = 0;
  long long calls_min = -1, calls_max = 0, calls_sum = 0;
  for (const TrialRecord& rec : records) {
    if (!rec.ran) continue;
    ++ran;
    if (rec.mismatch) ++mismatches;
    if (rec.detected) ++detections;
    calls_sum += rec.calls;
    calls_max = std::max(calls_max, rec.calls);
    calls_min = calls_min < 0 ? rec.calls : std::min(calls_min, rec.calls);
  }

  std::cout << "campaign=" << entry->name << "\n";
  std::cout << "mode=" << (args.single_round_rate ? "single-round-rate" : args.mode) << "\n";
  std::cout << "trials=" << ran << "\n";
  std::cout << "seed=" << args.seed << "\n";
  bool pass = true;
  if (args.single_round_rate) {
    double rate = ran > 0 ? double(detections) / double(ran) : 0.0;
    std::cout << "detections=" << detections << "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", rate);
    std::cout << "rate=" << buf << "\n";
    std::cout << "bound.lo=" << entry->round_rate_lo << "\n";
    std::cout << "bound.hi=" << entry->round_rate_hi << "\n";
    pass = ran > 0 && rate >= entry->round_rate_lo && rate <= entry->round_rate_hi;
  } else {
    std::cout << "mismatches=" << mismatches << "\n";
    if (ran > 0) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", double(calls_sum) / double(ran));
      std::cout << "calls.min=" << std::max<long long>(calls_min, 0) << "\n";
      std::cout << "calls.max=" << calls_max << "\n";
      std::cout << "calls.mean=" << buf << "\n";
    }
    int shown = 0;
    for (std::size_t i = 0; i < records.size() && shown < args.counterexample_cap; ++i) {
      const TrialRecord& rec = records[i];
      if (!rec.mismatch) continue;
      ++shown;
      std::cout << "counterexample.trial=" << i << "\n";
      std::cout << "counterexample.why=" << rec.description << "\n";
      if (!rec.expected.empty()) std::cout << "counterexample.expected=" << rec.expected << "\n";
      if (!rec.got.empty()) std::cout << "counterexample.got=" << rec.got << "\n";
      if (!rec.instance_text.empty()) {
        std::cout << "counterexample.instance.begin\n"
                  << rec.instance_text << "counterexample.instance.end\n";
      }
    }
    pass = mismatches == 0;
  }
  std::cout << "result=" << (pass ? "pass" : "fail") << "\n";
  std::cerr << "wall_ms=" << elapsed << "\n";
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchArgs {
  std::string name;
  std::string sizes = "8,16,32";
  long long m = 8;
  std::uint64_t seed = 0;
  int rounds = 32;
};

int cmd_bench(const BenchArgs& args) {
  const ReductionEntry* entry = find_reduction(args.name);
  if (!entry) {
    std::cerr << "error: unknown reduction '" << args.name << "'\n";
    list_registry(std::cerr);
    return 2;
  }
  std::vector<int> sizes;
  std::stringstream ss(args.sizes);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      sizes.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      std::cerr << "error: bad size '" << tok << "'\n";
      return 2;
    }
  }
  std::cout << "reduction=" << entry->name << "\n";
  std::cout << "n calls max_constructed ms\n";
  for (int n : sizes) {
    Instance inst;
    try {
      inst = entry->prepare(n, args.m, args.seed, Planted::none);
    } catch (const std::exception& e) {
      std::cerr << "error: could not prepare n=" << n << ": " << e.what() << "\n";
      return 2;
    }
    RunContext ctx;
    ctx.seed = args.seed;
    ctx.rounds = args.rounds;
    auto start = std::chrono::steady_clock::now();
    RunOutcome outcome;
    try {
      outcome = entry->run(inst, ctx);
    } catch (const std::exception& e) {
      std::cerr << "error: run failed at n=" << n << ": " << e.what() << "\n";
      return 2;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << n << " " << outcome.report.total_calls() << " "
              << outcome.report.max_constructed() << " " << ms << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parity-reductions: gadget reductions with parity oracles, verified "
               "against brute force"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "write a random instance file");
  generate->add_option("--kind", gen.kind, "graph|vector|matrix|knapsack|sum3|tree");
  generate->add_option("--n", gen.n, "instance size")->required();
  generate->add_option("--M", gen.m, "weight bound");
  generate->add_option("--seed", gen.seed, "generator seed");
  generate->add_flag("--undirected", gen.undirected, "generate an undirected graph");
  generate->add_option("--plant", gen.plant,
                       "none|neg-triangle|zero-triangle|superadditive|not-superadditive");
  generate->add_option("--out", gen.out, "output file (stdout when omitted)");

  ReduceArgs red;
  CLI::App* reduce = app.add_subcommand("reduce", "run one reduction on an instance file");
  reduce->add_option("--name", red.name, "reduction name (see list)")->required();
  reduce->add_option("--in", red.in, "instance file")->required();
  reduce->add_option("--oracle-cmd", red.oracle_cmd,
                     "external oracle command (stdin: instance text; stdout: parity line)");
  reduce->add_option("--oracle-timeout", red.oracle_timeout, "external oracle timeout, seconds");
  reduce->add_option("--rounds", red.rounds, "rounds for randomized reductions");
  reduce->add_option("--seed", red.seed, "seed for randomized reductions");

  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand("verify", "campaign: reduction vs brute force");
  verify->add_option("--name", ver.name, "reduction name")->required();
  verify->add_option("--mode", ver.mode, "random|exhaustive");
  verify->add_option("--trials", ver.trials, "random-mode trial count");
  verify->add_option("--n-min", ver.n_min, "minimum instance size");
  verify->add_option("--n-max", ver.n_max, "maximum instance size");
  verify->add_option("--M-min", ver.m_min, "minimum weight bound");
  verify->add_option("--M-max", ver.m_max, "maximum weight bound");
  verify->add_option("--seed", ver.seed, "campaign seed");
  verify->add_option("--rounds", ver.rounds, "rounds for randomized reductions");
  verify->add_option("--planted", ver.plant, "instance plant for the campaign");
  verify->add_option("--workers", ver.workers, "worker threads (default: hardware)");
  verify->add_flag("--single-round-rate", ver.single_round_rate,
                   "estimate the per-round detection rate instead of full runs");

  BenchArgs ben;
  CLI::App* bench = app.add_subcommand("bench", "oracle-call counts and runtime per size");
  bench->add_option("--name", ben.name, "reduction name")->required();
  bench->add_option("--sizes", ben.sizes, "comma-separated instance sizes");
  bench->add_option("--M", ben.m, "weight bound");
  bench->add_option("--seed", ben.seed, "seed");
  bench->add_option("--rounds", ben.rounds, "rounds for randomized reductions");

  CLI::App* list = app.add_subcommand("list", "list every registered reduction");

  try {
    std::uint64_t seed = default_seed();
    gen.seed = red.seed = ver.seed = ben.seed = seed;
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*reduce) return cmd_reduce(red);
    if (*verify) return cmd_verify(ver);
    if (*bench) return cmd_bench(ben);
    if (*list) {
      list_registry(std::cout);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
