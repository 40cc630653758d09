#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parity/generate.hpp"
#include "parity/graph_reductions.hpp"
#include "parity/report.hpp"
#include "parity/sequence_reductions.hpp"
#include "parity/serialize.hpp"

namespace parity {

/// External answer source: a process reading one instance (text format) on
/// stdin and replying "parity <bit>", "parities <bits...>", or
/// "value <int>" on stdout.
struct ExternalOracleSpec {
  std::string command;
  int timeout_sec = 30;
};

struct RunContext {
  std::uint64_t seed = 0;
  int rounds = 32;
  std::optional<ExternalOracleSpec> external;
};

struct RunOutcome {
  std::string answer;  // canonical one-line rendering
  ReductionReport report;
};

struct ReductionEntry {
  std::string name;
  std::string summary;
  std::string instance_kind;  // generator kind this reduction consumes
  bool randomized = false;
  bool fixture = false;
  // Expected single-round detection rate window on planted-positive
  // instances (randomized entries only).
  double round_rate_lo = 0.0;
  double round_rate_hi = 1.0;

  std::function<Instance(int n, Int m, std::uint64_t seed, Planted planted)> prepare;
  std::function<RunOutcome(const Instance&, const RunContext&)> run;
  std::function<std::string(const Instance&)> brute;
  // nullopt on agreement, otherwise a mismatch description.  Defaults to
  // string comparison against brute(); entries whose answers admit several
  // correct values (witness indices, vertex choices) install their own.
  std::function<std::optional<std::string>(const Instance&, const RunOutcome&)> check;
  // Single detection round for rate estimation (randomized entries only).
  std::function<bool(const Instance&, std::uint64_t round_seed)> single_round;
};

const std::vector<ReductionEntry>& reduction_registry();
const ReductionEntry* find_reduction(const std::string& name);

std::string run_external_process(const ExternalOracleSpec& spec, const std::string& input);
std::vector<int> parse_parity_reply(const std::string& reply);
std::vector<Int> parse_value_reply(const std::string& reply);

}  // namespace parity
