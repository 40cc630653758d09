#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "parity/int128.hpp"
#include "parity/parity_oracle.hpp"

namespace parity {

struct ConstructedSize {
  std::string label;
  long long vertices_or_length = 0;
  long long edges = 0;
  Int max_abs_weight = 0;
};

/// What a reduction run hands back besides its answer: per-oracle call
/// counts, the sizes it constructed, and the seed it consumed.
struct ReductionReport {
  std::map<std::string, long long> oracle_calls;
  std::vector<ConstructedSize> constructed;
  std::optional<std::uint64_t> seed;
  std::optional<bool> verified;  // set by the harness, not by reductions
  std::vector<std::pair<std::string, std::string>> extras;

  void record(const std::string& oracle_name, const CallLedger& ledger) {
    oracle_calls[oracle_name] += ledger.calls;
  }

  void note(const std::string& key, const std::string& value) { extras.emplace_back(key, value); }

  long long total_calls() const {
    long long total = 0;
    for (const auto& [name, calls] : oracle_calls) total += calls;
    return total;
  }

  long long max_constructed() const {
    long long m = 0;
    for (const ConstructedSize& c : constructed) m = std::max(m, c.vertices_or_length);
    return m;
  }

  std::string render(const std::string& prefix = "") const {
    std::ostringstream os;
    for (const auto& [name, calls] : oracle_calls)
      os << prefix << "calls." << name << "=" << calls << "\n";
    for (const ConstructedSize& c : constructed)
      os << prefix << "constructed." << c.label << ".size=" << c.vertices_or_length << " edges="
         << c.edges << " max_abs_weight=" << int_to_string(c.max_abs_weight) << "\n";
    if (seed) os << prefix << "seed=" << *seed << "\n";
    for (const auto& [k, v] : extras) os << prefix << k << "=" << v << "\n";
    return os.str();
  }
};

}  // namespace parity
