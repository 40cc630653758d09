#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "parity/instances.hpp"
#include "parity/serialize.hpp"

namespace parity {

enum class Planted {
  none,
  negative_triangle,
  zero_triangle,
  superadditive,
  not_superadditive,
};

const char* to_string(Planted p);

struct InfeasiblePlant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic generators: identical arguments yield identical instances
// (and therefore byte-identical serializations).  Planted properties are
// re-checked internally and InfeasiblePlant is thrown when n/M cannot
// support them.
EdgeWeightedGraph generate_graph(int n, Int M, std::uint64_t seed, bool directed,
                                 Planted planted = Planted::none);
IntVector generate_vector(int n, Int M, std::uint64_t seed, Planted planted = Planted::none);
IntMatrix generate_matrix(int n, Int M, std::uint64_t seed);
KnapsackInstance generate_knapsack(int n, Int M, std::uint64_t seed,
                                   KnapsackVariant variant = KnapsackVariant::multiset);
Sum3Instance generate_sum3(int n, Int M, std::uint64_t seed);
NodeWeightedTree generate_tree(int n, Int M, std::uint64_t seed);

/// Dispatch on a kind name ("graph", "vector", ...).  Used by the CLI.
Instance generate_instance(const std::string& kind, int n, Int M, std::uint64_t seed,
                           bool directed, Planted planted);

}  // namespace parity
