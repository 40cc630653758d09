#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "parity/instances.hpp"

namespace parity {

/// Pair types used by the oracle wire protocol (min-plus products and
/// convolutions query with two operands at once).
struct VecPair {
  IntVector a, b;  // equal length
};
struct MatPair {
  IntMatrix a, b;  // equal square size
};

bool operator==(const VecPair& x, const VecPair& y);
bool operator==(const MatPair& x, const MatPair& y);

std::optional<std::string> validate(const VecPair& p);
std::optional<std::string> validate(const MatPair& p);

using Instance = std::variant<EdgeWeightedGraph, IntVector, IntMatrix, KnapsackInstance,
                              Sum3Instance, NodeWeightedTree, VecPair, MatPair>;

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& why)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + why), line(line_no) {}
};

std::string serialize(const EdgeWeightedGraph& g);
std::string serialize(const IntVector& v);
std::string serialize(const IntMatrix& m);
std::string serialize(const KnapsackInstance& k);
std::string serialize(const Sum3Instance& s);
std::string serialize(const NodeWeightedTree& t);
std::string serialize(const VecPair& p);
std::string serialize(const MatPair& p);
std::string serialize(const Instance& inst);

/// Parses one instance.  Throws ParseError with a line number on malformed
/// input (unknown kind, count mismatch, bad integer, trailing records).
Instance parse_instance(const std::string& text);

std::string instance_kind_name(const Instance& inst);

}  // namespace parity
