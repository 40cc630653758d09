#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "parity/instances.hpp"
#include "parity/oracles.hpp"

namespace parity {

struct CallLedger {
  long long calls = 0;
  std::vector<long long> sizes;  // recorded instance size per query
};

inline long long instance_size(const EdgeWeightedGraph& g) { return g.n; }
inline long long instance_size(const IntVector& v) {
  return static_cast<long long>(v.values.size());
}
inline long long instance_size(const IntMatrix& m) { return m.rows; }
inline long long instance_size(const KnapsackInstance& k) {
  return static_cast<long long>(k.items.size());
}
inline long long instance_size(const Sum3Instance& s) {
  return static_cast<long long>(s.a.values.size());
}
inline long long instance_size(const NodeWeightedTree& t) { return t.n; }

struct IbcQuery {
  EdgeWeightedGraph graph;
  int x = 0;
};
struct RcQuery {
  EdgeWeightedGraph graph;
  int x = 0;
};
struct PathQuery {
  EdgeWeightedGraph graph;
  int s = 0;
  int t = 0;
};
struct MatPairQuery {
  IntMatrix a, b;
};
struct VecPairQuery {
  IntVector a, b;
};

inline long long instance_size(const IbcQuery& q) { return q.graph.n; }
inline long long instance_size(const RcQuery& q) { return q.graph.n; }
inline long long instance_size(const PathQuery& q) { return q.graph.n; }
inline long long instance_size(const MatPairQuery& q) { return q.a.rows; }
inline long long instance_size(const VecPairQuery& q) {
  return static_cast<long long>(q.a.values.size());
}

/// Accounting wrapper around an answer source for one problem.  Reductions
/// receive only this view: parity bits, never full values.  Each query
/// increments the ledger.
template <class Query>
class ParityOracle {
 public:
  using ExactFn = std::function<std::vector<Int>(const Query&)>;
  using BitsFn = std::function<std::vector<int>(const Query&)>;

  static ParityOracle from_exact(std::string name, ExactFn exact) {
    ParityOracle o;
    o.name_ = std::move(name);
    o.bits_ = [fn = std::move(exact)](const Query& q) {
      std::vector<int> bits;
      for (Int v : fn(q)) {
        if (int_abs(v) >= kInf) throw OracleError("parity of an infinite value");
        bits.push_back(parity_bit(v));
      }
      return bits;
    };
    return o;
  }

  /// For answer sources that already speak parities (external processes).
  static ParityOracle from_bits(std::string name, BitsFn bits) {
    ParityOracle o;
    o.name_ = std::move(name);
    o.bits_ = std::move(bits);
    return o;
  }

  std::vector<int> query(const Query& q) {
    ++ledger_.calls;
    ledger_.sizes.push_back(instance_size(q));
    return bits_(q);
  }

  int query_bit(const Query& q) {
    std::vector<int> bits = query(q);
    if (bits.size() != 1) throw OracleError("expected a single parity bit");
    return bits[0];
  }

  const std::string& name() const { return name_; }
  const CallLedger& ledger() const { return ledger_; }

 private:
  std::string name_;
  BitsFn bits_;
  CallLedger ledger_;
};

/// Same accounting for sources consumed at full value (exact answer
/// oracles used by value-reconstruction searches).
template <class Query>
class ExactOracle {
 public:
  using ExactFn = std::function<std::vector<Int>(const Query&)>;

  ExactOracle(std::string name, ExactFn exact) : name_(std::move(name)), fn_(std::move(exact)) {}

  std::vector<Int> query(const Query& q) {
    ++ledger_.calls;
    ledger_.sizes.push_back(instance_size(q));
    return fn_(q);
  }

  Int query_value(const Query& q) {
    std::vector<Int> vals = query(q);
    if (vals.size() != 1) throw OracleError("expected a single value");
    return vals[0];
  }

  const std::string& name() const { return name_; }
  const CallLedger& ledger() const { return ledger_; }

 private:
  std::string name_;
  ExactFn fn_;
  CallLedger ledger_;
};

}  // namespace parity
