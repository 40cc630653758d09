#include "parity/serialize.hpp"

#include <sstream>
#include <vector>

namespace parity {

bool operator==(const VecPair& x, const VecPair& y) { return x.a == y.a && x.b == y.b; }
bool operator==(const MatPair& x, const MatPair& y) { return x.a == y.a && x.b == y.b; }

namespace {

std::string istr(Int v) { return int_to_string(v); }

void emit_vals(std::ostringstream& os, const std::vector<Int>& vals) {
  for (Int v : vals) os << "val " << istr(v) << "\n";
}

}  // namespace

std::string serialize(const EdgeWeightedGraph& g) {
  std::ostringstream os;
  os << "graph " << (g.directed ? "directed" : "undirected") << " n=" << g.n
     << " m=" << g.edges.size() << " M=" << istr(g.weight_bound) << "\n";
  for (const Edge& e : g.edges) os << "edge " << e.u << " " << e.v << " " << istr(e.w) << "\n";
  return os.str();
}

std::string serialize(const IntVector& v) {
  std::ostringstream os;
  os << "vector n=" << v.values.size() << " M=" << istr(v.weight_bound) << "\n";
  emit_vals(os, v.values);
  return os.str();
}

std::string serialize(const IntMatrix& m) {
  std::ostringstream os;
  os << "matrix rows=" << m.rows << " cols=" << m.cols << " M=" << istr(m.weight_bound) << "\n";
  emit_vals(os, m.values);
  return os.str();
}

std::string serialize(const KnapsackInstance& k) {
  std::ostringstream os;
  os << "knapsack variant=" << to_string(k.variant) << " items=" << k.items.size()
     << " t=" << istr(k.target) << "\n";
  for (const KnapsackItem& it : k.items)
    os << "item " << istr(it.weight) << " " << istr(it.value) << "\n";
  return os.str();
}

std::string serialize(const Sum3Instance& s) {
  std::ostringstream os;
  os << "sum3 n=" << s.a.values.size() << " M=" << istr(s.a.weight_bound) << "\n";
  emit_vals(os, s.a.values);
  emit_vals(os, s.b.values);
  emit_vals(os, s.c.values);
  return os.str();
}

std::string serialize(const NodeWeightedTree& t) {
  std::ostringstream os;
  os << "tree n=" << t.n << "\n";
  for (int i = 0; i < t.n; ++i)
    os << "node " << t.parent[i] << " " << istr(t.node_weight[i]) << "\n";
  return os.str();
}

std::string serialize(const VecPair& p) {
  std::ostringstream os;
  os << "vecpair n=" << p.a.values.size() << " M=" << istr(p.a.weight_bound) << "\n";
  emit_vals(os, p.a.values);
  emit_vals(os, p.b.values);
  return os.str();
}

std::string serialize(const MatPair& p) {
  std::ostringstream os;
  os << "matpair n=" << p.a.rows << " M=" << istr(p.a.weight_bound) << "\n";
  emit_vals(os, p.a.values);
  emit_vals(os, p.b.values);
  return os.str();
}

std::string serialize(const Instance& inst) {
  return std::visit([](const auto& x) { return serialize(x); }, inst);
}

std::string instance_kind_name(const Instance& inst) {
  struct Visitor {
    std::string operator()(const EdgeWeightedGraph&) { return "graph"; }
    std::string operator()(const IntVector&) { return "vector"; }
    std::string operator()(const IntMatrix&) { return "matrix"; }
    std::string operator()(const KnapsackInstance&) { return "knapsack"; }
    std::string operator()(const Sum3Instance&) { return "sum3"; }
    std::string operator()(const NodeWeightedTree&) { return "tree"; }
    std::string operator()(const VecPair&) { return "vecpair"; }
    std::string operator()(const MatPair&) { return "matpair"; }
  };
  return std::visit(Visitor{}, inst);
}

// --------------------------------------------------------------------------
// Parsing
// --------------------------------------------------------------------------

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream is(text);
  std::string raw;
  int number = 0;
  while (std::getline(is, raw)) {
    ++number;
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) {
      if (t[0] == '#') break;  // comment to end of line
      toks.push_back(t);
    }
    if (!toks.empty()) out.push_back({number, std::move(toks)});
  }
  return out;
}

long long parse_ll(const Line& ln, const std::string& s) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(ln.number, "expected integer, got '" + s + "'");
  }
}

Int parse_int128(const Line& ln, const std::string& s) {
  try {
    return int_from_string(s);
  } catch (const std::exception&) {
    throw ParseError(ln.number, "expected integer, got '" + s + "'");
  }
}

// key=value fields after the kind word, in any order.
std::string field(const Line& ln, const std::string& key) {
  for (std::size_t i = 1; i < ln.tokens.size(); ++i) {
    const std::string& tok = ln.tokens[i];
    if (tok.size() > key.size() + 1 && tok.compare(0, key.size(), key) == 0 &&
        tok[key.size()] == '=')
      return tok.substr(key.size() + 1);
  }
  throw ParseError(ln.number, "missing field '" + key + "='");
}

class RecordReader {
 public:
  RecordReader(const std::vector<Line>& lines, std::size_t first) : lines_(lines), pos_(first) {}

  const Line& expect(const std::string& record, long long have, long long want) {
    if (pos_ >= lines_.size())
      throw ParseError(lines_.empty() ? 1 : lines_.back().number,
                       "expected " + std::to_string(want) + " '" + record + "' records, got " +
                           std::to_string(have));
    const Line& ln = lines_[pos_++];
    if (ln.tokens[0] != record)
      throw ParseError(ln.number, "expected '" + record + "' record, got '" + ln.tokens[0] + "'");
    return ln;
  }

  void expect_end() const {
    if (pos_ < lines_.size())
      throw ParseError(lines_[pos_].number, "unexpected trailing record '" +
                                                lines_[pos_].tokens[0] + "'");
  }

  std::vector<Int> read_vals(long long count) {
    std::vector<Int> out;
    for (long long i = 0; i < count; ++i) {
      const Line& ln = expect("val", i, count);
      if (ln.tokens.size() != 2) throw ParseError(ln.number, "val takes one value");
      out.push_back(parse_int128(ln, ln.tokens[1]));
    }
    return out;
  }

 private:
  const std::vector<Line>& lines_;
  std::size_t pos_;
};

}  // namespace

Instance parse_instance(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  const Line& hdr = lines[0];
  const std::string& kind = hdr.tokens[0];
  RecordReader rr(lines, 1);

  if (kind == "graph") {
    if (hdr.tokens.size() < 2 || (hdr.tokens[1] != "directed" && hdr.tokens[1] != "undirected"))
      throw ParseError(hdr.number, "graph header needs 'directed' or 'undirected'");
    EdgeWeightedGraph g;
    g.directed = hdr.tokens[1] == "directed";
    g.n = static_cast<int>(parse_ll(hdr, field(hdr, "n")));
    long long m = parse_ll(hdr, field(hdr, "m"));
    g.weight_bound = parse_int128(hdr, field(hdr, "M"));
    for (long long i = 0; i < m; ++i) {
      const Line& ln = rr.expect("edge", i, m);
      if (ln.tokens.size() != 4) throw ParseError(ln.number, "edge takes u v w");
      Edge e;
      e.u = static_cast<int>(parse_ll(ln, ln.tokens[1]));
      e.v = static_cast<int>(parse_ll(ln, ln.tokens[2]));
      e.w = parse_int128(ln, ln.tokens[3]);
      if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n)
        throw ParseError(ln.number, "edge endpoint out of range");
      g.edges.push_back(e);
    }
    rr.expect_end();
    return g;
  }
  if (kind == "vector") {
    IntVector v;
    long long n = parse_ll(hdr, field(hdr, "n"));
    v.weight_bound = parse_int128(hdr, field(hdr, "M"));
    v.values = rr.read_vals(n);
    rr.expect_end();
    return v;
  }
  if (kind == "matrix") {
    IntMatrix m;
    m.rows = static_cast<int>(parse_ll(hdr, field(hdr, "rows")));
    m.cols = static_cast<int>(parse_ll(hdr, field(hdr, "cols")));
    if (m.rows < 1 || m.cols < 1) throw ParseError(hdr.number, "matrix dimensions must be positive");
    m.weight_bound = parse_int128(hdr, field(hdr, "M"));
    m.values = rr.read_vals(static_cast<long long>(m.rows) * m.cols);
    rr.expect_end();
    return m;
  }
  if (kind == "knapsack") {
    KnapsackInstance k;
    auto var = knapsack_variant_from_string(field(hdr, "variant"));
    if (!var) throw ParseError(hdr.number, "unknown knapsack variant");
    k.variant = *var;
    long long items = parse_ll(hdr, field(hdr, "items"));
    k.target = parse_int128(hdr, field(hdr, "t"));
    for (long long i = 0; i < items; ++i) {
      const Line& ln = rr.expect("item", i, items);
      if (ln.tokens.size() != 3) throw ParseError(ln.number, "item takes w v");
      k.items.push_back({parse_int128(ln, ln.tokens[1]), parse_int128(ln, ln.tokens[2])});
    }
    rr.expect_end();
    return k;
  }
  if (kind == "sum3") {
    long long n = parse_ll(hdr, field(hdr, "n"));
    Int bound = parse_int128(hdr, field(hdr, "M"));
    IntVector a{rr.read_vals(n), bound}, b{rr.read_vals(n), bound}, c{rr.read_vals(n), bound};
    rr.expect_end();
    return Sum3Instance{std::move(a), std::move(b), std::move(c)};
  }
  if (kind == "tree") {
    NodeWeightedTree t;
    t.n = static_cast<int>(parse_ll(hdr, field(hdr, "n")));
    for (int i = 0; i < t.n; ++i) {
      const Line& ln = rr.expect("node", i, t.n);
      if (ln.tokens.size() != 3) throw ParseError(ln.number, "node takes parent w");
      t.parent.push_back(static_cast<int>(parse_ll(ln, ln.tokens[1])));
      t.node_weight.push_back(parse_int128(ln, ln.tokens[2]));
    }
    rr.expect_end();
    return t;
  }
  if (kind == "vecpair") {
    long long n = parse_ll(hdr, field(hdr, "n"));
    Int bound = parse_int128(hdr, field(hdr, "M"));
    IntVector a{rr.read_vals(n), bound}, b{rr.read_vals(n), bound};
    rr.expect_end();
    return VecPair{std::move(a), std::move(b)};
  }
  if (kind == "matpair") {
    long long n = parse_ll(hdr, field(hdr, "n"));
    Int bound = parse_int128(hdr, field(hdr, "M"));
    IntMatrix a, b;
    a.rows = a.cols = b.rows = b.cols = static_cast<int>(n);
    a.weight_bound = b.weight_bound = bound;
    a.values = rr.read_vals(n * n);
    b.values = rr.read_vals(n * n);
    rr.expect_end();
    return MatPair{std::move(a), std::move(b)};
  }
  throw ParseError(hdr.number, "unknown instance kind '" + kind + "'");
}

}  // namespace parity
