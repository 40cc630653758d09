#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "parity/generate.hpp"
#include "parity/graph_reductions.hpp"
#include "parity/oracles.hpp"
#include "parity/rng.hpp"
#include "parity/sequence_reductions.hpp"

using namespace parity;

namespace {

MatPairParityOracle product_parity() {
  return MatPairParityOracle::from_exact("min-plus-product-parity", [](const MatPairQuery& q) {
    return min_plus_product(q.a, q.b).values;
  });
}
MatSelfParityOracle self_product_parity() {
  return MatSelfParityOracle::from_exact("self-product-parity", [](const IntMatrix& q) {
    return min_plus_product(q, q).values;
  });
}
VecPairParityOracle convolution_parity() {
  return VecPairParityOracle::from_exact("min-plus-conv-parity", [](const VecPairQuery& q) {
    return min_plus_convolution(q.a, q.b).values;
  });
}
DiffParityOracle diff_parity() {
  return DiffParityOracle::from_exact(
      "diff-parity", [](const IntVector& q) { return diff_vector(q).values; });
}
KnapsackParityOracle knap_parity() {
  return KnapsackParityOracle::from_exact("knapsack-parity", [](const KnapsackInstance& q) {
    return std::vector<Int>{knapsack_optimum(q)};
  });
}
KnapsackExactOracle knap_exact() {
  return KnapsackExactOracle("knapsack", [](const KnapsackInstance& q) {
    return std::vector<Int>{knapsack_optimum(q)};
  });
}
Sum3ParityOracle maxsum_parity() {
  return Sum3ParityOracle::from_exact(
      "sum3-max-parity", [](const Sum3Instance& q) { return std::vector<Int>{sum3_max(q)}; });
}

IntMatrix mat(int n, std::vector<Int> vals) {
  IntMatrix m;
  m.rows = m.cols = n;
  Int bound = 0;
  for (Int v : vals) bound = std::max(bound, int_abs(v));
  m.values = std::move(vals);
  m.weight_bound = bound;
  return m;
}

IntVector vec(std::vector<Int> vals) {
  IntVector v;
  Int bound = 0;
  for (Int x : vals) bound = std::max(bound, int_abs(x));
  v.values = std::move(vals);
  v.weight_bound = bound;
  return v;
}

IntVector increasing(std::vector<Int> vals) {
  IntVector v;
  v.values = std::move(vals);
  v.weight_bound = v.values.back();
  return v;
}

}  // namespace

// --------------------------------------------------------------------------
// Min-plus matrix product
// --------------------------------------------------------------------------

TEST_CASE("uniquify keeps minimizers and makes them unique") {
  {
    auto [ap, bp] = uniquify_matmul(mat(1, {0}), mat(1, {0}));
    CHECK(ap.values == std::vector<Int>{0});
    CHECK(bp.values == std::vector<Int>{0});
  }
  {
    // All-zero 2x2: the unique minimizer becomes k = 0 everywhere.
    auto [ap, bp] = uniquify_matmul(mat(2, {0, 0, 0, 0}), mat(2, {0, 0, 0, 0}));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Int v0 = ap.at(i, 0) + bp.at(0, j);
        Int v1 = ap.at(i, 1) + bp.at(1, j);
        CHECK(v0 < v1);
      }
  }
  // Planted ties on random 4x4 matrices: after uniquifying, every cell has
  // a unique minimizer, and it also minimizes the original objective.
  SeededRng rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    IntMatrix a = generate_matrix(4, 2, rng.next());  // small range forces ties
    IntMatrix b = generate_matrix(4, 2, rng.next());
    auto [ap, bp] = uniquify_matmul(a, b);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Int best = kInf, orig_best = kInf;
        int arg = -1, ties = 0;
        for (int k = 0; k < 4; ++k) {
          orig_best = std::min(orig_best, a.at(i, k) + b.at(k, j));
          Int v = ap.at(i, k) + bp.at(k, j);
          if (v < best) {
            best = v;
            arg = k;
            ties = 1;
          } else if (v == best) {
            ++ties;
          }
        }
        REQUIRE(ties == 1);
        REQUIRE(a.at(i, arg) + b.at(arg, j) == orig_best);
      }
  }
}

TEST_CASE("min-plus product recovery from parity bits") {
  {
    auto o = product_parity();
    MatmulResult r = matmul_via_parity(mat(2, {0, 1, 2, 3}), mat(2, {0, 1, 1, 0}), o);
    CHECK(r.product.values == std::vector<Int>{0, 1, 2, 3});
    CHECK(o.ledger().calls <= ceil_log2(2) + 1);
  }
  {
    auto o = product_parity();
    MatmulResult r = matmul_via_parity(mat(1, {4}), mat(1, {-9}), o);
    CHECK(r.product.values == std::vector<Int>{-5});
    CHECK(o.ledger().calls == 0);
  }
  SeededRng rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 1 + iter % 8;
    IntMatrix a = generate_matrix(n, 20, rng.next());
    IntMatrix b = generate_matrix(n, 20, rng.next());
    auto o = product_parity();
    MatmulResult r = matmul_via_parity(a, b, o);
    IntMatrix expect = min_plus_product(a, b);
    REQUIRE(r.product.values == expect.values);
    REQUIRE(o.ledger().calls <= ceil_log2(n) + 1);
    // Witness validity: the recovered index attains each cell.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int k = static_cast<int>(r.witness.at(i, j));
        REQUIRE(a.at(i, k) + b.at(k, j) == expect.at(i, j));
      }
  }
}

TEST_CASE("min-plus product through the self-product block embedding") {
  SeededRng rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 1 + iter % 6;
    IntMatrix a = generate_matrix(n, 15, rng.next());
    IntMatrix b = generate_matrix(n, 15, rng.next());
    auto o = self_product_parity();
    MatmulResult r = matmul_via_self_product_parity(a, b, o);
    REQUIRE(r.product.values == min_plus_product(a, b).values);
    REQUIRE(o.ledger().calls <= ceil_log2(n) + 1);
  }
}

TEST_CASE("three-layer graph carries product parities as distances") {
  {
    IntMatrix a = mat(1, {1}), b = mat(1, {2});
    EdgeWeightedGraph g = apsp_parity_instance(a, b);
    DistanceMatrix d = apsp(g);
    CHECK(d.at(0, 2) == 6 * 2 + 3);  // 6M + A[0,0] + B[0,0] with M = 2
  }
  {
    IntMatrix z = mat(2, {0, 0, 0, 0});
    EdgeWeightedGraph g = apsp_parity_instance(z, z);
    DistanceMatrix d = apsp(g);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(parity_bit(d.at(i, 4 + j)) == 0);
  }
  SeededRng rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 1 + iter % 3;
    IntMatrix a = generate_matrix(n, 9, rng.next());
    IntMatrix b = generate_matrix(n, 9, rng.next());
    EdgeWeightedGraph g = apsp_parity_instance(a, b);
    DistanceMatrix d = apsp(g);
    IntMatrix c = min_plus_product(a, b);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        REQUIRE(parity_bit(d.at(i, 2 * n + j)) == parity_bit(c.at(i, j)));
  }
}

// --------------------------------------------------------------------------
// Min-plus convolution
// --------------------------------------------------------------------------

TEST_CASE("min-plus convolution recovery from parity bits") {
  {
    auto o = convolution_parity();
    ConvResult r = conv_via_parity(vec({0, 1}), vec({0, 2}), o);
    CHECK(r.conv.values == std::vector<Int>{0, 1, 3});
  }
  {
    auto o = convolution_parity();
    ConvResult r = conv_via_parity(vec({7}), vec({-2}), o);
    CHECK(r.conv.values == std::vector<Int>{5});
    CHECK(o.ledger().calls == 0);
  }
  SeededRng rng(13);
  for (int iter = 0; iter < 150; ++iter) {
    int n = 1 + iter % 64;
    IntVector a = generate_vector(n, 30, rng.next());
    IntVector b = generate_vector(n, 30, rng.next());
    auto o = convolution_parity();
    ConvResult r = conv_via_parity(a, b, o);
    IntVector expect = min_plus_convolution(a, b);
    REQUIRE(r.conv.values == expect.values);
    REQUIRE(o.ledger().calls <= ceil_log2(n) + 1);
    for (int i = 0; i < 2 * n - 1; ++i) {
      long long k = r.witness[i];
      REQUIRE(a.values[i - k] + b.values[k] == expect.values[i]);
    }
  }
}

// --------------------------------------------------------------------------
// Maximum consecutive subsums
// --------------------------------------------------------------------------

TEST_CASE("mcs recovery: worked example, single element, budgets") {
  {
    auto o = diff_parity();
    McsResult r = mcs_via_parity(vec({1, -2, 3}), o);
    CHECK(r.mcs.values == std::vector<Int>{3, 1, 2});
    for (std::size_t k = 0; k < r.diff.values.size(); ++k) {
      CHECK(r.j_witness[k] == r.i_witness[k] + static_cast<long long>(k));
    }
    int b = ceil_log2(6);
    CHECK(o.ledger().calls <= b * b + b);
  }
  {
    auto o = diff_parity();
    McsResult r = mcs_via_parity(vec({-4}), o);
    CHECK(r.mcs.values == std::vector<Int>{-4});
    CHECK(o.ledger().calls == 0);
  }
}

TEST_CASE("mcs recovery matches brute force and yields the uniquified witnesses") {
  SeededRng rng(17);
  for (int iter = 0; iter < 120; ++iter) {
    int n = 1 + iter % 64;
    IntVector x = generate_vector(n, 50, rng.next());
    auto o = diff_parity();
    McsResult r = mcs_via_parity(x, o);
    IntVector expect = max_consecutive_subsums(x);
    REQUIRE(r.mcs.values == expect.values);
    if (n >= 2) {
      int b = ceil_log2(2LL * n);
      REQUIRE(o.ledger().calls == static_cast<long long>(b) * b);
      REQUIRE(o.ledger().calls <= static_cast<long long>(b) * b + b);
    }
    // The recovered witnesses attain the optimum of the uniquified vector.
    const int len = n + 1;
    std::vector<Int> prefix(len, 0);
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + x.values[i];
    const Int scale = Int(len) * len + 1;
    for (int k = 1; k < len; ++k) {
      Int best = -kInf;
      long long arg = -1;
      for (int i = 0; i + k < len; ++i) {
        Int v = (scale * prefix[i + k] + Int(i + k) * (i + k)) -
                (scale * prefix[i] + Int(i) * i);
        if (v > best) {
          best = v;
          arg = i;
        }
      }
      REQUIRE(r.i_witness[k] == arg);
      REQUIRE(r.j_witness[k] == arg + k);
      REQUIRE(prefix[r.j_witness[k]] - prefix[r.i_witness[k]] == r.diff.values[k]);
    }
  }
}

TEST_CASE("argmax survives the times-four-plus-indicator perturbation") {
  SeededRng rng(19);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 2 + iter % 6;
    IntVector a = generate_vector(n, 4, rng.next());
    // Perturb with an arbitrary 0/1 indicator; every maximizer of the
    // perturbed objective must maximize the unperturbed one.
    std::vector<int> ind(n);
    for (int i = 0; i < n; ++i) ind[i] = rng.coin();
    for (int k = 1; k < n; ++k) {
      Int base_best = -kInf, pert_best = -kInf;
      for (int i = 0; i + k < n; ++i) {
        base_best = std::max(base_best, a.values[i + k] - a.values[i]);
        pert_best = std::max(pert_best,
                             4 * (a.values[i + k] - a.values[i]) + ind[i + k] - ind[i]);
      }
      for (int i = 0; i + k < n; ++i) {
        Int pert = 4 * (a.values[i + k] - a.values[i]) + ind[i + k] - ind[i];
        if (pert == pert_best) REQUIRE(a.values[i + k] - a.values[i] == base_best);
      }
    }
  }
}

// --------------------------------------------------------------------------
// Super-additivity through knapsack variants
// --------------------------------------------------------------------------

TEST_CASE("knapsack gadget: worked examples") {
  {
    // Super-additive example: the parity-mode optimum is 2D+1 = 33.
    IntVector a = increasing({0, 2, 5});
    SuperaddGadget g = superadd_to_knapsack(a, SuperaddMode::parity);
    CHECK(g.d == 16);
    CHECK(g.target_value == 33);
    CHECK(knapsack_optimum(g.instance) == 33);
    auto o = knap_parity();
    CHECK(superadd_via_knapsack_parity(a, o).superadditive);
    CHECK(o.ledger().calls == 1);
  }
  {
    // 3+3 > 5: not super-additive; the optimum is even and larger than 33.
    IntVector a = increasing({0, 3, 5});
    SuperaddGadget g = superadd_to_knapsack(a, SuperaddMode::parity);
    Int opt = knapsack_optimum(g.instance);
    CHECK(opt % 2 == 0);
    CHECK(opt > 33);
    auto o = knap_parity();
    CHECK_FALSE(superadd_via_knapsack_parity(a, o).superadditive);
  }
  {
    // Vacuous at n = 2.
    IntVector a = increasing({0, 7});
    auto o = knap_parity();
    SuperaddVerdict v = superadd_via_knapsack_parity(a, o);
    CHECK(v.superadditive);
    CHECK(o.ledger().calls == 0);
  }
  {
    // Exact mode: optimum D exactly when super-additive.
    IntVector a = increasing({0, 2, 5});
    SuperaddGadget g = superadd_to_knapsack(a, SuperaddMode::exact);
    CHECK(knapsack_optimum(g.instance) == g.d);
    auto o = knap_exact();
    CHECK(superadd_via_knapsack_exact(a, o).superadditive);
  }
  CHECK_THROWS_AS(superadd_to_knapsack(increasing({1, 2}), SuperaddMode::parity),
                  std::invalid_argument);
  CHECK_THROWS_AS(superadd_to_knapsack(vec({0, 2, 2}), SuperaddMode::parity),
                  std::invalid_argument);
}

TEST_CASE("knapsack gadget instances stay indexed-compatible") {
  IntVector a = increasing({0, 1, 4, 9});
  for (SuperaddMode mode : {SuperaddMode::parity, SuperaddMode::coin_change_parity}) {
    SuperaddGadget g = superadd_to_knapsack(a, mode);
    std::vector<Int> ws;
    for (const KnapsackItem& it : g.instance.items) ws.push_back(it.weight);
    std::sort(ws.begin(), ws.end());
    for (std::size_t i = 0; i < ws.size(); ++i) REQUIRE(ws[i] == static_cast<Int>(i + 1));
    CHECK(g.instance.target == static_cast<Int>(ws.size()));
    CHECK_FALSE(validate(g.instance).has_value());
  }
}

TEST_CASE("all four oracle variants agree with the direct check (spot sizes)") {
  // Exhaustive over strictly increasing vectors with A[0]=0, A[n-1]=M.
  for (int n = 3; n <= 5; ++n) {
    for (Int m = n - 1; m <= 10; ++m) {
      std::vector<Int> inc(n - 1, 1);
      std::function<void(int, Int)> rec = [&](int pos, Int left) {
        if (pos == n - 2) {
          inc[pos] = left;
          std::vector<Int> vals{0};
          for (Int d : inc) vals.push_back(vals.back() + d);
          IntVector a;
          a.values = vals;
          a.weight_bound = m;
          bool direct = is_superadditive(a);
          auto oe = knap_exact();
          CHECK(superadd_via_knapsack_exact(a, oe).superadditive == direct);
          auto op = knap_parity();
          CHECK(superadd_via_knapsack_parity(a, op).superadditive == direct);
          auto oz = knap_parity();
          CHECK(superadd_via_zero_one_knapsack_parity(a, oz).superadditive == direct);
          auto oc = knap_parity();
          CHECK(superadd_via_coin_change_parity(a, oc).superadditive == direct);
          return;
        }
        for (Int d = 1; d + (n - 2 - pos) <= left; ++d) {
          inc[pos] = d;
          rec(pos + 1, left - d);
        }
      };
      rec(0, m);
    }
  }
}

// --------------------------------------------------------------------------
// Three-vector maximum sum
// --------------------------------------------------------------------------

TEST_CASE("sum3 recursion: worked examples") {
  {
    Sum3Instance s = make_sum3(vec({0, 0}), vec({0, 0}), vec({0, 0}));
    auto o = maxsum_parity();
    Sum3Result r = sum3_via_maxsum_parity(s, o);
    CHECK(r.decision);
    CHECK(r.max_value == 0);
    CHECK(o.ledger().calls == 1);  // ceil(log2 2)
  }
  {
    Sum3Instance s = make_sum3(vec({-5, 1}), vec({-5, 0}), vec({-5, -1}));
    auto o = maxsum_parity();
    Sum3Result r = sum3_via_maxsum_parity(s, o);
    CHECK_FALSE(r.decision);
    CHECK(r.max_value == -5);
    CHECK(r.witness_i == 1);
  }
}

TEST_CASE("sum3 recursion: the witness always attains the maximum") {
  SeededRng rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 1 + iter % 32;
    Sum3Instance s = generate_sum3(n, 20, rng.next());
    auto o = maxsum_parity();
    Sum3Result r = sum3_via_maxsum_parity(s, o);
    Int best = sum3_max(s);
    REQUIRE(r.max_value == best);
    REQUIRE(r.decision == (best >= 0));
    REQUIRE(o.ledger().calls == ceil_log2(n));
    Int at_i = -kInf;
    for (int j = 0; r.witness_i + j < n; ++j)
      at_i = std::max(at_i, s.a.values[r.witness_i] + s.b.values[j] +
                                s.c.values[r.witness_i + j]);
    REQUIRE(at_i == best);
  }
}

TEST_CASE("tree-sparsity adapter: offset is even and bits pass through") {
  // Offset arithmetic at the two documented points.
  CHECK(300 * Int(1) + 10 * Int(1) * (1 + 2) == 330);
  CHECK(330 % 2 == 0);
  CHECK(300 * Int(2) + 10 * Int(2) * (5 + 2) == 740);
  CHECK(740 % 2 == 0);

  SeededRng rng(29);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 1 + iter % 16;
    Sum3Instance s = generate_sum3(n, 12, rng.next());
    Int m = s.a.weight_bound;
    auto adapter = treesparsity_parity_adapter(simulated_tree_sparsity_source(m), m);
    REQUIRE(adapter.query_bit(s) == parity_bit(sum3_max(s)));
  }

  // End to end: the recursion driven through the adapter still finds a
  // maximizing index.
  SeededRng rng2(31);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 1 + iter % 16;
    Sum3Instance s = generate_sum3(n, 12, rng2.next());
    auto adapter = treesparsity_parity_adapter(simulated_tree_sparsity_source(s.a.weight_bound),
                                               s.a.weight_bound);
    Sum3Result r = sum3_via_maxsum_parity(s, adapter);
    REQUIRE(r.max_value == sum3_max(s));
    REQUIRE(r.decision == (sum3_max(s) >= 0));
  }
}

TEST_CASE("exhaustive tiny reconstruction: products, convolutions, subsums") {
  // All vectors of length <= 3 with entries in {-2..2}.
  std::vector<std::vector<Int>> smalls;
  for (int len = 1; len <= 3; ++len) {
    long long total = 1;
    for (int i = 0; i < len; ++i) total *= 5;
    for (long long code = 0; code < total; ++code) {
      std::vector<Int> vals;
      long long c = code;
      for (int i = 0; i < len; ++i) {
        vals.push_back(c % 5 - 2);
        c /= 5;
      }
      smalls.push_back(vals);
    }
  }
  for (const auto& va : smalls) {
    IntVector x = vec(std::vector<Int>(va));
    auto o = diff_parity();
    REQUIRE(mcs_via_parity(x, o).mcs.values == max_consecutive_subsums(x).values);
    for (const auto& vb : smalls) {
      if (va.size() != vb.size()) continue;
      IntVector b = vec(std::vector<Int>(vb));
      auto oc = convolution_parity();
      REQUIRE(conv_via_parity(x, b, oc).conv.values ==
              min_plus_convolution(x, b).values);
    }
  }
  // All 2x2 matrix pairs with entries in {-1..1}.
  std::vector<IntMatrix> mats;
  for (long long code = 0; code < 81; ++code) {
    std::vector<Int> vals;
    long long c = code;
    for (int i = 0; i < 4; ++i) {
      vals.push_back(c % 3 - 1);
      c /= 3;
    }
    mats.push_back(mat(2, vals));
  }
  for (const IntMatrix& a : mats)
    for (const IntMatrix& b : mats) {
      auto o = product_parity();
      REQUIRE(matmul_via_parity(a, b, o).product.values == min_plus_product(a, b).values);
    }
}
