// Acceptance gate for the library: nine end-to-end checks, one line of
// output each.  Every numeric comparison is exact; the only tolerance is
// the wall-clock budget printed next to each result.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "graphcodes/array_graph_code.hpp"
#include "graphcodes/double_code.hpp"
#include "graphcodes/gflinalg.hpp"
#include "graphcodes/graphcore.hpp"
#include "graphcodes/mds_graph_code.hpp"
#include "graphcodes/rng.hpp"

using namespace graphcodes;

namespace {

void for_each_subset(int n, int size,
                     const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick(size);
  const std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == size) {
      fn(pick);
      return;
    }
    for (int v = start; v < n; ++v) {
      pick[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
}

Matrix random_matrix(const Field& f, int rows, int cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m.set(r, c, {rng.below(f.order())});
  }
  return m;
}

UndirectedGraph random_pair_info(const Field& f, int nodes, Rng& rng) {
  UndirectedGraph g(f, nodes);
  for (int b = 0; b < nodes; ++b) {
    for (int a = 0; a <= b; ++a) g.set_label(a, b, {rng.below(f.order())});
  }
  return g;
}

std::vector<std::optional<FieldElement>> flat_cells(const ErasedGraph& eg) {
  const int n = eg.node_count();
  std::vector<std::optional<FieldElement>> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) cells.push_back(eg.cell(a, b));
  }
  return cells;
}

bool oracle_matches(const Matrix& constraints, const DirectedGraph& g,
                    const ErasedGraph& eg) {
  const auto cells = solve_erasures(constraints, flat_cells(eg));
  const int n = g.node_count();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (cells[static_cast<std::size_t>(a) * n + b] != g.label(a, b)) {
        return false;
      }
    }
  }
  return true;
}

Matrix adjacency_matrix(const DirectedGraph& g) {
  const int n = g.node_count();
  Matrix m(g.field(), n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) m.set(a, b, g.label(a, b));
  }
  return m;
}

constexpr int kPrimes[] = {5, 7, 11, 13};

// --------------------------------------------------------------------------

// The 4n-4 directed constraints are linearly independent and leave a kernel
// of dimension (n-2)^2, the node-erasure optimum.
bool directed_rank_and_dimension() {
  for (int n : kPrimes) {
    const DirectedDoubleCode code(n);
    const Matrix cm = code.constraint_matrix();
    const auto expect_rank = static_cast<std::size_t>(4 * n - 4);
    const auto expect_dim = static_cast<std::size_t>(n - 2) * (n - 2);
    if (rank(cm) != expect_rank) return false;
    if (nullspace_dim(cm) != expect_dim) return false;
  }
  return true;
}

// Every single-node and double-node failure decodes back to the original
// codeword and agrees with the generic linear-system completion.
bool directed_full_recovery() {
  Rng rng(0xacce5501);
  for (int n : kPrimes) {
    const DirectedDoubleCode code(n);
    const Matrix cm = code.constraint_matrix();
    for (int word = 0; word < 20; ++word) {
      const DirectedGraph g =
          code.encode(random_matrix(code.field(), n - 2, n - 2, rng));
      for (int size : {1, 2}) {
        bool ok = true;
        for_each_subset(n, size, [&](const std::vector<int>& failed) {
          const ErasedGraph eg = erase_nodes(g, failed);
          ok = ok && code.decode(eg, failed) == g && oracle_matches(cm, g, eg);
        });
        if (!ok) return false;
      }
    }
  }
  return true;
}

// The sweep decoder on 11 nodes with failures {3, 5} follows a fixed
// schedule; pin its shape and the exact first/last correction of each sweep.
bool pinned_sweep_trace() {
  const int n = 11, i = 3, j = 5;
  const SweepSchedule sc = sweep_schedule(n, i, j);
  if (sc.d != 2 || sc.d_inv != 6) return false;
  if (sc.x != 4 || sc.y != 5 || sc.xu != 5 || sc.yu != 4) return false;

  Rng rng(0xacce5503);
  const DirectedDoubleCode code(n);
  const DirectedGraph g =
      code.encode(random_matrix(code.field(), n - 2, n - 2, rng));
  SweepTrace trace;
  const std::vector<int> failed = {i, j};
  if (code.sweep_decode(erase_nodes(g, failed), i, j, &trace) != g) {
    return false;
  }

  const Edge firsts[4] = {{7, 5}, {3, 0}, {5, 8}, {1, 3}};
  const Edge lasts[4] = {{10, 5}, {10, 3}, {5, 9}, {3, 9}};
  for (int s = 0; s < 4; ++s) {
    if (trace.sweep[s].empty()) return false;
    if (trace.sweep[s].front() != firsts[s]) return false;
    if (trace.sweep[s].back() != lasts[s]) return false;
  }
  const auto contains = [](const std::vector<Edge>& v, Edge e) {
    return std::find(v.begin(), v.end(), e) != v.end();
  };
  if (!contains(trace.sweep[0], Edge{5, 5})) return false;
  if (!contains(trace.sweep[3], Edge{3, 3})) return false;

  std::set<Edge> leftovers(trace.peeled.begin(), trace.peeled.end());
  leftovers.insert(trace.cross[0]);
  leftovers.insert(trace.cross[1]);
  for (Edge e : {Edge{5, 3}, Edge{9, 3}, Edge{9, 5}, Edge{3, 5}, Edge{3, 10},
                 Edge{5, 10}}) {
    if (leftovers.count(e) == 0) return false;
  }
  return true;
}

// The field construction reaches dimension (n-rho)^2 and recovers every
// failure pattern of exactly rho nodes.
bool field_code_full_recovery() {
  Rng rng(0xacce5504);
  for (int n = 5; n <= 9; ++n) {
    for (int rho = 1; rho <= 3; ++rho) {
      const MdsGraphCode code(n, rho);
      const auto expect_dim =
          static_cast<std::size_t>(n - rho) * (n - rho);
      if (nullspace_dim(code.constraint_matrix()) != expect_dim) return false;
      const int side = code.info_side();
      const DirectedGraph g =
          code.encode(random_matrix(code.field(), side, side, rng));
      bool ok = true;
      for_each_subset(n, rho, [&](const std::vector<int>& failed) {
        ok = ok && code.decode(erase_nodes(g, failed), failed) == g;
      });
      if (!ok) return false;
    }
  }
  return true;
}

// Counting invariants the row/column decoding order relies on: each row
// meets the failed columns rho times, each column the failed rows rho
// times, and each surviving row the whole failure pattern rho times.
bool intersection_counts() {
  for (int n = 5; n <= 9; ++n) {
    for (int rho = 1; rho <= 3; ++rho) {
      bool ok = true;
      for_each_subset(n, rho, [&](const std::vector<int>& j) {
        std::set<Edge> f_in, f_out, f_all;
        for (int k : j) {
          for (Edge e : in_neighborhood(n, k)) f_in.insert(e);
          for (Edge e : out_neighborhood(n, k)) f_out.insert(e);
          for (Edge e : neighborhood(n, k)) f_all.insert(e);
        }
        const auto hits = [](const EdgeSet& a, const std::set<Edge>& b) {
          std::size_t c = 0;
          for (Edge e : a) c += b.count(e);
          return c;
        };
        const auto r = static_cast<std::size_t>(rho);
        for (int l = 0; l < n; ++l) {
          ok = ok && hits(out_neighborhood(n, l), f_in) == r;
          ok = ok && hits(in_neighborhood(n, l), f_out) == r;
          if (std::find(j.begin(), j.end(), l) == j.end()) {
            ok = ok && hits(out_neighborhood(n, l), f_all) == r;
          }
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

// The binary array construction: parity rank (hence dimension), node-failure
// recovery, exhaustive rank distance at n=5, sampled rank distance at n=7.
bool array_code_rank_and_recovery() {
  Rng rng(0xacce5506);
  for (int rho : {1, 2}) {
    const ArrayGraphCode code(7, rho);
    if (rank(code.parity_check()) != static_cast<std::size_t>(2 * rho * 7)) {
      return false;
    }
    const DirectedGraph g =
        code.encode(random_matrix(code.field(), 7 - 2 * rho, 7, rng));
    for (int size = 1; size <= rho; ++size) {
      bool ok = true;
      for_each_subset(7, size, [&](const std::vector<int>& failed) {
        ok = ok && code.decode(erase_nodes(g, failed), failed) == g;
      });
      if (!ok) return false;
    }
  }

  {
    // All 31 nonzero codewords on 5 nodes have adjacency rank >= 5.
    const ArrayGraphCode code(5, 2);
    for (int bits = 1; bits < 32; ++bits) {
      Matrix info(code.field(), 1, 5);
      for (int c = 0; c < 5; ++c) {
        info.set(0, c, {static_cast<std::uint64_t>(bits >> c) & 1u});
      }
      const Matrix adj = adjacency_matrix(code.encode(info));
      if (rank(adj) < static_cast<std::size_t>(code.rank_distance())) {
        return false;
      }
    }
  }

  for (int rho : {1, 2}) {
    const ArrayGraphCode code(7, rho);
    const auto dist = static_cast<std::size_t>(code.rank_distance());
    for (int sample = 0; sample < 10000; ++sample) {
      const Matrix info = random_matrix(code.field(), 7 - 2 * rho, 7, rng);
      bool zero = true;
      for (std::size_t r = 0; r < info.rows() && zero; ++r) {
        for (std::size_t c = 0; c < info.cols() && zero; ++c) {
          zero = info.at(r, c) == FieldElement{};
        }
      }
      if (zero) continue;
      if (rank(adjacency_matrix(code.encode(info))) < dist) return false;
    }
  }
  return true;
}

// Structural invariants behind the sweep decoder: a diagonal set crosses a
// failure set in exactly the one edge between the two nodes, and the two
// self-loop placements split across the sweep pairs, never doubling up.
bool crossing_and_pairing_invariants() {
  for (int n : kPrimes) {
    const auto dgd = directed_diagonal_sets(n, Direction::down);
    const auto dgu = directed_diagonal_sets(n, Direction::up);
    const auto fd = directed_failure_sets(n, Direction::down);
    const auto fu = directed_failure_sets(n, Direction::up);
    for (int i = 0; i < n - 2; ++i) {
      for (int j = 0; j < n - 2; ++j) {
        if (i == j) continue;
        const int m = (i + j) % n;
        EdgeSet down, up;
        std::set_intersection(dgd[m].begin(), dgd[m].end(), fd[j].begin(),
                              fd[j].end(), std::back_inserter(down));
        std::set_intersection(dgu[m].begin(), dgu[m].end(), fu[j].begin(),
                              fu[j].end(), std::back_inserter(up));
        if (down != EdgeSet{orient_edge(NodePair(i, j), Direction::down)}) {
          return false;
        }
        if (up != EdgeSet{orient_edge(NodePair(i, j), Direction::up)}) {
          return false;
        }
      }
    }
  }
  for (int n : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    for (int i = 0; i < n - 2; ++i) {
      for (int j = i + 1; j < n - 2; ++j) {
        const SweepSchedule sc = sweep_schedule(n, i, j);
        if (sc.self_in_a_and_bu == sc.self_in_au_and_b) return false;
      }
    }
  }
  return true;
}

// Both undirected codes hold rank 2n-1 and recover every node pair, the
// sweep decoder handling pairs of information nodes and peeling the rest.
bool undirected_full_recovery() {
  Rng rng(0xacce5508);
  for (int n : {5, 7, 11}) {
    for (TriangleSide side : {TriangleSide::lower, TriangleSide::upper}) {
      const UndirectedDoubleCode code(n, side);
      if (rank(code.constraint_matrix()) !=
          static_cast<std::size_t>(2 * n - 1)) {
        return false;
      }
      const UndirectedGraph g =
          code.encode(random_pair_info(code.field(), n - 2, rng));
      bool ok = true;
      for_each_subset(n, 2, [&](const std::vector<int>& failed) {
        const ErasedUndirectedGraph eg = erase_nodes(g, failed);
        ok = ok && code.decode(eg, failed) == g;
        if (failed[1] < n - 2) {
          ok = ok && code.sweep_decode(eg, failed[0], failed[1]) == g;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

// The array family pays 2 rho n checks where 2 n rho - rho^2 would do; the
// directed double code meets that floor exactly.  Realized ranks included.
bool redundancy_versus_bound() {
  for (int rho : {1, 2}) {
    const ArrayGraphCode arr(7, rho);
    const auto bound = static_cast<std::size_t>(2 * 7 * rho - rho * rho);
    if (arr.redundancy() != static_cast<std::size_t>(2 * rho * 7)) {
      return false;
    }
    if (arr.redundancy() <= bound) return false;
    if (rank(arr.parity_check()) != arr.redundancy()) return false;
  }
  const DirectedDoubleCode dbl(7);
  const auto bound2 = static_cast<std::size_t>(2 * 7 * 2 - 2 * 2);
  if (dbl.redundancy() != bound2) return false;
  if (rank(dbl.constraint_matrix()) != bound2) return false;
  return true;
}

struct Criterion {
  const char* name;
  bool (*run)();
  double budget_seconds;
};

const Criterion kCriteria[] = {
    {"directed double code rank and kernel dimension",
     directed_rank_and_dimension, 5.0},
    {"directed double code recovers every single and double failure",
     directed_full_recovery, 60.0},
    {"pinned sweep decoder trace on 11 nodes", pinned_sweep_trace, 5.0},
    {"field construction recovers every failure pattern",
     field_code_full_recovery, 30.0},
    {"neighborhood and failure set intersection counts",
     intersection_counts, 10.0},
    {"binary array construction rank and recovery",
     array_code_rank_and_recovery, 60.0},
    {"diagonal crossing and self loop pairing invariants",
     crossing_and_pairing_invariants, 10.0},
    {"undirected double codes recover every pair at full rank",
     undirected_full_recovery, 30.0},
    {"redundancy versus the node-failure bound", redundancy_versus_bound,
     5.0},
};

}  // namespace

int main() {
  int failures = 0;
  int index = 0;
  for (const Criterion& c : kCriteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion %d threw: %s\n", index, e.what());
      ok = false;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > c.budget_seconds) ok = false;
    if (!ok) ++failures;
    std::printf("criterion %d/9: %s ... %s (%.2fs, budget %.0fs)\n", index,
                c.name, ok ? "pass" : "FAIL", elapsed, c.budget_seconds);
  }
  return failures == 0 ? 0 : 1;
}
