#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "graphcodes/gflinalg.hpp"
#include "graphcodes/graphcore.hpp"

namespace graphcodes {

bool is_prime(int n);

// The two-node-failure codes below come in two triangle conventions that
// differ only in which of the last two nodes plays which parity role.  On
// the lower side node n-2 is the single-parity node and n-1 the diagonal
// one; the upper side swaps them.
enum class TriangleSide { lower, upper };

// Neighborhood parity sets, one per h in [n-1].  For h < n-2 the set holds
// the pairs {v_h, v_l} with l running over every node except the diagonal
// node of the side; the set at h = n-2 holds the self pairs of those same
// nodes.  n must be a prime >= 5 (std::invalid_argument otherwise; same
// for the other families).
std::vector<PairSet> neighborhood_sets(int n, TriangleSide side);

// Diagonal parity sets, one per m in [n]: pairs {v_k, v_l} with
// <k+l>_n = m where neither endpoint is the single-parity node, plus the
// pair joining the two parity nodes, which is a member of every set.  That
// shared pair is what keeps the constraints nonsingular when one parity
// node fails together with an information node.
std::vector<PairSet> diagonal_sets(int n, TriangleSide side);

// All pairs touching node t, one set per t in [n].
std::vector<PairSet> failure_sets(int n);

// Directed orientations of the families above.  Direction::down orients
// the lower-side sets largest-endpoint-first, Direction::up orients the
// upper-side sets smallest-first.  Neighborhood families keep h in [n-2]
// only: the self-pair sets stay undirected-code-specific.
std::vector<EdgeSet> directed_neighborhood_sets(int n, Direction dir);
std::vector<EdgeSet> directed_diagonal_sets(int n, Direction dir);
std::vector<EdgeSet> directed_failure_sets(int n, Direction dir);

// Iteration schedule shared by the two-failure sweep decoders.  For failed
// nodes i < j < n-2 let d = <j-i>_n and e = d^{-1} mod n (n prime).  Then
// x = <-1-e>_n and y = <-1+e>_n bound the lower-side sweeps and xu = y,
// yu = x the upper-side ones, and the sweeps visit
//   a[t]  = <-d(t+1)-2>_n for t <= x    (ends at n-1)
//   b[t]  = < d(t+1)-2>_n for t <= y    (ends at n-1)
//   au[t] = <-d(t+1)-1>_n for t <= xu   (ends at n-2)
//   bu[t] = < d(t+1)-1>_n for t <= yu   (ends at n-2).
// The failed indices always show up together: either both i and j appear
// in a and in bu, or both appear in au and in b, never both patterns.
struct SweepSchedule {
  int n = 0;
  int i = 0;
  int j = 0;
  int d = 0;
  int d_inv = 0;
  int x = 0, y = 0, xu = 0, yu = 0;
  std::vector<int> a, b, au, bu;
  bool self_in_a_and_bu = false;
  bool self_in_au_and_b = false;
};
SweepSchedule sweep_schedule(int n, int i, int j);

// Per-set sums of the cells that survive a two-node failure.  Entries
// whose set lost no cells are plain parities (zero for a codeword);
// entries at h in {i, j} are partial sums the decoders never read.
struct PairSyndromes {
  std::vector<FieldElement> s;  // neighborhood sets, h in [n-1]
  std::vector<FieldElement> d;  // diagonal sets, m in [n]
};
// Requires the Unknown cells to be exactly the pairs touching i or j.
PairSyndromes pair_syndromes(const ErasedUndirectedGraph& eg, TriangleSide side,
                             int i, int j);

struct EdgeSyndromes {
  std::vector<FieldElement> s_down, s_up;  // h in [n-2]
  std::vector<FieldElement> d_down, d_up;  // m in [n]
};
// Requires the Unknown cells to be exactly the edges touching i or j.
EdgeSyndromes edge_syndromes(const ErasedGraph& eg, int i, int j);

// Binary double-node-erasure code on the complete undirected graph with
// self loops, n >= 5 prime.  Information lives on the (n-2)(n-1)/2 pairs
// among the first n-2 nodes; the 2n-1 pairs touching the last two nodes
// are redundancy fixed by the side's neighborhood and diagonal parities.
class UndirectedDoubleCode {
 public:
  // Throws std::invalid_argument unless n is a prime >= 5.
  UndirectedDoubleCode(int n, TriangleSide side);

  int node_count() const { return n_; }
  int erasure_budget() const { return 2; }
  TriangleSide side() const { return side_; }
  std::size_t dimension() const {
    return static_cast<std::size_t>(n_ - 2) * (n_ - 1) / 2;
  }
  std::size_t redundancy() const {
    return static_cast<std::size_t>(2) * n_ - 1;
  }
  const Field& field() const { return field_; }

  // All 2n-1 parity sets, neighborhood sets first, then diagonal sets.
  const std::vector<PairSet>& parity_sets() const { return parity_sets_; }

  // info has n-2 nodes; its pair labels land verbatim in the output and
  // the redundancy pairs are completed by peeling.
  UndirectedGraph encode(const UndirectedGraph& info) const;

  bool check(const UndirectedGraph& g) const;

  // Recovers from the failure of at most two nodes.  A pair of failed
  // nodes that both hold information runs the chained sweep decoder;
  // every other pattern peels directly.  The result is re-checked, so a
  // non-codeword input surfaces as DecodeError.
  UndirectedGraph decode(const ErasedUndirectedGraph& eg,
                         std::span<const int> failed) const;

  // The sweep decoder on its own, for failed nodes i < j < n-2.
  UndirectedGraph sweep_decode(const ErasedUndirectedGraph& eg, int i,
                               int j) const;

  // One parity row per set over the n(n+1)/2 pair cells indexed
  // hi*(hi+1)/2 + lo; rank is 2n-1, the full redundancy.
  Matrix constraint_matrix() const;

 private:
  int n_;
  TriangleSide side_;
  Field field_;
  std::vector<PairSet> parity_sets_;
};

// Correction record of one DirectedDoubleCode::sweep_decode run.
struct SweepTrace {
  std::array<std::vector<Edge>, 4> sweep;  // per sweep, in correction order
  std::array<Edge, 2> cross{};  // the two edges between the failed nodes
  std::vector<Edge> peeled;     // cleanup order for the rest
};

// Binary double-node-erasure code on the complete directed graph with
// self loops, n >= 5 prime.  Constraints are the down-oriented
// neighborhood and diagonal parities plus the up-oriented ones, 4n-4 in
// total and linearly independent, so the dimension (n-2)^2 meets the
// node-erasure bound exactly.
class DirectedDoubleCode {
 public:
  // Throws std::invalid_argument unless n is a prime >= 5.
  explicit DirectedDoubleCode(int n);

  int node_count() const { return n_; }
  int erasure_budget() const { return 2; }
  std::size_t dimension() const {
    return static_cast<std::size_t>(n_ - 2) * (n_ - 2);
  }
  std::size_t redundancy() const {
    return static_cast<std::size_t>(4) * n_ - 4;
  }
  const Field& field() const { return field_; }

  // Constraint sets in fixed order: down neighborhoods (h in [n-2]), down
  // diagonals (m in [n]), up neighborhoods, up diagonals.
  const std::vector<EdgeSet>& parity_sets() const { return parity_sets_; }

  // info is (n-2) x (n-2) over GF(2); entry (r, c) lands on edge
  // (v_r, v_c).  Redundancy edges are completed by peeling.
  DirectedGraph encode(const Matrix& info) const;

  bool check(const DirectedGraph& g) const;

  // Recovers from the failure of at most two nodes, dispatching exactly
  // like the undirected decode.
  DirectedGraph decode(const ErasedGraph& eg, std::span<const int> failed) const;

  // The four-sweep decoder for failed nodes i < j < n-2.  The four sweeps
  // run as resumable tasks under a round-robin scheduler: two sweeps
  // correct down edges walking opposite directions, two correct up edges,
  // and a sweep that needs the other diagonal self loop yields until the
  // task owning it has written it.  Afterwards the two edges between the
  // failed nodes follow from the diagonal parities through both of them,
  // and the few remaining redundancy edges peel.
  DirectedGraph sweep_decode(const ErasedGraph& eg, int i, int j,
                             SweepTrace* trace = nullptr) const;

  // One parity row per set over the n^2 cells in row-major order; rank is
  // 4n-4, so the kernel dimension equals dimension().
  Matrix constraint_matrix() const;

 private:
  int n_;
  Field field_;
  std::vector<EdgeSet> parity_sets_;
};

}  // namespace graphcodes
