#pragma once

#include <span>

#include "graphcodes/graphcore.hpp"

namespace graphcodes {

// Minimum number of rows plus columns that together touch every nonzero
// entry (minimum vertex cover of the bipartite support graph).  Computed
// through maximum matching.
int cover_weight(const Matrix& m);

// Exhaustive reference for small matrices: tries every row subset.
// Exponential in rows(); intended for side-by-side audits.
int cover_weight_brute(const Matrix& m);

// Binary rho-node-erasure graph code on n nodes: adjacency matrices are the
// codewords of an [n x n, n(n-2 rho)] array code whose nonzero members all
// have matrix rank at least 2 rho + 1.  Realized with q-power parity checks
// over GF(2^n) against the polynomial basis 1, x, .., x^(n-1): each
// adjacency column, read as a field element, must satisfy
// sum_j h_j^(2^t) c_j = 0 for t in [2 rho].
//
// Rows plus columns of at most rho failed nodes form a cover smaller than
// the rank of any nonzero codeword, so erasure patterns from node failures
// always complete uniquely.  The redundancy 2 rho n exceeds the
// graph-code optimum 2 n rho - rho^2; the family trades that slack for a
// binary alphabet.
class ArrayGraphCode {
 public:
  // Throws std::invalid_argument unless 1 <= rho and 2 rho < n <= 32.
  ArrayGraphCode(int n, int rho);

  int node_count() const { return n_; }
  int erasure_budget() const { return rho_; }
  // Every nonzero codeword has rank (and cover weight) at least this.
  int rank_distance() const { return 2 * rho_ + 1; }
  std::size_t dimension() const {
    return static_cast<std::size_t>(n_) * (n_ - 2 * rho_);
  }
  std::size_t redundancy() const {
    return static_cast<std::size_t>(2 * rho_) * n_;
  }
  const Field& field() const { return parity_check_.field(); }  // GF(2)
  // (2 rho n) x n^2 over GF(2), cells flattened row-major.
  const Matrix& parity_check() const { return parity_check_; }

  // info is (n - 2 rho) x n and becomes the top rows verbatim; the bottom
  // 2 rho rows are the unique completion.
  DirectedGraph encode(const Matrix& info) const;

  bool check(const DirectedGraph& g) const;

  // Node-failure decoding: at most rho failed nodes.
  DirectedGraph decode(const ErasedGraph& eg, std::span<const int> failed) const;

  // Generic completion of any erasure pattern (for example rho rows plus
  // rho columns with unrelated indices).  Throws DecodeError when the
  // pattern is not uniquely completable or contradicts the code.
  DirectedGraph complete(const ErasedGraph& eg) const;

 private:
  int n_;
  int rho_;
  Matrix parity_check_;
};

}  // namespace graphcodes
