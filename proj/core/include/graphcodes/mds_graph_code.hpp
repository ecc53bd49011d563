#pragma once

#include <span>

#include "graphcodes/graphcore.hpp"
#include "graphcodes/mdsrs.hpp"

namespace graphcodes {

// Graph code over GF(q) correcting any rho whole-node failures: the first
// n-rho columns and every row of the adjacency matrix are codewords of one
// [n, n-rho] MDS code.  Dimension (n-rho)^2 meets the node-erasure bound
// with redundancy 2*n*rho - rho^2.
class MdsGraphCode {
 public:
  // Throws std::invalid_argument unless 1 <= rho < n.
  MdsGraphCode(int n, int rho);

  int node_count() const { return n_; }
  int erasure_budget() const { return n_ - mds_.dimension(); }
  int info_side() const { return mds_.dimension(); }
  std::size_t dimension() const {
    return static_cast<std::size_t>(info_side()) * info_side();
  }
  std::size_t redundancy() const {
    return static_cast<std::size_t>(n_) * n_ - dimension();
  }
  const Field& field() const { return mds_.field(); }
  const MdsCode& component() const { return mds_; }

  // info is (n-rho) x (n-rho) and lands verbatim in the top-left block.
  DirectedGraph encode(const Matrix& info) const;

  // True iff every row and each of the first n-rho columns is a codeword.
  bool check(const DirectedGraph& g) const;

  // Recovers the unique codeword from node failures `failed`
  // (at most rho of them).  Surviving rows each see at most rho erasures
  // and decode first; they complete the first n-rho columns, which in turn
  // complete the failed rows.
  DirectedGraph decode(const ErasedGraph& eg, std::span<const int> failed) const;

  // Every membership constraint as one parity system over the n^2 cells in
  // row-major order; nullspace dimension equals dimension().
  Matrix constraint_matrix() const;

 private:
  int n_;
  MdsCode mds_;
};

}  // namespace graphcodes
