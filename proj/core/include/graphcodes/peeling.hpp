#pragma once

#include <vector>

#include "graphcodes/graphcore.hpp"

namespace graphcodes {

// Fixpoint peeling over parity constraints.  Each constraint is a cell set
// whose labels sum to zero; whenever a set has exactly one Unknown cell
// left, that cell is the sum of the Known ones (characteristic 2).  Passes
// repeat until no constraint fires.  Returns the cells resolved, in
// resolution order; the caller inspects eg afterwards to see whether any
// Unknown cells survived.
std::vector<Edge> peel(ErasedGraph& eg, const std::vector<EdgeSet>& constraints);
std::vector<NodePair> peel(ErasedUndirectedGraph& eg,
                           const std::vector<PairSet>& constraints);

}  // namespace graphcodes
