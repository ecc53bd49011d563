#include "graphcodes/peeling.hpp"

namespace graphcodes {
namespace {

template <class Graph, class CellSet>
std::vector<typename CellSet::value_type> peel_impl(
    Graph& eg, const std::vector<CellSet>& constraints) {
  const Field& f = eg.field();
  std::vector<typename CellSet::value_type> order;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (const CellSet& set : constraints) {
      std::size_t holes = 0;
      const typename CellSet::value_type* hole = nullptr;
      FieldElement sum{0};
      for (const auto& cell : set) {
        if (auto v = eg.cell(cell)) {
          sum = f.add(sum, *v);
        } else {
          if (++holes > 1) break;
          hole = &cell;
        }
      }
      if (holes == 1) {
        eg.set_cell(*hole, sum);
        order.push_back(*hole);
        progressed = true;
      }
    }
  }
  return order;
}

}  // namespace

std::vector<Edge> peel(ErasedGraph& eg, const std::vector<EdgeSet>& constraints) {
  return peel_impl(eg, constraints);
}

std::vector<NodePair> peel(ErasedUndirectedGraph& eg,
                           const std::vector<PairSet>& constraints) {
  return peel_impl(eg, constraints);
}

}  // namespace graphcodes
