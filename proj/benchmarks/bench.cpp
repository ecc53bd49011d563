#include <benchmark/benchmark.h>

#include <vector>

#include "graphcodes/array_graph_code.hpp"
#include "graphcodes/double_code.hpp"
#include "graphcodes/gf2m.hpp"
#include "graphcodes/gflinalg.hpp"
#include "graphcodes/graphcore.hpp"
#include "graphcodes/mds_graph_code.hpp"
#include "graphcodes/rng.hpp"

using namespace graphcodes;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols,
                     Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, {rng.below(f.order())});
  }
  return m;
}

void bm_field_mul(benchmark::State& state) {
  const Field f(static_cast<int>(state.range(0)));
  Rng rng(1);
  const FieldElement a{1 + rng.below(f.order() - 1)};
  FieldElement x{1 + rng.below(f.order() - 1)};
  for (auto _ : state) {
    x = f.mul(x, a);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(bm_field_mul)->Arg(8)->Arg(16)->Arg(32);

void bm_field_inv(benchmark::State& state) {
  const Field f(static_cast<int>(state.range(0)));
  FieldElement x{3};
  for (auto _ : state) {
    x = f.inv(x);
    benchmark::DoNotOptimize(x);
    x = f.add(x, FieldElement{1});
    if (x == FieldElement{}) x = FieldElement{3};
  }
}
BENCHMARK(bm_field_inv)->Arg(8)->Arg(16)->Arg(32);

void bm_rank_gf2(benchmark::State& state) {
  const Field f(1);
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(f, n, n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(m));
  }
}
BENCHMARK(bm_rank_gf2)->Arg(64)->Arg(256);

void bm_double_encode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DirectedDoubleCode code(n);
  Rng rng(3);
  const Matrix info = random_matrix(code.field(), n - 2, n - 2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(code.encode(info));
  }
}
BENCHMARK(bm_double_encode)->Arg(11)->Arg(31);

void bm_double_sweep_decode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DirectedDoubleCode code(n);
  Rng rng(4);
  const DirectedGraph g =
      code.encode(random_matrix(code.field(), n - 2, n - 2, rng));
  const std::vector<int> failed = {1, 4};
  const ErasedGraph eg = erase_nodes(g, failed);
  for (auto _ : state) {
    benchmark::DoNotOptimize(code.decode(eg, failed));
  }
}
BENCHMARK(bm_double_sweep_decode)->Arg(11)->Arg(31);

void bm_double_solver_decode(benchmark::State& state) {
  // The generic linear-system route the sweep decoder is meant to beat.
  const int n = static_cast<int>(state.range(0));
  const DirectedDoubleCode code(n);
  Rng rng(4);
  const DirectedGraph g =
      code.encode(random_matrix(code.field(), n - 2, n - 2, rng));
  const std::vector<int> failed = {1, 4};
  const ErasedGraph eg = erase_nodes(g, failed);
  const Matrix cm = code.constraint_matrix();
  std::vector<std::optional<FieldElement>> cells(
      static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      cells[static_cast<std::size_t>(a) * n + b] = eg.cell(a, b);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_erasures(cm, cells));
  }
}
BENCHMARK(bm_double_solver_decode)->Arg(11)->Arg(31);

void bm_undirected_decode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const UndirectedDoubleCode code(n, TriangleSide::lower);
  Rng rng(5);
  UndirectedGraph info(code.field(), n - 2);
  for (int b = 0; b < n - 2; ++b) {
    for (int a = 0; a <= b; ++a) info.set_label(a, b, {rng.below(2)});
  }
  const UndirectedGraph g = code.encode(info);
  const std::vector<int> failed = {1, 4};
  const ErasedUndirectedGraph eg = erase_nodes(g, failed);
  for (auto _ : state) {
    benchmark::DoNotOptimize(code.decode(eg, failed));
  }
}
BENCHMARK(bm_undirected_decode)->Arg(11)->Arg(31);

void bm_mds_decode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MdsGraphCode code(n, 2);
  Rng rng(6);
  const int side = code.info_side();
  const DirectedGraph g =
      code.encode(random_matrix(code.field(), side, side, rng));
  const std::vector<int> failed = {0, n - 1};
  const ErasedGraph eg = erase_nodes(g, failed);
  for (auto _ : state) {
    benchmark::DoNotOptimize(code.decode(eg, failed));
  }
}
BENCHMARK(bm_mds_decode)->Arg(8)->Arg(16);

void bm_array_decode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ArrayGraphCode code(n, 2);
  Rng rng(7);
  const DirectedGraph g =
      code.encode(random_matrix(code.field(), n - 4, n, rng));
  const std::vector<int> failed = {0, n - 1};
  const ErasedGraph eg = erase_nodes(g, failed);
  for (auto _ : state) {
    benchmark::DoNotOptimize(code.decode(eg, failed));
  }
}
BENCHMARK(bm_array_decode)->Arg(9)->Arg(17);

}  // namespace

BENCHMARK_MAIN();
