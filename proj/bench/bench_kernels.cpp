// Serial reference vs OpenMP kernels. Arg(0) selects the serial version,
// Arg(t > 0) the parallel one with t threads.

#include <benchmark/benchmark.h>

#include "borsuk/cocycle.hpp"
#include "borsuk/corpus.hpp"
#include "borsuk/kernels.hpp"
#include "borsuk/parallel.hpp"
#include "borsuk/rng.hpp"

using namespace borsuk;

namespace {

template <class Serial, class Parallel>
void run(benchmark::State& state, Serial serial, Parallel parallel) {
  const int threads = static_cast<int>(state.range(0));
  ThreadScope scope(threads);
  for (auto _ : state) {
    if (threads == 0)
      benchmark::DoNotOptimize(serial());
    else
      benchmark::DoNotOptimize(parallel());
  }
  state.SetLabel(threads == 0 ? "serial" : "parallel");
}

void thread_args(benchmark::internal::Benchmark* b) {
  b->Arg(0);
  for (int t = 1; t <= max_threads(); t *= 2) b->Arg(t);
  b->Unit(benchmark::kMillisecond);
}

void BM_PairwiseDistances(benchmark::State& state) {
  Rng rng(1);
  const auto ps = corpus::random_lattice_set(rng, 6, 300, 20, 7);
  run(state, [&] { return kernels::pairwise_squared_distances_serial(ps); },
      [&] { return kernels::pairwise_squared_distances_parallel(ps); });
}
BENCHMARK(BM_PairwiseDistances)->Apply(thread_args);

void BM_CliqueCounts(benchmark::State& state) {
  Rng rng(2);
  const Graph g = corpus::random_graph(rng, 120, 0.5);
  run(state, [&] { return kernels::clique_counts_serial(g); }, [&] { return kernels::clique_counts_parallel(g); });
}
BENCHMARK(BM_CliqueCounts)->Apply(thread_args);

void BM_OrthogonalityGraph(benchmark::State& state) {
  const auto vs = all_sign_vectors(12);
  run(state, [&] { return kernels::orthogonality_graph_serial(vs); },
      [&] { return kernels::orthogonality_graph_parallel(vs); });
}
BENCHMARK(BM_OrthogonalityGraph)->Apply(thread_args);

void BM_PairCount(benchmark::State& state) {
  const auto f = all_k_subsets(14, 4), g = all_k_subsets(14, 5);
  run(state, [&] { return kernels::pair_count_serial(f, g, 2, std::nullopt); },
      [&] { return kernels::pair_count_parallel(f, g, 2, std::nullopt); });
}
BENCHMARK(BM_PairCount)->Apply(thread_args);

void BM_SpanMaximum(benchmark::State& state) {
  const auto basis = cocycle_space_basis(7, 4);
  const std::uint64_t all = std::uint64_t{1} << 30;
  run(state, [&] { return kernels::span_maximum_serial(basis, all); },
      [&] { return kernels::span_maximum_parallel(basis, all); });
}
BENCHMARK(BM_SpanMaximum)->Apply(thread_args);

void BM_TensorLaw(benchmark::State& state) {
  run(state, [] { return kernels::tensor_law_violations_serial(8, 2); },
      [] { return kernels::tensor_law_violations_parallel(8, 2); });
}
BENCHMARK(BM_TensorLaw)->Apply(thread_args);

}  // namespace

BENCHMARK_MAIN();
