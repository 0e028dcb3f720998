#include "borsuk/cocycle.hpp"
#include "borsuk/corpus.hpp"
#include "borsuk/kernels.hpp"
#include "borsuk/parallel.hpp"
#include "borsuk/rng.hpp"
#include "doctest.h"

using namespace borsuk;

namespace {

const int kThreadCounts[] = {1, 2, 3, 8};

bool same(const kernels::SpanMaximum& a, const kernels::SpanMaximum& b) {
  return a.best_weight == b.best_weight && a.best == b.best && a.enumerated == b.enumerated;
}

}  // namespace

TEST_CASE("pairwise distances: serial and parallel agree") {
  Rng rng(1);
  const auto ps = corpus::random_lattice_set(rng, 4, 60, 5, 3);
  const auto ref = kernels::pairwise_squared_distances_serial(ps);
  CHECK(ref.size() == 60 * 59 / 2);
  CHECK(ref[0] == squared_distance(ps[0], ps[1]));
  CHECK(ref[59] == squared_distance(ps[1], ps[2]));
  for (int t : kThreadCounts) {
    ThreadScope scope(t);
    CHECK(kernels::pairwise_squared_distances_parallel(ps) == ref);
  }
}

TEST_CASE("clique counts: serial and parallel agree") {
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = corpus::random_graph(rng, 40, 0.4);
    const auto ref = kernels::clique_counts_serial(g);
    CHECK(ref[0] == 40);
    CHECK(ref[1] == g.edge_count());
    for (int t : kThreadCounts) {
      ThreadScope scope(t);
      CHECK(kernels::clique_counts_parallel(g) == ref);
    }
  }
}

TEST_CASE("orthogonality graph: serial and parallel agree") {
  const auto vs = all_sign_vectors(8);
  const Graph ref = kernels::orthogonality_graph_serial(vs);
  CHECK(ref.edge_count() == 256 * 70 / 2);
  for (int t : kThreadCounts) {
    ThreadScope scope(t);
    CHECK(kernels::orthogonality_graph_parallel(vs) == ref);
  }
}

TEST_CASE("pair count: serial and parallel agree") {
  const auto f = all_k_subsets(9, 3), g = all_k_subsets(9, 4);
  for (int s = 0; s <= 3; ++s)
    for (std::optional<int> target : {std::optional<int>{}, std::optional<int>{3}}) {
      const auto ref = kernels::pair_count_serial(f, g, s, target);
      for (int t : kThreadCounts) {
        ThreadScope scope(t);
        CHECK(kernels::pair_count_parallel(f, g, s, target) == ref);
      }
    }
}

TEST_CASE("span maximum: serial and parallel agree, full and truncated") {
  const auto basis = cocycle_space_basis(7, 4);
  for (std::uint64_t limit : {std::uint64_t{1} << 30, std::uint64_t{1000}, std::uint64_t{1}}) {
    const auto ref = kernels::span_maximum_serial(basis, limit);
    for (int t : kThreadCounts) {
      ThreadScope scope(t);
      CHECK(same(kernels::span_maximum_parallel(basis, limit), ref));
    }
  }
  CHECK(kernels::span_maximum_serial(basis, std::uint64_t{1} << 30).enumerated == (std::uint64_t{1} << 20));
}

TEST_CASE("tensor law kernel: serial and parallel agree") {
  for (int k : {2, 3}) {
    CHECK(kernels::tensor_law_violations_serial(6, k) == 0);
    for (int t : kThreadCounts) {
      ThreadScope scope(t);
      CHECK(kernels::tensor_law_violations_parallel(6, k) == 0);
    }
  }
}
