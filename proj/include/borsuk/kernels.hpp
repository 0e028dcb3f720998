#pragma once

// Data-parallel kernels. Each comes as an OpenMP version used by the
// library and a serial reference kept for tests and benchmarks; both return
// identical results for every thread count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "borsuk/bitset.hpp"
#include "borsuk/exact_geom.hpp"
#include "borsuk/families.hpp"
#include "borsuk/graph.hpp"

namespace borsuk::kernels {

/// Upper triangle of the squared distance matrix, pairs (i<j) in row-major
/// order: index of (i,j) is i·n − i(i+1)/2 + (j − i − 1).
std::vector<Rational> pairwise_squared_distances_serial(const PointSet& ps);
std::vector<Rational> pairwise_squared_distances_parallel(const PointSet& ps);

/// counts[r] = number of (r+1)-cliques.
std::vector<std::size_t> clique_counts_serial(const Graph& g);
std::vector<std::size_t> clique_counts_parallel(const Graph& g);

Graph orthogonality_graph_serial(std::span<const SignVector> vs);
Graph orthogonality_graph_parallel(std::span<const SignVector> vs);

std::uint64_t pair_count_serial(const SetFamily& f, const SetFamily& g, int inter_size,
                                std::optional<int> sum_target);
std::uint64_t pair_count_parallel(const SetFamily& f, const SetFamily& g, int inter_size,
                                  std::optional<int> sum_target);

struct SpanMaximum {
  std::size_t best_weight = 0;
  Bitset best;  // lexicographically smallest among the heaviest
  std::uint64_t enumerated = 0;
};

/// Heaviest vector of the GF(2) span of `basis`, enumerating the first
/// `limit` Gray-code codewords (all of them when limit >= 2^dim).
SpanMaximum span_maximum_serial(const std::vector<Bitset>& basis, std::uint64_t limit);
SpanMaximum span_maximum_parallel(const std::vector<Bitset>& basis, std::uint64_t limit);

/// Number of sign-vector pairs (x, y) of length n for which the
/// coordinate-wise squared distance of the tensor k-th powers differs from
/// 2n^k − 2⟨x,y⟩^k.
std::uint64_t tensor_law_violations_serial(int n, int k);
std::uint64_t tensor_law_violations_parallel(int n, int k);

}  // namespace borsuk::kernels
