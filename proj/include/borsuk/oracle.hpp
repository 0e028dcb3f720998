#pragma once

// Brute-force reference computations. They share no code with the solvers
// and constructions they check.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "borsuk/cocycle.hpp"
#include "borsuk/graph.hpp"

namespace borsuk::oracle {

/// Exhaustive over all subsets (n <= 20).
std::size_t independence_number(const Graph& g);
std::size_t clique_number(const Graph& g);
/// Subset dynamic programming over independent sets (n <= 16).
std::size_t chromatic_number(const Graph& g);

/// Per-k-set parity count over every edge of H.
std::vector<std::uint64_t> coboundary(int n, int k, const std::vector<std::uint64_t>& h_edges);

/// Direct quadruple enumeration of the DCKW hypergraph.
std::vector<std::uint64_t> dckw_edges(const PmMatrix& m);

/// Max cocycle edge count over all subsets of k-sets (C(n,k) <= 24).
std::size_t max_cocycle_edges(int n, int k);
/// Max K^k_{k+1}-free edge count over all subsets of k-sets (C(n,k) <= 24).
std::size_t turan_number(int n, int k);

}  // namespace borsuk::oracle
