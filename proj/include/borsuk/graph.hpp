#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "borsuk/bitset.hpp"

namespace borsuk {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// Symmetric and irreflexive by construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, const std::vector<Edge>& edges);
  /// From adjacency rows; throws PreconditionError unless symmetric and
  /// irreflexive.
  explicit Graph(std::vector<Bitset> rows);

  std::size_t order() const { return adj_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const Bitset& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }
  std::size_t edge_count() const;
  /// Sorted (u < v) edge list.
  std::vector<Edge> edges() const;
  Graph complement() const;
  /// Induced subgraph on `vertices` (relabelled 0..k-1 in the given order).
  Graph induced(const std::vector<std::size_t>& vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<Bitset> adj_;
};

/// Degeneracy (max over the min-degree elimination order of the removed
/// vertex's residual degree).
std::size_t degeneracy(const Graph& g);

}  // namespace borsuk
