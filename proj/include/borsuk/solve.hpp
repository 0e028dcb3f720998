#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "borsuk/exact_geom.hpp"
#include "borsuk/graph.hpp"

namespace borsuk {

/// Result of an exact solver. `value` is the best solution found; with
/// optimal == false it is still a valid bound in the natural direction
/// (upper for χ, lower for α and ω), and [lower, upper] brackets the truth.
struct SolveResult {
  std::int64_t value = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  /// Coloring (color per vertex) for χ; sorted vertex set for α and ω.
  std::vector<std::size_t> witness;
  bool optimal = false;
  std::uint64_t nodes = 0;
  double wall_seconds = 0;
};

using NodeLimit = std::optional<std::uint64_t>;

SolveResult chromatic_number(const Graph& g, NodeLimit node_limit = {});
SolveResult max_independent_set(const Graph& g, NodeLimit node_limit = {});
SolveResult max_clique(const Graph& g, NodeLimit node_limit = {});

/// max(ω_lower, ⌈n/α_upper⌉): never exceeds χ(g).
std::int64_t partition_lower_bound(const Graph& g, NodeLimit node_limit = {});

/// χ(diameter graph): the least number of parts of smaller diameter.
SolveResult borsuk_number(const PointSet& ps, NodeLimit node_limit = {});

bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& colors);
bool is_clique(const Graph& g, const std::vector<std::size_t>& vertices);
bool is_independent_set(const Graph& g, const std::vector<std::size_t>& vertices);

/// Greedy DSATUR coloring (upper bound).
std::vector<std::size_t> dsatur_coloring(const Graph& g);

}  // namespace borsuk
