#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "borsuk/exact_geom.hpp"
#include "borsuk/solve.hpp"

namespace borsuk {

/// Points plus straight-segment edges.
class Framework {
 public:
  /// Edges are normalized to u < v and sorted; throws PreconditionError on
  /// loops, duplicates or out-of-range endpoints.
  Framework(PointSet ps, std::vector<Edge> edges);
  Framework(PointSet ps, const Graph& g) : Framework(std::move(ps), g.edges()) {}

  const PointSet& points() const { return ps_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  PointSet ps_;
  std::vector<Edge> edges_;
};

/// Dense rational matrix, row-major.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  const Rational& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

/// |E| × d·n: row of edge (u,v) has p_u − p_v in block u and p_v − p_u in
/// block v.
RationalMatrix rigidity_matrix(const Framework& f);

/// Exact rank by fraction-free (Bareiss) elimination after clearing row
/// denominators.
std::size_t exact_rank(const RationalMatrix& m);

struct StressReport {
  std::size_t edge_count = 0;
  std::size_t rank = 0;
  std::size_t stress_dim = 0;
  bool stress_free = false;
  /// Points affinely span R^d.
  bool spanning = false;
  std::size_t affine_dim = 0;
};

StressReport stress_report(const Framework& f);

/// d·n − C(d+1,2).
std::int64_t stress_free_edge_bound(std::size_t d, std::size_t n);

struct ConjectureReport {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::size_t affine_dim = 0;
  std::size_t diameter_edges = 0;
  StressReport stress;
  /// Set when the diameter graph is stress-free.
  std::optional<SolveResult> chromatic;
  /// χ ≤ d+1 (vacuously true when not stress-free).
  bool colorable = true;
  /// χ > d+1 with a complete search: a counterexample candidate.
  bool violation = false;
  /// |E| ≤ d·n − C(d+1,2) for stress-free spanning diameter graphs.
  bool edge_bound_ok = true;
  std::size_t degeneracy = 0;
  /// When stress-free, spanning and (2d−2)-degenerate: χ ≤ 2d−1 held.
  std::optional<bool> chi_le_2d_minus_1;
};

/// Diameter graph → stress test → χ for stress-free graphs. Never asserts;
/// violations are reported.
ConjectureReport conjecture_harness(const PointSet& ps, NodeLimit node_limit = {});

}  // namespace borsuk
