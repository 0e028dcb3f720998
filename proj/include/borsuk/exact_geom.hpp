#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "borsuk/graph.hpp"
#include "borsuk/rational.hpp"

namespace borsuk {

/// Finite point set in Q^d. Points are pairwise distinct and keep their
/// index identity.
class PointSet {
 public:
  PointSet() = default;
  /// Throws PreconditionError if dim == 0, a point has the wrong arity, or
  /// two points coincide.
  PointSet(std::size_t dim, std::vector<RationalVector> points, std::string label = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const RationalVector& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<RationalVector>& points() const { return points_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

 private:
  std::size_t dim_ = 0;
  std::vector<RationalVector> points_;
  std::string label_;
};

struct DiameterResult {
  Rational squared;
  std::vector<Edge> pairs;  // lexicographically sorted
};

/// Exact squared diameter and every pair attaining it. Needs >= 2 points.
DiameterResult diameter(const PointSet& ps);

Graph diameter_graph(const PointSet& ps);
/// Pairs at squared distance exactly r2 (r2 > 0).
Graph unit_distance_graph(const PointSet& ps, const Rational& r2);
/// Pairs attaining the minimum squared distance. Needs >= 2 points.
Graph kissing_graph(const PointSet& ps);

struct FaceCounts {
  /// counts[r] = number of r-dimensional faces ((r+1)-cliques). Length is
  /// max(dim + 1, clique number).
  std::vector<std::size_t> counts;
  /// Some face has dimension above the point set's dimension.
  bool anomalous = false;
};

/// Face numbers of the clique complex of a diameter or unit-distance graph
/// of `ps`. Throws PreconditionError when the edges of `g` do not share one
/// squared length.
FaceCounts face_counts(const PointSet& ps, const Graph& g);

/// (small, large) squared distances if exactly two distinct values occur.
std::optional<std::pair<Rational, Rational>> two_distance_check(const PointSet& ps);

struct Disc {
  RationalVector center;
  Rational radius;
};

/// Edge iff the discs are externally or internally tangent.
Graph disc_tangency_graph(std::span<const Disc> discs);

/// Dimension of the affine hull (exact rank of p_i - p_0).
std::size_t affine_dimension(const PointSet& ps);

/// Exact rank of a dense rational matrix given by rows.
std::size_t rational_rank(std::vector<RationalVector> rows);

/// For a set with affine dimension <= 2: whether every two diameter
/// segments share an endpoint or cross. Returns the first offending pair of
/// pairs otherwise.
std::optional<std::pair<Edge, Edge>> diameter_segments_disjoint_pair(const PointSet& ps);

/// Closed segments [a,b] and [c,d] in a common plane meet.
bool coplanar_segments_meet(std::span<const Rational> a, std::span<const Rational> b,
                            std::span<const Rational> c, std::span<const Rational> d);

}  // namespace borsuk
