#include "borsuk/exact_geom.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "borsuk/errors.hpp"
#include "borsuk/kernels.hpp"

namespace borsuk {

namespace {

bool coords_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void require_two(const PointSet& ps, const char* what) {
  if (ps.size() < 2)
    throw PreconditionError(std::string(what) + ": needs at least 2 points, got " +
                            std::to_string(ps.size()));
}

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

template <class Pred>
Graph graph_from_distances(const PointSet& ps, const std::vector<Rational>& d2, Pred keep) {
  const std::size_t n = ps.size();
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if (keep(d2[k])) g.add_edge(i, j);
  return g;
}

int sign(const Rational& q) { return sgn(q); }

Rational orient2(const Rational* a, const Rational* b, const Rational* c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

bool on_segment2(const Rational* a, const Rational* b, const Rational* p) {
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

bool segments_meet_2d(const Rational* a, const Rational* b, const Rational* c, const Rational* d) {
  const int o1 = sign(orient2(a, b, c));
  const int o2 = sign(orient2(a, b, d));
  const int o3 = sign(orient2(c, d, a));
  const int o4 = sign(orient2(c, d, b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment2(a, b, c)) return true;
  if (o2 == 0 && on_segment2(a, b, d)) return true;
  if (o3 == 0 && on_segment2(c, d, a)) return true;
  if (o4 == 0 && on_segment2(c, d, b)) return true;
  return false;
}

}  // namespace

PointSet::PointSet(std::size_t dim, std::vector<RationalVector> points, std::string label)
    : dim_(dim), points_(std::move(points)), label_(std::move(label)) {
  if (dim_ == 0) throw PreconditionError("point set dimension must be positive");
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].size() != dim_)
      throw PreconditionError("point " + std::to_string(i) + " has " +
                              std::to_string(points_[i].size()) + " coordinates, expected " +
                              std::to_string(dim_));
  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return coords_less(points_[a], points_[b]);
  });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (points_[order[i - 1]] == points_[order[i]])
      throw PreconditionError("duplicate points " + std::to_string(std::min(order[i - 1], order[i])) +
                              " and " + std::to_string(std::max(order[i - 1], order[i])));
}

DiameterResult diameter(const PointSet& ps) {
  require_two(ps, "diameter");
  const auto d2 = kernels::pairwise_squared_distances_parallel(ps);
  DiameterResult result;
  result.squared = *std::max_element(d2.begin(), d2.end());
  const std::size_t n = ps.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d2[pair_index(n, i, j)] == result.squared) result.pairs.emplace_back(i, j);
  return result;
}

Graph diameter_graph(const PointSet& ps) {
  require_two(ps, "diameter_graph");
  const auto d2 = kernels::pairwise_squared_distances_parallel(ps);
  const Rational top = *std::max_element(d2.begin(), d2.end());
  return graph_from_distances(ps, d2, [&](const Rational& q) { return q == top; });
}

Graph unit_distance_graph(const PointSet& ps, const Rational& r2) {
  if (sgn(r2) <= 0) throw PreconditionError("unit_distance_graph: r2 must be positive");
  if (ps.size() < 2) return Graph(ps.size());
  const auto d2 = kernels::pairwise_squared_distances_parallel(ps);
  return graph_from_distances(ps, d2, [&](const Rational& q) { return q == r2; });
}

Graph kissing_graph(const PointSet& ps) {
  require_two(ps, "kissing_graph");
  const auto d2 = kernels::pairwise_squared_distances_parallel(ps);
  const Rational low = *std::min_element(d2.begin(), d2.end());
  return graph_from_distances(ps, d2, [&](const Rational& q) { return q == low; });
}

FaceCounts face_counts(const PointSet& ps, const Graph& g) {
  if (g.order() != ps.size())
    throw PreconditionError("face_counts: graph has " + std::to_string(g.order()) +
                            " vertices, point set has " + std::to_string(ps.size()));
  const auto edges = g.edges();
  if (!edges.empty()) {
    const Rational len = squared_distance(ps[edges.front().first], ps[edges.front().second]);
    for (const auto& [u, v] : edges)
      if (squared_distance(ps[u], ps[v]) != len)
        throw PreconditionError("face_counts: mixed edge lengths (edge " + std::to_string(u) + "-" +
                                std::to_string(v) + ")");
  }
  FaceCounts fc;
  fc.counts = kernels::clique_counts_parallel(g);
  if (fc.counts.size() < ps.dim() + 1) fc.counts.resize(ps.dim() + 1, 0);
  for (std::size_t r = ps.dim() + 1; r < fc.counts.size(); ++r)
    if (fc.counts[r] > 0) fc.anomalous = true;
  return fc;
}

std::optional<std::pair<Rational, Rational>> two_distance_check(const PointSet& ps) {
  require_two(ps, "two_distance_check");
  const auto d2 = kernels::pairwise_squared_distances_parallel(ps);
  std::optional<Rational> a, b;
  for (const auto& q : d2) {
    if (!a || q == *a) {
      a = q;
    } else if (!b || q == *b) {
      b = q;
    } else {
      return std::nullopt;
    }
  }
  if (!b) return std::nullopt;
  if (*a > *b) std::swap(a, b);
  return std::make_pair(*a, *b);
}

Graph disc_tangency_graph(std::span<const Disc> discs) {
  const std::size_t n = discs.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(discs[i].radius) <= 0)
      throw PreconditionError("disc " + std::to_string(i) + " has non-positive radius");
    if (discs[i].center.size() != discs[0].center.size())
      throw PreconditionError("disc " + std::to_string(i) + " has mismatched dimension");
  }
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational d2 = squared_distance(discs[i].center, discs[j].center);
      if (sgn(d2) == 0 && discs[i].radius == discs[j].radius)
        throw PreconditionError("coincident discs " + std::to_string(i) + " and " +
                                std::to_string(j));
      const Rational outer = discs[i].radius + discs[j].radius;
      const Rational inner = discs[i].radius - discs[j].radius;
      if (d2 == outer * outer || d2 == inner * inner) g.add_edge(i, j);
    }
  return g;
}

std::size_t rational_rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t affine_dimension(const PointSet& ps) {
  if (ps.size() < 2) return 0;
  std::vector<RationalVector> rows;
  rows.reserve(ps.size() - 1);
  for (std::size_t i = 1; i < ps.size(); ++i) {
    RationalVector r(ps.dim());
    for (std::size_t c = 0; c < ps.dim(); ++c) r[c] = ps[i][c] - ps[0][c];
    rows.push_back(std::move(r));
  }
  return rational_rank(std::move(rows));
}

bool coplanar_segments_meet(std::span<const Rational> a, std::span<const Rational> b,
                            std::span<const Rational> c, std::span<const Rational> d) {
  const std::size_t m = a.size();
  if (b.size() != m || c.size() != m || d.size() != m)
    throw PreconditionError("coplanar_segments_meet: dimension mismatch");
  std::vector<RationalVector> dirs(3, RationalVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    dirs[0][i] = b[i] - a[i];
    dirs[1][i] = c[i] - a[i];
    dirs[2][i] = d[i] - a[i];
  }
  const std::size_t rank = rational_rank(dirs);
  if (rank > 2) throw PreconditionError("coplanar_segments_meet: segments are not coplanar");

  // A coordinate projection that is injective on the common flat preserves
  // incidence, so the test reduces to the plane or the line.
  if (rank == 2) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        std::vector<RationalVector> proj(3, RationalVector(2));
        for (int r = 0; r < 3; ++r) {
          proj[r][0] = dirs[r][i];
          proj[r][1] = dirs[r][j];
        }
        if (rational_rank(proj) < 2) continue;
        const Rational pa[2] = {a[i], a[j]}, pb[2] = {b[i], b[j]}, pc[2] = {c[i], c[j]},
                       pd[2] = {d[i], d[j]};
        return segments_meet_2d(pa, pb, pc, pd);
      }
  }
  std::size_t axis = 0;
  while (axis < m && sgn(dirs[0][axis]) == 0 && sgn(dirs[1][axis]) == 0 && sgn(dirs[2][axis]) == 0)
    ++axis;
  if (axis == m) return true;  // all four points coincide
  const auto lo1 = std::min(a[axis], b[axis]), hi1 = std::max(a[axis], b[axis]);
  const auto lo2 = std::min(c[axis], d[axis]), hi2 = std::max(c[axis], d[axis]);
  return !(hi1 < lo2 || hi2 < lo1);
}

std::optional<std::pair<Edge, Edge>> diameter_segments_disjoint_pair(const PointSet& ps) {
  if (affine_dimension(ps) > 2)
    throw PreconditionError("diameter_segments_disjoint_pair: point set is not planar");
  const auto pairs = diameter(ps).pairs;
  for (std::size_t x = 0; x < pairs.size(); ++x)
    for (std::size_t y = x + 1; y < pairs.size(); ++y) {
      const auto [a, b] = pairs[x];
      const auto [c, d] = pairs[y];
      if (a == c || a == d || b == c || b == d) continue;
      if (!coplanar_segments_meet(ps[a], ps[b], ps[c], ps[d])) return std::make_pair(pairs[x], pairs[y]);
    }
  return std::nullopt;
}

}  // namespace borsuk
