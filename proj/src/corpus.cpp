#include "borsuk/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <string>

#include "borsuk/errors.hpp"

namespace borsuk::corpus {

namespace {

using Eisenstein = std::pair<std::int64_t, std::int64_t>;  // a + bω, norm a² − ab + b²

constexpr std::int64_t kPolygonNorm = 53599;

double angle(const Eisenstein& z) {
  return std::atan2(static_cast<double>(z.second) * std::sqrt(3.0) / 2.0,
                    static_cast<double>(z.first) - static_cast<double>(z.second) / 2.0);
}

double angle_gap(double a, double b) {
  double d = std::fmod(a - b, 2 * std::numbers::pi);
  if (d > std::numbers::pi) d -= 2 * std::numbers::pi;
  if (d <= -std::numbers::pi) d += 2 * std::numbers::pi;
  return std::abs(d);
}

// Points z ↦ (a, b − a, −b) of the plane x+y+z = 0; squared length 2·norm.
RationalVector lift(const Eisenstein& z) {
  return {Rational(z.first), Rational(z.second - z.first), Rational(-z.second)};
}

bool is_star_polygon(const std::vector<Eisenstein>& vertices) {
  std::int64_t best = -1;
  std::size_t attained = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const std::int64_t a = vertices[i].first - vertices[j].first;
      const std::int64_t b = vertices[i].second - vertices[j].second;
      const std::int64_t q = a * a - a * b + b * b;
      if (q > best) {
        best = q;
        attained = 0;
      }
      attained += q == best;
    }
  return attained == vertices.size();
}

// Closed walk of n equal Eisenstein steps turning by about π − π/n each
// time, so consecutive steps are the diagonals of a star n-gon.
std::optional<std::vector<Eisenstein>> search_polygon(std::size_t n) {
  const auto bound = static_cast<std::int64_t>(2 * std::sqrt(static_cast<double>(kPolygonNorm))) + 2;
  std::vector<Eisenstein> reps;
  std::set<Eisenstein> rep_set;
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b)
      if (a * a - a * b + b * b == kPolygonNorm) {
        reps.push_back({a, b});
        rep_set.insert({a, b});
      }
  const Eisenstein z0 = *std::max_element(reps.begin(), reps.end());
  const double turn = std::numbers::pi - std::numbers::pi / static_cast<double>(n);
  const double t0 = angle(z0);
  auto pool = [&](std::size_t j) {
    std::vector<Eisenstein> out;
    for (const auto& z : reps)
      if (angle_gap(angle(z), t0 + static_cast<double>(j) * turn) < 0.15) out.push_back(z);
    return out;
  };
  std::vector<std::vector<Eisenstein>> pools;
  for (std::size_t j = 1; j + 2 < n; ++j) pools.push_back(pool(j));
  const auto closing = pool(n - 2);
  for (const auto& p : pools)
    if (p.empty()) return std::nullopt;

  std::vector<std::size_t> pick(pools.size(), 0);
  while (true) {
    std::vector<Eisenstein> steps{z0};
    for (std::size_t i = 0; i < pools.size(); ++i) steps.push_back(pools[i][pick[i]]);
    Eisenstein sum{0, 0};
    for (const auto& s : steps) sum = {sum.first + s.first, sum.second + s.second};
    for (const auto& z3 : closing) {
      const Eisenstein z4{-sum.first - z3.first, -sum.second - z3.second};
      if (!rep_set.count(z4)) continue;
      std::vector<Eisenstein> vertices{{0, 0}};
      Eisenstein at{0, 0};
      auto walk = steps;
      walk.push_back(z3);
      for (const auto& s : walk) {
        at = {at.first + s.first, at.second + s.second};
        vertices.push_back(at);
      }
      if (vertices.size() == n && is_star_polygon(vertices)) return vertices;
    }
    // Odometer over the pools, last pool fastest.
    std::size_t i = pools.size();
    while (i > 0 && ++pick[i - 1] == pools[i - 1].size()) pick[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

}  // namespace

PointSet random_lattice_set(Rng& rng, std::size_t dim, std::size_t n, int range, int max_den) {
  if (dim == 0 || range < 0 || max_den < 1)
    throw PreconditionError("random_lattice_set: bad parameters");
  const double cells = std::pow(2.0 * range + 1, static_cast<double>(dim));
  if (static_cast<double>(n) > cells)
    throw PreconditionError("random_lattice_set: more points than lattice cells");
  const auto den = rng.uniform_int(1, max_den);
  std::set<std::vector<std::int64_t>> seen;
  std::vector<RationalVector> pts;
  while (pts.size() < n) {
    std::vector<std::int64_t> c(dim);
    for (auto& x : c) x = rng.uniform_int(-range, range);
    if (!seen.insert(c).second) continue;
    RationalVector p;
    for (auto x : c) {
      Rational q(x, den);
      q.canonicalize();
      p.push_back(q);
    }
    pts.push_back(std::move(p));
  }
  return PointSet(dim, std::move(pts), "random lattice set");
}

PointSet regular_simplex(std::size_t d) {
  if (d == 0) throw PreconditionError("regular_simplex: d must be positive");
  std::vector<RationalVector> pts(d + 1, RationalVector(d + 1, Rational(0)));
  for (std::size_t i = 0; i <= d; ++i) pts[i][i] = 1;
  return PointSet(d + 1, std::move(pts), "regular " + std::to_string(d) + "-simplex");
}

PointSet regular_tetrahedron() {
  return PointSet(3, {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, "regular tetrahedron");
}

PointSet unit_square() { return PointSet(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, "unit square"); }

PointSet cube(std::size_t d) {
  if (d == 0 || d > 16) throw PreconditionError("cube: d must be in 1..16");
  std::vector<RationalVector> pts;
  for (std::size_t m = 0; m < (std::size_t{1} << d); ++m) {
    RationalVector p(d);
    for (std::size_t k = 0; k < d; ++k) p[k] = static_cast<long>((m >> k) & 1u);
    pts.push_back(std::move(p));
  }
  return PointSet(d, std::move(pts), "cube {0,1}^" + std::to_string(d));
}

PointSet hexagonal_patch() {
  return PointSet(3,
                  {{0, 0, 0},
                   {1, -1, 0},
                   {-1, 1, 0},
                   {0, 1, -1},
                   {0, -1, 1},
                   {1, 0, -1},
                   {-1, 0, 1}},
                  "hexagonal patch");
}

PointSet hexagonal_odd_polygon(std::size_t n) {
  if (n != 3 && n != 7 && n != 9 && n != 11)
    throw PreconditionError("hexagonal_odd_polygon: available for n in {3, 7, 9, 11}");
  const auto vertices = search_polygon(n);
  if (!vertices) throw Error("hexagonal_odd_polygon: search failed for n=" + std::to_string(n));
  std::vector<RationalVector> pts;
  for (const auto& z : *vertices) pts.push_back(lift(z));
  return PointSet(3, std::move(pts), "equal-diagonal " + std::to_string(n) + "-gon");
}

Graph random_graph(Rng& rng, std::size_t n, double p) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle_graph: n must be >= 3");
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

PmMatrix random_pm_matrix(Rng& rng, int m) {
  std::vector<int> e(static_cast<std::size_t>(m) * m);
  for (auto& x : e) x = rng.coin() ? -1 : 1;
  return PmMatrix(m, std::move(e));
}

PmMatrix all_ones_matrix(int m) { return PmMatrix(m, std::vector<int>(static_cast<std::size_t>(m) * m, 1)); }

UniformHypergraph random_hypergraph(Rng& rng, int n, int k, double p) {
  std::vector<std::uint64_t> edges;
  for (auto e : k_subset_masks(n, k))
    if (rng.bernoulli(p)) edges.push_back(e);
  return UniformHypergraph(n, k, std::move(edges));
}

}  // namespace borsuk::corpus
