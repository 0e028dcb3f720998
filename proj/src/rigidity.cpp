#include "borsuk/rigidity.hpp"

#include <algorithm>
#include <string>

#include "borsuk/errors.hpp"

namespace borsuk {

Framework::Framework(PointSet ps, std::vector<Edge> edges) : ps_(std::move(ps)) {
  for (auto& [u, v] : edges) {
    if (u == v) throw PreconditionError("framework: loop at vertex " + std::to_string(u));
    if (u >= ps_.size() || v >= ps_.size())
      throw PreconditionError("framework: edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw PreconditionError("framework: duplicate edge");
  edges_ = std::move(edges);
}

RationalMatrix rigidity_matrix(const Framework& f) {
  const auto& ps = f.points();
  const std::size_t d = ps.dim();
  RationalMatrix m;
  m.rows = f.edges().size();
  m.cols = d * ps.size();
  m.data.assign(m.rows * m.cols, Rational(0));
  for (std::size_t r = 0; r < m.rows; ++r) {
    const auto [u, v] = f.edges()[r];
    for (std::size_t k = 0; k < d; ++k) {
      const Rational diff = ps[u][k] - ps[v][k];
      m(r, u * d + k) = diff;
      m(r, v * d + k) = -diff;
    }
  }
  return m;
}

std::size_t exact_rank(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> a(m.rows, std::vector<Integer>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < m.cols; ++c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                                                    m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols; ++c) a[r][c] = m(r, c).get_num() * (scale / m(r, c).get_den());
  }
  // Bareiss: every intermediate entry is a minor, so the division is exact.
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      for (std::size_t j = col + 1; j < m.cols; ++j) {
        a[i][j] = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

StressReport stress_report(const Framework& f) {
  StressReport s;
  s.edge_count = f.edges().size();
  s.rank = exact_rank(rigidity_matrix(f));
  s.stress_dim = s.edge_count - s.rank;
  s.stress_free = s.stress_dim == 0;
  s.affine_dim = f.points().size() ? affine_dimension(f.points()) : 0;
  s.spanning = s.affine_dim == f.points().dim();
  return s;
}

std::int64_t stress_free_edge_bound(std::size_t d, std::size_t n) {
  const auto dd = static_cast<std::int64_t>(d);
  return dd * static_cast<std::int64_t>(n) - dd * (dd + 1) / 2;
}

ConjectureReport conjecture_harness(const PointSet& ps, NodeLimit node_limit) {
  if (ps.size() < ps.dim() + 1)
    throw PreconditionError("conjecture_harness: need at least d+1 points");
  ConjectureReport r;
  r.n = ps.size();
  r.dim = ps.dim();
  const Graph g = diameter_graph(ps);
  r.diameter_edges = g.edge_count();
  r.stress = stress_report(Framework(ps, g));
  r.affine_dim = r.stress.affine_dim;
  r.degeneracy = degeneracy(g);
  if (!r.stress.stress_free) return r;

  const auto d = static_cast<std::int64_t>(r.dim);
  r.chromatic = chromatic_number(g, node_limit);
  r.colorable = r.chromatic->upper <= d + 1;
  r.violation = r.chromatic->lower > d + 1;
  if (r.stress.spanning) {
    r.edge_bound_ok =
        static_cast<std::int64_t>(r.diameter_edges) <= stress_free_edge_bound(r.dim, r.n);
    if (static_cast<std::int64_t>(r.degeneracy) <= 2 * d - 2)
      r.chi_le_2d_minus_1 = r.chromatic->upper <= 2 * d - 1;
  }
  return r;
}

}  // namespace borsuk
