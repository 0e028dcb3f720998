#include "borsuk/corpus.hpp"
#include "borsuk/errors.hpp"
#include "borsuk/rigidity.hpp"
#include "borsuk/rng.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace borsuk;
using testutil::points;

namespace {

const PointSet& generic4() {
  static const PointSet ps = points(2, {{"0", "0"}, {"5", "1"}, {"2", "4"}, {"7", "6"}});
  return ps;
}

std::vector<RationalVector> rows_of(const RationalMatrix& m) {
  std::vector<RationalVector> rows;
  for (std::size_t r = 0; r < m.rows; ++r)
    rows.emplace_back(m.data.begin() + static_cast<std::ptrdiff_t>(r * m.cols),
                      m.data.begin() + static_cast<std::ptrdiff_t>((r + 1) * m.cols));
  return rows;
}

}  // namespace

TEST_CASE("framework validation") {
  const auto ps = testutil::unit_square();
  CHECK_THROWS_AS(Framework(ps, std::vector<Edge>{{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Framework(ps, std::vector<Edge>{{0, 1}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Framework(ps, std::vector<Edge>{{0, 4}}), PreconditionError);
  const Framework f(ps, std::vector<Edge>{{2, 1}, {0, 3}});
  CHECK(f.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
}

TEST_CASE("rigidity matrix") {
  const Framework seg(points(2, {{"0", "0"}, {"1", "0"}}), std::vector<Edge>{{0, 1}});
  const auto m = rigidity_matrix(seg);
  CHECK(m.rows == 1);
  CHECK(m.cols == 4);
  CHECK(m.data == RationalVector{-1, 0, 1, 0});

  const auto tri = corpus::regular_simplex(2);
  const Framework tf(points(2, {{"0", "0"}, {"3", "0"}, {"1", "2"}}), corpus::complete_graph(3));
  CHECK(exact_rank(rigidity_matrix(tf)) == 3);
  CHECK(exact_rank(rigidity_matrix(Framework(generic4(), corpus::complete_graph(4)))) == 5);
  CHECK(exact_rank(rigidity_matrix(Framework(tri, corpus::complete_graph(3)))) == 3);
}

TEST_CASE("exact rank matches independent rational elimination") {
  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    RationalMatrix m;
    m.rows = static_cast<std::size_t>(rng.uniform_int(1, 7));
    m.cols = static_cast<std::size_t>(rng.uniform_int(1, 7));
    // Low-rank products mixed with sparse random entries.
    for (std::size_t i = 0; i < m.rows * m.cols; ++i)
      m.data.emplace_back(rng.bernoulli(0.4) ? 0 : rng.uniform_int(-3, 3),
                          static_cast<unsigned long>(rng.uniform_int(1, 5)));
    for (auto& q : m.data) q.canonicalize();
    if (m.rows > 2 && rng.coin())
      for (std::size_t c = 0; c < m.cols; ++c) m(m.rows - 1, c) = m(0, c) * Rational(2, 3) - m(1, c);
    CHECK(exact_rank(m) == rational_rank(rows_of(m)));
  }
}

TEST_CASE("stress reports") {
  const Framework tri(points(2, {{"0", "0"}, {"3", "0"}, {"1", "2"}}), corpus::complete_graph(3));
  const auto t = stress_report(tri);
  CHECK(t.stress_free);
  CHECK(t.rank == 3);
  CHECK(t.spanning);

  const auto k4 = stress_report(Framework(generic4(), corpus::complete_graph(4)));
  CHECK(k4.stress_dim == 1);
  CHECK_FALSE(k4.stress_free);

  const auto c4 = stress_report(Framework(generic4(), corpus::cycle_graph(4)));
  CHECK(c4.stress_free);
  CHECK(c4.rank == 4);

  // Collinear triangle carries a stress.
  const auto flat = stress_report(Framework(points(2, {{"0", "0"}, {"1", "0"}, {"3", "0"}}), corpus::complete_graph(3)));
  CHECK(flat.stress_dim == 1);
  CHECK_FALSE(flat.spanning);

  CHECK(stress_free_edge_bound(2, 4) == 5);
  CHECK(stress_free_edge_bound(3, 4) == 6);
}

TEST_CASE("stress dimension invariant under translation and scaling") {
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(3, 8));
    const auto ps = corpus::random_lattice_set(rng, 2, n, 3, 2);
    const Graph g = corpus::random_graph(rng, n, 0.6);
    const auto base = stress_report(Framework(ps, g));
    std::vector<RationalVector> moved;
    const Rational s(static_cast<long>(rng.uniform_int(1, 7)), 3);
    for (const auto& p : ps.points()) moved.push_back({p[0] * s + 5, p[1] * s - Rational(1, 2)});
    const auto other = stress_report(Framework(PointSet(2, moved), g));
    CHECK(other.rank == base.rank);
    CHECK(other.stress_dim == base.stress_dim);
    CHECK(base.stress_dim == base.edge_count - base.rank);
    CHECK(base.stress_free == (base.stress_dim == 0));
  }
}

TEST_CASE("conjecture harness") {
  // A regular simplex needs d+1 >= n points in its own space, so the
  // tetrahedron is the rational case.
  const auto tet = conjecture_harness(corpus::regular_tetrahedron());
  CHECK(tet.stress.stress_free);
  CHECK(tet.stress.spanning);
  REQUIRE(tet.chromatic.has_value());
  CHECK(tet.chromatic->value == 4);
  CHECK(tet.colorable);
  CHECK_FALSE(tet.violation);
  CHECK(tet.edge_bound_ok);
  CHECK_THROWS_AS(conjecture_harness(corpus::regular_simplex(3)), PreconditionError);
  const auto tri = conjecture_harness(points(2, {{"0", "0"}, {"2", "0"}, {"1", "1"}}));
  CHECK(tri.stress.stress_free);

  const auto hept = conjecture_harness(corpus::hexagonal_odd_polygon(7));
  CHECK(hept.stress.stress_free);
  REQUIRE(hept.chromatic.has_value());
  CHECK(hept.chromatic->value == 3);
  CHECK(hept.colorable);
  CHECK_FALSE(hept.violation);

  CHECK_THROWS_AS(conjecture_harness(points(3, {{"0", "0", "0"}, {"1", "0", "0"}})), PreconditionError);

  Rng rng(500);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(3, 10));
    const auto ps = corpus::random_lattice_set(rng, 2, n, 3, 2);
    const auto r = conjecture_harness(ps);
    CHECK_FALSE(r.violation);
    CHECK(r.edge_bound_ok);
    CHECK(r.diameter_edges <= n);
    if (r.stress.stress_free && r.stress.spanning)
      CHECK(static_cast<std::int64_t>(r.diameter_edges) <= stress_free_edge_bound(2, n));
  }
}
