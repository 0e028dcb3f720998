#include <cmath>

#include "borsuk/errors.hpp"
#include "borsuk/numeric_search.hpp"
#include "borsuk/oracle.hpp"
#include "doctest.h"

using namespace borsuk;

TEST_CASE("simplex-Voronoi piece diameters, low dimensions") {
  const auto d1 = simplex_voronoi_piece_diameter(1);
  CHECK(d1.piece_diameter == 0.5);
  CHECK(d1.mesh_certified);

  const auto d2 = simplex_voronoi_piece_diameter(2);
  CHECK(std::abs(d2.piece_diameter - std::sqrt(3.0) / 2) < 1e-6);
  CHECK(d2.confidence == "certified-mesh");
  CHECK(d2.mesh_diameter <= d2.piece_diameter + 1e-9);
  CHECK(d2.piece_diameter <= d2.mesh_diameter + d2.certified_mesh_gap);
  // Homogeneity: a ball of diameter 2 doubles every distance.
  CHECK(std::abs(2 * d2.piece_diameter - std::sqrt(3.0)) < 2e-6);

  double prev = 0;
  for (int d = 1; d <= 5; ++d) {
    const auto r = simplex_voronoi_piece_diameter(d, {.restarts = 16});
    CHECK(r.piece_diameter >= prev - 1e-9);
    CHECK(r.piece_diameter < 1 - 1e-3);
    CHECK(r.piece_diameter > 0);
    CHECK(r.confidence == (d <= 3 ? "certified-mesh" : "heuristic"));
    prev = r.piece_diameter;
  }
  CHECK_THROWS_AS(simplex_voronoi_piece_diameter(0), PreconditionError);
  CHECK_THROWS_AS(simplex_voronoi_piece_diameter(9), PreconditionError);
}

TEST_CASE("piece diameter search is deterministic") {
  const auto a = simplex_voronoi_piece_diameter(4, {.restarts = 8, .seed = 3});
  const auto b = simplex_voronoi_piece_diameter(4, {.restarts = 8, .seed = 3});
  CHECK(a.piece_diameter == b.piece_diameter);
}

TEST_CASE("lower-bound reference") {
  const auto r2 = larman_tamvakis_reference(2);
  CHECK(r2.value == doctest::Approx(1 - 1.5 * std::log(2.0) / 2));
  CHECK(r2.value == doctest::Approx(0.48014).epsilon(1e-4));
  CHECK_FALSE(r2.note.empty());
  CHECK(larman_tamvakis_reference(4, LogBase::Binary).value == doctest::Approx(1 - 1.5 * 2 / 4.0));
  double prev = larman_tamvakis_reference(5).value;
  for (int d = 6; d <= 200; ++d) {
    const double v = larman_tamvakis_reference(d).value;
    CHECK(v > prev);
    CHECK(v < 1);
    prev = v;
  }
}

TEST_CASE("binary cube covers") {
  CHECK(cube_cover_number(2, 1).value == 2);
  CHECK(cube_cover_number(2, 0).value == 4);
  CHECK(cube_cover_number(3, 2).value == 2);
  for (int n = 1; n <= 5; ++n) {
    std::int64_t prev = cube_cover_number(n, 0).value;
    CHECK(prev == (std::int64_t{1} << n));
    for (int s2 = 1; s2 <= n + 1; ++s2) {
      const auto r = cube_cover_number(n, s2);
      CHECK(r.optimal);
      CHECK(r.value <= prev);
      if (s2 >= n) CHECK(r.value == 1);
      prev = r.value;
    }
  }
  // Far graph chromatic number checked against subset dynamic programming.
  for (int s2 = 0; s2 <= 4; ++s2) {
    Graph far(16);
    for (std::size_t a = 0; a < 16; ++a)
      for (std::size_t b = a + 1; b < 16; ++b)
        if (std::popcount(a ^ b) > s2) far.add_edge(a, b);
    CHECK(cube_cover_number(4, s2).value == static_cast<std::int64_t>(oracle::chromatic_number(far)));
  }
}

TEST_CASE("norms") {
  const double a[2] = {0, 0}, b[2] = {3, -4};
  CHECK(NormSpec::p(2).distance(a, b, 2) == doctest::Approx(5));
  CHECK(NormSpec::p(1).distance(a, b, 2) == doctest::Approx(7));
  CHECK(NormSpec::infinity().distance(a, b, 2) == doctest::Approx(4));
  CHECK(NormSpec::p(3).distance(a, b, 2) == doctest::Approx(std::cbrt(91.0)));
  CHECK_THROWS_AS(NormSpec::p(0.5), PreconditionError);
  CHECK(NormSpec::infinity().to_string() == "inf");
}

TEST_CASE("equilateral search") {
  for (int d = 1; d <= 4; ++d) {
    const auto c = equilateral_search(NormSpec::p(2), d, d + 1, 1);
    CHECK(c.max_deviation < 1e-8);
    CHECK(equilateral_deviation(c.points, NormSpec::p(2)) == doctest::Approx(c.max_deviation).epsilon(1e-12));
  }
  const auto sq = equilateral_search(NormSpec::infinity(), 2, 4, 1);
  CHECK(sq.max_deviation < 1e-8);
  const auto cross = equilateral_search(NormSpec::p(1), 2, 4, 7);
  CHECK(cross.max_deviation < 1e-8);
  CHECK(equilateral_deviation(cross.points, NormSpec::p(1)) < 1e-8);

  const auto tet = equilateral_search(NormSpec::p(2), 3, 4, 1);
  CHECK(tet.points.size() == 4);
  // Four points cannot be equilateral in the Euclidean plane.
  CHECK(equilateral_search(NormSpec::p(2), 2, 4, 1, {.restarts = 8}).max_deviation > 1e-3);

  const auto x = equilateral_search(NormSpec::p(3), 2, 3, 5, {.restarts = 8});
  const auto y = equilateral_search(NormSpec::p(3), 2, 3, 5, {.restarts = 8});
  CHECK(x.points == y.points);
  CHECK(x.best_restart == y.best_restart);
}

TEST_CASE("equilateral deviation recomputed from scratch") {
  const std::vector<std::vector<double>> square{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  CHECK(equilateral_deviation(square, NormSpec::infinity()) == 0);
  CHECK(equilateral_deviation(square, NormSpec::p(2)) == doctest::Approx(std::sqrt(2.0) - 1));
}
