#include <algorithm>

#include "borsuk/corpus.hpp"
#include "borsuk/errors.hpp"
#include "borsuk/oracle.hpp"
#include "borsuk/parallel.hpp"
#include "borsuk/rng.hpp"
#include "borsuk/solve.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace borsuk;

namespace {

void check_witnesses(const Graph& g, const SolveResult& chi, const SolveResult& alpha,
                     const SolveResult& omega) {
  CHECK(is_proper_coloring(g, chi.witness));
  std::size_t colors = 0;
  for (auto c : chi.witness) colors = std::max(colors, c + 1);
  CHECK(static_cast<std::int64_t>(colors) == chi.value);
  CHECK(is_independent_set(g, alpha.witness));
  CHECK(static_cast<std::int64_t>(alpha.witness.size()) == alpha.value);
  CHECK(is_clique(g, omega.witness));
  CHECK(static_cast<std::int64_t>(omega.witness.size()) == omega.value);
}

}  // namespace

TEST_CASE("named graphs") {
  const Graph k4 = corpus::complete_graph(4), c5 = corpus::cycle_graph(5), pet = corpus::petersen_graph();
  CHECK(chromatic_number(k4).value == 4);
  CHECK(chromatic_number(c5).value == 3);
  CHECK(chromatic_number(pet).value == 3);
  CHECK(max_independent_set(c5).value == 2);
  CHECK(max_independent_set(pet).value == 4);
  CHECK(max_independent_set(Graph(7)).value == 7);
  CHECK(max_clique(k4).value == 4);
  CHECK(max_clique(c5).value == 2);
  CHECK(max_clique(pet).value == 2);
  CHECK(partition_lower_bound(k4) == 4);
  CHECK(partition_lower_bound(c5) == 3);
  CHECK(partition_lower_bound(pet) == 3);
  for (const Graph& g : {k4, c5, pet}) {
    const auto chi = chromatic_number(g), alpha = max_independent_set(g), omega = max_clique(g);
    CHECK(chi.optimal);
    CHECK(alpha.optimal);
    CHECK(omega.optimal);
    check_witnesses(g, chi, alpha, omega);
  }
}

TEST_CASE("degenerate graphs") {
  const Graph empty;
  CHECK_THROWS_AS(chromatic_number(empty), PreconditionError);
  CHECK_THROWS_AS(max_independent_set(empty), PreconditionError);
  CHECK(chromatic_number(Graph(1)).value == 1);
  CHECK(max_clique(Graph(3)).value == 1);
  CHECK(chromatic_number(Graph(5)).value == 1);
}

TEST_CASE("borsuk numbers of point sets") {
  for (std::size_t d = 1; d <= 5; ++d) CHECK(borsuk_number(corpus::regular_simplex(d)).value == static_cast<std::int64_t>(d + 1));
  CHECK(borsuk_number(testutil::unit_square()).value == 2);
  for (std::size_t n : {3u, 7u, 9u, 11u}) {
    const auto r = borsuk_number(corpus::hexagonal_odd_polygon(n));
    CHECK(r.value == 3);
    CHECK(r.optimal);
  }
  CHECK(borsuk_number(corpus::cube(3)).value == 2);
}

TEST_CASE("exact solvers agree with brute force on random graphs") {
  Rng rng(2718);
  for (int t = 0; t < 150; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 13));
    const Graph g = corpus::random_graph(rng, n, rng.uniform(0.1, 0.9));
    const auto chi = chromatic_number(g), alpha = max_independent_set(g), omega = max_clique(g);
    CHECK(chi.value == static_cast<std::int64_t>(oracle::chromatic_number(g)));
    CHECK(alpha.value == static_cast<std::int64_t>(oracle::independence_number(g)));
    CHECK(omega.value == static_cast<std::int64_t>(oracle::clique_number(g)));
    CHECK(chi.lower == chi.value);
    CHECK(chi.upper == chi.value);
    check_witnesses(g, chi, alpha, omega);
    CHECK(partition_lower_bound(g) <= chi.value);
  }
}

TEST_CASE("node limits give direction-safe bounds") {
  Rng rng(31);
  int cut = 0;
  for (int t = 0; t < 80; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(10, 16));
    const Graph g = corpus::random_graph(rng, n, rng.uniform(0.3, 0.7));
    const auto truth_chi = static_cast<std::int64_t>(oracle::chromatic_number(g));
    const auto truth_alpha = static_cast<std::int64_t>(oracle::independence_number(g));
    const auto truth_omega = static_cast<std::int64_t>(oracle::clique_number(g));
    for (std::uint64_t limit : {1u, 2u, 5u, 20u}) {
      const auto chi = chromatic_number(g, limit);
      const auto alpha = max_independent_set(g, limit);
      const auto omega = max_clique(g, limit);
      cut += !chi.optimal + !alpha.optimal + !omega.optimal;
      CHECK(chi.lower <= truth_chi);
      CHECK(chi.upper >= truth_chi);
      CHECK(chi.value >= truth_chi);
      CHECK(alpha.value <= truth_alpha);
      CHECK(alpha.upper >= truth_alpha);
      CHECK(omega.value <= truth_omega);
      CHECK(omega.upper >= truth_omega);
      check_witnesses(g, chi, alpha, omega);
      if (chi.optimal) CHECK(chi.value == truth_chi);
      CHECK(partition_lower_bound(g, limit) <= truth_chi);
    }
  }
  CHECK(cut > 0);
}

TEST_CASE("solver results are deterministic across runs and thread counts") {
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const Graph g = corpus::random_graph(rng, 14, 0.5);
    const auto a = chromatic_number(g), b = max_clique(g), c = max_independent_set(g);
    for (int threads : {1, 2, 4}) {
      ThreadScope scope(threads);
      CHECK(chromatic_number(g).witness == a.witness);
      CHECK(max_clique(g).witness == b.witness);
      CHECK(max_independent_set(g).witness == c.witness);
    }
  }
}

TEST_CASE("clique witness is the lexicographically smallest maximum clique") {
  Rng rng(55);
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(4, 12));
    const Graph g = corpus::random_graph(rng, n, 0.5);
    const auto omega = max_clique(g);
    std::vector<std::size_t> best;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      std::vector<std::size_t> vs;
      for (std::size_t i = 0; i < n; ++i)
        if (s >> i & 1u) vs.push_back(i);
      if (!is_clique(g, vs)) continue;
      if (vs.size() > best.size() || (vs.size() == best.size() && vs < best)) best = vs;
    }
    CHECK(omega.witness == best);
  }
}

TEST_CASE("validators and greedy coloring") {
  const Graph c5 = corpus::cycle_graph(5);
  CHECK_FALSE(is_proper_coloring(c5, {0, 1, 0, 1, 0}));
  CHECK(is_proper_coloring(c5, {0, 1, 0, 1, 2}));
  CHECK_FALSE(is_proper_coloring(c5, {0, 1}));
  CHECK_FALSE(is_clique(c5, {0, 2}));
  CHECK(is_independent_set(c5, {0, 2}));
  CHECK_FALSE(is_independent_set(c5, {0, 0}));
  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    const Graph g = corpus::random_graph(rng, 20, 0.4);
    CHECK(is_proper_coloring(g, dsatur_coloring(g)));
  }
}
