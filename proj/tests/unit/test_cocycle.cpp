#include <bit>
#include <cmath>

#include "borsuk/cocycle.hpp"
#include "borsuk/corpus.hpp"
#include "borsuk/errors.hpp"
#include "borsuk/oracle.hpp"
#include "borsuk/rng.hpp"
#include "doctest.h"

using namespace borsuk;

namespace {

std::uint64_t v(std::initializer_list<int> xs) {
  std::uint64_t mask = 0;
  for (int x : xs) mask |= std::uint64_t{1} << x;
  return mask;
}

UniformHypergraph complete(int n, int k) { return UniformHypergraph(n, k, k_subset_masks(n, k)); }

std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

TEST_CASE("uniform hypergraph validation") {
  CHECK_THROWS_AS(UniformHypergraph(4, 2, {v({0, 1, 2})}), PreconditionError);
  CHECK_THROWS_AS(UniformHypergraph(4, 2, {v({0, 4})}), PreconditionError);
  CHECK_THROWS_AS(UniformHypergraph(4, 2, {v({0, 1}), v({0, 1})}), PreconditionError);
  const UniformHypergraph h(5, 2, {v({2, 3}), v({0, 4}), v({0, 1})});
  CHECK(h.edges() == std::vector<std::uint64_t>{v({0, 1}), v({0, 4}), v({2, 3})});
  CHECK(h.contains(v({0, 4})));
  CHECK_FALSE(h.contains(v({1, 4})));
}

TEST_CASE("k-subset order and rank") {
  const auto masks = k_subset_masks(6, 3);
  CHECK(masks.size() == 20);
  CHECK(masks.front() == v({0, 1, 2}));
  CHECK(masks[1] == v({0, 1, 3}));
  CHECK(masks.back() == v({3, 4, 5}));
  for (std::size_t i = 0; i < masks.size(); ++i) CHECK(k_subset_rank(masks[i], 6) == i);
}

TEST_CASE("coboundary examples") {
  CHECK(coboundary(UniformHypergraph(6, 3, {})).size() == 0);
  const auto g = coboundary(UniformHypergraph(6, 3, {v({0, 1, 2})}));
  CHECK(g.k() == 4);
  CHECK(g.edges() == std::vector<std::uint64_t>{v({0, 1, 2, 3}), v({0, 1, 2, 4}), v({0, 1, 2, 5})});
  const UniformHypergraph two(6, 3, {v({0, 1, 2}), v({0, 1, 3})});
  CHECK(coboundary(two) == UniformHypergraph(6, 4, oracle::coboundary(6, 4, two.edges())));
  CHECK(coboundary(two).edges() == std::vector<std::uint64_t>{v({0, 1, 2, 4}), v({0, 1, 2, 5}),
                                                              v({0, 1, 3, 4}), v({0, 1, 3, 5})});
}

TEST_CASE("cocycle checks") {
  const auto k5 = complete(5, 4);
  const auto bad = cocycle_violation(k5);
  REQUIRE(bad.has_value());
  CHECK(*bad == v({0, 1, 2, 3, 4}));
  auto edges = k5.edges();
  edges.pop_back();
  CHECK(is_cocycle(UniformHypergraph(5, 4, edges)));
  for (int n = 4; n <= 9; ++n) CHECK(is_cocycle(complete(n, 3)));
}

TEST_CASE("coboundary closure, linearity and oracle agreement") {
  Rng rng(1);
  for (int t = 0; t < 300; ++t) {
    const int k = static_cast<int>(rng.uniform_int(2, 4));
    const int n = static_cast<int>(rng.uniform_int(k + 1, 9));
    const auto h1 = corpus::random_hypergraph(rng, n, k - 1, rng.uniform01());
    const auto h2 = corpus::random_hypergraph(rng, n, k - 1, rng.uniform01());
    const auto g1 = coboundary(h1);
    CHECK(is_cocycle(g1));
    CHECK(g1 == UniformHypergraph(n, k, oracle::coboundary(n, k, h1.edges())));
    CHECK(coboundary(symmetric_difference(h1, h2)) == symmetric_difference(g1, coboundary(h2)));
    if (k % 2 == 0) CHECK(turan_check(g1));
  }
}

TEST_CASE("dckw construction") {
  CHECK(dckw(corpus::all_ones_matrix(4)).size() == 32);
  std::vector<int> entries(16, 1);
  entries[0] = -1;
  const PmMatrix one_flip(4, entries);
  const auto h = dckw(one_flip);
  CHECK(h.size() == 41);
  CHECK(h == UniformHypergraph(8, 4, oracle::dckw_edges(one_flip)));
  CHECK_THROWS_AS(PmMatrix(2, {1, 0, 1, 1}), PreconditionError);
  CHECK_THROWS_AS(PmMatrix(2, {1, 1, 1}), PreconditionError);

  for (int m = 2; m <= 6; ++m) {
    const auto ones = dckw(corpus::all_ones_matrix(m));
    CHECK(ones.size() == 2 * static_cast<std::size_t>(m) * binom(m, 3));
    if (m >= 3) CHECK(is_cocycle(ones));
  }
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    const auto a = corpus::random_pm_matrix(rng, static_cast<int>(rng.uniform_int(2, 5)));
    const auto d = dckw(a);
    CHECK(d == UniformHypergraph(2 * a.m(), 4, oracle::dckw_edges(a)));
    if (a.m() >= 3) CHECK(is_cocycle(d));
  }
}

TEST_CASE("expected dckw edge counts") {
  CHECK(expected_dckw_edges(4) == 50);
  CHECK(expected_dckw_edges(2) == Rational(1, 2));
  const double frac = expected_dckw_edges(64).get_d() / static_cast<double>(binom(128, 4));
  CHECK(std::abs(frac - 11.0 / 16.0) < 0.02);

  // Sample mean of 500 random 4x4 matrices within 4 standard errors.
  Rng rng(123);
  double sum = 0, sumsq = 0;
  for (int t = 0; t < 500; ++t) {
    const double e = static_cast<double>(dckw(corpus::random_pm_matrix(rng, 4)).size());
    sum += e;
    sumsq += e * e;
  }
  const double mean = sum / 500, var = (sumsq - 500 * mean * mean) / 499;
  CHECK(std::abs(mean - 50) <= 4 * std::sqrt(var / 500));
}

TEST_CASE("turan check") {
  CHECK(turan_violation(complete(5, 4)) == v({0, 1, 2, 3, 4}));
  CHECK(turan_check(UniformHypergraph(7, 4, {})));
  for (const auto& b : cocycle_space_basis(6, 4)) {
    std::vector<std::uint64_t> edges;
    const auto masks = k_subset_masks(6, 4);
    b.for_each([&](std::size_t i) { edges.push_back(masks[i]); });
    const UniformHypergraph g(6, 4, edges);
    CHECK(is_cocycle(g));
    CHECK(turan_check(g));
  }
}

TEST_CASE("cocycle space basis has dimension C(n-1,k-1)") {
  for (int k = 2; k <= 4; ++k)
    for (int n = k + 1; n <= 8; ++n) CHECK(cocycle_space_basis(n, k).size() == binom(n - 1, k - 1));
}

TEST_CASE("extremal numbers at small n") {
  const auto r5 = extremal_numbers(5, 4);
  CHECK(r5.f_nk == 4);
  CHECK(r5.t_nk == 4);
  CHECK(r5.f_optimal);
  CHECK(r5.t_optimal);
  CHECK(r5.cocycles_enumerated == 16);

  const auto r6 = extremal_numbers(6, 4);
  CHECK(r6.f_optimal);
  CHECK(r6.t_optimal);
  CHECK(r6.f_nk == r6.t_nk);
  CHECK(r6.f_nk == oracle::max_cocycle_edges(6, 4));
  CHECK(r6.t_nk == oracle::turan_number(6, 4));
  CHECK(r6.cocycles_enumerated == 1024);
  CHECK(is_cocycle(UniformHypergraph(6, 4, r6.f_witness)));
  CHECK(turan_check(UniformHypergraph(6, 4, r6.t_witness)));
  CHECK(r6.t_witness.size() == r6.t_nk);
  CHECK(r6.peled_reference == doctest::Approx(0.6916 * 15));

  ExtremalOptions sym;
  sym.symmetry_breaking = true;
  CHECK(extremal_numbers(6, 4, sym).t_nk == r6.t_nk);

  // k = 2: cocycles are complete bipartite graphs; Turán number is the triangle-free maximum.
  for (int n = 3; n <= 6; ++n) {
    const auto r = extremal_numbers(n, 2);
    CHECK(r.f_nk == static_cast<std::size_t>((n / 2) * (n - n / 2)));
    CHECK(r.t_nk == r.f_nk);
  }
  CHECK_THROWS_AS(extremal_numbers(6, 3), PreconditionError);

  ExtremalOptions tiny;
  tiny.turan_node_limit = 3;
  const auto cut = extremal_numbers(7, 4, tiny);
  CHECK_FALSE(cut.t_optimal);
  CHECK(cut.t_nk <= cut.t_upper);
  CHECK(cut.t_upper >= 28);
}

TEST_CASE("cocycle sign sets") {
  const auto masks3 = k_subset_masks(6, 3);
  const auto masks4 = k_subset_masks(6, 4);
  const std::vector<int> ones(masks3.size(), 1);
  const auto plain = cocycle_sign_set(6, 4, ones);
  for (int x : plain.values) CHECK(x == 1);
  CHECK(plain.certified);

  std::vector<int> g(masks3.size(), 1);
  g[k_subset_rank(v({0, 1, 2}), 6)] = -1;
  const auto single = cocycle_sign_set(6, 4, g);
  for (std::size_t i = 0; i < masks4.size(); ++i)
    CHECK((single.values[i] == -1) == ((masks4[i] & v({0, 1, 2})) == v({0, 1, 2})));

  Rng rng(77);
  const auto masks7 = k_subset_masks(7, 3);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> gr(masks7.size());
    std::vector<std::uint64_t> neg;
    for (std::size_t i = 0; i < gr.size(); ++i) {
      gr[i] = rng.coin() ? -1 : 1;
      if (gr[i] < 0) neg.push_back(masks7[i]);
    }
    const auto s = cocycle_sign_set(7, 4, gr);
    CHECK(s.certified);
    const auto expected = coboundary(UniformHypergraph(7, 3, neg));
    const auto all4 = k_subset_masks(7, 4);
    for (std::size_t i = 0; i < all4.size(); ++i) CHECK((s.values[i] == -1) == expected.contains(all4[i]));
  }
}

TEST_CASE("cocycle candidate points") {
  const auto p5 = cocycle_candidate_points(5);
  CHECK(p5.size() == 16);
  CHECK(p5.dim() == 5);
  const auto p6 = cocycle_candidate_points(6);
  CHECK(p6.size() == 1024);
  CHECK(p6.dim() == 15);
  const auto masks = k_subset_masks(6, 4);
  for (const auto& p : p6.points()) {
    std::vector<std::uint64_t> neg;
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK((p[i] == 1 || p[i] == -1));
      if (p[i] == -1) neg.push_back(masks[i]);
    }
    CHECK(is_cocycle(UniformHypergraph(6, 4, neg)));
  }
  CHECK(cocycle_candidate_points(6, {.merge_antipodes = true}).size() == 1024);
  CHECK_THROWS_AS(cocycle_candidate_points(7), InstanceTooLarge);
}
