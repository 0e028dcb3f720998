#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "borsuk/exact_geom.hpp"
#include "borsuk/graph.hpp"
#include "borsuk/rational.hpp"

namespace testutil {

inline borsuk::PointSet points(std::size_t dim,
                               std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<borsuk::RationalVector> pts;
  for (const auto& row : rows) {
    borsuk::RationalVector p;
    for (const char* c : row) p.push_back(borsuk::parse_rational(c));
    pts.push_back(std::move(p));
  }
  return borsuk::PointSet(dim, std::move(pts));
}

inline borsuk::PointSet unit_square() { return points(2, {{"0", "0"}, {"1", "0"}, {"1", "1"}, {"0", "1"}}); }

// Every vertex has degree 2 and the graph is connected.
inline bool is_cycle(const borsuk::Graph& g) {
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    g.neighbors(v).for_each([&](std::size_t u) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    });
  }
  return reached == g.order();
}

// Squared distances computed without the library's kernels.
inline borsuk::Rational naive_sq(const borsuk::RationalVector& a, const borsuk::RationalVector& b) {
  borsuk::Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const borsuk::Rational d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

// Diameter graph from scratch: two passes over all pairs.
inline borsuk::Graph naive_diameter_graph(const borsuk::PointSet& ps) {
  borsuk::Rational best = 0;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) best = std::max(best, naive_sq(ps[i], ps[j]));
  borsuk::Graph g(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (naive_sq(ps[i], ps[j]) == best) g.add_edge(i, j);
  return g;
}

}  // namespace testutil
