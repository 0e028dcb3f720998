#include "borsuk/graph.hpp"

#include <algorithm>
#include <string>

#include "borsuk/errors.hpp"

namespace borsuk {

Graph::Graph(std::size_t n) : adj_(n, Bitset(n)) {}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

Graph::Graph(std::vector<Bitset> rows) : adj_(std::move(rows)) {
  const std::size_t n = adj_.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (adj_[u].size() != n) throw PreconditionError("adjacency row has wrong length");
    if (adj_[u].test(u)) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    bool symmetric = true;
    adj_[u].for_each([&](std::size_t v) { symmetric = symmetric && adj_[v].test(u); });
    if (!symmetric) throw PreconditionError("adjacency rows are not symmetric");
  }
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= order() || v >= order())
    throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for " + std::to_string(order()) + " vertices");
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  adj_[u].set(v);
  adj_[v].set(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < order(); ++u)
    for (std::size_t v = adj_[u].find_next(u); v != Bitset::npos; v = adj_[u].find_next(v))
      out.emplace_back(u, v);
  return out;
}

Graph Graph::complement() const {
  Graph c(order());
  for (std::size_t u = 0; u < order(); ++u) {
    c.adj_[u].set_all();
    c.adj_[u].subtract(adj_[u]);
    c.adj_[u].reset(u);
  }
  return c;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
  Graph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
  return h;
}

std::size_t degeneracy(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  std::size_t result = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
    result = std::max(result, deg[best]);
    removed[best] = true;
    g.neighbors(best).for_each([&](std::size_t w) {
      if (!removed[w]) --deg[w];
    });
  }
  return result;
}

}  // namespace borsuk
