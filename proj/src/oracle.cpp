#include "borsuk/oracle.hpp"

#include <algorithm>
#include <bit>

#include "borsuk/errors.hpp"

namespace borsuk::oracle {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g, std::size_t max_n) {
  if (g.order() > max_n) throw InstanceTooLarge("oracle: graph too large for brute force");
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = 0; v < g.order(); ++v)
      if (u != v && g.adjacent(u, v)) adj[u] |= 1u << v;
  return adj;
}

bool independent(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  for (std::uint32_t m = s; m; m &= m - 1)
    if (adj[std::countr_zero(m)] & s) return false;
  return true;
}

std::size_t max_independent(const std::vector<std::uint32_t>& adj) {
  std::size_t best = 0;
  const std::uint32_t n = static_cast<std::uint32_t>(adj.size());
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (static_cast<std::size_t>(std::popcount(s)) > best && independent(adj, s))
      best = static_cast<std::size_t>(std::popcount(s));
  return best;
}

std::vector<std::uint64_t> all_masks(int n, int k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}

// For every (k+1)-set, the bitmask (over indices into all_masks(n,k)) of its
// k-subsets.
std::vector<std::uint32_t> constraint_masks(int n, int k, const std::vector<std::uint64_t>& ksets) {
  if (ksets.size() > 24) throw InstanceTooLarge("oracle: more than 24 k-sets");
  std::vector<std::uint32_t> out;
  for (auto big : all_masks(n, k + 1)) {
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < ksets.size(); ++i)
      if ((ksets[i] & ~big) == 0) c |= 1u << i;
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::size_t independence_number(const Graph& g) { return max_independent(adjacency_masks(g, 20)); }

std::size_t clique_number(const Graph& g) {
  auto adj = adjacency_masks(g, 20);
  const std::uint32_t full = g.order() == 0 ? 0 : (1u << g.order()) - 1;
  for (std::size_t v = 0; v < adj.size(); ++v) adj[v] = ~adj[v] & full & ~(1u << v);
  return max_independent(adj);
}

std::size_t chromatic_number(const Graph& g) {
  const auto adj = adjacency_masks(g, 16);
  const std::uint32_t n = static_cast<std::uint32_t>(adj.size());
  if (n == 0) return 0;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<char> ind(full + 1);
  for (std::uint32_t s = 0; s <= full; ++s) ind[s] = independent(adj, s);
  std::vector<std::uint8_t> dp(full + 1, 255);
  dp[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & -s;
    // Colour class containing the lowest vertex of s.
    for (std::uint32_t t = s; t; t = (t - 1) & s)
      if ((t & low) && ind[t]) dp[s] = std::min<std::uint8_t>(dp[s], dp[s ^ t] + 1);
  }
  return dp[full];
}

std::vector<std::uint64_t> coboundary(int n, int k, const std::vector<std::uint64_t>& h_edges) {
  std::vector<std::uint64_t> out;
  for (auto t : all_masks(n, k)) {
    int count = 0;
    for (auto e : h_edges) count += (e & ~t) == 0;
    if (count % 2) out.push_back(t);
  }
  return out;
}

std::vector<std::uint64_t> dckw_edges(const PmMatrix& a) {
  const int m = a.m();
  const std::uint64_t rows = (std::uint64_t{1} << m) - 1;
  std::vector<std::uint64_t> out;
  for (auto q : all_masks(2 * m, 4)) {
    const int r = std::popcount(q & rows);
    if (r == 1 || r == 3) {
      out.push_back(q);
    } else if (r == 2) {
      std::vector<int> rr, cc;
      for (int i = 0; i < m; ++i) {
        if ((q >> i) & 1u) rr.push_back(i);
        if ((q >> (m + i)) & 1u) cc.push_back(i);
      }
      if (a(rr[0], cc[0]) * a(rr[0], cc[1]) * a(rr[1], cc[0]) * a(rr[1], cc[1]) < 0)
        out.push_back(q);
    }
  }
  return out;
}

std::size_t max_cocycle_edges(int n, int k) {
  const auto ksets = all_masks(n, k);
  const auto cons = constraint_masks(n, k, ksets);
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << ksets.size()); ++s) {
    bool ok = true;
    for (auto c : cons)
      if (std::popcount(s & c) % 2) {
        ok = false;
        break;
      }
    if (ok) best = std::max(best, static_cast<std::size_t>(std::popcount(s)));
  }
  return best;
}

std::size_t turan_number(int n, int k) {
  const auto ksets = all_masks(n, k);
  const auto cons = constraint_masks(n, k, ksets);
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << ksets.size()); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) <= best) continue;
    bool ok = true;
    for (auto c : cons)
      if ((s & c) == c) {
        ok = false;
        break;
      }
    if (ok) best = static_cast<std::size_t>(std::popcount(s));
  }
  return best;
}

}  // namespace borsuk::oracle
