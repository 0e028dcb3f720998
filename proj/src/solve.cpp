#include "borsuk/solve.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

#include "borsuk/errors.hpp"

namespace borsuk {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_vertices(const Graph& g, const char* what) {
  if (g.order() == 0) throw PreconditionError(std::string(what) + ": graph has no vertices");
}

// Greedy sequential coloring of the candidate set in index order; returns
// vertices grouped by color class together with their (1-based) colors.
void color_classes(const Graph& g, const Bitset& p, std::vector<std::size_t>& order,
                   std::vector<std::size_t>& colors) {
  order.clear();
  colors.clear();
  Bitset uncolored = p;
  std::size_t k = 0;
  while (uncolored.any()) {
    ++k;
    Bitset q = uncolored;
    for (std::size_t v = q.find_first(); v != Bitset::npos; v = q.find_first()) {
      q.reset(v);
      q.subtract(g.neighbors(v));
      uncolored.reset(v);
      order.push_back(v);
      colors.push_back(k);
    }
  }
}

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::uint64_t limit) : g_(g), limit_(limit) {}

  // Maximum clique size with the coloring bound.
  void maximize() {
    Bitset all(g_.order());
    all.set_all();
    std::vector<std::size_t> c;
    expand(c, all);
  }

  // Lexicographically smallest clique of size `target`, vertices scanned in
  // index order.
  bool first_of_size(std::size_t target, std::vector<std::size_t>& out) {
    Bitset all(g_.order());
    all.set_all();
    std::vector<std::size_t> c;
    target_ = target;
    if (!find(c, all)) return false;
    out = c;
    return true;
  }

  std::size_t best() const { return best_.size(); }
  const std::vector<std::size_t>& best_clique() const { return best_; }
  std::size_t abandoned_bound() const { return abandoned_; }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool tick(std::size_t bound_if_abort) {
    if (aborted_ || ++nodes_ > limit_) {
      aborted_ = true;
      abandoned_ = std::max(abandoned_, bound_if_abort);
      return false;
    }
    return true;
  }

  void expand(std::vector<std::size_t>& c, Bitset p) {
    if (!tick(c.size() + p.count())) return;
    std::vector<std::size_t> order, colors;
    color_classes(g_, p, order, colors);
    for (std::size_t i = order.size(); i-- > 0;) {
      const std::size_t bound = c.size() + colors[i];
      if (bound <= best_.size()) return;
      if (aborted_) {
        abandoned_ = std::max(abandoned_, bound);
        return;
      }
      const std::size_t v = order[i];
      c.push_back(v);
      Bitset np = p & g_.neighbors(v);
      if (np.none()) {
        if (c.size() > best_.size()) best_ = c;
      } else {
        expand(c, std::move(np));
      }
      c.pop_back();
      p.reset(v);
      if (aborted_) {
        abandoned_ = std::max(abandoned_, bound);
        return;
      }
    }
  }

  bool find(std::vector<std::size_t>& c, Bitset p) {
    if (c.size() == target_) return true;
    if (!tick(0)) return false;
    if (c.size() + p.count() < target_) return false;
    std::vector<std::size_t> order, colors;
    color_classes(g_, p, order, colors);
    if (c.size() + (colors.empty() ? 0 : colors.back()) < target_) return false;
    for (std::size_t v = p.find_first(); v != Bitset::npos; v = p.find_first()) {
      p.reset(v);
      c.push_back(v);
      if (find(c, p & g_.neighbors(v))) return true;
      c.pop_back();
      if (aborted_ || c.size() + p.count() < target_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> best_;
  std::size_t abandoned_ = 0;
  std::size_t target_ = 0;
  bool aborted_ = false;
};

// Relabels vertices by non-increasing degree (ties by index) so that the
// greedy coloring bound sees high-degree vertices first.
std::vector<std::size_t> degree_order(const Graph& g) {
  std::vector<std::size_t> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
  return order;
}

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, std::uint64_t limit)
      : g_(g), n_(g.order()), limit_(limit), color_(n_, -1), sat_(n_, 0) {}

  void run(const std::vector<std::size_t>& clique, std::vector<std::size_t> initial,
           std::size_t lower) {
    best_ = initial.empty() ? n_ : *std::max_element(initial.begin(), initial.end()) + 1;
    best_coloring_ = std::move(initial);
    lower_ = lower;
    if (best_ <= lower_) return;
    counts_.assign(n_ * best_, 0);
    std::size_t used = 0;
    for (auto v : clique) assign(v, used++);
    search(clique.size(), used);
  }

  std::size_t best() const { return best_; }
  const std::vector<std::size_t>& coloring() const { return best_coloring_; }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void assign(std::size_t v, std::size_t c) {
    color_[v] = static_cast<int>(c);
    g_.neighbors(v).for_each([&](std::size_t u) {
      if (counts_[u * best_ + c]++ == 0) ++sat_[u];
    });
  }
  void unassign(std::size_t v) {
    const auto c = static_cast<std::size_t>(color_[v]);
    color_[v] = -1;
    g_.neighbors(v).for_each([&](std::size_t u) {
      if (--counts_[u * best_ + c] == 0) --sat_[u];
    });
  }

  void search(std::size_t colored, std::size_t used) {
    if (aborted_ || best_ <= lower_) return;
    if (++nodes_ > limit_) {
      aborted_ = true;
      return;
    }
    if (colored == n_) {
      best_ = used;
      best_coloring_.assign(n_, 0);
      for (std::size_t v = 0; v < n_; ++v) best_coloring_[v] = static_cast<std::size_t>(color_[v]);
      return;
    }
    std::size_t v = n_;
    for (std::size_t u = 0; u < n_; ++u)
      if (color_[u] < 0 && (v == n_ || sat_[u] > sat_[v])) v = u;
    for (std::size_t c = 0; c < used && used < best_; ++c) {
      if (counts_[v * best_ + c]) continue;
      assign(v, c);
      search(colored + 1, used);
      unassign(v);
      if (aborted_ || best_ <= lower_) return;
    }
    if (used + 1 < best_) {
      assign(v, used);
      search(colored + 1, used + 1);
      unassign(v);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t limit_;
  std::vector<int> color_;
  std::vector<std::size_t> sat_;
  std::vector<std::uint32_t> counts_;  // counts_[u*best_ + c]: neighbors of u with color c
  std::size_t best_ = 0;
  std::size_t lower_ = 0;
  std::vector<std::size_t> best_coloring_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

// Colors renumbered by first appearance in vertex order.
std::vector<std::size_t> normalize_coloring(const std::vector<std::size_t>& colors) {
  std::vector<std::size_t> map(colors.size() + 1, static_cast<std::size_t>(-1));
  std::vector<std::size_t> out(colors.size());
  std::size_t next = 0;
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (map[colors[v]] == static_cast<std::size_t>(-1)) map[colors[v]] = next++;
    out[v] = map[colors[v]];
  }
  return out;
}

}  // namespace

SolveResult max_clique(const Graph& g, NodeLimit node_limit) {
  require_vertices(g, "max_clique");
  const auto start = Clock::now();
  const std::uint64_t limit = node_limit.value_or(std::numeric_limits<std::uint64_t>::max());
  const auto order = degree_order(g);
  const Graph relabelled = g.induced(order);
  CliqueSearch pass1(relabelled, limit);
  pass1.maximize();

  SolveResult r;
  for (auto v : pass1.best_clique()) r.witness.push_back(order[v]);
  std::sort(r.witness.begin(), r.witness.end());
  r.value = static_cast<std::int64_t>(pass1.best());
  r.lower = r.value;
  r.nodes = pass1.nodes();
  if (pass1.aborted()) {
    r.upper = static_cast<std::int64_t>(std::max(pass1.best(), pass1.abandoned_bound()));
    r.optimal = r.upper == r.lower;
  } else {
    r.upper = r.value;
    r.optimal = true;
    // Canonical witness: the lexicographically smallest maximum clique.
    CliqueSearch pass2(g, limit - std::min(limit, pass1.nodes()));
    std::vector<std::size_t> lexmin;
    if (pass2.first_of_size(pass1.best(), lexmin)) r.witness = lexmin;
    r.nodes += pass2.nodes();
  }
  r.wall_seconds = seconds_since(start);
  return r;
}

SolveResult max_independent_set(const Graph& g, NodeLimit node_limit) {
  require_vertices(g, "max_independent_set");
  return max_clique(g.complement(), node_limit);
}

std::vector<std::size_t> dsatur_coloring(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> color(n, static_cast<std::size_t>(-1));
  std::vector<Bitset> seen(n, Bitset(n + 1));
  std::vector<std::size_t> sat(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t v = n;
    for (std::size_t u = 0; u < n; ++u) {
      if (color[u] != static_cast<std::size_t>(-1)) continue;
      if (v == n || sat[u] > sat[v] || (sat[u] == sat[v] && g.degree(u) > g.degree(v))) v = u;
    }
    std::size_t c = 0;
    while (seen[v].test(c)) ++c;
    color[v] = c;
    g.neighbors(v).for_each([&](std::size_t u) {
      if (!seen[u].test(c)) {
        seen[u].set(c);
        ++sat[u];
      }
    });
  }
  return color;
}

SolveResult chromatic_number(const Graph& g, NodeLimit node_limit) {
  require_vertices(g, "chromatic_number");
  const auto start = Clock::now();
  const std::uint64_t limit = node_limit.value_or(std::numeric_limits<std::uint64_t>::max());
  const SolveResult clique = max_clique(g, limit);
  ColoringSearch search(g, limit);
  search.run(clique.witness, dsatur_coloring(g), static_cast<std::size_t>(clique.lower));

  SolveResult r;
  r.value = static_cast<std::int64_t>(search.best());
  r.upper = r.value;
  r.witness = normalize_coloring(search.coloring());
  r.nodes = clique.nodes + search.nodes();
  r.lower = search.aborted() ? clique.lower : r.value;
  r.optimal = r.lower == r.upper;
  r.wall_seconds = seconds_since(start);
  return r;
}

std::int64_t partition_lower_bound(const Graph& g, NodeLimit node_limit) {
  require_vertices(g, "partition_lower_bound");
  const auto omega = max_clique(g, node_limit);
  const auto alpha = max_independent_set(g, node_limit);
  const auto n = static_cast<std::int64_t>(g.order());
  const std::int64_t by_alpha = (n + alpha.upper - 1) / alpha.upper;
  return std::max(omega.lower, by_alpha);
}

SolveResult borsuk_number(const PointSet& ps, NodeLimit node_limit) {
  return chromatic_number(diameter_graph(ps), node_limit);
}

bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& colors) {
  if (colors.size() != g.order()) return false;
  for (const auto& [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  return true;
}

namespace {
bool distinct_in_range(const Graph& g, const std::vector<std::size_t>& vs) {
  Bitset seen(g.order());
  for (auto v : vs) {
    if (v >= g.order() || seen.test(v)) return false;
    seen.set(v);
  }
  return true;
}
}  // namespace

bool is_clique(const Graph& g, const std::vector<std::size_t>& vs) {
  if (!distinct_in_range(g, vs)) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_independent_set(const Graph& g, const std::vector<std::size_t>& vs) {
  if (!distinct_in_range(g, vs)) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

}  // namespace borsuk
