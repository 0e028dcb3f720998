#include "borsuk/kernels.hpp"

#include <algorithm>
#include <bit>

#include "borsuk/embed.hpp"
#include "borsuk/errors.hpp"

namespace borsuk::kernels {

namespace {

std::size_t row_offset(std::size_t n, std::size_t i) { return i * n - i * (i + 1) / 2; }

void distance_row(const PointSet& ps, std::size_t i, std::vector<Rational>& out) {
  const std::size_t n = ps.size();
  std::size_t k = row_offset(n, i);
  for (std::size_t j = i + 1; j < n; ++j, ++k) out[k] = squared_distance(ps[i], ps[j]);
}

void count_cliques(const Graph& g, Bitset candidates, std::size_t depth,
                   std::vector<std::size_t>& counts) {
  for (std::size_t v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
    if (counts.size() <= depth) counts.resize(depth + 1, 0);
    ++counts[depth];
    Bitset next = candidates & g.neighbors(v);
    for (std::size_t w = next.find_first(); w != Bitset::npos && w <= v; w = next.find_next(w))
      next.reset(w);
    if (next.any()) count_cliques(g, std::move(next), depth + 1, counts);
  }
}

void add_counts(std::vector<std::size_t>& into, const std::vector<std::size_t>& from) {
  if (into.size() < from.size()) into.resize(from.size(), 0);
  for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

// Cliques whose smallest vertex is v.
std::vector<std::size_t> cliques_from(const Graph& g, std::size_t v) {
  std::vector<std::size_t> counts{1};
  Bitset next = g.neighbors(v);
  for (std::size_t w = next.find_first(); w != Bitset::npos && w <= v; w = next.find_next(w))
    next.reset(w);
  if (next.any()) count_cliques(g, std::move(next), 1, counts);
  return counts;
}

// Lengths are checked once up front.
bool orthogonal(const SignVector& x, const SignVector& y) { return 2 * std::popcount(x.bits ^ y.bits) == x.n; }

// Upper part only (j > i); the caller mirrors.
Bitset orthogonal_row(std::span<const SignVector> vs, std::size_t i) {
  Bitset row(vs.size());
  for (std::size_t j = i + 1; j < vs.size(); ++j)
    row.word(j >> 6) |= std::uint64_t{orthogonal(vs[i], vs[j])} << (j & 63);
  return row;
}

void check_lengths(std::span<const SignVector> vs) {
  for (const auto& v : vs)
    if (v.n != vs.front().n) throw PreconditionError("orthogonality_graph: length mismatch");
}

std::uint64_t pairs_for(const Subset& a, const SetFamily& g, int inter_size,
                        std::optional<int> sum_target) {
  std::uint64_t count = 0;
  for (const auto& b : g.members()) {
    if (a.mask == b.mask) continue;
    const std::uint64_t c = a.mask & b.mask;
    if (std::popcount(c) != inter_size) continue;
    if (sum_target && Subset::from_mask(c).elem_sum != *sum_target) continue;
    ++count;
  }
  return count;
}

bool better(std::size_t weight, const Bitset& v, const SpanMaximum& best) {
  if (weight != best.best_weight) return weight > best.best_weight;
  return v.lex_less(best.best);
}

void consider(SpanMaximum& best, const Bitset& v) {
  const std::size_t w = v.count();
  if (better(w, v, best)) {
    best.best_weight = w;
    best.best = v;
  }
}

std::uint64_t codeword_count(const std::vector<Bitset>& basis, std::uint64_t limit) {
  if (basis.size() >= 63) return limit;
  return std::min<std::uint64_t>(limit, std::uint64_t{1} << basis.size());
}

SpanMaximum enumerate_range(const std::vector<Bitset>& basis, std::size_t length,
                            std::uint64_t begin, std::uint64_t end) {
  SpanMaximum best;
  best.best = Bitset(length);
  if (begin >= end) return best;
  Bitset v(length);
  const std::uint64_t gray = begin ^ (begin >> 1);
  for (std::size_t b = 0; b < basis.size() && b < 64; ++b)
    if ((gray >> b) & 1u) v ^= basis[b];
  consider(best, v);
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    v ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    consider(best, v);
  }
  best.enumerated = end - begin;
  return best;
}

std::size_t basis_length(const std::vector<Bitset>& basis) {
  return basis.empty() ? 0 : basis.front().size();
}

void merge(SpanMaximum& into, const SpanMaximum& part) {
  into.enumerated += part.enumerated;
  if (part.enumerated && better(part.best_weight, part.best, into)) {
    into.best_weight = part.best_weight;
    into.best = part.best;
  }
}

std::vector<TensorPoint> all_tensor_powers(int n, int k) {
  std::vector<TensorPoint> out;
  for (const auto& x : all_sign_vectors(n)) out.push_back(tensor_power(x, k));
  return out;
}

}  // namespace

std::vector<Rational> pairwise_squared_distances_serial(const PointSet& ps) {
  const std::size_t n = ps.size();
  std::vector<Rational> out(n * (n - (n ? 1 : 0)) / 2);
  for (std::size_t i = 0; i < n; ++i) distance_row(ps, i, out);
  return out;
}

std::vector<Rational> pairwise_squared_distances_parallel(const PointSet& ps) {
  const std::size_t n = ps.size();
  std::vector<Rational> out(n * (n - (n ? 1 : 0)) / 2);
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < rows; ++i) distance_row(ps, static_cast<std::size_t>(i), out);
  return out;
}

std::vector<std::size_t> clique_counts_serial(const Graph& g) {
  std::vector<std::size_t> counts;
  for (std::size_t v = 0; v < g.order(); ++v) add_counts(counts, cliques_from(g, v));
  return counts;
}

std::vector<std::size_t> clique_counts_parallel(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<std::vector<std::size_t>> per_vertex(g.order());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t v = 0; v < n; ++v)
    per_vertex[static_cast<std::size_t>(v)] = cliques_from(g, static_cast<std::size_t>(v));
  std::vector<std::size_t> counts;
  for (const auto& c : per_vertex) add_counts(counts, c);
  return counts;
}

Graph orthogonality_graph_serial(std::span<const SignVector> vs) {
  check_lengths(vs);
  Graph g(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (orthogonal(vs[i], vs[j])) g.add_edge(i, j);
  return g;
}

Graph orthogonality_graph_parallel(std::span<const SignVector> vs) {
  check_lengths(vs);
  std::vector<Bitset> rows(vs.size());
  const auto n = static_cast<std::int64_t>(vs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i)
    rows[static_cast<std::size_t>(i)] = orthogonal_row(vs, static_cast<std::size_t>(i));
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].for_each([&](std::size_t j) { rows[j].set(i); });
  return Graph(std::move(rows));
}

std::uint64_t pair_count_serial(const SetFamily& f, const SetFamily& g, int inter_size,
                                std::optional<int> sum_target) {
  std::uint64_t total = 0;
  for (const auto& a : f.members()) total += pairs_for(a, g, inter_size, sum_target);
  return total;
}

std::uint64_t pair_count_parallel(const SetFamily& f, const SetFamily& g, int inter_size,
                                  std::optional<int> sum_target) {
  std::uint64_t total = 0;
  const auto n = static_cast<std::int64_t>(f.size());
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
  for (std::int64_t i = 0; i < n; ++i)
    total += pairs_for(f[static_cast<std::size_t>(i)], g, inter_size, sum_target);
  return total;
}

SpanMaximum span_maximum_serial(const std::vector<Bitset>& basis, std::uint64_t limit) {
  return enumerate_range(basis, basis_length(basis), 0, codeword_count(basis, limit));
}

SpanMaximum span_maximum_parallel(const std::vector<Bitset>& basis, std::uint64_t limit) {
  const std::uint64_t total = codeword_count(basis, limit);
  const std::size_t length = basis_length(basis);
  constexpr std::uint64_t chunk = 1u << 14;
  const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
  std::vector<SpanMaximum> parts(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
    parts[static_cast<std::size_t>(c)] =
        enumerate_range(basis, length, begin, std::min(total, begin + chunk));
  }
  SpanMaximum best;
  best.best = Bitset(length);
  for (const auto& p : parts) merge(best, p);
  return best;
}

std::uint64_t tensor_law_violations_serial(int n, int k) {
  const auto xs = all_sign_vectors(n);
  const auto ts = all_tensor_powers(n, k);
  std::uint64_t bad = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (tensor_squared_distance(ts[i], ts[j]) != embedded_squared_distance(xs[i], xs[j], k)) ++bad;
  return bad;
}

std::uint64_t tensor_law_violations_parallel(int n, int k) {
  const auto xs = all_sign_vectors(n);
  const auto ts = all_tensor_powers(n, k);
  std::uint64_t bad = 0;
  const auto m = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(static) reduction(+ : bad)
  for (std::int64_t i = 0; i < m; ++i) {
    const auto a = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (tensor_squared_distance(ts[a], ts[j]) != embedded_squared_distance(xs[a], xs[j], k)) ++bad;
  }
  return bad;
}

}  // namespace borsuk::kernels
