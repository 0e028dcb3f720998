#include "borsuk/cocycle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "borsuk/errors.hpp"
#include "borsuk/families.hpp"
#include "borsuk/kernels.hpp"

namespace borsuk {

namespace {

constexpr std::uint64_t kMaxSubsets = std::uint64_t{1} << 22;

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

void check_size(int n, int k, const char* what) {
  if (binom(n, k) > kMaxSubsets)
    throw InstanceTooLarge(std::string(what) + ": C(" + std::to_string(n) + "," +
                           std::to_string(k) + ") subsets is too many");
}

std::string mask_text(std::uint64_t mask) {
  std::string s = "{";
  for (std::uint64_t m = mask; m; m &= m - 1) {
    if (s.size() > 1) s += ',';
    s += std::to_string(std::countr_zero(m));
  }
  return s + "}";
}

std::vector<std::uint64_t> masks_of(const Bitset& indicator, const std::vector<std::uint64_t>& all) {
  std::vector<std::uint64_t> out;
  indicator.for_each([&](std::size_t i) { out.push_back(all[i]); });
  return out;
}

// Maximum k-uniform hypergraph without a complete (k+1)-set, by
// branch-and-bound over the k-sets in lexicographic order.
class TuranSearch {
 public:
  TuranSearch(int n, int k, std::uint64_t node_limit, bool symmetry_breaking)
      : node_limit_(node_limit), symmetry_breaking_(symmetry_breaking) {
    vars_ = k_subset_masks(n, k);
    const auto cons = k_subset_masks(n, k + 1);
    members_.resize(cons.size());
    var_cons_.resize(vars_.size());
    for (std::size_t c = 0; c < cons.size(); ++c)
      for (std::uint64_t m = cons[c]; m; m &= m - 1) {
        const std::size_t v = k_subset_rank(cons[c] & ~(m & -m), n);
        members_[c].push_back(v);
        var_cons_[v].push_back(c);
      }
    k_ = k;
    chosen_count_.assign(cons.size(), 0);
    excluded_count_.assign(cons.size(), 0);
    state_.assign(vars_.size(), 0);
  }

  void run() {
    root_bound_ = bound(0);
    best_ = 0;
    if (symmetry_breaking_ && !vars_.empty()) {
      // Any nonempty solution can be relabelled to contain {0..k-1}.
      set_state(0, 1);
      search(1);
    } else {
      search(0);
    }
  }

  std::size_t best() const { return best_; }
  bool aborted() const { return aborted_; }
  std::size_t upper() const { return aborted_ ? std::max(best_, root_bound_) : best_; }
  std::uint64_t nodes() const { return nodes_; }
  std::vector<std::uint64_t> witness() const {
    std::vector<std::uint64_t> out;
    for (std::size_t v = 0; v < best_state_.size(); ++v)
      if (best_state_[v] == 1) out.push_back(vars_[v]);
    return out;
  }

 private:
  // state: 0 undecided, 1 chosen, 2 excluded
  void set_state(std::size_t v, int s) {
    state_[v] = static_cast<char>(s);
    for (auto c : var_cons_[v]) (s == 1 ? chosen_count_[c] : excluded_count_[c])++;
    if (s == 1) ++chosen_;
  }
  void clear_state(std::size_t v) {
    const int s = state_[v];
    for (auto c : var_cons_[v]) (s == 1 ? chosen_count_[c] : excluded_count_[c])--;
    if (s == 1) --chosen_;
    state_[v] = 0;
  }

  // chosen + undecided − (disjoint packing of constraints that still force
  // one more exclusion).
  std::size_t bound(std::size_t next) {
    std::vector<char> used(vars_.size(), 0);
    std::size_t forced = 0;
    for (std::size_t c = 0; c < members_.size(); ++c) {
      if (excluded_count_[c]) continue;
      bool disjoint = true;
      for (auto v : members_[c])
        if (state_[v] == 0 && used[v]) disjoint = false;
      if (!disjoint) continue;
      for (auto v : members_[c])
        if (state_[v] == 0) used[v] = 1;
      ++forced;
    }
    return chosen_ + (vars_.size() - next) - forced;
  }

  void search(std::size_t next) {
    if (aborted_) return;
    if (++nodes_ > node_limit_) {
      aborted_ = true;
      return;
    }
    if (next == vars_.size()) {
      if (chosen_ > best_ || best_state_.empty()) {
        best_ = chosen_;
        best_state_ = state_;
      }
      return;
    }
    if (bound(next) <= best_ && !best_state_.empty()) return;
    bool can_choose = true;
    for (auto c : var_cons_[next])
      if (chosen_count_[c] == k_) can_choose = false;
    if (can_choose) {
      set_state(next, 1);
      search(next + 1);
      clear_state(next);
    }
    set_state(next, 2);
    search(next + 1);
    clear_state(next);
  }

  std::vector<std::uint64_t> vars_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::vector<std::size_t>> var_cons_;
  std::vector<int> chosen_count_, excluded_count_;
  std::vector<char> state_, best_state_;
  int k_ = 0;
  std::size_t chosen_ = 0;
  std::size_t best_ = 0;
  std::size_t root_bound_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t node_limit_;
  bool symmetry_breaking_;
  bool aborted_ = false;
};

}  // namespace

UniformHypergraph::UniformHypergraph(int n, int k, std::vector<std::uint64_t> edges)
    : n_(n), k_(k) {
  if (n < 0 || n > 64) throw PreconditionError("hypergraph: n must be in 0..64");
  if (k < 0 || k > n) throw PreconditionError("hypergraph: need 0 <= k <= n");
  const std::uint64_t outside = n == 64 ? 0 : ~((std::uint64_t{1} << n) - 1);
  for (auto e : edges) {
    if (std::popcount(e) != k)
      throw PreconditionError("hypergraph: edge " + mask_text(e) + " does not have " +
                              std::to_string(k) + " vertices");
    if (e & outside) throw PreconditionError("hypergraph: edge " + mask_text(e) + " out of range");
  }
  std::sort(edges.begin(), edges.end(), static_cast<bool (*)(std::uint64_t, std::uint64_t)>(lex_less));
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw PreconditionError("hypergraph: duplicate edge");
  edges_ = std::move(edges);
}

bool UniformHypergraph::contains(std::uint64_t e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e,
                            static_cast<bool (*)(std::uint64_t, std::uint64_t)>(lex_less));
}

UniformHypergraph symmetric_difference(const UniformHypergraph& a, const UniformHypergraph& b) {
  if (a.n() != b.n() || a.k() != b.k())
    throw PreconditionError("symmetric_difference: hypergraphs of different shape");
  std::vector<std::uint64_t> out;
  std::set_symmetric_difference(a.edges().begin(), a.edges().end(), b.edges().begin(),
                                b.edges().end(), std::back_inserter(out),
                                static_cast<bool (*)(std::uint64_t, std::uint64_t)>(lex_less));
  return UniformHypergraph(a.n(), a.k(), std::move(out));
}

std::vector<std::uint64_t> k_subset_masks(int n, int k) {
  if (n < 0 || n > 64 || k < 0 || k > n) throw PreconditionError("k_subset_masks: bad n or k");
  check_size(n, k, "k_subset_masks");
  std::vector<std::uint64_t> out;
  out.reserve(binom(n, k));
  // Lexicographic successor on sorted index lists.
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    std::uint64_t m = 0;
    for (int v : c) m |= std::uint64_t{1} << v;
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::size_t k_subset_rank(std::uint64_t mask, int n) {
  const int k = std::popcount(mask);
  std::size_t rank = 0;
  int prev = -1;
  int i = 0;
  for (std::uint64_t m = mask; m; m &= m - 1, ++i) {
    const int c = std::countr_zero(m);
    for (int v = prev + 1; v < c; ++v) rank += binom(n - 1 - v, k - i - 1);
    prev = c;
  }
  return rank;
}

UniformHypergraph coboundary(const UniformHypergraph& h) {
  const int n = h.n();
  const int k = h.k() + 1;
  if (h.k() < 1 || k > n)
    throw PreconditionError("coboundary: need 1 <= uniformity and uniformity + 1 <= n");
  check_size(n, k, "coboundary");
  Bitset parity(binom(n, k));
  for (auto e : h.edges())
    for (int v = 0; v < n; ++v)
      if (!((e >> v) & 1u)) parity.flip(k_subset_rank(e | (std::uint64_t{1} << v), n));
  return UniformHypergraph(n, k, masks_of(parity, k_subset_masks(n, k)));
}

std::optional<std::uint64_t> cocycle_violation(const UniformHypergraph& g) {
  if (g.k() + 1 > g.n()) throw PreconditionError("is_cocycle: need k + 1 <= n");
  check_size(g.n(), g.k() + 1, "is_cocycle");
  const std::unordered_set<std::uint64_t> edges(g.edges().begin(), g.edges().end());
  for (auto s : k_subset_masks(g.n(), g.k() + 1)) {
    int count = 0;
    for (std::uint64_t m = s; m; m &= m - 1) count += edges.count(s & ~(m & -m)) ? 1 : 0;
    if (count % 2) return s;
  }
  return std::nullopt;
}

PmMatrix::PmMatrix(int m, std::vector<int> entries) : m_(m), entries_(std::move(entries)) {
  if (m < 1) throw PreconditionError("pm matrix: size must be positive");
  if (entries_.size() != static_cast<std::size_t>(m) * m)
    throw PreconditionError("pm matrix: expected " + std::to_string(m * m) + " entries");
  for (int e : entries_)
    if (e != 1 && e != -1) throw PreconditionError("pm matrix: entries must be +1 or -1");
}

UniformHypergraph dckw(const PmMatrix& a) {
  const int m = a.m();
  if (m < 2 || m > 32) throw PreconditionError("dckw: matrix size must be in 2..32");
  auto row = [](int r) { return std::uint64_t{1} << r; };
  auto col = [m](int c) { return std::uint64_t{1} << (m + c); };
  std::vector<std::uint64_t> edges;
  for (int r1 = 0; r1 < m; ++r1)
    for (int r2 = r1 + 1; r2 < m; ++r2) {
      for (int r3 = r2 + 1; r3 < m; ++r3)
        for (int c = 0; c < m; ++c) {
          edges.push_back(row(r1) | row(r2) | row(r3) | col(c));
          edges.push_back(col(r1) | col(r2) | col(r3) | row(c));
        }
      for (int c1 = 0; c1 < m; ++c1)
        for (int c2 = c1 + 1; c2 < m; ++c2)
          if (a(r1, c1) * a(r1, c2) * a(r2, c1) * a(r2, c2) == -1)
            edges.push_back(row(r1) | row(r2) | col(c1) | col(c2));
    }
  return UniformHypergraph(2 * m, 4, std::move(edges));
}

Rational expected_dckw_edges(int m) {
  if (m < 2) throw PreconditionError("expected_dckw_edges: m must be >= 2");
  const Integer mm = m;
  const Integer c3 = mm * (mm - 1) * (mm - 2) / 6;
  const Integer c2 = mm * (mm - 1) / 2;
  Rational r = Rational(2 * mm * c3) + Rational(c2 * c2, 2);
  r.canonicalize();
  return r;
}

std::optional<std::uint64_t> turan_violation(const UniformHypergraph& g) {
  if (g.k() + 1 > g.n()) throw PreconditionError("turan_check: need k + 1 <= n");
  check_size(g.n(), g.k() + 1, "turan_check");
  const std::unordered_set<std::uint64_t> edges(g.edges().begin(), g.edges().end());
  for (auto s : k_subset_masks(g.n(), g.k() + 1)) {
    bool complete = true;
    for (std::uint64_t m = s; m && complete; m &= m - 1)
      complete = edges.count(s & ~(m & -m)) != 0;
    if (complete) return s;
  }
  return std::nullopt;
}

std::vector<Bitset> cocycle_space_basis(int n, int k) {
  if (k < 2 || k > n) throw PreconditionError("cocycle_space_basis: need 2 <= k <= n");
  check_size(n, k, "cocycle_space_basis");
  const std::size_t width = binom(n, k);
  std::vector<Bitset> rows;
  std::vector<std::size_t> pivots;
  for (auto s : k_subset_masks(n, k - 1)) {
    Bitset g(width);
    for (int v = 0; v < n; ++v)
      if (!((s >> v) & 1u)) g.set(k_subset_rank(s | (std::uint64_t{1} << v), n));
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (g.test(pivots[i])) g ^= rows[i];
    const std::size_t p = g.find_first();
    if (p == Bitset::npos) continue;
    for (auto& r : rows)
      if (r.test(p)) r ^= g;
    rows.push_back(std::move(g));
    pivots.push_back(p);
  }
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots[a] < pivots[b]; });
  std::vector<Bitset> basis;
  for (auto i : order) basis.push_back(std::move(rows[i]));
  if (basis.size() != binom(n - 1, k - 1))
    throw Error("cocycle_space_basis: reduced dimension " + std::to_string(basis.size()) +
                " differs from C(n-1,k-1)");
  return basis;
}

TuranReport extremal_numbers(int n, int k, ExtremalOptions options) {
  if (k < 2 || k % 2 != 0)
    throw PreconditionError(
        "extremal_numbers: k must be even (for odd k the complete k-uniform hypergraph is a "
        "cocycle, so f(n,k) = C(n,k) trivially)");
  if (n < k + 1) throw PreconditionError("extremal_numbers: need n >= k + 1");
  TuranReport r;
  r.n = n;
  r.k = k;
  const auto all = k_subset_masks(n, k);
  const auto basis = cocycle_space_basis(n, k);
  r.cocycle_dimension = basis.size();
  const int dim = static_cast<int>(basis.size());
  const int enumerated_dim = std::min(dim, options.max_cocycle_dimension);
  const auto best =
      kernels::span_maximum_parallel(basis, std::uint64_t{1} << std::min(enumerated_dim, 62));
  r.f_nk = best.best_weight;
  r.f_optimal = dim <= options.max_cocycle_dimension;
  r.f_witness = masks_of(best.best, all);
  r.cocycles_enumerated = best.enumerated;

  TuranSearch search(n, k, options.turan_node_limit, options.symmetry_breaking);
  search.run();
  r.t_nk = search.best();
  r.t_upper = search.upper();
  r.t_optimal = !search.aborted();
  r.t_witness = search.witness();
  r.t_nodes = search.nodes();
  if (k == 4) r.peled_reference = 0.6916 * static_cast<double>(binom(n, 4));
  return r;
}

CocycleSignSet cocycle_sign_set(int n, int k, std::span<const int> g) {
  if (k < 2 || k > n) throw PreconditionError("cocycle_sign_set: need 2 <= k <= n");
  const auto lower = k_subset_masks(n, k - 1);
  if (g.size() != lower.size())
    throw PreconditionError("cocycle_sign_set: expected " + std::to_string(lower.size()) +
                            " values of g");
  for (int v : g)
    if (v != 1 && v != -1) throw PreconditionError("cocycle_sign_set: g must be +1 or -1");
  const auto upper = k_subset_masks(n, k);
  CocycleSignSet out;
  out.n = n;
  out.k = k;
  out.values.resize(upper.size());
  std::vector<std::uint64_t> negative;
  for (std::size_t t = 0; t < upper.size(); ++t) {
    int f = 1;
    for (std::uint64_t m = upper[t]; m; m &= m - 1) f *= g[k_subset_rank(upper[t] & ~(m & -m), n)];
    out.values[t] = f;
    if (f < 0) negative.push_back(upper[t]);
  }
  std::vector<std::uint64_t> h;
  for (std::size_t s = 0; s < lower.size(); ++s)
    if (g[s] < 0) h.push_back(lower[s]);
  out.certified =
      coboundary(UniformHypergraph(n, k - 1, h)) == UniformHypergraph(n, k, negative);
  return out;
}

PointSet cocycle_candidate_points(int n, CandidateOptions options) {
  if (n < 5) throw PreconditionError("cocycle_candidate_points: n must be >= 5");
  if (n > 6)
    throw InstanceTooLarge("cocycle_candidate_points: 2^C(n-1,3) points; n <= 6 supported");
  const auto basis = cocycle_space_basis(n, 4);
  const std::size_t width = basis.front().size();
  std::vector<RationalVector> pts;
  std::unordered_set<std::string> seen;
  auto key = [](const Bitset& b) {
    std::string s;
    for (auto w : b.words()) s += std::to_string(w) + ",";
    return s;
  };
  Bitset flip(width);
  flip.set_all();
  for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << basis.size()); ++combo) {
    Bitset v(width);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if ((combo >> i) & 1u) v ^= basis[i];
    if (options.merge_antipodes) {
      if (seen.count(key(v ^ flip))) continue;
      seen.insert(key(v));
    }
    RationalVector p(width);
    for (std::size_t i = 0; i < width; ++i) p[i] = v.test(i) ? -1 : 1;
    pts.push_back(std::move(p));
  }
  return PointSet(width, std::move(pts),
                  "3-cocycle sign vectors (n=" + std::to_string(n) + ")");
}

}  // namespace borsuk
