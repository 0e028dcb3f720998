#include "borsuk/families.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "borsuk/errors.hpp"
#include "borsuk/kernels.hpp"
#include "borsuk/solve.hpp"

namespace borsuk {

namespace {

std::uint64_t full_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

bool compatible(std::uint64_t mask, const std::vector<std::size_t>& cls, const SetFamily& fam,
                int needed) {
  for (auto j : cls)
    if (std::popcount(mask & fam[j].mask) < needed) return false;
  return true;
}

bool assign(const SetFamily& fam, std::size_t next, int needed, int parts,
            std::vector<std::vector<std::size_t>>& classes) {
  if (next == fam.size()) return true;
  const std::uint64_t mask = fam[next].mask;
  // Indexed: deeper levels may append classes and reallocate.
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (!compatible(mask, classes[c], fam, needed)) continue;
    classes[c].push_back(next);
    if (assign(fam, next + 1, needed, parts, classes)) return true;
    classes[c].pop_back();
  }
  // Classes are opened in first-use order, so one new class suffices.
  if (static_cast<int>(classes.size()) < parts) {
    classes.push_back({next});
    if (assign(fam, next + 1, needed, parts, classes)) return true;
    classes.pop_back();
  }
  return false;
}

void collect_sum_subsets(int n, int first, int remaining, int sum_left, std::uint64_t mask,
                         std::vector<std::uint64_t>& out) {
  if (remaining == 0) {
    if (sum_left == 0) out.push_back(mask);
    return;
  }
  for (int e = first; e <= n - remaining + 1; ++e) {
    // Smallest and largest sums reachable with `remaining` elements >= e.
    const int lo = remaining * e + remaining * (remaining - 1) / 2;
    const int hi = remaining * n - remaining * (remaining - 1) / 2;
    if (sum_left < lo) break;
    if (sum_left > hi) return;
    collect_sum_subsets(n, e + 1, remaining - 1, sum_left - e, mask | (std::uint64_t{1} << (e - 1)),
                        out);
  }
}

}  // namespace

Subset Subset::from_mask(std::uint64_t mask) {
  Subset s;
  s.mask = mask;
  s.size = std::popcount(mask);
  for (std::uint64_t m = mask; m; m &= m - 1) s.elem_sum += std::countr_zero(m) + 1;
  return s;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (std::uint64_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

bool lex_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    const int ea = std::countr_zero(a);
    const int eb = std::countr_zero(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

SetFamily::SetFamily(int n, std::vector<std::uint64_t> masks) : n_(n) {
  if (n < 0 || n > 63) throw PreconditionError("set family ground set must have 0..63 elements");
  for (auto m : masks)
    if (m & ~full_mask(n))
      throw PreconditionError("subset has elements outside [" + std::to_string(n) + "]");
  std::sort(masks.begin(), masks.end(), lex_less);
  if (std::adjacent_find(masks.begin(), masks.end()) != masks.end())
    throw PreconditionError("set family contains a duplicate member");
  members_.reserve(masks.size());
  for (auto m : masks) members_.push_back(Subset::from_mask(m));
}

SetFamily all_k_subsets(int n, int k) {
  if (k < 0 || k > n) throw PreconditionError("all_k_subsets: need 0 <= k <= n");
  std::vector<std::uint64_t> masks;
  if (k == 0) return SetFamily(n, {0});
  for (std::uint64_t m = (std::uint64_t{1} << k) - 1; !(m >> n);) {
    masks.push_back(m);
    const std::uint64_t c = m & -m;
    const std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return SetFamily(n, std::move(masks));
}

std::optional<IndexPair> first_t_intersecting_violation(const SetFamily& fam, int t) {
  if (t < 0) throw PreconditionError("t must be non-negative");
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (std::popcount(fam[i].mask & fam[j].mask) < t) return IndexPair{i, j};
  return std::nullopt;
}

std::optional<std::vector<std::vector<std::size_t>>> larman_cover(const SetFamily& fam, int t,
                                                                  int parts,
                                                                  LarmanOptions options) {
  if (parts < 0) throw PreconditionError("larman_cover: parts must be non-negative");
  if (auto bad = first_t_intersecting_violation(fam, t))
    throw PreconditionError("larman_cover: family is not " + std::to_string(t) +
                            "-intersecting (members " + std::to_string(bad->first) + ", " +
                            std::to_string(bad->second) + ")");
  // A cover by (t+1)-intersecting subfamilies shrinks to a partition because
  // the property is inherited by subfamilies, so both modes search
  // partitions.
  (void)options.allow_overlap;
  std::vector<std::vector<std::size_t>> classes;
  if (!assign(fam, 0, t + 1, parts, classes)) return std::nullopt;
  return classes;
}

LarmanExhaustiveReport larman_t1_exhaustive(int n) {
  if (n < 2 || n > 7) throw PreconditionError("larman_t1_exhaustive: n must be in 2..7");
  const auto pairs = all_k_subsets(n, 2);
  const std::size_t m = pairs.size();
  LarmanExhaustiveReport report;
  report.n = n;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << m); ++choice) {
    std::vector<std::uint64_t> masks;
    bool intersecting = true;
    for (std::size_t i = 0; i < m && intersecting; ++i) {
      if (!((choice >> i) & 1u)) continue;
      for (auto other : masks)
        if (!(other & pairs[i].mask)) {
          intersecting = false;
          break;
        }
      masks.push_back(pairs[i].mask);
    }
    if (!intersecting) continue;
    ++report.families_checked;
    const SetFamily fam(n, masks);
    if (!larman_cover(fam, 1, n)) {
      if (report.violations++ == 0) report.witness = masks;
    }
  }
  return report;
}

SignVector SignVector::negated() const { return SignVector{n, bits ^ full_mask(n)}; }

int inner_product(const SignVector& x, const SignVector& y) {
  if (x.n != y.n) throw PreconditionError("inner_product: length mismatch");
  return x.n - 2 * std::popcount(x.bits ^ y.bits);
}

std::vector<SignVector> all_sign_vectors(int n) {
  if (n < 1 || n > 30) throw PreconditionError("all_sign_vectors: n must be in 1..30");
  std::vector<SignVector> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back({n, m});
  return out;
}

std::vector<SignVector> balanced_sign_vectors(int n) {
  if (n < 4 || n % 4 != 0 || n > 60)
    throw PreconditionError("balanced_sign_vectors: n must be a positive multiple of 4, got " +
                            std::to_string(n));
  std::vector<SignVector> out;
  const SetFamily halves = all_k_subsets(n, n / 2);
  for (const auto& s : halves.members()) out.push_back({n, s.mask});
  std::sort(out.begin(), out.end(),
            [](const SignVector& a, const SignVector& b) { return a.bits < b.bits; });
  return out;
}

Graph orthogonality_graph(std::span<const SignVector> vs) {
  return kernels::orthogonality_graph_parallel(vs);
}

FwExperiment fw_independence_experiment(int n, std::optional<std::uint64_t> node_limit) {
  if (n < 2 || n % 2 != 0 || n > 16)
    throw PreconditionError("fw_independence_experiment: n must be even and in 2..16");
  const auto vs = all_sign_vectors(n);
  const Graph g = orthogonality_graph(vs);
  const std::uint64_t limit = node_limit.value_or(n <= 8 ? 200'000'000 : 2'000'000);
  const SolveResult r = max_independent_set(g, limit);
  FwExperiment e;
  e.n = n;
  e.vertices = vs.size();
  e.alpha = r.value;
  e.alpha_upper = r.upper;
  e.optimal = r.optimal;
  e.ratio = static_cast<double>(r.value) / static_cast<double>(vs.size());
  e.reference = std::pow(1.203, -n);
  e.witness = r.witness;
  e.nodes = r.nodes;
  return e;
}

PairCountReport pair_count(const SetFamily& f, const SetFamily& g, int inter_size,
                           std::optional<int> sum_target) {
  if (f.n() != g.n()) throw PreconditionError("pair_count: families over different ground sets");
  PairCountReport r;
  r.f_size = f.size();
  r.g_size = g.size();
  r.inter_size = inter_size;
  r.sum_target = sum_target;
  r.pairs = kernels::pair_count_parallel(f, g, inter_size, sum_target);
  const double all = static_cast<double>(f.size()) * static_cast<double>(g.size());
  r.density = all > 0 ? static_cast<double>(r.pairs) / all : 0.0;
  return r;
}

SetFamily sum_restricted_family(int n, int size, int sum) {
  if (n < 0 || n > 63) throw PreconditionError("sum_restricted_family: n must be in 0..63");
  if (size < 0 || size > n) throw PreconditionError("sum_restricted_family: need 0 <= size <= n");
  std::vector<std::uint64_t> masks;
  collect_sum_subsets(n, 1, size, sum, 0, masks);
  return SetFamily(n, std::move(masks));
}

}  // namespace borsuk
