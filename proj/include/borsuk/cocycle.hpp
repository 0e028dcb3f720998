#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "borsuk/bitset.hpp"
#include "borsuk/exact_geom.hpp"
#include "borsuk/rational.hpp"

namespace borsuk {

/// k-uniform hypergraph on vertices 0..n-1 (n <= 64), edges as bitmasks in
/// lexicographic order of their sorted vertex lists.
class UniformHypergraph {
 public:
  UniformHypergraph() = default;
  /// Sorts and validates: popcount k, inside [0,n), duplicate-free.
  UniformHypergraph(int n, int k, std::vector<std::uint64_t> edges);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<std::uint64_t>& edges() const { return edges_; }
  bool contains(std::uint64_t e) const;

  friend bool operator==(const UniformHypergraph&, const UniformHypergraph&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<std::uint64_t> edges_;
};

/// Symmetric difference of edge sets (same n, k).
UniformHypergraph symmetric_difference(const UniformHypergraph& a, const UniformHypergraph& b);

/// All k-subsets of {0..n-1} as masks, lexicographic.
std::vector<std::uint64_t> k_subset_masks(int n, int k);
/// Position of `mask` in k_subset_masks(n, popcount(mask)).
std::size_t k_subset_rank(std::uint64_t mask, int n);

/// k-sets containing an odd number of edges of the (k−1)-uniform H.
UniformHypergraph coboundary(const UniformHypergraph& h);

/// nullopt if every (k+1)-set spans an even number of edges; otherwise the
/// lexicographically first (k+1)-set that does not.
std::optional<std::uint64_t> cocycle_violation(const UniformHypergraph& g);
inline bool is_cocycle(const UniformHypergraph& g) { return !cocycle_violation(g); }

/// Square matrix with entries ±1, row-major.
class PmMatrix {
 public:
  PmMatrix() = default;
  /// Throws PreconditionError on entries other than ±1 or a non-square size.
  PmMatrix(int m, std::vector<int> entries);

  int m() const { return m_; }
  int operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r * m_ + c)]; }
  const std::vector<int>& entries() const { return entries_; }

 private:
  int m_ = 0;
  std::vector<int> entries_;
};

/// de Caen–Kreher–Wiseman 4-uniform hypergraph on 2m vertices (rows 0..m-1,
/// columns m..2m-1): all 3-row+1-column and 1-row+3-column quadruples, plus
/// the 2+2 quadruples whose four entries multiply to −1.
UniformHypergraph dckw(const PmMatrix& matrix);

/// 2·m·C(m,3) + C(m,2)²/2: expected edge count over uniform random matrices.
Rational expected_dckw_edges(int m);

/// nullopt if no (k+1)-set has all of its k-subsets present, otherwise the
/// first complete one.
std::optional<std::uint64_t> turan_violation(const UniformHypergraph& g);
inline bool turan_check(const UniformHypergraph& g) { return !turan_violation(g); }

/// Reduced GF(2) basis of the cocycle space of k-uniform hypergraphs on n
/// vertices, as indicator vectors over k_subset_masks(n, k). Built by
/// Gaussian elimination of the coboundaries of all single (k−1)-sets.
std::vector<Bitset> cocycle_space_basis(int n, int k);

struct ExtremalOptions {
  /// Exhaustive cocycle enumeration up to this basis dimension.
  int max_cocycle_dimension = 20;
  /// Branch-and-bound node budget for T(n,k,k+1).
  std::uint64_t turan_node_limit = 200'000'000;
  /// Order vertices by degree to break symmetry in the Turán search.
  bool symmetry_breaking = false;
};

struct TuranReport {
  int n = 0;
  int k = 0;
  std::size_t cocycle_dimension = 0;
  std::size_t f_nk = 0;  // max cocycle edges found
  bool f_optimal = false;
  std::vector<std::uint64_t> f_witness;
  std::uint64_t cocycles_enumerated = 0;
  std::size_t t_nk = 0;  // max K^k_{k+1}-free edges found
  std::size_t t_upper = 0;
  bool t_optimal = false;
  std::vector<std::uint64_t> t_witness;
  std::uint64_t t_nodes = 0;
  /// 0.6916·C(n,4) for k = 4 (flag-algebra reference constant), else 0.
  double peled_reference = 0;
};

/// f(n,k) by cocycle-space enumeration and T(n,k,k+1) by branch-and-bound.
/// k must be even.
TuranReport extremal_numbers(int n, int k, ExtremalOptions options = {});

struct CocycleSignSet {
  int n = 0;
  int k = 0;
  /// f(T) for every k-subset T, indexed like k_subset_masks(n, k).
  std::vector<int> values;
  /// {T : f(T) = −1} equals coboundary({S : g(S) = −1}).
  bool certified = false;
};

/// f(T) = Π g(S) over the (k−1)-subsets S ⊂ T; g indexed like
/// k_subset_masks(n, k−1).
CocycleSignSet cocycle_sign_set(int n, int k, std::span<const int> g);

struct CandidateOptions {
  bool merge_antipodes = false;
};

/// All 3-cocycle sign vectors (k = 4) as ±1 points in dimension C(n,4).
/// n <= 6; larger instances throw InstanceTooLarge.
PointSet cocycle_candidate_points(int n, CandidateOptions options = {});

}  // namespace borsuk
