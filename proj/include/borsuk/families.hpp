#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "borsuk/graph.hpp"

namespace borsuk {

/// Subset of [n] = {1..n}; bit i of the mask stands for element i+1.
struct Subset {
  std::uint64_t mask = 0;
  int size = 0;
  /// Σ of the (1-based) elements.
  int elem_sum = 0;

  static Subset from_mask(std::uint64_t mask);
  std::vector<int> elements() const;  // sorted, 1-based
  friend bool operator==(const Subset&, const Subset&) = default;
};

/// Lexicographic order on sorted element lists ({1} < {1,2} < {1,3} < {2}).
bool lex_less(std::uint64_t a, std::uint64_t b);

/// Family of distinct subsets of [n], kept in lexicographic order.
class SetFamily {
 public:
  SetFamily() = default;
  /// Sorts, rejects duplicates and masks outside [n]. n <= 63.
  SetFamily(int n, std::vector<std::uint64_t> masks);

  int n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  const Subset& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Subset>& members() const { return members_; }

 private:
  int n_ = 0;
  std::vector<Subset> members_;
};

/// All k-subsets of [n] in lexicographic order.
SetFamily all_k_subsets(int n, int k);

using IndexPair = std::pair<std::size_t, std::size_t>;

/// nullopt if every two distinct members share >= t elements, otherwise the
/// first violating pair (member indices, i < j).
std::optional<IndexPair> first_t_intersecting_violation(const SetFamily& fam, int t);
inline bool is_t_intersecting(const SetFamily& fam, int t) {
  return !first_t_intersecting_violation(fam, t);
}

struct LarmanOptions {
  /// Allow classes to overlap (a cover rather than a partition).
  bool allow_overlap = false;
};

/// Classes of member indices, each (t+1)-intersecting, at most `parts` of
/// them, found by exhaustive backtracking; nullopt iff none exists. Throws
/// PreconditionError if `fam` is not t-intersecting.
std::optional<std::vector<std::vector<std::size_t>>> larman_cover(
    const SetFamily& fam, int t, int parts, LarmanOptions options = {});

struct LarmanExhaustiveReport {
  int n = 0;
  std::uint64_t families_checked = 0;
  std::uint64_t violations = 0;
  /// Masks of the first uncoverable family, if any.
  std::vector<std::uint64_t> witness;
};

/// Every intersecting family of 2-subsets of [n] checked for a cover by n
/// 2-intersecting subfamilies.
LarmanExhaustiveReport larman_t1_exhaustive(int n);

/// ±1 vector of length n; bit i set means entry i is −1.
struct SignVector {
  int n = 0;
  std::uint64_t bits = 0;

  int entry(int i) const { return ((bits >> i) & 1u) ? -1 : 1; }
  SignVector negated() const;
  friend bool operator==(const SignVector&, const SignVector&) = default;
};

/// n − 2·popcount(x XOR y). Throws on length mismatch.
int inner_product(const SignVector& x, const SignVector& y);

/// All 2^n sign vectors in increasing mask order (n <= 30).
std::vector<SignVector> all_sign_vectors(int n);

/// The C(n, n/2) vectors with exactly n/2 entries −1, increasing mask
/// order. n must be divisible by 4.
std::vector<SignVector> balanced_sign_vectors(int n);

/// Edge iff the inner product is exactly zero.
Graph orthogonality_graph(std::span<const SignVector> vs);

struct FwExperiment {
  int n = 0;
  std::size_t vertices = 0;
  std::int64_t alpha = 0;  // best known independent set size (lower bound)
  std::int64_t alpha_upper = 0;
  bool optimal = false;
  double ratio = 0;      // alpha / 2^n
  double reference = 0;  // 1.203^-n
  std::vector<std::size_t> witness;
  std::uint64_t nodes = 0;
};

/// α of the orthogonality graph on all 2^n sign vectors (n even).
FwExperiment fw_independence_experiment(int n, std::optional<std::uint64_t> node_limit = {});

struct PairCountReport {
  std::size_t f_size = 0;
  std::size_t g_size = 0;
  int inter_size = 0;
  std::optional<int> sum_target;
  std::uint64_t pairs = 0;  // ordered, A != B
  double density = 0;       // pairs / (|F||G|)
};

PairCountReport pair_count(const SetFamily& f, const SetFamily& g, int inter_size,
                           std::optional<int> sum_target = {});

/// Every subset of [n] with the given size and element sum.
SetFamily sum_restricted_family(int n, int size, int sum);

}  // namespace borsuk
