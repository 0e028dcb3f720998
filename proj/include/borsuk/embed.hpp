#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "borsuk/exact_geom.hpp"
#include "borsuk/families.hpp"

namespace borsuk {

/// x^{⊗k}: entry at multi-index (i1..ik) (row-major, i1 slowest) is
/// x_{i1}·…·x_{ik}.
struct TensorPoint {
  int n = 0;
  int k = 0;
  std::vector<std::int64_t> coords;
};

TensorPoint tensor_power(const SignVector& x, int k);

/// 2n^k − 2⟨x,y⟩^k.
std::int64_t embedded_squared_distance(const SignVector& x, const SignVector& y, int k);

/// Coordinate-wise squared distance of two tensor points.
std::int64_t tensor_squared_distance(const TensorPoint& a, const TensorPoint& b);

/// Tensor images of sign vectors with antipodes merged when k is even.
struct EmbeddedSet {
  PointSet points;
  /// Point i is the image of representatives[i] (the smaller mask of x, −x).
  std::vector<SignVector> representatives;
  int n = 0;
  int k = 0;
  /// n(n+1)/2 for the symmetric reduced embedding (reported only).
  std::size_t reduced_dimension = 0;
};

/// Tensor squares of the balanced vectors (n divisible by 4).
EmbeddedSet c1_set(int n);
/// Tensor squares of all sign vectors (n >= 2).
EmbeddedSet c2_set(int n);
/// Tensor k-th powers of all sign vectors of length n.
EmbeddedSet tensor_set(int n, int k);

/// Orthogonality graph on the representatives (well defined after merging
/// since ⟨−x,y⟩ = −⟨x,y⟩).
Graph merged_orthogonality_graph(const std::vector<SignVector>& representatives);

/// Seeded sample of C3: tensor squares of exact rational unit vectors
/// obtained by inverse stereographic projection. A finite sample of an
/// infinite set, i.e. approximate as a model of C3.
PointSet c3_sample(int n, std::size_t count, std::uint64_t seed);

}  // namespace borsuk
