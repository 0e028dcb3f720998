#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "borsuk/cocycle.hpp"
#include "borsuk/exact_geom.hpp"
#include "borsuk/graph.hpp"
#include "borsuk/rng.hpp"

namespace borsuk::corpus {

/// n distinct points with integer coordinates in [-range, range]^dim,
/// divided by a common random denominator in [1, max_den]. Small ranges
/// produce many distance ties.
PointSet random_lattice_set(Rng& rng, std::size_t dim, std::size_t n, int range, int max_den = 1);

/// e_1..e_{d+1} in Q^{d+1}: a regular d-simplex with squared edge 2.
PointSet regular_simplex(std::size_t d);
/// (0,0,0),(1,1,0),(1,0,1),(0,1,1).
PointSet regular_tetrahedron();
PointSet unit_square();
/// {0,1}^d.
PointSet cube(std::size_t d);
/// Center and six neighbours of the hexagonal lattice in the plane
/// x+y+z = 0 of Q^3 (squared nearest-neighbour distance 2).
PointSet hexagonal_patch();

/// An odd polygon with exact equal diagonals in the plane x+y+z = 0 of Q^3:
/// its diameter graph is the n-cycle. Found by a deterministic search over
/// Eisenstein integers of norm 53599 (steps near the regular star angles).
/// Available for n in {3, 7, 9, 11}; throws PreconditionError otherwise.
PointSet hexagonal_odd_polygon(std::size_t n);

/// Erdős–Rényi G(n, p).
Graph random_graph(Rng& rng, std::size_t n, double p);
Graph petersen_graph();
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

PmMatrix random_pm_matrix(Rng& rng, int m);
PmMatrix all_ones_matrix(int m);

/// Each k-subset of {0..n-1} kept with probability p.
UniformHypergraph random_hypergraph(Rng& rng, int n, int k, double p);

}  // namespace borsuk::corpus
