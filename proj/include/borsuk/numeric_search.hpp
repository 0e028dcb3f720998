#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "borsuk/solve.hpp"

namespace borsuk {

struct PartitionOptions {
  int restarts = 32;
  std::uint64_t seed = 1;
  /// Barycentric grid resolution per point for the d <= 3 mesh check.
  int mesh_resolution = 60;
  double gradient_tolerance = 1e-9;
  int max_iterations = 20000;
};

/// Diameter of one cell of the simplex-Voronoi partition of a ball of
/// diameter 1 (all d+1 cells are congruent).
struct PartitionDiameterReport {
  int d = 0;
  double piece_diameter = 0;
  int restarts = 0;
  double convergence_tolerance = 0;
  /// Mesh maximum and the mesh's covering bound (d <= 3 only).
  bool mesh_certified = false;
  double mesh_diameter = 0;
  double certified_mesh_gap = 0;
  /// "certified-mesh" for d <= 3, "heuristic" above.
  std::string confidence;
};

/// 1 <= d <= 8.
PartitionDiameterReport simplex_voronoi_piece_diameter(int d, PartitionOptions options = {});

enum class LogBase { Natural, Binary };

struct LarmanTamvakisReference {
  int d = 0;
  double value = 0;
  LogBase base = LogBase::Natural;
  std::string note;
};

/// 1 − (3/2)·log d / d: the two leading terms of the lower bound on u(d).
LarmanTamvakisReference larman_tamvakis_reference(int d, LogBase base = LogBase::Natural);

/// Fewest parts of squared diameter <= s2 covering {0,1}^n: χ of the graph
/// joining points at Hamming distance > s2.
SolveResult cube_cover_number(int n, int s2, NodeLimit node_limit = {});

/// ℓ_p norm, p in [1, ∞].
class NormSpec {
 public:
  static NormSpec p(double p);
  static NormSpec infinity() { return NormSpec(0, true); }

  bool is_infinity() const { return infinity_; }
  double exponent() const { return p_; }
  double distance(const double* a, const double* b, std::size_t d) const;
  std::string to_string() const;

 private:
  NormSpec(double p, bool inf) : p_(p), infinity_(inf) {}
  double p_;
  bool infinity_;
};

struct EquilateralCandidate {
  std::vector<std::vector<double>> points;
  double max_deviation = 0;
  int best_restart = -1;
  int restarts = 0;
};

struct EquilateralOptions {
  int restarts = 64;
  int max_iterations = 500;
};

/// Multi-start minimization of Σ_{i<j}(‖x_i − x_j‖_p − 1)².
EquilateralCandidate equilateral_search(const NormSpec& norm, int d, int size, std::uint64_t seed,
                                        EquilateralOptions options = {});

/// max |‖x_i − x_j‖_p − 1| recomputed from scratch.
double equilateral_deviation(const std::vector<std::vector<double>>& points, const NormSpec& norm);

}  // namespace borsuk
