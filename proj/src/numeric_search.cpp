#include "borsuk/numeric_search.hpp"

#include <omp.h>

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "borsuk/errors.hpp"
#include "borsuk/rng.hpp"

namespace borsuk {

namespace {

// Unit vectors of a regular d-simplex centred at the origin, embedded in the
// hyperplane Σ = 0 of R^{d+1}.
std::vector<Eigen::VectorXd> simplex_vertices(int d) {
  const double scale = std::sqrt(static_cast<double>(d + 1) / d);
  std::vector<Eigen::VectorXd> v(d + 1);
  for (int i = 0; i <= d; ++i) {
    v[i] = Eigen::VectorXd::Constant(d + 1, -1.0 / (d + 1));
    v[i](i) += 1.0;
    v[i] *= scale;
  }
  return v;
}

// Points of the cone over vertex 0 are Σ_{i>=1} s_i²(−v_i); squaring keeps
// the coefficients non-negative without explicit constraints.
struct Cone {
  Eigen::MatrixXd gens;  // columns −v_1 … −v_d

  explicit Cone(int d) : gens(d + 1, d) {
    const auto v = simplex_vertices(d);
    for (int i = 1; i <= d; ++i) gens.col(i - 1) = -v[i];
  }

  Eigen::VectorXd point(const Eigen::VectorXd& s) const { return gens * s.cwiseProduct(s); }
};

// f(s,t) = <u(s), u(t)> with u = w/|w|; the chord on a sphere of radius 1/2
// is 0.5·sqrt(2 − 2f).
double cone_inner(const Cone& cone, const Eigen::VectorXd& s, const Eigen::VectorXd& t,
                  Eigen::VectorXd* gs, Eigen::VectorXd* gt) {
  const Eigen::VectorXd ws = cone.point(s), wt = cone.point(t);
  const double ns = ws.norm(), nt = wt.norm();
  const Eigen::VectorXd a = ws / ns, b = wt / nt;
  const double f = a.dot(b);
  if (gs) {
    const Eigen::VectorXd pa = (b - f * a) / ns;  // d<u(s),b>/dw
    *gs = 2.0 * s.cwiseProduct(cone.gens.transpose() * pa);
  }
  if (gt) {
    const Eigen::VectorXd pb = (a - f * b) / nt;
    *gt = 2.0 * t.cwiseProduct(cone.gens.transpose() * pb);
  }
  return f;
}

Eigen::VectorXd random_coefficients(Rng& rng, int d) {
  Eigen::VectorXd s(d);
  for (int i = 0; i < d; ++i) s(i) = rng.normal();
  if (s.squaredNorm() < 1e-12) s.setOnes();
  return s / s.norm();
}

// Projected to the unit sphere after every step so the scale stays fixed.
double minimize_inner(const Cone& cone, Eigen::VectorXd s, Eigen::VectorXd t,
                      const PartitionOptions& opt) {
  Eigen::VectorXd gs, gt;
  double f = cone_inner(cone, s, t, &gs, &gt);
  for (int it = 0; it < opt.max_iterations; ++it) {
    const double g2 = gs.squaredNorm() + gt.squaredNorm();
    if (std::sqrt(g2) < opt.gradient_tolerance) break;
    double step = 1.0;
    bool moved = false;
    while (step > 1e-16) {
      Eigen::VectorXd s2 = s - step * gs, t2 = t - step * gt;
      s2 /= s2.norm();
      t2 /= t2.norm();
      if (cone.point(s2).norm() < 1e-300 || cone.point(t2).norm() < 1e-300) {
        step *= 0.5;
        continue;
      }
      Eigen::VectorXd ngs, ngt;
      const double f2 = cone_inner(cone, s2, t2, &ngs, &ngt);
      if (f2 <= f - 1e-4 * step * g2) {
        s = s2;
        t = t2;
        f = f2;
        gs = ngs;
        gt = ngt;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return f;
}

double chord_from_inner(double f) { return 0.5 * std::sqrt(std::max(0.0, 2.0 - 2.0 * f)); }

// Barycentric grid over the generators, projected to the sphere.
void mesh_check(const Cone& cone, int d, int resolution, double& best, double& gap) {
  std::vector<Eigen::VectorXd> pts;
  std::vector<std::vector<int>> coords;
  std::vector<int> lam(d, 0);
  // Enumerate compositions of `resolution` into d non-negative parts.
  auto emit = [&]() {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(d + 1);
    for (int i = 0; i < d; ++i) w += (static_cast<double>(lam[i]) / resolution) * cone.gens.col(i);
    pts.push_back(w / w.norm());
    coords.push_back(lam);
  };
  if (d == 1) {
    lam[0] = resolution;
    emit();
  } else if (d == 2) {
    for (int a = 0; a <= resolution; ++a) {
      lam = {a, resolution - a};
      emit();
    }
  } else {
    for (int a = 0; a <= resolution; ++a)
      for (int b = 0; a + b <= resolution; ++b) {
        lam = {a, b, resolution - a - b};
        emit();
      }
  }
  double min_inner = 1.0;
  const auto m = static_cast<std::int64_t>(pts.size());
#pragma omp parallel for reduction(min : min_inner) schedule(dynamic, 16)
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = i + 1; j < m; ++j) min_inner = std::min(min_inner, pts[i].dot(pts[j]));
  best = std::max(0.5, chord_from_inner(min_inner));
  // Grid neighbours differ by moving one unit between two coordinates.
  double edge = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      int l1 = 0;
      for (int k = 0; k < d; ++k) l1 += std::abs(coords[i][k] - coords[j][k]);
      if (l1 == 2) edge = std::max(edge, 0.5 * (pts[i] - pts[j]).norm());
    }
  gap = 2.0 * edge;
}

double residual_jacobian(const NormSpec& norm, const Eigen::VectorXd& x, int d, int size,
                         Eigen::VectorXd& r, Eigen::MatrixXd& j) {
  const int m = size * (size - 1) / 2;
  r.resize(m);
  j.setZero(m, static_cast<Eigen::Index>(size) * d);
  int row = 0;
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b, ++row) {
      const double* pa = x.data() + a * d;
      const double* pb = x.data() + b * d;
      const double dist = norm.distance(pa, pb, d);
      r(row) = dist - 1.0;
      for (int k = 0; k < d; ++k) {
        const double delta = pa[k] - pb[k];
        double g = 0;
        if (norm.is_infinity()) {
          g = (std::abs(delta) == dist && dist > 0) ? (delta > 0 ? 1.0 : -1.0) : 0.0;
        } else if (norm.exponent() == 1.0) {
          g = delta > 0 ? 1.0 : (delta < 0 ? -1.0 : 0.0);
        } else if (dist > 0) {
          const double p = norm.exponent();
          g = (delta > 0 ? 1.0 : -1.0) * std::pow(std::abs(delta) / dist, p - 1.0);
        }
        j(row, a * d + k) = g;
        j(row, b * d + k) = -g;
      }
      if (norm.is_infinity()) {
        // Keep a single active coordinate when several tie.
        bool seen = false;
        for (int k = 0; k < d; ++k) {
          if (j(row, a * d + k) == 0) continue;
          if (seen) {
            j(row, a * d + k) = 0;
            j(row, b * d + k) = 0;
          }
          seen = true;
        }
      }
    }
  return r.squaredNorm();
}

// Levenberg–Marquardt on the residuals ‖x_a − x_b‖_p − 1.
Eigen::VectorXd levenberg_marquardt(const NormSpec& norm, Eigen::VectorXd x, int d, int size,
                                    int max_iterations) {
  Eigen::VectorXd r, r2;
  Eigen::MatrixXd j, j2;
  double cost = residual_jacobian(norm, x, d, size, r, j);
  double lambda = 1e-3;
  for (int it = 0; it < max_iterations && cost > 1e-30; ++it) {
    const Eigen::MatrixXd jtj = j.transpose() * j;
    const Eigen::VectorXd jtr = j.transpose() * r;
    bool improved = false;
    while (lambda < 1e12) {
      Eigen::MatrixXd a = jtj;
      a.diagonal().array() += lambda;
      const Eigen::VectorXd step = a.ldlt().solve(-jtr);
      const Eigen::VectorXd trial = x + step;
      const double trial_cost = residual_jacobian(norm, trial, d, size, r2, j2);
      if (trial_cost < cost) {
        x = trial;
        cost = trial_cost;
        r.swap(r2);
        j.swap(j2);
        lambda = std::max(lambda / 3.0, 1e-12);
        improved = true;
        break;
      }
      lambda *= 4.0;
    }
    if (!improved) break;
  }
  return x;
}

std::vector<std::vector<double>> unpack(const Eigen::VectorXd& x, int d, int size) {
  std::vector<std::vector<double>> pts(size, std::vector<double>(d));
  for (int a = 0; a < size; ++a)
    for (int k = 0; k < d; ++k) pts[a][k] = x(a * d + k);
  return pts;
}

}  // namespace

PartitionDiameterReport simplex_voronoi_piece_diameter(int d, PartitionOptions options) {
  if (d < 1 || d > 8) throw PreconditionError("simplex_voronoi_piece_diameter: d must be in 1..8");
  if (options.restarts < 1) throw PreconditionError("restarts must be positive");
  PartitionDiameterReport rep;
  rep.d = d;
  rep.restarts = options.restarts;
  rep.convergence_tolerance = options.gradient_tolerance;
  const Cone cone(d);

  // The apex (ball centre) is at distance 1/2 from every point of the cap.
  double best_chord = 0;
  if (d >= 2) {
    std::vector<double> minima(options.restarts);
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < options.restarts; ++r) {
      Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(r)));
      const auto s = random_coefficients(rng, d);
      const auto t = random_coefficients(rng, d);
      minima[r] = minimize_inner(cone, s, t, options);
    }
    best_chord = chord_from_inner(*std::min_element(minima.begin(), minima.end()));
  }
  rep.piece_diameter = std::max(0.5, best_chord);

  if (d <= 3) {
    mesh_check(cone, d, std::max(1, options.mesh_resolution), rep.mesh_diameter,
               rep.certified_mesh_gap);
    rep.mesh_certified = rep.piece_diameter >= rep.mesh_diameter - 1e-12 &&
                         rep.piece_diameter <= rep.mesh_diameter + rep.certified_mesh_gap;
    rep.confidence = rep.mesh_certified ? "certified-mesh" : "mesh-mismatch";
  } else {
    rep.confidence = "heuristic";
  }
  return rep;
}

LarmanTamvakisReference larman_tamvakis_reference(int d, LogBase base) {
  if (d < 2) throw PreconditionError("larman_tamvakis_reference: d must be >= 2");
  LarmanTamvakisReference r;
  r.d = d;
  r.base = base;
  const double lg = base == LogBase::Natural ? std::log(d) : std::log2(d);
  r.value = 1.0 - 1.5 * lg / d;
  r.note = std::string("two leading terms only; O(1/n) constant unknown; log base ") +
           (base == LogBase::Natural ? "e" : "2");
  return r;
}

SolveResult cube_cover_number(int n, int s2, NodeLimit node_limit) {
  if (n < 1 || s2 < 0) throw PreconditionError("cube_cover_number: need n >= 1 and s2 >= 0");
  if (n > 14) throw InstanceTooLarge("cube_cover_number: n <= 14 supported");
  const std::size_t size = std::size_t{1} << n;
  std::vector<Bitset> rows(size, Bitset(size));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if (std::popcount(a ^ b) > s2) rows[a].set(b);
  return chromatic_number(Graph(std::move(rows)), node_limit);
}

NormSpec NormSpec::p(double p) {
  if (std::isinf(p) && p > 0) return infinity();
  if (!(p >= 1.0)) throw PreconditionError("norm exponent must be >= 1");
  return NormSpec(p, false);
}

double NormSpec::distance(const double* a, const double* b, std::size_t d) const {
  if (infinity_) {
    double m = 0;
    for (std::size_t k = 0; k < d; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
  }
  if (p_ == 1.0) {
    double s = 0;
    for (std::size_t k = 0; k < d; ++k) s += std::abs(a[k] - b[k]);
    return s;
  }
  if (p_ == 2.0) {
    double s = 0;
    for (std::size_t k = 0; k < d; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(s);
  }
  double s = 0;
  for (std::size_t k = 0; k < d; ++k) s += std::pow(std::abs(a[k] - b[k]), p_);
  return std::pow(s, 1.0 / p_);
}

std::string NormSpec::to_string() const {
  if (infinity_) return "inf";
  std::ostringstream os;
  os << p_;
  return os.str();
}

EquilateralCandidate equilateral_search(const NormSpec& norm, int d, int size, std::uint64_t seed,
                                        EquilateralOptions options) {
  if (size < 2) throw PreconditionError("equilateral_search: size must be >= 2");
  if (d < 1) throw PreconditionError("equilateral_search: dimension must be >= 1");
  if (options.restarts < 1) throw PreconditionError("restarts must be positive");
  std::vector<Eigen::VectorXd> finals(options.restarts);
  std::vector<double> deviations(options.restarts);
#pragma omp parallel for schedule(dynamic, 1)
  for (int r = 0; r < options.restarts; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    Eigen::VectorXd x(static_cast<Eigen::Index>(size) * d);
    for (auto& c : x) c = rng.uniform(0.0, 1.0);
    finals[r] = levenberg_marquardt(norm, x, d, size, options.max_iterations);
    deviations[r] = equilateral_deviation(unpack(finals[r], d, size), norm);
  }
  EquilateralCandidate c;
  c.restarts = options.restarts;
  c.best_restart = static_cast<int>(std::min_element(deviations.begin(), deviations.end()) -
                                    deviations.begin());
  c.points = unpack(finals[c.best_restart], d, size);
  c.max_deviation = equilateral_deviation(c.points, norm);
  return c;
}

double equilateral_deviation(const std::vector<std::vector<double>>& points, const NormSpec& norm) {
  double worst = 0;
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (points[a].size() != points[b].size())
        throw PreconditionError("equilateral_deviation: dimension mismatch");
      const double dist = norm.distance(points[a].data(), points[b].data(), points[a].size());
      worst = std::max(worst, std::abs(dist - 1.0));
    }
  return worst;
}

}  // namespace borsuk
