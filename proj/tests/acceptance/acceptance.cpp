// Acceptance suite: one PASS/FAIL/SKIP line per criterion. Exit status is
// non-zero iff some criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "borsuk/cocycle.hpp"
#include "borsuk/corpus.hpp"
#include "borsuk/embed.hpp"
#include "borsuk/exact_geom.hpp"
#include "borsuk/io.hpp"
#include "borsuk/numeric_search.hpp"
#include "borsuk/rigidity.hpp"
#include "borsuk/solve.hpp"
#include "borsuk/verify.hpp"

using namespace borsuk;
using nlohmann::json;

namespace {

enum class Outcome { Pass, Fail, Skip };

struct Verdict {
  Outcome outcome = Outcome::Fail;
  std::string summary;
};

Verdict verdict(bool ok, std::string summary) {
  return {ok ? Outcome::Pass : Outcome::Fail, std::move(summary)};
}

void persist(const SuiteResult& r) {
  if (r.witnesses.empty()) return;
  std::filesystem::create_directories("acceptance_witnesses");
  std::ofstream out("acceptance_witnesses/" + r.name + ".json");
  out << json(r.witnesses).dump(2) << "\n";
}

SuiteResult suite(const std::string& name, std::optional<int> trials = {}, std::optional<int> n_max = {}) {
  SuiteOptions opt;
  opt.trials = trials;
  opt.n_max = n_max;
  auto r = run_suite(name, opt);
  persist(r);
  return r;
}

std::string fmt(double x, int digits = 6) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

Verdict hopf_pannwitz() {
  const auto r = suite("hopf-pannwitz", 200, 12);
  bool polygons = true;
  for (const auto& [n, edges] : r.details["odd_polygon_edges"].items())
    polygons = polygons && edges.get<int>() == std::stoi(n);
  return verdict(r.passed() && polygons && r.trials == 200,
                 std::to_string(r.trials) + " planar sets, " + std::to_string(r.violations) +
                     " violations; odd polygons attain n: " + (polygons ? "yes" : "no"));
}

Verdict heppes_revesz() {
  const auto r = suite("heppes-revesz", 200, 10);
  const int tet = r.details["tetrahedron_edges"].get<int>();
  return verdict(r.passed() && tet == 6,
                 std::to_string(r.trials) + " spatial sets, " + std::to_string(r.violations) +
                     " violations; tetrahedron edges " + std::to_string(tet));
}

Verdict top_faces() {
  const auto r = suite("schur-faces");
  const int top = r.details["max_top_faces"].get<int>();
  return verdict(r.passed() && top <= 1,
                 std::to_string(r.trials) + " sets in dims 2-4, max top faces " + std::to_string(top));
}

Verdict tensor_law() {
  const auto r = suite("tensor-law");
  const bool pipeline = r.details.value("c1_pipeline_8", false);
  std::int64_t law = 0;
  for (const auto& [key, count] : r.details["law_violations"].items()) law += count.get<std::int64_t>();
  return verdict(r.passed() && law == 0 && pipeline,
                 "law violations " + std::to_string(law) + " over " +
                     std::to_string(r.details["law_violations"].size()) + " (n, k) cases" +
                     ", c1(8) diameter graph = merged orthogonality graph: " + (pipeline ? "yes" : "no"));
}

Verdict cocycles() {
  const auto cob = suite("coboundary", 1000);
  const auto d = suite("dckw", 500);
  const std::size_t ones = dckw(corpus::all_ones_matrix(4)).size();
  const Rational expected = expected_dckw_edges(4);
  const double mean = d.details["sample_mean"].get<double>();
  const double se = d.details["standard_error"].get<double>();
  const double frac = d.details["fraction_m64"].get<double>();
  const bool ok = cob.passed() && cob.trials == 1000 && d.passed() && ones == 32 && expected == 50 &&
                  std::abs(mean - 50) <= 4 * se && std::abs(frac - 11.0 / 16.0) <= 0.02;
  return verdict(ok, "1000 coboundaries: " + std::to_string(cob.violations) + " violations; all-ones 4x4 " +
                         std::to_string(ones) + " edges; E[edges] " + expected.get_str() + "; mean " +
                         fmt(mean) + " (se " + fmt(se, 3) + "); m=64 fraction " + fmt(frac, 5));
}

Verdict extremal() {
  const auto r5 = extremal_numbers(5, 4);
  const auto r6 = extremal_numbers(6, 4);
  const bool ok = r5.f_optimal && r5.t_optimal && r6.f_optimal && r6.t_optimal && r5.f_nk == 4 &&
                  r5.t_nk == 4 && r6.f_nk == r6.t_nk;
  return verdict(ok, "f(5,4)=" + std::to_string(r5.f_nk) + " T(5,4,5)=" + std::to_string(r5.t_nk) +
                         "; f(6,4)=" + std::to_string(r6.f_nk) + " T(6,4,5)=" + std::to_string(r6.t_nk));
}

Verdict solvers() {
  const auto r = suite("solver-oracle", 100, 12);
  const int chi = r.details["petersen_chi"].get<int>();
  const int alpha = r.details["petersen_alpha"].get<int>();
  return verdict(r.passed() && chi == 3 && alpha == 4,
                 std::to_string(r.trials) + " graphs, " + std::to_string(r.violations) +
                     " disagreements; Petersen chi " + std::to_string(chi) + ", alpha " + std::to_string(alpha));
}

Verdict rigidity() {
  const auto r = suite("rigidity", 500);
  const bool tri = r.details["triangle_stress_free"].get<bool>();
  const int k4 = r.details["k4_stress_dim"].get<int>();
  return verdict(r.passed() && tri && k4 == 1,
                 "triangle stress-free " + std::string(tri ? "yes" : "no") + ", K4 stress dim " +
                     std::to_string(k4) + "; " + std::to_string(r.trials) + " harness runs, " +
                     std::to_string(r.violations) + " violations, " +
                     r.details["stress_free_sets"].dump() + " stress-free");
}

Verdict ball_partition() {
  bool ok = true;
  std::string values;
  for (int d = 1; d <= 8; ++d) {
    const auto r = simplex_voronoi_piece_diameter(d);
    if (d == 1) ok = ok && r.piece_diameter == 0.5;
    if (d == 2) ok = ok && std::abs(r.piece_diameter - std::sqrt(3.0) / 2) <= 1e-6;
    ok = ok && r.piece_diameter < 1 - 1e-3;
    values += (d > 1 ? " " : "") + fmt(r.piece_diameter, 7);
  }
  return verdict(ok, "u(1..8) = " + values);
}

Verdict equilateral() {
  bool ok = true;
  double worst = 0;
  for (int d = 1; d <= 5; ++d) {
    const auto c = equilateral_search(NormSpec::p(2), d, d + 1, 1);
    const double dev = equilateral_deviation(c.points, NormSpec::p(2));
    worst = std::max(worst, dev);
    ok = ok && dev < 1e-8;
  }
  const auto sq = equilateral_search(NormSpec::infinity(), 2, 4, 1);
  const double sq_dev = equilateral_deviation(sq.points, NormSpec::infinity());
  const auto cross = equilateral_search(NormSpec::p(1), 2, 4, 1);
  const double cross_dev = equilateral_deviation(cross.points, NormSpec::p(1));
  ok = ok && sq_dev < 1e-8 && cross_dev < 1e-8 && cross.points.size() == 4;
  return verdict(ok, "l2 simplices d=1..5 max dev " + fmt(worst, 3) + "; l_inf square dev " +
                         fmt(sq_dev, 3) + "; l1 four points (= 2n at n=2) dev " + fmt(cross_dev, 3));
}

Verdict larman() {
  const auto r = suite("larman-t1", {}, 5);
  return verdict(r.passed(), std::to_string(r.trials) + " intersecting families for n<=5, " +
                                 std::to_string(r.violations) + " uncoverable");
}

Verdict two_distance_416() {
  const char* path = std::getenv("BORSUK_LAB_TWO_DISTANCE_416");
  if (!path || !*path) return {Outcome::Skip, "BORSUK_LAB_TWO_DISTANCE_416 not set; dataset not supplied"};
  const PointSet ps = io::load_points(path);
  const auto two = two_distance_check(ps);
  const std::size_t adim = affine_dimension(ps);
  const Graph g = diameter_graph(ps);
  const std::uint64_t limit = 20'000'000;
  const auto alpha = max_independent_set(g, limit);
  const auto omega = max_clique(g, limit);
  const std::int64_t n = static_cast<std::int64_t>(ps.size());
  const std::int64_t by_alpha = (n + alpha.upper - 1) / alpha.upper;
  const std::int64_t bound = std::max(omega.lower, by_alpha);
  const bool certified = alpha.optimal && omega.optimal;
  const bool shape = ps.size() == 416 && adim == 65 && two.has_value();
  // A bound below 83 is acceptable only when reported as non-optimal.
  const bool bound_ok = bound >= 83 || !certified;
  return verdict(shape && bound_ok,
                 std::to_string(ps.size()) + " points, affine dim " + std::to_string(adim) +
                     ", two-distance " + (two ? "yes" : "no") + "; partition lower bound " +
                     std::to_string(bound) + " (alpha in [" + std::to_string(alpha.value) + ", " +
                     std::to_string(alpha.upper) + "], optimal=" + (certified ? "true" : "false") + ")");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "hopf-pannwitz", 10, hopf_pannwitz},
      {2, "heppes-revesz", 60, heppes_revesz},
      {3, "top-face-uniqueness", 300, top_faces},
      {4, "tensor-law", 30, tensor_law},
      {5, "cocycle-machinery", 60, cocycles},
      {6, "extremal-equality", 600, extremal},
      {7, "solver-oracle", 300, solvers},
      {8, "rigidity", 600, rigidity},
      {9, "ball-partition", 300, ball_partition},
      {10, "equilateral-search", 120, equilateral},
      {11, "larman-t1", 600, larman},
      {12, "two-distance-416", 3600, two_distance_416},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {Outcome::Fail, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.outcome == Outcome::Pass && secs > c.budget_seconds) {
      v.outcome = Outcome::Fail;
      v.summary += "; over the " + fmt(c.budget_seconds, 4) + " s budget";
    }
    const char* tag = v.outcome == Outcome::Pass ? "PASS" : v.outcome == Outcome::Skip ? "SKIP" : "FAIL";
    failures += v.outcome == Outcome::Fail;
    std::cout << tag << "  " << std::setw(2) << c.id << " " << c.name << ": " << v.summary << " ["
              << std::fixed << std::setprecision(2) << secs << " s]" << std::defaultfloat << std::endl;
  }
  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : "acceptance: all criteria met")
            << std::endl;
  return failures ? 1 : 0;
}
