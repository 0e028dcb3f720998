#include "borsuk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "borsuk/cocycle.hpp"
#include "borsuk/corpus.hpp"
#include "borsuk/embed.hpp"
#include "borsuk/errors.hpp"
#include "borsuk/exact_geom.hpp"
#include "borsuk/families.hpp"
#include "borsuk/io.hpp"
#include "borsuk/kernels.hpp"
#include "borsuk/oracle.hpp"
#include "borsuk/rigidity.hpp"
#include "borsuk/rng.hpp"
#include "borsuk/solve.hpp"

namespace borsuk {

namespace {

using nlohmann::json;

// Outcome of one trial: witnesses for violations plus free-form counters.
struct Trial {
  std::vector<json> witnesses;
  std::map<std::string, double> stats;
  bool complete = true;
};

// Trials run in parallel with per-trial seeds; results are merged in trial
// order, so the report does not depend on the thread count.
void run_trials(SuiteResult& out, std::uint64_t seed, int trials,
                const std::function<Trial(int, Rng&)>& body) {
  std::vector<Trial> results(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    results[t] = body(t, rng);
  }
  std::map<std::string, double> totals;
  for (auto& r : results) {
    for (auto& w : r.witnesses) out.witnesses.push_back(std::move(w));
    for (const auto& [k, v] : r.stats) {
      if (k.rfind("max_", 0) == 0)
        totals[k] = std::max(totals.count(k) ? totals[k] : v, v);
      else
        totals[k] += v;
    }
    out.complete = out.complete && r.complete;
  }
  out.trials += trials;
  for (const auto& [k, v] : totals) {
    const double prev = out.details.value(k, k.rfind("max_", 0) == 0 ? v : 0.0);
    const double merged = k.rfind("max_", 0) == 0 ? std::max(prev, v) : prev + v;
    // Counters stay integral in the JSON.
    if (merged == std::floor(merged) && std::abs(merged) < 9e15)
      out.details[k] = static_cast<std::int64_t>(merged);
    else
      out.details[k] = merged;
  }
}

SuiteResult named(std::string name) {
  SuiteResult r;
  r.name = std::move(name);
  return r;
}

void finish(SuiteResult& out) { out.violations = out.witnesses.size(); }

json edges_json(const std::vector<Edge>& edges) {
  json j = json::array();
  for (const auto& [u, v] : edges) j.push_back({u, v});
  return j;
}

SuiteResult hopf_pannwitz(const SuiteOptions& opt) {
  SuiteResult out = named("hopf-pannwitz");
  const int n_max = std::max(3, opt.n_max.value_or(12));
  run_trials(out, opt.seed, opt.trials.value_or(200), [&](int t, Rng& rng) {
    Trial r;
    const auto n = static_cast<std::size_t>(rng.uniform_int(3, n_max));
    const int range = static_cast<int>(rng.uniform_int(2, 4));
    const PointSet ps = corpus::random_lattice_set(rng, 2, n, range, 3);
    const Graph g = diameter_graph(ps);
    const auto crossing = diameter_segments_disjoint_pair(ps);
    r.stats["max_edges_over_n"] = static_cast<double>(g.edge_count()) / static_cast<double>(n);
    r.stats["sets_attaining_n"] = g.edge_count() == n;
    if (g.edge_count() > n || crossing) {
      json w = {{"trial", t}, {"points", io::write_points(ps)}, {"edges", g.edge_count()}};
      if (crossing) w["disjoint_pair"] = edges_json({crossing->first, crossing->second});
      r.witnesses.push_back(std::move(w));
    }
    return r;
  });
  json polygons = json::object();
  for (std::size_t n : {3, 7, 9, 11}) {
    const PointSet ps = corpus::hexagonal_odd_polygon(n);
    const std::size_t edges = diameter_graph(ps).edge_count();
    polygons[std::to_string(n)] = edges;
    if (edges != n || diameter_segments_disjoint_pair(ps))
      out.witnesses.push_back({{"polygon", n}, {"edges", edges}, {"points", io::write_points(ps)}});
  }
  out.details["odd_polygon_edges"] = polygons;
  finish(out);
  return out;
}

SuiteResult heppes_revesz(const SuiteOptions& opt) {
  SuiteResult out = named("heppes-revesz");
  const int n_max = std::max(4, opt.n_max.value_or(10));
  run_trials(out, opt.seed, opt.trials.value_or(200), [&](int t, Rng& rng) {
    Trial r;
    const auto n = static_cast<std::size_t>(rng.uniform_int(4, n_max));
    const int range = static_cast<int>(rng.uniform_int(1, 3));
    const PointSet ps = corpus::random_lattice_set(rng, 3, n, range, 2);
    const std::size_t edges = diameter_graph(ps).edge_count();
    r.stats["max_edges_over_2n_minus_2"] =
        static_cast<double>(edges) / static_cast<double>(2 * n - 2);
    if (edges > 2 * n - 2)
      r.witnesses.push_back({{"trial", t}, {"points", io::write_points(ps)}, {"edges", edges}});
    return r;
  });
  const std::size_t tetra = diameter_graph(corpus::regular_tetrahedron()).edge_count();
  out.details["tetrahedron_edges"] = tetra;
  if (tetra != 6) out.witnesses.push_back({{"tetrahedron_edges", tetra}});
  finish(out);
  return out;
}

SuiteResult schur_faces(const SuiteOptions& opt) {
  SuiteResult out = named("schur-faces");
  const int n_max = opt.n_max.value_or(10);
  auto check = [&](const PointSet& ps, json tag, Trial& r) {
    const std::size_t d = affine_dimension(ps);
    if (d == 0) return;
    const FaceCounts fc = face_counts(ps, diameter_graph(ps));
    const std::size_t top = d < fc.counts.size() ? fc.counts[d] : 0;
    const std::size_t ridge = fc.counts[d - 1];
    r.stats["max_top_faces"] = std::max(r.stats["max_top_faces"], static_cast<double>(top));
    r.stats["schur_exceptions"] += ridge > ps.size();
    if (top > 1 || fc.anomalous) {
      tag["points"] = io::write_points(ps);
      tag["counts"] = fc.counts;
      r.witnesses.push_back(std::move(tag));
    }
  };
  const int per_dim = opt.trials.value_or(200);
  for (int dim = 2; dim <= 4; ++dim) {
    const int lo = dim + 1;
    run_trials(out, derive_seed(opt.seed, 1000 + dim), per_dim, [&](int t, Rng& rng) {
      Trial r;
      const auto n = static_cast<std::size_t>(rng.uniform_int(lo, std::max(lo, n_max)));
      if (t % 2 == 0) {
        const PointSet ps = corpus::random_lattice_set(rng, dim, n, dim == 2 ? 2 : 1, 1);
        check(ps, {{"dim", dim}, {"trial", t}}, r);
        return r;
      }
      // Regular simplex plus points of its convex hull: the top face is
      // present and must stay unique.
      auto pts = corpus::regular_simplex(static_cast<std::size_t>(dim)).points();
      while (pts.size() < n) {
        std::vector<std::int64_t> w(static_cast<std::size_t>(dim) + 1);
        std::int64_t total = 0;
        for (auto& x : w) total += (x = rng.uniform_int(1, 6));
        RationalVector p;
        for (auto x : w) p.push_back(Rational(x, total));
        for (auto& c : p) c.canonicalize();
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
      }
      check(PointSet(static_cast<std::size_t>(dim) + 1, std::move(pts)), {{"dim", dim}, {"trial", t}},
            r);
      return r;
    });
  }
  Trial fixed;
  for (const auto& ps :
       {corpus::regular_tetrahedron(), corpus::unit_square(), corpus::cube(3), corpus::cube(4),
        corpus::regular_simplex(4), corpus::hexagonal_patch(), corpus::hexagonal_odd_polygon(7)})
    check(ps, {{"set", ps.label()}}, fixed);
  for (auto& w : fixed.witnesses) out.witnesses.push_back(std::move(w));
  out.details["schur_exceptions"] =
      out.details.value("schur_exceptions", 0.0) + fixed.stats["schur_exceptions"];
  out.details["max_top_faces"] =
      std::max(out.details.value("max_top_faces", 0.0), fixed.stats["max_top_faces"]);
  finish(out);
  return out;
}

SuiteResult tensor_law(const SuiteOptions&) {
  SuiteResult out = named("tensor-law");
  json law = json::object();
  for (int n : {4, 6})
    for (int k : {2, 3}) {
      const auto bad = kernels::tensor_law_violations_parallel(n, k);
      law["n" + std::to_string(n) + "_k" + std::to_string(k)] = bad;
      if (bad) out.witnesses.push_back({{"n", n}, {"k", k}, {"violating_pairs", bad}});
      ++out.trials;
    }
  out.details["law_violations"] = law;
  for (const auto& x : all_sign_vectors(6)) {
    const auto a = tensor_power(x, 2).coords, b = tensor_power(x.negated(), 2).coords;
    if (a != b) out.witnesses.push_back({{"antipodal_collapse_fails", x.bits}});
  }
  for (int n : {4, 8}) {
    const EmbeddedSet c1 = c1_set(n);
    const bool same =
        diameter_graph(c1.points) == merged_orthogonality_graph(c1.representatives);
    out.details["c1_pipeline_" + std::to_string(n)] = same;
    if (!same) out.witnesses.push_back({{"c1_pipeline_mismatch", n}});
  }
  finish(out);
  return out;
}

SuiteResult coboundary_suite(const SuiteOptions& opt) {
  SuiteResult out = named("coboundary");
  const int n_max = std::clamp(opt.n_max.value_or(9), 3, 12);
  run_trials(out, opt.seed, opt.trials.value_or(1000), [&](int t, Rng& rng) {
    Trial r;
    const int k = static_cast<int>(rng.uniform_int(2, std::min(4, n_max - 1)));
    const int n = static_cast<int>(rng.uniform_int(k + 1, n_max));
    const double p = rng.uniform(0.1, 0.6);
    const auto h1 = corpus::random_hypergraph(rng, n, k - 1, p);
    const auto h2 = corpus::random_hypergraph(rng, n, k - 1, p);
    const auto g1 = coboundary(h1);
    auto expected = oracle::coboundary(n, k, h1.edges());
    const bool matches = UniformHypergraph(n, k, expected) == g1;
    const bool closed = is_cocycle(g1);
    const bool linear =
        coboundary(symmetric_difference(h1, h2)) == symmetric_difference(g1, coboundary(h2));
    const bool turan_ok = k % 2 == 1 || turan_check(g1);
    if (!(matches && closed && linear && turan_ok))
      r.witnesses.push_back({{"trial", t}, {"n", n}, {"k", k}, {"h", io::write_hypergraph(h1)},
                             {"oracle_match", matches}, {"cocycle", closed},
                             {"linear", linear}, {"turan", turan_ok}});
    r.stats["edges_total"] = static_cast<double>(g1.size());
    return r;
  });
  finish(out);
  return out;
}

SuiteResult dckw_suite(const SuiteOptions& opt) {
  SuiteResult out = named("dckw");
  json ones = json::object();
  for (int m = 2; m <= 6; ++m) {
    const std::size_t edges = dckw(corpus::all_ones_matrix(m)).size();
    const std::size_t expected = static_cast<std::size_t>(2 * m * (m * (m - 1) * (m - 2) / 6));
    ones[std::to_string(m)] = edges;
    if (edges != expected) out.witnesses.push_back({{"all_ones_m", m}, {"edges", edges}});
  }
  out.details["all_ones_edges"] = ones;

  // Structural checks against the direct enumeration oracle.
  run_trials(out, derive_seed(opt.seed, 1), 200, [&](int t, Rng& rng) {
    Trial r;
    const int m = t < 100 ? 4 : 5;
    const PmMatrix a = corpus::random_pm_matrix(rng, m);
    const auto h = dckw(a);
    const bool ok = is_cocycle(h) && h == UniformHypergraph(2 * m, 4, oracle::dckw_edges(a));
    if (!ok) r.witnesses.push_back({{"matrix", io::write_pmmatrix(a)}});
    return r;
  });

  const int samples = opt.trials.value_or(500);
  std::vector<double> counts(static_cast<std::size_t>(samples));
  Rng rng(derive_seed(opt.seed, 2));
  for (auto& c : counts) c = static_cast<double>(dckw(corpus::random_pm_matrix(rng, 4)).size());
  double mean = 0;
  for (double c : counts) mean += c;
  mean /= samples;
  double var = 0;
  for (double c : counts) var += (c - mean) * (c - mean);
  var /= std::max(1, samples - 1);
  const double se = std::sqrt(var / samples);
  const double expected = expected_dckw_edges(4).get_d();
  out.details["sample_mean"] = mean;
  out.details["standard_error"] = se;
  out.details["expected"] = expected;
  if (std::abs(mean - expected) > 4 * se)
    out.witnesses.push_back({{"sample_mean", mean}, {"standard_error", se}});

  const Integer n64 = 128;
  const Rational total(n64 * (n64 - 1) * (n64 - 2) * (n64 - 3) / 24);
  const double fraction = Rational(expected_dckw_edges(64) / total).get_d();
  out.details["fraction_m64"] = fraction;
  if (std::abs(fraction - 11.0 / 16.0) > 0.02) out.witnesses.push_back({{"fraction_m64", fraction}});
  out.trials += samples;
  finish(out);
  return out;
}

SuiteResult solver_oracle(const SuiteOptions& opt) {
  SuiteResult out = named("solver-oracle");
  const int n_max = std::clamp(opt.n_max.value_or(12), 1, 16);
  run_trials(out, opt.seed, opt.trials.value_or(100), [&](int t, Rng& rng) {
    Trial r;
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, n_max));
    const Graph g = corpus::random_graph(rng, n, rng.uniform(0.15, 0.85));
    const auto chi = chromatic_number(g, opt.node_limit);
    const auto alpha = max_independent_set(g, opt.node_limit);
    const auto omega = max_clique(g, opt.node_limit);
    r.complete = chi.optimal && alpha.optimal && omega.optimal;
    const bool values = static_cast<std::size_t>(chi.value) == oracle::chromatic_number(g) &&
                        static_cast<std::size_t>(alpha.value) == oracle::independence_number(g) &&
                        static_cast<std::size_t>(omega.value) == oracle::clique_number(g);
    const bool witnesses = is_proper_coloring(g, chi.witness) &&
                           is_independent_set(g, alpha.witness) && is_clique(g, omega.witness) &&
                           alpha.witness.size() == static_cast<std::size_t>(alpha.value) &&
                           omega.witness.size() == static_cast<std::size_t>(omega.value);
    const bool bound = partition_lower_bound(g, opt.node_limit) <= chi.value;
    if (r.complete && !(values && witnesses && bound))
      r.witnesses.push_back({{"trial", t}, {"graph", io::write_graph(g)}, {"values", values},
                             {"witnesses", witnesses}, {"lower_bound", bound}});
    return r;
  });
  const Graph petersen = corpus::petersen_graph();
  const auto chi = chromatic_number(petersen).value;
  const auto alpha = max_independent_set(petersen).value;
  out.details["petersen_chi"] = chi;
  out.details["petersen_alpha"] = alpha;
  if (chi != 3 || alpha != 4) out.witnesses.push_back({{"petersen_chi", chi}, {"alpha", alpha}});
  finish(out);
  return out;
}

SuiteResult rigidity_suite(const SuiteOptions& opt) {
  SuiteResult out = named("rigidity");
  const PointSet tri(2, {{0, 0}, {1, 0}, {0, 1}});
  const auto tri_report = stress_report(Framework(tri, {{0, 1}, {0, 2}, {1, 2}}));
  const PointSet quad(2, {{0, 0}, {5, 1}, {2, 4}, {7, 6}});
  const auto k4 = stress_report(Framework(quad, corpus::complete_graph(4)));
  out.details["triangle_stress_free"] = tri_report.stress_free;
  out.details["k4_stress_dim"] = k4.stress_dim;
  if (!tri_report.stress_free) out.witnesses.push_back({{"triangle", "not stress-free"}});
  if (k4.stress_dim != 1) out.witnesses.push_back({{"k4_stress_dim", k4.stress_dim}});

  const int n_max = std::max(3, opt.n_max.value_or(10));
  run_trials(out, opt.seed, opt.trials.value_or(500), [&](int t, Rng& rng) {
    Trial r;
    const auto n = static_cast<std::size_t>(rng.uniform_int(3, n_max));
    const PointSet ps =
        corpus::random_lattice_set(rng, 2, n, static_cast<int>(rng.uniform_int(2, 4)), 2);
    const auto rep = conjecture_harness(ps, opt.node_limit);
    r.stats["stress_free_sets"] = rep.stress.stress_free;
    r.stats["spanning_stress_free_sets"] = rep.stress.stress_free && rep.stress.spanning;
    r.stats["nonspanning_flagged"] = !rep.stress.spanning;
    if (rep.chromatic) r.complete = rep.chromatic->optimal;
    // Rank is unchanged by a rational translation and scaling.
    std::vector<RationalVector> moved;
    for (const auto& p : ps.points()) moved.push_back({p[0] * Rational(3, 2) + 5, p[1] * Rational(3, 2) - Rational(1, 3)});
    const auto rank2 = stress_report(Framework(PointSet(2, moved), diameter_graph(ps))).rank;
    const bool bad = rep.violation || !rep.edge_bound_ok ||
                     rep.chi_le_2d_minus_1 == std::optional<bool>(false) ||
                     rank2 != rep.stress.rank;
    if (bad)
      r.witnesses.push_back({{"trial", t}, {"points", io::write_points(ps)},
                             {"violation", rep.violation}, {"edge_bound_ok", rep.edge_bound_ok},
                             {"rank_invariant", rank2 == rep.stress.rank}});
    return r;
  });
  finish(out);
  return out;
}

SuiteResult larman_t1(const SuiteOptions& opt) {
  SuiteResult out = named("larman-t1");
  const int n_max = std::clamp(opt.n_max.value_or(5), 2, 7);
  json per_n = json::object();
  for (int n = 2; n <= n_max; ++n) {
    const auto rep = larman_t1_exhaustive(n);
    per_n[std::to_string(n)] = {{"families", rep.families_checked}, {"violations", rep.violations}};
    out.trials += static_cast<int>(rep.families_checked);
    if (rep.violations) {
      std::vector<std::uint64_t> masks = rep.witness;
      out.witnesses.push_back(
          {{"n", n}, {"violations", rep.violations}, {"family", io::write_family(SetFamily(n, masks))}});
    }
  }
  out.details["per_n"] = per_n;
  finish(out);
  return out;
}

const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>>& registry() {
  static const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>> suites = {
      {"hopf-pannwitz", hopf_pannwitz}, {"heppes-revesz", heppes_revesz},
      {"schur-faces", schur_faces},     {"tensor-law", tensor_law},
      {"coboundary", coboundary_suite}, {"dckw", dckw_suite},
      {"solver-oracle", solver_oracle}, {"rigidity", rigidity_suite},
      {"larman-t1", larman_t1}};
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"hopf-pannwitz", "heppes-revesz", "schur-faces", "tensor-law", "coboundary",
          "dckw",          "solver-oracle", "rigidity",    "larman-t1"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  const auto& suites = registry();
  const auto it = suites.find(name);
  if (it == suites.end()) throw PreconditionError("unknown verify suite '" + name + "'");
  return it->second(options);
}

}  // namespace borsuk
