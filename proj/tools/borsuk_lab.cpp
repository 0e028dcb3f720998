// borsuk_lab: command-line front end. Every run writes a self-contained
// directory with report.json, generated objects, copied inputs and any
// violation witnesses.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "borsuk/cocycle.hpp"
#include "borsuk/corpus.hpp"
#include "borsuk/embed.hpp"
#include "borsuk/errors.hpp"
#include "borsuk/exact_geom.hpp"
#include "borsuk/families.hpp"
#include "borsuk/io.hpp"
#include "borsuk/numeric_search.hpp"
#include "borsuk/parallel.hpp"
#include "borsuk/report.hpp"
#include "borsuk/rigidity.hpp"
#include "borsuk/solve.hpp"
#include "borsuk/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace borsuk;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNonOptimal = 2;
constexpr int kExitViolation = 3;

struct Globals {
  std::uint64_t seed = 1;
  int threads = 0;
  std::optional<std::uint64_t> node_limit;
  std::string out;
  std::string format = "text";
};

class Run {
 public:
  Run(const Globals& g, std::string command_line, const std::string& tag) : globals_(g) {
    report.command_line = std::move(command_line);
    report.seed = g.seed;
    report.parameters["threads"] = g.threads;
    if (g.node_limit) report.parameters["node_limit"] = *g.node_limit;
    fs::path root = g.out;
    if (root.empty()) {
      const char* env = std::getenv("BORSUK_LAB_OUT");
      root = env && *env ? env : "runs";
    }
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream stamp;
    stamp << std::put_time(&utc, "%Y%m%dT%H%M%SZ") << '-' << tag;
    dir_ = root / stamp.str();
    for (int i = 1; fs::exists(dir_); ++i) dir_ = root / (stamp.str() + "-" + std::to_string(i));
    fs::create_directories(dir_);
  }

  // Writes a generated object into the run directory and lists it in the
  // report.
  std::string write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    fs::create_directories(p.parent_path());
    std::ofstream(p) << content;
    report.results["files"].push_back(name);
    return p.string();
  }

  // Copies an input into the run directory so the run can be re-derived.
  void copy_input(const std::string& path) {
    fs::create_directories(dir_ / "inputs");
    fs::copy_file(path, dir_ / "inputs" / fs::path(path).filename(),
                  fs::copy_options::overwrite_existing);
    report.parameters["inputs"].push_back(fs::path(path).filename().string());
  }

  void persist_witnesses(const std::vector<json>& witnesses) {
    for (std::size_t i = 0; i < witnesses.size(); ++i)
      write("witnesses/" + std::to_string(i) + ".json", witnesses[i].dump(2) + "\n");
  }

  int finish(double seconds) {
    report.wall_times["total"] = seconds;
    std::ofstream(dir_ / "report.json") << report.to_json().dump(2) << "\n";
    if (globals_.format == "json") {
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      print_text(report.results, "");
      for (const auto& [k, ok] : report.optimal)
        std::cout << "optimal." << k << ": " << (ok ? "true" : "false") << "\n";
      std::cout << "run directory: " << dir_.string() << "\n";
    }
    if (violation) return kExitViolation;
    return report.all_optimal() ? kExitOk : kExitNonOptimal;
  }

  // Failed runs keep their directory with the error recorded.
  void record_error(const std::string& kind, const std::string& what) {
    report.results["error"] = {{"kind", kind}, {"message", what}};
    std::ofstream(dir_ / "report.json") << report.to_json().dump(2) << "\n";
  }

  RunReport report;
  bool violation = false;

 private:
  static void print_text(const json& j, const std::string& prefix) {
    for (const auto& [k, v] : j.items()) {
      const std::string key = prefix.empty() ? k : prefix + "." + k;
      if (v.is_object())
        print_text(v, key);
      else
        std::cout << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }

  const Globals& globals_;
  fs::path dir_;
};

json solve_json(const SolveResult& r) {
  return {{"value", r.value},     {"lower", r.lower},   {"upper", r.upper},
          {"optimal", r.optimal}, {"nodes", r.nodes},   {"witness", r.witness}};
}

json rational_json(const Rational& q) { return q.get_str(); }

json stress_json(const StressReport& s) {
  return {{"edges", s.edge_count},     {"rank", s.rank},         {"stress_dim", s.stress_dim},
          {"stress_free", s.stress_free}, {"spanning", s.spanning}, {"affine_dim", s.affine_dim}};
}

json masks_json(const std::vector<std::uint64_t>& masks) {
  json out = json::array();
  for (auto m : masks) {
    json e = json::array();
    for (std::uint64_t x = m; x; x &= x - 1) e.push_back(std::countr_zero(x));
    out.push_back(e);
  }
  return out;
}

// Graph from a graph file, or the diameter graph of a points file.
Graph load_graph_or_points(const std::string& path, json& info) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::string first;
  in >> first;
  while (!first.empty() && first[0] == '#') {
    std::getline(in, first);
    in >> first;
  }
  if (first == "points") {
    const PointSet ps = io::load_points(path);
    const auto dia = diameter(ps);
    info["input_kind"] = "points";
    info["points"] = ps.size();
    info["dim"] = ps.dim();
    info["squared_diameter"] = rational_json(dia.squared);
    return diameter_graph(ps);
  }
  info["input_kind"] = "graph";
  return io::load_graph(path);
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) s += (i ? " " : "") + std::string(argv[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"borsuk_lab: exact experiments on diameter graphs, cocycles, tensor embeddings, "
               "rigidity and ball partitions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "64-bit seed for every random choice")->capture_default_str();
  app.add_option("--threads", g.threads, "OpenMP threads (0 = runtime default, 1 = serial)");
  app.add_option("--node-limit", g.node_limit, "Branch-and-bound node budget per solve");
  app.add_option("--out", g.out, "Output root (default $BORSUK_LAB_OUT or ./runs)");
  app.add_option("--format", g.format, "Console output")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::function<void(Run&)> action;
  std::string tag;
  auto bind = [&](CLI::App* cmd, std::string name, std::function<void(Run&)> fn) {
    cmd->callback([&action, &tag, name = std::move(name), fn = std::move(fn)] {
      tag = name;
      action = fn;
    });
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Generate candidate point sets")->require_subcommand(1);
  int gen_n = 8, gen_k = 2, gen_polygon = 7;
  std::size_t gen_count = 64;
  bool gen_merge = false;
  auto write_set = [](Run& run, const PointSet& ps, const std::string& file) {
    run.report.results["points"] = ps.size();
    run.report.results["dim"] = ps.dim();
    run.report.results["label"] = ps.label();
    run.write(file, io::write_points(ps));
  };
  auto* gen_c1 = gen->add_subcommand("c1", "Tensor squares of balanced sign vectors");
  gen_c1->add_option("--n", gen_n, "Vector length (multiple of 4)")->capture_default_str();
  bind(gen_c1, "gen-c1", [&](Run& run) {
    run.report.parameters["n"] = gen_n;
    const auto set = c1_set(gen_n);
    run.report.results["reduced_dimension"] = set.reduced_dimension;
    write_set(run, set.points, "c1_n" + std::to_string(gen_n) + ".points");
  });
  auto* gen_c2 = gen->add_subcommand("c2", "Tensor squares of all sign vectors");
  gen_c2->add_option("--n", gen_n, "Vector length")->capture_default_str();
  bind(gen_c2, "gen-c2", [&](Run& run) {
    run.report.parameters["n"] = gen_n;
    const auto set = c2_set(gen_n);
    run.report.results["reduced_dimension"] = set.reduced_dimension;
    write_set(run, set.points, "c2_n" + std::to_string(gen_n) + ".points");
  });
  auto* gen_tensor = gen->add_subcommand("tensor", "Tensor powers of all sign vectors");
  gen_tensor->add_option("--n", gen_n, "Vector length")->capture_default_str();
  gen_tensor->add_option("--k", gen_k, "Tensor power")->capture_default_str();
  bind(gen_tensor, "gen-tensor", [&](Run& run) {
    run.report.parameters["n"] = gen_n;
    run.report.parameters["k"] = gen_k;
    const auto set = tensor_set(gen_n, gen_k);
    write_set(run, set.points,
              "tensor_n" + std::to_string(gen_n) + "_k" + std::to_string(gen_k) + ".points");
  });
  auto* gen_c3 = gen->add_subcommand("c3", "Seeded rational sample of tensor squares of unit vectors");
  gen_c3->add_option("--n", gen_n, "Base dimension")->capture_default_str();
  gen_c3->add_option("--count", gen_count, "Number of points")->capture_default_str();
  bind(gen_c3, "gen-c3", [&](Run& run) {
    run.report.parameters["n"] = gen_n;
    run.report.parameters["count"] = gen_count;
    run.report.results["approximate"] = true;
    write_set(run, c3_sample(gen_n, gen_count, g.seed), "c3_n" + std::to_string(gen_n) + ".points");
  });
  auto* gen_cocycle = gen->add_subcommand("cocycles", "All 3-cocycle sign vectors as points");
  gen_cocycle->add_option("--n", gen_n, "Vertices (5 or 6)")->capture_default_str();
  gen_cocycle->add_flag("--merge-antipodes", gen_merge, "Merge x and -x");
  bind(gen_cocycle, "gen-cocycles", [&](Run& run) {
    run.report.parameters["n"] = gen_n;
    run.report.parameters["merge_antipodes"] = gen_merge;
    write_set(run, cocycle_candidate_points(gen_n, {.merge_antipodes = gen_merge}),
              "cocycles_n" + std::to_string(gen_n) + ".points");
  });
  auto* gen_poly = gen->add_subcommand("polygon", "Odd polygon with equal exact diagonals");
  gen_poly->add_option("--n", gen_polygon, "Vertices (3, 7, 9 or 11)")->capture_default_str();
  bind(gen_poly, "gen-polygon", [&](Run& run) {
    run.report.parameters["n"] = gen_polygon;
    write_set(run, corpus::hexagonal_odd_polygon(static_cast<std::size_t>(gen_polygon)),
              "polygon_" + std::to_string(gen_polygon) + ".points");
  });

  // solve
  auto* solve = app.add_subcommand("solve", "Exact graph solvers")->require_subcommand(1);
  std::string solve_in;
  for (const std::string kind : {"chromatic", "alpha", "omega", "borsuk", "lower-bound"}) {
    auto* cmd = solve->add_subcommand(kind, "Solve on a graph file (or the diameter graph of a points file)");
    cmd->add_option("--in", solve_in, "Input file")->required()->check(CLI::ExistingFile);
    bind(cmd, "solve-" + kind, [&, kind](Run& run) {
      run.copy_input(solve_in);
      const Graph graph = load_graph_or_points(solve_in, run.report.results);
      run.report.results["vertices"] = graph.order();
      run.report.results["edges"] = graph.edge_count();
      if (kind == "lower-bound") {
        run.report.results["partition_lower_bound"] = partition_lower_bound(graph, g.node_limit);
        const auto alpha = max_independent_set(graph, g.node_limit);
        const auto omega = max_clique(graph, g.node_limit);
        run.report.results["alpha"] = solve_json(alpha);
        run.report.results["omega"] = solve_json(omega);
        run.report.optimal["alpha"] = alpha.optimal;
        run.report.optimal["omega"] = omega.optimal;
        return;
      }
      SolveResult r;
      if (kind == "chromatic" || kind == "borsuk") r = chromatic_number(graph, g.node_limit);
      if (kind == "alpha") r = max_independent_set(graph, g.node_limit);
      if (kind == "omega") r = max_clique(graph, g.node_limit);
      run.report.results[kind] = solve_json(r);
      run.report.optimal[kind] = r.optimal;
      run.report.wall_times[kind] = r.wall_seconds;
    });
  }

  // geom
  auto* geom = app.add_subcommand("geom", "Exact geometry of a point set")->require_subcommand(1);
  std::string geom_in, r2_text = "1";
  auto* geom_dia = geom->add_subcommand("diameter", "Diameter, diameter graph and face counts");
  geom_dia->add_option("--in", geom_in, "Points file")->required()->check(CLI::ExistingFile);
  bind(geom_dia, "geom-diameter", [&](Run& run) {
    run.copy_input(geom_in);
    const PointSet ps = io::load_points(geom_in);
    const auto dia = diameter(ps);
    const Graph dg = diameter_graph(ps);
    const auto faces = face_counts(ps, dg);
    run.report.results["squared_diameter"] = rational_json(dia.squared);
    run.report.results["diameter_edges"] = dg.edge_count();
    run.report.results["face_counts"] = faces.counts;
    run.report.results["anomalous"] = faces.anomalous;
    run.report.results["affine_dim"] = affine_dimension(ps);
    if (const auto two = two_distance_check(ps))
      run.report.results["two_distance"] = {rational_json(two->first), rational_json(two->second)};
    run.report.results["kissing_edges"] = kissing_graph(ps).edge_count();
    run.write("diameter.graph", io::write_graph(dg));
  });
  auto* geom_unit = geom->add_subcommand("unit", "Graph of pairs at a given squared distance");
  geom_unit->add_option("--in", geom_in, "Points file")->required()->check(CLI::ExistingFile);
  geom_unit->add_option("--r2", r2_text, "Squared distance (rational)")->capture_default_str();
  bind(geom_unit, "geom-unit", [&](Run& run) {
    run.copy_input(geom_in);
    const PointSet ps = io::load_points(geom_in);
    const Rational r2 = parse_rational(r2_text);
    run.report.parameters["r2"] = r2.get_str();
    const Graph ug = unit_distance_graph(ps, r2);
    run.report.results["edges"] = ug.edge_count();
    run.report.results["face_counts"] = face_counts(ps, ug).counts;
    run.write("unit.graph", io::write_graph(ug));
  });
  auto* geom_disc = geom->add_subcommand("tangency", "Tangency graph of a disc file");
  geom_disc->add_option("--in", geom_in, "Discs file")->required()->check(CLI::ExistingFile);
  bind(geom_disc, "geom-tangency", [&](Run& run) {
    run.copy_input(geom_in);
    std::ifstream in(geom_in);
    const auto discs = io::read_discs(in, geom_in);
    const Graph tg = disc_tangency_graph(discs);
    run.report.results["edges"] = tg.edge_count();
    run.write("tangency.graph", io::write_graph(tg));
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run an invariant suite (or 'all')");
  std::string suite;
  std::optional<int> trials, n_max;
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_choices));
  verify->add_option("--trials", trials, "Trials (suite default when omitted)");
  verify->add_option("--n-max", n_max, "Largest instance size");
  bind(verify, "verify", [&](Run& run) {
    run.report.parameters["suite"] = suite;
    if (trials) run.report.parameters["trials"] = *trials;
    if (n_max) run.report.parameters["n_max"] = *n_max;
    const std::vector<std::string> names = suite == "all" ? suite_names() : std::vector{suite};
    std::vector<json> witnesses;
    for (const auto& name : names) {
      const auto start = std::chrono::steady_clock::now();
      const auto r = run_suite(name, {.seed = g.seed, .trials = trials, .n_max = n_max,
                                      .node_limit = g.node_limit});
      run.report.wall_times[name] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      run.report.results[name] = {{"trials", r.trials},
                                  {"violations", r.violations},
                                  {"passed", r.passed()},
                                  {"details", r.details}};
      run.report.optimal[name] = r.complete;
      for (auto w : r.witnesses) {
        w["suite"] = name;
        witnesses.push_back(std::move(w));
      }
      if (r.violations) run.violation = true;
    }
    run.persist_witnesses(witnesses);
  });

  // rigidity
  auto* rig = app.add_subcommand("rigidity", "Stress-freeness and the coloring conjecture")
                  ->require_subcommand(1);
  std::string rig_points, rig_graph;
  auto* rig_stress = rig->add_subcommand("stress", "Stress report of a framework");
  rig_stress->add_option("--points", rig_points, "Points file")->required()->check(CLI::ExistingFile);
  rig_stress->add_option("--graph", rig_graph, "Graph file (default: diameter graph)")
      ->check(CLI::ExistingFile);
  bind(rig_stress, "rigidity-stress", [&](Run& run) {
    run.copy_input(rig_points);
    const PointSet ps = io::load_points(rig_points);
    Graph graph;
    if (rig_graph.empty()) {
      graph = diameter_graph(ps);
      run.report.parameters["graph"] = "diameter";
    } else {
      run.copy_input(rig_graph);
      graph = io::load_graph(rig_graph);
      if (graph.order() != ps.size()) throw PreconditionError("graph and point counts differ");
    }
    const auto s = stress_report(Framework(ps, graph));
    run.report.results["stress"] = stress_json(s);
    run.report.results["edge_bound"] = stress_free_edge_bound(ps.dim(), ps.size());
  });
  auto* rig_conj = rig->add_subcommand("conjecture", "Conjecture harness over random sets");
  int conj_trials = 500, conj_dim = 2, conj_nmax = 10;
  rig_conj->add_option("--trials", conj_trials)->capture_default_str();
  rig_conj->add_option("--dim", conj_dim)->capture_default_str()->check(CLI::Range(1, 4));
  rig_conj->add_option("--n-max", conj_nmax)->capture_default_str();
  bind(rig_conj, "rigidity-conjecture", [&](Run& run) {
    run.report.parameters["trials"] = conj_trials;
    run.report.parameters["dim"] = conj_dim;
    run.report.parameters["n_max"] = conj_nmax;
    std::uint64_t stress_free = 0, violations = 0, bound_failures = 0, undecided = 0;
    std::vector<json> witnesses;
    for (int t = 0; t < conj_trials; ++t) {
      Rng rng(derive_seed(g.seed, static_cast<std::uint64_t>(t)));
      const auto n = static_cast<std::size_t>(
          rng.uniform_int(conj_dim + 1, std::max(conj_dim + 1, conj_nmax)));
      const PointSet ps = corpus::random_lattice_set(rng, static_cast<std::size_t>(conj_dim), n,
                                                     static_cast<int>(rng.uniform_int(2, 4)), 2);
      const auto rep = conjecture_harness(ps, g.node_limit);
      stress_free += rep.stress.stress_free;
      if (rep.chromatic && !rep.chromatic->optimal && !rep.colorable) ++undecided;
      if (rep.violation || !rep.edge_bound_ok) {
        rep.violation ? ++violations : ++bound_failures;
        witnesses.push_back({{"trial", t}, {"points", io::write_points(ps)},
                             {"violation", rep.violation}, {"edge_bound_ok", rep.edge_bound_ok}});
      }
    }
    run.report.results["stress_free_sets"] = stress_free;
    run.report.results["violations"] = violations;
    run.report.results["edge_bound_failures"] = bound_failures;
    run.report.optimal["harness"] = undecided == 0;
    run.violation = !witnesses.empty();
    run.persist_witnesses(witnesses);
  });

  // cocycle
  auto* coc = app.add_subcommand("cocycle", "Cocycle hypergraphs and Turán numbers")
                  ->require_subcommand(1);
  int coc_n = 6, coc_k = 4, coc_m = 4;
  std::string coc_in;
  bool coc_sym = false;
  auto* coc_ext = coc->add_subcommand("extremal", "f(n,k) and T(n,k,k+1)");
  coc_ext->add_option("--n", coc_n)->capture_default_str();
  coc_ext->add_option("--k", coc_k)->capture_default_str();
  coc_ext->add_flag("--symmetry-breaking", coc_sym, "Fix the first k-set in the Turán search");
  bind(coc_ext, "cocycle-extremal", [&](Run& run) {
    run.report.parameters["n"] = coc_n;
    run.report.parameters["k"] = coc_k;
    run.report.parameters["symmetry_breaking"] = coc_sym;
    ExtremalOptions opt;
    opt.symmetry_breaking = coc_sym;
    if (g.node_limit) opt.turan_node_limit = *g.node_limit;
    const auto r = extremal_numbers(coc_n, coc_k, opt);
    run.report.results["cocycle_dimension"] = r.cocycle_dimension;
    run.report.results["f"] = r.f_nk;
    run.report.results["cocycles_enumerated"] = r.cocycles_enumerated;
    run.report.results["T"] = r.t_nk;
    run.report.results["T_upper"] = r.t_upper;
    run.report.results["turan_nodes"] = r.t_nodes;
    run.report.results["equal"] = r.f_nk == r.t_nk;
    if (coc_k == 4) run.report.results["peled_reference"] = r.peled_reference;
    run.report.optimal["f"] = r.f_optimal;
    run.report.optimal["T"] = r.t_optimal;
    run.write("f_witness.hypergraph",
              io::write_hypergraph(UniformHypergraph(coc_n, coc_k, r.f_witness)));
    run.write("T_witness.hypergraph",
              io::write_hypergraph(UniformHypergraph(coc_n, coc_k, r.t_witness)));
  });
  auto* coc_check = coc->add_subcommand("check", "Cocycle and Turán checks of a hypergraph");
  coc_check->add_option("--in", coc_in, "Hypergraph file")->required()->check(CLI::ExistingFile);
  bind(coc_check, "cocycle-check", [&](Run& run) {
    run.copy_input(coc_in);
    std::ifstream in(coc_in);
    const auto h = io::read_hypergraph(in, coc_in);
    run.report.results["edges"] = h.size();
    const auto bad = cocycle_violation(h);
    run.report.results["cocycle"] = !bad;
    if (bad) run.report.results["cocycle_violation"] = masks_json({*bad});
    const auto complete = turan_violation(h);
    run.report.results["turan_free"] = !complete;
    if (complete) run.report.results["complete_set"] = masks_json({*complete});
  });
  auto* coc_dckw = coc->add_subcommand("dckw", "DCKW hypergraph of a ±1 matrix");
  coc_dckw->add_option("--in", coc_in, "Matrix file (random when omitted)")->check(CLI::ExistingFile);
  coc_dckw->add_option("--m", coc_m, "Size of the random matrix")->capture_default_str();
  bind(coc_dckw, "cocycle-dckw", [&](Run& run) {
    PmMatrix a;
    if (!coc_in.empty()) {
      run.copy_input(coc_in);
      std::ifstream in(coc_in);
      a = io::read_pmmatrix(in, coc_in);
    } else {
      Rng rng(g.seed);
      a = corpus::random_pm_matrix(rng, coc_m);
      run.write("matrix.pmmatrix", io::write_pmmatrix(a));
    }
    const auto h = dckw(a);
    run.report.parameters["m"] = a.m();
    run.report.results["edges"] = h.size();
    run.report.results["expected_edges"] = rational_json(expected_dckw_edges(a.m()));
    run.report.results["cocycle"] = is_cocycle(h);
    run.write("dckw.hypergraph", io::write_hypergraph(h));
  });

  // families
  auto* fam = app.add_subcommand("families", "Set-family experiments")->require_subcommand(1);
  std::string fam_in, fam_g;
  int fam_t = 1, fam_parts = 0, fam_n = 4, fam_size = 2, fam_sum = 5, fam_inter = 1;
  std::optional<int> fam_sum_target;
  bool fam_overlap = false;
  auto* fam_larman = fam->add_subcommand("larman", "Cover by (t+1)-intersecting subfamilies");
  fam_larman->add_option("--in", fam_in, "Family file")->required()->check(CLI::ExistingFile);
  fam_larman->add_option("--t", fam_t)->capture_default_str();
  fam_larman->add_option("--parts", fam_parts, "Class budget (default n)");
  fam_larman->add_flag("--overlap", fam_overlap, "Allow overlapping classes");
  bind(fam_larman, "families-larman", [&](Run& run) {
    run.copy_input(fam_in);
    std::ifstream in(fam_in);
    const SetFamily f = io::read_family(in, fam_in);
    const int parts = fam_parts > 0 ? fam_parts : f.n();
    run.report.parameters["t"] = fam_t;
    run.report.parameters["parts"] = parts;
    run.report.parameters["overlap"] = fam_overlap;
    const auto cover = larman_cover(f, fam_t, parts, {.allow_overlap = fam_overlap});
    run.report.results["coverable"] = cover.has_value();
    if (cover) run.report.results["classes"] = *cover;
  });
  auto* fam_fw = fam->add_subcommand("fw", "Independence number of the ±1 orthogonality graph");
  fam_fw->add_option("--n", fam_n)->capture_default_str();
  bind(fam_fw, "families-fw", [&](Run& run) {
    run.report.parameters["n"] = fam_n;
    const auto e = fw_independence_experiment(fam_n, g.node_limit);
    run.report.results["vertices"] = e.vertices;
    run.report.results["alpha"] = e.alpha;
    run.report.results["alpha_upper"] = e.alpha_upper;
    run.report.results["ratio"] = e.ratio;
    run.report.results["reference"] = e.reference;
    run.report.results["witness"] = e.witness;
    run.report.optimal["alpha"] = e.optimal;
  });
  auto* fam_pairs = fam->add_subcommand("pairs", "Count pairs with a prescribed intersection");
  fam_pairs->add_option("--f", fam_in, "Family F")->required()->check(CLI::ExistingFile);
  fam_pairs->add_option("--g", fam_g, "Family G (default F)")->check(CLI::ExistingFile);
  fam_pairs->add_option("--inter", fam_inter)->capture_default_str();
  fam_pairs->add_option("--sum", fam_sum_target, "Required element sum of the intersection");
  bind(fam_pairs, "families-pairs", [&](Run& run) {
    run.copy_input(fam_in);
    std::ifstream fin(fam_in);
    const SetFamily f = io::read_family(fin, fam_in);
    SetFamily other = f;
    if (!fam_g.empty()) {
      run.copy_input(fam_g);
      std::ifstream gin(fam_g);
      other = io::read_family(gin, fam_g);
    }
    run.report.parameters["inter"] = fam_inter;
    if (fam_sum_target) run.report.parameters["sum"] = *fam_sum_target;
    const auto r = pair_count(f, other, fam_inter, fam_sum_target);
    run.report.results["pairs"] = r.pairs;
    run.report.results["density"] = r.density;
    run.report.results["f_size"] = r.f_size;
    run.report.results["g_size"] = r.g_size;
  });
  auto* fam_sumfam = fam->add_subcommand("sum-family", "Subsets with given size and element sum");
  fam_sumfam->add_option("--n", fam_n)->capture_default_str();
  fam_sumfam->add_option("--size", fam_size)->capture_default_str();
  fam_sumfam->add_option("--sum", fam_sum)->capture_default_str();
  bind(fam_sumfam, "families-sum", [&](Run& run) {
    run.report.parameters["n"] = fam_n;
    run.report.parameters["size"] = fam_size;
    run.report.parameters["sum"] = fam_sum;
    const SetFamily f = sum_restricted_family(fam_n, fam_size, fam_sum);
    run.report.results["members"] = f.size();
    run.write("family.family", io::write_family(f));
  });

  // ballpart
  auto* ball = app.add_subcommand("ballpart", "Simplex-Voronoi partition of the ball")
                   ->require_subcommand(1);
  int ball_dim = 2, ball_max = 8, ball_restarts = 32;
  bool ball_log2 = false;
  auto ball_json = [](const PartitionDiameterReport& r) {
    return json{{"d", r.d},
                {"piece_diameter", r.piece_diameter},
                {"restarts", r.restarts},
                {"convergence_tolerance", r.convergence_tolerance},
                {"mesh_certified", r.mesh_certified},
                {"mesh_diameter", r.mesh_diameter},
                {"certified_mesh_gap", r.certified_mesh_gap},
                {"confidence", r.confidence}};
  };
  auto* ball_u = ball->add_subcommand("u", "Piece diameter in one dimension");
  ball_u->add_option("--dim", ball_dim)->capture_default_str();
  ball_u->add_option("--restarts", ball_restarts)->capture_default_str();
  bind(ball_u, "ballpart-u", [&](Run& run) {
    run.report.parameters["dim"] = ball_dim;
    run.report.parameters["restarts"] = ball_restarts;
    const auto r = simplex_voronoi_piece_diameter(ball_dim, {.restarts = ball_restarts, .seed = g.seed});
    run.report.results["partition"] = ball_json(r);
  });
  auto* ball_table = ball->add_subcommand("table", "Piece diameters for d = 1..max");
  ball_table->add_option("--max-dim", ball_max)->capture_default_str();
  ball_table->add_option("--restarts", ball_restarts)->capture_default_str();
  ball_table->add_flag("--log2", ball_log2, "Binary logarithm in the reference bound");
  bind(ball_table, "ballpart-table", [&](Run& run) {
    run.report.parameters["max_dim"] = ball_max;
    run.report.parameters["restarts"] = ball_restarts;
    json rows = json::array();
    for (int d = 1; d <= ball_max; ++d) {
      auto row = ball_json(
          simplex_voronoi_piece_diameter(d, {.restarts = ball_restarts, .seed = g.seed}));
      if (d >= 2) {
        const auto lt = larman_tamvakis_reference(d, ball_log2 ? LogBase::Binary : LogBase::Natural);
        row["lower_reference"] = lt.value;
        row["lower_reference_note"] = lt.note;
      }
      rows.push_back(std::move(row));
    }
    run.report.results["table"] = rows;
  });

  // cube
  auto* cube = app.add_subcommand("cube", "Binary cube covering")->require_subcommand(1);
  int cube_n = 4, cube_s2 = 2;
  auto* cube_cover = cube->add_subcommand("cover", "Fewest parts of squared diameter <= s2");
  cube_cover->add_option("--n", cube_n)->capture_default_str();
  cube_cover->add_option("--s2", cube_s2)->capture_default_str();
  bind(cube_cover, "cube-cover", [&](Run& run) {
    run.report.parameters["n"] = cube_n;
    run.report.parameters["s2"] = cube_s2;
    const auto r = cube_cover_number(cube_n, cube_s2, g.node_limit);
    run.report.results["cover"] = solve_json(r);
    run.report.optimal["cover"] = r.optimal;
  });

  // equilateral
  auto* eq = app.add_subcommand("equilateral", "Equilateral set search in an l_p norm");
  std::string eq_p = "2";
  int eq_dim = 2, eq_size = 3, eq_restarts = 64;
  eq->add_option("--p", eq_p, "Exponent >= 1 or 'inf'")->capture_default_str();
  eq->add_option("--dim", eq_dim)->capture_default_str();
  eq->add_option("--size", eq_size)->capture_default_str();
  eq->add_option("--restarts", eq_restarts)->capture_default_str();
  bind(eq, "equilateral", [&](Run& run) {
    const NormSpec norm = (eq_p == "inf" || eq_p == "infinity") ? NormSpec::infinity()
                                                                  : NormSpec::p(std::stod(eq_p));
    run.report.parameters["p"] = norm.to_string();
    run.report.parameters["dim"] = eq_dim;
    run.report.parameters["size"] = eq_size;
    run.report.parameters["restarts"] = eq_restarts;
    const auto c = equilateral_search(norm, eq_dim, eq_size, g.seed, {.restarts = eq_restarts});
    run.report.results["max_deviation"] = c.max_deviation;
    run.report.results["best_restart"] = c.best_restart;
    run.report.results["points"] = c.points;
    run.report.results["verified_deviation"] = equilateral_deviation(c.points, norm);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  std::optional<Run> run;
  const auto start = std::chrono::steady_clock::now();
  auto fail = [&](const std::string& kind, const char* what) {
    std::cerr << kind << ": " << what << "\n";
    if (run) run->record_error(kind, what);
    return kExitInput;
  };
  try {
    ThreadScope threads(g.threads);
    run.emplace(g, join_args(argc, argv), tag);
    action(*run);
    return run->finish(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  } catch (const ParseError& e) {
    return fail("input error", e.what());
  } catch (const PreconditionError& e) {
    return fail("input error", e.what());
  } catch (const InstanceTooLarge& e) {
    return fail("instance too large", e.what());
  } catch (const std::exception& e) {
    return fail("error", e.what());
  }
}
