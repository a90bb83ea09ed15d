// Command-line front end: Turán parameters, family listings, verification
// campaigns, single-graph spectra and the extremal search.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sturan/families.hpp"
#include "sturan/graph6.hpp"
#include "sturan/harness.hpp"
#include "sturan/search.hpp"
#include "sturan/spectra.hpp"

using namespace sturan;

namespace {

constexpr int kUsageError = 2;

int cmd_turan(std::size_t n, std::size_t r, bool as_json) {
  const auto t = turan_params(n, r);
  nlohmann::json j = {{"n", t.n},   {"r", t.r},           {"a", t.a},         {"b", t.b},
                      {"p", t.p},   {"q", t.q},           {"m0", t.m0},       {"e0", t.e0},
                      {"L", t.L},   {"M", t.M},           {"C", t.C},         {"lambda0", t.lambda0},
                      {"d_T", t.d_T}, {"d_0", t.d_0},     {"delta", t.delta}};
  if (as_json) {
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  for (auto it = j.begin(); it != j.end(); ++it) std::cout << it.key() << " = " << it.value() << '\n';
  return 0;
}

int cmd_families(std::size_t n, std::size_t r, bool print_g6, bool labeled) {
  const auto members = family_members(n, r, Dedup::labeled);
  const auto classes = isomorphism_classes(members);
  std::cout << "labeled members: " << members.size() << '\n'
            << "isomorphism classes: " << classes.size() << '\n';
  if (print_g6) {
    for (const auto& g : labeled ? members : classes) std::cout << graph6_encode(g) << '\n';
  }
  return 0;
}

int cmd_spectra(const std::string& g6, const std::vector<double>& xs, const std::vector<std::size_t>& ss) {
  const Graph g = graph6_decode(g6);
  const auto spec = spectrum(g);
  nlohmann::json j;
  j["n"] = g.order();
  j["m"] = g.edge_count();
  j["eigenvalues"] = spec.values;
  j["residual"] = spec.residual;
  if (g.order() > 0) {
    j["spectral_radius"] = spectral_radius(g);
    j["least_eigenvalue"] = spec.least();
    j["power_iteration_radius"] = power_iteration_radius(g);
    j["clique_number"] = clique_number(g);
  }
  for (double x : xs) {
    const auto both = coronal_both(g, x);
    j["coronal"].push_back({{"x", x}, {"by_solve", both.by_solve}, {"by_expansion", both.by_expansion}});
  }
  for (std::size_t s : ss) {
    j["join"].push_back({{"s", s},
                         {"root", join_radius_root(spec, s)},
                         {"eigensolve", spectral_radius(join(g, Graph(s)))},
                         {"cap", join_radius_cap(g, s)}});
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_search(std::size_t n, std::size_t r, std::uint64_t seed, std::size_t steps) {
  const auto res = extremal_search(n, r, seed, steps);
  const std::size_t parts = std::min(r, n);
  nlohmann::json j = {{"g6", graph6_encode(res.graph)},
                      {"radius", res.radius},
                      {"turan_radius", turan_radius_capped(n, r)},
                      {"isomorphic_to_turan", is_isomorphic(res.graph, turan_graph(n, parts))},
                      {"edges", res.graph.edge_count()},
                      {"evaluations", res.evaluations},
                      {"climbs", res.climbs}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral Turán verification toolkit"};
  app.set_version_flag("--version", std::string(kToolkitVersion));
  app.require_subcommand(1);

  std::size_t n = 0, r = 2;
  bool as_json = false;
  auto* turan = app.add_subcommand("turan", "Print the parameters of T_r(n)");
  turan->add_option("--n", n, "Order")->required();
  turan->add_option("--r", r, "Number of parts")->required();
  turan->add_flag("--json", as_json, "Emit JSON");

  bool print_g6 = false, labeled = false;
  auto* families = app.add_subcommand("families", "Count (and list) the extremal family");
  families->add_option("--n", n, "Order")->required()->check(CLI::Range(0, 12));
  families->add_option("--r", r, "Number of parts")->required();
  families->add_flag("--g6", print_g6, "Print graph6 lines");
  families->add_flag("--labeled", labeled, "List every labeled member rather than one per class");

  SuiteConfig cfg;
  std::string theorem, model = "gnp:0.5", json_path;
  std::size_t exhaustive_n = 0, count = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->add_option("--theorem", theorem, "Theorem id, or 'all'")->required();
  auto* ex = verify->add_option("--exhaustive", exhaustive_n, "All labeled graphs on N vertices");
  auto* rnd = verify->add_option("--random", count, "Number of random graphs");
  auto* inp = verify->add_option("--input", cfg.input_path, "graph6 file")->check(CLI::ExistingFile);
  ex->excludes(rnd)->excludes(inp);
  rnd->excludes(inp);
  verify->add_option("--model", model, "gnp:P or reg:D");
  verify->add_option("--n", cfg.n, "Order of random graphs");
  verify->add_option("--seed", cfg.seed, "64-bit seed");
  verify->add_option("--r", cfg.r_values, "Values of r")->delimiter(',');
  verify->add_option("--s", cfg.s_values, "Values of s")->delimiter(',');
  verify->add_option("--k", cfg.k_values, "Values of k for kfold-join")->delimiter(',');
  verify->add_option("--workers", cfg.workers, "Worker threads");
  verify->add_option("--json", json_path, "Write the report to PATH");
  verify->add_option("--log", cfg.violation_log, "Append violations to PATH as they are found");
  verify->add_option("--tol-equality", cfg.tolerances.equality, "Relative tie tolerance");
  verify->add_option("--tol-strict", cfg.tolerances.strict, "Strict-inequality margin");

  std::string g6;
  std::vector<double> xs;
  std::vector<std::size_t> join_s;
  auto* spectra_cmd = app.add_subcommand("spectra", "Spectral data of one graph");
  spectra_cmd->add_option("--g6", g6, "graph6 string")->required();
  spectra_cmd->add_option("--coronal", xs, "Evaluate the coronal at X");
  spectra_cmd->add_option("--join-s", join_s, "Join radius with s apexes");

  std::uint64_t seed = 1;
  std::size_t steps = 10000;
  auto* search = app.add_subcommand("search", "Hill-climb for the K_{r+1}-free spectral maximum");
  search->add_option("--n", n, "Order")->required()->check(CLI::Range(1, 30));
  search->add_option("--r", r, "Clique bound r")->required();
  search->add_option("--seed", seed, "Seed");
  search->add_option("--steps", steps, "Spectral radius evaluations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kUsageError;
  }

  try {
    if (*turan) return cmd_turan(n, r, as_json);
    if (*families) return cmd_families(n, r, print_g6, labeled);
    if (*spectra_cmd) return cmd_spectra(g6, xs, join_s);
    if (*search) return cmd_search(n, r, seed, steps);

    if (theorem != "all") cfg.theorems = {theorem};
    if (*ex) {
      cfg.mode = SuiteMode::exhaustive;
      cfg.n = exhaustive_n;
    } else if (*rnd) {
      cfg.mode = SuiteMode::random;
      cfg.count = count;
      cfg.model = GraphModel::parse(model);
    } else if (*inp) {
      cfg.mode = SuiteMode::file;
    } else {
      std::cerr << "verify: one of --exhaustive, --random, --input is required\n";
      return kUsageError;
    }
    cfg.validate();
    const auto report = run_suite(cfg);
    const auto j = to_json(report);
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) throw std::runtime_error("cannot write " + json_path);
      out << j.dump(2) << '\n';
    }
    for (const auto& t : report.results) {
      std::printf("%-26s instances %-9zu holds %-9zu vacuous %-9zu degenerate %-6zu violations %zu\n",
                  t.theorem.c_str(), t.instances, t.holds, t.vacuous, t.degenerate,
                  t.violations.size());
      for (const auto& v : t.violations) {
        std::printf("  investigate %s (instance %llu, branch %s)\n", v.g6.c_str(),
                    static_cast<unsigned long long>(v.instance), v.branch.c_str());
      }
    }
    std::printf("graphs %zu, elapsed %.2f s\n", report.graphs, report.elapsed_seconds);
    return report.violation_count() > 0 ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
}
