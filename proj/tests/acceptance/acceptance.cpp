// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "sturan/families.hpp"
#include "sturan/graph6.hpp"
#include "sturan/harness.hpp"
#include "sturan/search.hpp"
#include "sturan/spectra.hpp"
#include "sturan/verifiers.hpp"

using namespace sturan;

namespace {

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string g6(const Graph& g) { return graph6_encode(g); }

// 1. Turán invariants three ways.
void turan_invariants(Check& out) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  std::size_t cases = 0;
  for (std::size_t r = 2; r <= 6; ++r) {
    for (std::size_t n = r; n <= 60; ++n) {
      ++cases;
      const auto by_parts = turan_edges_by_parts(n, r);
      const auto by_formula = turan_edges_by_formula(n, r);
      const auto by_complement = turan_edges_by_complement(n, r);
      out.require(by_formula.is_integer() && by_formula.num == by_parts && by_complement == by_parts,
                  "edge counts differ at n=" + std::to_string(n) + " r=" + std::to_string(r));
      const double closed = turan_params(n, r).lambda0;
      const double secular = secular_radius(turan_part_sizes(n, r));
      const double dense = spectral_radius(turan_graph(n, r));
      worst = std::max({worst, std::abs(closed - secular), std::abs(closed - dense)});
    }
  }
  const double elapsed = seconds_since(t0);
  out.require(worst <= 1e-8, "lambda0 disagreement " + std::to_string(worst));
  out.require(elapsed < 10.0, "runtime over 10 s");
  out.detail << cases << " (n,r) pairs, max lambda0 gap " << worst << ", " << elapsed << " s";
}

// 2. Edge count forces spectral radius on all graphs with 7 vertices.
void exhaustive_edge_to_spectral(Check& out) {
  const auto t0 = Clock::now();
  const std::size_t n = 7;
  const std::size_t rs[] = {2, 3, 4};
  std::vector<std::set<std::uint64_t>> equality(3);
  std::size_t violations = 0, applicable = 0;
  const std::uint64_t total = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    GraphFacts facts(labeled_graph(n, mask));
    for (std::size_t k = 0; k < 3; ++k) {
      const auto v = verify_edge_to_spectral(facts, rs[k]);
      if (v.outcome == Outcome::vacuous) continue;
      ++applicable;
      if (!v.holds()) {
        ++violations;
        out.require(false, "violation on " + g6(facts.graph()) + " r=" + std::to_string(rs[k]));
      }
      if (v.branch == "equality") equality[k].insert(mask);
    }
  }
  for (std::size_t k = 0; k < 3; ++k) {
    std::set<std::uint64_t> family;
    enumerate_family(n, rs[k], [&](const Graph& g) { family.insert(labeled_graph_mask(g)); });
    out.require(family == equality[k], "equality set differs from the family for r=" + std::to_string(rs[k]));
    out.detail << "r=" << rs[k] << ": equality set " << equality[k].size() << " = family " << family.size()
               << "; ";
  }
  const double elapsed = seconds_since(t0);
  out.require(elapsed <= 15 * 60, "runtime over 15 min");
  out.detail << total << " graphs, " << applicable << " applicable checks, " << violations << " violations, "
             << elapsed << " s single-threaded; ";

  // The same sweep through the campaign driver with four workers.
  SuiteConfig config;
  config.theorems = {"edge-to-spectral"};
  config.n = n;
  config.r_values = {2, 3, 4};
  config.workers = 4;
  const Report report = run_suite(config);
  out.require(report.graphs == total && report.violation_count() == 0, "campaign driver reports violations");
  out.require(report.elapsed_seconds <= 4 * 60, "4-worker runtime over 4 min");
  out.detail << "driver with 4 workers: " << report.violation_count() << " violations, " << report.elapsed_seconds
             << " s";
}

// 3. Dense-neighbourhood theorem on the same corpus.
void exhaustive_guiduli(Check& out) {
  const auto t0 = Clock::now();
  const std::size_t n = 7;
  std::size_t violations = 0, above = 0, applicable = 0, argmax_checks = 0;
  const std::uint64_t total = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    GraphFacts facts(labeled_graph(n, mask));
    for (std::size_t r : {2u, 3u}) {
      const auto v = verify_guiduli(facts, r);
      if (v.outcome == Outcome::vacuous) continue;
      ++applicable;
      if (v.branch == "above-turan-radius") {
        ++above;
        for (const auto& pv : facts.perron_vectors()) argmax_checks += pv.argmax.size();
      }
      if (!v.holds()) {
        ++violations;
        out.require(false, "violation on " + g6(facts.graph()) + " r=" + std::to_string(r));
      }
    }
  }
  out.detail << applicable << " applicable checks, " << above << " strictly above the Turán radius with "
             << argmax_checks << " argmax vertices checked, " << violations << " violations, "
             << seconds_since(t0) << " s";
}

// 4. Join preservation.
void join_preservation(Check& out) {
  const auto t0 = Clock::now();
  std::size_t checks = 0, violations = 0;
  double worst_root = 0.0;
  auto run = [&](GraphFacts& facts, std::size_t r, std::size_t s) {
    const auto v = verify_join_preservation(facts, r, s);
    ++checks;
    worst_root = std::max(worst_root, v.values.at("root_gap"));
    if (!v.holds()) {
      ++violations;
      out.require(false, "violation on " + g6(facts.graph()) + " r=" + std::to_string(r) +
                             " s=" + std::to_string(s) + " branch " + v.branch);
    }
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
      GraphFacts facts(labeled_graph(n, mask));
      for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t s : {1u, 2u}) run(facts, r, s);
      }
    }
  }
  const std::size_t exhaustive_checks = checks;
  const double ps[] = {0.3, 0.5, 0.8};
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(mix_seed(2024, i) % 12);
    const GraphModel model{GraphModel::Kind::gnp, ps[i % 3], 0};
    GraphFacts facts(random_graph(model, n, mix_seed(4, i)));
    for (std::size_t r = 1; r <= std::min<std::size_t>(n, 6); ++r) {
      for (std::size_t s : {1u, 2u, 3u}) run(facts, r, s);
    }
  }
  out.require(worst_root <= 1e-8, "join root disagrees with the eigensolve");
  out.detail << exhaustive_checks << " exhaustive + " << (checks - exhaustive_checks)
             << " random checks, " << violations << " violations, max root gap " << worst_root << ", "
             << seconds_since(t0) << " s";
}

// 5. Lemma suite.
void lemma_suite(Check& out) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(55);

  // Root of s chi(x)/x = 1: unique crossing on a grid, below the cap, equal to
  // the join eigensolve.
  double worst_root = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const GraphModel model{GraphModel::Kind::gnp, 0.2 + 0.6 * static_cast<double>(rng() % 4) / 3.0, 0};
    const Graph g = random_graph(model, n, rng());
    const std::size_t s = 1 + rng() % 4;
    const auto spec = spectrum(g);
    const double root = join_radius_root(spec, s);
    const double cap = join_radius_cap(g, s);
    worst_root = std::max(worst_root, std::abs(root - spectral_radius(join(g, Graph(s)))));
    out.require(root <= cap + 1e-9, "root above cap on " + g6(g));
    int crossings = 0;
    double prev = 0.0;
    const double lambda = spec.largest();
    for (int k = 1; k <= 400; ++k) {
      const double x = lambda + (cap + 2.0 - lambda) * k / 400.0;
      const double beta = static_cast<double>(s) * coronal_from_spectrum(spec, x) / x;
      if (k > 1) {
        out.require(beta < prev, "beta not decreasing on " + g6(g));
        if ((prev - 1.0) * (beta - 1.0) < 0.0) ++crossings;
      }
      prev = beta;
    }
    out.require(crossings <= 1, "multiple roots on " + g6(g));
  }
  out.require(worst_root <= 1e-8, "join root disagrees with the eigensolve");

  double worst_cap = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 4 + rng() % 17;
    std::size_t d = rng() % n;
    if ((n * d) % 2 == 1) d = d == 0 ? 0 : d - 1;
    const Graph g = random_graph({GraphModel::Kind::regular, 0.0, d}, n, rng());
    const std::size_t s = 1 + rng() % 5;
    worst_cap = std::max(worst_cap, std::abs(join_radius_cap(g, s) - join_radius_root(g, s)));
  }
  out.require(worst_cap <= 1e-9, "cap not tight on a regular graph");

  std::size_t coronal_checks = 0;
  std::uniform_real_distribution<double> offset(1e-3, 10.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Graph g = random_graph({GraphModel::Kind::gnp, 0.5, 0}, n, rng());
    const double lambda = g.edge_count() == 0 ? 0.0 : spectral_radius(g);
    const auto v = verify_coronal_bound(g, lambda + offset(rng));
    ++coronal_checks;
    out.require(v.holds(), "coronal bound fails on " + g6(g));
  }

  std::size_t quotient_checks = 0;
  for (std::size_t r = 1; r <= 6; ++r) {
    for (std::size_t n = 7; n <= 60; ++n) {
      for (std::size_t s = 1; s <= 5; ++s) {
        ++quotient_checks;
        out.require(verify_turan_quotient(n, r, s).holds(),
                    "quotient inequality fails at n=" + std::to_string(n) + " r=" + std::to_string(r) +
                        " s=" + std::to_string(s));
      }
    }
  }

  std::size_t members = 0, local_checks = 0;
  for (std::size_t r = 2; r <= 4; ++r) {
    for (std::size_t n = r; n <= 8; ++n) {
      const Graph turan = turan_graph(n, r);
      enumerate_family(n, r, [&](const Graph& g) {
        ++members;
        for (std::size_t s = 1; s <= 3; ++s) {
          out.require(verify_family_join_equality(g, r, s).holds(), "join equality fails on " + g6(g));
        }
        if (!is_isomorphic(g, turan)) {
          ++local_checks;
          out.require(verify_family_local(g, r).holds(), "local surplus fails on " + g6(g));
        }
      });
    }
  }
  const double elapsed = seconds_since(t0);
  out.require(elapsed < 120.0, "runtime over 2 min");
  out.detail << "root/cap max gaps " << worst_root << "/" << worst_cap << ", " << coronal_checks
             << " coronal, " << quotient_checks << " quotient, " << members << " family members ("
             << local_checks << " non-Turán), " << elapsed << " s";
}

// 6. Clique bounds and k-fold joins.
void clique_bounds(Check& out) {
  const auto t0 = Clock::now();
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto v = verify_clique_bound(complete_graph(n));
    out.require(v.holds() && std::abs(v.values.at("bound") - static_cast<double>(n)) <= 1e-9 &&
                    v.values.at("omega") == static_cast<double>(n),
                "K_n equality fails at n=" + std::to_string(n));
  }
  const auto c5 = verify_clique_bound(cycle_graph(5));
  out.require(c5.holds() && std::abs(c5.values.at("bound") - 1.921) <= 1e-3, "C5 bound is not 1.921");
  out.detail << "C5 bound " << c5.values.at("bound") << "; ";

  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Graph g = random_graph({GraphModel::Kind::gnp, 0.1 + 0.8 * static_cast<double>(rng() % 9) / 8.0, 0},
                                 n, rng());
    GraphFacts facts(g);
    out.require(facts.clique_number() == oracle::clique_number(g), "clique number disagrees on " + g6(g));
    out.require(verify_clique_bound(facts).holds(), "clique bound fails on " + g6(g));
  }

  std::size_t kfold = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const Graph g = random_graph({GraphModel::Kind::gnp, 0.5, 0}, n, rng());
    for (std::size_t k = 2; k <= 6; ++k) {
      ++kfold;
      const auto v = verify_kfold_join(g, k);
      out.require(v.holds() && v.conditions.at("kronecker_identity"), "k-fold checks fail on " + g6(g));
    }
  }
  out.detail << "10000 random clique checks with subset-scan omega, " << kfold << " k-fold checks, "
             << seconds_since(t0) << " s";
}

// 7. Monotonicity of joins with regular graphs.
void regular_join_monotonicity(Check& out) {
  const auto t0 = Clock::now();
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::pair<Graph, double>> regular;
    for (std::size_t d = 0; d < n; ++d) {
      if ((n * d) % 2 == 1) continue;
      for (auto& g : regular_graphs(n, d, Dedup::isomorphism_classes)) {
        regular.emplace_back(std::move(g), static_cast<double>(d));
      }
    }
    for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
      const Graph h = labeled_graph(n, mask);
      const double lambda_h = h.edge_count() == 0 ? 0.0 : spectral_radius(h);
      for (const auto& [g, lambda_g] : regular) {
        if (lambda_g < lambda_h - 1e-8 * (1.0 + lambda_g)) continue;
        for (std::size_t s = 1; s <= 3; ++s) {
          ++pairs;
          out.require(verify_regular_join_monotonicity(g, h, s).holds(),
                      "monotonicity fails for " + g6(g) + " vs " + g6(h));
        }
      }
    }
  }
  out.detail << pairs << " (G, H, s) triples, " << seconds_since(t0) << " s";
}

// 8. Convexity minimum.
void convexity(Check& out) {
  std::size_t cases = 0;
  for (std::size_t r = 2; r <= 3; ++r) {
    for (std::size_t n = r; n <= 8; ++n) {
      ++cases;
      const auto t = turan_params(n, r);
      const auto res = convexity_oracle(n, t.lambda0, static_cast<std::size_t>(2 * t.m0));
      std::vector<std::size_t> expected(t.q, t.a - 1);
      expected.insert(expected.end(), t.p, t.a);
      const std::string where = "n=" + std::to_string(n) + " r=" + std::to_string(r);
      out.require(std::abs(res.min_value - 1.0) <= 1e-9, "minimum is not 1 at " + where);
      out.require(res.argmin == expected, "argmin differs at " + where);
      out.require(res.minimizers == 1, "minimizer not unique at " + where);
    }
  }
  out.detail << cases << " (n, r) cases";
}

// 9. Hill climbing recovers the Turán graph.
void extremal_search_recovery(Check& out) {
  const auto t0 = Clock::now();
  std::size_t runs = 0;
  for (std::size_t n = 4; n <= 10; ++n) {
    for (std::size_t r = 2; r <= 4; ++r) {
      const Graph turan = turan_graph(n, std::min(r, n));
      const double lambda0 = turan_radius_capped(n, r);
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        ++runs;
        const auto res = extremal_search(n, r, seed, 10000);
        out.require(std::abs(res.radius - lambda0) <= 1e-6 && is_isomorphic(res.graph, turan),
                    "search misses T_" + std::to_string(r) + "(" + std::to_string(n) + ") with seed " +
                        std::to_string(seed) + ", found " + g6(res.graph));
      }
    }
  }
  out.detail << runs << " runs of 10000 evaluations, " << seconds_since(t0) << " s";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"Turán invariants: edge counts exact, lambda0 three ways within 1e-8", turan_invariants},
      {"All 2^21 graphs on 7 vertices, r in {2,3,4}: edges force spectral radius, equality set = family",
       exhaustive_edge_to_spectral},
      {"All 2^21 graphs on 7 vertices, r in {2,3}: dense neighbourhood theorem incl. argmax clause",
       exhaustive_guiduli},
      {"Join preservation: exhaustive n <= 6, s in {1,2}; 10000 random G(n,p), s <= 3", join_preservation},
      {"Lemma suite: join root and cap, coronal bound, quotient inequality, family join and local surplus",
       lemma_suite},
      {"Clique bound on K_n, C5 and 10000 random graphs; k-fold join checks on 1000 graphs", clique_bounds},
      {"Regular join monotonicity: all pairs with n <= 6, s in {1,2,3}", regular_join_monotonicity},
      {"Convexity minimum equals 1 at the Turán multiset, uniquely, r in {2,3}, n <= 8", convexity},
      {"Extremal search recovers T_r(n) for 4 <= n <= 10, 2 <= r <= 4, 5 seeds", extremal_search_recovery},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s [%zu] %s\n       %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                out.detail.str().c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
