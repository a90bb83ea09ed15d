#pragma once

// Verification campaigns: instance streams (exhaustive, seeded random, graph6
// files), the per-theorem dispatch, deterministic multi-threaded reduction and
// the JSON report.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sturan/graph.hpp"
#include "sturan/verifiers.hpp"

namespace sturan {

inline constexpr std::string_view kToolkitVersion = "0.1.0";

/// Theorem ids accepted by run_suite and the CLI, in report order.
std::span<const std::string_view> theorem_ids();
bool is_theorem_id(std::string_view id);

// Labeled graphs ---------------------------------------------------------------

/// 2^C(n,2). Requires n <= 8.
std::uint64_t labeled_graph_count(std::size_t n);
/// Graph whose edge set is the bitmask `mask`; bit i is the i-th pair in
/// graph6 column order (0,1),(0,2),(1,2),(0,3),...
Graph labeled_graph(std::size_t n, std::uint64_t mask);
/// Bitmask of a graph on at most 8 vertices (inverse of labeled_graph).
std::uint64_t labeled_graph_mask(const Graph& g);

/// Every labeled graph on n vertices in bitmask order, starting at `offset`.
/// Throws std::invalid_argument if n > 8.
void enumerate_labeled_graphs(std::size_t n, const GraphSink& sink, std::uint64_t offset = 0);

// Random graphs ------------------------------------------------------------------

struct GraphModel {
  enum class Kind { gnp, regular };
  Kind kind = Kind::gnp;
  double p = 0.5;
  std::size_t d = 0;

  /// "gnp:P" or "reg:D". Throws std::invalid_argument otherwise.
  static GraphModel parse(std::string_view text);
  std::string to_string() const;
};

/// 64-bit mix of (seed, stream) used to derive independent generator seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic for fixed (model, n, seed). G(n,p) visits pairs in graph6
/// column order; the regular model pairs degree points, restarting from
/// scratch when no admissible pair is left. Throws std::invalid_argument for
/// p outside [0,1] or infeasible (n, d).
Graph random_graph(const GraphModel& model, std::size_t n, std::uint64_t seed);

// Suites -------------------------------------------------------------------------

enum class SuiteMode { exhaustive, random, file };

struct SuiteConfig {
  std::vector<std::string> theorems;  // empty means every theorem
  SuiteMode mode = SuiteMode::exhaustive;
  std::size_t n = 0;                  // exhaustive order, or order of random graphs
  std::size_t count = 0;              // random instances
  GraphModel model;
  std::uint64_t seed = 0;
  std::string input_path;             // graph6, one graph per line
  std::vector<std::size_t> r_values{2, 3};
  std::vector<std::size_t> s_values{1, 2};
  std::vector<std::size_t> k_values{2, 3};
  Tolerances tolerances;
  std::size_t workers = 1;
  std::string violation_log;  // JSON lines appended as violations are found

  /// Throws std::invalid_argument describing the first problem found.
  void validate() const;
};

struct ViolationRecord {
  std::uint64_t instance = 0;
  std::string g6;
  std::string branch;
  std::map<std::string, double> residuals;
  std::map<std::string, bool> conditions;
};

struct TheoremTally {
  std::string theorem;
  std::size_t instances = 0;
  std::size_t holds = 0;
  std::size_t vacuous = 0;
  std::size_t degenerate = 0;
  std::vector<ViolationRecord> violations;

  void add(const Verdict& v, std::uint64_t instance, const Graph& g);
  void merge(const TheoremTally& other);
};

struct Report {
  SuiteConfig config;
  std::vector<TheoremTally> results;
  std::size_t graphs = 0;
  double elapsed_seconds = 0.0;
  std::string version{kToolkitVersion};

  std::size_t violation_count() const;
};

/// Verdicts of one theorem on one graph for every applicable parameter choice
/// in `config`. Preconditions that fail on this graph yield a vacuous verdict.
std::vector<Verdict> evaluate_theorem(std::string_view theorem, GraphFacts& facts,
                                      const SuiteConfig& config);

/// Throws std::invalid_argument for a bad config and std::runtime_error when
/// the input file cannot be read.
Report run_suite(const SuiteConfig& config);

nlohmann::json to_json(const SuiteConfig& config);
/// With include_timing = false the elapsed time is written as 0, so two runs
/// of the same config serialize identically.
nlohmann::json to_json(const Report& report, bool include_timing = true);

/// Graphs from a graph6 file, one per line; blank lines are skipped.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace sturan
