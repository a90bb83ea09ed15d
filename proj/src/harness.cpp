#include "sturan/harness.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <fstream>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "sturan/families.hpp"
#include "sturan/graph6.hpp"

namespace sturan {

namespace {

constexpr std::array<std::string_view, 13> kTheorems = {
    "spectral-turan",   "edge-to-spectral",     "rayleigh-identity",
    "guiduli",          "symmetrization",       "join-preservation",
    "family-join-equality", "family-local",     "coronal-bound",
    "turan-quotient",   "clique-bound",         "kfold-join",
    "regular-join-monotonicity"};

// Uniform double in [0, 1) from the top 53 bits.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection, independent of the standard
// library's distribution implementations.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

Graph random_regular(std::size_t n, std::size_t d, std::mt19937_64& rng) {
  if (d == 0) return Graph(n);
  for (;;) {
    Graph g(n);
    std::vector<Vertex> points;
    points.reserve(n * d);
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);

    auto admissible = [&](std::size_t i, std::size_t j) {
      return points[i] != points[j] && !g.has_edge(points[i], points[j]);
    };
    auto remove = [&](std::size_t i) {
      points[i] = points.back();
      points.pop_back();
    };

    bool stuck = false;
    while (!points.empty() && !stuck) {
      bool paired = false;
      for (int attempt = 0; attempt < 64 && !paired; ++attempt) {
        const auto i = static_cast<std::size_t>(below(rng, points.size()));
        const auto j = static_cast<std::size_t>(below(rng, points.size()));
        if (i == j || !admissible(i, j)) continue;
        g.add_edge(points[i], points[j]);
        remove(std::max(i, j));
        remove(std::min(i, j));
        paired = true;
      }
      if (paired) continue;
      stuck = true;
      for (std::size_t i = 0; i < points.size() && stuck; ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
          if (admissible(i, j)) {
            stuck = false;
            break;
          }
        }
      }
    }
    if (!stuck) return g;
  }
}

bool fits(std::size_t r, std::size_t n, std::size_t min_r) { return r >= min_r && r <= n; }

Verdict vacuous_verdict(std::string_view theorem, std::string branch) {
  Verdict v;
  v.claim = std::string(theorem);
  v.branch = std::move(branch);
  v.outcome = Outcome::vacuous;
  return v;
}

// Per-worker evaluator holding caches that depend only on parameters.
class Evaluator {
 public:
  explicit Evaluator(const SuiteConfig& config) : cfg_(config) {}

  std::vector<Verdict> evaluate(std::string_view id, GraphFacts& facts);

 private:
  std::vector<std::size_t> rs(std::size_t n, std::size_t min_r) const {
    std::vector<std::size_t> out;
    for (std::size_t r : cfg_.r_values) {
      if (fits(r, n, min_r)) out.push_back(r);
    }
    return out;
  }
  const std::vector<std::pair<Graph, double>>& regular_pool(std::size_t n);

  const SuiteConfig& cfg_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Verdict> quotient_memo_;
  std::map<std::size_t, std::vector<std::pair<Graph, double>>> regular_memo_;
};

const std::vector<std::pair<Graph, double>>& Evaluator::regular_pool(std::size_t n) {
  auto it = regular_memo_.find(n);
  if (it != regular_memo_.end()) return it->second;
  std::vector<std::pair<Graph, double>> pool;
  for (std::size_t d = 0; d < n; ++d) {
    if ((n * d) % 2 != 0) continue;
    if (n <= 8) {
      for (auto& g : regular_graphs(n, d, Dedup::isomorphism_classes)) {
        const double lambda = g.edge_count() == 0 ? 0.0 : spectral_radius(g);
        pool.emplace_back(std::move(g), lambda);
      }
    } else {
      GraphModel model{GraphModel::Kind::regular, 0.0, d};
      Graph g = random_graph(model, n, mix_seed(cfg_.seed, 0x5eed0000u + d));
      pool.emplace_back(std::move(g), static_cast<double>(d));
    }
  }
  return regular_memo_.emplace(n, std::move(pool)).first->second;
}

std::vector<Verdict> Evaluator::evaluate(std::string_view id, GraphFacts& facts) {
  const Graph& g = facts.graph();
  const std::size_t n = g.order();
  const Tolerances& tol = cfg_.tolerances;
  std::vector<Verdict> out;
  if (n == 0) {
    out.push_back(vacuous_verdict(id, "empty-graph"));
    return out;
  }

  if (id == "spectral-turan") {
    for (std::size_t r : rs(n, 2)) out.push_back(verify_spectral_turan(facts, r, tol));
  } else if (id == "edge-to-spectral") {
    for (std::size_t r : rs(n, 2)) out.push_back(verify_edge_to_spectral(facts, r, tol));
  } else if (id == "rayleigh-identity") {
    for (std::size_t r : rs(n, 2)) out.push_back(verify_rayleigh_identity(g, r, tol));
  } else if (id == "guiduli") {
    for (std::size_t r : rs(n, 2)) out.push_back(verify_guiduli(facts, r, tol));
  } else if (id == "symmetrization") {
    out.push_back(verify_symmetrization(facts, tol));
  } else if (id == "join-preservation") {
    for (std::size_t r : rs(n, 1)) {
      for (std::size_t s : cfg_.s_values) {
        out.push_back(verify_join_preservation(facts, r, s, tol));
      }
    }
  } else if (id == "family-join-equality") {
    for (std::size_t r : rs(n, 2)) {
      const bool member = family_membership(g, r).has_value();
      for (std::size_t s : cfg_.s_values) {
        out.push_back(member ? verify_family_join_equality(g, r, s, tol)
                             : vacuous_verdict(id, "not-a-family-member"));
      }
    }
  } else if (id == "family-local") {
    for (std::size_t r : rs(n, 2)) {
      if (!family_membership(g, r)) {
        out.push_back(vacuous_verdict(id, "not-a-family-member"));
      } else if (is_isomorphic(g, turan_graph(n, r))) {
        out.push_back(vacuous_verdict(id, "turan-graph"));
      } else {
        out.push_back(verify_family_local(g, r, tol));
      }
    }
  } else if (id == "coronal-bound") {
    const double lambda = facts.radius();
    for (double offset : {0.1, 1.0, 10.0}) out.push_back(verify_coronal_bound(g, lambda + offset, tol));
  } else if (id == "turan-quotient") {
    for (std::size_t r : rs(n, 1)) {
      for (std::size_t s : cfg_.s_values) {
        auto key = std::make_tuple(n, r, s);
        auto it = quotient_memo_.find(key);
        if (it == quotient_memo_.end()) {
          it = quotient_memo_.emplace(key, verify_turan_quotient(n, r, s, tol)).first;
        }
        out.push_back(it->second);
      }
    }
  } else if (id == "clique-bound") {
    out.push_back(verify_clique_bound(facts, tol));
  } else if (id == "kfold-join") {
    for (std::size_t k : cfg_.k_values) {
      if (k >= 2 && k * n <= 200) out.push_back(verify_kfold_join(g, k, tol));
    }
  } else if (id == "regular-join-monotonicity") {
    const double lambda_h = facts.radius();
    for (const auto& [reg, lambda_g] : regular_pool(n)) {
      if (lambda_g < lambda_h - tol.equality * (1.0 + lambda_g)) continue;
      for (std::size_t s : cfg_.s_values) {
        out.push_back(verify_regular_join_monotonicity(reg, g, s, tol));
      }
    }
  } else {
    throw std::invalid_argument("unknown theorem id: " + std::string(id));
  }
  if (out.empty()) out.push_back(vacuous_verdict(id, "no-applicable-parameters"));
  return out;
}

std::vector<std::string> selected_theorems(const SuiteConfig& cfg) {
  std::vector<std::string> out;
  for (auto id : kTheorems) {
    if (cfg.theorems.empty() ||
        std::find(cfg.theorems.begin(), cfg.theorems.end(), id) != cfg.theorems.end()) {
      out.emplace_back(id);
    }
  }
  return out;
}

nlohmann::json violation_json(const ViolationRecord& v) {
  nlohmann::json j;
  j["instance"] = v.instance;
  j["g6"] = v.g6;
  j["branch"] = v.branch;
  j["residuals"] = v.residuals;
  j["conditions"] = v.conditions;
  j["status"] = "investigate";
  return j;
}

// Appends each violation as one JSON line the moment it is found.
class ViolationStream {
 public:
  explicit ViolationStream(const std::string& path) {
    if (!path.empty()) {
      out_.open(path, std::ios::app);
      if (!out_) throw std::runtime_error("cannot open violation log: " + path);
    }
  }
  void write(std::string_view theorem, const ViolationRecord& v) {
    if (!out_.is_open()) return;
    auto j = violation_json(v);
    j["theorem"] = theorem;
    std::lock_guard lock(mu_);
    out_ << j.dump() << '\n' << std::flush;
  }

 private:
  std::ofstream out_;
  std::mutex mu_;
};

}  // namespace

std::span<const std::string_view> theorem_ids() { return kTheorems; }

bool is_theorem_id(std::string_view id) {
  return std::find(kTheorems.begin(), kTheorems.end(), id) != kTheorems.end();
}

// Labeled graphs -------------------------------------------------------------

std::uint64_t labeled_graph_count(std::size_t n) {
  if (n > 8) throw std::invalid_argument("labeled enumeration supports n <= 8");
  return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

Graph labeled_graph(std::size_t n, std::uint64_t mask) {
  if (mask >= labeled_graph_count(n)) throw std::out_of_range("edge mask exceeds C(n,2) bits");
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::uint64_t labeled_graph_mask(const Graph& g) {
  if (g.order() > 8) throw std::invalid_argument("edge masks support n <= 8");
  std::uint64_t mask = 0;
  std::size_t bit = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) mask |= std::uint64_t{1} << bit;
    }
  }
  return mask;
}

void enumerate_labeled_graphs(std::size_t n, const GraphSink& sink, std::uint64_t offset) {
  const std::uint64_t total = labeled_graph_count(n);
  for (std::uint64_t mask = offset; mask < total; ++mask) sink(labeled_graph(n, mask));
}

// Random graphs ----------------------------------------------------------------

GraphModel GraphModel::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("model must be gnp:P or reg:D");
  const auto kind = text.substr(0, colon);
  const auto arg = std::string(text.substr(colon + 1));
  GraphModel m;
  std::size_t used = 0;
  try {
    if (kind == "gnp") {
      m.kind = Kind::gnp;
      m.p = std::stod(arg, &used);
    } else if (kind == "reg") {
      m.kind = Kind::regular;
      m.d = std::stoul(arg, &used);
    } else {
      used = std::string::npos;
    }
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != arg.size() || arg.empty()) throw std::invalid_argument("model must be gnp:P or reg:D");
  if (m.kind == Kind::gnp && !(m.p >= 0.0 && m.p <= 1.0)) {
    throw std::invalid_argument("gnp probability must lie in [0, 1]");
  }
  return m;
}

std::string GraphModel::to_string() const {
  if (kind == Kind::regular) return "reg:" + std::to_string(d);
  std::array<char, 32> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), p);
  return "gnp:" + std::string(buf.data(), res.ptr);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over a golden-ratio stride.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph random_graph(const GraphModel& model, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (model.kind == GraphModel::Kind::gnp) {
    if (!(model.p >= 0.0 && model.p <= 1.0)) throw std::invalid_argument("gnp: p outside [0, 1]");
    Graph g(n);
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (unit_interval(rng) < model.p) g.add_edge(i, j);
      }
    }
    return g;
  }
  const std::size_t d = model.d;
  if ((d >= n && !(n == 0 && d == 0)) || (n * d) % 2 != 0) {
    throw std::invalid_argument("regular: need d < n and n*d even");
  }
  // Dense targets are sampled as complements of sparse ones.
  if (n > 0 && 2 * d > n - 1) return complement(random_regular(n, n - 1 - d, rng));
  return random_regular(n, d, rng);
}

// Suites -------------------------------------------------------------------------

void SuiteConfig::validate() const {
  for (const auto& id : theorems) {
    if (!is_theorem_id(id)) throw std::invalid_argument("unknown theorem id: " + id);
  }
  switch (mode) {
    case SuiteMode::exhaustive:
      if (n > 8) throw std::invalid_argument("exhaustive mode supports n <= 8");
      break;
    case SuiteMode::random:
      if (count < 1) throw std::invalid_argument("random mode needs count >= 1");
      if (n > kMaxVertices) throw std::invalid_argument("random order too large");
      if (model.kind == GraphModel::Kind::regular &&
          ((model.d >= n && n > 0) || (n * model.d) % 2 != 0)) {
        throw std::invalid_argument("regular model needs d < n and n*d even");
      }
      if (model.kind == GraphModel::Kind::gnp && !(model.p >= 0.0 && model.p <= 1.0)) {
        throw std::invalid_argument("gnp probability must lie in [0, 1]");
      }
      break;
    case SuiteMode::file:
      if (input_path.empty()) throw std::invalid_argument("file mode needs an input path");
      break;
  }
  if (r_values.empty()) throw std::invalid_argument("at least one r value is required");
  for (auto r : r_values) {
    if (r < 1) throw std::invalid_argument("r values must be positive");
  }
  for (auto s : s_values) {
    if (s < 1) throw std::invalid_argument("s values must be positive");
  }
  if (workers < 1) throw std::invalid_argument("worker count must be positive");
}

void TheoremTally::add(const Verdict& v, std::uint64_t instance, const Graph& g) {
  ++instances;
  switch (v.outcome) {
    case Outcome::holds: ++holds; break;
    case Outcome::vacuous: ++vacuous; break;
    case Outcome::degenerate: ++degenerate; break;
    case Outcome::violation:
      violations.push_back({instance, graph6_encode(g), v.branch, v.residuals, v.conditions});
      break;
  }
}

void TheoremTally::merge(const TheoremTally& other) {
  instances += other.instances;
  holds += other.holds;
  vacuous += other.vacuous;
  degenerate += other.degenerate;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::size_t Report::violation_count() const {
  std::size_t total = 0;
  for (const auto& t : results) total += t.violations.size();
  return total;
}

std::vector<Verdict> evaluate_theorem(std::string_view theorem, GraphFacts& facts,
                                      const SuiteConfig& config) {
  Evaluator ev(config);
  return ev.evaluate(theorem, facts);
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(graph6_decode(line));
  }
  return graphs;
}

Report run_suite(const SuiteConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto ids = selected_theorems(config);

  std::vector<Graph> file_graphs;
  std::uint64_t total = 0;
  switch (config.mode) {
    case SuiteMode::exhaustive: total = labeled_graph_count(config.n); break;
    case SuiteMode::random: total = config.count; break;
    case SuiteMode::file:
      file_graphs = read_graph6_file(config.input_path);
      total = file_graphs.size();
      break;
  }
  auto instance = [&](std::uint64_t i) -> Graph {
    switch (config.mode) {
      case SuiteMode::exhaustive: return labeled_graph(config.n, i);
      case SuiteMode::random: return random_graph(config.model, config.n, mix_seed(config.seed, i));
      case SuiteMode::file: break;
    }
    return file_graphs[i];
  };

  ViolationStream stream(config.violation_log);
  const std::size_t workers =
      static_cast<std::size_t>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(config.workers, total)));
  std::vector<std::vector<TheoremTally>> partial(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto work = [&](std::size_t w) {
    try {
      auto& tallies = partial[w];
      tallies.resize(ids.size());
      for (std::size_t k = 0; k < ids.size(); ++k) tallies[k].theorem = ids[k];
      Evaluator ev(config);
      const std::uint64_t lo = total * w / workers;
      const std::uint64_t hi = total * (w + 1) / workers;
      for (std::uint64_t i = lo; i < hi; ++i) {
        GraphFacts facts(instance(i));
        for (std::size_t k = 0; k < ids.size(); ++k) {
          for (const auto& v : ev.evaluate(ids[k], facts)) {
            tallies[k].add(v, i, facts.graph());
            if (v.outcome == Outcome::violation) stream.write(ids[k], tallies[k].violations.back());
          }
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Report report;
  report.config = config;
  report.graphs = static_cast<std::size_t>(total);
  report.results.resize(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    report.results[k].theorem = ids[k];
    for (std::size_t w = 0; w < workers; ++w) {
      if (!partial[w].empty()) report.results[k].merge(partial[w][k]);
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json to_json(const SuiteConfig& c) {
  nlohmann::json j;
  j["theorems"] = c.theorems.empty() ? selected_theorems(c) : c.theorems;
  switch (c.mode) {
    case SuiteMode::exhaustive:
      j["mode"] = "exhaustive";
      j["n"] = c.n;
      break;
    case SuiteMode::random:
      j["mode"] = "random";
      j["n"] = c.n;
      j["count"] = c.count;
      j["model"] = c.model.to_string();
      j["seed"] = c.seed;
      break;
    case SuiteMode::file:
      j["mode"] = "file";
      j["input"] = c.input_path;
      break;
  }
  j["r"] = c.r_values;
  j["s"] = c.s_values;
  j["k"] = c.k_values;
  j["tolerances"] = {{"equality", c.tolerances.equality},
                     {"strict", c.tolerances.strict},
                     {"identity", c.tolerances.identity}};
  j["workers"] = c.workers;
  return j;
}

nlohmann::json to_json(const Report& report, bool include_timing) {
  nlohmann::json j;
  j["config"] = to_json(report.config);
  j["graphs"] = report.graphs;
  auto& results = j["results"] = nlohmann::json::array();
  for (const auto& t : report.results) {
    nlohmann::json r;
    r["theorem"] = t.theorem;
    r["instances"] = t.instances;
    r["holds"] = t.holds;
    r["vacuous"] = t.vacuous;
    r["degenerate"] = t.degenerate;
    auto& vs = r["violations"] = nlohmann::json::array();
    for (const auto& v : t.violations) vs.push_back(violation_json(v));
    results.push_back(std::move(r));
  }
  j["elapsed_seconds"] = include_timing ? report.elapsed_seconds : 0.0;
  j["version"] = report.version;
  return j;
}

}  // namespace sturan
