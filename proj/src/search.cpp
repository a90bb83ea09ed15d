#include "sturan/search.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sturan/harness.hpp"
#include "sturan/spectra.hpp"

namespace sturan {

namespace {

using Edge = std::pair<Vertex, Vertex>;

class Search {
 public:
  Search(std::size_t n, std::size_t r, std::uint64_t seed, std::size_t steps)
      : n_(n), r_(r), rng_(mix_seed(seed, 0)), budget_(steps) {}

  SearchResult run();

 private:
  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

  double evaluate(const Graph& g) {
    ++result_.evaluations;
    return g.edge_count() == 0 ? 0.0 : spectral_radius(g);
  }
  bool exhausted() const { return result_.evaluations >= budget_; }
  // Evaluations left after reserving one for scoring the finished climb.
  std::size_t spare() const {
    return result_.evaluations + 1 >= budget_ ? 0 : budget_ - result_.evaluations - 1;
  }

  // Adding uv creates K_{r+1} exactly when N(u) ∩ N(v) holds a K_{r-1}.
  bool admissible(const Graph& g, Vertex u, Vertex v, const std::set<Edge>& tabu) const {
    if (g.has_edge(u, v) || tabu.count({u, v})) return false;
    return !has_clique(g, g.neighbors(u) & g.neighbors(v), r_ - 1);
  }
  std::vector<Edge> candidates(const Graph& g, const std::set<Edge>& tabu) const {
    std::vector<Edge> out;
    for (Vertex v = 1; v < n_; ++v) {
      for (Vertex u = 0; u < v; ++u) {
        if (admissible(g, u, v, tabu)) out.push_back({u, v});
      }
    }
    return out;
  }

  void climb_steepest(Graph& g, const std::set<Edge>& tabu);
  void climb_random(Graph& g, const std::set<Edge>& tabu);
  std::set<Edge> kick(Graph& g);

  std::size_t n_, r_;
  std::mt19937_64 rng_;
  std::size_t budget_;
  SearchResult result_;
};

void Search::climb_steepest(Graph& g, const std::set<Edge>& tabu) {
  for (;;) {
    auto options = candidates(g, tabu);
    if (options.empty()) return;
    if (options.size() > spare()) {
      climb_random(g, tabu);
      return;
    }
    double best = -1.0;
    std::vector<Edge> ties;
    for (auto [u, v] : options) {
      g.add_edge(u, v);
      const double lambda = evaluate(g);
      g.remove_edge(u, v);
      if (lambda > best + 1e-12) {
        best = lambda;
        ties.assign(1, {u, v});
      } else if (lambda >= best - 1e-12) {
        ties.push_back({u, v});
      }
    }
    auto [u, v] = ties[below(ties.size())];
    g.add_edge(u, v);
  }
}

void Search::climb_random(Graph& g, const std::set<Edge>& tabu) {
  for (;;) {
    auto options = candidates(g, tabu);
    if (options.empty()) return;
    for (std::size_t i = options.size(); i > 1; --i) std::swap(options[i - 1], options[below(i)]);
    for (auto [u, v] : options) {
      if (admissible(g, u, v, tabu)) g.add_edge(u, v);
    }
  }
}

std::set<Edge> Search::kick(Graph& g) {
  std::set<Edge> removed;
  auto edges = g.edges();
  if (edges.empty()) return removed;
  const auto kind = below(3);
  if (kind == 2) {
    const auto v = static_cast<Vertex>(below(n_));
    for (Vertex u = 0; u < n_; ++u) {
      if (g.has_edge(u, v)) {
        g.remove_edge(u, v);
        removed.insert({std::min(u, v), std::max(u, v)});
      }
    }
    return removed;
  }
  for (std::uint64_t k = 0; k <= kind && !edges.empty(); ++k) {
    const auto i = below(edges.size());
    g.remove_edge(edges[i].first, edges[i].second);
    removed.insert({edges[i].first, edges[i].second});
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return removed;
}

SearchResult Search::run() {
  const std::set<Edge> none;
  Graph current(n_);
  climb_steepest(current, none);
  double lambda = evaluate(current);
  result_.graph = current;
  result_.radius = lambda;
  result_.climbs = 1;

  while (!exhausted()) {
    Graph next = current;
    std::set<Edge> tabu;
    if (below(20) == 0) {
      next = Graph(n_);
    } else {
      tabu = kick(next);
    }
    if (below(4) == 0) {
      climb_steepest(next, tabu);
    } else {
      climb_random(next, tabu);
    }
    // The tabu edges may still fit once the climb is over.
    climb_random(next, none);
    ++result_.climbs;
    const double value = evaluate(next);
    if (value >= lambda - 1e-12) {
      current = std::move(next);
      lambda = value;
      if (lambda > result_.radius + 1e-12) {
        result_.graph = current;
        result_.radius = lambda;
      }
    }
  }
  return result_;
}

}  // namespace

SearchResult extremal_search(std::size_t n, std::size_t r, std::uint64_t seed, std::size_t steps) {
  if (n < 1 || n > 30) throw std::invalid_argument("extremal_search: need 1 <= n <= 30");
  if (r < 1) throw std::invalid_argument("extremal_search: need r >= 1");
  return Search(n, r, seed, steps).run();
}

}  // namespace sturan
