#pragma once

// Heuristic search for K_{r+1}-free graphs of maximum spectral radius.

#include <cstddef>
#include <cstdint>

#include "sturan/graph.hpp"

namespace sturan {

struct SearchResult {
  Graph graph;
  double radius = 0.0;
  std::size_t evaluations = 0;  // spectral radius computations spent
  std::size_t climbs = 0;
};

/// Iterated local search over single-edge toggles. A climb adds edges that
/// keep the graph K_{r+1}-free until none is left, choosing either the
/// steepest increase of lambda or a random admissible edge. Between climbs a
/// kick removes one or two random edges, or every edge at a random vertex; the
/// result replaces the incumbent when lambda does not drop. `steps` bounds the
/// number of spectral radius evaluations, except that one is always spent.
/// Requires 1 <= r, n <= 30.
SearchResult extremal_search(std::size_t n, std::size_t r, std::uint64_t seed,
                             std::size_t steps);

}  // namespace sturan
