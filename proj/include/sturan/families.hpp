#pragma once

// Turán graphs, their closed-form invariants, and the extremal family of
// graphs sharing both the edge count and the spectral radius of T_r(n).
//
// Notation follows the usual division n = r*a + b with 0 <= b < r: T_r(n) has
// b parts of size a+1 followed by r-b parts of size a.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sturan/graph.hpp"

namespace sturan {

/// Exact fraction with a positive denominator, always in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  bool operator==(const Rational&) const = default;
  bool is_integer() const { return den == 1; }
};

struct TuranParams {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t a = 0;  // floor(n / r)
  std::size_t b = 0;  // n mod r
  std::size_t p = 0;  // b (a + 1): vertices in the larger parts
  std::size_t q = 0;  // (r - b) a: vertices in the smaller parts
  std::int64_t m0 = 0;  // non-edges of T_r(n)
  std::int64_t e0 = 0;  // edges of T_r(n)
  double lambda0 = 0.0;
  std::int64_t L = 0;  // n - 2a - 1
  std::int64_t M = 0;  // a (a + 1) (r - 1)
  std::int64_t C = 0;  // r a (a + 1)
  double d_T = 0.0;    // 2 e0 / n
  double d_0 = 0.0;    // d_T - 2 / n
  double delta = 0.0;  // lambda0 - d_T
};

/// All derived quantities of T_r(n). Requires 1 <= r <= n; r = 1 describes the
/// edgeless graph. Throws std::invalid_argument otherwise.
TuranParams turan_params(std::size_t n, std::size_t r);

/// Part sizes of T_r(n): b copies of a+1, then r-b copies of a.
std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t r);
Graph turan_graph(std::size_t n, std::size_t r);

/// e(T_r(n)) three ways: summing products of part sizes, the closed form
/// ((1 - 1/r) n^2 - b (1 - b/r)) / 2 in exact rationals, and C(n,2) - m0.
std::int64_t turan_edges_by_parts(std::size_t n, std::size_t r);
Rational turan_edges_by_formula(std::size_t n, std::size_t r);
std::int64_t turan_edges_by_complement(std::size_t n, std::size_t r);

/// lambda(T_r(m)) and e(T_r(m)) with the part count capped at m, so that
/// r > m gives K_m. m = 0 gives 0.
double turan_radius_capped(std::size_t m, std::size_t r);
long double turan_radius_capped_extended(std::size_t m, std::size_t r);
std::int64_t turan_edges_capped(std::size_t m, std::size_t r);

/// Spectral radius of the complete multipartite graph with the given part
/// sizes: the positive root of sum_i n_i / (lambda + n_i) = 1, by bisection to
/// width 1e-11. A single part gives 0. Throws on an empty list or a zero size.
double secular_radius(std::span<const std::size_t> part_sizes);

enum class Dedup { labeled, isomorphism_classes };

struct EnumerationSummary {
  std::size_t emitted = 0;
  std::string note;  // "parity" when n*d is odd
};

using GraphSink = std::function<void(const Graph&)>;

/// Every labeled d-regular graph on n vertices exactly once. Vertices are
/// completed in label order, each taking its missing neighbours from later
/// vertices with spare degree. Requires d < n (or n = d = 0) and n <= 12.
EnumerationSummary enumerate_regular(std::size_t n, std::size_t d, const GraphSink& sink);
std::vector<Graph> regular_graphs(std::size_t n, std::size_t d, Dedup mode = Dedup::labeled);

/// Partition certifying membership of the extremal family.
struct FamilyWitness {
  VertexSet x;  // vertices of degree n-a-1 (empty when b = 0)
  VertexSet y;  // vertices of degree n-a
  std::size_t x_inner_degree = 0;  // (b-1)(a+1)
  std::size_t y_inner_degree = 0;  // (r-b-1)a
};

/// Every labeled member of the extremal family for (n, r) exactly once:
/// regular graphs when r | n, otherwise every choice of the X vertex set
/// together with regular graphs on X and on Y and all X-Y edges.
EnumerationSummary enumerate_family(std::size_t n, std::size_t r, const GraphSink& sink);
std::vector<Graph> family_members(std::size_t n, std::size_t r, Dedup mode = Dedup::labeled);

/// Witness if G belongs to the family for r (r = 1: G edgeless). X and Y are
/// reconstructed from degrees. Throws std::invalid_argument if n < r or r = 0.
std::optional<FamilyWitness> family_membership(const Graph& g, std::size_t r);

/// Representatives of the isomorphism classes among `graphs`, first
/// occurrence kept.
std::vector<Graph> isomorphism_classes(const std::vector<Graph>& graphs);

struct ConvexityResult {
  double min_value = 0.0;
  std::vector<std::size_t> argmin;  // ascending multiset
  std::size_t minimizers = 0;       // multisets within 1e-12 relative of the minimum
};

/// Brute-force minimum of sum_i 1/(lambda0 + c_i + 1) over integer multisets
/// {c_1..c_n} with 0 <= c_i <= n-1 and sum c_i <= budget. Requires n <= 8.
ConvexityResult convexity_oracle(std::size_t n, double lambda0, std::size_t budget);

}  // namespace sturan
