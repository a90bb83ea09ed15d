#pragma once

// Executable checkers for the spectral Turán statements. Each returns a
// Verdict carrying the branch taken, witnesses, and the numeric slacks it
// tested, so a result can be re-derived from the input graph alone.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sturan/families.hpp"
#include "sturan/graph.hpp"
#include "sturan/spectra.hpp"

namespace sturan {

enum class Outcome { holds, vacuous, degenerate, violation };

std::string_view to_string(Outcome o);

struct Verdict {
  std::string claim;
  Outcome outcome = Outcome::holds;
  std::string branch;
  std::vector<Vertex> witness_vertices;
  Partition witness_partition;
  /// Slack values; each must be >= -tolerance.
  std::map<std::string, double> residuals;
  /// Combinatorial facts and strict-margin checks that must be true.
  std::map<std::string, bool> conditions;
  /// Informational quantities (radii, bounds) that are not themselves tested.
  std::map<std::string, double> values;
  double tolerance = 0.0;

  bool holds() const { return outcome != Outcome::violation; }
  /// True iff every residual and condition passes.
  bool checks_pass() const;
};

struct Tolerances {
  double equality = 1e-8;  // |lambda - lambda0| <= equality * (1 + lambda0) counts as a tie
  double strict = 1e-8;    // a strict inequality must hold by more than this margin
  double identity = 1e-9;  // relative tolerance for exact algebraic identities
};

/// Memoized spectral and combinatorial facts about one graph. Not thread-safe;
/// each worker keeps its own.
class GraphFacts {
 public:
  explicit GraphFacts(Graph g);

  const Graph& graph() const { return g_; }
  std::size_t order() const { return g_.order(); }
  double radius();
  double least();
  const Spectrum& full_spectrum();
  std::size_t clique_number();
  const std::vector<PerronVector>& perron_vectors();
  /// lambda(G[N(v)]), 0 for isolated v.
  double neighborhood_radius(Vertex v);
  long double neighborhood_radius_extended(Vertex v);

 private:
  void ensure_values();

  Graph g_;
  std::optional<std::vector<double>> values_;
  std::optional<Spectrum> spectrum_;
  std::optional<std::size_t> omega_;
  std::optional<std::vector<PerronVector>> perron_;
  std::vector<std::optional<double>> nbr_radius_;
};

/// Complement degrees c_v, weights x_v = 1/(lambda0 + c_v + 1), S = sum x_v.
struct ComplementProfile {
  std::vector<std::size_t> c;
  std::vector<double> x;
  double sum = 0.0;
};

ComplementProfile complement_profile(const Graph& g, double lambda0);

/// lambda = lambda(T_r(n)), mu = lambda(K̄_s ∨ T_r(n)), eta = lambda(G),
/// rho = lambda(K̄_s ∨ G).
struct JoinContext {
  std::size_t s = 0;
  double lambda = 0.0;
  double mu = 0.0;
  double eta = 0.0;
  double rho = 0.0;
};

JoinContext make_join_context(GraphFacts& facts, std::size_t r, std::size_t s);

// Every verifier throws std::invalid_argument when its documented
// precondition fails.

/// A K_{r+1}-free graph has lambda <= lambda(T_r(n)) with equality only for
/// T_r(n). Graphs containing K_{r+1} are vacuous. r >= 2.
Verdict verify_spectral_turan(GraphFacts& facts, std::size_t r, const Tolerances& tol = {});
Verdict verify_spectral_turan(const Graph& g, std::size_t r, const Tolerances& tol = {});

/// e(G) >= e(T_r(n)) implies lambda(G) >= lambda(T_r(n)); ties force family
/// membership. Also re-checks the complement-weight Rayleigh argument.
Verdict verify_edge_to_spectral(GraphFacts& facts, std::size_t r, const Tolerances& tol = {});
Verdict verify_edge_to_spectral(const Graph& g, std::size_t r, const Tolerances& tol = {});

/// x^T A x = lambda0 sum x^2 + S(S-1) + sum_{uv in E(complement)} (x_u - x_v)^2.
Verdict verify_rayleigh_identity(const Graph& g, std::size_t r, const Tolerances& tol = {});

/// lambda(G) >= lambda(T_r(n)) implies G = T_r(n) or some vertex has
/// lambda(G[N(v)]) > lambda(T_{r-1}(d(v))); above the threshold every
/// maximum-entry vertex of every component Perron vector qualifies.
Verdict verify_guiduli(GraphFacts& facts, std::size_t r, const Tolerances& tol = {});
Verdict verify_guiduli(const Graph& g, std::size_t r, const Tolerances& tol = {});

/// The three comparisons between lambda(K̄_s ∨ G) and lambda(K̄_s ∨ T_r(n)).
/// Also checks join_radius_root against a direct eigensolve of the join.
Verdict verify_join_preservation(GraphFacts& facts, std::size_t r, std::size_t s,
                                 const Tolerances& tol = {});
Verdict verify_join_preservation(const Graph& g, std::size_t r, std::size_t s,
                                 const Tolerances& tol = {});

/// For a family member F: lambda(K̄_s ∨ F) = lambda(K̄_s ∨ T_r(n)), with the
/// equitable quotient matrix of the X, Y, Z partition checked cell by cell.
Verdict verify_family_join_equality(const Graph& g, std::size_t r, std::size_t s,
                                    const Tolerances& tol = {});

/// A family member other than T_r(n) has a vertex u with
/// e(G[N(u)]) > e(T_{r-1}(d(u))), and the surplus equals half the number of
/// complement edges leaving {u} ∪ N_complement(u) within u's side.
Verdict verify_family_local(const Graph& g, std::size_t r, const Tolerances& tol = {});

/// chi_G(x) <= n (x + d) / (x^2 - lambda^2). Requires x > lambda(G) + 1e-6.
Verdict verify_coronal_bound(const Graph& g, double x, const Tolerances& tol = {});

/// n (mu + d0) / (mu^2 - lambda^2) < mu / s for the Turán graph and its join.
Verdict verify_turan_quotient(std::size_t n, std::size_t r, std::size_t s,
                              const Tolerances& tol = {});

/// omega >= 1 + 2m / ((n - d)(d - lambda_n)), omega >= n / (n - d), and the
/// concise Turán implication for every r < n. Edgeless graphs are degenerate.
Verdict verify_clique_bound(GraphFacts& facts, const Tolerances& tol = {});
Verdict verify_clique_bound(const Graph& g, const Tolerances& tol = {});

/// Kronecker form of the k-fold join adjacency, the Weyl lower bound on its
/// least eigenvalue, and the clique bound obtained after dividing by k.
Verdict verify_kfold_join(const Graph& g, std::size_t k, const Tolerances& tol = {});

/// For regular G with lambda(G) >= lambda(H): lambda(K̄_s ∨ G) >= lambda(K̄_s ∨ H).
Verdict verify_regular_join_monotonicity(const Graph& g, const Graph& h, std::size_t s,
                                         const Tolerances& tol = {});

/// lambda(G) <= lambda(K̄_s ∨ G[N(v)]) for every maximum-entry vertex v of every
/// component Perron vector, s = n - d(v).
Verdict verify_symmetrization(GraphFacts& facts, const Tolerances& tol = {});

}  // namespace sturan
