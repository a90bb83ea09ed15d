#include "sturan/verifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sturan {

namespace {

double scaled(double eps, double magnitude) { return eps * (1.0 + std::abs(magnitude)); }

void settle(Verdict& v, Outcome when_ok) {
  v.outcome = v.checks_pass() ? when_ok : Outcome::violation;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Partition as_partition(const VertexSet& a, const VertexSet& b) {
  Partition parts;
  if (!a.empty()) parts.push_back(a.to_vector());
  if (!b.empty()) parts.push_back(b.to_vector());
  return parts;
}

double radius_or_zero(const Graph& g) { return g.order() == 0 ? 0.0 : spectral_radius(g); }

}  // namespace

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::vacuous: return "vacuous";
    case Outcome::degenerate: return "degenerate";
    case Outcome::violation: return "violation";
  }
  return "unknown";
}

bool Verdict::checks_pass() const {
  for (const auto& [name, slack] : residuals) {
    if (!(slack >= -tolerance)) return false;  // NaN fails too
  }
  for (const auto& [name, ok] : conditions) {
    if (!ok) return false;
  }
  return true;
}

// GraphFacts ---------------------------------------------------------------

GraphFacts::GraphFacts(Graph g) : g_(std::move(g)), nbr_radius_(g_.order()) {}

void GraphFacts::ensure_values() {
  if (values_) return;
  values_ = spectrum_ ? spectrum_->values : eigenvalues(g_);
}

double GraphFacts::radius() {
  if (g_.order() == 0) throw std::invalid_argument("spectral radius of the empty graph");
  if (g_.edge_count() == 0) return 0.0;
  ensure_values();
  return values_->back();
}

double GraphFacts::least() {
  if (g_.order() == 0) throw std::invalid_argument("least eigenvalue of the empty graph");
  ensure_values();
  return values_->front();
}

const Spectrum& GraphFacts::full_spectrum() {
  if (!spectrum_) spectrum_ = spectrum(g_);
  return *spectrum_;
}

std::size_t GraphFacts::clique_number() {
  if (!omega_) omega_ = sturan::clique_number(g_);
  return *omega_;
}

const std::vector<PerronVector>& GraphFacts::perron_vectors() {
  if (!perron_) perron_ = sturan::perron_vectors(g_);
  return *perron_;
}

double GraphFacts::neighborhood_radius(Vertex v) {
  auto& slot = nbr_radius_.at(v);
  if (!slot) {
    auto sub = induced_neighborhood(g_, v);
    slot = radius_or_zero(sub.graph);
  }
  return *slot;
}

long double GraphFacts::neighborhood_radius_extended(Vertex v) {
  auto sub = induced_neighborhood(g_, v);
  return sub.graph.order() == 0 ? 0.0L : spectral_radius_extended(sub.graph);
}

// Shared pieces --------------------------------------------------------------

ComplementProfile complement_profile(const Graph& g, double lambda0) {
  ComplementProfile p;
  const std::size_t n = g.order();
  p.c.resize(n);
  p.x.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    p.c[v] = n - 1 - g.degree(v);
    p.x[v] = 1.0 / (lambda0 + static_cast<double>(p.c[v]) + 1.0);
    p.sum += p.x[v];
  }
  return p;
}

JoinContext make_join_context(GraphFacts& facts, std::size_t r, std::size_t s) {
  const Graph& g = facts.graph();
  const std::size_t n = g.order();
  JoinContext ctx;
  ctx.s = s;
  auto parts = turan_part_sizes(n, r);
  ctx.lambda = secular_radius(parts);
  parts.push_back(s);
  ctx.mu = secular_radius(parts);
  ctx.eta = facts.radius();
  ctx.rho = spectral_radius(join(g, Graph(s)));
  return ctx;
}

// Spectral Turán -------------------------------------------------------------

Verdict verify_spectral_turan(GraphFacts& facts, std::size_t r, const Tolerances& tol) {
  require(r >= 2, "spectral-turan: r must be at least 2");
  const Graph& g = facts.graph();
  require(g.order() >= 1, "spectral-turan: graph must be nonempty");
  const std::size_t n = g.order();

  Verdict v;
  v.claim = "spectral-turan";
  const std::size_t omega = facts.clique_number();
  v.values["omega"] = static_cast<double>(omega);
  if (omega > r) {
    v.branch = "not-applicable";
    v.outcome = Outcome::vacuous;
    return v;
  }

  const double lambda0 = turan_radius_capped(n, r);
  const double lambda = facts.radius();
  v.tolerance = scaled(tol.equality, lambda0);
  v.values["lambda"] = lambda;
  v.values["lambda0"] = lambda0;
  v.residuals["turan_minus_radius"] = lambda0 - lambda;

  if (std::abs(lambda - lambda0) <= v.tolerance) {
    v.branch = "equality";
    v.conditions["isomorphic_to_turan"] = is_isomorphic(g, turan_graph(n, std::min(r, n)));
  } else {
    v.branch = "strict";
  }
  settle(v, Outcome::holds);
  return v;
}

Verdict verify_spectral_turan(const Graph& g, std::size_t r, const Tolerances& tol) {
  GraphFacts facts(g);
  return verify_spectral_turan(facts, r, tol);
}

// Edges to spectral radius ---------------------------------------------------

Verdict verify_edge_to_spectral(GraphFacts& facts, std::size_t r, const Tolerances& tol) {
  const Graph& g = facts.graph();
  const std::size_t n = g.order();
  require(r >= 2 && n >= r, "edge-to-spectral: need 2 <= r <= n");

  const auto tp = turan_params(n, r);
  Verdict v;
  v.claim = "edge-to-spectral";
  v.tolerance = scaled(tol.equality, tp.lambda0);
  const auto e = static_cast<std::int64_t>(g.edge_count());
  v.values["edges"] = static_cast<double>(e);
  v.values["e0"] = static_cast<double>(tp.e0);
  v.values["lambda0"] = tp.lambda0;
  if (e < tp.e0) {
    v.branch = "below-edge-threshold";
    v.outcome = Outcome::vacuous;
    return v;
  }

  const double lambda = facts.radius();
  v.values["lambda"] = lambda;
  v.residuals["radius_minus_turan"] = lambda - tp.lambda0;

  // The weighted test vector from the complement degrees.
  const auto profile = complement_profile(g, tp.lambda0);
  double quad = 0.0, norm = 0.0;
  for (auto [a, b] : g.edges()) quad += 2.0 * profile.x[a] * profile.x[b];
  for (double xv : profile.x) norm += xv * xv;
  const double rayleigh = quad / norm;
  v.values["weight_sum"] = profile.sum;
  v.values["rayleigh"] = rayleigh;
  v.residuals["weight_sum_minus_one"] = profile.sum - 1.0;
  v.residuals["rayleigh_minus_turan"] = rayleigh - tp.lambda0;
  v.residuals["radius_minus_rayleigh"] = lambda - rayleigh;

  if (lambda <= tp.lambda0 + v.tolerance) {
    v.branch = "equality";
    const auto witness = family_membership(g, r);
    v.conditions["family_member"] = witness.has_value();
    v.conditions["edge_count_equal"] = e == tp.e0;
    if (witness) v.witness_partition = as_partition(witness->x, witness->y);
  } else {
    v.branch = "strict";
  }
  settle(v, Outcome::holds);
  return v;
}

Verdict verify_edge_to_spectral(const Graph& g, std::size_t r, const Tolerances& tol) {
  GraphFacts facts(g);
  return verify_edge_to_spectral(facts, r, tol);
}

Verdict verify_rayleigh_identity(const Graph& g, std::size_t r, const Tolerances& tol) {
  const std::size_t n = g.order();
  require(r >= 2 && n >= r, "rayleigh-identity: need 2 <= r <= n");
  const auto tp = turan_params(n, r);
  const auto profile = complement_profile(g, tp.lambda0);
  const auto& x = profile.x;

  double lhs = 0.0;
  for (auto [a, b] : g.edges()) lhs += 2.0 * x[a] * x[b];
  double squares = 0.0;
  for (double xv : x) squares += xv * xv;
  double spread = 0.0;
  for (auto [a, b] : complement(g).edges()) spread += (x[a] - x[b]) * (x[a] - x[b]);
  const double rhs = tp.lambda0 * squares + profile.sum * (profile.sum - 1.0) + spread;

  Verdict v;
  v.claim = "rayleigh-identity";
  v.branch = "identity";
  v.tolerance = scaled(tol.identity, lhs);
  v.values["lhs"] = lhs;
  v.values["rhs"] = rhs;
  v.residuals["identity_gap"] = -std::abs(lhs - rhs);
  settle(v, Outcome::holds);
  return v;
}

// Dense neighbourhoods -------------------------------------------------------

Verdict verify_guiduli(GraphFacts& facts, std::size_t r, const Tolerances& tol) {
  const Graph& g = facts.graph();
  const std::size_t n = g.order();
  require(r >= 2 && n >= r, "guiduli: need 2 <= r <= n");

  const auto tp = turan_params(n, r);
  const double lambda = facts.radius();
  Verdict v;
  v.claim = "guiduli";
  v.tolerance = scaled(tol.equality, tp.lambda0);
  v.values["lambda"] = lambda;
  v.values["lambda0"] = tp.lambda0;
  if (lambda < tp.lambda0 - v.tolerance) {
    v.branch = "below-turan-radius";
    v.outcome = Outcome::vacuous;
    return v;
  }

  // Strict margin lambda(G[N(v)]) - lambda(T_{r-1}(d(v))), confirmed in
  // extended precision before it is allowed to fail.
  auto is_witness = [&](Vertex u) {
    const std::size_t d = g.degree(u);
    const double margin = facts.neighborhood_radius(u) - turan_radius_capped(d, r - 1);
    if (margin > tol.strict) return true;
    if (margin < -1e-3) return false;
    const long double precise =
        facts.neighborhood_radius_extended(u) - turan_radius_capped_extended(d, r - 1);
    return precise > static_cast<long double>(tol.strict);
  };

  for (Vertex u = 0; u < n; ++u) {
    if (is_witness(u)) v.witness_vertices.push_back(u);
  }

  if (g.edge_count() == static_cast<std::size_t>(tp.e0) && is_isomorphic(g, turan_graph(n, r))) {
    v.branch = "isomorphic-to-turan";
    settle(v, Outcome::holds);
    return v;
  }

  v.branch = "dense-neighborhood-witness";
  v.conditions["witness_exists"] = !v.witness_vertices.empty();
  if (lambda > tp.lambda0 + v.tolerance) {
    v.branch = "above-turan-radius";
    bool all = true;
    for (const auto& pv : facts.perron_vectors()) {
      for (Vertex u : pv.argmax) {
        if (!std::binary_search(v.witness_vertices.begin(), v.witness_vertices.end(), u)) {
          all = false;
        }
      }
    }
    v.conditions["every_argmax_vertex_is_witness"] = all;
  }
  settle(v, Outcome::holds);
  return v;
}

Verdict verify_guiduli(const Graph& g, std::size_t r, const Tolerances& tol) {
  GraphFacts facts(g);
  return verify_guiduli(facts, r, tol);
}

Verdict verify_symmetrization(GraphFacts& facts, const Tolerances& tol) {
  const Graph& g = facts.graph();
  require(g.order() >= 1, "symmetrization: graph must be nonempty");
  const std::size_t n = g.order();
  Verdict v;
  v.claim = "symmetrization";
  v.branch = "argmax-vertices";
  v.tolerance = tol.equality;
  const double lambda = facts.radius();
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& pv : facts.perron_vectors()) {
    for (Vertex u : pv.argmax) {
      auto sub = induced_neighborhood(g, u);
      const double joined = spectral_radius(join(sub.graph, Graph(n - g.degree(u))));
      worst = std::min(worst, joined - lambda);
      v.witness_vertices.push_back(u);
    }
  }
  std::sort(v.witness_vertices.begin(), v.witness_vertices.end());
  v.witness_vertices.erase(std::unique(v.witness_vertices.begin(), v.witness_vertices.end()),
                           v.witness_vertices.end());
  v.residuals["min_gap"] = worst;
  settle(v, Outcome::holds);
  return v;
}

// Joins with independent sets --------------------------------------------------

Verdict verify_join_preservation(GraphFacts& facts, std::size_t r, std::size_t s,
                                 const Tolerances& tol) {
  const Graph& g = facts.graph();
  const std::size_t n = g.order();
  require(r >= 1 && s >= 1 && n >= r, "join-preservation: need r, s >= 1 and n >= r");

  const auto ctx = make_join_context(facts, r, s);
  const double root = join_radius_root(facts.full_spectrum(), s);

  Verdict v;
  v.claim = "join-preservation";
  v.tolerance = scaled(tol.equality, ctx.mu);
  v.values["lambda"] = ctx.lambda;
  v.values["mu"] = ctx.mu;
  v.values["eta"] = ctx.eta;
  v.values["rho"] = ctx.rho;
  v.values["root_gap"] = std::abs(root - ctx.rho);
  v.conditions["root_matches_eigensolve"] = std::abs(root - ctx.rho) <= 1e-8;
  v.conditions["mu_exceeds_lambda"] = ctx.mu > ctx.lambda;
  v.residuals["rho_minus_eta"] = ctx.rho - ctx.eta;

  const double t = v.tolerance;
  const bool eta_tie = std::abs(ctx.eta - ctx.lambda) <= t;
  const bool rho_tie = std::abs(ctx.rho - ctx.mu) <= t;
  std::optional<FamilyWitness> witness;
  auto member = [&] {
    if (!witness) witness = family_membership(g, r);
    if (witness) v.witness_partition = as_partition(witness->x, witness->y);
    return witness.has_value();
  };

  bool applicable = false;
  if (ctx.rho >= ctx.mu - t) {
    applicable = true;
    v.branch = "part1";
    v.residuals["part1_eta_minus_lambda"] = ctx.eta - ctx.lambda;
    if (eta_tie) {
      v.conditions["part1_family_member"] = member();
      v.conditions["part1_rho_equals_mu"] = rho_tie;
    }
  }
  if (ctx.rho > ctx.mu + t) {
    v.branch = "part2";
    bool strict = ctx.eta > ctx.lambda + tol.strict;
    if (!strict) {
      const long double eta = spectral_radius_extended(g);
      const long double lam = turan_radius_capped_extended(n, r);
      strict = eta > lam + static_cast<long double>(tol.strict);
    }
    v.conditions["part2_eta_exceeds_lambda"] = strict;
  }
  if (rho_tie && eta_tie) {
    v.branch = "part1-part3-equality";
    v.conditions["part3_family_member"] = member();
  }
  if (!applicable) v.branch = "below-join-threshold";
  settle(v, applicable ? Outcome::holds : Outcome::vacuous);
  return v;
}

Verdict verify_join_preservation(const Graph& g, std::size_t r, std::size_t s,
                                 const Tolerances& tol) {
  GraphFacts facts(g);
  return verify_join_preservation(facts, r, s, tol);
}

Verdict verify_family_join_equality(const Graph& g, std::size_t r, std::size_t s,
                                    const Tolerances& tol) {
  const std::size_t n = g.order();
  require(r >= 2 && s >= 1 && n >= r, "family-join-equality: need r >= 2, s >= 1, n >= r");
  const auto witness = family_membership(g, r);
  require(witness.has_value(), "family-join-equality: graph is not a family member");
  const auto tp = turan_params(n, r);

  const Graph joined = join(g, Graph(s));
  const double lhs = spectral_radius(joined);
  const double rhs = spectral_radius(join(turan_graph(n, r), Graph(s)));

  Partition parts = as_partition(witness->x, witness->y);
  std::vector<Vertex> apex(s);
  for (std::size_t i = 0; i < s; ++i) apex[i] = n + i;
  parts.push_back(apex);
  const auto quotient = quotient_matrix(joined, parts);

  const auto ai = static_cast<double>(tp.a);
  const auto bi = static_cast<double>(tp.b);
  const auto ri = static_cast<double>(tp.r);
  const auto si = static_cast<double>(s);
  std::vector<std::vector<double>> expected;
  if (tp.b >= 1) {
    expected = {{(bi - 1) * (ai + 1), (ri - bi) * ai, si},
                {bi * (ai + 1), (ri - bi - 1) * ai, si},
                {bi * (ai + 1), (ri - bi) * ai, 0.0}};
  } else {
    expected = {{(ri - 1) * ai, si}, {static_cast<double>(n), 0.0}};
  }
  bool matches = quotient.cells.size() == expected.size();
  for (std::size_t i = 0; matches && i < expected.size(); ++i) {
    for (std::size_t j = 0; j < expected.size(); ++j) {
      if (quotient.cells(i, j) != expected[i][j]) matches = false;
    }
  }

  Verdict v;
  v.claim = "family-join-equality";
  v.branch = tp.b >= 1 ? "three-part-quotient" : "two-part-quotient";
  v.tolerance = scaled(tol.equality, rhs);
  v.witness_partition = parts;
  v.values["join_radius"] = lhs;
  v.values["turan_join_radius"] = rhs;
  v.residuals["join_radius_gap"] = -std::abs(lhs - rhs);
  v.residuals["quotient_radius_gap"] = -std::abs(quotient_radius(quotient) - lhs);
  v.conditions["equitable"] = quotient.equitable;
  v.conditions["quotient_matches"] = matches;
  settle(v, Outcome::holds);
  return v;
}

Verdict verify_family_local(const Graph& g, std::size_t r, const Tolerances& tol) {
  const std::size_t n = g.order();
  require(r >= 2 && n >= r, "family-local: need 2 <= r <= n");
  const auto witness = family_membership(g, r);
  require(witness.has_value(), "family-local: graph is not a family member");
  require(!is_isomorphic(g, turan_graph(n, r)), "family-local: graph is the Turán graph");

  const Graph h = complement(g);
  Verdict v;
  v.claim = "family-local";
  v.branch = "surplus-witness";
  v.tolerance = tol.identity;
  v.witness_partition = as_partition(witness->x, witness->y);

  bool formula = true;
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (Vertex u = 0; u < n; ++u) {
    const auto nbrs = g.neighbors(u);
    const auto inside = static_cast<std::int64_t>(edges_within(g, nbrs));
    const std::int64_t surplus = inside - turan_edges_capped(g.degree(u), r - 1);
    best = std::max(best, surplus);
    if (surplus > 0) v.witness_vertices.push_back(u);

    // A = {u} ∪ N_H(u), B = the rest of u's side.
    const VertexSet& side = witness->x.contains(u) ? witness->x : witness->y;
    VertexSet a = h.neighbors(u);
    a.insert(u);
    const VertexSet b = side - a;
    const auto crossing = static_cast<std::int64_t>(edges_between(h, a, b));
    if (2 * surplus != crossing) formula = false;
  }
  v.values["max_surplus"] = static_cast<double>(best);
  v.conditions["witness_exists"] = !v.witness_vertices.empty();
  v.conditions["surplus_formula"] = formula;
  settle(v, Outcome::holds);
  return v;
}

// Coronal and quotient inequalities ------------------------------------------

Verdict verify_coronal_bound(const Graph& g, double x, const Tolerances& tol) {
  const std::size_t n = g.order();
  require(n >= 1, "coronal-bound: graph must be nonempty");
  const double lambda = radius_or_zero(g);
  if (!(x > lambda + 1e-6)) throw std::invalid_argument("coronal-bound: x too close to the spectrum");

  const double chi = coronal(g, x);
  const double d = g.average_degree();
  const double bound = static_cast<double>(n) * (x + d) / (x * x - lambda * lambda);
  Verdict v;
  v.claim = "coronal-bound";
  v.branch = g.is_regular() ? "regular" : "irregular";
  v.tolerance = scaled(tol.equality, bound);
  v.values["coronal"] = chi;
  v.values["bound"] = bound;
  v.residuals["bound_minus_coronal"] = bound - chi;
  settle(v, Outcome::holds);
  return v;
}

Verdict verify_turan_quotient(std::size_t n, std::size_t r, std::size_t s, const Tolerances&) {
  require(r >= 1 && s >= 1 && n >= r, "turan-quotient: need r, s >= 1 and n >= r");
  const auto tp = turan_params(n, r);
  auto parts = turan_part_sizes(n, r);
  const double lambda = secular_radius(parts);
  parts.push_back(s);
  const double mu = secular_radius(parts);
  const double nn = static_cast<double>(n);
  const double lhs = nn * (mu + tp.d_0) / (mu * mu - lambda * lambda);
  const double rhs = mu / static_cast<double>(s);

  Verdict v;
  v.claim = "turan-quotient";
  v.branch = r == 1 ? "single-part" : "multipartite";
  v.tolerance = 0.0;
  v.values["lambda"] = lambda;
  v.values["mu"] = mu;
  v.values["lhs"] = lhs;
  v.values["rhs"] = rhs;
  v.residuals["slack"] = rhs - lhs;
  v.conditions["strict_inequality"] = lhs < rhs - 1e-10;
  settle(v, Outcome::holds);
  return v;
}

// Clique bounds --------------------------------------------------------------

Verdict verify_clique_bound(GraphFacts& facts, const Tolerances& tol) {
  const Graph& g = facts.graph();
  const std::size_t n = g.order();
  require(n >= 1, "clique-bound: graph must be nonempty");
  const std::size_t m = g.edge_count();
  const auto omega = static_cast<double>(facts.clique_number());

  Verdict v;
  v.claim = "clique-bound";
  v.tolerance = tol.equality;
  v.values["omega"] = omega;
  if (m == 0) {
    v.branch = "degenerate";
    v.conditions["omega_at_least_one"] = omega >= 1.0;
    settle(v, Outcome::degenerate);
    return v;
  }

  const double nn = static_cast<double>(n);
  const double d = 2.0 * static_cast<double>(m) / nn;
  const double least = facts.least();
  const double bound = 1.0 + 2.0 * static_cast<double>(m) / ((nn - d) * (d - least));
  const double ratio = nn / (nn - d);
  v.branch = "least-eigenvalue";
  v.values["bound"] = bound;
  v.values["ratio_bound"] = ratio;
  v.values["least_eigenvalue"] = least;
  v.residuals["omega_minus_bound"] = omega - bound;
  v.residuals["omega_minus_ratio_bound"] = omega - ratio;

  // Integer form of e > (1 - 1/r) n^2 / 2.
  bool concise = true;
  for (std::size_t r = 1; r < n; ++r) {
    if (2 * r * m > (r - 1) * n * n && facts.clique_number() < r + 1) concise = false;
  }
  v.conditions["concise_turan"] = concise;
  settle(v, Outcome::holds);
  return v;
}

Verdict verify_clique_bound(const Graph& g, const Tolerances& tol) {
  GraphFacts facts(g);
  return verify_clique_bound(facts, tol);
}

Verdict verify_kfold_join(const Graph& g, std::size_t k, const Tolerances& tol) {
  const std::size_t n = g.order();
  require(k >= 2 && n >= 1, "kfold-join: need k >= 2 and a nonempty graph");
  if (k * n > 200) throw std::length_error("kfold-join: k * n exceeds 200");

  const Graph hk = k_fold_join(g, k);
  bool kronecker = hk.order() == k * n;
  for (std::size_t i = 0; kronecker && i < k * n; ++i) {
    for (std::size_t j = 0; j < k * n; ++j) {
      const std::size_t ci = i / n, cj = j / n, u = i % n, w = j % n;
      // I_k ⊗ A + (J_k - I_k) ⊗ J_n
      const bool expected = ci == cj ? g.has_edge(u, w) : true;
      if (i != j && hk.has_edge(i, j) != expected) kronecker = false;
      if (i == j && hk.has_edge(i, j)) kronecker = false;
    }
  }

  DenseMatrix<double> shifted(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) shifted(i, j) = (g.has_edge(i, j) ? 1.0 : 0.0) - 1.0;
  }
  const double weyl = jacobi_eigen(shifted, false).values.front();
  const double least_hk = least_eigenvalue(hk);

  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  const double s = nn - g.average_degree();
  const double omega = static_cast<double>(clique_number(g));
  const double bound = 1.0 / kk + nn * (kk * nn - s) / (s * (kk * nn - s - least_hk));

  Verdict v;
  v.claim = "kfold-join";
  v.branch = "kronecker-weyl-divide";
  v.tolerance = tol.equality;
  v.values["least_eigenvalue_join"] = least_hk;
  v.values["least_eigenvalue_shifted"] = weyl;
  v.values["bound"] = bound;
  v.values["omega"] = omega;
  v.conditions["kronecker_identity"] = kronecker;
  v.conditions["edge_count_identity"] =
      hk.edge_count() == k * g.edge_count() + k * (k - 1) / 2 * n * n;
  v.residuals["weyl_bound"] = least_hk - weyl;
  v.residuals["omega_minus_bound"] = omega - bound;
  settle(v, Outcome::holds);
  return v;
}

Verdict verify_regular_join_monotonicity(const Graph& g, const Graph& h, std::size_t s,
                                         const Tolerances& tol) {
  require(g.order() == h.order() && g.order() >= 1, "regular-join-monotonicity: size mismatch");
  require(g.is_regular(), "regular-join-monotonicity: first graph must be regular");
  require(s >= 1, "regular-join-monotonicity: s must be positive");
  const double lg = radius_or_zero(g);
  const double lh = radius_or_zero(h);
  const double t = scaled(tol.equality, lg);
  require(lg >= lh - t, "regular-join-monotonicity: lambda(G) < lambda(H)");

  const double jg = spectral_radius(join(g, Graph(s)));
  const double jh = spectral_radius(join(h, Graph(s)));
  const double cap = join_radius_cap(lg, g.order(), s);

  Verdict v;
  v.claim = "regular-join-monotonicity";
  v.branch = std::abs(lg - lh) <= t ? "equal-radius" : "larger-radius";
  v.tolerance = scaled(tol.equality, jg);
  v.values["join_radius_regular"] = jg;
  v.values["join_radius_other"] = jh;
  v.values["cap"] = cap;
  v.residuals["join_order"] = jg - jh;
  v.residuals["cap_tight"] = -std::abs(jg - cap);
  settle(v, Outcome::holds);
  return v;
}

}  // namespace sturan
