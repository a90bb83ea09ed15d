#include "sturan/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace sturan {
namespace {

constexpr std::size_t kMaxSweeps = 100;
constexpr double kTieTolerance = 1e-9;
constexpr double kRootWidth = 1e-11;

template <class T>
T convergence_floor(std::size_t n);

template <>
double convergence_floor<double>(std::size_t n) {
  return 1e-12 * static_cast<double>(n);
}

template <>
long double convergence_floor<long double>(std::size_t n) {
  return 1e-16L * static_cast<long double>(n);
}

template <class T>
T off_diagonal_norm(const DenseMatrix<T>& a) {
  T sum = 0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = p + 1; q < a.size(); ++q) sum += 2 * a(p, q) * a(p, q);
  }
  return std::sqrt(sum);
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace

template <class T>
EigenDecomposition<T> jacobi_eigen(DenseMatrix<T> a, bool with_vectors) {
  const std::size_t n = a.size();
  EigenDecomposition<T> out;
  DenseMatrix<T> v;
  if (with_vectors) {
    v = DenseMatrix<T>(n);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = T{1};
  }
  const T floor = convergence_floor<T>(n);
  std::size_t sweep = 0;
  for (;; ++sweep) {
    if (off_diagonal_norm(a) <= floor) break;
    if (sweep == kMaxSweeps) throw std::runtime_error("jacobi_eigen: no convergence");
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const T apq = a(p, q);
        if (apq == T{0}) continue;
        const T theta = (a(q, q) - a(p, p)) / (2 * apq);
        T t;
        if (std::abs(theta) > T{1e150}) {
          t = 1 / (2 * theta);
        } else {
          t = 1 / (std::abs(theta) + std::sqrt(theta * theta + 1));
          if (theta < 0) t = -t;
        }
        const T c = 1 / std::sqrt(t * t + 1);
        const T s = t * c;
        const T tau = s / (1 + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = T{0};
        a(q, p) = T{0};
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const T g = a(r, p);
          const T h = a(r, q);
          a(r, p) = a(p, r) = g - s * (h + g * tau);
          a(r, q) = a(q, r) = h + s * (g - h * tau);
        }
        if (with_vectors) {
          for (std::size_t r = 0; r < n; ++r) {
            const T g = v(r, p);
            const T h = v(r, q);
            v(r, p) = g - s * (h + g * tau);
            v(r, q) = h + s * (g - h * tau);
          }
        }
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a(order[k], order[k]);
  if (with_vectors) {
    out.vectors = DenseMatrix<T>(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
  }
  out.sweeps = sweep;
  return out;
}

template EigenDecomposition<double> jacobi_eigen(DenseMatrix<double>, bool);
template EigenDecomposition<long double> jacobi_eigen(DenseMatrix<long double>, bool);

// ---------------------------------------------------------------------------

double Spectrum::ones_projection(std::size_t i) const {
  return std::accumulate(basis[i].begin(), basis[i].end(), 0.0);
}

Spectrum spectrum(const Graph& g) {
  const std::size_t n = g.order();
  auto dec = jacobi_eigen(adjacency_matrix<double>(g), true);
  Spectrum s;
  s.values = dec.values;
  s.basis.assign(n, std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < n; ++r) s.basis[k][r] = dec.vectors(r, k);
  }
  for (std::size_t k = 0; k < n; ++k) {
    double norm2 = 0.0;
    for (Vertex r = 0; r < n; ++r) {
      double av = 0.0;
      g.neighbors(r).for_each([&](Vertex c) { av += s.basis[k][c]; });
      const double d = av - s.values[k] * s.basis[k][r];
      norm2 += d * d;
    }
    s.residual = std::max(s.residual, std::sqrt(norm2));
  }
  return s;
}

std::vector<double> eigenvalues(const Graph& g) {
  return jacobi_eigen(adjacency_matrix<double>(g), false).values;
}

double spectral_radius(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("spectral_radius: empty vertex set");
  if (g.edge_count() == 0) return 0.0;
  return eigenvalues(g).back();
}

long double spectral_radius_extended(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("spectral_radius: empty vertex set");
  if (g.edge_count() == 0) return 0.0L;
  return jacobi_eigen(adjacency_matrix<long double>(g), false).values.back();
}

double least_eigenvalue(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("least_eigenvalue: empty vertex set");
  return eigenvalues(g).front();
}

double power_iteration_radius(const Graph& g, int steps) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("power_iteration_radius: empty vertex set");
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
    for (Vertex v = 0; v < n; ++v) {
      double acc = in[v];
      g.neighbors(v).for_each([&](Vertex u) { acc += in[u]; });
      out[v] = acc;
    }
  };
  for (int it = 0; it < steps; ++it) {
    apply(x, y);
    const double norm = std::sqrt(dot(y, y));
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  apply(x, y);
  return dot(x, y) / dot(x, x) - 1.0;
}

// ---------------------------------------------------------------------------

namespace {

struct ComponentPerron {
  PerronVector vector;
  double radius = 0.0;
};

ComponentPerron component_perron(const Graph& g, const VertexSet& comp) {
  const auto sub = induced_subgraph(g, comp);
  auto dec = jacobi_eigen(adjacency_matrix<double>(sub.graph), true);
  const std::size_t m = sub.vertices.size();
  const std::size_t top = m - 1;
  double sum = 0.0;
  for (std::size_t r = 0; r < m; ++r) sum += dec.vectors(r, top);
  const double sign = sum < 0 ? -1.0 : 1.0;
  ComponentPerron out;
  out.radius = dec.values[top];
  out.vector.eigenvalue = dec.values[top];
  out.vector.entries.assign(g.order(), 0.0);
  double norm2 = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    const double e = std::max(0.0, sign * dec.vectors(r, top));
    out.vector.entries[sub.vertices[r]] = e;
    norm2 += e * e;
  }
  const double norm = std::sqrt(norm2);
  double max_entry = 0.0;
  for (auto& e : out.vector.entries) {
    e /= norm;
    max_entry = std::max(max_entry, e);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (out.vector.entries[v] >= max_entry * (1.0 - kTieTolerance)) out.vector.argmax.push_back(v);
  }
  return out;
}

std::vector<ComponentPerron> all_component_perrons(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("perron vector of the empty vertex set");
  std::vector<ComponentPerron> all;
  for (const auto& comp : connected_components(g)) all.push_back(component_perron(g, comp));
  return all;
}

}  // namespace

PerronVector perron_vector(const Graph& g) {
  auto all = all_component_perrons(g);
  double best = 0.0;
  for (const auto& c : all) best = std::max(best, c.radius);
  for (auto& c : all) {
    if (c.radius >= best - kTieTolerance * (1.0 + best)) return std::move(c.vector);
  }
  throw std::logic_error("perron_vector: no component attains the spectral radius");
}

std::vector<PerronVector> perron_vectors(const Graph& g) {
  auto all = all_component_perrons(g);
  double best = 0.0;
  for (const auto& c : all) best = std::max(best, c.radius);
  std::vector<PerronVector> out;
  for (auto& c : all) {
    if (c.radius >= best - kTieTolerance * (1.0 + best)) out.push_back(std::move(c.vector));
  }
  return out;
}

// ---------------------------------------------------------------------------

double coronal_from_spectrum(const Spectrum& s, double x) {
  double chi = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double alpha = s.ones_projection(i);
    chi += alpha * alpha / (x - s.values[i]);
  }
  return chi;
}

double coronal_by_solve(const Graph& g, double x) {
  const std::size_t n = g.order();
  DenseMatrix<double> l(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = (i == j ? x : 0.0) - (g.has_edge(i, j) ? 1.0 : 0.0);
      for (std::size_t k = 0; k < j; ++k) sum -= l(i, k) * l(j, k);
      if (i == j) {
        if (sum <= 0.0) return std::numeric_limits<double>::quiet_NaN();
        l(i, i) = std::sqrt(sum);
      } else {
        l(i, j) = sum / l(j, j);
      }
    }
  }
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 1.0;
    for (std::size_t k = 0; k < i; ++k) sum -= l(i, k) * y[k];
    y[i] = sum / l(i, i);
  }
  std::vector<double> w(n);
  for (std::size_t i = n; i-- > 0;) {
    double sum = y[i];
    for (std::size_t k = i + 1; k < n; ++k) sum -= l(k, i) * w[k];
    w[i] = sum / l(i, i);
  }
  return std::accumulate(w.begin(), w.end(), 0.0);
}

CoronalEvaluation coronal_both(const Graph& g, double x) {
  const auto s = spectrum(g);
  const double lambda = s.size() == 0 ? 0.0 : s.largest();
  if (!(x > lambda + 1e-9)) {
    throw std::domain_error("coronal: x must exceed the spectral radius");
  }
  CoronalEvaluation out;
  out.by_solve = coronal_by_solve(g, x);
  out.by_expansion = coronal_from_spectrum(s, x);
  return out;
}

double coronal(const Graph& g, double x) {
  const auto both = coronal_both(g, x);
  if (!(std::abs(both.by_solve - both.by_expansion) <= 1e-8 * (1.0 + std::abs(both.by_solve)))) {
    throw std::logic_error("coronal: solve and eigen-expansion disagree");
  }
  return both.by_solve;
}

// ---------------------------------------------------------------------------

double join_radius_cap(double radius, std::size_t n, std::size_t s) {
  const double ns = static_cast<double>(n) * static_cast<double>(s);
  return (radius + std::sqrt(radius * radius + 4.0 * ns)) / 2.0;
}

double join_radius_cap(const Graph& g, std::size_t s) {
  const double radius = g.order() == 0 ? 0.0 : spectral_radius(g);
  return join_radius_cap(radius, g.order(), s);
}

double join_radius_root(const Spectrum& spec, std::size_t s) {
  if (spec.size() == 0) throw std::invalid_argument("join_radius_root: empty graph");
  if (s == 0) throw std::invalid_argument("join_radius_root: s must be positive");
  const double lambda = spec.largest();
  const double sd = static_cast<double>(s);
  auto beta = [&](double x) { return sd / x * coronal_from_spectrum(spec, x); };
  double lo = std::max(lambda, 0.0);
  double hi = join_radius_cap(lambda, spec.size(), s) + 1.0;
  if (!(beta(hi) < 1.0)) throw std::logic_error("join_radius_root: failed to bracket the root");
  while (hi - lo > kRootWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (beta(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double join_radius_root(const Graph& g, std::size_t s) { return join_radius_root(spectrum(g), s); }

// ---------------------------------------------------------------------------

QuotientMatrix quotient_matrix(const Graph& g, const Partition& parts) {
  const std::size_t n = g.order();
  const std::size_t k = parts.size();
  std::vector<std::size_t> part_of(n, k);
  std::vector<VertexSet> sets;
  for (std::size_t i = 0; i < k; ++i) {
    if (parts[i].empty()) throw std::invalid_argument("quotient_matrix: empty part");
    VertexSet s(n);
    for (Vertex v : parts[i]) {
      if (v >= n || part_of[v] != k) throw std::invalid_argument("quotient_matrix: invalid partition");
      part_of[v] = i;
      s.insert(v);
    }
    sets.push_back(std::move(s));
  }
  if (std::find(part_of.begin(), part_of.end(), k) != part_of.end()) {
    throw std::invalid_argument("quotient_matrix: partition does not cover every vertex");
  }
  QuotientMatrix q;
  q.cells = DenseMatrix<double>(k);
  q.parts = parts;
  q.equitable = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t total = 0;
      std::optional<std::size_t> common;
      for (Vertex v : parts[i]) {
        const std::size_t c = (g.neighbors(v) & sets[j]).size();
        total += c;
        if (!common) {
          common = c;
        } else if (*common != c) {
          q.equitable = false;
        }
      }
      q.cells(i, j) = static_cast<double>(total) / static_cast<double>(parts[i].size());
    }
  }
  return q;
}

double quotient_radius(const QuotientMatrix& q) {
  const std::size_t k = q.parts.size();
  DenseMatrix<double> sym(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      sym(i, j) = q.cells(i, j) * std::sqrt(static_cast<double>(q.parts[i].size()) /
                                            static_cast<double>(q.parts[j].size()));
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double mean = 0.5 * (sym(i, j) + sym(j, i));
      sym(i, j) = sym(j, i) = mean;
    }
  }
  return jacobi_eigen(std::move(sym), false).values.back();
}

// ---------------------------------------------------------------------------

double symmetrization_gap(const Graph& g, Vertex v) {
  const auto vectors = perron_vectors(g);
  const bool at_max = std::any_of(vectors.begin(), vectors.end(), [&](const PerronVector& p) {
    return std::find(p.argmax.begin(), p.argmax.end(), v) != p.argmax.end();
  });
  if (!at_max) throw std::invalid_argument("symmetrization_gap: v is not a maximum-entry vertex");
  const double lambda = vectors.front().eigenvalue;
  const auto h = induced_neighborhood(g, v);
  const std::size_t s = g.order() - g.degree(v);
  const Graph joined = join(Graph(s), h.graph);
  return spectral_radius(joined) - lambda;
}

}  // namespace sturan
