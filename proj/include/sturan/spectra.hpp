#pragma once

// Dense symmetric eigencomputation and the spectral functionals built on it:
// spectral radius, least eigenvalue, Perron vectors, coronals, join radii and
// quotient matrices of vertex partitions.

#include <cstddef>
#include <vector>

#include "sturan/graph.hpp"

namespace sturan {

/// Row-major dense square matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, T{0}) {}

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

template <class T>
DenseMatrix<T> adjacency_matrix(const Graph& g) {
  DenseMatrix<T> a(g.order());
  for (auto [u, v] : g.edges()) {
    a(u, v) = T{1};
    a(v, u) = T{1};
  }
  return a;
}

template <class T>
struct EigenDecomposition {
  std::vector<T> values;   // ascending
  DenseMatrix<T> vectors;  // column k belongs to values[k]; empty if not requested
  std::size_t sweeps = 0;
};

/// Cyclic Jacobi eigensolver for a symmetric matrix. Sweeps visit pairs
/// (p, q), p < q, in row order; convergence is declared once the off-diagonal
/// Frobenius norm drops to 1e-12 * n (a relative floor is used for extended
/// precision). Throws std::runtime_error after 100 sweeps.
template <class T>
EigenDecomposition<T> jacobi_eigen(DenseMatrix<T> a, bool with_vectors);

extern template EigenDecomposition<double> jacobi_eigen(DenseMatrix<double>, bool);
extern template EigenDecomposition<long double> jacobi_eigen(DenseMatrix<long double>, bool);

/// Full adjacency spectrum with an orthonormal eigenbasis.
struct Spectrum {
  std::vector<double> values;              // ascending
  std::vector<std::vector<double>> basis;  // basis[i] is the unit eigenvector of values[i]
  double residual = 0.0;                   // max_i ||A u_i - values[i] u_i||_2

  std::size_t size() const { return values.size(); }
  double largest() const { return values.back(); }
  double least() const { return values.front(); }
  /// <1, u_i>
  double ones_projection(std::size_t i) const;
};

Spectrum spectrum(const Graph& g);
/// Ascending eigenvalues only.
std::vector<double> eigenvalues(const Graph& g);

/// lambda(G). Throws std::invalid_argument for the order-0 graph.
double spectral_radius(const Graph& g);
/// lambda(G) recomputed in extended precision, used to confirm close calls.
long double spectral_radius_extended(const Graph& g);
/// Smallest adjacency eigenvalue.
double least_eigenvalue(const Graph& g);
/// Largest eigenvalue of A + I by power iteration from the all-ones vector,
/// read out as a Rayleigh quotient and shifted back. Independent check on
/// spectral_radius.
double power_iteration_radius(const Graph& g, int steps = 200);

/// Nonnegative unit eigenvector of lambda(G).
struct PerronVector {
  std::vector<double> entries;
  double eigenvalue = 0.0;
  std::vector<Vertex> argmax;  // entries within 1e-9 (relative) of the maximum
};

/// Perron vector supported on the lowest-index component of maximum spectral
/// radius, zero elsewhere.
PerronVector perron_vector(const Graph& g);
/// One Perron vector per component whose spectral radius equals lambda(G)
/// (within 1e-9 relative), in component order.
std::vector<PerronVector> perron_vectors(const Graph& g);

/// Sum of the entries of (xI - A)^{-1} via a Cholesky solve.
/// Throws std::domain_error unless x > lambda(G) + 1e-9; throws
/// std::logic_error if the eigen-expansion route disagrees.
double coronal(const Graph& g, double x);

struct CoronalEvaluation {
  double by_solve = 0.0;
  double by_expansion = 0.0;
};
CoronalEvaluation coronal_both(const Graph& g, double x);
/// sum_i <1,u_i>^2 / (x - lambda_i) for a precomputed spectrum.
double coronal_from_spectrum(const Spectrum& s, double x);
/// Linear-solve route only; NaN when xI - A is not numerically positive
/// definite.
double coronal_by_solve(const Graph& g, double x);

/// lambda(K̄_s ∨ G) as the unique root of (s/x) chi_G(x) = 1 above lambda(G),
/// by bisection to width 1e-11.
double join_radius_root(const Graph& g, std::size_t s);
double join_radius_root(const Spectrum& spec, std::size_t s);

/// Upper bound (lambda + sqrt(lambda^2 + 4ns)) / 2 on lambda(K̄_s ∨ G); tight
/// for regular G.
double join_radius_cap(const Graph& g, std::size_t s);
double join_radius_cap(double radius, std::size_t n, std::size_t s);

using Partition = std::vector<std::vector<Vertex>>;

struct QuotientMatrix {
  DenseMatrix<double> cells;  // cells(i, j): mean number of part-j neighbours over part i
  bool equitable = false;
  Partition parts;
};

/// Throws std::invalid_argument unless `parts` covers V(G) disjointly with no
/// empty part.
QuotientMatrix quotient_matrix(const Graph& g, const Partition& parts);
/// Largest eigenvalue of the quotient matrix (via its symmetrization by part
/// sizes, which is similar to it).
double quotient_radius(const QuotientMatrix& q);

/// lambda(K̄_s ∨ G[N(v)]) - lambda(G) with s = n - d(v). Requires v to attain
/// the maximum entry of some component Perron vector of G; throws
/// std::invalid_argument otherwise.
double symmetrization_gap(const Graph& g, Vertex v);

}  // namespace sturan
