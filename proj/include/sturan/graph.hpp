#pragma once

// Labeled simple graphs on at most kMaxVertices vertices with bitset rows.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sturan {

using Vertex = std::size_t;

inline constexpr std::size_t kMaxVertices = 512;

/// A subset of {0, ..., universe-1} stored as 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  std::size_t size() const;
  bool empty() const;
  std::optional<Vertex> first() const;
  std::vector<Vertex> to_vector() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet&) const = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Undirected simple graph on vertices 0..order()-1.
///
/// Adjacency is stored as one bitset row per vertex, padded to whole 64-bit
/// words. Symmetry and loop-freeness are maintained by every mutator.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices. Throws std::length_error if n > kMaxVertices.
  explicit Graph(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const;
  double average_degree() const;

  bool has_edge(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);

  std::size_t degree(Vertex v) const;
  std::vector<std::size_t> degrees() const;
  VertexSet neighbors(Vertex v) const;
  std::span<const std::uint64_t> row(Vertex v) const;

  /// Degree shared by all vertices, if any. The order-0 graph is 0-regular.
  std::optional<std::size_t> regular_degree() const;
  bool is_regular() const { return regular_degree().has_value(); }

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::size_t n_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Subgraph induced by a vertex subset; vertices[i] is the original label of
/// new vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> vertices;
};

// Constructors.
Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
Graph build_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_multipartite(std::span<const std::size_t> part_sizes);

// Operations.
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
/// All |A||B| cross edges; A occupies labels 0..|A|-1.
Graph join(const Graph& a, const Graph& b);
/// k disjoint copies of g with all edges between distinct copies.
Graph k_fold_join(const Graph& g, std::size_t k);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);
InducedSubgraph induced_neighborhood(const Graph& g, Vertex v);
std::size_t edges_within(const Graph& g, const VertexSet& s);
std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);
std::vector<VertexSet> connected_components(const Graph& g);

/// Exact clique number by branch and bound; 1 for edgeless graphs, 0 only for
/// the order-0 graph.
std::size_t clique_number(const Graph& g);
/// Largest clique contained in `within`.
std::size_t clique_number(const Graph& g, const VertexSet& within);
/// True if `within` contains a clique with at least k vertices.
bool has_clique(const Graph& g, const VertexSet& within, std::size_t k);

/// Exact isomorphism test by pruned permutation search. Intended for small
/// graphs (n <= 10 or so); cost grows with symmetry.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace sturan
