#include "sturan/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sturan {
namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

}  // namespace

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(words_for(universe), 0) {}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw std::out_of_range("VertexSet::insert: vertex out of range");
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::size_t VertexSet::size() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<Vertex> VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= w < other.words_.size() ? other.words_[w] : 0;
  }
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ > universe_) {
    universe_ = other.universe_;
    words_.resize(other.words_.size(), 0);
  }
  for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  const std::size_t m = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < m; ++w) words_[w] &= ~other.words_[w];
  return *this;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n) : n_(n), words_per_row_(words_for(n)) {
  if (n > kMaxVertices) {
    throw std::length_error("graph order " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxVertices));
  }
  bits_.assign(n_ * words_per_row_, 0);
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex index out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

double Graph::average_degree() const {
  if (n_ == 0) return 0.0;
  return 2.0 * static_cast<double>(edge_count()) / static_cast<double>(n_);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  return ((bits_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U) != 0;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  bits_[u * words_per_row_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_per_row_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  bits_[u * words_per_row_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  bits_[v * words_per_row_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

void Graph::toggle_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  bits_[u * words_per_row_ + v / 64] ^= std::uint64_t{1} << (v % 64);
  bits_[v * words_per_row_ + u / 64] ^= std::uint64_t{1} << (u % 64);
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(n_);
  for (Vertex v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet s(n_);
  auto r = row(v);
  std::copy(r.begin(), r.end(), s.words().begin());
  return s;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  if (v >= n_) throw std::out_of_range("vertex index out of range");
  return {bits_.data() + v * words_per_row_, words_per_row_};
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  const std::size_t d = degree(0);
  for (Vertex v = 1; v < n_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructors

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph build_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Graph complete_graph(std::size_t n) { return complement(Graph(n)); }

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_multipartite(std::span<const std::size_t> part_sizes) {
  const std::size_t n = std::accumulate(part_sizes.begin(), part_sizes.end(), std::size_t{0});
  Graph g(n);
  std::vector<std::size_t> part_of(n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    for (std::size_t j = 0; j < part_sizes[i]; ++j) part_of[next++] = i;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Operations

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph h(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::size_t na = a.order();
  Graph g(na + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > kMaxVertices) {
    throw std::length_error("join exceeds the vertex cap");
  }
  Graph g = disjoint_union(a, b);
  const std::size_t na = a.order();
  for (Vertex u = 0; u < na; ++u) {
    for (Vertex v = 0; v < b.order(); ++v) g.add_edge(u, na + v);
  }
  return g;
}

Graph k_fold_join(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k-fold join needs k >= 1");
  const std::size_t n = g.order();
  if (k * n > kMaxVertices) throw std::length_error("k-fold join exceeds the vertex cap");
  Graph h(k * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (auto [u, v] : g.edges()) h.add_edge(i * n + u, i * n + v);
    for (std::size_t j = i + 1; j < k; ++j) {
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) h.add_edge(i * n + u, j * n + v);
      }
    }
  }
  return h;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  InducedSubgraph out;
  out.vertices = vertices.to_vector();
  const std::size_t m = out.vertices.size();
  out.graph = Graph(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (g.has_edge(out.vertices[i], out.vertices[j])) out.graph.add_edge(i, j);
    }
  }
  return out;
}

InducedSubgraph induced_neighborhood(const Graph& g, Vertex v) {
  return induced_subgraph(g, g.neighbors(v));
}

std::size_t edges_within(const Graph& g, const VertexSet& s) {
  std::size_t twice = 0;
  s.for_each([&](Vertex v) { twice += (g.neighbors(v) & s).size(); });
  return twice / 2;
}

std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::size_t count = 0;
  a.for_each([&](Vertex v) { count += (g.neighbors(v) & b).size(); });
  return count;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> comps;
  VertexSet unseen = VertexSet::full(n);
  while (auto start = unseen.first()) {
    VertexSet comp(n);
    VertexSet frontier(n);
    frontier.insert(*start);
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(n);
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      next -= comp;
      frontier = std::move(next);
    }
    unseen -= comp;
    comps.push_back(std::move(comp));
  }
  return comps;
}

// ---------------------------------------------------------------------------
// Cliques

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g, std::size_t target)
      : g_(g), target_(target) {}

  std::size_t run(const VertexSet& candidates) {
    expand(0, candidates);
    return best_;
  }

 private:
  void expand(std::size_t depth, VertexSet candidates) {
    if (best_ >= target_) return;
    if (candidates.empty()) {
      best_ = std::max(best_, depth);
      return;
    }
    while (auto v = candidates.first()) {
      if (depth + candidates.size() <= best_) return;
      expand(depth + 1, candidates & g_.neighbors(*v));
      if (best_ >= target_) return;
      candidates.erase(*v);
    }
    best_ = std::max(best_, depth);
  }

  const Graph& g_;
  std::size_t target_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t clique_number(const Graph& g) {
  return clique_number(g, VertexSet::full(g.order()));
}

std::size_t clique_number(const Graph& g, const VertexSet& within) {
  return CliqueSearch(g, within.size()).run(within);
}

bool has_clique(const Graph& g, const VertexSet& within, std::size_t k) {
  if (k == 0) return true;
  if (within.size() < k) return false;
  return CliqueSearch(g, k).run(within) >= k;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// Joint colour refinement: both graphs share one colour alphabet so colour
// classes are directly comparable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(const Graph& a,
                                                                             const Graph& b) {
  const std::size_t n = a.order();
  std::vector<std::size_t> ca = a.degrees();
  std::vector<std::size_t> cb = b.degrees();
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    auto signature = [](const Graph& g, const std::vector<std::size_t>& c, Vertex v) {
      std::vector<std::size_t> sig;
      sig.push_back(c[v]);
      std::vector<std::size_t> nbr;
      g.neighbors(v).for_each([&](Vertex u) { nbr.push_back(c[u]); });
      std::sort(nbr.begin(), nbr.end());
      sig.insert(sig.end(), nbr.begin(), nbr.end());
      return sig;
    };
    std::vector<std::vector<std::size_t>> sa(n), sb(n);
    for (Vertex v = 0; v < n; ++v) {
      sa[v] = signature(a, ca, v);
      sb[v] = signature(b, cb, v);
      ids.emplace(sa[v], 0);
      ids.emplace(sb[v], 0);
    }
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) {
      ca[v] = ids[sa[v]];
      cb[v] = ids[sb[v]];
    }
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {ca, cb};
}

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b, std::vector<std::size_t> ca,
            std::vector<std::size_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)), n_(a.order()),
        map_(n_, n_), used_(n_, false) {
    std::vector<std::size_t> class_size(n_ + 1, 0);
    for (auto c : ca_) {
      if (c >= class_size.size()) class_size.resize(c + 1, 0);
      ++class_size[c];
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex x, Vertex y) {
      if (class_size[ca_[x]] != class_size[ca_[y]]) return class_size[ca_[x]] < class_size[ca_[y]];
      return a_.degree(x) > a_.degree(y);
    });
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex x = order_[depth];
    for (Vertex y = 0; y < n_; ++y) {
      if (used_[y] || cb_[y] != ca_[x]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex px = order_[i];
        ok = a_.has_edge(x, px) == b_.has_edge(y, map_[px]);
      }
      if (!ok) continue;
      map_[x] = y;
      used_[y] = true;
      if (extend(depth + 1)) return true;
      used_[y] = false;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::size_t> ca_, cb_;
  std::size_t n_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  std::vector<Vertex> order_;
};

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  auto [ca, cb] = refine_colours(a, b);
  auto ha = ca;
  auto hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;
  return IsoSearch(a, b, std::move(ca), std::move(cb)).run();
}

}  // namespace sturan
