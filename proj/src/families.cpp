#include "sturan/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "sturan/spectra.hpp"

namespace sturan {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / (g == 0 ? 1 : g), den / (g == 0 ? 1 : g)};
}

// ---------------------------------------------------------------------------
// Turán graphs

namespace {

void require_parts(std::size_t n, std::size_t r) {
  if (r == 0) throw std::invalid_argument("Turán graph needs at least one part");
  if (n < r) {
    throw std::invalid_argument("Turán graph T_" + std::to_string(r) + "(" + std::to_string(n) +
                                ") would have empty parts");
  }
}

std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

}  // namespace

TuranParams turan_params(std::size_t n, std::size_t r) {
  require_parts(n, r);
  TuranParams t;
  t.n = n;
  t.r = r;
  t.a = n / r;
  t.b = n % r;
  t.p = t.b * (t.a + 1);
  t.q = (r - t.b) * t.a;
  const auto a = static_cast<std::int64_t>(t.a);
  const auto ni = static_cast<std::int64_t>(n);
  const auto ri = static_cast<std::int64_t>(r);
  const auto p = static_cast<std::int64_t>(t.p);
  const auto q = static_cast<std::int64_t>(t.q);
  t.m0 = (p * a + q * (a - 1)) / 2;
  t.e0 = choose2(ni) - t.m0;
  t.L = ni - 2 * a - 1;
  t.M = a * (a + 1) * (ri - 1);
  t.C = ri * a * (a + 1);
  if (t.b == 0) {
    t.lambda0 = static_cast<double>((ri - 1) * a);
  } else {
    const auto l = static_cast<double>(t.L);
    t.lambda0 = (l + std::sqrt(l * l + 4.0 * static_cast<double>(t.M))) / 2.0;
  }
  const auto nd = static_cast<double>(n);
  t.d_T = 2.0 * static_cast<double>(t.e0) / nd;
  t.d_0 = t.d_T - 2.0 / nd;
  t.delta = t.lambda0 - t.d_T;
  return t;
}

std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t r) {
  require_parts(n, r);
  const std::size_t a = n / r;
  const std::size_t b = n % r;
  std::vector<std::size_t> sizes(b, a + 1);
  sizes.insert(sizes.end(), r - b, a);
  return sizes;
}

Graph turan_graph(std::size_t n, std::size_t r) {
  const auto sizes = turan_part_sizes(n, r);
  return complete_multipartite(sizes);
}

std::int64_t turan_edges_by_parts(std::size_t n, std::size_t r) {
  const auto sizes = turan_part_sizes(n, r);
  std::int64_t total = 0;
  std::int64_t seen = 0;
  for (auto s : sizes) {
    total += seen * static_cast<std::int64_t>(s);
    seen += static_cast<std::int64_t>(s);
  }
  return total;
}

Rational turan_edges_by_formula(std::size_t n, std::size_t r) {
  require_parts(n, r);
  const auto ni = static_cast<std::int64_t>(n);
  const auto ri = static_cast<std::int64_t>(r);
  const auto b = ni % ri;
  return Rational::make((ri - 1) * ni * ni - b * (ri - b), 2 * ri);
}

std::int64_t turan_edges_by_complement(std::size_t n, std::size_t r) {
  return turan_params(n, r).e0;
}

double turan_radius_capped(std::size_t m, std::size_t r) {
  if (m == 0) return 0.0;
  return turan_params(m, std::min(r, m)).lambda0;
}

long double turan_radius_capped_extended(std::size_t m, std::size_t r) {
  if (m == 0) return 0.0L;
  const auto t = turan_params(m, std::min(r, m));
  if (t.b == 0) return static_cast<long double>((t.r - 1) * t.a);
  const auto l = static_cast<long double>(t.L);
  return (l + std::sqrt(l * l + 4.0L * static_cast<long double>(t.M))) / 2.0L;
}

std::int64_t turan_edges_capped(std::size_t m, std::size_t r) {
  if (m == 0) return 0;
  return turan_params(m, std::min(r, m)).e0;
}

double secular_radius(std::span<const std::size_t> part_sizes) {
  if (part_sizes.empty()) throw std::invalid_argument("secular_radius: no parts");
  if (std::find(part_sizes.begin(), part_sizes.end(), 0) != part_sizes.end()) {
    throw std::invalid_argument("secular_radius: empty part");
  }
  if (part_sizes.size() == 1) return 0.0;
  auto excess = [&](double lambda) {
    double sum = 0.0;
    for (auto s : part_sizes) {
      const auto sd = static_cast<double>(s);
      sum += sd / (lambda + sd);
    }
    return sum - 1.0;
  };
  double lo = 0.0;
  double hi = static_cast<double>(std::accumulate(part_sizes.begin(), part_sizes.end(), std::size_t{0}));
  while (hi - lo > 1e-11) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (excess(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Regular graphs

namespace {

class RegularEnumerator {
 public:
  RegularEnumerator(std::size_t n, std::size_t d, const GraphSink& sink)
      : n_(n), d_(d), sink_(sink), g_(n), deg_(n, 0) {}

  std::size_t run() {
    complete_vertex(0);
    return emitted_;
  }

 private:
  void complete_vertex(std::size_t v) {
    if (v == n_) {
      sink_(g_);
      ++emitted_;
      return;
    }
    const std::size_t need = d_ - deg_[v];
    std::vector<Vertex> spare;
    for (Vertex w = v + 1; w < n_; ++w) {
      if (deg_[w] < d_) spare.push_back(w);
    }
    if (spare.size() < need) return;
    choose(v, spare, 0, need);
  }

  void choose(Vertex v, const std::vector<Vertex>& spare, std::size_t from, std::size_t need) {
    if (need == 0) {
      complete_vertex(v + 1);
      return;
    }
    for (std::size_t i = from; i + need <= spare.size(); ++i) {
      const Vertex w = spare[i];
      g_.add_edge(v, w);
      ++deg_[v];
      ++deg_[w];
      choose(v, spare, i + 1, need - 1);
      g_.remove_edge(v, w);
      --deg_[v];
      --deg_[w];
    }
  }

  std::size_t n_, d_;
  const GraphSink& sink_;
  Graph g_;
  std::vector<std::size_t> deg_;
  std::size_t emitted_ = 0;
};

// Cheap isomorphism invariant used to bucket graphs before exact comparison.
std::vector<std::size_t> invariant_key(const Graph& g) {
  std::vector<std::size_t> per_vertex(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nbrs = g.neighbors(v);
    per_vertex[v] = g.degree(v) * 1024 + edges_within(g, nbrs);
  }
  std::sort(per_vertex.begin(), per_vertex.end());
  per_vertex.push_back(g.edge_count());
  return per_vertex;
}

std::vector<std::vector<Vertex>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> current;
  std::function<void(Vertex)> rec = [&](Vertex start) {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (Vertex v = start; v + (k - current.size()) <= n; ++v) {
      current.push_back(v);
      rec(v + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

EnumerationSummary enumerate_regular(std::size_t n, std::size_t d, const GraphSink& sink) {
  if (n > 12) throw std::invalid_argument("enumerate_regular: n must be at most 12");
  if (n == 0) {
    if (d != 0) throw std::invalid_argument("enumerate_regular: degree must be below n");
    sink(Graph(0));
    return {1, ""};
  }
  if (d >= n) throw std::invalid_argument("enumerate_regular: degree must be below n");
  if ((n * d) % 2 != 0) return {0, "parity"};
  return {RegularEnumerator(n, d, sink).run(), ""};
}

std::vector<Graph> isomorphism_classes(const std::vector<Graph>& graphs) {
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
  std::vector<Graph> reps;
  for (const auto& g : graphs) {
    auto& bucket = buckets[invariant_key(g)];
    const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                  [&](std::size_t i) { return is_isomorphic(reps[i], g); });
    if (!seen) {
      bucket.push_back(reps.size());
      reps.push_back(g);
    }
  }
  return reps;
}

std::vector<Graph> regular_graphs(std::size_t n, std::size_t d, Dedup mode) {
  std::vector<Graph> out;
  enumerate_regular(n, d, [&](const Graph& g) { out.push_back(g); });
  return mode == Dedup::labeled ? out : isomorphism_classes(out);
}

// ---------------------------------------------------------------------------
// The extremal family

EnumerationSummary enumerate_family(std::size_t n, std::size_t r, const GraphSink& sink) {
  require_parts(n, r);
  if (r == 1) {
    sink(Graph(n));
    return {1, ""};
  }
  const auto t = turan_params(n, r);
  if (t.b == 0) {
    auto summary = enumerate_regular(n, (r - 1) * t.a, sink);
    if (summary.note == "parity") throw std::logic_error("enumerate_family: parity violated");
    return summary;
  }
  const std::size_t dx = (t.b - 1) * (t.a + 1);
  const std::size_t dy = (r - t.b - 1) * t.a;
  if ((t.p * dx) % 2 != 0 || (t.q * dy) % 2 != 0) {
    throw std::logic_error("enumerate_family: parity violated");
  }
  const auto on_x = regular_graphs(t.p, dx);
  const auto on_y = regular_graphs(t.q, dy);
  EnumerationSummary summary;
  for (const auto& xs : subsets_of_size(n, t.p)) {
    VertexSet xset(n);
    for (Vertex v : xs) xset.insert(v);
    std::vector<Vertex> ys;
    for (Vertex v = 0; v < n; ++v) {
      if (!xset.contains(v)) ys.push_back(v);
    }
    for (const auto& gx : on_x) {
      for (const auto& gy : on_y) {
        Graph g(n);
        for (auto [u, v] : gx.edges()) g.add_edge(xs[u], xs[v]);
        for (auto [u, v] : gy.edges()) g.add_edge(ys[u], ys[v]);
        for (Vertex u : xs) {
          for (Vertex v : ys) g.add_edge(u, v);
        }
        sink(g);
        ++summary.emitted;
      }
    }
  }
  return summary;
}

std::vector<Graph> family_members(std::size_t n, std::size_t r, Dedup mode) {
  std::vector<Graph> out;
  enumerate_family(n, r, [&](const Graph& g) { out.push_back(g); });
  return mode == Dedup::labeled ? out : isomorphism_classes(out);
}

std::optional<FamilyWitness> family_membership(const Graph& g, std::size_t r) {
  const std::size_t n = g.order();
  require_parts(n, r);
  const auto t = turan_params(n, r);
  FamilyWitness w;
  w.x = VertexSet(n);
  w.y = VertexSet(n);
  if (t.b == 0) {
    const std::size_t target = (r - 1) * t.a;
    if (g.regular_degree() != target) return std::nullopt;
    w.y = VertexSet::full(n);
    w.y_inner_degree = target;
    return w;
  }
  const std::size_t dx = (t.b - 1) * (t.a + 1);
  const std::size_t dy = (r - t.b - 1) * t.a;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    if (d == n - t.a - 1) {
      w.x.insert(v);
    } else if (d == n - t.a) {
      w.y.insert(v);
    } else {
      return std::nullopt;
    }
  }
  if (w.x.size() != t.p || w.y.size() != t.q) return std::nullopt;
  bool ok = true;
  w.x.for_each([&](Vertex v) {
    const auto nbrs = g.neighbors(v);
    ok = ok && (nbrs & w.y).size() == t.q && (nbrs & w.x).size() == dx;
  });
  w.y.for_each([&](Vertex v) { ok = ok && (g.neighbors(v) & w.y).size() == dy; });
  if (!ok) return std::nullopt;
  w.x_inner_degree = dx;
  w.y_inner_degree = dy;
  return w;
}

// ---------------------------------------------------------------------------

ConvexityResult convexity_oracle(std::size_t n, double lambda0, std::size_t budget) {
  if (n == 0 || n > 8) throw std::invalid_argument("convexity_oracle: need 1 <= n <= 8");
  ConvexityResult best;
  best.min_value = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> c(n, 0);
  std::vector<std::tuple<double, std::vector<std::size_t>>> all;
  std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                                       std::size_t lo,
                                                                       std::size_t sum) {
    if (i == n) {
      double value = 0.0;
      for (auto ci : c) value += 1.0 / (lambda0 + static_cast<double>(ci) + 1.0);
      all.emplace_back(value, c);
      if (value < best.min_value) {
        best.min_value = value;
        best.argmin = c;
      }
      return;
    }
    for (std::size_t v = lo; v <= n - 1 && sum + v * (n - i) <= budget; ++v) {
      c[i] = v;
      rec(i + 1, v, sum + v);
    }
  };
  rec(0, 0, 0);
  for (const auto& [value, tuple] : all) {
    if (value <= best.min_value * (1.0 + 1e-12)) ++best.minimizers;
  }
  return best;
}

}  // namespace sturan
