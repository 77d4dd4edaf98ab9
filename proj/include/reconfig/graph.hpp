#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "reconfig/error.hpp"
#include "reconfig/util.hpp"

namespace reconfig {

/// Undirected simple graph on vertices 0..n-1.
///
/// Immutable after construction: the edge set is canonicalized (u < v,
/// sorted lexicographically, deduplicated) and all derived structure is
/// built up front. Values are cheap to copy at the scales this toolkit
/// targets and safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Rejects self-loops and endpoints
  /// outside 0..n-1; duplicate and swapped pairs collapse to one edge.
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0) throw OutOfRange("vertex count must be nonnegative");
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw OutOfRange("edge {" + std::to_string(u) + "," + std::to_string(v) +
                         "} out of range for n=" + std::to_string(n));
      if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    if (n_ > 0 && n_ <= 64) {
      masks_.assign(n_, 0);
      for (auto [u, v] : edges_) {
        masks_[u] |= std::uint64_t{1} << v;
        masks_[v] |= std::uint64_t{1} << u;
      }
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Canonical edge list: pairs with first < second, lexicographically sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Sorted neighbor list of v.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    if (!masks_.empty()) return masks_[u] >> v & 1;
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int w = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), w);
  }

  /// Bitmask adjacency is available whenever n <= 64.
  bool has_masks() const { return n_ <= 64; }
  std::uint64_t neighbor_mask(int v) const { return masks_[v]; }
  std::uint64_t all_vertices_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  Config all_vertices() const {
    Config v(n_);
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> masks_;  // empty when n_ == 0 or n_ > 64
};

namespace detail {

/// Configs handed to the public operations must be sorted, duplicate-free
/// and within range; this is checked, not assumed.
inline void check_config(const Graph& g, const Config& s) {
  if (!is_canonical(s)) throw Error("config must be sorted and duplicate-free");
  if (!s.empty() && (s.front() < 0 || s.back() >= g.vertex_count()))
    throw OutOfRange("config " + config_to_string(s) + " not within 0.." +
                     std::to_string(g.vertex_count() - 1));
}

/// Connected components of g[s] for a mask-encoded s, ordered by smallest
/// member (equivalently, lexicographically).
inline std::vector<std::uint64_t> components_of_mask(const Graph& g, std::uint64_t s) {
  std::vector<std::uint64_t> comps;
  std::uint64_t rem = s;
  while (rem) {
    std::uint64_t comp = rem & (~rem + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.neighbor_mask(v);
      }
      next &= rem & ~comp;
      comp |= next;
      frontier = next;
    }
    comps.push_back(comp);
    rem &= ~comp;
  }
  return comps;
}

inline bool mask_connected(const Graph& g, std::uint64_t s) {
  if (s == 0) return false;
  std::uint64_t comp = s & (~s + 1);
  std::uint64_t frontier = comp;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbor_mask(v);
    }
    next &= s & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp == s;
}

/// General-path component computation over neighbor lists.
inline std::vector<Config> components_general(const Graph& g, const Config& s) {
  std::vector<Config> comps;
  std::vector<char> in_s(g.vertex_count(), 0), done(g.vertex_count(), 0);
  for (int v : s) in_s[v] = 1;
  for (int seed : s) {
    if (done[seed]) continue;
    Config comp{seed};
    done[seed] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int w : g.neighbors(comp[head])) {
        if (in_s[w] && !done[w]) {
          done[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;  // seeds scan s in ascending order, so comps are lex-sorted
}

}  // namespace detail

/// Partition of s into the vertex sets of the connected components of g[s],
/// each sorted, the list ordered by smallest member.
inline std::vector<Config> connected_components(const Graph& g, const Config& s) {
  detail::check_config(g, s);
  if (g.has_masks()) {
    std::vector<Config> comps;
    for (std::uint64_t m : detail::components_of_mask(g, detail::mask_of(s)))
      comps.push_back(detail::config_of_mask(m));
    return comps;
  }
  return detail::components_general(g, s);
}

/// Edge-complement: {u,v} present iff absent in g, over all pairs u != v.
inline Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> ce;
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) ce.emplace_back(u, v);
  return Graph(n, ce);
}

/// A graph together with a bipartition; every edge must cross the sides.
class BipGraph {
 public:
  BipGraph(Graph g, Config side_a, Config side_b)
      : g_(std::move(g)), a_(std::move(side_a)), b_(std::move(side_b)) {
    detail::check_config(g_, a_);
    detail::check_config(g_, b_);
    side_of_.assign(g_.vertex_count(), -1);
    for (int v : a_) side_of_[v] = 0;
    for (int v : b_) {
      if (side_of_[v] == 0) throw SideViolation("sides overlap at vertex " + std::to_string(v));
      side_of_[v] = 1;
    }
    for (int v = 0; v < g_.vertex_count(); ++v)
      if (side_of_[v] == -1)
        throw SideViolation("vertex " + std::to_string(v) + " belongs to neither side");
    for (auto [u, v] : g_.edges())
      if (side_of_[u] == side_of_[v])
        throw SideViolation("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} does not cross the bipartition");
  }

  const Graph& graph() const { return g_; }
  const Config& side_a() const { return a_; }
  const Config& side_b() const { return b_; }
  bool in_side_a(int v) const { return side_of_[v] == 0; }

  bool operator==(const BipGraph& o) const {
    return g_ == o.g_ && a_ == o.a_ && b_ == o.b_;
  }

 private:
  Graph g_;
  Config a_, b_;
  std::vector<signed char> side_of_;
};

/// Complement across the bipartition only: {a,b} with a in A, b in B present
/// iff absent in h. Sides are unchanged and stay independent.
inline BipGraph bipartite_complement(const BipGraph& h) {
  std::vector<std::pair<int, int>> ce;
  for (int a : h.side_a())
    for (int b : h.side_b())
      if (!h.graph().has_edge(a, b)) ce.emplace_back(a, b);
  return BipGraph(Graph(h.graph().vertex_count(), ce), h.side_a(), h.side_b());
}

/// Identifies a derived-graph vertex with its source: either an original
/// vertex or an edge of the source graph.
struct VertexOrigin {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  int vertex = -1;                    // valid when kind == Vertex
  std::pair<int, int> edge{-1, -1};   // valid when kind == Edge (canonical pair)

  static VertexOrigin of_vertex(int v) {
    VertexOrigin o;
    o.kind = Kind::Vertex;
    o.vertex = v;
    return o;
  }
  static VertexOrigin of_edge(int u, int v) {
    VertexOrigin o;
    o.kind = Kind::Edge;
    o.edge = {std::min(u, v), std::max(u, v)};
    return o;
  }
  bool operator==(const VertexOrigin& o) const {
    return kind == o.kind && (kind == Kind::Vertex ? vertex == o.vertex : edge == o.edge);
  }
};

/// Bipartite complement of the incidence graph of a source graph:
/// A-side vertices reuse the source ids 0..n-1, B-side vertices n..n+m-1
/// stand for the source edges in lexicographic order, and {v, e} is an edge
/// exactly when v is NOT an endpoint of e.
struct NonincidenceGraph {
  BipGraph graph;
  std::vector<VertexOrigin> origin;  // indexed by derived-graph vertex id
  int source_vertices = 0;

  /// Id of the B-side vertex standing for source edge {u,v}.
  int edge_vertex_id(int u, int v) const {
    const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    auto first = origin.begin() + source_vertices;
    auto it = std::lower_bound(first, origin.end(), key,
                               [](const VertexOrigin& o, const std::pair<int, int>& k) {
                                 return o.edge < k;
                               });
    if (it == origin.end() || it->edge != key)
      throw OutOfRange("no edge vertex for {" + std::to_string(key.first) + "," +
                       std::to_string(key.second) + "}");
    return static_cast<int>(it - origin.begin());
  }
};

inline NonincidenceGraph build_nonincidence_graph(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<std::pair<int, int>> hedges;
  hedges.reserve(static_cast<std::size_t>(m) * (n >= 2 ? n - 2 : 0));
  for (int j = 0; j < m; ++j) {
    auto [eu, ev] = g.edges()[j];
    for (int v = 0; v < n; ++v)
      if (v != eu && v != ev) hedges.emplace_back(v, n + j);
  }
  Config side_a(n), side_b(m);
  std::iota(side_a.begin(), side_a.end(), 0);
  std::iota(side_b.begin(), side_b.end(), n);
  NonincidenceGraph out{BipGraph(Graph(n + m, hedges), std::move(side_a), std::move(side_b)),
                        {},
                        n};
  out.origin.reserve(n + m);
  for (int v = 0; v < n; ++v) out.origin.push_back(VertexOrigin::of_vertex(v));
  for (int j = 0; j < m; ++j)
    out.origin.push_back(VertexOrigin::of_edge(g.edges()[j].first, g.edges()[j].second));
  return out;
}

/// Deterministic 2-coloring: in every connected component the lowest-id
/// vertex lands in side A. Returns nothing if the graph is not bipartite.
inline std::optional<std::pair<Config, Config>> find_bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<signed char> color(n, -1);
  std::vector<int> queue;
  for (int seed = 0; seed < n; ++seed) {
    if (color[seed] != -1) continue;
    color[seed] = 0;
    queue.assign(1, seed);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = static_cast<signed char>(1 - color[v]);
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Config a, b;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? a : b).push_back(v);
  return std::make_pair(std::move(a), std::move(b));
}

}  // namespace reconfig
