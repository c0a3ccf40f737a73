#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orient {

// Sentinel for "no path". All distance functions return this for
// unreachable vertices; it compares correctly under <= against any
// finite distance.
inline constexpr int infinite_distance = std::numeric_limits<int>::max();

inline bool reachable(int dist) { return dist != infinite_distance; }

/// Immutable simple undirected graph. Vertices are 0..n-1, edges carry
/// stable ids 0..m-1 with endpoints stored as (u,v), u < v. Neighbor
/// lists are sorted by vertex id so every traversal in this library is
/// deterministic.
class UndirectedGraph {
 public:
  UndirectedGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
      : n_(vertex_count), edges_(std::move(edge_list)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges_) {
      if (u == v) throw std::invalid_argument("self-loop");
      if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
      if (u > v) std::swap(u, v);
    }
    adj_.assign(n_, {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      adj_[edges_[e].first].push_back({edges_[e].second, e});
      adj_[edges_[e].second].push_back({edges_[e].first, e});
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    for (const auto& nb : adj_)
      for (size_t i = 1; i < nb.size(); ++i)
        if (nb[i].first == nb[i - 1].first)
          throw std::invalid_argument("parallel edge");
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// (u,v) with u < v, indexed by edge id.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(int e) const { return edges_.at(e); }

  /// Sorted (neighbor, edge id) pairs.
  const std::vector<std::pair<int, int>>& incident(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::optional<int> edge_id(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), std::make_pair(v, -1));
    if (it != nb.end() && it->first == v) return it->second;
    return std::nullopt;
  }

  bool has_edge(int u, int v) const { return edge_id(u, v).has_value(); }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("invalid vertex id");
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// Hop distances from source; unreachable entries are infinite_distance.
/// An edge id may be excluded, which is how cycle-through-edge queries
/// are answered.
inline std::vector<int> bfs_distances(const UndirectedGraph& g, int source,
                                      int skip_edge = -1) {
  g.check_vertex(source);
  std::vector<int> dist(g.vertex_count(), infinite_distance);
  dist[source] = 0;
  std::vector<int> queue{source};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (auto [y, e] : g.incident(x)) {
      if (e == skip_edge || dist[y] != infinite_distance) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

inline bool is_connected(const UndirectedGraph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), reachable);
}

inline int eccentricity(const UndirectedGraph& g, int v) {
  auto dist = bfs_distances(g, v);
  int ecc = 0;
  for (int d : dist) {
    if (!reachable(d)) throw std::invalid_argument("graph is disconnected");
    ecc = std::max(ecc, d);
  }
  return ecc;
}

inline int diameter(const UndirectedGraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
  int d = 0;
  for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, eccentricity(g, v));
  return d;
}

inline int radius(const UndirectedGraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
  int r = infinite_distance;
  for (int v = 0; v < g.vertex_count(); ++v) r = std::min(r, eccentricity(g, v));
  return r;
}

namespace detail {

// Iterative low-link bridge sweep over an explicit multigraph given as
// (node count, edge list). Parallel edges are legitimate here; the DFS
// refuses to reuse the entry edge id, not the entry vertex, so a
// doubled edge is never a bridge. Quotient connectivity checks rely on
// exactly that behavior.
inline std::vector<int> multigraph_bridges(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].first].push_back({edges[e].second, e});
    adj[edges[e].second].push_back({edges[e].first, e});
  }
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> bridges;
  int timer = 0;
  struct Frame {
    int v;
    int entry_edge;
    size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, e] = adj[f.v][f.next++];
        if (e == f.entry_edge) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        int entry = f.entry_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent]) bridges.push_back(entry);
        }
      }
    }
  }
  return bridges;
}

}  // namespace detail

inline std::vector<int> bridges(const UndirectedGraph& g) {
  return detail::multigraph_bridges(g.vertex_count(), g.edges());
}

inline bool is_two_edge_connected(const UndirectedGraph& g) {
  if (g.vertex_count() == 0) return false;
  return is_connected(g) && bridges(g).empty();
}

/// Length of a smallest cycle through edge {p,q}: 1 + d_{G-e}(p,q).
inline int shortest_cycle_through_edge(const UndirectedGraph& g, int p, int q) {
  auto e = g.edge_id(p, q);
  if (!e) throw std::invalid_argument("pq is not an edge");
  auto dist = bfs_distances(g, p, *e);
  if (!reachable(dist[q])) throw std::invalid_argument("edge is a bridge");
  return 1 + dist[q];
}

struct EtaResult {
  int eta;
  int witness_edge;  // smallest-id edge attaining the maximum
};

/// Smallest bound such that every edge lies on a cycle of that length.
inline EtaResult eta(const UndirectedGraph& g) {
  if (!is_two_edge_connected(g))
    throw std::invalid_argument("eta requires a 2-edge-connected graph");
  EtaResult best{0, -1};
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    int k = shortest_cycle_through_edge(g, u, v);
    if (k > best.eta) best = {k, e};
  }
  return best;
}

/// True iff the multigraph obtained from g by contracting the vertex
/// set marked in in_set (keeping parallel edges) is connected and
/// bridgeless. Single-class quotients count as 2-edge-connected.
inline bool quotient_is_two_edge_connected(const UndirectedGraph& g,
                                           const std::vector<bool>& in_set) {
  int n = g.vertex_count();
  std::vector<int> id(n, -1);
  int classes = 0;
  bool any_in = false;
  for (int v = 0; v < n; ++v)
    if (in_set[v]) any_in = true;
  if (any_in) classes = 1;  // class 0 is the contracted set
  for (int v = 0; v < n; ++v)
    if (!in_set[v]) id[v] = classes++;
    else id[v] = 0;
  if (classes <= 1) return true;
  std::vector<std::pair<int, int>> qedges;
  for (auto [u, v] : g.edges())
    if (id[u] != id[v]) qedges.push_back({id[u], id[v]});
  // connectivity over the quotient
  std::vector<std::vector<int>> adj(classes);
  for (auto [a, b] : qedges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(classes, false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (size_t h = 0; h < queue.size(); ++h)
    for (int w : adj[queue[h]])
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    return false;
  return detail::multigraph_bridges(classes, qedges).empty();
}

inline std::vector<int> multi_source_distances(const UndirectedGraph& g,
                                               const std::vector<int>& sources) {
  std::vector<int> dist(g.vertex_count(), infinite_distance);
  std::vector<int> queue;
  for (int s : sources) {
    g.check_vertex(s);
    if (dist[s] == 0) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (auto [y, e] : g.incident(x)) {
      (void)e;
      if (dist[y] != infinite_distance) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

struct InducedSubgraph {
  UndirectedGraph graph;
  std::vector<int> to_host;    // subgraph vertex -> host vertex
  std::vector<int> from_host;  // host vertex -> subgraph vertex or -1
};

inline InducedSubgraph induced_subgraph(const UndirectedGraph& g,
                                        const std::vector<int>& vertices) {
  std::vector<int> verts = vertices;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> from_host(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    from_host[verts[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (from_host[u] >= 0 && from_host[v] >= 0)
      edges.push_back({from_host[u], from_host[v]});
  return {UndirectedGraph(static_cast<int>(verts.size()), std::move(edges)),
          std::move(verts), std::move(from_host)};
}

}  // namespace orient
