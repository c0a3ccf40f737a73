#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

/// Per-edge direction assignment over a host graph. Every vertex
/// touched by an arc (plus explicitly added anchors) is "captured".
/// Re-orienting an edge the same way is a no-op; orienting it the
/// other way throws, so any construction conflict surfaces immediately
/// instead of silently rewriting history.
class PartialOrientation {
 public:
  enum class Dir : unsigned char { unoriented, forward, backward };

  explicit PartialOrientation(const UndirectedGraph& host)
      : host_(&host),
        dir_(host.edge_count(), Dir::unoriented),
        captured_(host.vertex_count(), false),
        out_(host.vertex_count()),
        in_(host.vertex_count()) {}

  const UndirectedGraph& host() const { return *host_; }

  void orient(int from, int to) {
    auto e = host_->edge_id(from, to);
    if (!e) throw std::invalid_argument("cannot orient a non-edge");
    auto [u, v] = host_->edge(*e);
    Dir want = (from == u) ? Dir::forward : Dir::backward;
    if (dir_[*e] == want) return;
    if (dir_[*e] != Dir::unoriented)
      throw std::logic_error("conflicting re-orientation of an edge");
    dir_[*e] = want;
    ++oriented_count_;
    out_[from].push_back(to);
    in_[to].push_back(from);
    capture(from);
    capture(to);
  }

  void add_anchor(int v) {
    host_->check_vertex(v);
    capture(v);
  }

  bool edge_oriented(int e) const { return dir_.at(e) != Dir::unoriented; }

  /// Arc as (tail, head), or nullopt while unoriented.
  std::optional<std::pair<int, int>> arc(int e) const {
    auto [u, v] = host_->edge(e);
    switch (dir_.at(e)) {
      case Dir::unoriented: return std::nullopt;
      case Dir::forward: return std::make_pair(u, v);
      case Dir::backward: return std::make_pair(v, u);
    }
    return std::nullopt;
  }

  int oriented_count() const { return oriented_count_; }
  bool fully_oriented() const { return oriented_count_ == host_->edge_count(); }

  bool captured(int v) const { return captured_.at(v); }
  std::vector<int> captured_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < host_->vertex_count(); ++v)
      if (captured_[v]) out.push_back(v);
    return out;
  }

  const std::vector<int>& out_neighbors(int v) const { return out_.at(v); }
  const std::vector<int>& in_neighbors(int v) const { return in_.at(v); }

  PartialOrientation reversed() const {
    PartialOrientation r(*host_);
    for (int e = 0; e < host_->edge_count(); ++e)
      if (auto a = arc(e)) r.orient(a->second, a->first);
    for (int v = 0; v < host_->vertex_count(); ++v)
      if (captured_[v]) r.capture(v);
    return r;
  }

  /// Adds every arc of other into this orientation. Disjoint edge sets
  /// are expected; a disagreement throws.
  void merge(const PartialOrientation& other) {
    if (other.host_ != host_) throw std::invalid_argument("merge across hosts");
    for (int e = 0; e < host_->edge_count(); ++e)
      if (auto a = other.arc(e)) orient(a->first, a->second);
    for (int v = 0; v < host_->vertex_count(); ++v)
      if (other.captured_[v]) capture(v);
  }

 private:
  void capture(int v) { captured_[v] = true; }

  const UndirectedGraph* host_;
  std::vector<Dir> dir_;
  std::vector<bool> captured_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  int oriented_count_ = 0;
};

/// BFS along arcs only; unoriented edges are not traversable.
inline std::vector<int> directed_distances(const PartialOrientation& o,
                                           int source) {
  o.host().check_vertex(source);
  std::vector<int> dist(o.host().vertex_count(), infinite_distance);
  dist[source] = 0;
  std::vector<int> queue{source};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int y : o.out_neighbors(x))
      if (dist[y] == infinite_distance) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

/// Distances from every vertex TO target (BFS on reversed arcs).
inline std::vector<int> directed_distances_to(const PartialOrientation& o,
                                              int target) {
  o.host().check_vertex(target);
  std::vector<int> dist(o.host().vertex_count(), infinite_distance);
  dist[target] = 0;
  std::vector<int> queue{target};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int y : o.in_neighbors(x))
      if (dist[y] == infinite_distance) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

inline int multi_source_directed_distance_max(const PartialOrientation& o,
                                              const std::vector<int>& sources,
                                              bool reverse_arcs) {
  std::vector<int> dist(o.host().vertex_count(), infinite_distance);
  std::vector<int> queue;
  for (int s : sources)
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    const auto& next = reverse_arcs ? o.in_neighbors(x) : o.out_neighbors(x);
    for (int y : next)
      if (dist[y] == infinite_distance) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  int worst = 0;
  for (int d : dist) worst = std::max(worst, d);
  return worst;
}

/// Diameter of a total orientation, or nullopt when it is not strong.
/// Throws on a partially oriented input.
inline std::optional<int> oriented_diameter_of(const PartialOrientation& o) {
  if (!o.fully_oriented())
    throw std::invalid_argument("oriented_diameter_of needs a total orientation");
  int n = o.host().vertex_count();
  int worst = 0;
  for (int v = 0; v < n; ++v) {
    auto dist = directed_distances(o, v);
    for (int d : dist) {
      if (!reachable(d)) return std::nullopt;
      worst = std::max(worst, d);
    }
  }
  return worst;
}

}  // namespace orient
