#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "sppr/graph.hpp"
#include "sppr/shortest_paths.hpp"

namespace sppr {

enum class PathKind { walk, simple };

// Shared counter of expanded walk prefixes. Copies share nothing; pass by
// reference to let several enumerations draw from one budget.
class Budget {
 public:
  static constexpr std::size_t default_limit = 1'000'000;

  explicit Budget(std::size_t limit = default_limit) : limit_(limit) {}

  void charge() {
    if (++used_ > limit_) throw BudgetExceeded(limit_);
  }
  std::size_t used() const noexcept { return used_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

struct WeightedPath {
  Path path;
  Rational weight;
};

// Visits every s->t walk (or simple path) of weight <= bound in lexicographic
// order of vertex sequences. Prefixes are pruned with the exact remaining
// distance to t. The visitor returns false to stop early.
inline void for_each_path(const WeightedGraph& g, const WeightMap& w, Vertex s, Vertex t,
                          const Rational& bound, PathKind kind, Budget& budget,
                          const std::function<bool(const Path&, const Rational&)>& visit) {
  if (s >= g.vertex_count() || t >= g.vertex_count()) throw Error("vertex out of range");
  w.require_aligned(g);
  if (bound.sign() < 0) return;
  const auto to_t = distances_to(g, w, t);
  if (!to_t[s] || *to_t[s] > bound) return;

  std::vector<Vertex> prefix{s};
  std::vector<bool> on_path(g.vertex_count(), false);
  on_path[s] = true;
  bool stop = false;

  std::function<void(const Rational&)> extend = [&](const Rational& weight) {
    Vertex u = prefix.back();
    if (u == t) {
      if (!visit(Path{prefix}, weight)) {
        stop = true;
        return;
      }
      if (kind == PathKind::simple) return;
    }
    for (const Arc& a : g.out_arcs(u)) {
      if (kind == PathKind::simple && on_path[a.to]) continue;
      if (!to_t[a.to]) continue;
      Rational next = weight + w[a.edge];
      if (next + *to_t[a.to] > bound) continue;
      budget.charge();
      prefix.push_back(a.to);
      on_path[a.to] = true;
      extend(next);
      on_path[a.to] = false;
      prefix.pop_back();
      if (stop) return;
    }
  };
  extend(Rational(0));
}

inline std::vector<WeightedPath> enumerate_paths(const WeightedGraph& g, const WeightMap& w,
                                                 Vertex s, Vertex t, const Rational& bound,
                                                 PathKind kind, Budget& budget) {
  std::vector<WeightedPath> out;
  for_each_path(g, w, s, t, bound, kind, budget, [&](const Path& p, const Rational& wt) {
    out.push_back({p, wt});
    return true;
  });
  return out;
}

// All s->t walks with total weight <= bound.
inline std::vector<WeightedPath> enumerate_walks(const WeightedGraph& g, const WeightMap& w,
                                                 Vertex s, Vertex t, const Rational& bound,
                                                 Budget& budget) {
  return enumerate_paths(g, w, s, t, bound, PathKind::walk, budget);
}

inline std::vector<WeightedPath> enumerate_walks(const WeightedGraph& g, const WeightMap& w,
                                                 Vertex s, Vertex t, const Rational& bound) {
  Budget budget;
  return enumerate_walks(g, w, s, t, bound, budget);
}

inline std::vector<WeightedPath> enumerate_simple_paths(const WeightedGraph& g,
                                                        const WeightMap& w, Vertex s, Vertex t,
                                                        const Rational& bound, Budget& budget) {
  return enumerate_paths(g, w, s, t, bound, PathKind::simple, budget);
}

// Every simple s->t path regardless of weight.
inline std::vector<Path> all_simple_paths(const WeightedGraph& g, Vertex s, Vertex t,
                                          Budget& budget) {
  std::vector<Path> out;
  std::vector<Vertex> prefix{s};
  std::vector<bool> on_path(g.vertex_count(), false);
  on_path[s] = true;
  std::function<void()> extend = [&] {
    Vertex u = prefix.back();
    if (u == t) {
      out.push_back(Path{prefix});
      return;
    }
    for (const Arc& a : g.out_arcs(u)) {
      if (on_path[a.to]) continue;
      budget.charge();
      prefix.push_back(a.to);
      on_path[a.to] = true;
      extend();
      on_path[a.to] = false;
      prefix.pop_back();
    }
  };
  extend();
  return out;
}

// Lightest s->t path (of the given kind) other than `designated`, which must
// be a simple s->t path. Every alternative leaves the designated path at some
// first vertex p_i; the lightest continuation from there is a shortest path in
// the graph with p_0..p_i removed (simple) or intact (walk).
inline std::optional<Rational> second_best_weight(const WeightedGraph& g, const WeightMap& w,
                                                  const Path& designated, PathKind kind) {
  auto edges = path_edges(g, designated);
  const auto& p = designated.vertices;
  const Vertex t = designated.target();
  const std::size_t n = g.vertex_count();
  std::optional<Rational> best;
  auto offer = [&](Rational cand) {
    if (!best || cand < *best) best = std::move(cand);
  };

  std::vector<std::optional<Rational>> to_t;
  if (kind == PathKind::walk) to_t = distances_to(g, w, t);

  Rational prefix_weight;
  std::vector<bool> removed(n, false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vertex u = p[i];
    removed[u] = true;
    if (kind == PathKind::simple && u == t) break;
    if (kind == PathKind::simple) {
      // Distances to t avoiding the prefix p_0..p_i.
      auto dist = detail::dijkstra(n, w, t, [&](Vertex v) {
        std::vector<Arc> arcs;
        if (removed[v]) return arcs;
        for (const Arc& a : g.in_arcs(v))
          if (!removed[a.to]) arcs.push_back(a);
        return arcs;
      });
      for (const Arc& a : g.out_arcs(u)) {
        if (i + 1 < p.size() && a.to == p[i + 1]) continue;
        if (removed[a.to] || !dist[a.to]) continue;
        offer(prefix_weight + w[a.edge] + *dist[a.to]);
      }
    } else {
      for (const Arc& a : g.out_arcs(u)) {
        if (i + 1 < p.size() && a.to == p[i + 1]) continue;
        if (!to_t[a.to]) continue;
        offer(prefix_weight + w[a.edge] + *to_t[a.to]);
      }
    }
    if (i < edges.size()) prefix_weight += w[edges[i]];
  }
  return best;
}

}  // namespace sppr
