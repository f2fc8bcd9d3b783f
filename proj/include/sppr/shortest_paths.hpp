#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "sppr/graph.hpp"

namespace sppr {

struct TightArc {
  Vertex tail = 0;
  Vertex head = 0;
  EdgeId edge = 0;
};

// Single-source distances plus the tight-edge subgraph: arcs (u,v) with
// dist(v) = dist(u) + w(u,v). Every source->t path inside it has weight dist(t).
struct DistanceTable {
  Vertex source = 0;
  std::vector<std::optional<Rational>> dist;
  std::vector<TightArc> tight_arcs;
  std::vector<std::vector<TightArc>> tight_out;

  bool reachable(Vertex v) const { return dist.at(v).has_value(); }
  const Rational& distance(Vertex v) const {
    if (!dist.at(v)) throw Error("vertex " + std::to_string(v) + " unreachable");
    return *dist[v];
  }
};

namespace detail {

// Dijkstra over an arc accessor; positive weights assumed.
template <class ArcsOf>
std::vector<std::optional<Rational>> dijkstra(std::size_t n, const WeightMap& w, Vertex source,
                                              ArcsOf arcs_of) {
  std::vector<std::optional<Rational>> dist(n);
  std::vector<bool> done(n, false);
  using Item = std::pair<Rational, Vertex>;
  auto later = [](const Item& a, const Item& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);
  dist[source] = Rational(0);
  queue.emplace(Rational(0), source);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = true;
    for (const Arc& a : arcs_of(u)) {
      Rational cand = d + w[a.edge];
      if (!dist[a.to] || cand < *dist[a.to]) {
        dist[a.to] = cand;
        queue.emplace(std::move(cand), a.to);
      }
    }
  }
  return dist;
}

}  // namespace detail

inline DistanceTable shortest_paths(const WeightedGraph& g, const WeightMap& w, Vertex source) {
  if (source >= g.vertex_count()) throw Error("source vertex out of range");
  w.require_aligned(g);
  DistanceTable t;
  t.source = source;
  t.dist = detail::dijkstra(g.vertex_count(), w, source, [&](Vertex u) { return g.out_arcs(u); });
  t.tight_out.assign(g.vertex_count(), {});
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!t.dist[u]) continue;
    for (const Arc& a : g.out_arcs(u)) {
      if (*t.dist[u] + w[a.edge] == *t.dist[a.to]) {
        TightArc ta{u, a.to, a.edge};
        t.tight_arcs.push_back(ta);
        t.tight_out[u].push_back(ta);
      }
    }
  }
  return t;
}

inline DistanceTable shortest_paths(const WeightedGraph& g, Vertex source) {
  return shortest_paths(g, WeightMap::native(g), source);
}

// d(v, target) for every v (walking arcs backwards).
inline std::vector<std::optional<Rational>> distances_to(const WeightedGraph& g,
                                                         const WeightMap& w, Vertex target) {
  if (target >= g.vertex_count()) throw Error("target vertex out of range");
  w.require_aligned(g);
  return detail::dijkstra(g.vertex_count(), w, target, [&](Vertex u) { return g.in_arcs(u); });
}

enum class Extreme { min, max };

struct ExtremeRoute {
  Rational cost;
  Path path;
};

// Min or max of sum(alt_costs) over source->t paths inside the tight subgraph.
// The tight subgraph is acyclic because weights are positive, so vertices in
// increasing distance order are a topological order. Among equal-cost routes
// the lexicographically smallest vertex sequence is returned.
inline ExtremeRoute dag_extreme_route(const DistanceTable& table, const WeightMap& alt_costs,
                                      Vertex t, Extreme mode) {
  const std::size_t n = table.dist.size();
  if (t >= n || !table.dist[t]) throw Error("no tight path to vertex " + std::to_string(t));
  // Backward DP from t keeps lexicographic tie-breaking a forward greedy walk.
  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v)
    if (table.dist[v]) order.push_back(v);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (*table.dist[a] != *table.dist[b]) return *table.dist[a] > *table.dist[b];
    return a < b;
  });
  std::vector<std::optional<Rational>> best(n);
  std::vector<std::optional<TightArc>> next(n);
  best[t] = Rational(0);
  auto better = [&](const Rational& a, const Rational& b) {
    return mode == Extreme::min ? a < b : a > b;
  };
  for (Vertex u : order) {
    if (u == t) continue;
    for (const TightArc& a : table.tight_out[u]) {
      if (!best[a.head]) continue;
      Rational cand = alt_costs[a.edge] + *best[a.head];
      if (!best[u] || better(cand, *best[u])) {
        best[u] = std::move(cand);
        next[u] = a;
      }
    }
  }
  if (!best[table.source]) throw Error("no tight path to vertex " + std::to_string(t));
  ExtremeRoute r{*best[table.source], Path{{table.source}}};
  for (Vertex v = table.source; v != t;) {
    v = next[v]->head;
    r.path.vertices.push_back(v);
  }
  return r;
}

inline Rational dag_extreme_cost(const DistanceTable& table, const WeightMap& alt_costs, Vertex t,
                                 Extreme mode) {
  return dag_extreme_route(table, alt_costs, t, mode).cost;
}

// Lexicographically smallest shortest path from table.source to t.
inline Path canonical_shortest_path(const DistanceTable& table, Vertex t) {
  const std::size_t n = table.dist.size();
  if (t >= n || !table.dist[t]) throw Error("no tight path to vertex " + std::to_string(t));
  // Vertices from which t is reachable inside the tight subgraph.
  std::vector<std::vector<Vertex>> tight_in(n);
  for (const auto& a : table.tight_arcs) tight_in[a.head].push_back(a.tail);
  std::vector<bool> reaches(n, false);
  std::vector<Vertex> stack{t};
  reaches[t] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : tight_in[v])
      if (!reaches[u]) {
        reaches[u] = true;
        stack.push_back(u);
      }
  }
  Path p{{table.source}};
  for (Vertex v = table.source; v != t;) {
    Vertex pick = n;
    for (const auto& a : table.tight_out[v])
      if (reaches[a.head] && a.head < pick) pick = a.head;
    v = pick;
    p.vertices.push_back(v);
  }
  return p;
}

}  // namespace sppr
