#pragma once

// Price-function reweighting of a DAG. With vertices labelled by topological
// position, w_H(u,v) = w(u,v) + W * (pos(v) - pos(u)), W the heaviest weight.
// The price phi(v) = W * pos(v) shifts every s->t path by the same amount, so
// shortest paths are unchanged, and every new weight lies in [W, (n+1) W].

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "sppr/graph.hpp"

namespace sppr {

struct TopologicalOrder {
  std::vector<std::size_t> position;  // per vertex
  std::vector<Vertex> sequence;       // vertices by position
};

// Kahn's algorithm, smallest ready vertex first. Throws CycleError carrying a
// witness cycle if g is not acyclic.
inline TopologicalOrder topological_order(const WeightedGraph& g) {
  if (!g.directed()) throw Error("topological order requires a directed graph");
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& e : g.edges()) ++indegree[e.head];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);
  TopologicalOrder order{std::vector<std::size_t>(n, 0), {}};
  while (!ready.empty()) {
    Vertex u = ready.top();
    ready.pop();
    order.position[u] = order.sequence.size();
    order.sequence.push_back(u);
    for (const Arc& a : g.out_arcs(u))
      if (--indegree[a.to] == 0) ready.push(a.to);
  }
  if (order.sequence.size() == n) return order;

  // Every leftover vertex has a leftover in-neighbour: walk backwards from the
  // smallest one until a vertex repeats.
  std::vector<bool> leftover(n, true);
  for (Vertex v : order.sequence) leftover[v] = false;
  Vertex start = 0;
  while (!leftover[start]) ++start;
  std::vector<std::size_t> seen_at(n, n);
  std::vector<Vertex> back;
  for (Vertex v = start; seen_at[v] == n;) {
    seen_at[v] = back.size();
    back.push_back(v);
    for (const Arc& a : g.in_arcs(v))
      if (leftover[a.to]) {
        v = a.to;
        break;
      }
    if (seen_at[v] != n) {
      std::vector<Vertex> cycle(back.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), back.end());
      std::reverse(cycle.begin(), cycle.end());
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      cycle.push_back(cycle.front());
      throw CycleError(std::move(cycle));
    }
  }
  throw Error("unreachable: cycle extraction failed");
}

inline WeightMap reweight_dag(const WeightedGraph& g, const TopologicalOrder& order) {
  if (g.edge_count() == 0) throw Error("no edges");
  Rational heaviest = g.edge(0).weight;
  for (const auto& e : g.edges()) heaviest = max(heaviest, e.weight);
  std::vector<Rational> w;
  w.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    auto span = static_cast<long long>(order.position[e.head]) -
                static_cast<long long>(order.position[e.tail]);
    if (span <= 0) throw Error("order is not topological for this graph");
    w.push_back(e.weight + heaviest * Rational(span));
  }
  return WeightMap(std::move(w));
}

inline WeightMap reweight_dag(const WeightedGraph& g) {
  return reweight_dag(g, topological_order(g));
}

struct PriceIdentity {
  Rational original_difference;    // w(P) - w(Q)
  Rational reweighted_difference;  // w_H(P) - w_H(Q)
};

inline PriceIdentity price_identity(const WeightedGraph& g, const WeightMap& w_h, const Path& p,
                                    const Path& q) {
  if (p.vertices.empty() || q.vertices.empty() || p.source() != q.source() ||
      p.target() != q.target())
    throw Error("paths " + to_string(p) + " and " + to_string(q) + " do not share endpoints");
  return {path_weight(g, p) - path_weight(g, q), path_weight(g, w_h, p) - path_weight(g, w_h, q)};
}

}  // namespace sppr
