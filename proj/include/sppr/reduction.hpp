#pragma once

// Undirected <-> directed black-box reduction: every undirected edge {u,v}
// becomes the arcs (u,v) and (v,u); a reweighting of the directed image is
// pulled back by summing the two arc weights.

#include "sppr/graph.hpp"

namespace sppr {

inline WeightedGraph undirected_to_directed(const WeightedGraph& g) {
  if (g.directed()) throw Error("undirected_to_directed expects an undirected graph");
  std::vector<Edge> arcs;
  arcs.reserve(2 * g.edge_count());
  for (const auto& e : g.edges()) {
    arcs.push_back({e.tail, e.head, e.weight});
    arcs.push_back({e.head, e.tail, e.weight});
  }
  return WeightedGraph(true, g.vertex_count(), std::move(arcs));
}

// w_H({u,v}) = w_H'(u,v) + w_H'(v,u).
inline WeightMap recombine(const WeightedGraph& undirected, const WeightedGraph& directed_image,
                           const WeightMap& directed_weights) {
  if (undirected.directed() || !directed_image.directed())
    throw Error("recombine expects an undirected graph and its directed image");
  directed_weights.require_aligned(directed_image);
  if (directed_image.edge_count() != 2 * undirected.edge_count())
    throw Error("directed graph is not the image of the undirected graph");
  std::vector<Rational> out;
  out.reserve(undirected.edge_count());
  for (const auto& e : undirected.edges()) {
    auto fwd = directed_image.find_edge(e.tail, e.head);
    auto bwd = directed_image.find_edge(e.head, e.tail);
    if (!fwd || !bwd) throw Error("directed graph is not the image of the undirected graph");
    out.push_back(directed_weights[*fwd] + directed_weights[*bwd]);
  }
  return WeightMap(std::move(out));
}

}  // namespace sppr
