#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sppr/error.hpp"
#include "sppr/rational.hpp"

namespace sppr {

using Vertex = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;
  Rational weight;
};

// One traversal direction of an edge. Undirected edges yield two arcs.
struct Arc {
  Vertex to = 0;
  EdgeId edge = 0;
};

// G = (V, E, w) with vertices 0..n-1. Edges are kept in canonical order
// (sorted by endpoints; undirected edges stored with tail < head), so edge ids
// are a pure function of the edge set.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  WeightedGraph(bool directed, std::size_t n, std::vector<Edge> edges)
      : directed_(directed), n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) {
      if (e.tail >= n_ || e.head >= n_)
        throw Error("edge (" + std::to_string(e.tail) + "," + std::to_string(e.head) +
                    ") out of range for " + std::to_string(n_) + " vertices");
      if (e.tail == e.head) throw Error("self-loop at vertex " + std::to_string(e.tail));
      if (!e.weight.is_positive())
        throw Error("non-positive weight " + e.weight.str() + " on edge (" +
                    std::to_string(e.tail) + "," + std::to_string(e.head) + ")");
      if (!directed_ && e.tail > e.head) std::swap(e.tail, e.head);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
    });
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (EdgeId i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      if (!index_.emplace(key(e.tail, e.head), i).second)
        throw Error("duplicate edge (" + std::to_string(e.tail) + "," +
                    std::to_string(e.head) + ")");
      out_[e.tail].push_back({e.head, i});
      in_[e.head].push_back({e.tail, i});
      if (!directed_) {
        out_[e.head].push_back({e.tail, i});
        in_[e.tail].push_back({e.head, i});
      }
    }
    auto by_vertex = [](const Arc& a, const Arc& b) { return a.to < b.to; };
    for (auto& arcs : out_) std::sort(arcs.begin(), arcs.end(), by_vertex);
    for (auto& arcs : in_) std::sort(arcs.begin(), arcs.end(), by_vertex);
  }

  bool directed() const noexcept { return directed_; }
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  // Arcs leaving v, sorted by target vertex.
  std::span<const Arc> out_arcs(Vertex v) const { return out_.at(v); }
  // Arcs entering v; Arc::to is the arc's tail.
  std::span<const Arc> in_arcs(Vertex v) const { return in_.at(v); }

  // Edge usable to step from u to v, honouring direction.
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return std::nullopt;
    if (!directed_ && u > v) std::swap(u, v);
    auto it = index_.find(key(u, v));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<Rational> native_weights() const {
    std::vector<Rational> w;
    w.reserve(edges_.size());
    for (const auto& e : edges_) w.push_back(e.weight);
    return w;
  }

 private:
  std::uint64_t key(Vertex u, Vertex v) const {
    return static_cast<std::uint64_t>(u) * n_ + v;
  }

  bool directed_ = true;
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
};

// Alternative weights w_H on the edge set of a reference graph, index-aligned
// with its canonical edge order.
class WeightMap {
 public:
  WeightMap() = default;
  explicit WeightMap(std::vector<Rational> weights) : weights_(std::move(weights)) {
    for (std::size_t i = 0; i < weights_.size(); ++i)
      if (!weights_[i].is_positive())
        throw Error("non-positive weight " + weights_[i].str() + " at edge index " +
                    std::to_string(i));
  }

  static WeightMap native(const WeightedGraph& g) { return WeightMap(g.native_weights()); }

  std::size_t size() const noexcept { return weights_.size(); }
  const Rational& operator[](EdgeId e) const { return weights_[e]; }
  const std::vector<Rational>& values() const noexcept { return weights_; }

  void require_aligned(const WeightedGraph& g) const {
    if (weights_.size() != g.edge_count())
      throw Error("weight map has " + std::to_string(weights_.size()) +
                  " entries but the graph has " + std::to_string(g.edge_count()) + " edges");
  }

  friend bool operator==(const WeightMap&, const WeightMap&) = default;

 private:
  std::vector<Rational> weights_;
};

// A walk: vertices need not be distinct.
struct Path {
  std::vector<Vertex> vertices;

  Vertex source() const { return vertices.front(); }
  Vertex target() const { return vertices.back(); }
  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }

  bool is_simple() const {
    std::vector<Vertex> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) { return a.vertices <=> b.vertices; }
};

inline std::string to_string(const Path& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.vertices[i]);
  }
  return s + ")";
}

// Edge ids traversed by p; throws if a step is not an edge of g.
inline std::vector<EdgeId> path_edges(const WeightedGraph& g, const Path& p) {
  if (p.vertices.empty()) throw Error("empty path");
  std::vector<EdgeId> ids;
  ids.reserve(p.edge_count());
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    auto e = g.find_edge(p.vertices[i], p.vertices[i + 1]);
    if (!e)
      throw Error("path " + to_string(p) + " uses a non-edge (" +
                  std::to_string(p.vertices[i]) + "," + std::to_string(p.vertices[i + 1]) + ")");
    ids.push_back(*e);
  }
  return ids;
}

inline bool is_valid_path(const WeightedGraph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (p.vertices[i] >= g.vertex_count()) return false;
    if (i + 1 < p.vertices.size() && !g.find_edge(p.vertices[i], p.vertices[i + 1]))
      return false;
  }
  return true;
}

inline Rational path_weight(const WeightedGraph& g, const WeightMap& w, const Path& p) {
  Rational total;
  for (EdgeId e : path_edges(g, p)) total += w[e];
  return total;
}

inline Rational path_weight(const WeightedGraph& g, const Path& p) {
  Rational total;
  for (EdgeId e : path_edges(g, p)) total += g.edge(e).weight;
  return total;
}

// max_e w(e) / min_e w(e).
inline Rational aspect_ratio(const WeightMap& w) {
  if (w.size() == 0) throw Error("no edges");
  const auto& v = w.values();
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi / *lo;
}

inline Rational aspect_ratio(const WeightedGraph& g, const WeightMap& w) {
  w.require_aligned(g);
  return aspect_ratio(w);
}

inline Rational aspect_ratio(const WeightedGraph& g) { return aspect_ratio(WeightMap::native(g)); }

}  // namespace sppr
