#pragma once

// Deterministic generators for the reweighting lower-bound families, each
// paired with its designated path system.
//
// Index layouts:
//   chains: v_i^j (cycle i = 1..k, slot j = 0..size-1) -> (i-1)*size + j
//   grid:   (row, col)                                 -> row*L + col, row 0 on top

#include <optional>
#include <string>

#include "sppr/graph.hpp"
#include "sppr/path_system.hpp"

namespace sppr {

struct Construction {
  WeightedGraph graph;
  PathSystem paths;
};

struct EdgeTag {
  enum class Kind { cycle, cross, horizontal, vertical };
  Kind kind = Kind::cycle;
  // Cycle index i for cycle edges, i for cross edges C_i -> C_{i+1},
  // column for vertical grid edges, row for horizontal ones.
  std::size_t level = 0;

  friend bool operator==(const EdgeTag&, const EdgeTag&) = default;
};

struct ChainLayout {
  std::size_t cycles = 0;
  std::size_t cycle_size = 0;

  std::size_t vertex_count() const { return cycles * cycle_size; }
  Vertex vertex(std::size_t cycle, std::size_t slot) const {
    return (cycle - 1) * cycle_size + slot;
  }
  std::size_t cycle_of(Vertex v) const { return v / cycle_size + 1; }
  std::size_t slot_of(Vertex v) const { return v % cycle_size; }

  EdgeTag tag(const Edge& e) const {
    std::size_t a = cycle_of(e.tail), b = cycle_of(e.head);
    if (a == b) return {EdgeTag::Kind::cycle, a};
    return {EdgeTag::Kind::cross, std::min(a, b)};
  }
};

struct GridLayout {
  std::size_t side = 0;

  std::size_t vertex_count() const { return side * side; }
  Vertex vertex(std::size_t row, std::size_t col) const { return row * side + col; }
  std::size_t row_of(Vertex v) const { return v / side; }
  std::size_t col_of(Vertex v) const { return v % side; }

  EdgeTag tag(const Edge& e) const {
    if (row_of(e.tail) == row_of(e.head)) return {EdgeTag::Kind::horizontal, row_of(e.tail)};
    return {EdgeTag::Kind::vertical, col_of(e.tail)};
  }
};

struct ChainConstruction {
  WeightedGraph graph;
  PathSystem paths;
  ChainLayout layout;
  // 1 for the exact families; the stretch the family is built against otherwise.
  Rational alpha{1};
};

struct GridConstruction {
  WeightedGraph graph;
  PathSystem paths;
  GridLayout layout;
  Rational alpha_g;
};

struct ChainMode {
  enum class Kind { exact, approx };
  Kind kind = Kind::exact;
  Rational alpha{1};              // directed approx only
  std::optional<Rational> delta;  // directed only; cross-edge weight

  static ChainMode exact(std::optional<Rational> delta = std::nullopt) {
    return {Kind::exact, Rational(1), std::move(delta)};
  }
  static ChainMode approx(Rational alpha = Rational(1),
                          std::optional<Rational> delta = std::nullopt) {
    return {Kind::approx, std::move(alpha), std::move(delta)};
  }
  bool is_approx() const { return kind == Kind::approx; }
};

// Unit path v0 -> ... -> v_{n-1} plus the shortcut (v0, v_{n-1}) of weight n.
// Designates every subpath v_i -> ... -> v_j.
inline Construction gen_path_shortcut(std::size_t n) {
  if (n < 3) throw Error("path-with-shortcut needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Rational(1)});
  edges.push_back({0, n - 1, Rational(static_cast<long long>(n))});
  Construction c{WeightedGraph(true, n, std::move(edges)), {}};
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      Path p;
      for (Vertex v = i; v <= j; ++v) p.vertices.push_back(v);
      c.paths.add(std::move(p));
    }
  c.paths.validate(c.graph);
  return c;
}

inline Rational default_delta(std::size_t k, const ChainMode& mode) {
  if (mode.is_approx()) return Rational(1) / pow(Rational(3) * mode.alpha, 2 * k);
  return Rational(1) / pow(Rational(3), k + 1);
}

// Directed 3-cycles C_1..C_k, forward for odd i and backward for even i, with
// cross edges v_i^j -> v_{i+1}^j of weight delta.
inline ChainConstruction gen_directed_chain(std::size_t k, const ChainMode& mode) {
  if (k < 2) throw Error("directed chain needs k >= 2");
  if (mode.alpha < Rational(1)) throw Error("alpha must be >= 1");
  Rational delta = mode.delta ? *mode.delta : default_delta(k, mode);
  if (!delta.is_positive()) throw Error("delta must be positive");
  const Rational base = mode.is_approx() ? Rational(3) * mode.alpha : Rational(3);

  ChainLayout layout{k, 3};
  auto successor = [](std::size_t i, std::size_t slot) {
    return i % 2 == 1 ? (slot + 1) % 3 : (slot + 2) % 3;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= k; ++i) {
    Rational w = Rational(1) / pow(base, static_cast<unsigned>(i));
    for (std::size_t j = 0; j < 3; ++j)
      edges.push_back({layout.vertex(i, j), layout.vertex(i, successor(i, j)), w});
    if (i < k)
      for (std::size_t j = 0; j < 3; ++j)
        edges.push_back({layout.vertex(i, j), layout.vertex(i + 1, j), delta});
  }
  ChainConstruction c{WeightedGraph(true, layout.vertex_count(), std::move(edges)), {}, layout,
                      mode.is_approx() ? mode.alpha : Rational(1)};
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t a = 0; a < 3; ++a) {
      std::size_t b = successor(i, a);
      Path p{{layout.vertex(i, a), layout.vertex(i + 1, a)}};
      for (std::size_t slot = a; slot != b;) {
        slot = successor(i + 1, slot);
        p.vertices.push_back(layout.vertex(i + 1, slot));
      }
      c.paths.add(std::move(p), true, c.alpha);
    }
  c.paths.validate(c.graph);
  return c;
}

// Undirected 5-cycles; cross edges v_i^j -- v_{i+1}^{2j mod 5} (0-based slots).
// Exact: cycle weight 1/3^i, cross weight 1. Approx: cross weight 1/3^(i-1),
// designated paths separated by 13/12.
inline ChainConstruction gen_undirected_chain(std::size_t k, const ChainMode& mode) {
  if (k < 2) throw Error("undirected chain needs k >= 2");
  ChainLayout layout{k, 5};
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= k; ++i) {
    Rational w = Rational(1) / pow(Rational(3), static_cast<unsigned>(i));
    for (std::size_t j = 0; j < 5; ++j)
      edges.push_back({layout.vertex(i, j), layout.vertex(i, (j + 1) % 5), w});
    if (i < k) {
      Rational cross =
          mode.is_approx() ? Rational(1) / pow(Rational(3), static_cast<unsigned>(i - 1))
                           : Rational(1);
      for (std::size_t j = 0; j < 5; ++j)
        edges.push_back({layout.vertex(i, j), layout.vertex(i + 1, (2 * j) % 5), cross});
    }
  }
  Rational separation = mode.is_approx() ? Rational(13, 12) : Rational(1);
  ChainConstruction c{WeightedGraph(false, layout.vertex_count(), std::move(edges)), {}, layout,
                      separation};
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      std::size_t m = (2 * j) % 5;
      c.paths.add(Path{{layout.vertex(i, j), layout.vertex(i + 1, m),
                        layout.vertex(i + 1, (m + 1) % 5), layout.vertex(i + 1, (m + 2) % 5)}},
                  true, separation);
    }
  c.paths.validate(c.graph);
  return c;
}

// L x L grid: horizontal edges (r,c)->(r,c+1) of weight 1, vertical edges
// (r,c)->(r-1,c) of weight (alpha_g*L)^(2c).
inline GridConstruction gen_grid(std::size_t side, const Rational& alpha_g) {
  if (side < 2) throw Error("grid needs L >= 2");
  if (alpha_g <= Rational(1)) throw Error("grid needs alpha_G > 1");
  GridLayout layout{side};
  const Rational base = alpha_g * Rational(static_cast<long long>(side));
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t c = 0; c < side; ++c) {
      if (c + 1 < side) edges.push_back({layout.vertex(r, c), layout.vertex(r, c + 1), Rational(1)});
      if (r > 0)
        edges.push_back({layout.vertex(r, c), layout.vertex(r - 1, c),
                         pow(base, static_cast<unsigned>(2 * c))});
    }
  GridConstruction g{WeightedGraph(true, layout.vertex_count(), std::move(edges)), {}, layout,
                     alpha_g};
  // One row up, further right: one vertical edge at the source column, then horizontals.
  for (std::size_t i = 1; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j)
      for (std::size_t k = j + 1; k < side; ++k) {
        Path p{{layout.vertex(i, j)}};
        for (std::size_t c = j; c <= k; ++c) p.vertices.push_back(layout.vertex(i - 1, c));
        g.paths.add(std::move(p), true, alpha_g);
      }
  // Further up, one column right: verticals at the source column, then one horizontal.
  for (std::size_t i = 1; i < side; ++i)
    for (std::size_t j = 0; j + 1 < side; ++j)
      for (std::size_t k = 0; k < i; ++k) {
        Path p;
        for (std::size_t r = i + 1; r-- > k;) p.vertices.push_back(layout.vertex(r, j));
        p.vertices.push_back(layout.vertex(k, j + 1));
        g.paths.add(std::move(p), true, alpha_g);
      }
  g.paths.validate(g.graph);
  return g;
}

struct Fig1Fixture {
  WeightedGraph g;
  WeightMap h;
};

// Four vertices a=0, b=1, c=2, d=3 (undirected).
inline Fig1Fixture fig1_fixture() {
  WeightedGraph g(false, 4,
                  {{0, 1, Rational(97)},
                   {0, 2, Rational(53)},
                   {0, 3, Rational(500)},
                   {1, 3, Rational(5)},
                   {2, 3, Rational(83)}});
  // Canonical edge order: a-b, a-c, a-d, b-d, c-d.
  WeightMap h({Rational(1), Rational(2), Rational(4), Rational(1), Rational(1)});
  return {std::move(g), std::move(h)};
}

}  // namespace sppr
