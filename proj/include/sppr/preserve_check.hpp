#pragma once

// Decide whether a reweighting w_H of g preserves shortest paths exactly,
// up to stretch alpha, or in the two-sided (alpha_H -> alpha_G) sense, with
// concrete witness paths for every violating pair.

#include <optional>
#include <string>
#include <vector>

#include "sppr/enumerate.hpp"
#include "sppr/graph.hpp"
#include "sppr/shortest_paths.hpp"

namespace sppr {

// Which of the two tie models to enforce.
//   at_least_one: every H-shortest path is G-shortest (the default reading).
//   all:          every G-shortest path is H-shortest.
//   both:         conjunction.
enum class TieModel { at_least_one, all, both };

inline bool checks_h_in_g(TieModel m) { return m != TieModel::all; }
inline bool checks_g_in_h(TieModel m) { return m != TieModel::at_least_one; }

struct StretchParams {
  Rational alpha_h{1};
  Rational alpha_g{1};
};

struct Witness {
  Vertex s = 0;
  Vertex t = 0;
  Path path;
  Rational g_weight;
  Rational h_weight;
  Rational g_dist;
  Rational h_dist;
  bool simple = true;
  std::string kind;
};

struct CheckReport {
  std::string check;
  bool pass = true;
  std::vector<Witness> witnesses;
  std::size_t pairs_checked = 0;
  std::size_t walks_enumerated = 0;
};

namespace detail {

inline Witness make_witness(Vertex s, Vertex t, Path path, Rational gw, Rational hw,
                            const Rational& gd, const Rational& hd, std::string kind) {
  bool simple = path.is_simple();
  return {s, t, std::move(path), std::move(gw), std::move(hw), gd, hd, simple, std::move(kind)};
}

}  // namespace detail

inline CheckReport check_exact(const WeightedGraph& g, const WeightMap& w_h,
                               TieModel model = TieModel::at_least_one) {
  w_h.require_aligned(g);
  const WeightMap w_g = WeightMap::native(g);
  CheckReport report;
  report.check = "exact";
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    const auto dg = shortest_paths(g, w_g, s);
    const auto dh = shortest_paths(g, w_h, s);
    for (Vertex t = 0; t < g.vertex_count(); ++t) {
      if (t == s || !dg.reachable(t)) continue;
      ++report.pairs_checked;
      const Rational& gd = dg.distance(t);
      const Rational& hd = dh.distance(t);
      if (checks_h_in_g(model)) {
        auto worst = dag_extreme_route(dh, w_g, t, Extreme::max);
        auto best = dag_extreme_cost(dh, w_g, t, Extreme::min);
        if (worst.cost != gd || best != gd)
          report.witnesses.push_back(detail::make_witness(s, t, std::move(worst.path), worst.cost,
                                                          hd, gd, hd, "h-shortest-not-g-shortest"));
      }
      if (checks_g_in_h(model)) {
        auto worst = dag_extreme_route(dg, w_h, t, Extreme::max);
        if (worst.cost != hd)
          report.witnesses.push_back(detail::make_witness(s, t, std::move(worst.path), gd,
                                                          worst.cost, gd, hd,
                                                          "g-shortest-not-h-shortest"));
      }
    }
  }
  report.pass = report.witnesses.empty();
  return report;
}

// Every H-shortest path P must satisfy w_G(P) <= alpha * d_G(s,t).
inline CheckReport check_alpha(const WeightedGraph& g, const WeightMap& w_h,
                               const Rational& alpha) {
  if (alpha < Rational(1)) throw Error("alpha must be >= 1");
  w_h.require_aligned(g);
  const WeightMap w_g = WeightMap::native(g);
  CheckReport report;
  report.check = "stretch";
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    const auto dg = shortest_paths(g, w_g, s);
    const auto dh = shortest_paths(g, w_h, s);
    for (Vertex t = 0; t < g.vertex_count(); ++t) {
      if (t == s || !dg.reachable(t)) continue;
      ++report.pairs_checked;
      auto worst = dag_extreme_route(dh, w_g, t, Extreme::max);
      if (worst.cost > alpha * dg.distance(t))
        report.witnesses.push_back(detail::make_witness(s, t, std::move(worst.path), worst.cost,
                                                        dh.distance(t), dg.distance(t),
                                                        dh.distance(t), "stretch-exceeded"));
    }
  }
  report.pass = report.witnesses.empty();
  return report;
}

// Every walk with w_H <= alpha_H * d_H(s,t) must have w_G <= alpha_G * d_G(s,t).
// Enumeration based; throws BudgetExceeded rather than passing silently.
// Reports one witness (the lexicographically first violating walk) per pair.
inline CheckReport check_two_sided(const WeightedGraph& g, const WeightMap& w_h,
                                   const StretchParams& params, Budget& budget) {
  if (params.alpha_h < Rational(1) || params.alpha_g < Rational(1))
    throw Error("stretch parameters must be >= 1");
  w_h.require_aligned(g);
  const WeightMap w_g = WeightMap::native(g);
  CheckReport report;
  report.check = "two-sided";
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    const auto dg = shortest_paths(g, w_g, s);
    const auto dh = shortest_paths(g, w_h, s);
    for (Vertex t = 0; t < g.vertex_count(); ++t) {
      if (t == s || !dg.reachable(t)) continue;
      ++report.pairs_checked;
      const Rational g_limit = params.alpha_g * dg.distance(t);
      std::optional<Witness> found;
      for_each_path(g, w_h, s, t, params.alpha_h * dh.distance(t), PathKind::walk, budget,
                    [&](const Path& p, const Rational& hw) {
                      ++report.walks_enumerated;
                      if (found) return true;
                      Rational gw = path_weight(g, p);
                      if (gw > g_limit)
                        found = detail::make_witness(s, t, p, gw, hw, dg.distance(t),
                                                     dh.distance(t), "two-sided-stretch-exceeded");
                      return true;
                    });
      if (found) report.witnesses.push_back(std::move(*found));
    }
  }
  report.pass = report.witnesses.empty();
  return report;
}

inline CheckReport check_two_sided(const WeightedGraph& g, const WeightMap& w_h,
                                   const StretchParams& params) {
  Budget budget;
  return check_two_sided(g, w_h, params, budget);
}

struct UniquenessReport {
  bool pass = false;
  Rational designated_weight;
  Rational bound;  // alpha * designated_weight
  // Alternatives of weight <= bound, lightest first (ties lexicographic).
  std::vector<WeightedPath> offenders;
  // Lightest alternative overall, when any exists.
  std::optional<Rational> best_alternative;

  // best_alternative / bound; > 1 exactly when the designated path is the only
  // alpha-approximate shortest path. Empty when no alternative exists.
  std::optional<Rational> margin() const {
    if (!best_alternative) return std::nullopt;
    return *best_alternative / bound;
  }
};

// Passes iff `designated` is a shortest s->t path and every other s->t path of
// the given kind weighs more than alpha * w(designated).
inline UniquenessReport unique_alpha_approx(const WeightedGraph& g, const WeightMap& w,
                                            const Path& designated, const Rational& alpha,
                                            PathKind kind, Budget& budget) {
  if (alpha < Rational(1)) throw Error("alpha must be >= 1");
  UniquenessReport r;
  r.designated_weight = path_weight(g, w, designated);
  r.bound = alpha * r.designated_weight;
  for_each_path(g, w, designated.source(), designated.target(), r.bound, kind, budget,
                [&](const Path& p, const Rational& wt) {
                  if (p != designated) r.offenders.push_back({p, wt});
                  return true;
                });
  std::stable_sort(r.offenders.begin(), r.offenders.end(),
                   [](const WeightedPath& a, const WeightedPath& b) { return a.weight < b.weight; });
  if (designated.is_simple()) {
    r.best_alternative = second_best_weight(g, w, designated, kind);
  } else if (!r.offenders.empty()) {
    r.best_alternative = r.offenders.front().weight;
  }
  r.pass = r.offenders.empty();
  // Both routes must agree on the verdict.
  if (designated.is_simple() && r.pass != (!r.best_alternative || *r.best_alternative > r.bound))
    throw Error("internal: enumeration and deviation bound disagree for " + to_string(designated));
  return r;
}

inline UniquenessReport unique_alpha_approx(const WeightedGraph& g, const Path& designated,
                                            const Rational& alpha,
                                            PathKind kind = PathKind::walk) {
  Budget budget;
  return unique_alpha_approx(g, WeightMap::native(g), designated, alpha, kind, budget);
}

}  // namespace sppr
