#pragma once

// Linear programs over edge weights.
//
// Variables are the H-weights w_e (one per edge id, lower bound 1: scaling a
// preserving map so its minimum is 1 changes no shortest path). Strict
// inequalities become an additive margin eps.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sppr/constructions.hpp"
#include "sppr/enumerate.hpp"
#include "sppr/lp.hpp"
#include "sppr/path_system.hpp"
#include "sppr/preserve_check.hpp"

namespace sppr {

namespace detail {

inline std::string edge_name(const WeightedGraph& g, EdgeId e) {
  return "w(" + std::to_string(g.edge(e).tail) + "," + std::to_string(g.edge(e).head) + ")";
}

inline LinearProgram edge_program(const WeightedGraph& g) {
  LinearProgram lp;
  for (EdgeId e = 0; e < g.edge_count(); ++e) lp.add_variable(edge_name(g, e), Rational(1));
  return lp;
}

// sum_{alt} w - factor * sum_{designated} w  (relation) rhs
inline Constraint path_constraint(const WeightedGraph& g, const Path& alternative,
                                  const Path& designated, const Rational& factor, Relation rel,
                                  const Rational& rhs, const std::string& note) {
  std::map<EdgeId, Rational> coef;
  for (EdgeId e : path_edges(g, alternative)) coef[e] += Rational(1);
  for (EdgeId e : path_edges(g, designated)) coef[e] -= factor;
  Constraint c;
  for (auto& [e, v] : coef)
    if (!v.is_zero()) c.terms.push_back({e, v});
  c.relation = rel;
  c.rhs = rhs;
  c.provenance = note + ": " + to_string(alternative) + " vs designated " + to_string(designated);
  return c;
}

// Designated path must be a G-shortest path; returns d_G(s,t).
inline Rational require_g_shortest(const WeightedGraph& g, const Path& p) {
  auto table = shortest_paths(g, p.source());
  Rational w = path_weight(g, p);
  if (!table.reachable(p.target()) || table.distance(p.target()) != w)
    throw Error("designated path " + to_string(p) + " is not a shortest path of the graph");
  return w;
}

}  // namespace detail

// Every simple alternative of every designated path, checked against the
// original weights. Tied alternatives (also G-shortest) follow the tie model:
//   at_least_one: w(P') >= w(pi)             (ties allowed, pi stays H-shortest)
//   all:          w(P') =  w(pi) for ties,  >= for the rest
//   both:         w(P') =  w(pi) for ties,  >= w(pi) + eps for the rest
// A pair marked uniqueness_required with G-ties is rejected.
inline LinearProgram build_preservation_lp(const WeightedGraph& g, const PathSystem& paths,
                                           const Rational& eps,
                                           TieModel model, Budget& budget) {
  if (!eps.is_positive()) throw Error("eps must be positive");
  paths.validate(g);
  LinearProgram lp = detail::edge_program(g);
  for (const auto& [key, entry] : paths.entries()) {
    const Rational d = detail::require_g_shortest(g, entry.path);
    for (const Path& alt : all_simple_paths(g, key.first, key.second, budget)) {
      if (alt == entry.path) continue;
      const bool tied = path_weight(g, alt) == d;
      if (tied && entry.uniqueness_required)
        throw Error("designated path " + to_string(entry.path) +
                    " is not the unique shortest path: tied with " + to_string(alt));
      if (tied) {
        Relation rel = model == TieModel::at_least_one ? Relation::ge : Relation::eq;
        lp.constraints.push_back(detail::path_constraint(g, alt, entry.path, Rational(1), rel,
                                                         Rational(0), "tied alternative"));
      } else {
        Rational rhs = model == TieModel::all ? Rational(0) : eps;
        lp.constraints.push_back(detail::path_constraint(g, alt, entry.path, Rational(1),
                                                         Relation::ge, rhs, "alternative"));
      }
    }
  }
  return lp;
}

inline LinearProgram build_preservation_lp(const WeightedGraph& g, const PathSystem& paths,
                                           const Rational& eps,
                                           TieModel model = TieModel::at_least_one) {
  Budget budget;
  return build_preservation_lp(g, paths, eps, model, budget);
}

// For each designated pi and each other simple path P' between its endpoints:
//   w(P') >= alpha_h * w(pi) + eps.
// The objective is given as per-edge coefficients (minimised).
inline LinearProgram build_separation_lp(const WeightedGraph& g, const PathSystem& paths,
                                         const Rational& alpha_h, const Rational& eps,
                                         const std::vector<LinearTerm>& objective,
                                         Budget& budget) {
  if (alpha_h < Rational(1)) throw Error("alpha_H must be >= 1");
  if (!eps.is_positive()) throw Error("eps must be positive");
  paths.validate(g);
  LinearProgram lp = detail::edge_program(g);
  for (const auto& [key, entry] : paths.entries())
    for (const Path& alt : all_simple_paths(g, key.first, key.second, budget)) {
      if (alt == entry.path) continue;
      lp.constraints.push_back(detail::path_constraint(g, alt, entry.path, alpha_h,
                                                       Relation::ge, eps, "separated alternative"));
    }
  lp.objective.terms = objective;
  lp.objective.sense = Sense::minimize;
  lp.validate();
  return lp;
}

inline LinearProgram build_separation_lp(const WeightedGraph& g, const PathSystem& paths,
                                         const Rational& alpha_h, const Rational& eps,
                                         const std::vector<LinearTerm>& objective) {
  Budget budget;
  return build_separation_lp(g, paths, alpha_h, eps, objective, budget);
}

// Adds the lexicographically smallest G-shortest path for every reachable
// pair that has none yet (unordered pairs for undirected graphs). Added paths
// allow ties. The result describes every shortest path of g, so a map
// satisfying its constraints passes check_exact.
inline PathSystem complete_path_system(const WeightedGraph& g, const PathSystem& paths) {
  PathSystem out = paths;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    auto table = shortest_paths(g, s);
    for (Vertex t = 0; t < g.vertex_count(); ++t) {
      if (t == s || !table.reachable(t)) continue;
      if (out.find(s, t)) continue;
      if (!g.directed() && out.find(t, s)) continue;
      out.add(canonical_shortest_path(table, t), false, Rational(1));
    }
  }
  return out;
}

enum class PairScope { all_pairs, designated };

struct OptimizeOptions {
  TieModel model = TieModel::at_least_one;
  PairScope scope = PairScope::all_pairs;
  std::size_t budget = Budget::default_limit;  // per separation round
  std::size_t cuts_per_pair = 8;
};

struct OptimizeResult {
  Rational optimum;
  WeightMap weights;
  LinearProgram program;  // the constraints actually generated
  LpCertificate certificate;
  std::size_t rounds = 0;
};

namespace detail {

// Row generation: solve with the constraints found so far, search every pair
// for violated alternatives under the current weights, repeat until none.
// The final program is a subset of the explicit one, and its optimum is
// feasible for the explicit one, so both optima coincide.
inline OptimizeResult optimize_preserving(const WeightedGraph& g, const PathSystem& given,
                                          const Rational& eps, const OptimizeOptions& opt,
                                          LinearProgram base) {
  if (!eps.is_positive()) throw Error("eps must be positive");
  if (g.edge_count() == 0) throw Error("no edges");
  given.validate(g);
  const PathSystem system =
      opt.scope == PairScope::all_pairs ? complete_path_system(g, given) : given;

  struct Pair {
    const PathSystem::Entry* entry;
    Rational g_dist;
  };
  std::vector<Pair> pairs;
  const WeightMap native = WeightMap::native(g);
  for (const auto& [key, entry] : system.entries()) {
    Rational d = require_g_shortest(g, entry.path);
    pairs.push_back({&entry, d});
    if (entry.uniqueness_required || opt.model != TieModel::at_least_one) {
      // Tied alternatives are either forbidden or pinned by equalities up front.
      Budget budget(opt.budget);
      for_each_path(g, native, key.first, key.second, d, PathKind::simple, budget,
                    [&](const Path& p, const Rational&) {
                      if (p == entry.path) return true;
                      if (entry.uniqueness_required)
                        throw Error("designated path " + to_string(entry.path) +
                                    " is not the unique shortest path: tied with " + to_string(p));
                      base.constraints.push_back(path_constraint(g, p, entry.path, Rational(1),
                                                                 Relation::eq, Rational(0),
                                                                 "tied alternative"));
                      return true;
                    });
    }
  }
  const Rational strict_margin = opt.model == TieModel::all ? Rational(0) : eps;

  IncrementalLp solver(base);
  OptimizeResult result{Rational(0), WeightMap::native(g), {}, {}, 0};
  for (;;) {
    ++result.rounds;
    LpCertificate cert = solver.solve();
    if (cert.status != LpStatus::optimal)
      throw Error(std::string("preservation program is ") + to_string(cert.status) +
                  (cert.status == LpStatus::infeasible ? " (eps too large?)" : ""));
    WeightMap w(std::vector<Rational>(cert.assignment.begin(),
                                      cert.assignment.begin() +
                                          static_cast<std::ptrdiff_t>(g.edge_count())));
    Budget budget(opt.budget);
    std::size_t added = 0;
    for (const Pair& pr : pairs) {
      const Path& pi = pr.entry->path;
      const Rational designated = path_weight(g, w, pi);
      struct Cut {
        Path path;
        Rational slack;
        bool tied;
      };
      std::vector<Cut> cuts;
      for_each_path(g, w, pi.source(), pi.target(), designated + strict_margin, PathKind::simple,
                    budget, [&](const Path& p, const Rational& hw) {
                      if (p == pi) return true;
                      bool tied = path_weight(g, p) == pr.g_dist;
                      if (tied && opt.model != TieModel::at_least_one) return true;  // pinned
                      Rational need = designated + (tied ? Rational(0) : strict_margin);
                      if (hw < need) cuts.push_back({p, hw - need, tied});
                      return cuts.size() < 8 * opt.cuts_per_pair;
                    });
      std::stable_sort(cuts.begin(), cuts.end(),
                       [](const Cut& a, const Cut& b) { return a.slack < b.slack; });
      if (cuts.size() > opt.cuts_per_pair) cuts.resize(opt.cuts_per_pair);
      for (const Cut& c : cuts) {
        solver.add_constraint(path_constraint(g, c.path, pi, Rational(1), Relation::ge,
                                              c.tied ? Rational(0) : strict_margin,
                                              c.tied ? "tied alternative" : "alternative"));
        ++added;
      }
    }
    if (added == 0) {
      result.certificate = std::move(cert);
      result.weights = std::move(w);
      break;
    }
  }
  result.program = solver.program();
  result.optimum = result.certificate.optimum;

  // Soundness gate.
  if (opt.scope == PairScope::all_pairs) {
    auto report = check_exact(g, result.weights, opt.model);
    if (!report.pass) throw Error("internal: optimised map fails the exact preservation check");
  } else {
    for (const Pair& pr : pairs) {
      Budget budget(opt.budget);
      const Path& pi = pr.entry->path;
      const Rational designated = path_weight(g, result.weights, pi);
      for_each_path(g, result.weights, pi.source(), pi.target(), designated, PathKind::simple,
                    budget, [&](const Path& p, const Rational&) {
                      if (p != pi && path_weight(g, p) != pr.g_dist)
                        throw Error("internal: optimised map leaves a designated path tied");
                      return true;
                    });
    }
  }
  return result;
}

}  // namespace detail

// Minimum aspect ratio of a map under which every designated path (and, with
// scope all_pairs, a shortest path for every other pair) stays shortest in
// the sense of the tie model, up to the margin eps.
inline OptimizeResult min_aspect_ratio(const WeightedGraph& g, const PathSystem& paths,
                                       const Rational& eps, const OptimizeOptions& opt = {}) {
  LinearProgram base = detail::edge_program(g);
  const std::size_t r = base.add_variable("r", Rational(1));
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    base.constraints.push_back({{{e, Rational(1)}, {r, Rational(-1)}},
                                Relation::le,
                                Rational(0),
                                detail::edge_name(g, e) + " <= r"});
  base.objective = {{{r, Rational(1)}}, Sense::minimize};
  auto res = detail::optimize_preserving(g, paths, eps, opt, std::move(base));
  // The LP optimum r equals the aspect ratio of the optimal map (min weight 1).
  if (aspect_ratio(res.weights) > res.optimum)
    throw Error("internal: optimal map exceeds the certified aspect ratio");
  return res;
}

// Minimises sum cost_e * w_e over preserving maps; costs must be positive.
// Different costs reach different vertices of the preserving polytope.
inline OptimizeResult min_weighted_preserver(const WeightedGraph& g, const PathSystem& paths,
                                             const Rational& eps,
                                             const std::vector<Rational>& costs,
                                             const OptimizeOptions& opt = {}) {
  if (costs.size() != g.edge_count()) throw Error("one cost per edge required");
  LinearProgram base = detail::edge_program(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!costs[e].is_positive()) throw Error("costs must be positive");
    base.objective.terms.push_back({e, costs[e]});
  }
  return detail::optimize_preserving(g, paths, eps, opt, std::move(base));
}

struct GridBound {
  Rational optimum;       // min weight of the last row plus last column
  Rational claimed;       // alpha_H^(L-1)
  bool bound_holds = false;
  LinearProgram program;
  LpCertificate certificate;
};

// Edges of row L-1 and column L-1.
inline std::vector<LinearTerm> grid_last_row_column(const GridConstruction& grid) {
  std::vector<LinearTerm> terms;
  const std::size_t last = grid.layout.side - 1;
  for (EdgeId e = 0; e < grid.graph.edge_count(); ++e) {
    EdgeTag tag = grid.layout.tag(grid.graph.edge(e));
    if (tag.level == last) terms.push_back({e, Rational(1)});
  }
  return terms;
}

// Smallest possible last-row-plus-last-column weight of any H in which each
// designated grid path is the only alpha_H-approximate shortest path.
inline GridBound grid_lower_bound(std::size_t side, const Rational& alpha_g,
                                  const Rational& alpha_h, const Rational& eps) {
  if (alpha_h < Rational(1)) throw Error("alpha_H must be >= 1");
  GridConstruction grid = gen_grid(side, alpha_g);
  GridBound b;
  b.program = build_separation_lp(grid.graph, grid.paths, alpha_h, eps, grid_last_row_column(grid));
  b.certificate = solve_lp(b.program);
  if (b.certificate.status != LpStatus::optimal)
    throw Error(std::string("grid separation program is ") + to_string(b.certificate.status));
  b.optimum = b.certificate.optimum;
  b.claimed = pow(alpha_h, static_cast<unsigned>(side - 1));
  b.bound_holds = b.optimum >= b.claimed;
  return b;
}

}  // namespace sppr
