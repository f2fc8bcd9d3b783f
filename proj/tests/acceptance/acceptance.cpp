// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Criteria that have a runtime budget fail when they exceed it.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sppr/sppr.hpp"
#include "support/oracle.hpp"

using namespace sppr;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    if (!ok) pass = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

const Rational eps9(1, 1000000000);

Rational power_of_two(std::size_t e) { return pow(Rational(2), static_cast<unsigned>(e)); }

Outcome fig1() {
  Outcome o;
  auto f = fig1_fixture();
  o.require(aspect_ratio(f.g) == Rational(100), "aspect_ratio(G) = " + aspect_ratio(f.g).str());
  o.require(aspect_ratio(f.g, f.h) == Rational(4), "aspect_ratio(H) = " + aspect_ratio(f.g, f.h).str());
  auto r = check_exact(f.g, f.h);
  o.require(r.pass, "check_exact failed");
  if (o.pass) o.detail = "G 100/1, H 4/1, check_exact pass";
  return o;
}

Outcome dag_upper_bound() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> size(2, 12);
  std::uniform_real_distribution<double> dens(0.25, 0.8);
  struct Sample {
    WeightedGraph g;
    WeightMap h;
  };
  std::vector<Sample> samples;
  Rational widest(1);
  int oracle_checks = 0;
  for (int trial = 0; trial < 200 && o.pass; ++trial) {
    std::size_t n = size(rng);
    double density = n > 9 ? std::min(dens(rng), 0.5) : dens(rng);
    WeightedGraph base = oracle::random_dag(rng, n, density, 1000000, trial % 3 == 0 ? 7 : 1);
    // Stretch the weight range to the full 10^6 on a third of the graphs.
    std::vector<Edge> edges = base.edges();
    if (trial % 3 == 1 && edges.size() >= 2) {
      edges.front().weight = Rational(1);
      edges.back().weight = Rational(1000000);
    }
    WeightedGraph g(true, n, std::move(edges));
    widest = max(widest, aspect_ratio(g));
    WeightMap h = reweight_dag(g);
    std::string tag = "dag #" + std::to_string(trial);
    o.require(aspect_ratio(g, h) <= Rational(static_cast<long long>(n + 1)),
              tag + ": aspect ratio " + aspect_ratio(g, h).str() + " > n+1");
    for (TieModel m : {TieModel::at_least_one, TieModel::all, TieModel::both}) {
      bool lib = check_exact(g, h, m).pass;
      bool ref = oracle::exact(g, h.values(), m);
      ++oracle_checks;
      o.require(lib && ref, tag + ": check_exact " + (lib ? "pass" : "fail") + ", oracle " +
                                (ref ? "pass" : "fail"));
    }
    samples.push_back({std::move(g), std::move(h)});
  }
  // Same-endpoint pairs drawn uniformly over (graph, s, t, P, P').
  std::map<std::tuple<std::size_t, Vertex, Vertex>, std::vector<oracle::Route>> cache;
  std::uniform_int_distribution<std::size_t> pick_graph(0, samples.size() - 1);
  int pairs = 0, attempts = 0;
  while (o.pass && pairs < 10000 && attempts < 1000000) {
    ++attempts;
    std::size_t gi = pick_graph(rng);
    const auto& s = samples[gi];
    std::uniform_int_distribution<Vertex> pick_v(0, s.g.vertex_count() - 1);
    Vertex a = pick_v(rng), b = pick_v(rng);
    if (a == b) continue;
    auto key = std::make_tuple(gi, a, b);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, oracle::simple_paths(s.g, oracle::native(s.g), a, b)).first;
    const auto& routes = it->second;
    if (routes.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick_r(0, routes.size() - 1);
    Path p{routes[pick_r(rng)].vertices}, q{routes[pick_r(rng)].vertices};
    auto id = price_identity(s.g, s.h, p, q);
    o.require(id.original_difference == id.reweighted_difference,
              "identity fails for " + to_string(p) + " vs " + to_string(q));
    ++pairs;
  }
  o.require(pairs == 10000, "only " + std::to_string(pairs) + " path pairs drawn");
  if (o.pass)
    o.detail = "200 DAGs (widest input aspect " + widest.str() + "), " +
               std::to_string(oracle_checks) + " oracle checks, " + std::to_string(pairs) +
               " identity pairs";
  return o;
}

Outcome directed_chain() {
  Outcome o;
  std::vector<Rational> optima;
  for (std::size_t k = 2; k <= 6; ++k) {
    auto rep = audit_directed_chain(k, ChainMode::exact());
    o.require(rep.pass(), "audit fails at k=" + std::to_string(k));
    auto c = gen_directed_chain(k, ChainMode::exact());
    auto res = min_aspect_ratio(c.graph, c.paths, eps9);
    o.require(res.optimum >= power_of_two(k - 1),
              "k=" + std::to_string(k) + ": optimum " + res.optimum.str() + " < 2^(k-1)");
    o.require(verify_optimality(res.program, res.certificate), "certificate rejected at k=" + std::to_string(k));
    if (!optima.empty())
      o.require(res.optimum >= Rational(2) * optima.back(),
                "k=" + std::to_string(k) + ": optimum less than double the previous");
    optima.push_back(res.optimum);
  }
  if (o.pass) {
    o.detail = "optima";
    for (const auto& r : optima) o.detail += " " + r.str();
  }
  return o;
}

Outcome directed_approx_chain() {
  Outcome o;
  int audits = 0;
  for (Rational alpha : {Rational(2), Rational(10)})
    for (std::size_t k = 2; k <= 5; ++k) {
      auto rep = audit_directed_chain(k, ChainMode::approx(alpha));
      ++audits;
      o.require(rep.pass(), "audit fails at alpha=" + alpha.str() + " k=" + std::to_string(k));
    }
  if (o.pass) o.detail = std::to_string(audits) + " audits pass (alpha 2/1, 10/1; k 2..5)";
  return o;
}

Outcome undirected_chain() {
  Outcome o;
  for (std::size_t k = 2; k <= 5; ++k)
    o.require(audit_undirected_chain(k, ChainMode::exact()).pass(),
              "exact audit fails at k=" + std::to_string(k));
  for (std::size_t k = 2; k <= 4; ++k)
    o.require(audit_undirected_chain(k, ChainMode::approx(), Rational(13, 12)).pass(),
              "approx audit fails at k=" + std::to_string(k));
  std::string optima;
  for (std::size_t k = 2; k <= 5; ++k) {
    auto c = gen_undirected_chain(k, ChainMode::exact());
    auto res = min_aspect_ratio(c.graph, c.paths, eps9);
    o.require(res.optimum >= power_of_two(k - 1),
              "k=" + std::to_string(k) + ": optimum " + res.optimum.str() + " < 2^(k-1)");
    optima += " " + res.optimum.str();
  }
  if (o.pass) o.detail = "audits pass; optima" + optima;
  return o;
}

Outcome grid() {
  Outcome o;
  for (std::size_t L = 2; L <= 4; ++L)
    o.require(audit_grid(L, Rational(2)).pass(), "audit fails at L=" + std::to_string(L));
  std::string bounds;
  for (std::size_t L = 2; L <= 3; ++L) {
    auto b = grid_lower_bound(L, Rational(2), Rational(2), eps9);
    o.require(b.optimum >= power_of_two(L - 1),
              "L=" + std::to_string(L) + ": bound " + b.optimum.str() + " < 2^(L-1)");
    if (L == 2) o.require(b.optimum >= Rational(4), "L=2: bound " + b.optimum.str() + " < 4");
    o.require(verify_optimality(b.program, b.certificate), "certificate rejected at L=" + std::to_string(L));
    bounds += " " + b.optimum.str();
  }
  if (o.pass) o.detail = "audits pass; bounds" + bounds;
  return o;
}

// Library verdicts against the brute-force oracle on one (graph, map).
void cross_validate(Outcome& o, const std::string& tag, const WeightedGraph& g, const WeightMap& h,
                    int& compared, int& failing) {
  for (TieModel m : {TieModel::at_least_one, TieModel::all, TieModel::both}) {
    bool lib = check_exact(g, h, m).pass, ref = oracle::exact(g, h.values(), m);
    o.require(lib == ref, tag + ": check_exact disagrees with oracle");
    ++compared;
    failing += !ref;
  }
  for (Rational a : {Rational(1), Rational(11, 10), Rational(3, 2), Rational(2), Rational(5)}) {
    bool lib = check_alpha(g, h, a).pass, ref = oracle::alpha(g, h.values(), a);
    o.require(lib == ref, tag + ": check_alpha(" + a.str() + ") disagrees with oracle");
    failing += !ref;
    bool two = check_two_sided(g, h, StretchParams{Rational(1), a}).pass;
    o.require(two == lib, tag + ": check_two_sided(1, " + a.str() + ") disagrees with check_alpha");
    compared += 2;
  }
}

Outcome checker_cross_validation() {
  Outcome o;
  std::mt19937_64 rng(77);
  int compared = 0, failing = 0, graphs = 0;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(std::string(SPPR_TEST_DATA) + "/corpus"))
    if (entry.path().extension() == ".graph") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  o.require(!files.empty(), "corpus is empty");
  for (const auto& file : files) {
    std::ifstream in(file);
    WeightedGraph g = read_graph(in);
    if (g.vertex_count() > 8) continue;
    ++graphs;
    std::vector<WeightMap> maps{WeightMap::native(g), WeightMap(std::vector<Rational>(g.edge_count(), Rational(1)))};
    for (int i = 0; i < 6; ++i) maps.push_back(oracle::random_map(rng, g, 6, i % 2 ? 3 : 1));
    if (g.directed()) try {
        maps.push_back(reweight_dag(g));
      } catch (const CycleError&) {
      }
    for (std::size_t i = 0; i < maps.size(); ++i)
      cross_validate(o, file.filename().string() + " map " + std::to_string(i), g, maps[i], compared, failing);
  }
  std::uniform_int_distribution<std::size_t> size(2, 7);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_graph(rng, size(rng), 0.5, trial % 2 == 0, 8, 2);
    ++graphs;
    // Small integer maps make ties, and so both verdicts, common.
    cross_validate(o, "random #" + std::to_string(trial), g, oracle::random_map(rng, g, 3, 1), compared, failing);
    cross_validate(o, "random #" + std::to_string(trial) + " native", g, WeightMap::native(g), compared, failing);
  }
  if (o.pass)
    o.detail = std::to_string(graphs) + " graphs (" + std::to_string(files.size()) + " corpus), " +
               std::to_string(compared) + " verdicts agree (" + std::to_string(failing) +
               " of them failing checks)";
  return o;
}

// Tie-free: every pair has at most one shortest path under w.
bool tie_free(const WeightedGraph& g, const std::vector<Rational>& w) {
  for (Vertex s = 0; s < g.vertex_count(); ++s)
    for (Vertex t = 0; t < g.vertex_count(); ++t) {
      if (s == t) continue;
      auto routes = oracle::simple_paths(g, w, s, t);
      if (routes.empty()) continue;
      Rational best = routes.front().weight;
      for (const auto& r : routes) best = min(best, r.weight);
      int count = 0;
      for (const auto& r : routes) count += r.weight == best;
      if (count > 1) return false;
    }
  return true;
}

Outcome reduction() {
  Outcome o;
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::size_t> size(2, 7);
  int preserved = 0, model1 = 0, random_passes = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_graph(rng, size(rng), 0.6, false, 1000, 7);
    auto d = undirected_to_directed(g);
    const std::string tag = "graph #" + std::to_string(trial);

    // A price function on the directed image with reduced weights kept positive.
    Rational lightest = d.edge(0).weight;
    for (const auto& e : d.edges()) lightest = min(lightest, e.weight);
    std::vector<Rational> phi;
    std::uniform_int_distribution<int> frac(0, 99);
    for (Vertex v = 0; v < g.vertex_count(); ++v) phi.push_back(lightest * Rational(frac(rng), 200));
    std::vector<Rational> priced;
    for (const auto& e : d.edges()) priced.push_back(e.weight + phi[e.tail] - phi[e.head]);

    std::vector<WeightMap> maps{WeightMap(priced), oracle::random_map(rng, d, 1000, 7),
                                oracle::random_map(rng, d, 4, 1)};
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const WeightMap& wd = maps[i];
      WeightMap wu = recombine(g, d, wd);
      o.require(aspect_ratio(wu) <= aspect_ratio(wd), tag + ": recombined aspect ratio grew");
      if (check_exact(d, wd, TieModel::both).pass) {
        if (i > 0) ++random_passes;
        ++preserved;
        o.require(check_exact(g, wu, TieModel::both).pass,
                  tag + " map " + std::to_string(i) + ": verdict lost under model both");
        if (tie_free(g, oracle::native(g)) && check_exact(d, wd, TieModel::at_least_one).pass) {
          ++model1;
          o.require(check_exact(g, wu, TieModel::at_least_one).pass,
                    tag + " map " + std::to_string(i) + ": verdict lost under at-least-one");
        }
      }
    }
    o.require(check_exact(d, maps[0], TieModel::both).pass, tag + ": price map fails on the directed image");
  }
  if (o.pass)
    o.detail = std::to_string(preserved) + " preserving directed maps carried over (" +
               std::to_string(random_passes) + " random, " + std::to_string(model1) +
               " also checked under at-least-one); aspect ratio never grew";
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "fig1 fixture", 1, fig1},
      {2, "dag reweighting bound", 60, dag_upper_bound},
      {3, "directed chain", 120, directed_chain},
      {4, "directed approximate chain", 120, directed_approx_chain},
      {5, "undirected chain", 300, undirected_chain},
      {6, "grid", 300, grid},
      {7, "checker cross-validation", 120, checker_cross_validation},
      {8, "undirected reduction", 30, reduction},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && seconds > c.budget_seconds) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
    }
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " ["
              << time.str() << " s] " << o.detail << std::endl;
    failed += !o.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
