// sppr: command-line front end.
//
// Exit codes: 0 success/pass, 1 the checked property fails, 2 usage, I/O,
// parse or budget errors.

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sppr/sppr.hpp"

using json = nlohmann::ordered_json;
using namespace sppr;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : Error {
  using Error::Error;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    throw Error("sha256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i)
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

// Tracks files read and written for the run manifest.
struct Context {
  std::map<std::string, std::string> inputs;
  std::map<std::string, std::string> outputs;

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    inputs[path] = sha256_hex(ss.str());
    return ss.str();
  }
  void write(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << bytes)) throw Error("cannot write '" + path + "'");
    outputs[path] = sha256_hex(bytes);
  }
  WeightedGraph graph(const std::string& path) {
    std::istringstream in(read(path));
    try {
      return read_graph(in);
    } catch (const ParseError& e) {
      throw ParseError(e.line(), path + ": " + e.what());
    }
  }
  WeightMap weights(const std::string& path, const WeightedGraph& g) {
    std::istringstream in(read(path));
    return read_weights(in, g);
  }
  PathSystem paths(const std::string& path, const WeightedGraph& g) {
    std::istringstream in(read(path));
    return read_paths(in, g);
  }
};

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError("--" + name + ": " + e.what() + " (expected p/q)");
  }
}

json path_json(const Path& p) { return json(p.vertices); }

json witness_json(const Witness& w) {
  return {{"s", w.s},
          {"t", w.t},
          {"path", path_json(w.path)},
          {"g_weight", w.g_weight.str()},
          {"h_weight", w.h_weight.str()},
          {"g_dist", w.g_dist.str()},
          {"h_dist", w.h_dist.str()},
          {"simple", w.simple},
          {"kind", w.kind}};
}

json report_json(const std::string& check, bool pass, json witnesses, json stats) {
  return {{"check", check},
          {"verdict", pass ? "pass" : "fail"},
          {"witnesses", std::move(witnesses)},
          {"stats", std::move(stats)}};
}

json lemma_json(const LemmaResult& l) {
  json failures = json::array();
  for (const auto& f : l.failures) {
    json j = {{"designated", path_json(f.designated)}, {"reason", f.reason}};
    if (f.alternative) j["alternative"] = path_json(*f.alternative);
    if (f.alternative_weight) j["alternative_weight"] = f.alternative_weight->str();
    if (!f.bound.is_zero()) j["bound"] = f.bound.str();
    failures.push_back(std::move(j));
  }
  return {{"tag", l.tag},
          {"verdict", l.pass ? "pass" : "fail"},
          {"checked", l.checked},
          {"failed", l.failed},
          {"worst_margin", l.worst_margin ? json(l.worst_margin->str()) : json(nullptr)},
          {"note", l.note},
          {"failures", std::move(failures)}};
}

json audit_json(const AuditReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  json lemmas = json::array();
  json witnesses = json::array();
  for (const auto& l : r.lemmas) {
    lemmas.push_back(lemma_json(l));
    for (const auto& f : l.failures) {
      json w = {{"lemma", l.tag}, {"designated", path_json(f.designated)}};
      if (f.alternative) w["alternative"] = path_json(*f.alternative);
      witnesses.push_back(std::move(w));
    }
  }
  return report_json("audit", r.pass(), std::move(witnesses),
                     {{"construction", r.construction}, {"parameters", params}, {"lemmas", lemmas}});
}

void print_audit(const AuditReport& r) {
  std::cout << r.construction;
  for (const auto& [k, v] : r.parameters) std::cout << ' ' << k << '=' << v;
  std::cout << ": " << (r.pass() ? "pass" : "fail") << '\n';
  for (const auto& l : r.lemmas) {
    std::cout << "  " << l.tag << ": " << (l.pass ? "pass" : "fail") << " (" << l.checked
              << " checked, " << l.failed << " failed";
    if (l.worst_margin) std::cout << ", worst margin " << l.worst_margin->str();
    std::cout << ")";
    if (!l.note.empty()) std::cout << " " << l.note;
    std::cout << '\n';
  }
}

TieModel parse_model(const std::string& s) {
  if (s == "at-least-one") return TieModel::at_least_one;
  if (s == "all") return TieModel::all;
  if (s == "both") return TieModel::both;
  throw UsageError("--model must be at-least-one, all or both");
}

std::string model_name(TieModel m) {
  switch (m) {
    case TieModel::at_least_one: return "at-least-one";
    case TieModel::all: return "all";
    case TieModel::both: return "both";
  }
  return "?";
}

ChainMode parse_mode(const std::string& mode, const std::string& alpha, const std::string& delta) {
  std::optional<Rational> d;
  if (!delta.empty()) d = rational_arg("delta", delta);
  if (mode == "exact") return ChainMode::exact(d);
  if (mode == "approx")
    return ChainMode::approx(alpha.empty() ? Rational(2) : rational_arg("alpha", alpha), d);
  throw UsageError("--mode must be exact or approx");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Run a single optimisation sweep point; shared by optimize and report.
struct SweepPoint {
  std::size_t param;
  Rational optimum;
};

Rational sweep_optimum(const std::string& family, std::size_t p, const Rational& eps,
                       const Rational& alpha_g, const Rational& alpha_h) {
  if (family == "dir-chain") {
    auto c = gen_directed_chain(p, ChainMode::exact());
    return min_aspect_ratio(c.graph, c.paths, eps).optimum;
  }
  if (family == "undir-chain") {
    auto c = gen_undirected_chain(p, ChainMode::exact());
    return min_aspect_ratio(c.graph, c.paths, eps).optimum;
  }
  if (family == "grid") return grid_lower_bound(p, alpha_g, alpha_h, eps).optimum;
  throw UsageError("--sweep must be dir-chain, undir-chain or grid");
}

std::string growth_table(const std::string& name, const std::vector<SweepPoint>& points) {
  std::ostringstream out;
  out << name << "\toptimum\tgrowth\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << points[i].param << '\t' << points[i].optimum.str() << '\t';
    if (i == 0) out << "-";
    else out << (points[i].optimum / points[i - 1].optimum).str();
    out << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  const auto started = std::chrono::steady_clock::now();
  const std::time_t wall = std::time(nullptr);
  CLI::App app{"Shortest-path preserving reweighting: generators, checkers, audits, LP bounds"};
  app.set_help_flag("--help", "print help and exit");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "write a run manifest (JSON) to this file");

  Context ctx;
  int exit_code = 0;
  std::function<void()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a construction");
  std::string family, out_graph, out_paths, out_h, mode = "exact", alpha, delta, alpha_g = "2/1";
  std::size_t n = 5, k = 3, side = 3;
  gen->add_option("--family", family, "path-shortcut|dir-chain|undir-chain|grid|fig1")->required();
  gen->add_option("--n", n, "vertices (path-shortcut)");
  gen->add_option("--k", k, "cycles (chains)");
  gen->add_option("--L", side, "grid side");
  gen->add_option("--mode", mode, "exact|approx (chains)");
  gen->add_option("--alpha", alpha, "stretch of the directed approx chain, p/q");
  gen->add_option("--delta", delta, "cross-edge weight of the directed chain, p/q");
  gen->add_option("--alpha-g", alpha_g, "grid alpha_G, p/q");
  gen->add_option("--out", out_graph, "graph file")->required();
  gen->add_option("--paths", out_paths, "designated path system file");
  gen->add_option("--h", out_h, "fig1 only: the reweighted map");
  gen->callback([&] {
    action = [&] {
      WeightedGraph g(true, 0, {});
      PathSystem ps;
      std::optional<WeightMap> h;
      if (family == "path-shortcut") {
        auto c = gen_path_shortcut(n);
        g = c.graph;
        ps = c.paths;
      } else if (family == "dir-chain") {
        auto c = gen_directed_chain(k, parse_mode(mode, alpha, delta));
        g = c.graph;
        ps = c.paths;
      } else if (family == "undir-chain") {
        auto c = gen_undirected_chain(k, parse_mode(mode, "", ""));
        g = c.graph;
        ps = c.paths;
      } else if (family == "grid") {
        auto c = gen_grid(side, rational_arg("alpha-g", alpha_g));
        g = c.graph;
        ps = c.paths;
      } else if (family == "fig1") {
        auto f = fig1_fixture();
        g = f.g;
        h = f.h;
      } else {
        throw UsageError("unknown family '" + family + "'");
      }
      std::ostringstream gs;
      write_graph(gs, g);
      ctx.write(out_graph, gs.str());
      if (!out_paths.empty()) {
        std::ostringstream ss;
        write_paths(ss, ps);
        ctx.write(out_paths, ss.str());
      }
      if (!out_h.empty()) {
        if (!h) throw UsageError("--h is only available for the fig1 family");
        std::ostringstream hs;
        write_weights(hs, g, *h);
        ctx.write(out_h, hs.str());
      }
      std::cout << family << ": " << g.vertex_count() << " vertices, " << g.edge_count()
                << " edges, " << ps.size() << " designated paths, aspect ratio "
                << (g.edge_count() ? aspect_ratio(g).str() : std::string("-")) << '\n';
    };
  });

  // reweight dag
  auto* reweight = app.add_subcommand("reweight", "reweight a graph");
  reweight->require_subcommand(1);
  auto* rdag = reweight->add_subcommand("dag", "price-function reweighting of a DAG");
  std::string in_graph, out_weights, json_out;
  rdag->add_option("--in", in_graph, "graph file")->required();
  rdag->add_option("--out", out_weights, "weight map file")->required();
  rdag->add_option("--json", json_out, "JSON report");
  rdag->callback([&] {
    action = [&] {
      auto g = ctx.graph(in_graph);
      WeightMap h = WeightMap::native(g);
      try {
        h = reweight_dag(g);
      } catch (const CycleError& e) {
        if (!json_out.empty()) {
          json cyc = json::array();
          cyc.push_back({{"cycle", e.cycle()}});
          ctx.write(json_out, dump(report_json("reweight-dag", false, cyc, json::object())));
        }
        std::cout << e.what() << '\n';
        exit_code = 1;
        return;
      }
      std::ostringstream ws;
      write_weights(ws, g, h);
      ctx.write(out_weights, ws.str());
      Rational bound(static_cast<long long>(g.vertex_count() + 1));
      std::cout << "reweighted " << g.edge_count() << " edges; aspect ratio "
                << aspect_ratio(g).str() << " -> " << aspect_ratio(h).str() << " (bound "
                << bound.str() << ")\n";
      if (!json_out.empty())
        ctx.write(json_out, dump(report_json("reweight-dag", aspect_ratio(h) <= bound, json::array(),
                                             {{"original_aspect_ratio", aspect_ratio(g).str()},
                                              {"aspect_ratio", aspect_ratio(h).str()},
                                              {"bound", bound.str()}})));
    };
  });

  // check exact|stretch|two-sided
  auto* check = app.add_subcommand("check", "check a weight map against a graph");
  check->require_subcommand(1);
  std::string g_file, h_file, c_alpha, c_alpha_h, c_alpha_g, model = "at-least-one";
  std::size_t budget = Budget::default_limit;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--g", g_file, "graph file")->required();
    sub->add_option("--h", h_file, "weight map file")->required();
    sub->add_option("--json", json_out, "JSON report");
  };
  auto finish_check = [&](const CheckReport& r, const WeightedGraph& g, const WeightMap& h,
                          json stats) {
    stats["pairs_checked"] = r.pairs_checked;
    stats["aspect_ratio"] = aspect_ratio(g, h).str();
    stats["original_aspect_ratio"] = aspect_ratio(g).str();
    json wits = json::array();
    for (const auto& w : r.witnesses) wits.push_back(witness_json(w));
    std::cout << r.check << ": " << (r.pass ? "pass" : "fail") << " (" << r.pairs_checked
              << " pairs), aspect ratio " << aspect_ratio(g, h).str() << '\n';
    for (const auto& w : r.witnesses)
      std::cout << "  witness " << w.s << "->" << w.t << " " << to_string(w.path)
                << " w_G=" << w.g_weight.str() << " w_H=" << w.h_weight.str()
                << " d_G=" << w.g_dist.str() << " d_H=" << w.h_dist.str()
                << (w.simple ? "" : " non-simple") << " [" << w.kind << "]\n";
    if (!json_out.empty()) ctx.write(json_out, dump(report_json(r.check, r.pass, wits, stats)));
    exit_code = r.pass ? 0 : 1;
  };
  auto* cexact = check->add_subcommand("exact", "every H-shortest path stays G-shortest");
  add_common(cexact);
  cexact->add_option("--model", model, "at-least-one|all|both");
  cexact->callback([&] {
    action = [&] {
      TieModel m = parse_model(model);
      auto g = ctx.graph(g_file);
      auto h = ctx.weights(h_file, g);
      finish_check(check_exact(g, h, m), g, h, {{"model", model_name(m)}});
    };
  });
  auto* cstretch = check->add_subcommand("stretch", "every H-shortest path is alpha-approximate in G");
  add_common(cstretch);
  cstretch->add_option("--alpha", c_alpha, "stretch, p/q")->required();
  cstretch->callback([&] {
    action = [&] {
      Rational a = rational_arg("alpha", c_alpha);
      auto g = ctx.graph(g_file);
      auto h = ctx.weights(h_file, g);
      finish_check(check_alpha(g, h, a), g, h, {{"alpha", a.str()}});
    };
  });
  auto* ctwo = check->add_subcommand("two-sided", "alpha_H-approximate in H implies alpha_G-approximate in G");
  add_common(ctwo);
  ctwo->add_option("--alpha-h", c_alpha_h, "p/q")->required();
  ctwo->add_option("--alpha-g", c_alpha_g, "p/q")->required();
  ctwo->add_option("--budget", budget, "walk prefix budget");
  ctwo->callback([&] {
    action = [&] {
      StretchParams p{rational_arg("alpha-h", c_alpha_h), rational_arg("alpha-g", c_alpha_g)};
      auto g = ctx.graph(g_file);
      auto h = ctx.weights(h_file, g);
      Budget b(budget);
      auto r = check_two_sided(g, h, p, b);
      finish_check(r, g, h,
                   {{"alpha_h", p.alpha_h.str()},
                    {"alpha_g", p.alpha_g.str()},
                    {"walks_enumerated", r.walks_enumerated}});
    };
  });

  // audit
  auto* audit = app.add_subcommand("audit", "re-check a construction's claims by enumeration");
  std::string a_alpha, a_test_alpha;
  audit->add_option("--family", family, "dir-chain|undir-chain|grid")->required();
  audit->add_option("--k", k, "cycles (chains)");
  audit->add_option("--L", side, "grid side");
  audit->add_option("--mode", mode, "exact|approx (chains)");
  audit->add_option("--alpha", a_alpha,
                    "dir-chain: approx stretch; undir-chain: tested stretch; grid: alpha_G");
  audit->add_option("--test-alpha", a_test_alpha, "test at this stretch instead");
  audit->add_option("--delta", delta, "directed chain cross-edge weight, p/q");
  audit->add_option("--budget", budget, "walk prefix budget");
  audit->add_option("--json", json_out, "JSON report");
  audit->callback([&] {
    action = [&] {
      std::optional<Rational> test;
      if (!a_test_alpha.empty()) test = rational_arg("test-alpha", a_test_alpha);
      Budget b(budget);
      AuditReport r;
      if (family == "dir-chain") {
        r = audit_directed_chain(k, parse_mode(mode, a_alpha, delta), test, b);
      } else if (family == "undir-chain") {
        if (!test && !a_alpha.empty()) test = rational_arg("alpha", a_alpha);
        r = audit_undirected_chain(k, parse_mode(mode, "", ""), test, b);
      } else if (family == "grid") {
        r = audit_grid(side, a_alpha.empty() ? Rational(2) : rational_arg("alpha", a_alpha), test, b);
      } else {
        throw UsageError("unknown family '" + family + "'");
      }
      print_audit(r);
      if (!json_out.empty()) ctx.write(json_out, dump(audit_json(r)));
      exit_code = r.pass() ? 0 : 1;
    };
  });

  // optimize
  auto* optimize = app.add_subcommand("optimize", "exact LP bounds on aspect ratio");
  optimize->require_subcommand(1);
  auto* omin = optimize->add_subcommand("min-aspect", "minimum aspect ratio of a preserving map");
  std::string p_file, eps = "1/1000000000", scope = "all-pairs", label;
  omin->add_option("--g", g_file, "graph file")->required();
  omin->add_option("--paths", p_file, "designated path system file");
  omin->add_option("--eps", eps, "strictness margin, p/q");
  omin->add_option("--model", model, "at-least-one|all|both");
  omin->add_option("--scope", scope, "all-pairs|designated");
  omin->add_option("--out", out_weights, "optimal weight map file");
  omin->add_option("--json", json_out, "JSON certificate");
  omin->add_option("--label", label, "sweep label NAME=VALUE recorded for report");
  omin->callback([&] {
    action = [&] {
      OptimizeOptions opt;
      opt.model = parse_model(model);
      if (scope == "all-pairs") opt.scope = PairScope::all_pairs;
      else if (scope == "designated") opt.scope = PairScope::designated;
      else throw UsageError("--scope must be all-pairs or designated");
      Rational e = rational_arg("eps", eps);
      auto g = ctx.graph(g_file);
      PathSystem ps = p_file.empty() ? PathSystem{} : ctx.paths(p_file, g);
      auto r = min_aspect_ratio(g, ps, e, opt);
      std::cout << "min aspect ratio " << r.optimum.str() << " (eps " << e.str() << ", "
                << r.program.constraints.size() << " rows, " << r.rounds << " rounds)\n";
      if (!out_weights.empty()) {
        std::ostringstream ws;
        write_weights(ws, g, r.weights);
        ctx.write(out_weights, ws.str());
      }
      if (!json_out.empty()) {
        json assignment = json::object();
        for (std::size_t i = 0; i < r.program.variables.size(); ++i)
          assignment[r.program.variables[i].name] = r.certificate.assignment[i].str();
        json stats = {{"optimum", r.optimum.str()},
                      {"eps", e.str()},
                      {"model", model_name(opt.model)},
                      {"scope", scope},
                      {"status", to_string(r.certificate.status)},
                      {"rows", r.program.constraints.size()},
                      {"rounds", r.rounds},
                      {"pivots", r.certificate.pivots},
                      {"assignment", assignment}};
        if (!label.empty()) {
          auto eq = label.find('=');
          if (eq == std::string::npos) throw UsageError("--label must be NAME=VALUE");
          stats["label"] = {{"name", label.substr(0, eq)}, {"value", label.substr(eq + 1)}};
        }
        ctx.write(json_out, dump(report_json("min-aspect", true, json::array(), stats)));
      }
    };
  });
  auto* ogrid = optimize->add_subcommand("grid-lb", "grid last row + column lower bound");
  std::string o_alpha_h;
  ogrid->add_option("--L", side, "grid side")->required();
  ogrid->add_option("--alpha-g", alpha_g, "p/q");
  ogrid->add_option("--alpha-h", o_alpha_h, "p/q")->required();
  ogrid->add_option("--eps", eps, "strictness margin, p/q");
  ogrid->add_option("--json", json_out, "JSON certificate");
  ogrid->callback([&] {
    action = [&] {
      auto b = grid_lower_bound(side, rational_arg("alpha-g", alpha_g),
                                rational_arg("alpha-h", o_alpha_h), rational_arg("eps", eps));
      std::cout << "grid L=" << side << " last row+column >= " << b.optimum.str()
                << " (claimed bound " << b.claimed.str() << ": "
                << (b.bound_holds ? "holds" : "violated") << ")\n";
      if (!json_out.empty())
        ctx.write(json_out, dump(report_json("grid-lb", b.bound_holds, json::array(),
                                             {{"optimum", b.optimum.str()},
                                              {"claimed", b.claimed.str()},
                                              {"L", side},
                                              {"rows", b.program.constraints.size()},
                                              {"label", {{"name", "L"}, {"value", std::to_string(side)}}}})));
      exit_code = b.bound_holds ? 0 : 1;
    };
  });

  // report
  auto* report = app.add_subcommand("report", "growth table over a sweep");
  std::vector<std::string> runs;
  std::string sweep, r_alpha_h = "2/1";
  std::size_t from = 2, to = 4;
  report->add_option("--runs", runs, "JSON files from optimize --json");
  report->add_option("--sweep", sweep, "dir-chain|undir-chain|grid: run the sweep directly");
  report->add_option("--from", from, "first parameter");
  report->add_option("--to", to, "last parameter");
  report->add_option("--eps", eps, "strictness margin, p/q");
  report->add_option("--alpha-g", alpha_g, "grid alpha_G, p/q");
  report->add_option("--alpha-h", r_alpha_h, "grid alpha_H, p/q");
  report->add_option("--out", out_graph, "write the table to a file");
  report->callback([&] {
    action = [&] {
      std::vector<SweepPoint> points;
      std::string name;
      if (!sweep.empty() == !runs.empty()) throw UsageError("give exactly one of --runs or --sweep");
      if (!sweep.empty()) {
        if (from > to) throw UsageError("--from must not exceed --to");
        name = sweep == "grid" ? "L" : "k";
        Rational e = rational_arg("eps", eps);
        for (std::size_t p = from; p <= to; ++p)
          points.push_back({p, sweep_optimum(sweep, p, e, rational_arg("alpha-g", alpha_g),
                                             rational_arg("alpha-h", r_alpha_h))});
      } else {
        std::string check_kind;
        for (const auto& file : runs) {
          json j;
          try {
            j = json::parse(ctx.read(file));
          } catch (const json::exception& e) {
            throw UsageError(file + ": " + e.what());
          }
          auto kind = j.value("check", "");
          const auto& stats = j["stats"];
          if (kind != "min-aspect" && kind != "grid-lb")
            throw UsageError(file + ": not an optimize report");
          if (!stats.contains("label")) throw UsageError(file + ": run has no --label");
          std::string lname = stats["label"]["name"];
          if ((!check_kind.empty() && kind != check_kind) || (!name.empty() && lname != name))
            throw UsageError(file + ": mixed incompatible runs");
          check_kind = kind;
          name = lname;
          std::size_t value = std::stoul(stats["label"]["value"].get<std::string>());
          points.push_back({value, Rational::parse(stats["optimum"].get<std::string>())});
        }
        std::stable_sort(points.begin(), points.end(),
                         [](const SweepPoint& a, const SweepPoint& b) { return a.param < b.param; });
      }
      std::string table = growth_table(name, points);
      std::cout << table;
      if (!out_graph.empty()) ctx.write(out_graph, table);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  try {
    action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (!manifest_path.empty()) {
    json params = json::object();
    std::function<void(CLI::App*, const std::string&)> collect = [&](CLI::App* sub,
                                                                     const std::string& prefix) {
      for (const CLI::Option* opt : sub->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--manifest") continue;
        std::string joined;
        for (const auto& r : opt->results()) joined += (joined.empty() ? "" : " ") + r;
        params[prefix + opt->get_name()] = joined;
      }
      for (CLI::App* child : sub->get_subcommands()) collect(child, prefix + child->get_name() + " ");
    };
    collect(&app, "");
    json cmd = json::array();
    for (int i = 0; i < argc; ++i) cmd.push_back(argv[i]);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&wall));
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    json manifest = {{"command_line", cmd},
                     {"parameters", params},
                     {"inputs", ctx.inputs},
                     {"outputs", ctx.outputs},
                     {"exit_code", exit_code},
                     {"started_at", stamp},
                     {"wall_clock_seconds", seconds},
                     {"artifact_version", kVersion}};
    std::ofstream out(manifest_path);
    if (!out || !(out << manifest.dump(2) << '\n')) {
      std::cerr << "error: cannot write manifest '" << manifest_path << "'\n";
      return 2;
    }
  }
  return exit_code;
}
