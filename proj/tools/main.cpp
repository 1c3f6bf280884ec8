#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgp/admissibility.hpp"
#include "dgp/congruence.hpp"
#include "dgp/dodgson.hpp"
#include "dgp/error.hpp"
#include "dgp/field.hpp"
#include "dgp/graph_gen.hpp"
#include "dgp/graph_io.hpp"
#include "dgp/report.hpp"
#include "dgp/suite.hpp"

using namespace dgp;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct Config {
  std::vector<std::string> graphs;
  std::string graph_file;
  std::string q_list;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool no_timing = false;
  int vmax = 10;
  int vmin = 4;
  int limit = 10;
  std::string fourface;
  std::string dodgson;
  bool check = false;
  int random = 0;
  int random_edges = 8;
  std::uint64_t max_specs = 0;
  std::uint64_t sample = 0;
  std::uint64_t cross_check = 0;
};

std::vector<int> int_list(const std::string& text, char sep = ',') {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw InputError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::uint32_t> q_values(const Config& c, std::vector<std::uint32_t> fallback) {
  if (c.q_list.empty()) return fallback;
  std::vector<std::uint32_t> qs;
  for (int q : int_list(c.q_list)) {
    std::uint32_t p = 0;
    int k = 0;
    if (q < 2 || q > 65536 || !prime_power(static_cast<std::uint64_t>(q), p, k))
      throw InputError("q = " + std::to_string(q) + " is not a prime power <= 65536");
    qs.push_back(static_cast<std::uint32_t>(q));
  }
  return qs;
}

std::pair<std::string, MultiGraph> resolve(const std::string& arg) {
  if (std::filesystem::exists(arg)) return {arg, load_graph_file(arg)};
  if (auto g = named_graph(arg)) return {arg, *g};
  throw InputError("no graph file or named graph '" + arg + "'");
}

std::vector<std::pair<std::string, MultiGraph>> graphs_of(const Config& c) {
  std::vector<std::pair<std::string, MultiGraph>> out;
  if (!c.graph_file.empty()) out.push_back({c.graph_file, load_graph_file(c.graph_file)});
  for (const auto& a : c.graphs) out.push_back(resolve(a));
  for (const auto& [name, g] : out)
    if (g.edge_count() == 0) throw InputError(name + ": the edge list is empty");
  return out;
}

void print(const Config& c, const json& j) { std::cout << j.dump(c.format == "json" ? 2 : -1) << "\n"; }

int cmd_poly(const Config& c) {
  const auto graphs = graphs_of(c);
  if (graphs.empty()) throw InputError("poly needs a graph");
  bool ok = true;
  json all = json::array();
  for (const auto& [name, g] : graphs) {
    if (!is_connected(g)) std::cerr << "warning: " << name << " is disconnected; its polynomials are 0\n";
    json j = {{"graph", name}, {"psi", psi(g).to_text()}, {"phi", phi(g).to_text()}};
    if (!c.dodgson.empty()) {
      std::vector<std::string> parts;
      std::stringstream ss(c.dodgson);
      std::string part;
      while (std::getline(ss, part, ';')) parts.push_back(part);
      EdgeSet i, jj, k;
      if (parts.size() == 1) {
        const auto v = int_list(parts[0]);
        if (v.size() != 2) throw InputError("--dodgson expects 'i,j' or 'I;J;K'");
        i = EdgeSet{v[0]};
        jj = EdgeSet{v[1]};
      } else if (parts.size() == 2 || parts.size() == 3) {
        i = EdgeSet(int_list(parts[0]));
        jj = EdgeSet(int_list(parts[1]));
        if (parts.size() == 3) k = EdgeSet(int_list(parts[2]));
      } else {
        throw InputError("--dodgson expects 'i,j' or 'I;J;K'");
      }
      j["dodgson"] = dual_dodgson(g, i, jj, k).to_text();
    }
    if (c.check) {
      const bool same = phi(g, PhiBackend::tree_sum) == phi(g, PhiBackend::determinant);
      j["check"] = same;
      ok = ok && same;
    }
    all.push_back(j);
  }
  if (c.format == "text") {
    for (const auto& j : all) {
      if (graphs.size() > 1) std::cout << "graph: " << j["graph"].get<std::string>() << "\n";
      std::cout << "psi: " << j["psi"].get<std::string>() << "\n";
      std::cout << "phi: " << j["phi"].get<std::string>() << "\n";
      if (j.contains("dodgson")) std::cout << "dodgson: " << j["dodgson"].get<std::string>() << "\n";
      if (j.contains("check")) std::cout << "check: " << (j["check"].get<bool>() ? "ok" : "MISMATCH") << "\n";
    }
  } else if (c.format == "csv") {
    std::cout << "graph,psi,phi\n";
    for (const auto& j : all)
      std::cout << j["graph"].get<std::string>() << ',' << j["psi"].get<std::string>() << ','
                << j["phi"].get<std::string>() << "\n";
  } else {
    print(c, all.size() == 1 ? all[0] : all);
  }
  return ok ? kOk : kFailed;
}

int cmd_c2(const Config& c) {
  const auto graphs = graphs_of(c);
  if (graphs.empty()) throw InputError("c2 needs a graph");
  const auto qs = q_values(c, {2, 3, 5});
  std::vector<int> face;
  if (!c.fourface.empty()) {
    face = int_list(c.fourface);
    if (face.size() != 4) throw InputError("--fourface expects four edge ids");
  }
  json rows = json::array();
  bool ok = true;
  for (const auto& [name, g] : graphs) {
    if (!is_connected(g) || loop_number(g) < 2) throw PreconditionError(name + ": c2 needs a connected graph with h >= 2");
    for (std::uint32_t q : qs) {
      PointCounter counter(q, c.budget);
      const std::uint32_t cp = c2_parametric(counter, g), cd = c2_dual(counter, g);
      json row = {{"graph", name}, {"q", q}, {"c2_parametric", cp}, {"c2_dual", cd}, {"equal", cp == cd}};
      if (!face.empty()) {
        const std::uint32_t f = c2_dual_fourface(counter, g, {face[0], face[1], face[2], face[3]});
        row["c2_fourface"] = f;
        row["fourface_equal"] = f == cd;
        ok = ok && f == cd;
      }
      rows.push_back(row);
    }
  }
  if (c.format == "text") {
    std::cout << "graph q c2_parametric c2_dual equal" << (face.empty() ? "" : " c2_fourface") << "\n";
    for (const auto& r : rows) {
      std::cout << r["graph"].get<std::string>() << ' ' << r["q"] << ' ' << r["c2_parametric"] << ' ' << r["c2_dual"]
                << ' ' << (r["equal"].get<bool>() ? "true" : "false");
      if (r.contains("c2_fourface")) std::cout << ' ' << r["c2_fourface"];
      std::cout << "\n";
    }
  } else if (c.format == "csv") {
    std::cout << "graph,q,c2_parametric,c2_dual,equal" << (face.empty() ? "" : ",c2_fourface") << "\n";
    for (const auto& r : rows) {
      std::cout << r["graph"].get<std::string>() << ',' << r["q"] << ',' << r["c2_parametric"] << ',' << r["c2_dual"]
                << ',' << (r["equal"].get<bool>() ? 1 : 0);
      if (r.contains("c2_fourface")) std::cout << ',' << r["c2_fourface"];
      std::cout << "\n";
    }
  } else {
    print(c, rows);
  }
  return ok ? kOk : kFailed;
}

int cmd_verify(const Config& c) {
  auto graphs = graphs_of(c);
  if (c.random > 0) {
    Rng rng(c.seed);
    RandomGraphOptions o;
    o.min_edges = o.max_edges = c.random_edges;
    o.max_vertices = std::max(2, c.random_edges);
    for (int i = 0; i < c.random; ++i) graphs.push_back({"random" + std::to_string(i), random_connected(rng, o)});
  }
  if (graphs.empty()) throw InputError("verify needs a graph or --random");
  SuiteOptions opt;
  opt.qs = q_values(c, {2, 3});
  opt.seed = c.seed;
  opt.budget = c.budget;
  opt.timing = !c.no_timing;
  opt.cross_check = c.cross_check;
  SuiteResult res;
  for (const auto& [name, g] : graphs) run_suite(g, name, opt, res);
  json summary = {{"passed", res.passed}, {"failed", res.failed}, {"skipped", res.skipped}};
  if (c.cross_check) summary["cross_checked"] = res.stats.cross_checked;
  if (c.format == "json") {
    print(c, {{"results", res.records}, {"summary", summary}});
  } else if (c.format == "csv") {
    std::cout << "statement,graph,q,pass,skipped\n";
    for (const auto& r : res.records)
      std::cout << r["statement"].get<std::string>() << ',' << r["graph"].get<std::string>() << ','
                << (r.contains("q") ? r["q"].dump() : "") << ',' << (r["pass"].get<bool>() ? 1 : 0) << ','
                << (r["skipped"].get<bool>() ? 1 : 0) << "\n";
  } else {
    for (const auto& r : res.records) {
      const char* status = r["skipped"].get<bool>() ? "skipped" : r["pass"].get<bool>() ? "pass" : "FAIL";
      std::cout << r["graph"].get<std::string>() << ' ' << r["statement"].get<std::string>();
      if (r.contains("q")) std::cout << " q=" << r["q"];
      std::cout << ' ' << status;
      if (r.contains("detail") && !r["pass"].get<bool>()) std::cout << " (" << r["detail"].get<std::string>() << ")";
      std::cout << "\n";
    }
    std::cout << "passed " << res.passed << ", failed " << res.failed << ", skipped " << res.skipped << "\n";
  }
  return res.failed == 0 ? kOk : kFailed;
}

int cmd_admissible(const Config& c) {
  const auto graphs = graphs_of(c);
  if (graphs.empty()) throw InputError("admissible needs a graph");
  AdmissibilityOptions opt;
  opt.max_specs = c.max_specs;
  opt.count_budget = c.budget;
  opt.seed = c.seed;
  if (c.sample) {
    opt.sample = true;
    opt.random_specs = c.sample;
  }
  json out = json::array();
  bool ok = true;
  for (const auto& [name, g] : graphs) {
    AdmissibilityCertificate comb = check_admissible_combinatorial(g, opt);
    comb.graph = name;
    json j = {{"combinatorial", to_json(comb)}};
    ok = ok && comb.pass;
    if (!c.q_list.empty()) {
      AdmissibilityCertificate pc = check_admissible_pointcount(g, q_values(c, {}), opt);
      pc.graph = name;
      j["pointcount"] = to_json(pc);
      ok = ok && pc.pass;
    }
    out.push_back(j);
  }
  if (c.format == "text") {
    for (const auto& j : out)
      for (const auto& [mode, cert] : j.items())
        std::cout << cert["graph"].get<std::string>() << ' ' << mode << ": " << (cert["pass"].get<bool>() ? "pass" : "FAIL")
                  << " (checked " << cert["checked"] << " of " << cert["total_specs"] << ", degenerate "
                  << cert["degenerate"] << (cert["partial"].get<bool>() ? ", partial" : "") << ")\n";
  } else {
    print(c, out.size() == 1 ? out[0] : out);
  }
  return ok ? kOk : kFailed;
}

int cmd_girth_search(const Config& c) {
  if (c.vmin < 4 || c.vmax < c.vmin) throw InputError("need 4 <= vmin <= vmax");
  json out = json::array();
  int witnesses = 0;
  for (int v = c.vmin; v <= c.vmax; ++v) {
    const SearchResult r = girth5_search(v, c.limit);
    witnesses += static_cast<int>(r.witnesses.size());
    out.push_back(to_json(r));
  }
  if (c.format == "text") {
    std::cout << "v classes max_edges min_edges witnesses exhaustive\n";
    for (const auto& r : out)
      std::cout << r["v"] << ' ' << r["classes"] << ' ' << r["max_edges"] << ' ' << r["min_edges"] << ' '
                << r["witnesses"].size() << ' ' << (r["exhaustive"].get<bool>() ? "true" : "false") << "\n";
    for (const auto& r : out)
      for (const auto& w : r["witnesses"]) std::cout << w.get<std::string>() << "\n";
  } else {
    print(c, out);
  }
  return kOk;
}

int cmd_robertson(const Config& c) {
  const RobertsonReport r = robertson();
  if (c.format == "text") {
    const auto& a = r.table["completed"];
    const auto& b = r.table["decompleted"];
    std::cout << "completed: vertices " << a["vertices"] << ", edges " << a["edges"] << ", 4-regular "
              << (a["four_regular"].get<bool>() ? "yes" : "no") << ", girth " << a["girth"] << "\n";
    std::cout << "decompleted: vertices " << b["vertices"] << ", edges " << b["edges"] << ", h " << b["h"] << ", n "
              << b["n"] << ", girth " << b["girth"] << ", log-divergent "
              << (b["log_divergent"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << (r.pass ? "pass" : "FAIL") << "\n";
  } else {
    print(c, r.table);
  }
  return r.pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual graph polynomials, point counts over finite fields and c2 invariants"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub, bool with_graphs) {
    if (with_graphs) {
      sub->add_option("graphs", cfg.graphs, "Graph files or names (C3, K4, K3,3, petersen, banana3, ...)");
      sub->add_option("--graph", cfg.graph_file, "Graph file");
    }
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--budget", cfg.budget, "Leaf budget per point count");
    sub->add_flag("--no-timing", cfg.no_timing, "Leave timing fields out of reports");
  };

  auto* poly = app.add_subcommand("poly", "Print Psi, phi and Dodgson minors");
  common(poly, true);
  poly->add_option("--dodgson", cfg.dodgson, "Minor 'I;J;K' (comma-separated ids) or 'i,j'");
  poly->add_flag("--check", cfg.check, "Compare the spanning-tree and determinant expansions");

  auto* c2 = app.add_subcommand("c2", "c2 invariants in both representations");
  common(c2, true);
  c2->add_option("--q", cfg.q_list, "Comma-separated prime powers");
  c2->add_option("--fourface", cfg.fourface, "Four edge ids of a 4-cycle in cyclic order");

  auto* verify = app.add_subcommand("verify", "Run every applicable identity and congruence");
  common(verify, true);
  verify->add_option("--q", cfg.q_list, "Comma-separated prime powers");
  verify->add_option("--random", cfg.random, "Add this many seeded random connected graphs");
  verify->add_option("--edges", cfg.random_edges, "Edge count of the random graphs");
  verify->add_option("--cross-check", cfg.cross_check, "Repeat counts by enumeration up to this many points");

  auto* adm = app.add_subcommand("admissible", "Duality-admissibility certificates");
  common(adm, true);
  adm->add_option("--q", cfg.q_list, "Also run the point-count mode at these q");
  adm->add_option("--max-specs", cfg.max_specs, "Stop after this many specs");
  adm->add_option("--sample", cfg.sample, "Sample: small specs plus this many random ones");

  auto* gs = app.add_subcommand("girth-search", "Girth >= 5 graphs with more than 2(v-1) edges");
  common(gs, false);
  gs->add_option("--vmax", cfg.vmax, "Largest vertex count");
  gs->add_option("--vmin", cfg.vmin, "Smallest vertex count");
  gs->add_option("--limit", cfg.limit, "Largest vertex count searched exhaustively");

  auto* rob = app.add_subcommand("robertson", "Robertson graph and its decompletion");
  common(rob, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (poly->parsed()) return cmd_poly(cfg);
    if (c2->parsed()) return cmd_c2(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (adm->parsed()) return cmd_admissible(cfg);
    if (gs->parsed()) return cmd_girth_search(cfg);
    if (rob->parsed()) return cmd_robertson(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
