#include "dgp/admissibility.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "dgp/count.hpp"
#include "dgp/congruence.hpp"
#include "dgp/dodgson.hpp"
#include "dgp/error.hpp"
#include "dgp/graph_gen.hpp"
#include "dgp/graph_iso.hpp"
#include "dgp/rng.hpp"

namespace dgp {

namespace {

// Visits every k-subset of `items` in lexicographic order.
bool for_each_subset(const std::vector<int>& items, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = static_cast<int>(items.size());
  if (k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> pick(k);
  while (true) {
    for (int i = 0; i < k; ++i) pick[i] = items[idx[i]];
    if (!visit(pick)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int window(const MultiGraph& g) {
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  const int n = vertex_rank(g);
  if (n < 3) throw PreconditionError("sub-quotients need n >= 3");
  return std::min(n - 3, g.edge_count());
}

// The stream restricted to |I| + |J| <= limit (no limit if negative).
void stream(const MultiGraph& g, int limit, const std::function<bool(const SubquotientSpec&)>& visit) {
  int top = window(g);
  if (limit >= 0) top = std::min(top, (limit - 1) / 2);
  const std::vector<int> all = g.edge_ids().ids();
  const int total = static_cast<int>(all.size());
  for (int i = 0; i <= top; ++i) {
    const bool go = for_each_subset(all, i, [&](const std::vector<int>& del) {
      const EdgeSet deleted(del);
      std::vector<int> rest;
      for (int e : all)
        if (!deleted.contains(e)) rest.push_back(e);
      for (int j = i + 1; j <= total - i; ++j) {
        if (limit >= 0 && i + j > limit) break;
        const bool more = for_each_subset(rest, j, [&](const std::vector<int>& con) {
          return visit(SubquotientSpec{deleted, EdgeSet(con)});
        });
        if (!more) return false;
      }
      return true;
    });
    if (!go) return;
  }
}

std::vector<SubquotientSpec> random_specs(const MultiGraph& g, std::uint64_t count, std::uint64_t seed) {
  const int top = window(g);
  const std::vector<int> all = g.edge_ids().ids();
  const int total = static_cast<int>(all.size());
  Rng rng(seed);
  std::vector<SubquotientSpec> out;
  for (std::uint64_t s = 0; s < count; ++s) {
    const int i = rng.range(0, top);
    if (total - i < i + 1) continue;
    const int j = rng.range(i + 1, total - i);
    std::vector<int> perm = all;
    for (int k = total - 1; k > 0; --k) std::swap(perm[k], perm[rng.below(k + 1)]);
    out.push_back({EdgeSet(std::vector<int>(perm.begin(), perm.begin() + i)),
                   EdgeSet(std::vector<int>(perm.begin() + i, perm.begin() + i + j))});
  }
  return out;
}

// Runs `check` over the specs selected by the options; returns false if cut short.
bool drive(const MultiGraph& g, const AdmissibilityOptions& opt, AdmissibilityCertificate& cert,
           const std::function<void(const SubquotientSpec&)>& check) {
  bool complete = true;
  auto visit = [&](const SubquotientSpec& s) {
    if (opt.max_specs && cert.checked + cert.degenerate >= opt.max_specs) {
      complete = false;
      return false;
    }
    check(s);
    return true;
  };
  if (!opt.sample) {
    stream(g, -1, visit);
    return complete;
  }
  stream(g, opt.sample_size, visit);
  for (const SubquotientSpec& s : random_specs(g, opt.random_specs, opt.seed))
    if (!visit(s)) break;
  return false;
}

}  // namespace

void for_each_subquotient(const MultiGraph& g, const std::function<bool(const SubquotientSpec&)>& visit) {
  stream(g, -1, visit);
}

std::vector<SubquotientSpec> subquotients(const MultiGraph& g) {
  std::vector<SubquotientSpec> out;
  for_each_subquotient(g, [&](const SubquotientSpec& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

BigInt subquotient_count(const MultiGraph& g) {
  const int top = window(g);
  const int n = g.edge_count();
  BigInt total = 0;
  for (int i = 0; i <= top; ++i) {
    BigInt inner = 0;
    for (int j = i + 1; j <= n - i; ++j) inner += binomial(n - i, j);
    total += binomial(n, i) * inner;
  }
  return total;
}

MultiGraph subquotient_graph(const MultiGraph& g, const SubquotientSpec& s) {
  return contract_edges(delete_edges(g, s.deleted), s.contracted);
}

AdmissibilityCertificate check_admissible_combinatorial(const MultiGraph& g, const AdmissibilityOptions& opt) {
  AdmissibilityCertificate cert;
  cert.mode = CertificateMode::combinatorial;
  cert.total_specs = subquotient_count(g);
  const bool complete = drive(g, opt, cert, [&](const SubquotientSpec& s) {
    const MultiGraph sub = subquotient_graph(g, s);
    if (sub.degenerate()) {
      ++cert.degenerate;
      return;
    }
    ++cert.checked;
    if (!is_connected(sub)) cert.flagged_disconnected.push_back(s);
    if (!has_cycle_at_most(sub, 4)) cert.flagged_girth5.push_back(s);
  });
  cert.exhaustive = complete;
  cert.partial = !complete;
  cert.pass = cert.flagged_girth5.empty();
  return cert;
}

AdmissibilityCertificate check_admissible_pointcount(const MultiGraph& g, const std::vector<std::uint32_t>& qs,
                                                     const AdmissibilityOptions& opt) {
  AdmissibilityCertificate cert;
  cert.mode = CertificateMode::pointcount;
  cert.total_specs = subquotient_count(g);
  std::vector<PointCounter> counters;
  for (std::uint32_t q : qs) {
    counters.emplace_back(q, opt.count_budget);
    cert.per_q[q] = {0, 0};
  }
  bool unresolved = false;
  const EdgeSet all = g.edge_ids();
  const bool complete = drive(g, opt, cert, [&](const SubquotientSpec& s) {
    const MultiGraph sub = subquotient_graph(g, s);
    if (sub.degenerate()) {
      ++cert.degenerate;
      return;
    }
    ++cert.checked;
    if (!is_connected(sub)) cert.flagged_disconnected.push_back(s);
    if (!has_cycle_at_most(sub, 4)) cert.flagged_girth5.push_back(s);
    const SparsePoly f = dual_dodgson(g, s.contracted, s.contracted, s.deleted);
    const EdgeSet ambient = set_difference(all, set_union(s.deleted, s.contracted));
    bool failed = false;
    for (PointCounter& c : counters) {
      try {
        const BigInt n = count_over(c, {f}, ambient);
        auto& slot = cert.per_q[c.q()];
        ++slot.first;
        if (mod_floor(n, big_pow(c.q(), 3)) != 0) {
          ++slot.second;
          failed = true;
        }
      } catch (const ResourceError&) {
        unresolved = true;
      }
    }
    if (failed) cert.failures.push_back(s);
  });
  cert.exhaustive = complete && !unresolved;
  cert.partial = !cert.exhaustive;
  cert.pass = cert.failures.empty();
  return cert;
}

nlohmann::json to_json(const SubquotientSpec& s) { return {{"I", s.deleted.ids()}, {"J", s.contracted.ids()}}; }

nlohmann::json to_json(const AdmissibilityCertificate& c) {
  auto list = [](const std::vector<SubquotientSpec>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& s : v) a.push_back(to_json(s));
    return a;
  };
  nlohmann::json per_q = nlohmann::json::object();
  for (const auto& [q, v] : c.per_q) per_q[std::to_string(q)] = {{"checked", v.first}, {"failed", v.second}};
  const std::string total = to_string(c.total_specs);
  return {{"graph", c.graph},
          {"mode", c.mode == CertificateMode::combinatorial ? "combinatorial" : "pointcount"},
          {"total_specs", total.size() < 19 ? nlohmann::json(std::stoll(total)) : nlohmann::json(total)},
          {"checked", c.checked},
          {"degenerate", c.degenerate},
          {"failures", list(c.failures)},
          {"flagged_girth5", list(c.flagged_girth5)},
          {"flagged_disconnected", list(c.flagged_disconnected)},
          {"per_q", per_q},
          {"exhaustive", c.exhaustive},
          {"partial", c.partial},
          {"pass", c.pass}};
}

namespace {

std::vector<std::vector<int>> distances(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.source].push_back(e.target);
    adj[e.target].push_back(e.source);
  }
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::deque<int> queue{s};
    d[s][s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : adj[u])
        if (d[s][w] < 0) {
          d[s][w] = d[s][u] + 1;
          queue.push_back(w);
        }
    }
  }
  return d;
}

}  // namespace

std::vector<std::vector<MultiGraph>> girth5_graphs_up_to(int v) {
  std::vector<std::vector<MultiGraph>> levels(std::max(v, 0) + 1);
  if (v < 1) return levels;
  levels[1].push_back(MultiGraph(1, {}));
  for (int k = 1; k < v; ++k) {
    IsoClassSet next;
    for (const MultiGraph& g : levels[k]) {
      const auto d = distances(g);
      std::vector<std::pair<int, int>> base;
      for (const Edge& e : g.edges()) base.emplace_back(e.source, e.target);
      std::vector<int> chosen;
      std::function<void(int)> extend = [&](int from) {
        auto edges = base;
        for (int s : chosen) edges.emplace_back(s, k);
        next.insert(MultiGraph(k + 1, edges));
        for (int x = from; x < k; ++x) {
          bool far = true;
          for (int s : chosen)
            if (d[s][x] >= 0 && d[s][x] < 3) far = false;
          if (!far) continue;
          chosen.push_back(x);
          extend(x + 1);
          chosen.pop_back();
        }
      };
      extend(0);
    }
    levels[k + 1] = next.items();
  }
  return levels;
}

SearchResult girth5_search(int v, int exhaustive_limit) {
  if (v < 4) throw PreconditionError("girth search needs v >= 4");
  SearchResult r;
  r.v = v;
  r.min_edges = 2 * (v - 1) + 1;
  if (v > exhaustive_limit) return r;
  const auto levels = girth5_graphs_up_to(v);
  r.classes = levels[v].size();
  for (const MultiGraph& g : levels[v]) {
    const auto gi = girth(g);
    if (gi && *gi < 5) throw ConsistencyError("generated graph has a cycle shorter than 5");
    r.max_edges = std::max(r.max_edges, g.edge_count());
    if (g.edge_count() >= r.min_edges) r.witnesses.push_back(g);
  }
  r.exhaustive = true;
  return r;
}

std::string to_graph6(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw InputError("graph6 output supports at most 62 vertices");
  std::set<std::pair<int, int>> adj;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) throw InputError("graph6 needs a simple graph");
    adj.insert({std::min(e.source, e.target), std::max(e.source, e.target)});
  }
  std::string out(1, static_cast<char>(63 + n));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(adj.count({i, j}) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int x = 0;
    for (int b = 0; b < 6; ++b) x = 2 * x + bits[i + b];
    out.push_back(static_cast<char>(63 + x));
  }
  return out;
}

nlohmann::json to_json(const SearchResult& r) {
  nlohmann::json w = nlohmann::json::array();
  for (const MultiGraph& g : r.witnesses) w.push_back(to_graph6(g));
  return {{"v", r.v},         {"min_edges", r.min_edges}, {"witnesses", w},
          {"exhaustive", r.exhaustive}, {"classes", r.classes}, {"max_edges", r.max_edges}};
}

RobertsonReport robertson() {
  RobertsonReport r;
  r.completed = robertson_graph();
  r.decompleted = robertson_decompleted();
  const auto degs = r.completed.degrees();
  const bool regular = std::all_of(degs.begin(), degs.end(), [](int d) { return d == 4; });
  const int gc = girth(r.completed).value_or(0), gd = girth(r.decompleted).value_or(0);
  const int h = loop_number(r.decompleted), n = vertex_rank(r.decompleted);
  r.table = {{"completed",
              {{"vertices", r.completed.vertex_count()},
               {"edges", r.completed.edge_count()},
               {"four_regular", regular},
               {"girth", gc}}},
             {"decompleted",
              {{"vertices", r.decompleted.vertex_count()},
               {"edges", r.decompleted.edge_count()},
               {"h", h},
               {"n", n},
               {"girth", gd},
               {"log_divergent", is_log_divergent(r.decompleted)}}}};
  r.pass = r.completed.vertex_count() == 19 && r.completed.edge_count() == 38 && regular && gc == 5 &&
           r.decompleted.edge_count() == 34 && h == 17 && n == 17 && gd == 5;
  r.table["pass"] = r.pass;
  return r;
}

}  // namespace dgp
