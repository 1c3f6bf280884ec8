#include "dgp/suite.hpp"

#include <algorithm>
#include <functional>

#include "dgp/congruence.hpp"
#include "dgp/dodgson.hpp"
#include "dgp/error.hpp"
#include "dgp/report.hpp"
#include "dgp/rng.hpp"

namespace dgp {

nlohmann::json to_json(const VerificationRecord& r, const std::string& graph) {
  nlohmann::json j = {{"statement", r.statement}, {"graph", graph}, {"pass", r.pass}, {"skipped", false}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.signs.empty()) j["signs"] = r.signs;
  return j;
}

namespace {

void tally(SuiteResult& out, const nlohmann::json& j) {
  if (j.value("skipped", false))
    ++out.skipped;
  else if (j.value("pass", false))
    ++out.passed;
  else
    ++out.failed;
  out.records.push_back(j);
}

nlohmann::json skipped_json(const std::string& statement, const std::string& graph, std::uint32_t q,
                            const std::string& why) {
  nlohmann::json j = {{"statement", statement}, {"graph", graph}, {"pass", true}, {"skipped", true}, {"detail", why}};
  if (q) j["q"] = q;
  return j;
}

// Shortest cycle of length <= 3 as an edge sequence, or empty.
std::vector<int> short_cycle(const MultiGraph& g) {
  for (const Edge& e : g.edges())
    if (e.is_loop()) return {e.id};
  for (const Edge& e : g.edges())
    for (const Edge& f : g.edges())
      if (f.id > e.id && !f.is_loop() &&
          ((e.source == f.source && e.target == f.target) || (e.source == f.target && e.target == f.source)))
        return {e.id, f.id};
  auto tri = cycles_of_length(g, 3);
  if (!tri.empty()) return tri[0];
  return {};
}

}  // namespace

void run_suite(const MultiGraph& g, const std::string& id, const SuiteOptions& opt, SuiteResult& out) {
  const int big_n = g.edge_count();
  const std::vector<int> ids = g.edge_ids().ids();
  const auto triangles = cycles_of_length(g, 3);
  const auto squares = cycles_of_length(g, 4);

  auto symbolic = [&](const std::string& name, const std::function<std::vector<VerificationRecord>()>& run) {
    try {
      for (const VerificationRecord& r : run()) tally(out, to_json(r, id));
    } catch (const PreconditionError& e) {
      tally(out, skipped_json(name, id, 0, e.what()));
    } catch (const InputError& e) {
      tally(out, skipped_json(name, id, 0, e.what()));
    } catch (const ConsistencyError& e) {
      tally(out, {{"statement", name}, {"graph", id}, {"pass", false}, {"skipped", false}, {"detail", e.what()}});
    }
  };
  auto one = [](VerificationRecord r) { return std::vector<VerificationRecord>{std::move(r)}; };

  if (opt.symbolic) {
    Rng rng(opt.seed);
    std::vector<int> p = ids;
    for (int i = big_n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
    const auto need = [&](int k, const std::string& name) {
      if (big_n >= k) return true;
      tally(out, skipped_json(name, id, 0, "needs " + std::to_string(k) + " edges"));
      return false;
    };
    symbolic("contraction_deletion", [&] { return one(contraction_deletion(g)); });
    if (need(4, "pluecker")) symbolic("pluecker", [&] { return one(plucker_check(g, {p[0], p[1], p[2], p[3]}, 2)); });
    if (big_n >= 6)
      symbolic("pluecker", [&] { return one(plucker_check(g, {p[0], p[1], p[2], p[3], p[4], p[5]}, 3)); });
    if (need(6, "dodgson_first"))
      symbolic("dodgson_first", [&] {
        return one(dodgson_identity_check(g, {p[4]}, {p[5]}, {p[0], p[1], p[2], p[3]}, DodgsonKind::first));
      });
    if (need(4, "dodgson_second"))
      symbolic("dodgson_second", [&] {
        return one(dodgson_identity_check(g, {}, {p[3]}, {p[0], p[1], p[2]}, DodgsonKind::second));
      });
    if (need(2, "cremona_duality"))
      symbolic("cremona_duality", [&] { return one(cremona_duality(g, {p[0]}, {p[1]})); });
    if (need(4, "cremona_duality_pair"))
      symbolic("cremona_duality_pair", [&] { return one(cremona_duality_pair(g, {p[0]}, {p[1]}, p[2], p[3])); });
    if (need(3, "support_containment"))
      symbolic("support_containment", [&] { return one(support_containment(g, {p[0]}, {p[1]}, {p[2]})); });
    if (need(5, "minor_transfer"))
      symbolic("minor_transfer",
               [&] { return one(minor_transfer_check(g, {p[0]}, {p[1]}, {p[2]}, {p[3]}, {p[4]})); });
    for (const auto* cycles : {&triangles, &squares}) {
      if (cycles->empty()) continue;
      const std::vector<int>& c = cycles->front();
      symbolic("row_relation", [&] { return one(jacobi_row_relation(g, c)); });
      symbolic("cycle_relation", [&] { return one(cycle_corolla_relations(g, c, RelationMode::cycle)); });
    }
    if (!triangles.empty()) {
      const auto& t = triangles.front();
      symbolic("triangle_identities", [&] { return triangle_identities(g, {t[0], t[1], t[2]}); });
    }
    if (!squares.empty()) {
      const auto& s = squares.front();
      symbolic("fourface_identities", [&] { return fourface_identities(g, {s[0], s[1], s[2], s[3]}, opt.seed, 20); });
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::vector<int> star;
      for (const Edge& e : g.edges())
        if (!e.is_loop() && (e.source == v || e.target == v)) star.push_back(e.id);
      if (star.size() < 2 || star.size() > 12) continue;
      symbolic("corolla_relation", [&] { return one(cycle_corolla_relations(g, star, RelationMode::corolla)); });
      break;
    }
  }

  if (!opt.counting) return;
  if (!is_connected(g) || g.degenerate() || big_n < 2) {
    tally(out, skipped_json("point_counts", id, 0, "needs a connected graph with at least 2 edges"));
    return;
  }
  const int h = loop_number(g), n = vertex_rank(g);
  const auto small = short_cycle(g);
  for (std::uint32_t q : opt.qs) {
    PointCounter counter(q, opt.budget);
    counter.set_cross_check(opt.cross_check);
    auto counted = [&](const std::string& name, const std::function<std::vector<CongruenceReport>()>& run) {
      try {
        for (CongruenceReport r : run()) {
          r.graph = id;
          tally(out, to_json(r, opt.timing));
        }
      } catch (const PreconditionError& e) {
        tally(out, skipped_json(name, id, q, e.what()));
      } catch (const ResourceError& e) {
        tally(out, skipped_json(name, id, q, std::string("budget: ") + e.what()));
      } catch (const ConsistencyError& e) {
        tally(out, {{"statement", name}, {"graph", id}, {"q", q}, {"pass", false}, {"skipped", false}, {"detail", e.what()}});
      }
    };
    auto single = [](CongruenceReport r) { return std::vector<CongruenceReport>{std::move(r)}; };
    counted("chevalley_warning", [&] { return single(cw_check(counter, {phi(compact_edges(g))}, big_n)); });
    counted("dual_divisibility", [&] { return single(verify_divisibility(counter, g, ids[0], ids[1])); });
    counted("one_variable_reduction", [&] { return single(verify_one_variable(counter, g, ids[0])); });
    counted("two_variable_reduction", [&] { return single(verify_two_variable(counter, g, ids[0], ids[1])); });
    if (!triangles.empty()) {
      const auto& t = triangles.front();
      counted("triangle_reduction", [&] { return verify_triangle(counter, g, {t[0], t[1], t[2]}); });
    }
    if (!small.empty() && big_n > 2 * n)
      counted("triangle_vanishing", [&] { return single(verify_triangle_vanishing(counter, g, small)); });
    if (!squares.empty()) {
      const auto& s = squares.front();
      counted("fourface", [&] { return verify_fourface(counter, g, {s[0], s[1], s[2], s[3]}); });
      if (is_log_divergent(g))
        counted("fourface_formula", [&] { return single(verify_fourface_formula(counter, g, {s[0], s[1], s[2], s[3]})); });
    }
    if (h >= 2 && is_log_divergent(g))
      counted("c2_coincidence", [&] { return single(verify_c2_coincidence(counter, g)); });
    const CountStats& st = counter.stats();
    out.stats.leaves += st.leaves;
    out.stats.eliminations += st.eliminations;
    out.stats.memo_hits += st.memo_hits;
    out.stats.enumerations += st.enumerations;
    out.stats.cross_checked += st.cross_checked;
    out.stats.cross_skipped += st.cross_skipped;
  }
}

}  // namespace dgp
