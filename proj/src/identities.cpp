#include "dgp/identities.hpp"

#include <algorithm>
#include <set>

#include "dgp/dodgson.hpp"
#include "dgp/error.hpp"
#include "dgp/face.hpp"
#include "dgp/rng.hpp"

namespace dgp {

namespace {

EdgeSet with(const EdgeSet& s, std::initializer_list<int> extra) {
  std::vector<int> ids = s.ids();
  ids.insert(ids.end(), extra.begin(), extra.end());
  return EdgeSet(std::move(ids));
}

std::string leading(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  return SparsePoly::from_terms({p.terms().front()}).to_text();
}

// First assignment of signs with sum_j s_j terms[j] == target, or empty.
std::vector<int> find_signs(const SparsePoly& target, const std::vector<SparsePoly>& terms, bool& found) {
  const int m = static_cast<int>(terms.size());
  found = false;
  if (m > 20) throw ResourceError("sign search too large");
  for (long mask = 0; mask < (1L << m); ++mask) {
    SparsePoly s;
    for (int j = 0; j < m; ++j) s += (mask >> j & 1) ? -terms[j] : terms[j];
    if (s == target) {
      found = true;
      std::vector<int> out;
      for (int j = 0; j < m; ++j) out.push_back((mask >> j & 1) ? -1 : 1);
      return out;
    }
  }
  return {};
}

}  // namespace

VerificationRecord compare_polys(const std::string& statement, const SparsePoly& lhs, const SparsePoly& rhs) {
  VerificationRecord r;
  r.statement = statement;
  r.pass = lhs == rhs;
  if (!r.pass) r.detail = "lhs - rhs leads with " + leading(lhs - rhs);
  return r;
}

VerificationRecord jacobi_row_relation(const MultiGraph& g, const std::vector<int>& cycle) {
  const MultiGraph a = face_adapted(g, cycle).graph;
  SparsePoly rhs;
  for (int j = 2; j <= static_cast<int>(cycle.size()); ++j) {
    SparsePoly t = dual_dodgson(a, {1}, {j});
    rhs += (j % 2 == 0) ? t : -t;
  }
  return compare_polys("row_relation", dual_dodgson(a, {1}, {1}), rhs);
}

VerificationRecord plucker_check(const MultiGraph& g, std::vector<int> idx, int n) {
  if (n < 1 || static_cast<int>(idx.size()) != 2 * n) throw InputError("Pluecker check needs 2n indices");
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) throw InputError("Pluecker indices must be distinct");
  for (int id : idx)
    if (!g.has_edge(id)) throw InputError("unknown edge id " + std::to_string(id));
  SparsePoly sum;
  // idx is 0-based here: i_m = idx[m-1].
  for (int k = n; k <= 2 * n; ++k) {
    std::vector<int> rows(idx.begin(), idx.begin() + (n - 1));
    rows.push_back(idx[k - 1]);
    std::vector<int> cols;
    for (int m = n; m <= 2 * n; ++m)
      if (m != k) cols.push_back(idx[m - 1]);
    SparsePoly t = dual_dodgson(g, EdgeSet(rows), EdgeSet(cols));
    sum += (k % 2 == 0) ? t : -t;
  }
  return compare_polys("pluecker", sum, SparsePoly{});
}

VerificationRecord dodgson_identity_check(const MultiGraph& g, const EdgeSet& i, const EdgeSet& j,
                                          const std::vector<int>& extra, DodgsonKind kind) {
  const EdgeSet ij = set_union(i, j);
  for (int e : extra) {
    if (!g.has_edge(e)) throw InputError("unknown edge id " + std::to_string(e));
    if (ij.contains(e)) throw PreconditionError("extra Dodgson indices must avoid I and J");
  }
  VerificationRecord r;
  if (kind == DodgsonKind::first) {
    if (extra.size() != 4) throw InputError("first Dodgson identity needs a, b, c, d");
    if (i.size() != j.size()) throw PreconditionError("first Dodgson identity needs |I| = |J|");
    const int a = extra[0], b = extra[1], c = extra[2], d = extra[3];
    if (a == c || b == d) throw PreconditionError("first Dodgson identity needs a != c and b != d");
    std::vector<int> all = ij.ids();
    for (int e : extra)
      if (std::find(all.begin(), all.end(), e) == all.end()) all.push_back(e);
    const EdgeSet s(all);
    const SparsePoly lhs = dual_dodgson(g, with(i, {a}), with(j, {b}), s) * dual_dodgson(g, with(i, {c}), with(j, {d}), s) -
                           dual_dodgson(g, with(i, {a}), with(j, {d}), s) * dual_dodgson(g, with(i, {c}), with(j, {b}), s);
    SparsePoly rhs = dual_dodgson(g, i, j, s) * dual_dodgson(g, with(i, {a, c}), with(j, {b, d}), s);
    if ((a - c) * (b - d) < 0) rhs = -rhs;
    r = compare_polys("dodgson_first", lhs, rhs);
    return r;
  }
  if (extra.size() < 3) throw InputError("second Dodgson identity needs a, b, c");
  if (j.size() != i.size() + 1) throw PreconditionError("second Dodgson identity needs |J| = |I| + 1");
  const int a = extra[0], b = extra[1], c = extra[2];
  if (a == b || b == c || a == c) throw PreconditionError("second Dodgson identity needs distinct a, b, c");
  const EdgeSet s = with(ij, {a, b, c});
  // Minors are taken on index sets, so the two products differ in sign by
  // the relative position of c among {a, c} and {b, c}.
  SparsePoly second = dual_dodgson(g, with(i, {a, c}), with(j, {c}), s) * dual_dodgson(g, with(i, {b}), j, s);
  if ((c - a) * (c - b) < 0) second = -second;
  const SparsePoly lhs = dual_dodgson(g, with(i, {a}), j, s) * dual_dodgson(g, with(i, {b, c}), with(j, {c}), s) - second;
  const SparsePoly rhs = dual_dodgson(g, with(i, {c}), j, s) * dual_dodgson(g, with(i, {a, b}), with(j, {c}), s);
  r.statement = "dodgson_second";
  if (lhs == rhs) {
    r.pass = true;
    r.signs = {1};
  } else if (lhs == -rhs) {
    r.pass = true;
    r.signs = {-1};
  } else {
    r.detail = "neither sign: lhs - rhs leads with " + leading(lhs - rhs);
  }
  return r;
}

VerificationRecord cycle_corolla_relations(const MultiGraph& g, const std::vector<int>& edges, RelationMode mode) {
  if (edges.size() < 2) throw PreconditionError("relation needs at least two edges");
  std::vector<SparsePoly> terms;
  SparsePoly target;
  VerificationRecord r;
  if (mode == RelationMode::cycle) {
    if (edges.size() < 2 || !is_cycle_sequence(g, edges))
      throw PreconditionError("edges do not form a cycle");
    for (std::size_t k = 1; k < edges.size(); ++k) terms.push_back(dual_dodgson(g, {edges[0]}, {edges[k]}));
    target = dual_dodgson(g, {edges[0]}, {edges[0]});
    r.statement = "cycle_relation";
  } else {
    std::set<int> common;
    {
      const Edge& e = g.edge(edges[0]);
      common = {e.source, e.target};
    }
    for (int id : edges) {
      const Edge& e = g.edge(id);
      if (e.is_loop()) throw PreconditionError("corolla edges must not be self-loops");
      std::set<int> next;
      for (int v : common)
        if (v == e.source || v == e.target) next.insert(v);
      common = next;
    }
    if (common.empty()) throw PreconditionError("edges do not share an endpoint");
    bool complete = false;
    for (int v : common) {
      std::vector<int> star;
      for (const Edge& e : g.edges())
        if (!e.is_loop() && (e.source == v || e.target == v)) star.push_back(e.id);
      std::vector<int> given = edges;
      std::sort(given.begin(), given.end());
      if (star == given) complete = true;
    }
    if (!complete) throw PreconditionError("corolla must consist of all non-loop edges at a vertex");
    for (std::size_t k = 1; k < edges.size(); ++k)
      terms.push_back(SparsePoly::variable(edges[k]) * dual_dodgson(g, {edges[0]}, {edges[k]}));
    target = dual_dodgson(g, {}, {}, {edges[0]});
    r.statement = "corolla_relation";
  }
  bool found = false;
  r.signs = find_signs(target, terms, found);
  r.pass = found;
  if (!found) r.detail = "no sign vector reproduces the left side";
  return r;
}

std::vector<VerificationRecord> triangle_identities(const MultiGraph& g, const std::array<int, 3>& tri) {
  const MultiGraph a = face_adapted(g, {tri.begin(), tri.end()}).graph;
  const TriangleData d = triangle_data(a);
  const SparsePoly x1 = SparsePoly::variable(1), x2 = SparsePoly::variable(2), x3 = SparsePoly::variable(3);
  const SparsePoly rebuilt = d.g[0] * (x1 * x2 + x2 * x3 + x1 * x3) + (d.g[2] + d.g[3]) * x1 +
                             (d.g[1] + d.g[3]) * x2 + (d.g[1] + d.g[2]) * x3 + d.g123;
  std::vector<VerificationRecord> out;
  out.push_back(compare_polys("triangle_reconstruction", phi(a), rebuilt));
  out.push_back(compare_polys("triangle_connecting_identity", d.g[0] * d.g123,
                              d.g[1] * d.g[2] + d.g[2] * d.g[3] + d.g[1] * d.g[3]));
  out.push_back(compare_polys("triangle_row_relation", dual_dodgson(a, {1}, {1}),
                              dual_dodgson(a, {1}, {2}) - dual_dodgson(a, {1}, {3})));
  out.push_back(compare_polys("triangle_loop_vanishing", dual_dodgson(a, {1, 2, 3}, {1, 2, 3}), SparsePoly{}));
  return out;
}

namespace {

// Random points of V(a) over F_p, each a vector indexed by variable id.
std::vector<std::vector<std::uint64_t>> points_on(const SparsePoly& a, int nvars, Rng& rng, int count,
                                                  std::uint64_t p, bool& empty) {
  std::vector<std::vector<std::uint64_t>> pts;
  empty = false;
  auto random_point = [&] {
    std::vector<std::uint64_t> x(nvars + 1, 0);
    for (int v = 1; v <= nvars; ++v) x[v] = rng.below(p);
    return x;
  };
  if (a.is_zero()) {
    for (int s = 0; s < count; ++s) pts.push_back(random_point());
    return pts;
  }
  const auto vars = a.variables();
  if (vars.empty()) {
    empty = true;
    return pts;
  }
  auto inverse = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * x % p);
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % p);
      e >>= 1;
    }
    return r;
  };
  int attempts = 0;
  while (static_cast<int>(pts.size()) < count && attempts < 100 * count) {
    ++attempts;
    const int x = vars[rng.below(vars.size())];
    auto [lead, rest] = a.linear_split(x);
    auto pt = random_point();
    const std::uint64_t l = lead.eval_mod(pt, p);
    if (l == 0) continue;
    const std::uint64_t r = rest.eval_mod(pt, p);
    pt[x] = static_cast<std::uint64_t>(static_cast<unsigned __int128>((p - r) % p) * inverse(l) % p);
    if (a.eval_mod(pt, p) != 0) throw ConsistencyError("sampled point is not on V(a)");
    pts.push_back(std::move(pt));
  }
  return pts;
}

}  // namespace

std::vector<VerificationRecord> fourface_identities(const MultiGraph& g, const std::array<int, 4>& face,
                                                    std::uint64_t seed, int samples, std::uint64_t p) {
  const MultiGraph G = face_adapted(g, {face.begin(), face.end()}).graph;
  const FourFaceData d = fourface_data(G);
  std::vector<VerificationRecord> out;
  VerificationRecord rel;
  rel.statement = "fourface_relations";
  rel.pass = true;
  for (int i = 1; i <= 4 && rel.pass; ++i)
    for (int j = 1; j <= 4 && rel.pass; ++j) {
      if (j == i) continue;
      for (int k = 1; k <= 4 && rel.pass; ++k) {
        if (k == i || k == j) continue;
        const int t = 10 - i - j - k;
        const std::vector<std::pair<SparsePoly, SparsePoly>> checks = {
            {dual_dodgson(G, EdgeSet{i, j, k}, EdgeSet{i, j, t}), d.a},
            {dual_dodgson(G, EdgeSet{i, j, k}, EdgeSet{i, j, k}, {t}), d.a},
            {dual_dodgson(G, EdgeSet{i, j}, EdgeSet{i, j}, EdgeSet{k, t}), d.b[i][k] + d.b[i][t]},
            {dual_dodgson(G, {i}, {i}, EdgeSet{j, k, t}), d.c[i][j] + d.c[i][k] + d.c[i][t]},
        };
        for (const auto& [lhs, rhs] : checks)
          if (!(lhs == rhs)) {
            rel.pass = false;
            rel.detail = "fails at (i,j,k,t) = (" + std::to_string(i) + "," + std::to_string(j) + "," +
                         std::to_string(k) + "," + std::to_string(t) + ")";
          }
      }
    }
  out.push_back(rel);
  out.push_back(compare_polys("fourface_alpha4_expansion", dual_dodgson(G, EdgeSet{1, 2}, EdgeSet{3, 4}),
                              d.b[2][4] - d.b[1][4]));
  const SparsePoly lhs = dual_dodgson(G, EdgeSet{2, 4}, EdgeSet{2, 4}, EdgeSet{1, 3}) *
                             dual_dodgson(G, {1}, {1}, EdgeSet{2, 3, 4}) -
                         d.a * dual_dodgson(G, {}, {}, EdgeSet{1, 2, 3, 4});
  out.push_back(compare_polys("fourface_constant_term", lhs,
                              d.b[4][3] * dual_dodgson(G, {1}, {2}, EdgeSet{3, 4}) +
                                  d.b[2][3] * dual_dodgson(G, {1}, {4}, EdgeSet{2, 3})));
  out.push_back(compare_polys("fourface_row_relation", dual_dodgson(G, {1}, {1}),
                              dual_dodgson(G, {1}, {2}) - dual_dodgson(G, {1}, {3}) + dual_dodgson(G, {1}, {4})));
  out.push_back(compare_polys("fourface_loop_vanishing", dual_dodgson(G, EdgeSet{1, 2, 3, 4}, EdgeSet{1, 2, 3, 4}),
                              SparsePoly{}));

  VerificationRecord sq;
  sq.statement = "fourface_square_mod_a";
  sq.pass = true;
  Rng rng(seed);
  bool empty = false;
  const auto pts = points_on(d.a, G.max_edge_id(), rng, samples, p, empty);
  std::vector<SparsePoly> diffs;
  for (int i = 1; i <= 4; ++i)
    for (int t = 1; t <= 4; ++t) {
      if (t == i) continue;
      std::vector<int> rest;
      for (int x = 1; x <= 4; ++x)
        if (x != i && x != t) rest.push_back(x);
      const int j = rest[0], k = rest[1];
      diffs.push_back(d.b[i][t] * d.b[i][t] -
                      dual_dodgson(G, EdgeSet{i, j}, EdgeSet{i, j}, EdgeSet{k, t}) *
                          dual_dodgson(G, EdgeSet{i, k}, EdgeSet{i, k}, EdgeSet{j, t}));
    }
  for (const auto& pt : pts)
    for (const auto& f : diffs)
      if (f.eval_mod(pt, p) != 0) {
        sq.pass = false;
        sq.detail = "nonzero at a sampled point of V(a)";
      }
  if (sq.pass) sq.detail = empty ? "V(a) is empty" : std::to_string(pts.size()) + " points of V(a)";
  if (!empty && static_cast<int>(pts.size()) < samples && sq.pass)
    sq.detail += " (fewer than requested)";
  out.push_back(sq);
  return out;
}

VerificationRecord cremona_duality(const MultiGraph& g, const EdgeSet& s, const EdgeSet& k) {
  if (!disjoint(s, k)) throw PreconditionError("S and K must be disjoint");
  const SparsePoly lhs = dual_dodgson(g, s, s, k);
  const EdgeSet universe = set_difference(g.edge_ids(), set_union(s, k));
  const SparsePoly rhs = cremona(psi_dodgson(g, k, k, s), universe);
  return compare_polys("cremona_duality", lhs, rhs);
}

VerificationRecord cremona_duality_pair(const MultiGraph& g, const EdgeSet& s, const EdgeSet& k, int i, int j) {
  if (!disjoint(s, k) || s.contains(i) || s.contains(j) || k.contains(i) || k.contains(j) || i == j)
    throw PreconditionError("need disjoint S, K and two further distinct edges");
  const SparsePoly lhs = dual_dodgson(g, with(s, {i}), with(s, {j}), k);
  const EdgeSet universe = set_difference(g.edge_ids(), with(set_union(s, k), {i, j}));
  const SparsePoly rhs = cremona(psi_dodgson(g, with(k, {i}), with(k, {j}), s), universe);
  VerificationRecord r = compare_polys("cremona_duality_pair", lhs, rhs);
  if (r.pass) {
    r.signs = {1};
  } else if (lhs == -rhs) {
    r.pass = true;
    r.signs = {-1};
    r.detail.clear();
  }
  return r;
}

VerificationRecord contraction_deletion(const MultiGraph& g) {
  const SparsePoly f = phi(g);
  VerificationRecord r;
  r.statement = "contraction_deletion";
  r.pass = true;
  for (const Edge& e : g.edges()) {
    const auto [hi, lo] = f.linear_split(e.id);
    if (!(hi == phi(contract_edges(g, {e.id}))) || !(lo == phi(delete_edges(g, {e.id})))) {
      r.pass = false;
      r.detail = "edge " + std::to_string(e.id);
      break;
    }
  }
  return r;
}

VerificationRecord support_containment(const MultiGraph& g, const EdgeSet& i, const EdgeSet& j, const EdgeSet& k) {
  const SparsePoly f = dual_dodgson(g, i, j, k);
  const SparsePoly fi = dual_dodgson(g, i, i, set_union(j, k));
  const SparsePoly fj = dual_dodgson(g, j, j, set_union(i, k));
  auto has = [](const SparsePoly& p, const Monomial& m) {
    return std::any_of(p.terms().begin(), p.terms().end(), [&](const Term& t) { return t.mono == m; });
  };
  VerificationRecord r;
  r.statement = "support_containment";
  r.pass = true;
  for (const Term& t : f.terms())
    if (!has(fi, t.mono) || !has(fj, t.mono)) {
      r.pass = false;
      r.detail = "monomial " + SparsePoly::from_terms({Term{t.mono, 1}}).to_text();
      break;
    }
  return r;
}

VerificationRecord minor_transfer_check(const MultiGraph& g, const EdgeSet& i, const EdgeSet& j, const EdgeSet& k,
                                        const EdgeSet& a, const EdgeSet& b) {
  const SparsePoly lhs = minor_transfer(g, i, j, k, a, b);
  const SparsePoly rhs = dual_dodgson(g, set_union(i, a), set_union(j, a), set_union(k, b));
  VerificationRecord r = compare_polys("minor_transfer", lhs, rhs);
  if (!r.pass && lhs == -rhs) {
    r.pass = true;
    r.detail.clear();
    r.signs = {-1};
  } else if (r.pass) {
    r.signs = {1};
  }
  return r;
}

}  // namespace dgp
