#include "dgp/dodgson.hpp"

#include <algorithm>
#include <map>

#include "dgp/error.hpp"
#include "dgp/matrix.hpp"

namespace dgp {

SparsePoly det_multilinear(const std::vector<SymEntry>& entries, int n) {
  if (static_cast<int>(entries.size()) != n * n) throw InputError("matrix entry count mismatch");
  std::vector<int> vars;
  std::vector<int> slot(entries.size(), -1);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const SymEntry& e = entries[i];
    if (e.var) {
      if (e.var < 1 || e.var > kMaxVars) throw InputError("variable index out of range");
      vars.push_back(e.var);
    } else if (e.value < -1 || e.value > 1) {
      throw InputError("matrix entry outside {0, 1, -1, a_e}");
    }
  }
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
    throw InputError("a variable occurs in more than one entry");
  const int m = static_cast<int>(vars.size());
  if (m > 24) throw ResourceError("too many variables for grid interpolation");
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].var)
      slot[i] = static_cast<int>(std::lower_bound(vars.begin(), vars.end(), entries[i].var) - vars.begin());

  const std::size_t points = std::size_t{1} << m;
  std::vector<long long> values(points);
  std::vector<long long> work(entries.size());
  for (std::size_t mask = 0; mask < points; ++mask) {
    for (std::size_t i = 0; i < entries.size(); ++i)
      work[i] = slot[i] >= 0 ? static_cast<long long>((mask >> slot[i]) & 1) : entries[i].value;
    values[mask] = n == 0 ? 1 : det_bareiss_inplace(work.data(), n);
  }
  for (int b = 0; b < m; ++b)
    for (std::size_t mask = 0; mask < points; ++mask)
      if (mask >> b & 1) values[mask] -= values[mask ^ (std::size_t{1} << b)];

  std::vector<Term> terms;
  for (std::size_t mask = 0; mask < points; ++mask) {
    if (!values[mask]) continue;
    Term t;
    t.coeff = values[mask];
    for (int b = 0; b < m; ++b)
      if (mask >> b & 1) {
        t.mono.exps[vars[b] - 1] = 1;
        ++t.mono.degree;
      }
    terms.push_back(std::move(t));
  }
  return SparsePoly::from_terms(std::move(terms));
}

SparsePoly det_multilinear(const BlockMatrix& m) { return det_multilinear(m.entries, m.size); }

namespace {

bool polynomial_free(const MultiGraph& g) { return g.degenerate() || !is_connected(g); }

SparsePoly product_of(const MultiGraph& g, const EdgeSet& tree, bool complement) {
  Term t;
  t.coeff = 1;
  for (const Edge& e : g.edges())
    if (tree.contains(e.id) != complement) {
      t.mono.exps[e.id - 1] = 1;
      ++t.mono.degree;
    }
  return SparsePoly::from_terms({t});
}

SparsePoly tree_sum(const MultiGraph& g, bool complement) {
  if (polynomial_free(g)) return {};
  for (const Edge& e : g.edges())
    if (e.id > kMaxVars) throw InputError("edge id exceeds the polynomial variable range");
  std::vector<Term> terms;
  for_each_spanning_tree(g, [&](const EdgeSet& t) {
    SparsePoly p = product_of(g, t, complement);
    terms.push_back(p.terms().front());
  });
  return SparsePoly::from_terms(std::move(terms));
}

void require_subset(const MultiGraph& g, const EdgeSet& s) {
  for (int id : s)
    if (!g.has_edge(id)) throw InputError("unknown edge id " + std::to_string(id));
}

SparsePoly block_minor(const BlockMatrix& m, const MultiGraph& g, const EdgeSet& i,
                       const EdgeSet& j, const EdgeSet& k) {
  std::vector<int> rows, cols;
  for (int r = 0; r < m.size; ++r)
    if (r >= g.edge_count() || !i.contains(m.index_ids[r])) rows.push_back(r);
  for (int c = 0; c < m.size; ++c)
    if (c >= g.edge_count() || !j.contains(m.index_ids[c])) cols.push_back(c);
  const int n = static_cast<int>(rows.size());
  std::vector<SymEntry> sub;
  sub.reserve(static_cast<std::size_t>(n) * n);
  for (int r : rows)
    for (int c : cols) {
      SymEntry e = m.at(r, c);
      if (e.var && k.contains(e.var)) e = SymEntry{};
      sub.push_back(e);
    }
  return det_multilinear(sub, n);
}

}  // namespace

SparsePoly phi(const MultiGraph& g, PhiBackend backend) {
  if (backend == PhiBackend::tree_sum) return tree_sum(g, false);
  return dual_dodgson(g, {}, {}, {});
}

SparsePoly psi(const MultiGraph& g) { return tree_sum(g, true); }

SparsePoly dual_dodgson(const MultiGraph& g, const EdgeSet& i, const EdgeSet& j, const EdgeSet& k) {
  if (i.size() != j.size()) throw InputError("dual Dodgson polynomial needs |I| = |J|");
  require_subset(g, i);
  require_subset(g, j);
  require_subset(g, k);
  if (polynomial_free(g)) return {};
  const CycleMatrix f = small_cycle_basis(g);
  return block_minor(build_L(g, f), g, i, j, k);
}

SparsePoly psi_dodgson(const MultiGraph& g, const EdgeSet& i, const EdgeSet& j, const EdgeSet& k) {
  if (i.size() != j.size()) throw InputError("Dodgson polynomial needs |I| = |J|");
  require_subset(g, i);
  require_subset(g, j);
  require_subset(g, k);
  if (polynomial_free(g)) return {};
  return block_minor(build_incidence_block(g), g, i, j, k);
}

SparsePoly minor_transfer(const MultiGraph& g, const EdgeSet& i, const EdgeSet& j,
                          const EdgeSet& k, const EdgeSet& a, const EdgeSet& b) {
  const EdgeSet used = set_union(set_union(i, j), k);
  if (!disjoint(a, b) || !disjoint(a, used) || !disjoint(b, used))
    throw InputError("minor_transfer: A and B must avoid each other and I, J, K");
  return dual_dodgson(contract_edges(delete_edges(g, b), a), i, j, k);
}

SparsePoly cremona(const SparsePoly& f, const EdgeSet& universe) {
  if (!f.is_multilinear() || !f.is_homogeneous())
    throw InputError("Cremona transform needs a multilinear homogeneous polynomial");
  Monomial full;
  for (int v : universe) {
    if (v < 1 || v > kMaxVars) throw InputError("variable index out of range");
    full.exps[v - 1] = 1;
    ++full.degree;
  }
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    Term c;
    c.coeff = t.coeff;
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.mono.exps[i] > full.exps[i]) throw InputError("polynomial uses a variable outside the universe");
      c.mono.exps[i] = static_cast<std::uint8_t>(full.exps[i] - t.mono.exps[i]);
    }
    c.mono.degree = full.degree - t.mono.degree;
    out.push_back(std::move(c));
  }
  return SparsePoly::from_terms(std::move(out));
}

SparsePoly cremona(const SparsePoly& f, int nvars) {
  std::vector<int> ids(nvars);
  for (int v = 1; v <= nvars; ++v) ids[v - 1] = v;
  return cremona(f, EdgeSet(ids));
}

SparsePoly resultant(const SparsePoly& f, const SparsePoly& g, int var) {
  const auto [f1, f0] = f.linear_split(var);
  const auto [g1, g0] = g.linear_split(var);
  return f1 * g0 - f0 * g1;
}

}  // namespace dgp
