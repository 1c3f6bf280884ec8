#include "dgp/cycle_basis.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

#include "dgp/error.hpp"
#include "dgp/matrix.hpp"

namespace dgp {

CycleMatrix small_cycle_basis(const MultiGraph& g) {
  if (g.degenerate()) throw InputError("cycle basis of a degenerate graph");
  if (!is_connected(g)) throw InputError("cycle basis requires a connected graph");
  const int n = g.vertex_count();
  const auto edges = g.edges();
  const int N = g.edge_count();
  std::vector<std::vector<int>> incident(n);  // edge indices, increasing id
  for (int i = 0; i < N; ++i) {
    incident[edges[i].source].push_back(i);
    if (!edges[i].is_loop()) incident[edges[i].target].push_back(i);
  }
  std::vector<int> parent_edge(n, -1), depth(n, -1);
  std::vector<char> in_tree(N, 0);
  if (n > 0) {
    std::deque<int> queue{0};
    depth[0] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int i : incident[u]) {
        const int w = edges[i].source == u ? edges[i].target : edges[i].source;
        if (depth[w] >= 0) continue;
        depth[w] = depth[u] + 1;
        parent_edge[w] = i;
        in_tree[i] = 1;
        queue.push_back(w);
      }
    }
  }
  CycleMatrix f;
  f.cols = N;
  for (const Edge& e : edges) f.column_ids.push_back(e.id);
  std::vector<int> tree_ids;
  for (int i = 0; i < N; ++i)
    if (in_tree[i]) tree_ids.push_back(edges[i].id);
  f.tree = EdgeSet(tree_ids);
  for (int i = 0; i < N; ++i) {
    if (in_tree[i]) continue;
    std::vector<int> row(N, 0);
    row[i] = 1;
    // Walk from target(e) to source(e) through the tree: climb from both
    // ends to their common ancestor.
    int a = edges[i].target, b = edges[i].source;
    std::vector<std::pair<int, int>> down;  // steps on the b side, reversed later
    while (a != b) {
      if (depth[a] >= depth[b]) {
        const int pe = parent_edge[a];
        // Moving from a to its parent.
        row[pe] += edges[pe].source == a ? 1 : -1;
        a = edges[pe].source == a ? edges[pe].target : edges[pe].source;
      } else {
        const int pe = parent_edge[b];
        // The walk traverses this edge from parent(b) down to b.
        row[pe] += edges[pe].target == b ? 1 : -1;
        b = edges[pe].source == b ? edges[pe].target : edges[pe].source;
      }
    }
    f.entries.insert(f.entries.end(), row.begin(), row.end());
    ++f.rows;
  }
  return f;
}

int cycle_minor_det(const CycleMatrix& f, const EdgeSet& t) {
  if (static_cast<int>(t.size()) != f.cols - f.rows)
    throw InputError("cycle minor needs exactly N - h deleted columns");
  std::vector<int> keep;
  for (int c = 0; c < f.cols; ++c)
    if (!t.contains(f.column_ids[c])) keep.push_back(c);
  for (int id : t)
    if (std::find(f.column_ids.begin(), f.column_ids.end(), id) == f.column_ids.end())
      throw InputError("unknown edge id " + std::to_string(id));
  const int h = f.rows;
  std::vector<long long> m(static_cast<std::size_t>(h) * h);
  for (int r = 0; r < h; ++r)
    for (int j = 0; j < h; ++j) m[r * h + j] = f.at(r, keep[j]);
  return static_cast<int>(det_bareiss(std::move(m), h));
}

BlockMatrix build_L(const MultiGraph& g, const CycleMatrix& f) {
  const int N = g.edge_count();
  if (f.cols != N) throw InputError("cycle matrix does not match the graph");
  for (int i = 0; i < N; ++i)
    if (f.column_ids[i] != g.edges()[i].id) throw InputError("cycle matrix does not match the graph");
  BlockMatrix m;
  m.size = N + f.rows;
  m.entries.assign(static_cast<std::size_t>(m.size) * m.size, SymEntry{});
  for (int i = 0; i < N; ++i) {
    m.index_ids.push_back(g.edges()[i].id);
    m.entries[i * m.size + i] = SymEntry{0, g.edges()[i].id};
  }
  for (int r = 0; r < f.rows; ++r)
    for (int i = 0; i < N; ++i) {
      const int v = f.at(r, i);
      if (!v) continue;
      m.entries[i * m.size + (N + r)] = SymEntry{v, 0};
      m.entries[(N + r) * m.size + i] = SymEntry{-v, 0};
    }
  return m;
}

BlockMatrix build_incidence_block(const MultiGraph& g) {
  const int N = g.edge_count();
  const int rows = std::max(0, g.vertex_count() - 1);
  BlockMatrix m;
  m.size = N + rows;
  m.entries.assign(static_cast<std::size_t>(m.size) * m.size, SymEntry{});
  for (int i = 0; i < N; ++i) {
    const Edge& e = g.edges()[i];
    m.index_ids.push_back(e.id);
    m.entries[i * m.size + i] = SymEntry{0, e.id};
    if (e.is_loop()) continue;
    auto put = [&](int vertex, int sign) {
      if (vertex == 0) return;
      const int r = N + vertex - 1;
      m.entries[i * m.size + r] = SymEntry{sign, 0};
      m.entries[r * m.size + i] = SymEntry{-sign, 0};
    };
    put(e.source, 1);
    put(e.target, -1);
  }
  return m;
}

std::string format_grid(const CycleMatrix& f) {
  std::ostringstream out;
  for (int r = 0; r < f.rows; ++r) {
    for (int c = 0; c < f.cols; ++c) out << (c ? " " : "") << f.at(r, c);
    out << '\n';
  }
  return out.str();
}

std::string format_grid(const BlockMatrix& m) {
  std::ostringstream out;
  for (int r = 0; r < m.size; ++r) {
    for (int c = 0; c < m.size; ++c) {
      const SymEntry& e = m.at(r, c);
      if (c) out << ' ';
      if (e.var)
        out << 'a' << e.var;
      else
        out << e.value;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<long long> invariant_factors(const CycleMatrix& f) {
  // Plain Smith reduction; entries stay tiny for cycle matrices.
  const int R = f.rows, C = f.cols;
  std::vector<long long> a(f.entries.begin(), f.entries.end());
  auto at = [&](int r, int c) -> long long& { return a[r * C + c]; };
  std::vector<long long> out;
  for (int k = 0; k < std::min(R, C); ++k) {
    int pr = -1, pc = -1;
    long long best = 0;
    for (int r = k; r < R; ++r)
      for (int c = k; c < C; ++c)
        if (at(r, c) && (best == 0 || std::llabs(at(r, c)) < best)) {
          best = std::llabs(at(r, c));
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    for (int c = 0; c < C; ++c) std::swap(at(k, c), at(pr, c));
    for (int r = 0; r < R; ++r) std::swap(at(r, k), at(r, pc));
    for (;;) {
      bool clean = true;
      for (int r = k + 1; r < R; ++r) {
        const long long q = at(r, k) / at(k, k);
        if (q)
          for (int c = k; c < C; ++c) at(r, c) -= q * at(k, c);
        if (at(r, k)) {
          clean = false;
          for (int c = 0; c < C; ++c) std::swap(at(k, c), at(r, c));
        }
      }
      for (int c = k + 1; c < C; ++c) {
        const long long q = at(k, c) / at(k, k);
        if (q)
          for (int r = k; r < R; ++r) at(r, c) -= q * at(r, k);
        if (at(k, c)) {
          clean = false;
          for (int r = 0; r < R; ++r) std::swap(at(r, k), at(r, c));
        }
      }
      if (!clean) continue;
      // Divisibility of the remaining block by the pivot.
      int bad_r = -1;
      for (int r = k + 1; r < R && bad_r < 0; ++r)
        for (int c = k + 1; c < C; ++c)
          if (at(r, c) % at(k, k)) {
            bad_r = r;
            break;
          }
      if (bad_r < 0) break;
      for (int c = k; c < C; ++c) at(k, c) += at(bad_r, c);
    }
    out.push_back(std::llabs(at(k, k)));
  }
  return out;
}

}  // namespace dgp
