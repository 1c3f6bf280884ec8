#include "dgp/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "dgp/error.hpp"
#include "dgp/matrix.hpp"

namespace dgp {

// ---------------------------------------------------------------- EdgeSet

EdgeSet::EdgeSet(std::initializer_list<int> ids) : EdgeSet(std::vector<int>(ids)) {}

EdgeSet::EdgeSet(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw InputError("edge set contains a duplicate id");
}

bool EdgeSet::contains(int id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return EdgeSet(std::move(out));
}

EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return EdgeSet(std::move(out));
}

EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return EdgeSet(std::move(out));
}

bool disjoint(const EdgeSet& a, const EdgeSet& b) { return set_intersection(a, b).empty(); }

bool is_subset(const EdgeSet& a, const EdgeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ------------------------------------------------------------- MultiGraph

MultiGraph::MultiGraph(int vertex_count, const std::vector<std::pair<int, int>>& endpoints) {
  std::vector<Edge> edges;
  edges.reserve(endpoints.size());
  int id = 1;
  for (auto [u, v] : endpoints) edges.push_back({id++, u, v});
  *this = from_edges(vertex_count, std::move(edges));
}

MultiGraph MultiGraph::from_edges(int vertex_count, std::vector<Edge> edges, bool degenerate) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.source < 0 || e.target < 0 || e.source >= vertex_count || e.target >= vertex_count)
      throw InputError("edge " + std::to_string(e.id) + " has an endpoint out of range");
    if (e.id < 1 || (i > 0 && edges[i - 1].id >= e.id))
      throw InputError("edge ids must be positive and strictly increasing");
  }
  MultiGraph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);
  g.degenerate_ = degenerate;
  return g;
}

int MultiGraph::edge_index(int id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, int v) { return e.id < v; });
  if (it == edges_.end() || it->id != id) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool MultiGraph::has_edge(int id) const { return edge_index(id) >= 0; }

const Edge& MultiGraph::edge(int id) const {
  int idx = edge_index(id);
  if (idx < 0) throw InputError("unknown edge id " + std::to_string(id));
  return edges_[idx];
}

EdgeSet MultiGraph::edge_ids() const {
  std::vector<int> ids;
  ids.reserve(edges_.size());
  for (const Edge& e : edges_) ids.push_back(e.id);
  return EdgeSet(std::move(ids));
}

int MultiGraph::max_edge_id() const { return edges_.empty() ? 0 : edges_.back().id; }

std::vector<int> MultiGraph::degrees() const {
  std::vector<int> deg(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.source];
    ++deg[e.target];
  }
  return deg;
}

namespace {

void require_edges(const MultiGraph& g, const EdgeSet& ids) {
  for (int id : ids)
    if (!g.has_edge(id)) throw InputError("unknown edge id " + std::to_string(id));
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

MultiGraph delete_edges(const MultiGraph& g, const EdgeSet& ids) {
  require_edges(g, ids);
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (!ids.contains(e.id)) kept.push_back(e);
  return MultiGraph::from_edges(g.vertex_count(), std::move(kept), g.degenerate());
}

MultiGraph contract_edges(const MultiGraph& g, const EdgeSet& ids) {
  require_edges(g, ids);
  int vertices = g.vertex_count();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  bool degenerate = g.degenerate();
  for (int id : ids) {
    auto it = std::find_if(edges.begin(), edges.end(), [id](const Edge& e) { return e.id == id; });
    const Edge c = *it;
    edges.erase(it);
    if (c.is_loop()) {
      degenerate = true;
      continue;
    }
    const int keep = std::min(c.source, c.target);
    const int gone = std::max(c.source, c.target);
    auto remap = [&](int v) {
      if (v == gone) return keep;
      return v > gone ? v - 1 : v;
    };
    for (Edge& e : edges) {
      e.source = remap(e.source);
      e.target = remap(e.target);
    }
    --vertices;
  }
  return MultiGraph::from_edges(vertices, std::move(edges), degenerate);
}

int component_count(const MultiGraph& g) {
  UnionFind uf(g.vertex_count());
  int components = g.vertex_count();
  for (const Edge& e : g.edges())
    if (uf.unite(e.source, e.target)) --components;
  return components;
}

bool is_connected(const MultiGraph& g) { return component_count(g) <= 1; }

int loop_number(const MultiGraph& g) {
  if (!is_connected(g)) throw InputError("loop number requires a connected graph");
  return g.edge_count() - g.vertex_count() + 1;
}

int vertex_rank(const MultiGraph& g) {
  if (!is_connected(g)) throw InputError("vertex rank requires a connected graph");
  return std::max(0, g.vertex_count() - 1);
}

bool is_log_divergent(const MultiGraph& g) {
  return is_connected(g) && g.edge_count() == 2 * loop_number(g);
}

namespace {

// Shortest cycle of length at most `limit` (nullopt if none). BFS from every
// root; a non-tree edge between u and w closes a cycle of length at most
// d(u) + d(w) + 1 and the minimum over roots is exact.
std::optional<int> bounded_girth(const MultiGraph& g, int limit) {
  if (limit < 1) return std::nullopt;
  for (const Edge& e : g.edges())
    if (e.is_loop()) return 1;
  if (limit < 2) return std::nullopt;
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, edge id)
  for (const Edge& e : g.edges()) {
    adj[e.source].push_back({e.target, e.id});
    adj[e.target].push_back({e.source, e.id});
  }
  for (int v = 0; v < n; ++v) {
    auto& a = adj[v];
    std::sort(a.begin(), a.end());
    for (std::size_t i = 1; i < a.size(); ++i)
      if (a[i].first == a[i - 1].first) return 2;
  }
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent_edge(n);
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent_edge[root] = 0;
    queue.assign(1, root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= std::min(best, limit + 1)) break;
      for (auto [w, id] : adj[u]) {
        if (id == parent_edge[u]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent_edge[w] = id;
          queue.push_back(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best <= limit) return best;
  return std::nullopt;
}

}  // namespace

std::optional<int> girth(const MultiGraph& g) {
  return bounded_girth(g, std::numeric_limits<int>::max() / 4);
}

bool has_cycle_at_most(const MultiGraph& g, int k) { return bounded_girth(g, k).has_value(); }

// --------------------------------------------------------- spanning trees

namespace {

class TreeWalker {
 public:
  TreeWalker(const MultiGraph& g, const std::function<void(const EdgeSet&)>& visit)
      : g_(g), visit_(visit), parent_(g.vertex_count()) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  void run() {
    if (g_.vertex_count() == 0) return;
    recurse(0, 0);
  }

 private:
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Can the chosen forest plus edges[from..] still span?
  bool spannable(std::size_t from) const {
    UnionFind uf(g_.vertex_count());
    int components = g_.vertex_count();
    for (int id : chosen_) {
      const Edge& e = g_.edge(id);
      if (uf.unite(e.source, e.target)) --components;
    }
    auto edges = g_.edges();
    for (std::size_t i = from; i < edges.size() && components > 1; ++i)
      if (uf.unite(edges[i].source, edges[i].target)) --components;
    return components == 1;
  }

  void recurse(std::size_t idx, int chosen) {
    const int need = g_.vertex_count() - 1;
    if (chosen == need) {
      visit_(EdgeSet(chosen_));
      return;
    }
    auto edges = g_.edges();
    if (idx == edges.size() || static_cast<int>(edges.size() - idx) < need - chosen) return;
    const Edge& e = edges[idx];
    const int a = find(e.source), b = find(e.target);
    if (a != b) {
      const int lo = std::min(a, b), hi = std::max(a, b);
      parent_[hi] = lo;
      chosen_.push_back(e.id);
      recurse(idx + 1, chosen + 1);
      chosen_.pop_back();
      parent_[hi] = hi;
    }
    if (spannable(idx + 1)) recurse(idx + 1, chosen);
  }

  const MultiGraph& g_;
  const std::function<void(const EdgeSet&)>& visit_;
  std::vector<int> parent_;
  std::vector<int> chosen_;
};

}  // namespace

void for_each_spanning_tree(const MultiGraph& g,
                            const std::function<void(const EdgeSet&)>& visit) {
  if (g.degenerate() || !is_connected(g)) return;
  TreeWalker(g, visit).run();
}

std::vector<EdgeSet> spanning_trees(const MultiGraph& g) {
  std::vector<EdgeSet> out;
  for_each_spanning_tree(g, [&](const EdgeSet& t) { out.push_back(t); });
  return out;
}

long long matrix_tree_count(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (n == 1) return 1;
  const int m = n - 1;
  std::vector<long long> lap(static_cast<std::size_t>(m) * m, 0);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    const int u = e.source, v = e.target;
    if (u < m) lap[u * m + u] += 1;
    if (v < m) lap[v * m + v] += 1;
    if (u < m && v < m) {
      lap[u * m + v] -= 1;
      lap[v * m + u] -= 1;
    }
  }
  return det_bareiss(std::move(lap), m);
}

// ----------------------------------------------------------------- cycles

std::vector<std::vector<int>> cycles_of_length(const MultiGraph& g, int length) {
  std::vector<std::vector<int>> out;
  if (length < 1) return out;
  auto edges = g.edges();
  if (length == 1) {
    for (const Edge& e : edges)
      if (e.is_loop()) out.push_back({e.id});
    return out;
  }
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (const Edge& e : edges) {
    if (e.is_loop()) continue;
    adj[e.source].push_back({e.target, e.id});
    adj[e.target].push_back({e.source, e.id});
  }
  std::vector<char> on_path(n, 0);
  std::vector<int> path;
  std::function<void(int, int, int, int)> extend = [&](int start, int u, int min_id, int left) {
    for (auto [w, id] : adj[u]) {
      if (id <= min_id) continue;
      if (left == 1) {
        if (w == start && path[1] < id) {
          path.push_back(id);
          out.push_back(path);
          path.pop_back();
        }
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(id);
      extend(start, w, min_id, left - 1);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (const Edge& e : edges) {
    if (e.is_loop()) continue;
    for (int dir = 0; dir < 2; ++dir) {
      const int a = dir ? e.target : e.source;
      const int b = dir ? e.source : e.target;
      if (length == 2) {
        for (auto [w, id] : adj[b])
          if (w == a && id > e.id && dir == 0) out.push_back({e.id, id});
        continue;
      }
      on_path[a] = on_path[b] = 1;
      path = {e.id};
      extend(a, b, e.id, length - 1);
      on_path[a] = on_path[b] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cycle_sequence(const MultiGraph& g, std::span<const int> ids) {
  const std::size_t k = ids.size();
  if (k == 0) return false;
  for (int id : ids)
    if (!g.has_edge(id)) return false;
  if (k == 1) return g.edge(ids[0]).is_loop();
  std::vector<int> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  // Walk: find the vertex shared by the last and first edge, then follow.
  const Edge& first = g.edge(ids[0]);
  const Edge& last = g.edge(ids[k - 1]);
  for (int start : {first.source, first.target}) {
    if (start != last.source && start != last.target) continue;
    int at = start;
    std::vector<int> seen;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      const Edge& e = g.edge(ids[i]);
      if (e.is_loop()) {
        ok = false;
        break;
      }
      if (std::find(seen.begin(), seen.end(), at) != seen.end()) ok = false;
      seen.push_back(at);
      if (e.source == at)
        at = e.target;
      else if (e.target == at)
        at = e.source;
      else
        ok = false;
    }
    if (ok && at == start) return true;
  }
  return false;
}

}  // namespace dgp
