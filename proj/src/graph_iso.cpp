#include "dgp/graph_iso.hpp"

#include <algorithm>
#include <functional>

namespace dgp {

namespace {

using Mult = std::vector<std::vector<int>>;

Mult multiplicities(const MultiGraph& g) {
  Mult m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) {
    ++m[e.source][e.target];
    if (!e.is_loop()) ++m[e.target][e.source];
  }
  return m;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::vector<std::uint64_t> refined_hashes(const Mult& m) {
  // Colour refinement on raw hashes, so colours are comparable across graphs.
  const int n = static_cast<int>(m.size());
  std::vector<std::uint64_t> colour(n);
  for (int v = 0; v < n; ++v) {
    int deg = 0;
    for (int w = 0; w < n; ++w) deg += (w == v ? 2 : 1) * m[v][w];
    colour[v] = mix(static_cast<std::uint64_t>(deg), static_cast<std::uint64_t>(m[v][v]));
  }
  for (int round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<std::uint64_t, int>> nb;
      for (int w = 0; w < n; ++w)
        if (w != v && m[v][w]) nb.push_back({colour[w], m[v][w]});
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = colour[v];
      for (auto [c, k] : nb) h = mix(mix(h, c), static_cast<std::uint64_t>(k));
      next[v] = h;
    }
    colour = next;
  }
  return colour;
}

}  // namespace

std::uint64_t invariant_hash(const MultiGraph& g) {
  auto h = refined_hashes(multiplicities(g));
  std::sort(h.begin(), h.end());
  std::uint64_t out = mix(static_cast<std::uint64_t>(g.vertex_count()), static_cast<std::uint64_t>(g.edge_count()));
  for (auto x : h) out = mix(out, x);
  return out;
}

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const int n = a.vertex_count();
  const Mult ma = multiplicities(a), mb = multiplicities(b);
  const auto ha = refined_hashes(ma), hb = refined_hashes(mb);
  {
    auto sa = ha, sb = hb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // Order a's vertices so that each one is adjacent to earlier ones when
  // possible, which makes the adjacency check prune early.
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  while (static_cast<int>(order.size()) < n) {
    int best = -1, best_links = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : order) links += ma[u][v] ? 1 : 0;
      if (links > best_links) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int depth) {
    if (depth == n) return true;
    const int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[w] || hb[w] != ha[v] || mb[w][w] != ma[v][v]) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        const int u = order[i];
        if (ma[u][v] != mb[map[u]][w]) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return extend(0);
}

bool IsoClassSet::insert(const MultiGraph& g) {
  const auto h = invariant_hash(g);
  auto& bucket = buckets_[h];
  for (std::size_t idx : bucket)
    if (isomorphic(items_[idx], g)) return false;
  bucket.push_back(items_.size());
  items_.push_back(g);
  return true;
}

std::vector<std::vector<MultiGraph>> connected_graphs_up_to(int edges, GraphClass cls) {
  std::vector<std::vector<MultiGraph>> levels;
  levels.push_back({MultiGraph(1, {})});
  for (int m = 1; m <= edges; ++m) {
    IsoClassSet next;
    for (const MultiGraph& g : levels.back()) {
      std::vector<std::pair<int, int>> base;
      for (const Edge& e : g.edges()) base.push_back({e.source, e.target});
      const int n = g.vertex_count();
      const Mult mu = multiplicities(g);
      auto add = [&](int vertices, int u, int v) {
        auto e = base;
        e.push_back({u, v});
        next.insert(MultiGraph(vertices, e));
      };
      for (int u = 0; u < n; ++u) {
        add(n + 1, u, n);
        if (cls == GraphClass::multigraph) add(n, u, u);
        for (int v = u + 1; v < n; ++v)
          if (cls != GraphClass::simple || mu[u][v] == 0) add(n, u, v);
      }
    }
    levels.push_back(next.items());
  }
  return levels;
}

}  // namespace dgp
