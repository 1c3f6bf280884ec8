#include "dgp/face.hpp"

#include <algorithm>

#include "dgp/dodgson.hpp"
#include "dgp/error.hpp"

namespace dgp {

FaceAdapted face_adapted(const MultiGraph& g, const std::vector<int>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 3 || !is_cycle_sequence(g, cycle)) throw InputError("edges do not form a cycle in the given order");
  const Edge& first = g.edge(cycle.front());
  const Edge& last = g.edge(cycle.back());
  int at = (first.source == last.source || first.source == last.target) ? first.source : first.target;
  std::vector<Edge> edges;
  FaceAdapted out;
  out.original_id.push_back(0);
  int id = 1;
  for (int c : cycle) {
    const Edge& e = g.edge(c);
    const int next = e.source == at ? e.target : e.source;
    edges.push_back({id++, at, next});
    out.original_id.push_back(c);
    at = next;
  }
  for (const Edge& e : g.edges()) {
    if (std::find(cycle.begin(), cycle.end(), e.id) != cycle.end()) continue;
    edges.push_back({id++, e.source, e.target});
    out.original_id.push_back(e.id);
  }
  out.graph = MultiGraph::from_edges(g.vertex_count(), std::move(edges), g.degenerate());
  return out;
}

TriangleData triangle_data(const MultiGraph& adapted) {
  if (!is_cycle_sequence(adapted, std::vector<int>{1, 2, 3}))
    throw InputError("edges 1, 2, 3 do not form a triangle");
  TriangleData d;
  d.g[0] = dual_dodgson(adapted, {1, 2}, {1, 2}, {3});
  d.g[1] = dual_dodgson(adapted, {2}, {3}, {1});
  d.g[2] = -dual_dodgson(adapted, {1}, {3}, {2});
  d.g[3] = dual_dodgson(adapted, {1}, {2}, {3});
  d.g123 = dual_dodgson(adapted, {}, {}, {1, 2, 3});
  return d;
}

// One more than the printed r_b. With minors taken as plain row/column
// deletions of L_G this is the only sign choice that satisfies the face
// relations; b^i_j is negative for (i,j) in {(1,3), (2,3), (3,2), (4,2)}.
int b_sign_exponent(int i, int k, int t) {
  return ((k - i) * (t - i) > 0 ? k - t : k - t - 1) + 1;
}

FourFaceData fourface_data(const MultiGraph& adapted) {
  if (!is_cycle_sequence(adapted, std::vector<int>{1, 2, 3, 4}))
    throw InputError("edges 1, 2, 3, 4 do not form a 4-cycle");
  FourFaceData d;
  d.a = dual_dodgson(adapted, {1, 2, 3}, {1, 2, 3}, {4});
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      std::vector<int> rest;
      for (int x = 1; x <= 4; ++x)
        if (x != i && x != j) rest.push_back(x);
      const int k = rest[0], t = rest[1];
      SparsePoly c = dual_dodgson(adapted, {i}, {j}, EdgeSet{k, t});
      d.c[i][j] = ((i - j - 1) % 2 == 0) ? c : -c;
      SparsePoly b = dual_dodgson(adapted, EdgeSet{k, i}, EdgeSet{i, t}, {j});
      d.b[i][j] = (b_sign_exponent(i, k, t) % 2 == 0) ? b : -b;
    }
  return d;
}

TriangleData triangle_data(const MultiGraph& g, const std::array<int, 3>& tri) {
  return triangle_data(face_adapted(g, {tri.begin(), tri.end()}).graph);
}

FourFaceData fourface_data(const MultiGraph& g, const std::array<int, 4>& face) {
  return fourface_data(face_adapted(g, {face.begin(), face.end()}).graph);
}

int shared_vertex(const MultiGraph& g, int e, int f) {
  const Edge& a = g.edge(e);
  const Edge& b = g.edge(f);
  for (int v : {a.source, a.target})
    if (v == b.source || v == b.target) return v;
  throw InputError("edges do not meet");
}

MultiGraph face_surgery(const MultiGraph& adapted) {
  if (!is_cycle_sequence(adapted, std::vector<int>{1, 2, 3, 4}))
    throw InputError("edges 1, 2, 3, 4 do not form a 4-cycle");
  const int top = shared_vertex(adapted, 1, 2);
  const int right = shared_vertex(adapted, 2, 3);
  const int bottom = shared_vertex(adapted, 3, 4);
  const int left = shared_vertex(adapted, 4, 1);
  // Merge `right` into `left`, then compact the vertex list.
  const int keep = std::min(left, right), gone = std::max(left, right);
  auto remap = [&](int v) {
    if (v == gone) v = keep;
    return v > gone ? v - 1 : v;
  };
  std::vector<Edge> edges;
  for (const Edge& e : adapted.edges())
    if (e.id > 4) edges.push_back({e.id, remap(e.source), remap(e.target)});
  const int n = adapted.max_edge_id();
  edges.push_back({n + 1, remap(top), remap(keep)});
  edges.push_back({n + 2, remap(keep), remap(bottom)});
  return MultiGraph::from_edges(adapted.vertex_count() - 1, std::move(edges), adapted.degenerate());
}

}  // namespace dgp
