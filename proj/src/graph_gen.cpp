#include "dgp/graph_gen.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "dgp/error.hpp"

namespace dgp {

MultiGraph cycle_graph(int n) {
  if (n < 1) throw InputError("cycle needs at least one edge");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return MultiGraph(n, e);
}

MultiGraph path_graph(int vertices) {
  if (vertices < 1) throw InputError("path needs a vertex");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < vertices; ++i) e.push_back({i, i + 1});
  return MultiGraph(vertices, e);
}

MultiGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return MultiGraph(n, e);
}

MultiGraph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return MultiGraph(a + b, e);
}

MultiGraph banana(int k) {
  return MultiGraph(2, std::vector<std::pair<int, int>>(k, {0, 1}));
}

MultiGraph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return MultiGraph(10, e);
}

MultiGraph robertson_graph() {
  static constexpr std::array<int, 19> chords = {8, 4, 7, 4, 8, 5, 7, 4, 7, 8,
                                                 4, 5, 7, 8, 4, 8, 4, 8, 4};
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 19; ++i) e.push_back({i, (i + 1) % 19});
  for (int i = 0; i < 19; ++i) e.push_back({i, (i + chords[i]) % 19});
  MultiGraph g(19, e);
  const auto deg = g.degrees();
  if (g.edge_count() != 38 || std::any_of(deg.begin(), deg.end(), [](int d) { return d != 4; }) ||
      girth(g) != 5)
    throw ConsistencyError("embedded Robertson graph failed its property check");
  return g;
}

MultiGraph delete_vertex(const MultiGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw InputError("vertex out of range");
  std::vector<std::pair<int, int>> e;
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  for (const Edge& ed : g.edges())
    if (ed.source != v && ed.target != v) e.push_back({shift(ed.source), shift(ed.target)});
  return MultiGraph(g.vertex_count() - 1, e);
}

MultiGraph robertson_decompleted() { return delete_vertex(robertson_graph(), 0); }

std::optional<MultiGraph> named_graph(const std::string& raw) {
  std::string name;
  for (char c : raw) name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  auto number_after = [&](std::size_t skip) -> std::optional<int> {
    const std::string digits = name.substr(skip);
    if (digits.empty() || digits.size() > 3 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return std::nullopt;
    return std::stoi(digits);
  };
  if (name == "petersen") return petersen();
  if (name == "robertson") return robertson_graph();
  if (name == "robertson-decompleted") return robertson_decompleted();
  if (name.rfind("banana", 0) == 0)
    if (auto k = number_after(6); k && *k >= 1) return banana(*k);
  if (name.rfind("path", 0) == 0)
    if (auto k = number_after(4); k && *k >= 1) return path_graph(*k);
  if (name.size() >= 2 && name[0] == 'c')
    if (auto k = number_after(1); k && *k >= 1) return cycle_graph(*k);
  if (name.size() >= 2 && name[0] == 'k') {
    const auto comma = name.find(',');
    if (comma == std::string::npos) {
      if (auto k = number_after(1); k && *k >= 1) return complete_graph(*k);
    } else {
      const std::string left = name.substr(1, comma - 1), right = name.substr(comma + 1);
      auto is_num = [](const std::string& s) {
        return !s.empty() && s.size() <= 3 &&
               std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      };
      if (is_num(left) && is_num(right)) return complete_bipartite(std::stoi(left), std::stoi(right));
    }
  }
  return std::nullopt;
}

namespace {

bool simple_ok(const std::vector<std::pair<int, int>>& e, int u, int v) {
  if (u == v) return false;
  for (auto [a, b] : e)
    if ((a == u && b == v) || (a == v && b == u)) return false;
  return true;
}

// Appends random edges until `target` edges exist. Returns false if the
// simple-graph constraint made that impossible.
bool fill_edges(Rng& rng, int vertices, std::vector<std::pair<int, int>>& e, int target,
                bool loops, bool multi) {
  int attempts = 0;
  while (static_cast<int>(e.size()) < target) {
    if (++attempts > 10000) return false;
    int u = rng.range(0, vertices - 1), v = rng.range(0, vertices - 1);
    if (u == v && !loops) continue;
    if (!multi && !simple_ok(e, u, v)) continue;
    e.push_back({u, v});
  }
  return true;
}

}  // namespace

MultiGraph random_connected(Rng& rng, const RandomGraphOptions& opt) {
  for (;;) {
    const int v = rng.range(opt.min_vertices, opt.max_vertices);
    const int lo = std::max(opt.min_edges, v - 1);
    if (lo > opt.max_edges) continue;
    const int n = rng.range(lo, opt.max_edges);
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < v; ++i) e.push_back({rng.range(0, i - 1), i});
    if (!fill_edges(rng, v, e, n, opt.loops, opt.multi_edges)) continue;
    for (auto& [a, b] : e)
      if (rng.coin()) std::swap(a, b);
    for (std::size_t i = e.size(); i > 1; --i) std::swap(e[i - 1], e[rng.below(i)]);
    // Random vertex relabeling so vertex 0 is not always the tree root.
    std::vector<int> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    for (auto& [a, b] : e) {
      a = perm[a];
      b = perm[b];
    }
    return MultiGraph(v, e);
  }
}

namespace {

MultiGraph planted(Rng& rng, int face, int max_edges, bool multi) {
  if (max_edges < face) throw InputError("edge budget smaller than the planted cycle");
  for (;;) {
    const int extra_vertices = rng.range(0, 3);
    const int v = face + extra_vertices;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < face; ++i) e.push_back({i, (i + 1) % face});
    for (int i = face; i < v; ++i) e.push_back({rng.range(0, i - 1), i});
    if (static_cast<int>(e.size()) > max_edges) continue;
    const int n = rng.range(static_cast<int>(e.size()), max_edges);
    if (!fill_edges(rng, v, e, n, multi, multi)) continue;
    for (std::size_t i = face; i < e.size(); ++i)
      if (rng.coin()) std::swap(e[i].first, e[i].second);
    // Face edges stay first and in cyclic order; reverse some orientations.
    for (int i = 0; i < face; ++i)
      if (rng.coin()) std::swap(e[i].first, e[i].second);
    for (std::size_t i = e.size(); i > static_cast<std::size_t>(face) + 1; --i)
      std::swap(e[i - 1], e[face + rng.below(i - face)]);
    return MultiGraph(v, e);
  }
}

}  // namespace

MultiGraph random_with_triangle(Rng& rng, int max_edges, bool multi_edges) {
  return planted(rng, 3, max_edges, multi_edges);
}

MultiGraph random_with_square(Rng& rng, int max_edges, bool multi_edges) {
  return planted(rng, 4, max_edges, multi_edges);
}

}  // namespace dgp
