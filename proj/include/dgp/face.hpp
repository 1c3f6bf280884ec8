#pragma once

#include <array>
#include <vector>

#include "dgp/graph.hpp"
#include "dgp/poly.hpp"

namespace dgp {

/// A graph relabeled so that a chosen cycle becomes edges 1..k, in cyclic
/// order and oriented along the cycle. The remaining edges follow as
/// k+1..N in their original order and orientation.
struct FaceAdapted {
  MultiGraph graph;
  std::vector<int> original_id;  // original_id[new_id], index 0 unused
};

/// Throws InputError unless `cycle` (edge ids in cyclic order, length >= 3)
/// is a cycle of g.
FaceAdapted face_adapted(const MultiGraph& g, const std::vector<int>& cycle);

/// Triangle polynomials of a face-adapted graph whose edges 1, 2, 3 form
/// the triangle: g[0] = phi^{12}_3, g[k] = (-1)^{j-i+1} phi^{i,j}_k for
/// {i,j,k} = {1,2,3}, i < j, and g123 = phi_{123}.
struct TriangleData {
  std::array<SparsePoly, 4> g;
  SparsePoly g123;
};

/// 4-face polynomials of a face-adapted graph whose edges 1..4 bound the
/// face: a = phi^{123}_4, c[i][j] = (-1)^{i-j-1} phi^{i,j}_{kt} and
/// b[i][j] = (-1)^{r} phi^{ki,it}_j with {k,t} the other two face edges and
/// r = b_sign_exponent(i, k, t). Indices 1..4.
struct FourFaceData {
  SparsePoly a;
  std::array<std::array<SparsePoly, 5>, 5> b;
  std::array<std::array<SparsePoly, 5>, 5> c;
};

TriangleData triangle_data(const MultiGraph& adapted);
FourFaceData fourface_data(const MultiGraph& adapted);

/// Convenience: adapt, then extract. The polynomials use the adapted labels.
TriangleData triangle_data(const MultiGraph& g, const std::array<int, 3>& tri);
FourFaceData fourface_data(const MultiGraph& g, const std::array<int, 4>& face);

/// Sign exponent of b^i_j: 1 + (k - t) if (k-i)(t-i) > 0, else k - t.
int b_sign_exponent(int i, int k, int t);

/// The graph G' obtained from a face-adapted G by deleting edges 1..4,
/// identifying the vertex shared by e1, e4 with the one shared by e2, e3
/// into M, and adding e_s from the e1/e2 vertex to M and e_t from M to the
/// e3/e4 vertex. Surviving edges keep their ids; e_s = N+1, e_t = N+2.
MultiGraph face_surgery(const MultiGraph& adapted);

/// Vertex shared by two face-adapted cycle edges that meet.
int shared_vertex(const MultiGraph& g, int e, int f);

}  // namespace dgp
