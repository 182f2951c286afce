#pragma once

// Worked examples shared by the test suites.

#include "eqdecomp/graph.hpp"
#include "eqdecomp/partition.hpp"
#include "eqdecomp/polynomial.hpp"

#include <initializer_list>
#include <vector>

namespace fixture {

using namespace eqdecomp;

inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline RationalMatrix rational_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  return to_rational(int_matrix(rows));
}

inline SignedDigraph labelled(const IntMatrix& a) {
  std::vector<VertexId> labels;
  for (Index i = 0; i < a.rows(); ++i) labels.push_back({static_cast<int>(i + 1)});
  return SignedDigraph(labels, a);
}

/// Polynomial from ascending integer coefficients.
inline UniPoly poly(std::initializer_list<int> ascending) {
  std::vector<Rational> c;
  for (int v : ascending) c.emplace_back(v);
  return UniPoly(c);
}

inline UniPoly x_minus(int root) { return UniPoly::linear(Rational(root)); }

// C4 with cells {v1, v2}, {v3, v4}: A = [[A1, I], [I, A1]], A1 = [[0,1],[1,0]].
inline SignedDigraph c4() {
  return labelled(int_matrix({{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}}));
}
/// Representatives are the second vertex of each cell.
inline Partition c4_partition() { return Partition({{0, 1}, {2, 3}}, {1, 3}, 4); }

// The 5-vertex digraph with cells {v1, v2, v3}, {v4, v5}.
inline IntMatrix digraph5_matrix() {
  return int_matrix({{1, 1, 1, 1, 0}, {1, 1, 1, 0, 1}, {2, 0, 1, 0, 1}, {2, 0, 0, 0, 1}, {0, 2, 0, 1, 0}});
}
inline SignedDigraph digraph5() { return labelled(digraph5_matrix()); }
/// Representatives v3 and v5.
inline Partition digraph5_partition() { return Partition({{0, 1, 2}, {3, 4}}, {2, 4}, 5); }

// Petersen graph: outer pentagram on v1..v5, inner 5-cycle on v6..v10, spokes vi -- v(i+5).
inline IntMatrix petersen_matrix() {
  const IntMatrix a1 = int_matrix({{0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}, {1, 0, 0, 0, 1}, {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}});
  const IntMatrix a2 = int_matrix({{0, 1, 0, 0, 1}, {1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}, {1, 0, 0, 1, 0}});
  IntMatrix a = IntMatrix::Zero(10, 10);
  a.block(0, 0, 5, 5) = a1;
  a.block(5, 5, 5, 5) = a2;
  a.block(0, 5, 5, 5) = IntMatrix::Identity(5, 5);
  a.block(5, 0, 5, 5) = IntMatrix::Identity(5, 5);
  return a;
}
inline SignedDigraph petersen() { return labelled(petersen_matrix()); }
/// Outer and inner vertices, representatives v5 and v10.
inline Partition petersen_pi1() { return Partition({{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}, {4, 9}, 10); }
/// Distance partition from v1: {v1}, its neighbours, the rest.
inline Partition petersen_pi2() {
  const IntMatrix a = petersen_matrix();
  std::vector<Index> near, far;
  for (Index v = 1; v < 10; ++v) (a(0, v) == 1 ? near : far).push_back(v);
  return Partition({{0}, near, far}, 10);
}

}  // namespace fixture
