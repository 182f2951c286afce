#pragma once

// Independent reference computations and random instance generators for the
// test suites. Nothing here calls the determinant, characteristic polynomial
// or refinement code under test.

#include "eqdecomp/graph.hpp"
#include "eqdecomp/partition.hpp"
#include "eqdecomp/polynomial.hpp"
#include "eqdecomp/scalar.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using eqdecomp::Index;
using eqdecomp::IntMatrix;
using eqdecomp::Integer;
using eqdecomp::Rational;
using eqdecomp::RationalMatrix;
using eqdecomp::UniPoly;

/// Cofactor expansion along the first row.
inline Rational laplace_det(const RationalMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational total(0);
  for (Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (Index i = 1; i < n; ++i)
      for (Index k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    const Rational term = m(0, j) * laplace_det(minor);
    total += (j % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

/// Plain Gaussian elimination with fractions.
inline Rational gauss_det(RationalMatrix m) {
  const Index n = m.rows();
  Rational det(1);
  for (Index k = 0; k < n; ++k) {
    Index pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      det = -det;
    }
    det *= m(k, k);
    for (Index i = k + 1; i < n; ++i) {
      const Rational f = m(i, k) / m(k, k);
      for (Index j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

inline Rational char_poly_at(const RationalMatrix& m, const Rational& x) {
  RationalMatrix shifted = -m;
  for (Index i = 0; i < m.rows(); ++i) shifted(i, i) += x;
  return gauss_det(shifted);
}

/// prod (x - r) over the given roots.
inline UniPoly from_roots(const std::vector<Rational>& roots) {
  UniPoly p = UniPoly::constant(Rational(1));
  for (const auto& r : roots) p = p * UniPoly::linear(r);
  return p;
}

/// Ihara reciprocal of a (q+1)-regular graph from its adjacency spectrum:
/// (1 - t^2)^(m - n) prod (1 - lambda t + q t^2).
inline UniPoly ihara_from_spectrum(const std::vector<Rational>& eigenvalues, int q, int m, int n) {
  UniPoly out = UniPoly::constant(Rational(1));
  for (const auto& lambda : eigenvalues)
    out = out * UniPoly(std::vector<Rational>{Rational(1), Rational(-lambda), Rational(q)});
  const UniPoly one_minus_t2(std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
  for (int k = 0; k < m - n; ++k) out = out * one_minus_t2;
  return out;
}

/// Bartholdi reciprocal at a point from the 2m x 2m arc matrix:
/// det(I - t (B - (1 - u) J)), B(e, f) = [head e = tail f], J(e, f) = [f = e^-1].
inline Rational bartholdi_at_point(const IntMatrix& a, const Rational& u, const Rational& t) {
  struct Arc {
    Index from, to, reverse;
  };
  std::vector<Arc> arcs;
  const Index n = a.rows();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Integer k = 0; k < a(i, j); ++k) {
        const auto e = static_cast<Index>(arcs.size());
        arcs.push_back({i, j, e + 1});
        arcs.push_back({j, i, e});
      }
  const auto m = static_cast<Index>(arcs.size());
  RationalMatrix op = RationalMatrix::Identity(m, m);
  for (Index e = 0; e < m; ++e)
    for (Index f = 0; f < m; ++f) {
      Rational entry(0);
      if (arcs[e].to == arcs[f].from) entry += 1;
      if (arcs[e].reverse == f) entry -= (1 - u);
      op(e, f) -= t * entry;
    }
  return gauss_det(op);
}

// ---- partitions ----

/// Every set partition of {0..n-1} as cell lists (restricted growth strings).
inline void for_each_set_partition(Index n, const std::function<void(const std::vector<std::vector<Index>>&)>& visit) {
  std::vector<Index> block(static_cast<std::size_t>(n), 0);
  std::function<void(Index, Index)> rec = [&](Index v, Index used) {
    if (v == n) {
      std::vector<std::vector<Index>> cells(static_cast<std::size_t>(used));
      for (Index i = 0; i < n; ++i) cells[static_cast<std::size_t>(block[static_cast<std::size_t>(i)])].push_back(i);
      visit(cells);
      return;
    }
    for (Index b = 0; b <= used; ++b) {
      block[static_cast<std::size_t>(v)] = b;
      rec(v + 1, b == used ? used + 1 : used);
    }
  };
  if (n == 0)
    visit({});
  else
    rec(0, 0);
}

/// Direct definition: every block of m has constant row sums.
inline bool is_equitable(const RationalMatrix& m, const std::vector<std::vector<Index>>& cells) {
  for (const auto& ci : cells)
    for (const auto& cj : cells) {
      std::optional<Rational> sum;
      for (Index v : ci) {
        Rational s(0);
        for (Index w : cj) s += m(v, w);
        if (sum && *sum != s) return false;
        sum = s;
      }
    }
  return true;
}

inline bool cells_refine(const std::vector<std::vector<Index>>& fine, const std::vector<std::vector<Index>>& coarse) {
  for (const auto& f : fine) {
    const bool inside = std::any_of(coarse.begin(), coarse.end(), [&](const auto& c) {
      return std::all_of(f.begin(), f.end(), [&](Index v) { return std::find(c.begin(), c.end(), v) != c.end(); });
    });
    if (!inside) return false;
  }
  return true;
}

// ---- random instances ----

inline IntMatrix random_int_matrix(std::mt19937& rng, Index rows, Index cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline RationalMatrix random_rational_matrix(std::mt19937& rng, Index n) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  RationalMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

inline eqdecomp::SignedDigraph graph_from(const IntMatrix& a) {
  std::vector<eqdecomp::VertexId> labels;
  for (Index i = 0; i < a.rows(); ++i) labels.push_back({static_cast<int>(i + 1)});
  return eqdecomp::SignedDigraph(labels, a);
}

/// Simple undirected G(n, p).
inline IntMatrix gnp(std::mt19937& rng, Index n, double p) {
  std::bernoulli_distribution edge(p);
  IntMatrix a = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (edge(rng)) a(i, j) = a(j, i) = 1;
  return a;
}

inline std::vector<Index> random_cell_sizes(std::mt19937& rng, Index n) {
  std::vector<Index> sizes;
  std::uniform_int_distribution<Index> pick(1, std::max<Index>(1, n / 2 + 1));
  Index left = n;
  while (left > 0) {
    const Index s = std::min(left, pick(rng));
    sizes.push_back(s);
    left -= s;
  }
  return sizes;
}

/// A signed digraph with a planted equitable partition: block (i, j) has every
/// row summing to the same random value.
inline IntMatrix planted_equitable_digraph(std::mt19937& rng, const std::vector<Index>& sizes) {
  const Index n = std::accumulate(sizes.begin(), sizes.end(), Index(0));
  IntMatrix a = IntMatrix::Zero(n, n);
  Index ri = 0;
  for (Index si : sizes) {
    Index cj = 0;
    for (Index sj : sizes) {
      IntMatrix block = random_int_matrix(rng, si, sj, -1, 2);
      // Match every row's sum to row 0 by adjusting one entry.
      for (Index r = 1; r < si; ++r) {
        Integer diff = Integer(block.row(0).sum()) - Integer(block.row(r).sum());
        std::uniform_int_distribution<Index> col(0, sj - 1);
        block(r, col(rng)) += diff;
      }
      a.block(ri, cj, si, sj) = block;
      cj += sj;
    }
    ri += si;
  }
  return a;
}

/// Simple undirected cyclic lift: base graph on r vertices, k-fold cover with
/// random voltages in Z_k. Vertex (i, s) is i * k + s. The fibres form an
/// equitable partition.
inline IntMatrix cyclic_lift(std::mt19937& rng, const IntMatrix& base, Index k) {
  const Index r = base.rows();
  IntMatrix a = IntMatrix::Zero(r * k, r * k);
  std::uniform_int_distribution<Index> voltage(0, k - 1);
  for (Index i = 0; i < r; ++i)
    for (Index j = i + 1; j < r; ++j) {
      if (base(i, j) == 0) continue;
      const Index g = voltage(rng);
      for (Index s = 0; s < k; ++s) {
        const Index u = i * k + s;
        const Index v = j * k + (s + g) % k;
        a(u, v) = a(v, u) = 1;
      }
    }
  return a;
}

inline bool connected(const IntMatrix& a) {
  const Index n = a.rows();
  if (n == 0) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Index> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    for (Index w = 0; w < n; ++w)
      if ((a(v, w) != 0 || a(w, v) != 0) && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Connected simple undirected graph on at most 8 vertices with some symmetry:
/// alternately a cyclic lift of a small base graph or a connected G(n, p).
inline IntMatrix random_connected_graph(std::mt19937& rng, int variant) {
  for (;;) {
    IntMatrix a;
    if (variant % 2 == 0) {
      std::uniform_int_distribution<Index> rdist(1, 4);
      const Index r = rdist(rng);
      std::uniform_int_distribution<Index> kdist(2, std::max<Index>(2, 8 / r));
      const Index k = kdist(rng);
      IntMatrix base = gnp(rng, r, 0.7);
      a = cyclic_lift(rng, base, k);
      // Optionally join fibres to themselves as a k-cycle.
      std::bernoulli_distribution ring(0.5);
      for (Index i = 0; i < r && k > 2; ++i)
        if (ring(rng))
          for (Index s = 0; s < k; ++s) {
            const Index u = i * k + s, v = i * k + (s + 1) % k;
            a(u, v) = a(v, u) = 1;
          }
    } else {
      std::uniform_int_distribution<Index> ndist(2, 8);
      a = gnp(rng, ndist(rng), 0.45);
    }
    if (a.rows() <= 8 && connected(a)) return a;
  }
}

/// Random regular simple graph on n <= 4 vertices.
inline IntMatrix random_regular(std::mt19937& rng, Index n) {
  std::vector<IntMatrix> options;
  options.push_back(IntMatrix::Zero(n, n));
  IntMatrix complete = IntMatrix::Ones(n, n) - IntMatrix::Identity(n, n);
  if (n >= 2) options.push_back(complete);
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  if (n == 4) {
    IntMatrix matching = IntMatrix::Zero(4, 4);
    matching(perm[0], perm[1]) = matching(perm[1], perm[0]) = 1;
    matching(perm[2], perm[3]) = matching(perm[3], perm[2]) = 1;
    options.push_back(matching);
    IntMatrix cycle = IntMatrix::Zero(4, 4);
    for (std::size_t s = 0; s < 4; ++s) cycle(perm[s], perm[(s + 1) % 4]) = cycle(perm[(s + 1) % 4], perm[s]) = 1;
    options.push_back(cycle);
  }
  std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
  return options[pick(rng)];
}

/// A(H[X_1..X_r]) assembled entry by entry.
inline IntMatrix join_adjacency(const IntMatrix& h, const std::vector<IntMatrix>& xs) {
  std::vector<Index> offset{0};
  for (const auto& x : xs) offset.push_back(offset.back() + x.rows());
  IntMatrix a = IntMatrix::Zero(offset.back(), offset.back());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j)
      for (Index p = 0; p < xs[i].rows(); ++p)
        for (Index q = 0; q < xs[j].rows(); ++q)
          a(offset[i] + p, offset[j] + q) = i == j ? Integer(xs[i](p, q)) : Integer(h(i, j));
  return a;
}

/// Random H with regular components on at most 4 vertices, connected once joined.
struct JoinInstance {
  IntMatrix h;
  std::vector<IntMatrix> xs;
};

inline JoinInstance random_join_instance(std::mt19937& rng) {
  std::uniform_int_distribution<Index> rdist(1, 3), ndist(1, 4);
  for (;;) {
    JoinInstance s;
    const Index r = rdist(rng);
    s.h = gnp(rng, r, 0.7);
    for (Index i = 0; i < r; ++i) s.xs.push_back(random_regular(rng, ndist(rng)));
    if (connected(join_adjacency(s.h, s.xs))) return s;
  }
}

}  // namespace oracle
