#include "eqdecomp/errors.hpp"
#include "eqdecomp/graph.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace eqdecomp;
using fixture::int_matrix;

namespace {

std::vector<VertexId> ids(std::initializer_list<int> labels) {
  std::vector<VertexId> out;
  for (int l : labels) out.push_back({l});
  return out;
}

SignedDigraph random_labelled(std::mt19937& rng, std::size_t count) {
  std::vector<int> pool{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<VertexId> labels;
  for (std::size_t i = 0; i < count; ++i) labels.push_back({pool[i]});
  const auto n = static_cast<Index>(count);
  return SignedDigraph(labels, oracle::random_int_matrix(rng, n, n, -2, 2));
}

}  // namespace

TEST_CASE("build_graph") {
  const std::vector<Edge> c4_edges{{{1}, {2}}, {{3}, {4}}, {{1}, {3}}, {{2}, {4}}};
  CHECK(build_graph(4, c4_edges, true) == fixture::c4());
  CHECK(build_graph(3, {}, true).adjacency() == IntMatrix::Zero(3, 3));

  std::vector<Edge> arcs;
  const IntMatrix a = fixture::digraph5_matrix();
  for (Index i = 0; i < 5; ++i)
    for (Index j = 0; j < 5; ++j)
      for (Integer k = 0; k < a(i, j); ++k) arcs.push_back({{static_cast<int>(i + 1)}, {static_cast<int>(j + 1)}});
  CHECK(arcs.size() == 18);  // total multiplicity of the displayed matrix
  CHECK(build_graph(5, arcs, false).adjacency() == a);

  CHECK_THROWS_AS(build_graph(3, std::vector<Edge>{{{1}, {4}}}, true), ValidationError);
  CHECK_THROWS_AS(build_graph(3, std::vector<Edge>{{{1}, {2}, 0}}, true), ValidationError);
  CHECK(build_graph(2, std::vector<Edge>{{{1}, {1}, 2}}, true).adjacency()(0, 0) == 2);
}

TEST_CASE("SignedDigraph validation") {
  CHECK_THROWS_AS(SignedDigraph(ids({1, 1}), IntMatrix::Zero(2, 2)), ValidationError);
  CHECK_THROWS_AS(SignedDigraph(ids({1, 2}), IntMatrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("degree_matrix") {
  CHECK(degree_matrix(fixture::c4()) == IntMatrix(2 * IntMatrix::Identity(4, 4)));
  CHECK(degree_matrix(fixture::petersen()) == IntMatrix(3 * IntMatrix::Identity(10, 10)));
  IntMatrix expected = IntMatrix::Zero(5, 5);
  for (Index i = 0; i < 5; ++i) expected(i, i) = i < 3 ? 4 : 3;
  CHECK(degree_matrix(fixture::digraph5()) == expected);
  for (Index n = 3; n <= 9; ++n) {
    IntMatrix cycle = IntMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) cycle(i, (i + 1) % n) = cycle((i + 1) % n, i) = 1;
    CHECK(degree_matrix(fixture::labelled(cycle)) == IntMatrix(2 * IntMatrix::Identity(n, n)));
  }
}

TEST_CASE("restrict") {
  const SignedDigraph c4 = fixture::c4();
  const SignedDigraph edge = restrict(c4, ids({1, 2}));
  CHECK(edge.adjacency() == int_matrix({{0, 1}, {1, 0}}));
  CHECK(restrict(c4, ids({1, 2, 3, 4})) == c4);
  CHECK(restrict(c4, ids({4, 1, 3, 2})) == c4);
  CHECK(restrict(c4, {}).size() == 0);
  CHECK_THROWS_AS(restrict(c4, ids({9})), ValidationError);
}

TEST_CASE("restrict twice equals restricting to the intersection") {
  std::mt19937 rng(21);
  std::bernoulli_distribution keep(0.6);
  for (int trial = 0; trial < 40; ++trial) {
    const SignedDigraph x = random_labelled(rng, 7);
    std::vector<VertexId> s1, s2, both;
    for (const auto& v : x.labels()) {
      const bool a = keep(rng), b = keep(rng);
      if (a) s1.push_back(v);
      if (b) s2.push_back(v);
      if (a && b) both.push_back(v);
    }
    CHECK(restrict(restrict(x, s1), both) == restrict(x, both));
    std::vector<VertexId> s2_in_s1;
    for (const auto& v : s2)
      if (std::find(s1.begin(), s1.end(), v) != s1.end()) s2_in_s1.push_back(v);
    CHECK(restrict(restrict(x, s1), s2_in_s1) == restrict(x, both));
  }
}

TEST_CASE("signed_sum") {
  const SignedDigraph c4 = fixture::c4();
  CHECK(signed_sum(c4, empty_graph({}), 1) == c4);
  CHECK(signed_sum(c4, c4, -1) == empty_graph(c4.labels()));
  const SignedDigraph a(ids({1, 2}), int_matrix({{0, 1}, {0, 0}}));
  const SignedDigraph b(ids({2, 3}), int_matrix({{1, 2}, {0, 0}}));
  const SignedDigraph sum = signed_sum(a, b, -1);
  CHECK(sum.labels() == ids({1, 2, 3}));
  CHECK(sum.adjacency() == int_matrix({{0, 1, 0}, {0, -1, -2}, {0, 0, 0}}));
  CHECK_THROWS(signed_sum(a, b, 2));
}

TEST_CASE("signed_sum with +1 is commutative up to vertex order") {
  std::mt19937 rng(22);
  std::uniform_int_distribution<std::size_t> size(0, 6);
  for (int trial = 0; trial < 40; ++trial) {
    const SignedDigraph x1 = random_labelled(rng, size(rng));
    const SignedDigraph x2 = random_labelled(rng, size(rng));
    const SignedDigraph forward = signed_sum(x1, x2, 1);
    const SignedDigraph backward = signed_sum(x2, x1, 1);
    CHECK(reorder(backward, forward.labels()) == forward);
  }
}

TEST_CASE("broadcast_graph") {
  const SignedDigraph c4 = fixture::c4();
  const SignedDigraph none = broadcast_graph(c4, {}, {2}, ids({1, 3}));
  CHECK(none.adjacency() == IntMatrix::Zero(2, 2));

  const SignedDigraph single = broadcast_graph(c4, ids({1}), {2}, ids({1}));
  CHECK(single.adjacency() == int_matrix({{1}}));

  const SignedDigraph p = fixture::petersen();
  const auto v1 = ids({1, 2, 3, 4});
  const SignedDigraph j = broadcast_graph(p, v1, {5}, v1);
  for (Index r = 0; r < 4; ++r) CHECK(j.adjacency().row(r) == int_matrix({{0, 1, 1, 0}}));

  CHECK_THROWS_AS(broadcast_graph(c4, ids({1}), {7}, ids({1})), ValidationError);
}

TEST_CASE("broadcast rows on b all copy the vbar row") {
  std::mt19937 rng(23);
  std::bernoulli_distribution pick(0.5);
  for (int trial = 0; trial < 40; ++trial) {
    const SignedDigraph x = random_labelled(rng, 6);
    std::vector<VertexId> b, c;
    for (const auto& v : x.labels()) {
      if (pick(rng)) b.push_back(v);
      if (pick(rng)) c.push_back(v);
    }
    const VertexId vbar = x.labels()[trial % 6];
    const SignedDigraph g = broadcast_graph(x, b, vbar, c);
    for (Index i = 0; i < g.size(); ++i)
      for (Index j = 0; j < g.size(); ++j) {
        const VertexId u = g.labels()[i], v = g.labels()[j];
        const bool in_b = std::find(b.begin(), b.end(), u) != b.end();
        const bool in_c = std::find(c.begin(), c.end(), v) != c.end();
        const Integer expected = in_b && in_c ? Integer(x.adjacency()(x.require_index(vbar), x.require_index(v))) : 0;
        CHECK(g.adjacency()(i, j) == expected);
      }
  }
}

TEST_CASE("deletion graph of C4 assembled from restriction and broadcasts") {
  const SignedDigraph c4 = fixture::c4();
  const auto vprime = ids({1, 3});
  SignedDigraph d = restrict(c4, vprime);
  d = signed_sum(d, broadcast_graph(c4, ids({1}), {2}, vprime), -1);
  d = signed_sum(d, broadcast_graph(c4, ids({3}), {4}, vprime), -1);
  CHECK(d.adjacency() == int_matrix({{-1, 1}, {1, -1}}));
}

TEST_CASE("graph predicates") {
  CHECK(is_undirected(fixture::c4()));
  CHECK_FALSE(is_undirected(fixture::digraph5()));
  CHECK(is_undirected(empty_graph(ids({1, 2, 3}))));
  CHECK(is_unsigned(fixture::c4()));
  CHECK_FALSE(is_unsigned(SignedDigraph(ids({1, 2}), int_matrix({{0, -1}, {-1, 0}}))));
  CHECK(has_loops(fixture::digraph5()));
  CHECK_FALSE(has_loops(fixture::petersen()));
  CHECK(is_connected(fixture::petersen()));
  CHECK_FALSE(is_connected(empty_graph(ids({1, 2}))));
  CHECK(undirected_edge_count(fixture::petersen()) == 15);
  CHECK(undirected_edge_count(fixture::c4()) == 4);
}
