#pragma once

// Signed directed multigraphs held as dense integer adjacency matrices, and
// the graph algebra used to assemble deletion graphs.

#include "eqdecomp/scalar.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eqdecomp {

/// Vertex label, 1-based in parsed and generated graphs.
struct VertexId {
  int label = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

inline std::string to_string(VertexId v) { return std::to_string(v.label); }

/// Entry (u, v) of the adjacency matrix is the signed number of edges u -> v.
/// Values are immutable once built.
class SignedDigraph {
 public:
  SignedDigraph() = default;
  SignedDigraph(std::vector<VertexId> labels, IntMatrix adjacency);

  Index size() const { return static_cast<Index>(labels_.size()); }
  const std::vector<VertexId>& labels() const { return labels_; }
  const IntMatrix& adjacency() const { return adjacency_; }
  RationalMatrix adjacency_rational() const { return to_rational(adjacency_); }

  std::optional<Index> index_of(VertexId v) const;
  // Throws ValidationError for a vertex not in the graph.
  Index require_index(VertexId v) const;

  friend bool operator==(const SignedDigraph& a, const SignedDigraph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<VertexId> labels_;
  IntMatrix adjacency_;
};

using DegreeMatrix = IntMatrix;

struct Edge {
  VertexId from;
  VertexId to;
  Integer multiplicity{1};
};

/// Graph on vertices 1..n. Multiplicities accumulate; with `undirected`
/// every edge u-v with u != v is also added as v-u. A loop is added once.
SignedDigraph build_graph(int n, std::span<const Edge> edges, bool undirected);

/// Graph on `labels` with no edges.
SignedDigraph empty_graph(std::vector<VertexId> labels);

/// Diagonal matrix of out-degrees (row sums). A loop counts once.
DegreeMatrix degree_matrix(const SignedDigraph& x);

/// Induced subgraph on `subset`, keeping the vertex order of `x`.
SignedDigraph restrict(const SignedDigraph& x, std::span<const VertexId> subset);

/// Same graph with vertices listed in `order`, which must be a permutation.
SignedDigraph reorder(const SignedDigraph& x, std::span<const VertexId> order);

/// X1 + X2 (sign = +1) or X1 - X2 (sign = -1) on the union of the vertex
/// sets: vertices of x1 in order, then the new vertices of x2 in order.
SignedDigraph signed_sum(const SignedDigraph& x1, const SignedDigraph& x2, int sign);

/// B(vbar) |> C: the graph on b u c whose (u, v) entry is A(x)_{vbar, v} for
/// u in b and v in c, zero elsewhere. Vertices follow the order of x.
SignedDigraph broadcast_graph(const SignedDigraph& x, std::span<const VertexId> b, VertexId vbar,
                              std::span<const VertexId> c);

bool is_undirected(const SignedDigraph& x);
bool is_unsigned(const SignedDigraph& x);
bool has_loops(const SignedDigraph& x);
/// Weak connectivity, ignoring edge signs and directions.
bool is_connected(const SignedDigraph& x);

/// Non-oriented edge count of an undirected graph: half the adjacency sum
/// off the diagonal plus the loops.
Integer undirected_edge_count(const SignedDigraph& x);

}  // namespace eqdecomp
