#include "eqdecomp/graph.hpp"

#include "eqdecomp/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace eqdecomp {

SignedDigraph::SignedDigraph(std::vector<VertexId> labels, IntMatrix adjacency)
    : labels_(std::move(labels)), adjacency_(std::move(adjacency)) {
  const auto n = static_cast<Index>(labels_.size());
  if (adjacency_.rows() != n || adjacency_.cols() != n)
    throw DimensionError("adjacency is " + std::to_string(adjacency_.rows()) + "x" +
                         std::to_string(adjacency_.cols()) + " for " + std::to_string(n) + " vertices");
  std::set<VertexId> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw ValidationError("duplicate vertex label");
}

std::optional<Index> SignedDigraph::index_of(VertexId v) const {
  auto it = std::find(labels_.begin(), labels_.end(), v);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

Index SignedDigraph::require_index(VertexId v) const {
  auto idx = index_of(v);
  if (!idx) throw ValidationError("vertex " + to_string(v) + " is not in the graph");
  return *idx;
}

SignedDigraph build_graph(int n, std::span<const Edge> edges, bool undirected) {
  if (n < 0) throw ValidationError("negative vertex count");
  IntMatrix a = IntMatrix::Zero(n, n);
  for (const auto& e : edges) {
    if (e.from.label < 1 || e.from.label > n || e.to.label < 1 || e.to.label > n)
      throw ValidationError("edge " + to_string(e.from) + " -> " + to_string(e.to) + " is outside 1.." +
                            std::to_string(n));
    if (e.multiplicity == 0) throw ValidationError("edge multiplicity must be nonzero");
    const Index u = e.from.label - 1;
    const Index v = e.to.label - 1;
    a(u, v) += e.multiplicity;
    if (undirected && u != v) a(v, u) += e.multiplicity;
  }
  std::vector<VertexId> labels;
  for (int k = 1; k <= n; ++k) labels.push_back({k});
  return {std::move(labels), std::move(a)};
}

SignedDigraph empty_graph(std::vector<VertexId> labels) {
  const auto n = static_cast<Index>(labels.size());
  return {std::move(labels), IntMatrix::Zero(n, n)};
}

DegreeMatrix degree_matrix(const SignedDigraph& x) {
  const Index n = x.size();
  DegreeMatrix d = DegreeMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) d(i, i) = x.adjacency().row(i).sum();
  return d;
}

namespace {

std::vector<Index> indices_in_graph_order(const SignedDigraph& x, std::span<const VertexId> subset) {
  std::vector<Index> idx;
  for (const auto& v : subset) idx.push_back(x.require_index(v));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

SignedDigraph induced(const SignedDigraph& x, const std::vector<Index>& idx) {
  const auto k = static_cast<Index>(idx.size());
  IntMatrix a(k, k);
  std::vector<VertexId> labels;
  for (Index i = 0; i < k; ++i) {
    labels.push_back(x.labels()[idx[i]]);
    for (Index j = 0; j < k; ++j) a(i, j) = x.adjacency()(idx[i], idx[j]);
  }
  return {std::move(labels), std::move(a)};
}

}  // namespace

SignedDigraph restrict(const SignedDigraph& x, std::span<const VertexId> subset) {
  return induced(x, indices_in_graph_order(x, subset));
}

SignedDigraph reorder(const SignedDigraph& x, std::span<const VertexId> order) {
  if (static_cast<Index>(order.size()) != x.size()) throw ValidationError("reorder needs a permutation of the vertices");
  std::vector<Index> idx;
  for (const auto& v : order) idx.push_back(x.require_index(v));
  std::vector<Index> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("reorder needs a permutation of the vertices");
  return induced(x, idx);
}

SignedDigraph signed_sum(const SignedDigraph& x1, const SignedDigraph& x2, int sign) {
  if (sign != 1 && sign != -1) throw ValidationError("sign must be +1 or -1");
  std::vector<VertexId> labels = x1.labels();
  for (const auto& v : x2.labels())
    if (!x1.index_of(v)) labels.push_back(v);
  const auto n = static_cast<Index>(labels.size());
  IntMatrix a = IntMatrix::Zero(n, n);
  a.topLeftCorner(x1.size(), x1.size()) = x1.adjacency();
  std::vector<Index> place;
  for (const auto& v : x2.labels())
    place.push_back(static_cast<Index>(std::find(labels.begin(), labels.end(), v) - labels.begin()));
  for (Index i = 0; i < x2.size(); ++i)
    for (Index j = 0; j < x2.size(); ++j) a(place[i], place[j]) += sign * x2.adjacency()(i, j);
  return {std::move(labels), std::move(a)};
}

SignedDigraph broadcast_graph(const SignedDigraph& x, std::span<const VertexId> b, VertexId vbar,
                              std::span<const VertexId> c) {
  const Index source = x.require_index(vbar);
  std::vector<VertexId> both(b.begin(), b.end());
  both.insert(both.end(), c.begin(), c.end());
  const std::vector<Index> idx = indices_in_graph_order(x, both);
  std::set<Index> in_b;
  std::set<Index> in_c;
  for (const auto& v : b) in_b.insert(x.require_index(v));
  for (const auto& v : c) in_c.insert(x.require_index(v));
  const auto k = static_cast<Index>(idx.size());
  IntMatrix a = IntMatrix::Zero(k, k);
  std::vector<VertexId> labels;
  for (Index i = 0; i < k; ++i) {
    labels.push_back(x.labels()[idx[i]]);
    if (!in_b.count(idx[i])) continue;
    for (Index j = 0; j < k; ++j)
      if (in_c.count(idx[j])) a(i, j) = x.adjacency()(source, idx[j]);
  }
  return {std::move(labels), std::move(a)};
}

bool is_undirected(const SignedDigraph& x) { return x.adjacency() == x.adjacency().transpose(); }

bool is_unsigned(const SignedDigraph& x) {
  for (Index i = 0; i < x.size(); ++i)
    for (Index j = 0; j < x.size(); ++j)
      if (x.adjacency()(i, j) < 0) return false;
  return true;
}

bool has_loops(const SignedDigraph& x) {
  for (Index i = 0; i < x.size(); ++i)
    if (x.adjacency()(i, i) != 0) return true;
  return false;
}

bool is_connected(const SignedDigraph& x) {
  const Index n = x.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<Index> frontier;
  frontier.push(0);
  seen[0] = true;
  Index reached = 1;
  while (!frontier.empty()) {
    const Index u = frontier.front();
    frontier.pop();
    for (Index v = 0; v < n; ++v) {
      if (seen[v] || (x.adjacency()(u, v) == 0 && x.adjacency()(v, u) == 0)) continue;
      seen[v] = true;
      ++reached;
      frontier.push(v);
    }
  }
  return reached == n;
}

Integer undirected_edge_count(const SignedDigraph& x) {
  Integer off(0);
  Integer loops(0);
  for (Index i = 0; i < x.size(); ++i)
    for (Index j = 0; j < x.size(); ++j) {
      if (i == j)
        loops += x.adjacency()(i, i);
      else
        off += x.adjacency()(i, j);
    }
  return Integer(off / 2 + loops);
}

}  // namespace eqdecomp
