#include "eqdecomp/decomposition.hpp"

#include "eqdecomp/errors.hpp"
#include "eqdecomp/linalg.hpp"

namespace eqdecomp {

namespace {

std::vector<VertexId> labels_at(const SignedDigraph& x, const std::vector<Index>& idx) {
  std::vector<VertexId> out;
  for (Index v : idx) out.push_back(x.labels()[v]);
  return out;
}

}  // namespace

DeletionResult deletion_matrix(const RationalMatrix& m, const Partition& pi) {
  if (m.rows() != m.cols() || m.rows() != pi.vertex_count())
    throw DimensionError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " but the partition covers " + std::to_string(pi.vertex_count()) + " vertices");
  DeletionResult out;
  out.representatives = pi.representatives();
  out.non_representatives = pi.non_representatives();
  const auto k = static_cast<Index>(out.non_representatives.size());
  out.deletion_matrix.resize(k, k);
  for (Index a = 0; a < k; ++a) {
    const Index v = out.non_representatives[a];
    const Index rep = pi.representatives()[pi.cell_of(v)];
    for (Index b = 0; b < k; ++b) {
      const Index w = out.non_representatives[b];
      out.deletion_matrix(a, b) = m(v, w) - m(rep, w);
    }
  }
  return out;
}

DeletionResult deletion_graph(const SignedDigraph& x, const Partition& pi) {
  if (x.size() != pi.vertex_count()) throw DimensionError("partition does not cover the graph");
  DeletionResult out = deletion_matrix(x.adjacency_rational(), pi);

  const std::vector<VertexId> vprime = labels_at(x, out.non_representatives);
  SignedDigraph broadcasts = empty_graph({});
  for (std::size_t i = 0; i < pi.cell_count(); ++i) {
    std::vector<Index> cell_prime;
    for (Index v : pi.cells()[i])
      if (v != pi.representatives()[i]) cell_prime.push_back(v);
    const std::vector<VertexId> from = labels_at(x, cell_prime);
    const VertexId rep = x.labels()[pi.representatives()[i]];
    for (std::size_t j = 0; j < pi.cell_count(); ++j) {
      std::vector<Index> target;
      for (Index w : pi.cells()[j])
        if (w != pi.representatives()[j]) target.push_back(w);
      broadcasts = signed_sum(broadcasts, broadcast_graph(x, from, rep, labels_at(x, target)), +1);
    }
  }
  SignedDigraph result = signed_sum(restrict(x, vprime), broadcasts, -1);
  result = reorder(result, vprime);

  if (to_rational(result.adjacency()) != out.deletion_matrix)
    throw ConsistencyError("adjacency of the deletion graph differs from the deletion matrix");
  out.deletion_graph = std::move(result);
  return out;
}

TriangularForm similarity_transform(const RationalMatrix& m, const Partition& pi) {
  TriangularForm form;
  form.quotient = check_equitable(m, pi);
  const RationalMatrix p = characteristic_matrix(pi);
  const RationalMatrix q = selector_matrix(pi);
  form.basis = hstack(p, q);
  form.conjugated = mat_inverse(form.basis) * m * form.basis;

  const DeletionResult del = deletion_matrix(m, pi);
  form.deletion = del.deletion_matrix;
  const auto r = static_cast<Index>(pi.cell_count());
  const auto k = static_cast<Index>(del.non_representatives.size());
  form.coupling.resize(r, k);
  for (Index i = 0; i < r; ++i)
    for (Index b = 0; b < k; ++b) form.coupling(i, b) = m(pi.representatives()[i], del.non_representatives[b]);

  const auto& c = form.conjugated;
  if (c.topLeftCorner(r, r) != form.quotient) throw ConsistencyError("conjugated upper-left block is not M/pi");
  if (c.topRightCorner(r, k) != form.coupling) throw ConsistencyError("conjugated upper-right block is not M|reps x V'");
  if (c.bottomRightCorner(k, k) != form.deletion) throw ConsistencyError("conjugated lower-right block is not M\\pi");
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < r; ++j)
      if (c(r + i, j) != 0) throw ConsistencyError("conjugated lower-left block is not zero");
  return form;
}

CharPolyFactors factor_char_poly(const RationalMatrix& m, const Partition& pi) {
  CharPolyFactors f;
  f.quotient_factor = char_poly(check_equitable(m, pi));
  f.deletion_factor = char_poly(deletion_matrix(m, pi).deletion_matrix);
  if (f.quotient_factor * f.deletion_factor != char_poly(m))
    throw ConsistencyError("phi(M/pi) * phi(M\\pi) differs from phi(M)");
  return f;
}

UniPoly shifted_deletion_factor(const SignedDigraph& x, const Partition& pi, const Rational& alpha,
                                const std::vector<Rational>& vprime_diag) {
  const DeletionResult del = deletion_graph(x, pi);
  const auto k = static_cast<Index>(del.non_representatives.size());
  if (static_cast<Index>(vprime_diag.size()) != k) throw DimensionError("diagonal must have one entry per vertex of V'");
  RationalMatrix m = alpha * del.deletion_graph->adjacency_rational();
  for (Index i = 0; i < k; ++i) m(i, i) += vprime_diag[i];
  return char_poly(m);
}

CharPolyFactors shifted_factors(const SignedDigraph& x, const Partition& pi, const Rational& alpha,
                                const std::vector<Rational>& cell_diag) {
  const RationalMatrix d = cell_diagonal(pi, cell_diag);
  std::vector<Rational> restricted;
  for (Index v : pi.non_representatives()) restricted.push_back(d(v, v));

  CharPolyFactors f;
  f.quotient_factor = char_poly(quotient_of_shifted(x, pi, alpha, cell_diag));
  f.deletion_factor = shifted_deletion_factor(x, pi, alpha, restricted);
  const RationalMatrix whole = alpha * x.adjacency_rational() + d;
  if (f.quotient_factor * f.deletion_factor != char_poly(whole))
    throw ConsistencyError("shifted factors do not multiply to phi(alpha*A + D)");
  return f;
}

std::vector<Rational> cell_degrees(const SignedDigraph& x, const Partition& pi) {
  const DegreeMatrix deg = degree_matrix(x);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < pi.cell_count(); ++i) {
    const Index first = pi.cells()[i].front();
    for (Index v : pi.cells()[i])
      if (deg(v, v) != deg(first, first)) throw NotEquitableError(i, i, v);
    out.emplace_back(deg(first, first));
  }
  return out;
}

RationalMatrix laplacian(const SignedDigraph& x, bool signless) {
  const RationalMatrix a = x.adjacency_rational();
  const RationalMatrix d = to_rational(degree_matrix(x));
  return signless ? RationalMatrix(a + d) : RationalMatrix(d - a);
}

CharPolyFactors laplacian_factors(const SignedDigraph& x, const Partition& pi, bool signless) {
  if (!is_undirected(x)) throw ValidationError("Laplacian factorization needs an undirected graph");
  return shifted_factors(x, pi, Rational(signless ? 1 : -1), cell_degrees(x, pi));
}

}  // namespace eqdecomp
