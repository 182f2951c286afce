#include "eqdecomp/zeta.hpp"

#include "eqdecomp/decomposition.hpp"
#include "eqdecomp/errors.hpp"

namespace eqdecomp {

BiPoly zeta_s1() {
  const BiPoly one_minus_u = BiPoly(1) - BiPoly::u();
  const BiPoly t = BiPoly::t();
  return BiPoly(1) - one_minus_u * one_minus_u * t * t;
}

BiPoly zeta_s2() {
  const BiPoly t = BiPoly::t();
  return (BiPoly(1) - BiPoly::u()) * t * t;
}

BiPoly zeta_diagonal_entry(const Integer& degree) { return zeta_s1() + BiPoly(degree) * zeta_s2(); }

void require_zeta_input(const SignedDigraph& x) {
  if (!is_undirected(x)) throw ValidationError("zeta functions need an undirected graph");
  if (!is_unsigned(x)) throw ValidationError("zeta functions need an unsigned graph");
  if (has_loops(x)) throw ValidationError("zeta functions are computed for loopless graphs");
  if (x.size() == 0 || !is_connected(x)) throw ValidationError("zeta functions need a connected graph");
}

DzMatrix dz_matrix(const SignedDigraph& x) {
  if (!is_undirected(x) || !is_unsigned(x)) throw ValidationError("D^Z needs an undirected unsigned graph");
  const DegreeMatrix d = degree_matrix(x);
  DzMatrix out(x.size(), x.size());
  for (Index i = 0; i < x.size(); ++i) out(i, i) = zeta_diagonal_entry(d(i, i));
  return out;
}

BiPoly zeta_determinant(const IntMatrix& a, const std::vector<BiPoly>& diagonal) {
  if (a.rows() != a.cols() || static_cast<Index>(diagonal.size()) != a.rows())
    throw DimensionError("zeta determinant needs a square matrix and one diagonal entry per row");
  const Index n = a.rows();
  Matrix<BiPoly> m(n, n);
  const BiPoly t = BiPoly::t();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      m(i, j) = BiPoly(Integer(-a(i, j))) * t;
      if (i == j) m(i, j) += diagonal[i];
    }
  const auto bound = static_cast<unsigned>(2 * n);
  return bipoly_det(m, bound, bound);
}

namespace {

BiPoly apply_s1_power(const BiPoly& det, long exponent) {
  if (exponent >= 0) return zeta_s1().pow(static_cast<unsigned>(exponent)) * det;
  if (exponent == -1) {
    try {
      return bipoly_div_exact(det, zeta_s1());
    } catch (const InexactDivisionError& e) {
      throw ConsistencyError(std::string("s1 does not divide the tree determinant: ") + e.what());
    }
  }
  throw ValidationError("m - n < -1: graph is not connected");
}

}  // namespace

ZetaReciprocal bartholdi_reciprocal(const SignedDigraph& x) {
  require_zeta_input(x);
  ZetaReciprocal z;
  z.edges = undirected_edge_count(x);
  z.vertices = x.size();
  const DzMatrix dz = dz_matrix(x);
  std::vector<BiPoly> diag;
  for (Index i = 0; i < x.size(); ++i) diag.push_back(dz(i, i));
  const BiPoly det = zeta_determinant(x.adjacency(), diag);
  z.value = apply_s1_power(det, static_cast<long>(z.edges - z.vertices));
  return z;
}

BiPoly assemble(const ZetaFactors& f) {
  return apply_s1_power(f.quotient_factor * f.deletion_factor, f.s1_exponent);
}

ZetaFactors zeta_factor(const SignedDigraph& x, const Partition& pi) {
  require_zeta_input(x);
  ZetaFactors f;
  f.s1_exponent = static_cast<long>(undirected_edge_count(x) - x.size());
  f.s1_power = zeta_s1().pow(static_cast<unsigned>(std::max(f.s1_exponent, 0L)));

  const std::vector<Rational> degrees = cell_degrees(x, pi);
  const IntMatrix quotient = to_integer(check_equitable(x.adjacency_rational(), pi));
  std::vector<BiPoly> quotient_diag;
  for (const auto& d : degrees) quotient_diag.push_back(zeta_diagonal_entry(to_integer(d)));
  f.quotient_factor = zeta_determinant(quotient, quotient_diag);

  const DeletionResult del = deletion_graph(x, pi);
  const DzMatrix dz = dz_matrix(x);
  std::vector<BiPoly> deletion_diag;
  for (Index v : del.non_representatives) deletion_diag.push_back(dz(v, v));
  f.deletion_factor = zeta_determinant(del.deletion_graph->adjacency(), deletion_diag);

  if (assemble(f) != bartholdi_reciprocal(x).value)
    throw ConsistencyError("zeta factors do not reassemble to the Bartholdi reciprocal");
  return f;
}

UniPoly ihara_specialize(const ZetaReciprocal& z) { return to_rational(z.value.specialize_u(Integer(0))); }

}  // namespace eqdecomp
