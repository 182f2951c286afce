#pragma once

// Bartholdi zeta reciprocals as exact bivariate polynomials in (u, t).

#include "eqdecomp/bipolynomial.hpp"
#include "eqdecomp/graph.hpp"
#include "eqdecomp/partition.hpp"
#include "eqdecomp/polynomial.hpp"

namespace eqdecomp {

using DzMatrix = Matrix<BiPoly>;

/// s1 = 1 - (1-u)^2 t^2
BiPoly zeta_s1();
/// s2 = (1-u) t^2
BiPoly zeta_s2();
/// s1 + s2 * degree
BiPoly zeta_diagonal_entry(const Integer& degree);

struct ZetaReciprocal {
  BiPoly value;
  Integer edges;     // m, non-oriented
  Integer vertices;  // n
};

/// D^Z = s1 I + s2 D(x).
DzMatrix dz_matrix(const SignedDigraph& x);

/// det(-t*a + diag(diagonal)) via bipoly_det with bounds 2n, 2n.
BiPoly zeta_determinant(const IntMatrix& a, const std::vector<BiPoly>& diagonal);

/// s1^(m-n) * det(-t A + D^Z). For a tree (m - n = -1) the determinant is
/// divided by s1 exactly.
ZetaReciprocal bartholdi_reciprocal(const SignedDigraph& x);

struct ZetaFactors {
  long s1_exponent = 0;  // m - n, may be -1 for a tree
  BiPoly s1_power;       // s1^max(m-n, 0)
  BiPoly quotient_factor;
  BiPoly deletion_factor;
};

/// Splits the zeta reciprocal into s1^(m-n), det(-t A(x/pi) + D^Z(x/pi)) and
/// det(-t A(x\pi) + D^Z(x)|V'xV'). When m - n = -1 the product of the two
/// determinants equals s1 times the reciprocal. Throws ConsistencyError if
/// the parts do not reassemble to bartholdi_reciprocal(x).
ZetaFactors zeta_factor(const SignedDigraph& x, const Partition& pi);

/// Reassembles the reciprocal from its factors, dividing by s1 for trees.
BiPoly assemble(const ZetaFactors& f);

/// u = 0: the Ihara zeta reciprocal as a polynomial in t.
UniPoly ihara_specialize(const ZetaReciprocal& z);

/// Throws ValidationError unless x is undirected, unsigned, loopless and connected.
void require_zeta_input(const SignedDigraph& x);

}  // namespace eqdecomp
