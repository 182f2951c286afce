#pragma once

// Deletion matrices and graphs over an equitable partition, the block
// triangular similarity transform, and the characteristic polynomial
// factorizations that follow from it.

#include "eqdecomp/graph.hpp"
#include "eqdecomp/partition.hpp"
#include "eqdecomp/polynomial.hpp"
#include "eqdecomp/scalar.hpp"

#include <optional>
#include <vector>

namespace eqdecomp {

struct DeletionResult {
  /// (n - r) x (n - r), rows and columns in Partition::non_representatives order.
  RationalMatrix deletion_matrix;
  /// Present when built from a graph; its adjacency equals deletion_matrix.
  std::optional<SignedDigraph> deletion_graph;
  std::vector<Index> representatives;
  std::vector<Index> non_representatives;
};

/// Conjugated form basis^-1 * M * basis = [[quotient, coupling], [0, deletion]].
struct TriangularForm {
  QuotientMatrix quotient;
  RationalMatrix coupling;
  RationalMatrix deletion;
  RationalMatrix basis;
  RationalMatrix conjugated;
};

struct CharPolyFactors {
  UniPoly quotient_factor;
  UniPoly deletion_factor;
};

/// M\pi: entry (v, w) for v in cell i and v, w in V' is M(v, w) - M(rep_i, w).
DeletionResult deletion_matrix(const RationalMatrix& m, const Partition& pi);

/// X\pi assembled as X|V' minus the sum of broadcast graphs V_i'(rep_i) |> V_j',
/// with vertices in non_representatives order. Throws ConsistencyError if its
/// adjacency differs from deletion_matrix(A(x), pi).
DeletionResult deletion_graph(const SignedDigraph& x, const Partition& pi);

/// Conjugates M by (P, Q) and checks the result block by block against
/// M/pi, M|reps x V' and M\pi, including the zero lower-left block.
TriangularForm similarity_transform(const RationalMatrix& m, const Partition& pi);

/// phi(M/pi) and phi(M\pi), with their product checked against an
/// independently computed phi(M).
CharPolyFactors factor_char_poly(const RationalMatrix& m, const Partition& pi);

/// Factors of phi(alpha*A(x) + D), D constant d_i on cell i:
/// phi(alpha*A(x/pi) + diag(d)) and phi(alpha*A(x\pi) + D|V'xV').
/// The product is checked against phi(alpha*A(x) + D).
CharPolyFactors shifted_factors(const SignedDigraph& x, const Partition& pi, const Rational& alpha,
                                const std::vector<Rational>& cell_diag);

/// phi(alpha*A(x\pi) + diag(vprime_diag)) with an arbitrary diagonal on V'.
UniPoly shifted_deletion_factor(const SignedDigraph& x, const Partition& pi, const Rational& alpha,
                                const std::vector<Rational>& vprime_diag);

/// Common out-degree of each cell; throws NotEquitableError if a cell mixes degrees.
std::vector<Rational> cell_degrees(const SignedDigraph& x, const Partition& pi);

/// Factors of phi(L(x)) (or phi(Q(x)) when signless). The deletion factor
/// uses D(x) restricted to V' x V', not the degrees of the restricted graph.
CharPolyFactors laplacian_factors(const SignedDigraph& x, const Partition& pi, bool signless);

RationalMatrix laplacian(const SignedDigraph& x, bool signless);

}  // namespace eqdecomp
