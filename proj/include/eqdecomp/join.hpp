#pragma once

// Generalized join (composition) graphs H[X_1, ..., X_r] and the closed
// forms for their characteristic polynomials and zeta reciprocals.

#include "eqdecomp/bipolynomial.hpp"
#include "eqdecomp/graph.hpp"
#include "eqdecomp/partition.hpp"
#include "eqdecomp/polynomial.hpp"

#include <vector>

namespace eqdecomp {

/// H on r vertices and one component per vertex of H. Construction through
/// make() validates that H and every component are simple and undirected
/// and, unless `require_regular` is false, that each component is regular.
class JoinSpec {
 public:
  static JoinSpec make(SignedDigraph h, std::vector<SignedDigraph> components, bool require_regular = true);

  const SignedDigraph& h() const { return h_; }
  const std::vector<SignedDigraph>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  /// k_i; only meaningful for regular specs.
  const std::vector<Integer>& degrees() const { return degrees_; }
  std::vector<Integer> orders() const;  // n_i
  bool regular() const { return regular_; }
  /// N_i = sum over j != i of A(H)_ij n_j.
  Integer outside_degree(std::size_t i) const;

 private:
  SignedDigraph h_;
  std::vector<SignedDigraph> components_;
  std::vector<Integer> degrees_;
  bool regular_ = false;
};

struct JoinGraph {
  SignedDigraph x;
  Partition pi;  // {V(X_1), ..., V(X_r)}
};

/// A(X) has A(X_i) on diagonal blocks and A(H)_ij * J off them. Vertices are
/// numbered 1..n component by component.
JoinGraph build_join(const JoinSpec& spec);

/// Closed form: k_i on the diagonal, A(H)_ij * n_j off it.
QuotientMatrix join_quotient(const JoinSpec& spec);

struct JoinCharPoly {
  UniPoly via_quotient;
  UniPoly via_h_form;
  /// phi(alpha*A(X_i) + d_i I) / (x - alpha*k_i - d_i), one per component.
  std::vector<UniPoly> component_factors;
  /// (prod n_i) * det(-alpha*A(H) + Delta(x)).
  UniPoly h_determinant;
};

/// Both closed forms of phi(alpha*A(X) + D), D = d_i on V(X_i). Each is checked
/// against the direct characteristic polynomial of the assembled join.
JoinCharPoly join_char_poly(const JoinSpec& spec, const Rational& alpha, const std::vector<Rational>& d);

struct JoinZeta {
  BiPoly via_quotient;
  BiPoly via_h_form;
  /// gamma_i = 1 - t k_i + (1-u)(k_i + N_i - 1 + u) t^2.
  std::vector<BiPoly> gamma;
};

/// d_i^Z(X) = s1 + s2 (k_i + N_i) per component.
std::vector<BiPoly> join_zeta_diagonal(const JoinSpec& spec);

/// gamma_i written out directly in u and t.
BiPoly join_gamma_closed_form(const JoinSpec& spec, std::size_t i);

/// -t k_i + d_i^Z(X).
BiPoly join_gamma_from_degree(const JoinSpec& spec, std::size_t i);

/// Both closed forms of the zeta reciprocal of the join, each compared with
/// bartholdi_reciprocal of the assembled graph; gamma_i is checked in both
/// of its expressions.
JoinZeta join_zeta_reciprocal(const JoinSpec& spec);

/// M_{X_i}(F) = I - t A(X_i) + (1-u)(F - (1-u) I) t^2 for a diagonal F.
Matrix<BiPoly> bartholdi_component_matrix(const SignedDigraph& component, const std::vector<Integer>& f_diagonal);

/// -t A(X_i) + d_i^Z(X) I.
Matrix<BiPoly> shifted_component_matrix(const JoinSpec& spec, std::size_t i);

/// rho'_ij: gamma_i / n_i on the diagonal, -t A(H)_ij off it.
Matrix<RationalBiPoly> scaled_join_quotient(const JoinSpec& spec);

struct TeranishiFactors {
  UniPoly quotient_factor;
  std::vector<UniPoly> component_deletion_factors;
  /// phi(A(X_i)) / phi(A(X_i / pi_i)).
  std::vector<UniPoly> component_ratio_factors;
  Partition pi;
};

/// phi(A(X)) = phi(A(X/pi)) * prod phi(A(X_i \ pi_i)) for the concatenated
/// per-component partitions. Components need not be regular.
TeranishiFactors teranishi_factor(const JoinSpec& spec, const std::vector<Partition>& pis);

}  // namespace eqdecomp
