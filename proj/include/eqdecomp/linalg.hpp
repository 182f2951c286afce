#pragma once

// Exact dense kernels: fraction-free determinants, inverses and
// characteristic polynomials.

#include "eqdecomp/errors.hpp"
#include "eqdecomp/polynomial.hpp"
#include "eqdecomp/scalar.hpp"

#include <type_traits>
#include <utility>

namespace eqdecomp {

/// Fraction-free (Bareiss) determinant over an integral domain. Every
/// division performed is exact, so Integer inputs never leave the integers.
/// Rows are swapped when a pivot vanishes.
template <typename Scalar>
Scalar bareiss_determinant(Matrix<Scalar> m) {
  if (m.rows() != m.cols())
    throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar previous(1);
  bool negate = false;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      m.row(k).swap(m.row(swap));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        if constexpr (std::is_same_v<Scalar, Integer>) {
          mpz_ptr v = m(i, j).backend().data();
          mpz_mul(v, v, m(k, k).backend().data());
          mpz_submul(v, m(i, k).backend().data(), m(k, j).backend().data());
          mpz_divexact(v, v, previous.backend().data());
        } else {
          Scalar v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
          m(i, j) = Scalar(v / previous);
        }
      }
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  Scalar d = m(n - 1, n - 1);
  return negate ? Scalar(-d) : d;
}

/// Determinant of a rational matrix. Rows are scaled to integers and the
/// integer Bareiss kernel does the elimination.
Rational det_exact(const RationalMatrix& m);
Integer det_exact(const IntMatrix& m);

/// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrixError
/// naming the first column without a pivot.
RationalMatrix mat_inverse(const RationalMatrix& m);

/// det(xI - m), obtained by evaluating det(x0 I - m) at x0 = 0..n and
/// interpolating. Monic of degree n; integer matrices give integer
/// coefficients.
UniPoly char_poly(const RationalMatrix& m);
inline UniPoly char_poly(const IntMatrix& m) { return char_poly(to_rational(m)); }

/// Entrywise polynomial matrix determinant by evaluation at degree_bound + 1
/// points plus one holdout point.
UniPoly poly_matrix_det(const Matrix<UniPoly>& m, std::size_t degree_bound);

RationalMatrix hstack(const RationalMatrix& left, const RationalMatrix& right);

}  // namespace eqdecomp
