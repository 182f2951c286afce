#pragma once

// Exact scalar types and the dense Eigen matrices built on them.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>

namespace eqdecomp {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using Index = Eigen::Index;

inline bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }
inline bool is_integral(const Integer&) { return true; }

inline Integer to_integer(const Rational& q) { return boost::multiprecision::numerator(q); }

template <typename Derived>
bool all_integral(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_integral(m(i, j))) return false;
  return true;
}

inline RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

// Requires every entry to have denominator 1.
IntMatrix to_integer(const RationalMatrix& m);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

}  // namespace eqdecomp
