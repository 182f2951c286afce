#include "eqdecomp/linalg.hpp"

#include "eqdecomp/bipolynomial.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <algorithm>
#include <sstream>

namespace eqdecomp {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& q) { return q.str(); }
std::string to_string(const Integer& z) { return z.str(); }

Rational parse_rational(const std::string& text) {
  auto is_integer = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  const std::size_t slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer(num, true) || !is_integer(den, false))
    throw ValidationError("not a rational number: '" + text + "'");
  const Integer d(den);
  if (d == 0) throw ValidationError("zero denominator in '" + text + "'");
  const Integer n(num.front() == '+' ? num.substr(1) : num);
  return Rational(n, d);
}

IntMatrix to_integer(const RationalMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) throw ValidationError("entry " + to_string(m(i, j)) + " is not an integer");
      out(i, j) = to_integer(m(i, j));
    }
  return out;
}

BiPoly to_integer(const RationalBiPoly& p) {
  BiPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (!is_integral(c)) throw ValidationError("coefficient " + to_string(c) + " is not an integer");
    out.add_term(m, to_integer(c));
  }
  return out;
}

Integer det_exact(const IntMatrix& m) { return bareiss_determinant<Integer>(m); }

Rational det_exact(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " matrix");
  IntMatrix scaled(m.rows(), m.cols());
  Integer scale(1);
  for (Index i = 0; i < m.rows(); ++i) {
    Integer row_lcm(1);
    for (Index j = 0; j < m.cols(); ++j) row_lcm = mp::lcm(row_lcm, Integer(mp::denominator(m(i, j))));
    for (Index j = 0; j < m.cols(); ++j)
      scaled(i, j) = Integer(mp::numerator(m(i, j)) * (row_lcm / mp::denominator(m(i, j))));
    scale *= row_lcm;
  }
  return Rational(bareiss_determinant<Integer>(std::move(scaled)), scale);
}

RationalMatrix mat_inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionError("inverse of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  const Index n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::Identity(n, n);
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError(col);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Rational p = a(col, col);
    a.row(col) /= p;
    inv.row(col) /= p;
    for (Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      a.row(r) -= f * a.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  return inv;
}

UniPoly char_poly(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionError("characteristic polynomial of a " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  const Index n = m.rows();
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (Index k = 0; k <= n; ++k) {
    RationalMatrix shifted = -m;
    for (Index i = 0; i < n; ++i) shifted(i, i) += Rational(k);
    xs.emplace_back(k);
    ys.push_back(det_exact(shifted));
  }
  UniPoly p = interpolate(xs, ys);
  if (!p.is_monic() || *p.degree() != static_cast<std::size_t>(n))
    throw ConsistencyError("characteristic polynomial is not monic of degree " + std::to_string(n));
  return p;
}

UniPoly poly_matrix_det(const Matrix<UniPoly>& m, std::size_t degree_bound) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square polynomial matrix");
  const Index n = m.rows();
  auto det_at = [&](const Rational& x) {
    RationalMatrix v(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) v(i, j) = m(i, j).evaluate(x);
    return det_exact(v);
  };
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (std::size_t k = 0; k <= degree_bound; ++k) {
    xs.emplace_back(static_cast<long>(k));
    ys.push_back(det_at(xs.back()));
  }
  UniPoly p = interpolate(xs, ys);
  const Rational holdout(static_cast<long>(degree_bound) + 1);
  if (p.evaluate(holdout) != det_at(holdout))
    throw BoundViolationError("polynomial determinant exceeds degree bound " + std::to_string(degree_bound));
  return p;
}

RationalMatrix hstack(const RationalMatrix& left, const RationalMatrix& right) {
  if (left.rows() != right.rows()) throw DimensionError("hstack of matrices with different row counts");
  RationalMatrix out(left.rows(), left.cols() + right.cols());
  out.leftCols(left.cols()) = left;
  out.rightCols(right.cols()) = right;
  return out;
}

std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw InexactDivisionError("division by the zero polynomial");
  std::vector<Rational> rem = num.coefficients();
  const std::size_t dd = *den.degree();
  if (rem.size() <= dd) return {UniPoly(), num};
  std::vector<Rational> quot(rem.size() - dd, Rational(0));
  const Rational lead = den.leading();
  for (std::size_t k = rem.size(); k-- > dd;) {
    const Rational c = rem[k] / lead;
    quot[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * den.coefficients()[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly poly_div_exact(const UniPoly& num, const UniPoly& den) {
  auto [q, r] = poly_divmod(num, den);
  if (!r.is_zero()) throw InexactDivisionError(r.to_string());
  return q;
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw DimensionError("interpolation needs as many values as nodes");
  const std::size_t n = xs.size();
  // Divided differences in place.
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational span = xs[i] - xs[i - level];
      if (span == 0) throw ValidationError("interpolation nodes are not distinct");
      dd[i] = (dd[i] - dd[i - 1]) / span;
    }
  // Expand the Newton form by Horner's rule: c <- c (x - xs[k]) + dd[k].
  std::vector<Rational> c;
  c.reserve(n);
  for (std::size_t k = n; k-- > 0;) {
    c.insert(c.begin(), Rational(0));
    for (std::size_t j = 0; j + 1 < c.size(); ++j) c[j] -= xs[k] * c[j + 1];
    c[0] += dd[k];
  }
  return UniPoly(std::move(c));
}

namespace {

/// Interpolant through (low + k, ys[k]), k = 0..d. Over the integers the
/// Newton form is expanded as d! p(x) from forward differences and divided
/// back at the end.
template <typename Scalar>
Polynomial<Scalar> interpolate_consecutive(long low, std::vector<Scalar> ys) {
  if constexpr (std::is_same_v<Scalar, Integer>) {
    const std::size_t d = ys.size() - 1;
    for (std::size_t level = 1; level <= d; ++level)
      for (std::size_t i = d; i >= level; --i) ys[i] -= ys[i - 1];
    // Horner on the Newton form: c <- c (x - (low + k)) + (d!/k!) delta^k y_0.
    std::vector<Integer> c;
    c.reserve(d + 1);
    Integer scale(1);
    for (std::size_t k = d + 1; k-- > 0;) {
      const Integer node(low + static_cast<long>(k));
      c.insert(c.begin(), Integer(0));
      for (std::size_t j = 0; j + 1 < c.size(); ++j) c[j] -= node * c[j + 1];
      c[0] += scale * ys[k];
      if (k > 0) scale *= static_cast<long>(k);
    }
    // scale is now d!.
    for (auto& a : c) {
      Integer q, r;
      mp::divide_qr(a, scale, q, r);
      if (r != 0) throw BoundViolationError("interpolant of an integer determinant is not integral");
      a = std::move(q);
    }
    return Polynomial<Integer>(std::move(c));
  } else {
    std::vector<Rational> xs;
    for (std::size_t k = 0; k < ys.size(); ++k) xs.emplace_back(low + static_cast<long>(k));
    return interpolate(xs, ys);
  }
}

}  // namespace

template <typename Scalar>
BiPolynomial<Scalar> bipoly_det(const Matrix<BiPolynomial<Scalar>>& m, unsigned deg_u_bound, unsigned deg_t_bound) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square bivariate matrix");
  const Index n = m.rows();
  if (n == 0) return BiPolynomial<Scalar>(Scalar(1));

  // Nodes centred on 0 keep the evaluated entries small.
  const long u_low = -static_cast<long>(deg_u_bound / 2);
  const long t_low = -static_cast<long>(deg_t_bound / 2);
  const long u_high = u_low + static_cast<long>(deg_u_bound);
  const long t_high = t_low + static_cast<long>(deg_t_bound);

  // Interpolate in t along each u row of the grid.
  std::vector<Polynomial<Scalar>> rows;
  rows.reserve(deg_u_bound + 1);
  Matrix<Polynomial<Scalar>> in_t(n, n);
  Matrix<Scalar> v(n, n);
  for (long a = u_low; a <= u_high; ++a) {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) in_t(i, j) = m(i, j).specialize_u(Scalar(a));
    std::vector<Scalar> values;
    for (long b = t_low; b <= t_high; ++b) {
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) v(i, j) = in_t(i, j).evaluate(Scalar(b));
      values.push_back(det_exact(v));
    }
    rows.push_back(interpolate_consecutive(t_low, std::move(values)));
  }

  // Then interpolate each t-coefficient in u.
  BiPolynomial<Scalar> result;
  for (unsigned j = 0; j <= deg_t_bound; ++j) {
    std::vector<Scalar> values;
    for (const auto& r : rows) values.push_back(r.coefficient(j));
    const Polynomial<Scalar> in_u = interpolate_consecutive(u_low, std::move(values));
    for (std::size_t k = 0; k < in_u.coefficients().size(); ++k)
      result.add_term({static_cast<unsigned>(k), j}, in_u.coefficients()[k]);
  }

  for (auto [hu, ht] : {std::pair<long, long>{u_high + 1, t_high + 1}, {u_low - 1, t_low - 1}}) {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) v(i, j) = m(i, j).evaluate(Scalar(hu), Scalar(ht));
    if (result.evaluate(Scalar(hu), Scalar(ht)) != det_exact(v))
      throw BoundViolationError("bivariate determinant exceeds degree bounds (u " + std::to_string(deg_u_bound) +
                                ", t " + std::to_string(deg_t_bound) + ")");
  }
  return result;
}

template BiPoly bipoly_det<Integer>(const Matrix<BiPoly>&, unsigned, unsigned);
template RationalBiPoly bipoly_det<Rational>(const Matrix<RationalBiPoly>&, unsigned, unsigned);

}  // namespace eqdecomp
