#pragma once

// Sparse bivariate polynomials in (u, t) and their determinants.

#include "eqdecomp/errors.hpp"
#include "eqdecomp/linalg.hpp"
#include "eqdecomp/polynomial.hpp"
#include "eqdecomp/scalar.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace eqdecomp {

/// Exponent pair u^u_deg t^t_deg. Ordered by t-degree first, then u-degree.
struct Monomial {
  unsigned u_deg = 0;
  unsigned t_deg = 0;

  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.t_deg != b.t_deg ? a.t_deg < b.t_deg : a.u_deg < b.u_deg;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/// Polynomial in the two indeterminates u and t. Only nonzero terms are
/// stored, so equality is structural.
template <typename Scalar>
class BiPolynomial {
 public:
  using Terms = std::map<Monomial, Scalar>;

  BiPolynomial() = default;
  BiPolynomial(const Scalar& c) { add_term({0, 0}, c); }  // NOLINT: constants convert implicitly
  BiPolynomial(int c) : BiPolynomial(Scalar(c)) {}        // NOLINT

  static BiPolynomial u() { return term({1, 0}, Scalar(1)); }
  static BiPolynomial t() { return term({0, 1}, Scalar(1)); }
  static BiPolynomial term(Monomial m, const Scalar& c) {
    BiPolynomial p;
    p.add_term(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  unsigned degree_u() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.u_deg);
    return d;
  }
  unsigned degree_t() const { return terms_.empty() ? 0 : terms_.rbegin()->first.t_deg; }

  void add_term(Monomial m, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  template <typename T>
  T evaluate(const T& u_value, const T& t_value) const {
    const std::vector<T> u_pow = powers(u_value, degree_u());
    const std::vector<T> t_pow = powers(t_value, degree_t());
    T acc(0);
    for (const auto& [m, c] : terms_) acc += T(c) * u_pow[m.u_deg] * t_pow[m.t_deg];
    return acc;
  }

  /// Substitutes u = u_value, leaving a polynomial in t.
  Polynomial<Scalar> specialize_u(const Scalar& u_value) const {
    std::vector<Scalar> c(degree_t() + 1, Scalar(0));
    for (const auto& [m, a] : terms_) c[m.t_deg] += a * ipow(u_value, m.u_deg);
    return Polynomial<Scalar>(std::move(c));
  }

  /// Substitutes t = t_value, leaving a polynomial in u.
  Polynomial<Scalar> specialize_t(const Scalar& t_value) const {
    std::vector<Scalar> c(degree_u() + 1, Scalar(0));
    for (const auto& [m, a] : terms_) c[m.u_deg] += a * ipow(t_value, m.t_deg);
    return Polynomial<Scalar>(std::move(c));
  }

  BiPolynomial& operator+=(const BiPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BiPolynomial& operator-=(const BiPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Scalar(-c));
    return *this;
  }
  friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
  friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
  friend BiPolynomial operator-(const BiPolynomial& a) { return BiPolynomial() - a; }
  friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Accumulate on a dense grid, t-major, then keep the nonzero cells.
    const std::size_t width = a.degree_u() + b.degree_u() + 1;
    const std::size_t height = a.degree_t() + b.degree_t() + 1;
    std::vector<Scalar> grid(width * height, Scalar(0));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        grid[(ma.t_deg + mb.t_deg) * width + ma.u_deg + mb.u_deg] += ca * cb;
    BiPolynomial out;
    for (std::size_t j = 0; j < height; ++j)
      for (std::size_t i = 0; i < width; ++i)
        if (Scalar& c = grid[j * width + i]; c != 0)
          out.terms_.emplace_hint(out.terms_.end(), Monomial{static_cast<unsigned>(i), static_cast<unsigned>(j)},
                                  std::move(c));
    return out;
  }
  BiPolynomial& operator*=(const BiPolynomial& o) { return *this = *this * o; }
  friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) = default;

  BiPolynomial pow(unsigned e) const {
    BiPolynomial result(Scalar(1));
    BiPolynomial base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) result *= base;
      if (e > 1) base *= base;
    }
    return result;
  }

  /// Term table, one "c*u^i*t^j" per term in (t-degree, u-degree) order.
  std::string to_string() const;

 private:
  template <typename T>
  static T ipow(const T& base, unsigned e) {
    T r(1);
    for (unsigned k = 0; k < e; ++k) r *= base;
    return r;
  }

  template <typename T>
  static std::vector<T> powers(const T& base, unsigned top) {
    std::vector<T> out{T(1)};
    for (unsigned k = 0; k < top; ++k) out.push_back(out.back() * base);
    return out;
  }

  Terms terms_;
};

using BiPoly = BiPolynomial<Integer>;
using RationalBiPoly = BiPolynomial<Rational>;

template <typename Scalar>
std::string BiPolynomial<Scalar>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    Scalar mag = negative ? Scalar(-c) : c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    const bool bare = m.u_deg == 0 && m.t_deg == 0;
    bool wrote = false;
    if (bare || mag != 1) {
      os << eqdecomp::to_string(mag);
      wrote = true;
    }
    auto factor = [&](const char* var, unsigned d) {
      if (d == 0) return;
      if (wrote) os << "*";
      os << var;
      if (d > 1) os << "^" << d;
      wrote = true;
    };
    factor("u", m.u_deg);
    factor("t", m.t_deg);
  }
  return os.str();
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const BiPolynomial<Scalar>& p) {
  return os << p.to_string();
}

inline RationalBiPoly to_rational(const BiPoly& p) {
  RationalBiPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, Rational(c));
  return out;
}

/// Requires integer coefficients; throws ValidationError otherwise.
BiPoly to_integer(const RationalBiPoly& p);

/// Exact quotient num / den. The t^0 part of den must be a nonzero constant;
/// the quotient is developed as a power series in t and multiplied back.
/// Throws InexactDivisionError when a remainder is left.
template <typename Scalar>
BiPolynomial<Scalar> bipoly_div_exact(const BiPolynomial<Scalar>& num, const BiPolynomial<Scalar>& den) {
  if (den.is_zero()) throw InexactDivisionError("division by the zero polynomial");
  const Scalar lead = den.coefficient({0, 0});
  for (const auto& [m, c] : den.terms())
    if (m.t_deg == 0 && m.u_deg != 0)
      throw InexactDivisionError("divisor's t^0 part is not constant: " + den.to_string());
  if (lead == 0) throw InexactDivisionError("divisor has no constant term: " + den.to_string());
  if (num.is_zero()) return {};

  auto slice = [](const BiPolynomial<Scalar>& p, unsigned t_deg) {
    std::vector<Scalar> c(p.degree_u() + 1, Scalar(0));
    for (const auto& [m, a] : p.terms())
      if (m.t_deg == t_deg) c[m.u_deg] = a;
    return Polynomial<Scalar>(std::move(c));
  };
  const unsigned dn = num.degree_t();
  const unsigned dd = den.degree_t();
  BiPolynomial<Scalar> quotient;
  if (dn >= dd) {
    std::vector<Polynomial<Scalar>> q;
    std::vector<Polynomial<Scalar>> den_slices;
    for (unsigned j = 0; j <= dd; ++j) den_slices.push_back(slice(den, j));
    for (unsigned j = 0; j <= dn - dd; ++j) {
      Polynomial<Scalar> acc = slice(num, j);
      for (unsigned i = 1; i <= std::min(j, dd); ++i) acc -= den_slices[i] * q[j - i];
      std::vector<Scalar> c;
      for (const auto& a : acc.coefficients()) {
        if constexpr (std::is_same_v<Scalar, Integer>) {
          if (a % lead != 0) throw InexactDivisionError("coefficient not divisible by " + eqdecomp::to_string(lead));
        }
        c.push_back(Scalar(a / lead));
      }
      q.emplace_back(std::move(c));
    }
    for (unsigned j = 0; j < q.size(); ++j)
      for (std::size_t k = 0; k < q[j].coefficients().size(); ++k)
        quotient.add_term({static_cast<unsigned>(k), j}, q[j].coefficients()[k]);
  }
  const BiPolynomial<Scalar> remainder = num - quotient * den;
  if (!remainder.is_zero()) throw InexactDivisionError(remainder.to_string());
  return quotient;
}

/// Determinant of a square matrix of bivariate polynomials, by evaluation on
/// the grid u in {0..deg_u_bound}, t in {1..deg_t_bound+1}, Bareiss at each
/// point, then interpolation in t and in u. A holdout point outside the grid
/// is checked against the interpolant; a mismatch means a bound was wrong and
/// raises BoundViolationError. For Integer the result is certified integral.
template <typename Scalar>
BiPolynomial<Scalar> bipoly_det(const Matrix<BiPolynomial<Scalar>>& m, unsigned deg_u_bound, unsigned deg_t_bound);

extern template BiPoly bipoly_det<Integer>(const Matrix<BiPoly>&, unsigned, unsigned);
extern template RationalBiPoly bipoly_det<Rational>(const Matrix<RationalBiPoly>&, unsigned, unsigned);

/// bipoly_det with bounds taken from the entries: the sum over rows of the
/// largest u-degree (resp. t-degree) in that row bounds every term of the
/// Leibniz expansion.
template <typename Scalar>
BiPolynomial<Scalar> bipoly_det(const Matrix<BiPolynomial<Scalar>>& m) {
  unsigned du = 0;
  unsigned dt = 0;
  for (Index i = 0; i < m.rows(); ++i) {
    unsigned row_u = 0;
    unsigned row_t = 0;
    for (Index j = 0; j < m.cols(); ++j) {
      row_u = std::max(row_u, m(i, j).degree_u());
      row_t = std::max(row_t, m(i, j).degree_t());
    }
    du += row_u;
    dt += row_t;
  }
  return bipoly_det(m, du, dt);
}

}  // namespace eqdecomp
