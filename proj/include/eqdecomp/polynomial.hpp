#pragma once

#include "eqdecomp/errors.hpp"
#include "eqdecomp/scalar.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace eqdecomp {

/// Dense univariate polynomial with exact coefficients, stored in ascending
/// degree order. The stored vector never ends in a zero, so the zero
/// polynomial has no coefficients and no degree.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }
  Polynomial(std::initializer_list<Scalar> ascending) : coeffs_(ascending) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }
  static Polynomial x() { return Polynomial(std::vector<Scalar>{Scalar(0), Scalar(1)}); }
  // x - root
  static Polynomial linear(const Scalar& root) { return Polynomial(std::vector<Scalar>{Scalar(-root), Scalar(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  template <typename T>
  T evaluate(const T& at) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = T(acc * at + T(*it));
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Scalar& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(Scalar(1));
    for (unsigned k = 0; k < e; ++k) result *= *this;
    return result;
  }

  // Coefficients reversed up to `degree`: x^degree * p(1/x).
  Polynomial reversed(std::size_t degree) const {
    std::vector<Scalar> out(degree + 1, Scalar(0));
    for (std::size_t k = 0; k < coeffs_.size() && k <= degree; ++k) out[degree - k] = coeffs_[k];
    return Polynomial(std::move(out));
  }

  // Prints with `var` as the indeterminate, highest degree first.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using UniPoly = Polynomial<Rational>;
using IntPoly = Polynomial<Integer>;

template <typename Scalar>
std::string Polynomial<Scalar>::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    Scalar mag = negative ? Scalar(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) os << eqdecomp::to_string(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Polynomial<Scalar>& p) {
  return os << p.to_string();
}

/// Quotient and remainder over the rationals.
std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& num, const UniPoly& den);

/// Quotient of an exact division; throws InexactDivisionError carrying the
/// remainder otherwise.
UniPoly poly_div_exact(const UniPoly& num, const UniPoly& den);

/// Newton interpolation through (xs[k], ys[k]); xs must be distinct.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

inline UniPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  for (const auto& a : p.coefficients()) c.emplace_back(a);
  return UniPoly(std::move(c));
}

inline bool is_integral(const UniPoly& p) {
  for (const auto& c : p.coefficients())
    if (!is_integral(c)) return false;
  return true;
}

}  // namespace eqdecomp
