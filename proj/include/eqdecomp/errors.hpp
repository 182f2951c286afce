#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqdecomp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Shapes that do not fit together.
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(std::ptrdiff_t column)
      : Error("matrix is singular: no pivot in column " + std::to_string(column)), column_(column) {}
  std::ptrdiff_t column() const { return column_; }

 private:
  std::ptrdiff_t column_;
};

// Carries the nonzero remainder in printable form.
class InexactDivisionError : public Error {
 public:
  explicit InexactDivisionError(std::string remainder)
      : Error("division is not exact, remainder " + remainder), remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

// A bivariate determinant did not match its interpolant at a holdout point.
class BoundViolationError : public Error {
 public:
  using Error::Error;
};

class NotEquitableError : public Error {
 public:
  NotEquitableError(std::size_t cell_i, std::size_t cell_j, std::ptrdiff_t row)
      : Error("pair is not equitable: block (" + std::to_string(cell_i + 1) + "," +
              std::to_string(cell_j + 1) + ") has non-constant row sum at row " +
              std::to_string(row + 1)),
        cell_i_(cell_i),
        cell_j_(cell_j),
        row_(row) {}
  std::size_t cell_i() const { return cell_i_; }
  std::size_t cell_j() const { return cell_j_; }
  std::ptrdiff_t row() const { return row_; }

 private:
  std::size_t cell_i_;
  std::size_t cell_j_;
  std::ptrdiff_t row_;
};

// An identity that must hold by construction failed. Never valid input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace eqdecomp
