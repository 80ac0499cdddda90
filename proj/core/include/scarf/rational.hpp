#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace scarf {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". The result is canonicalized; q == 0 throws.
Rational parse_rational(std::string_view text);

/// Lowest terms, positive denominator, bare integer when q == 1.
std::string to_string(const Rational& value);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Inverts a square matrix by Gauss-Jordan elimination. Returns false when the
/// matrix is singular; `out` is unspecified in that case.
bool invert(const Matrix& a, Matrix& out);

}  // namespace scarf
