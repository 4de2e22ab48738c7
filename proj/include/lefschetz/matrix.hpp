#pragma once

#include "lefschetz/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lefschetz {

/// Dense matrix over the exact rationals. Everything downstream (basic bases,
/// operator matrices, cohomology ranks, harmonic solves) reduces to the
/// elimination routines here, so ranks and kernels are exact, never estimated.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_columns(std::size_t rows,
                                const std::vector<std::vector<Rational>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const RatMatrix& o) const = default;

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rational& c) const;
  RatMatrix transposed() const;
  RatMatrix pow(unsigned k) const; // square matrices only

  std::vector<Rational> apply(const std::vector<Rational>& x) const;
  std::vector<Rational> column(std::size_t j) const;

  bool is_zero() const;

  /// Reduced row echelon form; optionally reports the pivot columns.
  RatMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;

  std::size_t rank() const;

  /// Basis of { x : Ax = 0 }, one vector per free column, in column order.
  std::vector<std::vector<Rational>> kernel_basis() const;

  /// One solution of Ax = b (free variables set to zero), or nullopt if
  /// the system is inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  std::optional<RatMatrix> inverse() const;
  Rational determinant() const; // square matrices only

  /// [A | B] side by side; row counts must match.
  static RatMatrix hconcat(const RatMatrix& a, const RatMatrix& b);
  /// [A ; B] stacked; column counts must match.
  static RatMatrix vconcat(const RatMatrix& a, const RatMatrix& b);

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

} // namespace lefschetz
