#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "hallcx/exactla/prime_field.hpp"

namespace hallcx {

using Vec = std::vector<Elem>;

/// Dense row-major matrix of residues. The field is supplied by the caller to
/// every arithmetic routine; a Matrix itself only stores reduced entries.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Entries are reduced modulo `field.p()`.
  Matrix(const PrimeField& field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, std::span<const Vec> cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  const std::vector<Elem>& data() const noexcept { return data_; }
  std::vector<Elem>& data() noexcept { return data_; }

  bool is_zero() const noexcept;

  auto operator<=>(const Matrix&) const = default;
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
Vec multiply(const PrimeField& f, const Matrix& a, std::span<const Elem> v);
Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix sub(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix scale(const PrimeField& f, const Matrix& a, Elem c);
/// a += c * b, in place.
void axpy(const PrimeField& f, Matrix& a, Elem c, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix submatrix(const Matrix& a, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols);
/// Columns of `a` selected by index.
Matrix select_columns(const Matrix& a, std::span<const std::size_t> idx);

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

Echelon rref(const PrimeField& f, Matrix m);
std::size_t rank(const PrimeField& f, const Matrix& m);
/// Basis of {x : m x = 0}; size is cols - rank.
std::vector<Vec> solve_kernel(const PrimeField& f, const Matrix& m);
/// Some x with a x = b, if one exists.
std::optional<Vec> solve(const PrimeField& f, const Matrix& a, std::span<const Elem> b);
/// Some X with a X = b, if one exists.
std::optional<Matrix> solve(const PrimeField& f, const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const PrimeField& f, const Matrix& a);
bool is_invertible(const PrimeField& f, const Matrix& a);

/// Columns forming a basis of the column space of `m`.
Matrix column_basis(const PrimeField& f, const Matrix& m);
/// Kernel basis as the columns of a matrix (cols(m) x nullity).
Matrix kernel_matrix(const PrimeField& f, const Matrix& m);
/// Standard basis vectors completing the independent columns of `basis` to a
/// basis of F_p^dim, returned as columns.
Matrix complement_columns(const PrimeField& f, const Matrix& basis, std::size_t dim);

}  // namespace hallcx
