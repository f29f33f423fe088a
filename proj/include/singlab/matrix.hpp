#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "singlab/scalar.hpp"

namespace singlab {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t n);
bool is_zero_vector(std::span<const Scalar> v);

/// Sparse exact matrix. Each row is a list of (column, value) pairs kept sorted by
/// column with no stored zeros, so iteration order is deterministic.
class Matrix {
 public:
  struct Entry {
    std::size_t col;
    Scalar value;
  };
  using Row = std::vector<Entry>;

  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(Field f, const std::vector<Vector>& columns, std::size_t rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return data_[r]; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add_to(std::size_t r, std::size_t c, const Scalar& v);
  /// Replaces a whole row; entries need not be sorted and may contain duplicates.
  void set_row(std::size_t r, Row entries);

  bool is_zero() const;
  std::size_t nonzeros() const;
  Matrix transpose() const;
  Vector apply(std::span<const Scalar> v) const;
  Vector column(std::size_t c) const;
  Vector dense_row(std::size_t r) const;

  /// Rows [r0, r0+nr) × columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& s) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  void check_same_field(const Matrix& o) const;

  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form with its pivot columns. Zero rows are moved to the bottom.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// A basis of the right kernel {v : m v = 0}, one vector per non-pivot column.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

/// Among `candidates` (in order), the indices that are independent modulo span(`base`).
/// Used to pick deterministic cohomology representatives.
std::vector<std::size_t> independent_modulo(Field f, std::size_t dim, const std::vector<Vector>& base,
                                            const std::vector<Vector>& candidates);

}  // namespace singlab
