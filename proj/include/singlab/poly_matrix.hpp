#pragma once

#include <functional>
#include <string>
#include <vector>

#include "singlab/groebner.hpp"

namespace singlab {

/// Dense matrix of polynomials over one ring. Desk-scale sizes only.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(const Ring& ring, std::size_t n);
  /// p·id_n.
  static PolyMatrix scalar(const Poly& p, std::size_t n);
  /// Parses row-major entries in the polynomial grammar.
  static PolyMatrix parse(const Ring& ring, const std::vector<std::vector<std::string>>& rows);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Poly& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Poly& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Poly p);

  bool is_zero() const;
  PolyMatrix transpose() const;
  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& m);
  /// Applies f entrywise; the result lives in `target`.
  PolyMatrix map(const Ring& target, const std::function<Poly(const Poly&)>& f) const;
  /// Entrywise normal form modulo an ideal.
  PolyMatrix reduced(const GroebnerBasis& gb) const;
  PolyMatrix to_ring(const Ring& target) const;

  PolyMatrix operator-() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix scaled(const Poly& p) const;
  PolyMatrix scaled(const Scalar& s) const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  std::vector<std::vector<std::string>> to_strings() const;

  /// [[a, b], [c, d]] block assembly (each row of blocks must agree in height).
  static PolyMatrix blocks(const std::vector<std::vector<PolyMatrix>>& grid);

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

/// Kronecker product a ⊗ b: block (i,j) is a(i,j)·b.
PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace singlab
