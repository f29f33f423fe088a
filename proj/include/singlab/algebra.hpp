#pragma once

#include <string>
#include <vector>

#include "singlab/complex.hpp"
#include "singlab/matrix.hpp"

namespace singlab {

/// A finite-dimensional graded algebra given by structure constants, with an
/// optional differential and curvature: a curved dg algebra when both are present.
///
/// Degrees are integers for Z grading and 0/1 for Z2. mult[i][j] is e_i·e_j in the
/// basis, d's column j is d(e_j), and `unit` indexes the basis element 1. Path
/// algebras with several vertices have 1 = Σ e_v outside the basis; `unit` is then
/// npos and `unit_combination` holds 1.
struct CurvedAlgebra {
  Field field;
  Grading grading = Grading::Z;
  std::vector<int> degrees;
  std::vector<std::string> names;
  std::vector<std::vector<Vector>> mult;
  Matrix d;
  Vector curvature;
  std::size_t unit = 0;
  Vector unit_combination;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t dim() const { return degrees.size(); }
  Vector one() const { return unit == npos ? unit_combination : basis_vector(unit); }
  Vector basis_vector(std::size_t i) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector differential(const Vector& a) const;
  bool has_curvature() const { return !is_zero_vector(curvature); }
  bool has_differential() const { return !d.is_zero(); }
  int parity(std::size_t i) const { return ((degrees[i] % 2) + 2) % 2; }
};

/// A zero algebra skeleton (all products zero, d = 0, h = 0) of the given degrees.
CurvedAlgebra make_algebra(Field f, Grading g, std::vector<int> degrees, std::vector<std::string> names,
                           std::size_t unit);

/// k itself.
CurvedAlgebra ground_field_algebra(Field f);
/// k[x]/x^n with basis 1, x, …, x^{n−1}, x in degree `x_degree`.
CurvedAlgebra truncated_polynomial_algebra(Field f, int n, int x_degree = 0);
/// k[t]/(t² − c) with t odd, Z2-graded. c = −1 gives the Clifford algebra ℚ[t]/(t²+1).
CurvedAlgebra odd_quadratic_algebra(Field f, const Scalar& c);
/// M_n(k) with basis E_ij row-major.
CurvedAlgebra matrix_algebra(Field f, int n);
/// Upper-triangular n×n matrices, basis E_ij (i ≤ j) row-major.
CurvedAlgebra upper_triangular_algebra(Field f, int n);

struct CurvedCheck {
  bool ok = true;
  /// "unit", "degree", "associativity", "dh", "d2", "leibniz".
  std::string failure;
  /// Basis indices: (i, j, k) for associativity, (i, j, coordinate) for Leibniz.
  std::vector<std::size_t> witness;
};
/// Checks unit, grading, associativity, the graded Leibniz rule, d(h) = 0 and d² = [h, −], in that order.
CurvedCheck validate_curved(const CurvedAlgebra& a);

}  // namespace singlab
