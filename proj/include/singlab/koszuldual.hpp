#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "singlab/algebra.hpp"

namespace singlab {

/// A word in the bar or cobar construction: basis indices of the augmentation ideal
/// (bar) or coaugmentation coideal (cobar), in the order of the algebra's basis.
using Word = std::vector<std::size_t>;

/// Word length n of the bar construction on (sĀ)^{⊗n}. Basis elements of Ā are the
/// basis elements of A other than the unit. The bar degree of a word is Σ|a_i| − n.
struct BarPiece {
  std::size_t length = 0;
  std::vector<Word> words;
  std::vector<int> degrees;
  /// d_I : piece n → piece n (from the differential of A).
  Matrix internal;
  /// d_E : piece n → piece n−1 (multiplication of adjacent letters); 0×k for n = 0.
  Matrix external;
};

/// Pieces n = 0..L of BA with M₁(sa) = −s(da) and M₂(sa, sb) = (−1)^{|sa|} s(ab) acting
/// with the Koszul sign of the letters to their left. NotAugmented unless A has a unit
/// basis element, a Z grading, and Ā is closed under product and differential.
std::vector<BarPiece> bar(const CurvedAlgebra& a, int max_length);
/// (d_I + d_E)² = 0 across all computed pieces.
bool bar_d_squared(const std::vector<BarPiece>& pieces);

/// Cohomology of (B_{≤L}A)^* in degrees 0..window_max, where a functional on words of
/// bar degree −p has degree p. Products are the convolution
/// (f·g)(w₁w₂) = (−1)^{|g||w₁|} f(w₁) g(w₂) on representatives, reduced to classes.
struct KoszulDualResult {
  std::map<int, std::size_t> dims;
  /// Words of bar degree −p with length ≤ L, indexing the cochains of degree p.
  std::map<int, std::vector<Word>> words;
  std::map<int, std::vector<Vector>> representatives;
  /// (p, i, q, j) ↦ coordinates of rep_{p,i}·rep_{q,j} in the classes of degree p+q.
  std::map<std::tuple<int, std::size_t, int, std::size_t>, Vector> products;

  /// Bilinear extension of `products` to class coordinates.
  Vector product(int p, const Vector& x, int q, const Vector& y) const;
  /// Coordinates of x^1, x^2, … while the degree stays in the window; x is the class
  /// of degree p with coordinates `x`.
  std::vector<Vector> powers(int p, const Vector& x) const;
};

/// WindowExceedsBound unless window_max < L − 1.
KoszulDualResult koszul_dual_cohomology(const CurvedAlgebra& a, int max_length, int window_max);

/// A finite-dimensional Z-graded dg coalgebra. `comult[i]` lists Δ(c_i) as
/// (left, right, coefficient) terms, d's column j is d(c_j), and `coaugmentation`
/// indexes the image of 1; the counit is the coefficient of that element. Weights
/// are positive on the other basis elements and only used for truncation.
struct ConilpotentCoalgebra {
  Field field;
  std::vector<int> degrees;
  std::vector<std::string> names;
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> comult;
  Matrix d;
  std::size_t coaugmentation = 0;
  std::vector<int> weights;

  std::size_t dim() const { return degrees.size(); }
};

/// Counit, coassociativity, coderivation, d² = 0 and conilpotency. Throws
/// NotConilpotent when the reduced coproduct is not nilpotent and InvalidInput for the
/// other failures.
void validate_coalgebra(const ConilpotentCoalgebra& c);

/// A* with Δ = m* and counit the evaluation at 1, in the dual basis. Requires A
/// augmented (NotAugmented); the weights are 1.
ConilpotentCoalgebra dual_coalgebra(const CurvedAlgebra& a);
/// C* with multiplication Δ* and unit η*, in the dual basis.
CurvedAlgebra dual_algebra(const ConilpotentCoalgebra& c);
/// B_{≤L}A as a coalgebra under deconcatenation, basis = bar words of length ≤ L
/// (the empty word is the coaugmentation), weight = word length.
ConilpotentCoalgebra bar_coalgebra(const CurvedAlgebra& a, int max_length);

/// The truncated cobar construction T(s⁻¹C̄): words of total weight ≤ L, degree
/// Σ(|c_i| + 1), differential D(s⁻¹c) = −s⁻¹dc + Σ (−1)^{|c′|} s⁻¹c′ ⊗ s⁻¹c″ extended as a
/// derivation. Terms leaving the truncation are dropped.
struct CobarComplex {
  std::vector<Word> words;
  std::vector<int> degrees;
  Matrix differential;
  std::size_t index(const Word& w) const;
  std::map<Word, std::size_t> lookup;
};

/// NotConilpotent for an input whose reduced coproduct is not nilpotent.
CobarComplex cobar(const ConilpotentCoalgebra& c, int max_weight);
/// dim ker / dim im of the truncated cobar differential in each degree present.
std::map<int, std::size_t> cobar_cohomology(const CobarComplex& c);
bool cobar_d_squared(const CobarComplex& c);

struct CounitCheck {
  bool ok = false;
  std::size_t h0_dim = 0;
  std::size_t algebra_dim = 0;
  bool surjective = false;
  bool kernel_is_image = false;
};

/// ΩB_{≤L}A → A in degree 0: H⁰ has dim A, the counit is onto and its kernel is the
/// image of d. A must be augmented, without differential and concentrated in degree 0.
CounitCheck counit_h0_check(const CurvedAlgebra& a, int max_length);

}  // namespace singlab
