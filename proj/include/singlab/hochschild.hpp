#pragma once

#include <map>
#include <utility>
#include <vector>

#include "singlab/algebra.hpp"

namespace singlab {

enum class HHVariant { Cochain, Chain };
/// Sum is the compactly supported variant, Product the Borel–Moore one. They agree
/// on every finite truncation, which is all that is ever assembled here.
enum class HHSupport { Sum, Product };

struct HochschildSpec {
  CurvedAlgebra algebra;
  HHVariant variant = HHVariant::Cochain;
  HHSupport support = HHSupport::Sum;
  int length_bound = 4;
  /// Bar factors from Ā = A/k·1 (normalised complex) instead of A.
  bool reduced = true;
};

/// The truncated Hochschild complex in the shifted bar convention, with
/// M₀ = s h, M₁(sa) = −s(da), M₂(sa, sb) = (−1)^{|sa|} s(ab).
///
/// Cochains Hom((sĀ)^{⊗n}, sA) for n ≤ L carry δφ = M∘φ − (−1)^{|φ|} φ∘M; chains
/// sA ⊗ (sĀ)^{⊗n} carry the cyclic extension of M. A cell's degree is the HH degree:
/// |φ| + 1 for cochains, −(total shifted degree) − 1 for chains, taken mod 2 for Z2.
struct HochschildComplex {
  HochschildSpec spec;
  std::vector<std::size_t> letters;  // basis indices allowed in bar slots
  struct Cell {
    int length;
    std::vector<std::size_t> word;  // positions in `letters`
    std::size_t slot;               // output (cochains) or x0 (chains), a basis index of A
    int degree;
  };
  std::vector<Cell> cells;
  Matrix differential;
  /// True when δ preserves the tensor length grading up to a shift by one
  /// (no differential and no curvature), so cohomology splits by length.
  bool length_graded = false;

  std::size_t index(int length, const std::vector<std::size_t>& word, std::size_t slot) const;
};

HochschildComplex hochschild_complex(const HochschildSpec& spec);

struct HHResult {
  /// Keyed by (slot, degree): slot is the tensor length when the complex is length
  /// graded and −1 otherwise (then the whole truncated complex is one slot).
  std::map<std::pair<int, int>, std::size_t> dims;
  bool length_graded = false;
  /// False when the truncated operator does not square to zero (curved input): dims
  /// are then dim ker / dim(im ∩ ker) and purely descriptive.
  bool exact = true;
  /// HH⁰ classes as elements of A, and their products over that basis.
  std::vector<Vector> hh0_basis;
  std::map<std::pair<std::size_t, std::size_t>, Vector> hh0_products;

  /// Sum of dims over all slots for one degree.
  std::size_t total(int degree) const;
};

/// WindowExceedsBound unless window_max < L − 1. Length-graded results report the
/// slots 0..window_max.
HHResult hochschild_cohomology(const HochschildSpec& spec, int window_max);
HHResult hochschild_homology(const HochschildSpec& spec, int window_max);

/// δ² = 0 on every cell of tensor length ≤ L − 1, curvature insertions included.
bool curvature_term_check(const HochschildSpec& spec);

}  // namespace singlab
