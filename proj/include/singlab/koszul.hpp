#pragma once

#include <map>
#include <vector>

#include "singlab/complex.hpp"

namespace singlab {

using Subset = std::vector<std::size_t>;

/// Size-j subsets of {0..r-1}, lexicographic.
std::vector<Subset> exterior_basis(std::size_t r, std::size_t j);
/// All subsets, by size then lexicographic; the basis of ∧*(A^r) used everywhere.
std::vector<Subset> exterior_basis_all(std::size_t r);

/// K(A; f_1..f_r): degree −j has basis e_S with |S| = j, and
/// d(e_{i_0}∧…∧e_{i_{j−1}}) = Σ_k (−1)^k f_{i_k} e_{S∖i_k} (contraction).
/// When the f_i are weight-homogeneous, e_S gets weight Σ_{i∈S} wt(f_i).
struct KoszulComplex {
  Ring ring;
  std::vector<Poly> fs;
  FreeComplex complex;
};

KoszulComplex koszul_complex(const Ring& ring, const std::vector<Poly>& fs);

/// h = left exterior multiplication by σ̲ = Σ σ_i e_i, with h[−j] : K^{−j} → K^{−j−1}.
struct SigmaHomotopy {
  KoszulComplex koszul;
  Poly sigma;
  std::vector<Poly> coeffs;
  std::map<int, PolyMatrix> h;
};

/// BadCoefficients unless Σ coeffs_i f_i = σ.
SigmaHomotopy sigma_homotopy(const KoszulComplex& k, const Poly& sigma, const std::vector<Poly>& coeffs);

/// dh + hd = σ·id on every exterior degree.
bool verify_null_homotopy(const SigmaHomotopy& s);
/// h∘h = 0.
bool verify_h_squared_zero(const SigmaHomotopy& s);

/// The contraction d and the wedge h as 2^r × 2^r matrices on ∧*(A^r).
PolyMatrix contraction_operator(const Ring& ring, const std::vector<Poly>& fs);
PolyMatrix wedge_operator(const Ring& ring, const std::vector<Poly>& coeffs);

}  // namespace singlab
