#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singlab/complex.hpp"

namespace singlab {

/// X = X_0 ⊕ X_1 (even, odd) of equal rank with φ : X_1 → X_0 and ψ : X_0 → X_1,
/// φψ = ψφ = σ·id.
struct MatrixFactorisation {
  Ring ring;
  Poly sigma;
  PolyMatrix phi;
  PolyMatrix psi;

  std::size_t rank() const { return phi.rows(); }
};

MatrixFactorisation make_mf(const Poly& sigma, PolyMatrix phi, PolyMatrix psi);

struct MFCheck {
  bool ok = true;
  /// "phi*psi" or "psi*phi" for the first failing product.
  std::string product;
  std::size_t row = 0, col = 0;
  Poly expected, got;
};
MFCheck mf_verify(const MatrixFactorisation& m);

MatrixFactorisation mf_shift(const MatrixFactorisation& m);
/// Block sum; SigmaMismatch when the targets differ.
MatrixFactorisation mf_sum(const MatrixFactorisation& a, const MatrixFactorisation& b);
/// Factorisation of σ_a + σ_b over the joined ring; VariableClash on shared names.
/// Even part X_0⊗Y_0 ⊕ X_1⊗Y_1, odd part X_0⊗Y_1 ⊕ X_1⊗Y_0.
MatrixFactorisation mf_tensor(const MatrixFactorisation& a, const MatrixFactorisation& b);

/// GX = (ω, ω), ω = [[y, ψ], [φ, −y]], a factorisation of σ + y².
MatrixFactorisation knoerrer_G(const MatrixFactorisation& m, const std::string& y, int y_weight = 1);
/// HX = ([[u, ψ], [φ, −v]], [[v, ψ], [φ, −u]]), a factorisation of σ + uv.
MatrixFactorisation knoerrer_H(const MatrixFactorisation& m, const std::string& u, const std::string& v,
                               int u_weight = 1, int v_weight = 1);
/// Sets the variable to 0 and removes it from the ring.
MatrixFactorisation restrict_rho(const MatrixFactorisation& m, const std::string& var);
/// Substitutes var ↦ −var.
MatrixFactorisation tau(const MatrixFactorisation& m, const std::string& var);

/// Generator weights in doubled units (monomial m has weight 2·wt(m)) for which
/// d is homogeneous of weight wt(σ). Nullopt when σ or an entry is not
/// weight-homogeneous, or the constraints are inconsistent.
struct MFGrading {
  std::vector<long> even, odd;
  long dweight = 0;
};
std::optional<MFGrading> infer_grading(const MatrixFactorisation& m);

/// The curved Z/2 complex (X, d) with curvature σ.
FreeComplex mf_to_complex(const MatrixFactorisation& m);

/// Hom^i(X,Y) = Hom(X_0, Y_i) ⊕ Hom(X_1, Y_{1+i}), ∂f = d_Y f − (−1)^{|f|} f d_X.
FreeComplex mf_hom_complex(const MatrixFactorisation& x, const MatrixFactorisation& y);

/// The 2-periodic complex of free A/(σ)-modules in degrees [−n, n]: degree i holds
/// X_{i mod 2}, with ψ̄ leaving even degrees and φ̄ leaving odd ones.
FreeComplex mf_unfold(const MatrixFactorisation& m, int n);

/// Exactness of the unfolding at X̄_0 and X̄_1, checked on the filtration by weighted
/// degree of normal forms. Works for inhomogeneous σ. One entry per filtration level.
struct UnfoldExactness {
  bool is_complex = true;
  std::vector<bool> exact_at_even, exact_at_odd;
  bool all() const;
};
UnfoldExactness unfold_exactness(const MatrixFactorisation& m, long degree_bound);

/// coker(φ) as a module over A/(σ): the presentation φ̄ and the quotient ring.
struct Presentation {
  GroebnerBasis quotient;
  PolyMatrix matrix;
};
Presentation mf_cokernel(const MatrixFactorisation& m);
/// dim_k of A^n / (im(matrix) + 𝔪^N A^n); equals the local length of the cokernel for
/// N large when that is finite.
std::size_t local_cokernel_dim(const PolyMatrix& matrix, long n_order);

/// Components f_0 : X_0 → Y_parity, f_1 : X_1 → Y_{1+parity}.
struct MFMorphism {
  int parity = 0;
  PolyMatrix f0, f1;
};
/// Closed degree-0 morphism: φ_Y f_1 = f_0 φ_X and ψ_Y f_0 = f_1 ψ_X.
bool is_closed_morphism(const MatrixFactorisation& x, const MatrixFactorisation& y, const MFMorphism& f);
/// Closed, degree 0, with invertible constant parts (so invertible over k⟦x⟧).
bool is_isomorphism(const MatrixFactorisation& x, const MatrixFactorisation& y, const MFMorphism& f);

enum class IsoStatus { Found, Unknown };
struct IsoSearch {
  IsoStatus status = IsoStatus::Unknown;
  MFMorphism iso;
};
/// Searches closed degree-0 morphisms with entries of total degree ≤ bound by
/// linear solving, and tests deterministic combinations for invertibility.
/// Unknown means none was found, not that none exists.
IsoSearch find_isomorphism(const MatrixFactorisation& x, const MatrixFactorisation& y, int degree_bound);

/// ρGX → X ⊕ ΣX given by f_0 = [[0, 1], [1, 0]], f_1 = id.
MFMorphism rho_G_certificate(const MatrixFactorisation& x);
/// ρ_1ρ_2HX → X ⊕ ΣX, same shape as for G.
MFMorphism rho_H_certificate(const MatrixFactorisation& x);
/// GX → G(ΣX) given by (M, −M) with M = [[0, i], [−i, 0]]; FieldLacksI without i.
MFMorphism sigma_G_certificate(const MatrixFactorisation& x, const Ring& ring);

}  // namespace singlab
