#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singlab/matfac.hpp"

namespace singlab {

/// L^stab = (∧*(A^r), h + d) for L = A/(f_1..f_r) and σ = Σ σ_i f_i.
/// Even part: exterior monomials of even size, odd part: odd size, each in the
/// Koszul basis order restricted to that parity.
struct Stabilisation {
  Ring ring;
  std::vector<Poly> fs;
  Poly sigma;
  std::vector<Poly> coeffs;
  /// True when the cofactors came from division_coefficients rather than the caller.
  bool coeffs_from_division = false;
  MatrixFactorisation mf;
};

/// NotInIdeal when σ ∉ (fs) and no cofactors are given; BadCoefficients when the
/// given cofactors do not reproduce σ.
Stabilisation stabilise(const Ring& ring, const std::vector<Poly>& fs, const Poly& sigma,
                        const std::optional<std::vector<Poly>>& coeffs = std::nullopt);

/// Bitmask subsets of {0..r−1}.
using Mask = std::uint32_t;

/// An element of Poly(r) = A⟨θ_i, T_i⟩ with θθ = −θθ, TT = −TT, T_iθ_j + θ_jT_i = δ_ij,
/// written in the normal form Σ p_{S,U} θ_S T_U (indices increasing within θ_S and T_U).
class PolyR {
 public:
  PolyR() = default;
  PolyR(Ring ring, std::size_t r);

  static PolyR scalar(const Ring& ring, std::size_t r, const Poly& p);
  static PolyR theta(const Ring& ring, std::size_t r, std::size_t i);
  static PolyR T(const Ring& ring, std::size_t r, std::size_t i);
  static PolyR basis(const Ring& ring, std::size_t r, Mask s, Mask u, const Poly& p);

  const Ring& ring() const { return ring_; }
  std::size_t r() const { return r_; }
  const std::map<std::pair<Mask, Mask>, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// 0 or 1; nullopt for a mixed or zero element.
  std::optional<int> parity() const;
  /// The part of the given parity.
  PolyR part(int parity) const;
  Poly coefficient(Mask s, Mask u) const;

  PolyR operator-() const;
  PolyR& operator+=(const PolyR& o);
  friend PolyR operator+(PolyR a, const PolyR& b) { return a += b; }
  friend PolyR operator-(PolyR a, const PolyR& b) { return a += -b; }
  friend PolyR operator*(const PolyR& a, const PolyR& b);
  PolyR scaled(const Poly& p) const;
  PolyR scaled(const Scalar& s) const;
  friend bool operator==(const PolyR& a, const PolyR& b);

  /// Terms in basis order, e.g. "x*th1*T1 - T1 + th1".
  std::string to_string() const;

 private:
  void add_term(Mask s, Mask u, const Poly& p);
  Ring ring_;
  std::size_t r_ = 0;
  std::map<std::pair<Mask, Mask>, Poly> terms_;
};

PolyR poly_r_multiply(const PolyR& a, const PolyR& b);

/// The action of Poly(r) on ∧*(A^r) (basis exterior_basis_all): θ_i wedges e_i on the
/// left and T_i contracts it.
PolyMatrix poly_r_action(const PolyR& a);

/// (Poly(r), δ) with δ = [D, −], D = Σ f_i T_i + σ_i θ_i, so δθ_i = f_i and δT_i = σ_i.
///
/// Weights use doubled units: x_j has weight 2·wt(x_j), θ_i has 2·wt(f_i) − wt(σ),
/// T_i the negative of that, and δ raises weight by wt(σ). This makes the Weyl
/// relations homogeneous and matches the weights of matrix factorisation hom complexes.
struct EndDGAlgebra {
  Ring ring;
  std::size_t r = 0;
  std::vector<Poly> fs, coeffs;
  Poly sigma;
  PolyR D;
  bool homogeneous = false;
  std::vector<long> theta_weight, t_weight;
  long dweight = 0;

  PolyR delta(const PolyR& a) const;
  long weight(Mask s, Mask u) const;
};

EndDGAlgebra end_dg_algebra(const Ring& ring, const std::vector<Poly>& fs, const std::vector<Poly>& coeffs);
EndDGAlgebra end_dg_algebra(const Stabilisation& s);

/// δ² = 0 on every basis element x^γ θ_S T_U of weight ≤ bound (all of them up to
/// total x-degree `bound` when the algebra is not homogeneous).
bool verify_delta_squared(const EndDGAlgebra& e, long bound);

struct CohomologyClassRep {
  int parity = 0;
  long weight = 0;
  PolyR rep;
};

/// Cohomology of (Poly(r), δ) by weight slice. Representatives are chosen
/// deterministically and scaled so their first coordinate in basis order is 1.
/// products[{i, j}] holds the coordinates of [rep_i·rep_j] over all classes; pairs
/// whose product falls outside the computed range are absent.
struct EndCohomology {
  std::map<std::pair<int, long>, std::size_t> dims;
  std::vector<CohomologyClassRep> classes;
  std::map<std::pair<std::size_t, std::size_t>, Vector> products;
  /// Set when computed in Poly(r)/𝔪^N; all classes are then filed under weight 0.
  std::optional<long> truncated_at;
  long min_weight = 0, max_weight = 0;
};

/// NotHomogeneous when the data are not weight-homogeneous and no order bound is given.
EndCohomology end_cohomology(const EndDGAlgebra& e, long weight_bound, std::optional<long> order_bound = std::nullopt);

/// Coordinates of the class of a homogeneous cocycle over h.classes; nullopt when it
/// is not a cocycle or lies outside the computed range.
std::optional<Vector> cohomology_class(const EndDGAlgebra& e, const EndCohomology& h, const PolyR& z);

/// Clifford presentation of a quadratic form σ = Σ_{i≤j} c_ij x_i x_j: generators
/// Γ_i = T_i − Σ_j c_ij θ_j (cocycles for f = x, σ_i = Σ_j c_ij x_j) with
/// Γ_iΓ_j + Γ_jΓ_i = g_ij, g = −(C + Cᵀ). For x² this gives Γ² = −1.
struct CliffordPresentation {
  std::vector<Poly> coeffs;
  std::vector<std::vector<Scalar>> gram;
  std::vector<PolyR> generators;
  std::size_t dimension = 0;
};
/// NotQuadratic unless every term of σ has total degree 2.
CliffordPresentation clifford_of_quadratic(const Poly& sigma);

}  // namespace singlab
