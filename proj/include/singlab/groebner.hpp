#pragma once

#include <optional>
#include <vector>

#include "singlab/poly.hpp"

namespace singlab {

/// Reduced Gröbner basis for the ring's weighted grevlex order: monic generators,
/// sorted by leading monomial, largest first.
struct GroebnerBasis {
  Ring ring;
  std::vector<Poly> gens;

  bool is_unit_ideal() const;
  /// Leading monomials of the generators.
  std::vector<Monomial> leading_monomials() const;
};

/// Standard monomials of a Gröbner basis. `monomials` is complete only when `finite`;
/// otherwise it lists the standard monomials up to the degree bound that was asked for.
struct QuotientBasis {
  std::vector<Monomial> monomials;
  bool finite = false;

  std::size_t dim() const { return monomials.size(); }
};

/// Buchberger's algorithm. `ring` is needed for the empty generator list.
GroebnerBasis buchberger(const Ring& ring, const std::vector<Poly>& gens);

/// Remainder of f after full reduction by `gb` (the normal form).
Poly normal_form(const Poly& f, const GroebnerBasis& gb);
bool in_ideal(const Poly& f, const GroebnerBasis& gb);

/// Standard monomials. For an infinite quotient, pass `degree_bound` to list those of
/// total degree at most the bound.
QuotientBasis quotient_basis(const GroebnerBasis& gb, std::optional<long> degree_bound = std::nullopt);
/// Standard monomials of one weighted degree, descending.
std::vector<Monomial> standard_monomials_of_weight(const GroebnerBasis& gb, long w);

/// All monomials of total degree n, as polynomials (generators of 𝔪^n).
std::vector<Poly> maximal_ideal_power(const Ring& ring, long n);

/// Cofactors σ_i with σ = Σ σ_i g_i. Plain division by `gens` in the given order is
/// tried first; when it leaves a remainder, a Gröbner basis with tracked cofactors is
/// used. Throws NotInIdeal when σ is not in the ideal.
std::vector<Poly> division_coefficients(const Poly& sigma, const std::vector<Poly>& gens);

}  // namespace singlab
