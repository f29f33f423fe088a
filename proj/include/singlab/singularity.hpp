#pragma once

#include <optional>
#include <vector>

#include "singlab/groebner.hpp"

namespace singlab {

std::vector<Poly> jacobian_ideal(const Poly& sigma);

/// A quotient algebra of the polynomial ring together with how it was obtained.
struct LocalAlgebra {
  GroebnerBasis gb;
  QuotientBasis basis;
  /// Dimension when finite.
  std::optional<std::size_t> number;
  /// Set when 𝔪^N was added to the ideal.
  std::optional<long> truncated_at;
};

/// k[x]/(∂σ). With `order_bound` N the computation is done in k[x]/𝔪^N.
LocalAlgebra milnor_algebra(const Poly& sigma, std::optional<long> order_bound = std::nullopt);
/// k[x]/(σ, ∂σ).
LocalAlgebra tjurina_algebra(const Poly& sigma, std::optional<long> order_bound = std::nullopt);

struct QuasiHomogeneity {
  bool holds = false;
  /// The common weighted degree (meaningful when `holds`).
  long degree = 0;
};

/// QHofZeroUndefined for σ = 0.
QuasiHomogeneity is_quasi_homogeneous(const Poly& sigma, const std::vector<int>& weights);

}  // namespace singlab
