#include "singlab/singularity.hpp"

namespace singlab {

std::vector<Poly> jacobian_ideal(const Poly& sigma) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < sigma.ring().nvars(); ++i) out.push_back(sigma.derivative(i));
  return out;
}

namespace {

LocalAlgebra quotient_by(const Poly& sigma, bool with_sigma, std::optional<long> order_bound) {
  if (!sigma.constant_term().is_zero())
    fail(ErrorCode::NotInMaximalIdeal, "σ = " + sigma.to_string() + " has a nonzero constant term");
  const Field f = sigma.ring().field();
  if (f.kind() == FieldKind::GFp && f.characteristic() <= static_cast<std::uint32_t>(std::max(0L, sigma.total_degree())))
    fail(ErrorCode::CharTooSmall, "characteristic " + std::to_string(f.characteristic()) + " is at most deg σ");
  auto gens = jacobian_ideal(sigma);
  if (with_sigma) gens.push_back(sigma);
  if (order_bound) {
    if (*order_bound < 1) fail(ErrorCode::InvalidInput, "order bound must be positive");
    for (auto& m : maximal_ideal_power(sigma.ring(), *order_bound)) gens.push_back(std::move(m));
  }
  LocalAlgebra out{buchberger(sigma.ring(), gens), {}, std::nullopt, order_bound};
  out.basis = quotient_basis(out.gb);
  if (out.basis.finite) out.number = out.basis.dim();
  return out;
}

}  // namespace

LocalAlgebra milnor_algebra(const Poly& sigma, std::optional<long> order_bound) {
  return quotient_by(sigma, false, order_bound);
}

LocalAlgebra tjurina_algebra(const Poly& sigma, std::optional<long> order_bound) {
  return quotient_by(sigma, true, order_bound);
}

QuasiHomogeneity is_quasi_homogeneous(const Poly& sigma, const std::vector<int>& weights) {
  if (sigma.is_zero()) fail(ErrorCode::QHofZeroUndefined, "quasi-homogeneity of 0 is undefined");
  const Ring r = sigma.ring().with_weights(weights);
  const Poly p = sigma.to_ring(r);
  QuasiHomogeneity q;
  if (auto w = p.homogeneous_weight()) {
    q.holds = true;
    q.degree = *w;
  }
  return q;
}

}  // namespace singlab
