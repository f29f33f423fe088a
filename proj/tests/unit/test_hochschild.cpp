#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "singlab/hochschild.hpp"

using namespace singlab;

namespace {

const Field Q = Field::rationals();

HochschildSpec spec_of(const CurvedAlgebra& a, int L, bool reduced = true) {
  HochschildSpec s;
  s.algebra = a;
  s.length_bound = L;
  s.reduced = reduced;
  return s;
}

// dim Z(A) from the commutator map z ↦ (z e_j − e_j z)_j.
std::size_t center_dim(const CurvedAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix m(a.field, n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar c = a.mult[i][j][k] - a.mult[j][i][k];
        if (!c.is_zero()) m.set(j * n + k, i, c);
      }
  return n - oracle::rank_by_elimination(m);
}

// k[x]/x^N with x in degree 1, h = c·x² and d(x^k) = a·x^{k+1} for odd k.
CurvedAlgebra curved_truncation(int N, long c, long a, Grading g = Grading::Z) {
  CurvedAlgebra alg = truncated_polynomial_algebra(Q, N, 1);
  if (g == Grading::Z2) {
    alg.grading = Grading::Z2;
    for (int& d : alg.degrees) d %= 2;
  }
  if (N > 2) alg.curvature[2] = Scalar(Q, c);
  for (int k = 1; k + 1 < N; k += 2) alg.d.set(k + 1, k, Scalar(Q, a));
  return alg;
}

}  // namespace

TEST_CASE("validate_curved") {
  CHECK(validate_curved(truncated_polynomial_algebra(Q, 3)).ok);
  CHECK(validate_curved(matrix_algebra(Q, 2)).ok);
  CHECK(validate_curved(upper_triangular_algebra(Q, 2)).ok);
  CHECK(validate_curved(odd_quadratic_algebra(Q, Scalar(Q, -1))).ok);

  // k[x]/x^N with h = x²: passes because h is central.
  const CurvedAlgebra h = curved_truncation(5, 1, 0);
  for (std::size_t i = 0; i < h.dim(); ++i)
    CHECK(h.multiply(h.curvature, h.basis_vector(i)) == h.multiply(h.basis_vector(i), h.curvature));
  CHECK(validate_curved(h).ok);
  CHECK(validate_curved(curved_truncation(6, 3, -2)).ok);

  // x odd with d(x) = 1 and a wrong d(x²) = x.
  CurvedAlgebra bad = make_algebra(Q, Grading::Z2, {0, 1, 0}, {"1", "x", "x^2"}, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; i + j < 3; ++j) bad.mult[i][j][i + j] = Scalar::one(Q);
  bad.d.set(0, 1, Scalar::one(Q));
  bad.d.set(1, 2, Scalar::one(Q));
  const auto r = validate_curved(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.failure == "leibniz");
  CHECK(r.witness.size() == 3);

  // Curvature that is not central breaks d² = [h, −] when d = 0.
  CurvedAlgebra m2 = matrix_algebra(Q, 2);
  m2.grading = Grading::Z2;
  m2.curvature[1] = Scalar::one(Q);
  CHECK(validate_curved(m2).failure == "d2");
}

TEST_CASE("cohomology of the ground field") {
  const auto res = hochschild_cohomology(spec_of(ground_field_algebra(Q), 5), 3);
  CHECK(res.dims.at({0, 0}) == 1);
  CHECK(res.total(0) == 1);
  for (int i = 1; i <= 3; ++i) CHECK(res.total(i) == 0);
  REQUIRE(res.hh0_basis.size() == 1);
  CHECK(res.hh0_products.at({0, 0}) == Vector{Scalar::one(Q)});
}

TEST_CASE("HH0 is the center") {
  for (const auto& a : {matrix_algebra(Q, 2), upper_triangular_algebra(Q, 2), truncated_polynomial_algebra(Q, 3)}) {
    const auto res = hochschild_cohomology(spec_of(a, 3), 1);
    CHECK(res.dims.at({0, 0}) == center_dim(a));
    CHECK(res.hh0_basis.size() == center_dim(a));
    for (const Vector& z : res.hh0_basis)
      for (std::size_t i = 0; i < a.dim(); ++i) CHECK(a.multiply(z, a.basis_vector(i)) == a.multiply(a.basis_vector(i), z));
  }
  // M2 and the triangular algebra are separable or hereditary: HH^1 vanishes.
  CHECK(hochschild_cohomology(spec_of(matrix_algebra(Q, 2), 3), 1).total(1) == 0);
  CHECK(hochschild_cohomology(spec_of(upper_triangular_algebra(Q, 2), 3), 1).total(1) == 0);
  const auto oracle_dims = oracle::classical_hh_dims(matrix_algebra(Q, 2), 3);
  CHECK(oracle_dims.at({0, 0}) == 1);
  CHECK(oracle_dims.at({1, 1}) == 0);
}

TEST_CASE("dual numbers") {
  const CurvedAlgebra a = truncated_polynomial_algebra(Q, 2);
  const auto res = hochschild_cohomology(spec_of(a, 6), 4);
  CHECK(res.length_graded);
  // The 2-periodic resolution gives A, ker(2x), A/(2x), ker(2x), … .
  const std::size_t periodic[] = {2, 1, 1, 1, 1};
  for (int n = 0; n <= 4; ++n) CHECK(res.dims.at({n, n}) == periodic[n]);
  CHECK(res.hh0_basis.size() == 2);
  // x·x = 0 in HH⁰.
  CHECK(is_zero_vector(res.hh0_products.at({1, 1})));

  const auto classical = oracle::classical_hh_dims(a, 5);
  for (int n = 0; n < 4; ++n) CHECK(classical.at({n, n % 2}) == periodic[n]);

  const auto hom = hochschild_homology(spec_of(a, 6), 4);
  for (int n = 0; n <= 4; ++n) CHECK(hom.dims.at({n, n}) == periodic[n]);
  HochschildSpec bm = spec_of(a, 6);
  bm.support = HHSupport::Product;
  CHECK(hochschild_homology(bm, 4).dims == hom.dims);
}

TEST_CASE("odd Clifford algebra") {
  const CurvedAlgebra a = odd_quadratic_algebra(Q, Scalar(Q, -1));
  const auto res = hochschild_cohomology(spec_of(a, 6), 4);
  CHECK(res.total(0) == 1);
  CHECK(res.total(1) == 0);
  CHECK(res.dims.at({0, 0}) == 1);
  const auto classical = oracle::classical_hh_dims(a, 6);
  for (const auto& [k, v] : classical) CHECK(res.dims.at(k) == v);
  // Stable in L.
  CHECK(hochschild_cohomology(spec_of(a, 7), 4).dims == res.dims);
  CHECK(hochschild_cohomology(spec_of(a, 6, false), 4).dims == res.dims);
  const auto hom = hochschild_homology(spec_of(a, 6), 4);
  CHECK(hom.total(0) + hom.total(1) == 1);
}

TEST_CASE("reduced and unreduced complexes agree") {
  for (const auto& a : {truncated_polynomial_algebra(Q, 3), upper_triangular_algebra(Q, 2)}) {
    CHECK(hochschild_cohomology(spec_of(a, 4), 2).dims == hochschild_cohomology(spec_of(a, 4, false), 2).dims);
    CHECK(hochschild_homology(spec_of(a, 4), 2).dims == hochschild_homology(spec_of(a, 4, false), 2).dims);
  }
}

TEST_CASE("window bound") {
  try {
    hochschild_cohomology(spec_of(truncated_polynomial_algebra(Q, 2), 4), 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WindowExceedsBound);
  }
}

TEST_CASE("curvature term") {
  for (bool reduced : {true, false})
    for (auto v : {HHVariant::Cochain, HHVariant::Chain}) {
      HochschildSpec s = spec_of(curved_truncation(4, 1, 0), 4, reduced);
      s.variant = v;
      CHECK(curvature_term_check(s));
      s.algebra = matrix_algebra(Q, 2);
      s.length_bound = 2;
      CHECK(curvature_term_check(s));
    }
  // The unit is a cocycle even with curvature.
  const auto hc = hochschild_complex(spec_of(curved_truncation(4, 1, 0), 3, false));
  CHECK(is_zero_vector(hc.differential.column(hc.index(0, {}, 0))));
  // Truncation breaks δ² only at the top length.
  const auto res = hochschild_cohomology(spec_of(curved_truncation(4, 1, 0), 4), 2);
  CHECK_FALSE(res.length_graded);
  CHECK_FALSE(res.exact);

  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 8; ++trial) {
    const int N = 3 + trial % 3;
    const auto g = trial % 2 ? Grading::Z2 : Grading::Z;
    const CurvedAlgebra a = curved_truncation(N, coef(rng), coef(rng), g);
    REQUIRE(validate_curved(a).ok);
    for (auto v : {HHVariant::Cochain, HHVariant::Chain}) {
      HochschildSpec s = spec_of(a, 3, trial % 4 < 2);
      s.variant = v;
      CHECK(curvature_term_check(s));
    }
  }
}
