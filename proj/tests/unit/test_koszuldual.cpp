#include <optional>

#include "doctest.h"
#include "oracles.hpp"
#include "singlab/koszuldual.hpp"

using namespace singlab;

namespace {

const Field Q = Field::rationals();

template <class Fn>
std::optional<ErrorCode> code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// k[x]/x⁴ with x in degree 1 and d(x) = x²: a dg algebra with nonzero d.
CurvedAlgebra dg_quartic() {
  CurvedAlgebra a = truncated_polynomial_algebra(Q, 4, 1);
  a.d.set(2, 1, Scalar::one(Q));
  return a;
}

// k ⊕ ku ⊕ kv, u in degree −1, v in degree 0, du = v, square-zero.
CurvedAlgebra square_zero_cone() {
  CurvedAlgebra a = make_algebra(Q, Grading::Z, {0, -1, 0}, {"1", "u", "v"}, 0);
  for (std::size_t i = 0; i < 3; ++i) {
    a.mult[0][i][i] = Scalar::one(Q);
    a.mult[i][0][i] = Scalar::one(Q);
  }
  a.d.set(2, 1, Scalar::one(Q));
  return a;
}

// The degree block of a cobar differential, ranked by textbook elimination.
std::size_t block_rank(const CobarComplex& c, int from) {
  std::vector<std::size_t> src, dst;
  for (std::size_t i = 0; i < c.words.size(); ++i) {
    if (c.degrees[i] == from) src.push_back(i);
    if (c.degrees[i] == from + 1) dst.push_back(i);
  }
  Matrix m(Q, dst.size(), src.size());
  for (std::size_t r = 0; r < dst.size(); ++r)
    for (std::size_t k = 0; k < src.size(); ++k) m.set(r, k, c.differential.at(dst[r], src[k]));
  return oracle::rank_by_elimination(m);
}

}  // namespace

TEST_CASE("bar pieces") {
  auto pieces = bar(ground_field_algebra(Q), 4);
  CHECK(pieces[0].words.size() == 1);
  for (int n = 1; n <= 4; ++n) CHECK(pieces[n].words.empty());

  const CurvedAlgebra dual = truncated_polynomial_algebra(Q, 2);
  pieces = bar(dual, 5);
  for (int n = 0; n <= 5; ++n) {
    REQUIRE(pieces[n].words.size() == 1);
    CHECK(pieces[n].degrees[0] == -n);
  }
  CHECK(pieces[2].external.is_zero());
  CHECK(bar_d_squared(pieces));

  // Hand signs on k[x]/x⁴: d_E[x|x] = −[x²], d_E[x|x|x] = −[x²|x] + [x|x²].
  const CurvedAlgebra quartic = truncated_polynomial_algebra(Q, 4);
  pieces = bar(quartic, 3);
  CHECK(pieces[2].words.size() == 9);
  auto col = [&](std::size_t n, const Word& w) {
    const auto& ws = pieces[n].words;
    return static_cast<std::size_t>(std::find(ws.begin(), ws.end(), w) - ws.begin());
  };
  CHECK(pieces[2].external.at(col(1, {2}), col(2, {1, 1})) == Scalar(Q, -1));
  CHECK(pieces[2].external.at(col(1, {1}), col(2, {1, 1})).is_zero());
  CHECK(pieces[3].external.at(col(2, {2, 1}), col(3, {1, 1, 1})) == Scalar(Q, -1));
  CHECK(pieces[3].external.at(col(2, {1, 2}), col(3, {1, 1, 1})) == Scalar(Q, 1));
  CHECK(bar_d_squared(pieces));

  const CurvedAlgebra dq = dg_quartic();
  REQUIRE(validate_curved(dq).ok);
  CHECK(bar_d_squared(bar(dq, 4)));
  CHECK(bar_d_squared(bar(square_zero_cone(), 4)));

  CHECK(code_of([] { bar(matrix_algebra(Q, 2), 2); }) == ErrorCode::NotAugmented);
}

TEST_CASE("Koszul dual of the dual numbers") {
  const CurvedAlgebra a = truncated_polynomial_algebra(Q, 2);
  const auto res = koszul_dual_cohomology(a, 6, 4);
  for (int p = 0; p <= 4; ++p) CHECK(res.dims.at(p) == 1);
  const auto pw = res.powers(1, Vector{Scalar::one(Q)});
  CHECK(pw.size() == 4);
  for (const Vector& v : pw) CHECK_FALSE(is_zero_vector(v));
  // Stable in L.
  CHECK(koszul_dual_cohomology(a, 8, 4).dims == res.dims);
  CHECK(code_of([&] { koszul_dual_cohomology(a, 6, 5); }) == ErrorCode::WindowExceedsBound);

  // ε in degree −1: words of length m sit in dual degree 2m and d = 0.
  const CurvedAlgebra odd = truncated_polynomial_algebra(Q, 2, -1);
  const auto r2 = koszul_dual_cohomology(odd, 8, 6);
  for (int p = 0; p <= 6; ++p) CHECK(r2.dims.at(p) == (p % 2 == 0 ? 1u : 0u));
  const auto p2 = r2.powers(2, Vector{Scalar::one(Q)});
  CHECK(p2.size() == 3);
  for (const Vector& v : p2) CHECK_FALSE(is_zero_vector(v));

  const auto k = koszul_dual_cohomology(ground_field_algebra(Q), 4, 2);
  CHECK(k.dims.at(0) == 1);
  CHECK(k.dims.at(1) == 0);
  CHECK(k.dims.at(2) == 0);
}

TEST_CASE("Koszul dual of k[x]/x^3") {
  // Ext over k[x]/x³ of k is 1-dimensional in every degree.
  const auto res = koszul_dual_cohomology(truncated_polynomial_algebra(Q, 3), 6, 4);
  for (int p = 0; p <= 4; ++p) CHECK(res.dims.at(p) == 1);
}

TEST_CASE("coalgebras") {
  for (const CurvedAlgebra& a : {truncated_polynomial_algebra(Q, 3), dg_quartic(), square_zero_cone()}) {
    const ConilpotentCoalgebra c = dual_coalgebra(a);
    CHECK_NOTHROW(validate_coalgebra(c));
    const CurvedAlgebra back = dual_algebra(c);
    CHECK(back.degrees == a.degrees);
    CHECK(back.mult == a.mult);
    CHECK(back.d == a.d);
    CHECK(back.unit == a.unit);
  }
  // Deconcatenation is coassociative and the bar differential a coderivation.
  for (const CurvedAlgebra& a : {truncated_polynomial_algebra(Q, 3), dg_quartic()})
    CHECK_NOTHROW(validate_coalgebra(bar_coalgebra(a, 3)));

  // Dual of k[x]/(x² − x): Δ̄(g) = g ⊗ g never dies.
  ConilpotentCoalgebra grp;
  grp.field = Q;
  grp.degrees = {0, 0};
  grp.names = {"1", "g"};
  grp.comult = {{{0, 0, Scalar::one(Q)}}, {{0, 1, Scalar::one(Q)}, {1, 0, Scalar::one(Q)}, {1, 1, Scalar::one(Q)}}};
  grp.d = Matrix(Q, 2, 2);
  CHECK(code_of([&] { cobar(grp, 3); }) == ErrorCode::NotConilpotent);
  grp.comult[1].pop_back();
  grp.comult[1].pop_back();
  CHECK(code_of([&] { validate_coalgebra(grp); }) == ErrorCode::InvalidInput);
}

TEST_CASE("cobar") {
  ConilpotentCoalgebra k = dual_coalgebra(ground_field_algebra(Q));
  const auto ck = cobar(k, 4);
  CHECK(ck.words.size() == 1);
  CHECK(cobar_cohomology(ck).at(0) == 1);

  // Word length one: D(s⁻¹(x²)*) has s⁻¹x* ⊗ s⁻¹x* with the dual structure constant.
  const CurvedAlgebra cubic = truncated_polynomial_algebra(Q, 3);
  const ConilpotentCoalgebra c3 = dual_coalgebra(cubic);
  const auto om = cobar(c3, 5);
  CHECK(om.differential.at(om.index({1, 1}), om.index({2})) == Scalar::one(Q));
  CHECK(om.differential.at(om.index({1, 1}), om.index({1})).is_zero());
  CHECK(cobar_d_squared(om));

  // Ω(A*) ≃ A^! for finite-dimensional A: compare inside the window.
  for (const CurvedAlgebra& a : {truncated_polynomial_algebra(Q, 2), cubic}) {
    const auto h = cobar_cohomology(cobar(dual_coalgebra(a), 6));
    const auto dual = koszul_dual_cohomology(a, 6, 4);
    for (int p = 0; p <= 4; ++p) CHECK(h.at(p) == dual.dims.at(p));
  }

  for (const CurvedAlgebra& a : {truncated_polynomial_algebra(Q, 3), dg_quartic(), square_zero_cone()})
    CHECK(cobar_d_squared(cobar(bar_coalgebra(a, 3), 3)));
}

TEST_CASE("counit") {
  for (int n : {1, 2, 3}) {
    const CurvedAlgebra a = truncated_polynomial_algebra(Q, n);
    const auto chk = counit_h0_check(a, 6);
    CHECK(chk.ok);
    CHECK(chk.h0_dim == static_cast<std::size_t>(n));
    // Rank oracle on the degree −1 → 0 block.
    const auto om = cobar(bar_coalgebra(a, 6), 6);
    std::size_t zero = 0;
    for (int d : om.degrees) zero += d == 0;
    CHECK(zero - block_rank(om, -1) == static_cast<std::size_t>(n));
  }
  // Any augmented algebra works, not only local ones.
  CHECK(counit_h0_check(upper_triangular_algebra(Q, 2), 4).ok);
  CHECK(code_of([] { counit_h0_check(dg_quartic(), 4); }) == ErrorCode::InvalidInput);
}
