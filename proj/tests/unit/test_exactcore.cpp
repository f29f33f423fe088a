#include "doctest.h"
#include "oracles.hpp"
#include "singlab/matrix.hpp"

using namespace singlab;

namespace {

Matrix rat_matrix(const std::vector<std::vector<long>>& rows) {
  const Field q = Field::rationals();
  std::vector<Vector> v;
  for (const auto& r : rows) {
    Vector row;
    for (long x : r) row.emplace_back(q, x);
    v.push_back(std::move(row));
  }
  return Matrix::from_rows(q, v, rows.empty() ? 0 : rows[0].size());
}

}  // namespace

TEST_CASE("scalar arithmetic stays exact and canonical") {
  const Field q = Field::rationals();
  Scalar a(q, mpq_class(6, 4));
  CHECK(a.re() == mpq_class(3, 2));
  CHECK((a * a.inverse()).is_one());
  CHECK((Scalar(q, mpq_class(1, 3)) + Scalar(q, mpq_class(2, 3))).is_one());

  const Field f7 = Field::prime(7);
  CHECK(Scalar(f7, -1).re() == 6);
  CHECK((Scalar(f7, 3) * Scalar(f7, 5)).re() == 1);
  CHECK(Scalar(f7, mpq_class(1, 2)).re() == 4);

  const Field g = Field::gaussian();
  const Scalar i = Scalar::imaginary_unit(g);
  CHECK((i * i) == Scalar(g, -1));
  CHECK((Scalar(g, 1, 1) * Scalar(g, 1, -1)) == Scalar(g, 2));
  CHECK(Scalar(g, 1, 2).to_string() == "(1+2i)");
  CHECK(parse_scalar(g, "(1-2i)") == Scalar(g, 1, -2));
  CHECK(parse_scalar(g, "-i") == Scalar(g, 0, -1));
}

TEST_CASE("fields refuse to mix and reject bad parameters") {
  CHECK_THROWS_AS(Scalar(Field::rationals(), 1) + Scalar(Field::prime(5), 1), Error);
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK_THROWS_AS(Scalar::imaginary_unit(Field::rationals()), Error);
  CHECK_THROWS_AS(Scalar::imaginary_unit(Field::prime(7)), Error);
  const Scalar i5 = Scalar::imaginary_unit(Field::prime(5));
  CHECK((i5 * i5) == Scalar(Field::prime(5), -1));
  CHECK(Field::parse("gf:13") == Field::prime(13));
}

TEST_CASE("rref of identity and proportional rows") {
  const Field q = Field::rationals();
  auto id = rref(Matrix::identity(q, 2));
  CHECK(id.reduced == Matrix::identity(q, 2));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});
  CHECK(rank(rat_matrix({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("mixed-field matrices are rejected") {
  Matrix m(Field::rationals(), 1, 1);
  CHECK_THROWS_AS(m.set(0, 0, Scalar(Field::prime(3), 1)), Error);
}

TEST_CASE("rank over GF(7) agrees with the minors oracle") {
  const Field f7 = Field::prime(7);
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m(f7, 5, 5);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c)
        if (rng() % 3) m.set(r, c, Scalar(f7, static_cast<long>(rng() % 7)));
    // Force some low-rank cases by copying rows.
    if (trial % 4 == 0) m.set_row(4, m.row(1));
    if (trial % 8 == 0) m.set_row(3, m.row(0));
    CHECK(rank(m) == oracle::rank_by_minors(m));
  }
}

TEST_CASE("rref is idempotent and kernels are exact") {
  std::mt19937 rng(7);
  for (const Field f : {Field::rationals(), Field::gaussian(), Field::prime(11)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t R = 1 + rng() % 5, C = 1 + rng() % 6;
      Matrix m(f, R, C);
      for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c < C; ++c)
          if (rng() % 2) {
            const long a = static_cast<long>(rng() % 9) - 4;
            const long b = f.kind() == FieldKind::Gauss ? static_cast<long>(rng() % 5) - 2 : 0;
            m.set(r, c, Scalar(f, mpq_class(a, 1 + static_cast<long>(rng() % 3)), b));
          }
      const auto rr = rref(m);
      CHECK(rref(rr.reduced).reduced == rr.reduced);
      const auto ker = kernel_basis(m);
      CHECK(rr.rank() + ker.size() == C);
      for (const auto& v : ker) CHECK(is_zero_vector(m.apply(v)));
      CHECK(rr.rank() == oracle::rank_by_elimination(m));
    }
  }
}

TEST_CASE("kernel basis edge cases") {
  const Field q = Field::rationals();
  CHECK(kernel_basis(Matrix(q, 3, 3)).size() == 3);
  CHECK(kernel_basis(Matrix::identity(q, 4)).empty());
  auto k = kernel_basis(rat_matrix({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(!k[0][0].is_zero());
}

TEST_CASE("solve finds a solution or reports inconsistency") {
  const Field q = Field::rationals();
  Matrix m = rat_matrix({{1, 2}, {3, 4}});
  Vector b{Scalar(q, 5), Scalar(q, 6)};
  auto x = solve(m, b);
  REQUIRE(x);
  CHECK(m.apply(*x) == b);
  CHECK_FALSE(solve(rat_matrix({{1, 1}, {2, 2}}), Vector{Scalar(q, 1), Scalar(q, 3)}));
}

TEST_CASE("independent_modulo picks the first new directions") {
  const Field q = Field::rationals();
  std::vector<Vector> base{{Scalar(q, 1), Scalar(q, 0), Scalar(q, 0)}};
  std::vector<Vector> cand{{Scalar(q, 2), Scalar(q, 0), Scalar(q, 0)},
                           {Scalar(q, 1), Scalar(q, 1), Scalar(q, 0)},
                           {Scalar(q, 0), Scalar(q, 2), Scalar(q, 0)},
                           {Scalar(q, 0), Scalar(q, 0), Scalar(q, 3)}};
  CHECK(independent_modulo(q, 3, base, cand) == std::vector<std::size_t>{1, 3});
}
