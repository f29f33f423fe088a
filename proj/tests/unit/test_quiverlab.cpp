#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "singlab/quiverlab.hpp"

using namespace singlab;

namespace {

const Field Q = Field::rationals();
const Field G = Field::gaussian();

Quiver a2() {
  Quiver q;
  q.vertices = {"0", "1"};
  q.arrows = {{"a", 0, 1, 0}};
  return q;
}

std::vector<Scalar> zeros(Field f, std::size_t n) { return std::vector<Scalar>(n, Scalar::zero(f)); }

template <class Fn>
std::optional<ErrorCode> code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// dim AeA from the span of all b_i e b_j, by textbook elimination.
std::size_t two_sided_ideal_dim(const CurvedAlgebra& a, const Vector& e) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      rows.push_back(a.multiply(a.multiply(a.basis_vector(i), e), a.basis_vector(j)));
  return oracle::rank_by_elimination(Matrix::from_rows(a.field, rows, a.dim()));
}

const char* kExtended[] = {"Atilde1", "Atilde2", "Atilde3", "Atilde5", "Atilde7", "Dtilde4", "Dtilde5",
                           "Dtilde6", "Dtilde8", "Etilde6", "Etilde7", "Etilde8"};

}  // namespace

TEST_CASE("paths") {
  const Quiver q = a2();
  const Path e0{0, {}}, e1{1, {}}, a{0, {0}};
  CHECK_FALSE(path_multiply(q, e0, e1));
  CHECK_FALSE(path_multiply(q, e1, e0));
  CHECK(*path_multiply(q, e0, e0) == e0);
  CHECK(*path_multiply(q, e0, a) == a);
  CHECK(*path_multiply(q, a, e1) == a);
  CHECK_FALSE(path_multiply(q, a, e0));
  CHECK(path_basis(q, 2).size() == 3);
  const Quiver d = double_quiver(q);
  // e0, e1, a, a*, a.a*, a*.a
  CHECK(path_basis(d, 2).size() == 6);
  CHECK(path_basis(d, 3).size() == 8);

  // Σ e_v is the identity on every path.
  PathElement one;
  for (std::size_t v = 0; v < d.size(); ++v) add_into(one, path_element(Path{v, {}}, Scalar::one(Q)), Scalar::one(Q));
  for (const Path& p : path_basis(d, 3)) {
    const PathElement x = path_element(p, Scalar::one(Q));
    CHECK(multiply(d, one, x) == x);
    CHECK(multiply(d, x, one) == x);
  }
}

TEST_CASE("truncated dims") {
  const Quiver q = a2();
  CHECK(truncated_algebra_dim(double_quiver(q), {}, 3) == std::vector<std::size_t>{2, 2, 2, 2});
  const auto pi = preprojective_relations(q, zeros(Q, 2));
  CHECK(truncated_algebra_dim(double_quiver(q), pi, 3) == std::vector<std::size_t>{2, 2, 0, 0});
  CHECK(truncated_algebra_dim(double_quiver(q), pi, 5) == std::vector<std::size_t>{2, 2, 0, 0, 0, 0});

  // Π(Ã₁) = k[x, y] # Z/2 with x, y in length 1: 2(k+1) in length k.
  const Quiver a1t = extended_dynkin("Atilde1");
  const auto dims = truncated_algebra_dim(double_quiver(a1t), preprojective_relations(a1t, zeros(Q, 2)), 5);
  for (std::size_t k = 0; k < dims.size(); ++k) CHECK(dims[k] == 2 * (k + 1));

  // Π(A₃) is finite: 3, 4, 3, 0 … (dim 10).
  Quiver a3;
  a3.vertices = {"0", "1", "2"};
  a3.arrows = {{"a", 0, 1, 0}, {"b", 1, 2, 0}};
  const auto d3 = truncated_algebra_dim(double_quiver(a3), preprojective_relations(a3, zeros(Q, 3)), 6);
  CHECK(d3 == std::vector<std::size_t>{3, 4, 3, 0, 0, 0, 0});
}

TEST_CASE("preprojective relations") {
  const Quiver q = extended_dynkin("Atilde1");
  const Quiver d = double_quiver(q);
  auto rels = preprojective_relations(q, zeros(Q, 2));
  REQUIRE(rels.size() == 2);
  // a1 : 0 → 1 and a2 : 1 → 0.
  CHECK(to_string(d, rels[0]) == "a1.a1* - a2*.a2");
  CHECK(to_string(d, rels[1]) == "a2.a2* - a1*.a1");
  rels = preprojective_relations(q, {Scalar(Q, 2), Scalar(Q, -1)});
  CHECK(to_string(d, rels[0]) == "-2*e0 + a1.a1* - a2*.a2");
  CHECK(to_string(d, rels[1]) == "e1 + a2.a2* - a1*.a1");
  for (const auto& r : rels)
    for (const auto& [p, c] : r) CHECK(p.length() <= 2);
}

TEST_CASE("derived preprojective") {
  for (const char* label : {"Atilde1", "Atilde2", "Dtilde4"}) {
    const Quiver q = extended_dynkin(label);
    for (long l : {0L, 1L}) {
      std::vector<Scalar> lambda = zeros(Q, q.size());
      lambda[0] = Scalar(Q, l);
      if (l) lambda[1] = Scalar(Q, -l);
      const DGQuiverAlgebra dg = derived_preprojective(q, lambda);
      const std::size_t top = std::string(label) == "Dtilde4" ? 3 : 4;
      CHECK(dg.h0_dims(top) == truncated_algebra_dim(double_quiver(q), preprojective_relations(q, lambda), top));
      for (std::size_t i = 0; i < q.size(); ++i) {
        const Path t{i, {dg.first_loop + i}};
        CHECK(dg.degree(t) == -1);
        CHECK(dg.adams_length(t) == 2);
        const PathElement dt = dg.differential(t);
        for (const auto& [p, c] : dt) CHECK(dg.degree(p) == 0);
        // The deformation changes d(t_i) by exactly −λ_i e_i.
        PathElement diff = dt;
        add_into(diff, derived_preprojective(q, zeros(Q, q.size())).differential(t), -Scalar::one(Q));
        CHECK(diff == path_element(Path{i, {}}, -lambda[i]));
      }
    }
  }
  // Dynkin A₂ with λ = 0: H⁰ is Π(A₂) and stabilises.
  const DGQuiverAlgebra dg = derived_preprojective(a2(), zeros(Q, 2));
  CHECK(dg.h0_dims(4) == std::vector<std::size_t>{2, 2, 0, 0, 0});
  // Leibniz: d(t0·a·t1) = d(t0)·a·t1 − t0·a·d(t1) with d(t0) = a.a*, d(t1) = −a*.a.
  const Path t0at1{0, {dg.first_loop, 0, dg.first_loop + 1}};
  const PathElement dd = dg.differential(t0at1);
  CHECK(dd.size() == 2);
  CHECK(dd.at(Path{0, {0, 1, 0, dg.first_loop + 1}}) == Scalar::one(Q));
  CHECK(dd.at(Path{0, {dg.first_loop, 0, 1, 0}}) == Scalar::one(Q));
}

TEST_CASE("quasi-dominance") {
  CHECK(quasi_dominant({Scalar(G, 0), Scalar(G, 1), Scalar(G, 0)}));
  CHECK_FALSE(quasi_dominant({Scalar(G, -1), Scalar(G, 0)}));
  CHECK(quasi_dominant({Scalar::imaginary_unit(G), Scalar(G, 2)}));
  CHECK_FALSE(quasi_dominant({-Scalar::imaginary_unit(G)}));
}

TEST_CASE("Dynkin classification") {
  CHECK(classify_dynkin(1, {}) == "A1");
  CHECK(classify_dynkin(4, {{0, 1}, {1, 2}, {1, 3}}) == "D4");
  CHECK(classify_dynkin(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}) == "E6");
  CHECK(classify_dynkin(7, {{6, 5}, {5, 4}, {4, 3}, {3, 2}, {2, 1}, {4, 0}}) == "E7");
  CHECK(code_of([] { classify_dynkin(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { classify_dynkin(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}); }) == ErrorCode::InvalidInput);
  for (const std::string t : {"A3", "D5", "E6", "E7", "E8"}) CHECK(kleinian_polynomial(t).find("x^2") != std::string::npos);
  CHECK(kleinian_polynomial("A1") == "x^2+y^2+z^2");
  CHECK(kleinian_polynomial("E8") == "z^5+y^3+x^2");
  CHECK(kleinian_polynomial("D4") == "y^2*z+z^3+x^2");
}

TEST_CASE("Kleinian blocks") {
  const auto blocks = dsg_blocks("Atilde3", {Scalar(G, 0), Scalar(G, 1), Scalar(G, 0)});
  REQUIRE(blocks.size() == 2);
  for (const auto& b : blocks) {
    CHECK(b.type == "A1");
    CHECK(b.polynomial == "x^2+y^2+z^2");
  }
  CHECK(blocks[0].vertices == std::vector<std::size_t>{1});
  CHECK(blocks[1].vertices == std::vector<std::size_t>{3});

  const std::pair<const char*, const char*> full[] = {{"Atilde4", "A4"}, {"Dtilde6", "D6"}, {"Etilde6", "E6"},
                                                      {"Etilde7", "E7"}, {"Etilde8", "E8"}};
  for (auto [ext, type] : full) {
    const Quiver q = extended_dynkin(ext);
    const auto b = dsg_blocks(q, zeros(G, q.size() - 1));
    REQUIRE(b.size() == 1);
    CHECK(b[0].type == type);
    CHECK(b[0].polynomial == kleinian_polynomial(type));
    std::vector<Scalar> ones(q.size() - 1, Scalar(G, 1));
    CHECK(dsg_blocks(q, ones).empty());
  }
  CHECK(code_of([] { dsg_blocks("Atilde2", {Scalar(G, -1), Scalar(G, 0)}); }) == ErrorCode::NotQuasiDominant);
  CHECK(code_of([] { dsg_blocks("Atilde2", {Scalar(G, 0)}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { extended_dynkin("Btilde3"); }) == ErrorCode::InvalidInput);

  std::mt19937 rng(11);
  for (const char* label : kExtended) {
    const Quiver q = extended_dynkin(label);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Scalar> lambda;
      std::vector<bool> zero(q.size(), false);
      for (std::size_t v = 1; v < q.size(); ++v) {
        const int pick = static_cast<int>(rng() % 4);
        lambda.push_back(pick == 0 ? Scalar(G, static_cast<long>(1 + rng() % 3))
                                   : pick == 1 ? Scalar(G, 0, static_cast<long>(1 + rng() % 3)) : Scalar(G, 0));
        zero[v] = pick >= 2;
      }
      const auto got = dsg_blocks(q, lambda);
      const auto want = oracle::kleinian_blocks(q, zero);
      REQUIRE(got.size() == want.size());
      for (std::size_t k = 0; k < got.size(); ++k) {
        CHECK(got[k].type == want[k].first);
        CHECK(got[k].vertices == want[k].second);
      }

      // Relabel the non-extending vertices and compare the multiset of types.
      std::vector<std::size_t> perm(q.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin() + 1, perm.end(), rng);
      Quiver r = q;
      for (auto& a : r.arrows) {
        a.tail = perm[a.tail];
        a.head = perm[a.head];
      }
      std::vector<Scalar> lr(q.size(), Scalar(G, 0));
      for (std::size_t v = 1; v < q.size(); ++v) lr[perm[v]] = lambda[v - 1];
      std::vector<std::string> t1, t2;
      for (const auto& b : got) t1.push_back(b.polynomial);
      for (const auto& b : dsg_blocks(r, lr)) t2.push_back(b.polynomial);
      std::sort(t1.begin(), t1.end());
      std::sort(t2.begin(), t2.end());
      CHECK(t1 == t2);
    }
  }
}

TEST_CASE("quotient algebras") {
  const Quiver q = a2();
  const auto qq = quiver_quotient_algebra(double_quiver(q), preprojective_relations(q, zeros(Q, 2)), 2);
  CHECK(qq.algebra.dim() == 4);
  CHECK(qq.algebra.unit == CurvedAlgebra::npos);
  CHECK(validate_curved(qq.algebra).ok);
  CHECK(code_of([&] { quiver_quotient_algebra(double_quiver(q), {}, 2); }) == ErrorCode::InvalidInput);
  // k[x]/x³ as a one-loop quiver.
  Quiver loop;
  loop.vertices = {"0"};
  loop.arrows = {{"x", 0, 0, 0}};
  const auto k3 = quiver_quotient_algebra(loop, {path_element(Path{0, {0, 0, 0}}, Scalar::one(Q))}, 3);
  CHECK(k3.algebra.dim() == 3);
  CHECK(k3.algebra.unit == 0);
  CHECK(validate_curved(k3.algebra).ok);
}

TEST_CASE("Drinfeld quotient") {
  // e = 1 on k[x]/x²: acyclic.
  const CurvedAlgebra dual = truncated_polynomial_algebra(Q, 2);
  auto dc = drinfeld_quotient(dual, dual.one(), 6);
  CHECK(drinfeld_d_squared(dc));
  for (const auto& [deg, dim] : drinfeld_cohomology(dc, 4)) CHECK(dim == 0);

  // e = 0: only A survives.
  dc = drinfeld_quotient(dual, zero_vector(Q, 2), 4);
  CHECK(dc.dims[1] == 0);
  const auto h = drinfeld_cohomology(dc, 2);
  CHECK(h.at(0) == 2);
  CHECK(h.at(-1) == 0);

  // End(R ⊕ k) with e = id_R: stable Ext of k over R, 1 in every degree.
  const auto m = oracle::end_r_plus_k(Q);
  REQUIRE(validate_curved(m.algebra).ok);
  dc = drinfeld_quotient(m.algebra, m.e, 6);
  CHECK(drinfeld_d_squared(dc));
  const auto cohom = drinfeld_cohomology(dc, 4);
  const auto ext = oracle::stable_ext_k_over_dual_numbers(4);
  for (int j = 0; j <= 4; ++j) CHECK(cohom.at(-j) == ext[j]);
  CHECK(cohom.at(0) == m.algebra.dim() - two_sided_ideal_dim(m.algebra, m.e));

  CHECK(code_of([&] { drinfeld_cohomology(dc, 5); }) == ErrorCode::WindowExceedsBound);
  Vector not_idem = m.e;
  not_idem[1] = Scalar::one(Q);
  not_idem[0] = Scalar(Q, 2);
  CHECK(code_of([&] { drinfeld_quotient(m.algebra, not_idem, 4); }) == ErrorCode::NotIdempotent);

  // Π(A₂) over the vertex ring and over the field.
  const Quiver q = a2();
  const auto pi = quiver_quotient_algebra(double_quiver(q), preprojective_relations(q, zeros(Q, 2)), 2);
  for (std::size_t v = 0; v < 2; ++v) {
    const Vector e = pi.algebra.basis_vector(pi.vertices.idempotents[v]);
    for (auto base : {TensorBase::Field, TensorBase::Vertices}) {
      const auto d = drinfeld_quotient(pi.algebra, e, 5, base, pi.vertices);
      CHECK(drinfeld_d_squared(d));
      CHECK(drinfeld_cohomology(d, 3).at(0) == pi.algebra.dim() - two_sided_ideal_dim(pi.algebra, e));
    }
  }
  // e0 + a is idempotent but not a sum of vertex idempotents.
  Vector e_plus_a = pi.algebra.basis_vector(pi.vertices.idempotents[0]);
  for (std::size_t b = 0; b < pi.basis.size(); ++b)
    if (pi.basis[b].length() == 1 && pi.vertices.labels[b] == std::pair<std::size_t, std::size_t>{0, 1})
      e_plus_a[b] = Scalar::one(Q);
  REQUIRE(pi.algebra.multiply(e_plus_a, e_plus_a) == e_plus_a);
  CHECK(code_of([&] { drinfeld_quotient(pi.algebra, e_plus_a, 4, TensorBase::Vertices, pi.vertices); }) ==
        ErrorCode::InvalidInput);
  CHECK(drinfeld_d_squared(drinfeld_quotient(pi.algebra, e_plus_a, 4)));
}

TEST_CASE("Drinfeld on triangular idempotents") {
  const CurvedAlgebra t = upper_triangular_algebra(Q, 3);
  for (std::size_t i = 0; i < t.dim(); ++i) {
    const Vector b = t.basis_vector(i);
    if (t.multiply(b, b) != b) continue;
    const auto dc = drinfeld_quotient(t, b, 4);
    CHECK(drinfeld_d_squared(dc));
    CHECK(drinfeld_cohomology(dc, 2).at(0) == t.dim() - two_sided_ideal_dim(t, b));
  }
}
