#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "singlab/koszul.hpp"

using namespace singlab;

namespace {

Poly P(const Ring& r, const char* s) { return parse_poly(r, s); }

// A --f--> A with the generator weights that make it homogeneous, in degrees −1, 0.
FreeComplex two_term(const Ring& r, const Poly& f) {
  FreeComplex c;
  c.ring = r;
  c.set_module(-1, {f.is_zero() ? 0 : *f.homogeneous_weight()});
  c.set_module(0, {0});
  PolyMatrix m(r, 1, 1);
  m.at(0, 0) = f;
  c.set_differential(-1, m);
  return c;
}

// Random homogeneous polynomial of weight w with small integer coefficients.
Poly random_poly(const Ring& r, long w, std::mt19937& rng) {
  Poly p(r);
  if (w < 0) return p;
  for (const auto& m : monomials_of_weight(r, w))
    if (rng() % 2) p += Poly::monomial(r, m, Scalar(r.field(), static_cast<long>(rng() % 7) - 3));
  return p;
}

// Random two-term homogeneous complex A^a(weights) --D--> A^b(weights), degrees −1, 0.
FreeComplex random_two_term(const Ring& r, std::mt19937& rng) {
  FreeComplex c;
  c.ring = r;
  const std::size_t a = 1 + rng() % 2, b = 1 + rng() % 2;
  std::vector<long> wa, wb;
  for (std::size_t k = 0; k < a; ++k) wa.push_back(1 + static_cast<long>(rng() % 2));
  for (std::size_t k = 0; k < b; ++k) wb.push_back(static_cast<long>(rng() % 2));
  c.set_module(-1, wa);
  c.set_module(0, wb);
  PolyMatrix m(r, b, a);
  for (std::size_t t = 0; t < b; ++t)
    for (std::size_t s = 0; s < a; ++s) m.at(t, s) = random_poly(r, wa[s] - wb[t], rng);
  c.set_differential(-1, m);
  return c;
}

bool all_zero(const CohomologyTable& t) {
  for (const auto& [k, v] : t)
    if (v) return false;
  return true;
}

}  // namespace

TEST_CASE("shift") {
  const Ring r({"x"});
  const FreeComplex c = two_term(r, P(r, "x"));
  const FreeComplex s0 = shift(c, 0);
  CHECK(s0.d.at(-1) == c.d.at(-1));
  const FreeComplex s1 = shift(c, 1);
  CHECK(s1.rank(-2) == 1);
  CHECK(s1.d.at(-2).at(0, 0).to_string() == "-x");
  const FreeComplex back = shift(s1, -1);
  CHECK(back.d.at(-1) == c.d.at(-1));
  CHECK(back.weights == c.weights);
}

TEST_CASE("cone") {
  const Ring r({"x"});
  // k[x] --x--> k[x] as a cone of a map between one-term complexes.
  FreeComplex m, n;
  m.ring = n.ring = r;
  m.set_module(0, {1});
  n.set_module(0, {0});
  ChainMap f;
  f.f[0] = PolyMatrix::scalar(P(r, "x"), 1);
  CHECK(is_chain_map(m, n, f));
  const FreeComplex c = cone(m, n, f);
  CHECK(check_d_squared(c).ok);
  auto h = slice_cohomology(c, 6);
  for (const auto& [key, dim] : h) CHECK(dim == ((key == std::make_pair(0, 0L)) ? 1u : 0u));

  // cone(id) is acyclic.
  const FreeComplex k = koszul_complex(Ring({"x", "y"}), {P(Ring({"x", "y"}), "x"), P(Ring({"x", "y"}), "y^2")}).complex;
  const FreeComplex ci = cone(k, k, identity_map(k));
  CHECK(check_d_squared(ci).ok);
  CHECK(all_zero(slice_cohomology(ci, 6)));

  // cone(0 → N) has N's cohomology.
  FreeComplex zero;
  zero.ring = k.ring;
  const FreeComplex cz = cone(zero, k, ChainMap{});
  CHECK(slice_cohomology(cz, 6) == slice_cohomology(k, 6));

  ChainMap bad;
  bad.degree = 1;
  CHECK_THROWS_AS(cone(m, n, bad), Error);
}

TEST_CASE("hom complexes") {
  const Ring none(std::vector<std::string>{});
  FreeComplex k;
  k.ring = none;
  k.set_module(0, {0});
  auto h = slice_cohomology(hom_complex(k, k), 3);
  CHECK(h.at({0, 0}) == 1);

  const Ring r({"x", "y"});
  const FreeComplex a = koszul_complex(r, {P(r, "x"), P(r, "y")}).complex;
  const FreeComplex ha = hom_complex(a, a);
  CHECK(check_d_squared(ha).ok);
  CHECK(is_chain_map(a, a, identity_map(a)));
  const auto coords = hom_coordinates(a, a, identity_map(a));
  for (const auto& v : apply_differential(ha, 0, coords)) CHECK(v.is_zero());
}

TEST_CASE("0-cocycles of hom complexes are exactly the chain maps") {
  std::mt19937 rng(2024);
  const Ring r({"x", "y"});
  int checked = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const FreeComplex m = random_two_term(r, rng), n = random_two_term(r, rng);
    const FreeComplex h = hom_complex(m, n);
    REQUIRE(check_d_squared(h).ok);
    // Slice cocycles become chain maps.
    for (long w = -2; w <= 2; ++w) {
      for (const auto& v : kernel_basis(slice_differential(h, 0, w))) {
        ChainMap f = hom_element(m, n, 0, slice_element(h, 0, w, v));
        CHECK(is_chain_map(m, n, f));
        ++checked;
      }
      // Random slice elements: cocycle iff chain map.
      const auto basis = slice_basis(h, 0, w);
      Vector v;
      for (std::size_t k = 0; k < basis.size(); ++k) v.emplace_back(r.field(), static_cast<long>(rng() % 3) - 1);
      if (basis.empty()) continue;
      const auto x = slice_element(h, 0, w, v);
      bool cocycle = true;
      for (const auto& y : apply_differential(h, 0, x)) cocycle = cocycle && y.is_zero();
      CHECK(cocycle == is_chain_map(m, n, hom_element(m, n, 0, x)));
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("tensor products") {
  const Ring r({"x", "y"});
  const Poly x = P(r, "x"), y = P(r, "y");
  const FreeComplex kx = koszul_complex(r, {x}).complex, ky = koszul_complex(r, {y}).complex;
  const FreeComplex t = tensor(kx, ky);
  const FreeComplex kxy = koszul_complex(r, {x, y}).complex;
  CHECK(check_d_squared(t).ok);
  for (int i = -2; i <= 0; ++i) {
    CHECK(t.rank(i) == kxy.rank(i));
    CHECK(t.differential(i) == kxy.differential(i));
  }
  // Unit complex.
  FreeComplex unit;
  unit.ring = r;
  unit.set_module(0, {0});
  const FreeComplex tu = tensor(unit, kxy);
  for (int i = -2; i <= 0; ++i) CHECK(tu.differential(i) == kxy.differential(i));

  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const FreeComplex a = random_two_term(r, rng), b = random_two_term(r, rng);
    CHECK(check_d_squared(tensor(a, b)).ok);
    CHECK(check_d_squared(tensor(tensor(a, b), kx)).ok);
  }
}

TEST_CASE("slices and slice cohomology") {
  const Ring r({"x", "y"});
  FreeComplex zero;
  zero.ring = r;
  zero.set_module(0, {});
  CHECK(all_zero(slice_cohomology(zero, 4)));

  const FreeComplex k = koszul_complex(r, {P(r, "x"), P(r, "y")}).complex;
  const auto h = slice_cohomology(k, 6);
  for (const auto& [key, dim] : h) CHECK(dim == ((key == std::make_pair(0, 0L)) ? 1u : 0u));

  // Euler characteristic per slice equals that of the cohomology.
  const FreeComplex k2 = koszul_complex(r, {P(r, "x^2"), P(r, "x*y")}).complex;
  const auto h2 = slice_cohomology(k2, 6);
  for (long w = 0; w <= 6; ++w) {
    const SliceComplex s = slice(k2, w);
    long chi = 0, chi_h = 0;
    for (const auto& [i, dim] : s.dims) chi += (i % 2 ? -1 : 1) * static_cast<long>(dim);
    for (int i = -2; i <= 0; ++i) chi_h += (i % 2 ? -1 : 1) * static_cast<long>(h2.at({i, w}));
    CHECK(chi == chi_h);
    for (const auto& [i, m] : s.d)
      if (s.d.count(i + 1)) CHECK((s.d.at(i + 1) * m).is_zero());
  }
  // x^2, xy is not regular: H^{-1} is nonzero (generated by y e_1 − x e_2).
  long h_minus1 = 0;
  for (long w = 0; w <= 6; ++w) h_minus1 += static_cast<long>(h2.at({-1, w}));
  CHECK(h_minus1 > 0);

  FreeComplex inhom = two_term(r, P(r, "x"));
  inhom.d.at(-1).at(0, 0) = P(r, "x+x^2");
  CHECK_THROWS_AS(slice_cohomology(inhom, 3), Error);
}

TEST_CASE("slice cohomology agrees with the Gröbner quotient for H^0 of a Koszul complex") {
  const Ring r({"x", "y"});
  const std::vector<Poly> fs{P(r, "x^2"), P(r, "y^3")};
  const auto h = slice_cohomology(koszul_complex(r, fs).complex, 8);
  const GroebnerBasis gb = buchberger(r, fs);
  for (long w = 0; w <= 8; ++w) CHECK(h.at({0, w}) == standard_monomials_of_weight(gb, w).size());
}

TEST_CASE("cone acyclicity detects slicewise quasi-isomorphisms") {
  const Ring r({"x", "y"});
  const FreeComplex k = koszul_complex(r, {P(r, "x"), P(r, "y")}).complex;
  // Scaling by 2 is a quasi-isomorphism; multiplication by x is not.
  ChainMap two = identity_map(k);
  for (auto& [i, m] : two.f) m = m.scaled(Scalar(r.field(), 2));
  CHECK(all_zero(slice_cohomology(cone(k, k, two), 5)));
  FreeComplex kx = k;
  for (auto& [i, w] : kx.weights)
    for (auto& g : w) g += 1;
  ChainMap byx;
  for (int i : k.degrees()) byx.f[i] = PolyMatrix::scalar(P(r, "x"), k.rank(i));
  CHECK(is_chain_map(kx, k, byx));
  CHECK_FALSE(all_zero(slice_cohomology(cone(kx, k, byx), 5)));
}
