#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "singlab/singularity.hpp"

using namespace singlab;

namespace {

Ring xy() { return Ring({"x", "y"}); }
Poly P(const Ring& r, const char* s) { return parse_poly(r, s); }

std::vector<std::string> strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("parser and printer round-trip") {
  const Ring r({"x", "y", "z"});
  for (const char* s : {"z^3+x^2+y^2", "-x^3*y+1/2*x*z-7", "-x^3-x^2+y^2", "0", "-1/3"}) {
    CHECK(P(r, s).to_string() == s);
    CHECK(P(r, P(r, s).to_string().c_str()) == P(r, s));
  }
  CHECK(P(r, " 2 * x ^ 2 - x*x + y - y ").to_string() == "x^2");
  CHECK(P(r, "z+y+x").to_string() == "x+y+z");

  const Ring g({"u", "v"}, Field::gaussian());
  const Poly p = P(g, "(1+2i)*u^2 - i*v + 3i");
  CHECK(p.to_string() == "(1+2i)*u^2-i*v+3i");
  CHECK(P(g, p.to_string().c_str()) == p);

  const Ring f5({"x"}, Field::prime(5));
  CHECK(P(f5, "7*x-1").to_string() == "2*x+4");
  CHECK_THROWS_AS(P(r, "x+w"), Error);
  CHECK_THROWS_AS(P(r, "x+"), Error);
}

TEST_CASE("weighted grevlex ordering") {
  const Ring r({"x", "y", "z"}, Field::rationals(), {3, 3, 2});
  CHECK(P(r, "z^3+x^2+y^2").to_string() == "x^2+y^2+z^3");
  CHECK(P(r, "x^2+y^2+z^3").homogeneous_weight() == 6);
  const Ring plain({"x", "y", "z"});
  // Total degree first, then reverse lexicographic.
  CHECK(P(plain, "z^2+x*y+x*z+x^2").to_string() == "x^2+x*y+x*z+z^2");
}

TEST_CASE("arithmetic, derivative and substitution") {
  const Ring r = xy();
  const Poly a = P(r, "x+y"), b = P(r, "x-y");
  CHECK((a * b).to_string() == "x^2-y^2");
  CHECK(a.pow(3).to_string() == "x^3+3*x^2*y+3*x*y^2+y^3");
  CHECK(P(r, "x^3*y+2*x").derivative(0).to_string() == "3*x^2*y+2");
  CHECK(P(r, "x^2+x*y").substitute(1, P(r, "-y")).to_string() == "x^2-x*y");
  CHECK_THROWS_AS(a + P(Ring({"x"}), "x"), Error);
}

TEST_CASE("buchberger: trivial and hand-checked bases") {
  const Ring r = xy();
  CHECK(strings(buchberger(r, {P(r, "x"), P(r, "y")}).gens) == std::vector<std::string>{"x", "y"});
  auto gb = buchberger(r, {P(r, "x*y"), P(r, "y^2")});
  CHECK(gb.leading_monomials() == std::vector<Monomial>{{1, 1}, {0, 2}});

  // By hand: S(x^2-y, x*y-1) = y(x^2-y) - x(x*y-1) = x - y^2, monic y^2 - x under
  // grevlex; the remaining S-polynomials reduce to 0. Three points, staircase {1,x,y}.
  auto g2 = buchberger(r, {P(r, "x^2-y"), P(r, "x*y-1")});
  CHECK(strings(g2.gens) == std::vector<std::string>{"x^2-y", "x*y-1", "y^2-x"});
  CHECK(quotient_basis(g2).dim() == 3);

  const Ring none(std::vector<std::string>{});
  CHECK(buchberger(none, {Poly::constant(none, 3)}).is_unit_ideal());
  CHECK(buchberger(none, {}).gens.empty());
  CHECK_THROWS_AS(buchberger(r, {P(Ring({"z"}), "z")}), Error);
}

TEST_CASE("quotient dimension of x^2-y, y^2-x agrees with the Macaulay oracle") {
  const Ring r = xy();
  std::vector<Poly> gens{P(r, "x^2-y"), P(r, "y^2-x")};
  auto qb = quotient_basis(buchberger(r, gens));
  CHECK(qb.finite);
  CHECK(qb.dim() == 4);
  // Affine Macaulay count: monomials of degree < n modulo multiples of degree < n.
  // The generators are a degree-compatible basis so the count is exact for n >= 3.
  const auto monos = oracle::monomials_below(2, 6);
  std::vector<Vector> rows;
  for (const auto& g : gens)
    for (const auto& m : oracle::monomials_below(2, 4)) {
      Vector row = zero_vector(r.field(), monos.size());
      for (const auto& t : g.terms()) {
        Monomial p{m[0] + t.mono[0], m[1] + t.mono[1]};
        auto it = std::find(monos.begin(), monos.end(), p);
        row[static_cast<std::size_t>(it - monos.begin())] += t.coef;
      }
      rows.push_back(row);
    }
  CHECK(monos.size() - oracle::rank_by_elimination(Matrix::from_rows(r.field(), rows, monos.size())) == 4);
}

TEST_CASE("quotient bases") {
  const Ring r = xy();
  auto q1 = quotient_basis(buchberger(r, {P(r, "x"), P(r, "y")}));
  CHECK(q1.finite);
  CHECK(q1.monomials == std::vector<Monomial>{{0, 0}});
  const Ring x({"x"});
  CHECK(quotient_basis(buchberger(x, {P(x, "x^2")})).monomials == std::vector<Monomial>{{1}, {0}});
  CHECK(quotient_basis(buchberger(r, {P(r, "x^3"), P(r, "y^2")})).dim() == 3 * 2);
  auto inf = quotient_basis(buchberger(r, {P(r, "x")}));
  CHECK_FALSE(inf.finite);
  CHECK(quotient_basis(buchberger(r, {P(r, "x")}), 3).dim() == 4);
}

TEST_CASE("reduced bases do not depend on generator order") {
  const Ring r({"x", "y", "z"});
  std::vector<Poly> gens{P(r, "x^2-y*z"), P(r, "y^2-x*z"), P(r, "z^2-x*y+x"), P(r, "x*y*z-1")};
  const auto ref = strings(buchberger(r, gens).gens);
  std::sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) { return a.to_string() < b.to_string(); });
  do {
    CHECK(strings(buchberger(r, gens).gens) == ref);
  } while (std::next_permutation(gens.begin(), gens.end(),
                                 [](const Poly& a, const Poly& b) { return a.to_string() < b.to_string(); }));
}

TEST_CASE("jacobian ideal") {
  const Ring r({"x", "y", "z"});
  CHECK(strings(jacobian_ideal(P(r, "x^2+y^2+z^3"))) == std::vector<std::string>{"2*x", "2*y", "3*z^2"});
  CHECK(strings(jacobian_ideal(P(xy(), "x*y"))) == std::vector<std::string>{"y", "x"});
  for (const auto& d : jacobian_ideal(P(r, "5"))) CHECK(d.is_zero());
}

TEST_CASE("milnor and tjurina numbers agree with the local Macaulay oracle") {
  const Ring x({"x"});
  CHECK(milnor_algebra(P(x, "x^2")).number == 1u);
  CHECK(tjurina_algebra(P(x, "x^2")).number == 1u);
  CHECK(milnor_algebra(P(xy(), "x*y")).number == 1u);
  const Ring r({"x", "y", "z"});
  for (int n = 2; n <= 4; ++n) {
    const Poly s = P(r, ("x^2+y^2+z^" + std::to_string(n + 1)).c_str());
    const auto m = milnor_algebra(s);
    REQUIRE(m.number);
    CHECK(*m.number == static_cast<std::size_t>(n));
    CHECK(oracle::local_quotient_dim(jacobian_ideal(s), r, n + 2) == static_cast<std::size_t>(n));
  }
  const Poly qh = P(xy(), "x^3+y^3");
  CHECK(milnor_algebra(qh).number == tjurina_algebra(qh).number);

  const Poly nqh = P(xy(), "x^5+y^5+x^3*y^3");
  const auto mu = milnor_algebra(nqh), tau = tjurina_algebra(nqh);
  REQUIRE(mu.number);
  REQUIRE(tau.number);
  CHECK(*tau.number < *mu.number);
  // Local values at the origin: μ = 16; the polynomial ideal also sees other
  // critical points, so compare the local Macaulay counts separately.
  auto jac = jacobian_ideal(nqh);
  const std::size_t mu_loc = oracle::local_quotient_dim(jac, xy(), 12);
  jac.push_back(nqh);
  const std::size_t tau_loc = oracle::local_quotient_dim(jac, xy(), 12);
  CHECK(mu_loc == 16);
  CHECK(tau_loc < mu_loc);
  CHECK(milnor_algebra(nqh, 12).number == mu_loc);
  CHECK(tjurina_algebra(nqh, 12).number == tau_loc);
}

TEST_CASE("milnor refusals") {
  CHECK_THROWS_AS(milnor_algebra(P(xy(), "x^2+1")), Error);
  const Ring f3({"x"}, Field::prime(3));
  try {
    milnor_algebra(P(f3, "x^3"));
    FAIL("expected CharTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CharTooSmall);
  }
  CHECK_FALSE(milnor_algebra(P(xy(), "x^2")).number);
}

TEST_CASE("quasi-homogeneity") {
  const Ring r({"x", "y", "z"});
  auto q = is_quasi_homogeneous(P(r, "x^2+y^2+z^3"), {3, 3, 2});
  CHECK(q.holds);
  CHECK(q.degree == 6);
  CHECK_FALSE(is_quasi_homogeneous(P(Ring({"x"}), "x^2+x^3"), {1}).holds);
  CHECK(is_quasi_homogeneous(P(r, "x^5*y"), {1, 2, 7}).holds);
  CHECK_THROWS_AS(is_quasi_homogeneous(Poly(r), {1, 1, 1}), Error);
}

TEST_CASE("division coefficients") {
  const Ring x({"x"});
  CHECK(strings(division_coefficients(P(x, "x^2"), {P(x, "x")})) == std::vector<std::string>{"x"});
  const Ring r = xy();
  CHECK(strings(division_coefficients(P(r, "x*y"), {P(r, "x"), P(r, "y")})) == std::vector<std::string>{"y", "0"});
  CHECK_THROWS_AS(division_coefficients(P(x, "x+1"), {P(x, "x")}), Error);

  // Needs the Gröbner fallback: y^3 - 1 is in (x^2-y, x*y-1) but not by plain division.
  std::vector<Poly> gens{P(r, "x^2-y"), P(r, "x*y-1")};
  const Poly s = P(r, "y^3-1");
  auto c = division_coefficients(s, gens);
  CHECK(c[0] * gens[0] + c[1] * gens[1] == s);
}
