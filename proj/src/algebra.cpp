#include "singlab/algebra.hpp"

#include <string>

namespace singlab {

Vector CurvedAlgebra::basis_vector(std::size_t i) const {
  Vector v = zero_vector(field, dim());
  v[i] = Scalar::one(field);
  return v;
}

Vector CurvedAlgebra::multiply(const Vector& a, const Vector& b) const {
  Vector out = zero_vector(field, dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      const Scalar c = a[i] * b[j];
      const Vector& m = mult[i][j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (!m[k].is_zero()) out[k] += c * m[k];
    }
  }
  return out;
}

Vector CurvedAlgebra::differential(const Vector& a) const {
  if (d.rows() == 0) return zero_vector(field, dim());
  return d.apply(a);
}

CurvedAlgebra make_algebra(Field f, Grading g, std::vector<int> degrees, std::vector<std::string> names,
                           std::size_t unit) {
  CurvedAlgebra a;
  a.field = f;
  a.grading = g;
  a.degrees = std::move(degrees);
  const std::size_t n = a.degrees.size();
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  if (names.size() != n) fail(ErrorCode::InvalidInput, "algebra: names and degrees differ in length");
  if (unit >= n && unit != CurvedAlgebra::npos) fail(ErrorCode::InvalidInput, "algebra: unit index out of range");
  a.names = std::move(names);
  a.mult.assign(n, std::vector<Vector>(n, zero_vector(f, n)));
  a.d = Matrix(f, n, n);
  a.curvature = zero_vector(f, n);
  a.unit = unit;
  if (g == Grading::Z2)
    for (int& dg : a.degrees) dg = ((dg % 2) + 2) % 2;
  return a;
}

CurvedAlgebra ground_field_algebra(Field f) {
  CurvedAlgebra a = make_algebra(f, Grading::Z, {0}, {"1"}, 0);
  a.mult[0][0][0] = Scalar::one(f);
  return a;
}

CurvedAlgebra truncated_polynomial_algebra(Field f, int n, int x_degree) {
  if (n < 1) fail(ErrorCode::InvalidInput, "truncated polynomial algebra needs n >= 1");
  std::vector<int> deg;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    deg.push_back(i * x_degree);
    names.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  }
  CurvedAlgebra a = make_algebra(f, Grading::Z, deg, names, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j) a.mult[i][j][i + j] = Scalar::one(f);
  return a;
}

CurvedAlgebra odd_quadratic_algebra(Field f, const Scalar& c) {
  CurvedAlgebra a = make_algebra(f, Grading::Z2, {0, 1}, {"1", "t"}, 0);
  a.mult[0][0][0] = Scalar::one(f);
  a.mult[0][1][1] = Scalar::one(f);
  a.mult[1][0][1] = Scalar::one(f);
  a.mult[1][1][0] = c;
  return a;
}

namespace {

CurvedAlgebra matrix_units(Field f, int n, bool upper) {
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < n; ++i)
    for (int j = upper ? i : 0; j < n; ++j) idx.emplace_back(i, j);
  std::vector<std::string> names;
  for (auto [i, j] : idx) names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  // The unit is Σ E_ii, which is not a basis element for n > 1; use a basis with
  // 1 in place of E_11: {1, E_ij (i,j) ≠ (1,1)}.
  CurvedAlgebra a = make_algebra(f, Grading::Z, std::vector<int>(idx.size(), 0), names, 0);
  a.names[0] = "1";
  const std::size_t m = idx.size();
  // Coordinates of E_ij in the basis: E_11 = 1 − Σ_{i>0} E_ii.
  auto as_vector = [&](int i, int j) {
    Vector v = zero_vector(f, m);
    if (i == 0 && j == 0) {
      v[0] = Scalar::one(f);
      for (std::size_t k = 1; k < m; ++k)
        if (idx[k].first == idx[k].second) v[k] = -Scalar::one(f);
      return v;
    }
    for (std::size_t k = 0; k < m; ++k)
      if (idx[k] == std::make_pair(i, j)) v[k] = Scalar::one(f);
    return v;
  };
  // Basis element k as a combination of matrix units.
  auto units_of = [&](std::size_t k) {
    std::vector<std::pair<std::pair<int, int>, long>> out;
    if (k == 0) {
      for (int i = 0; i < n; ++i) out.push_back({{i, i}, 1});
    } else {
      out.push_back({idx[k], 1});
    }
    return out;
  };
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      Vector prod = zero_vector(f, m);
      for (auto [u, cu] : units_of(p))
        for (auto [v, cv] : units_of(q)) {
          if (u.second != v.first) continue;
          const Vector e = as_vector(u.first, v.second);
          for (std::size_t k = 0; k < m; ++k) prod[k] += e[k] * Scalar(f, cu * cv);
        }
      a.mult[p][q] = prod;
    }
  return a;
}

}  // namespace

CurvedAlgebra matrix_algebra(Field f, int n) { return matrix_units(f, n, false); }
CurvedAlgebra upper_triangular_algebra(Field f, int n) { return matrix_units(f, n, true); }

CurvedCheck validate_curved(const CurvedAlgebra& a) {
  const std::size_t n = a.dim();
  const Field f = a.field;
  auto bad = [](std::string what, std::vector<std::size_t> w) { return CurvedCheck{false, std::move(what), std::move(w)}; };
  auto homogeneous_of = [&](const Vector& v, int deg) {
    for (std::size_t k = 0; k < n; ++k)
      if (!v[k].is_zero() && a.degrees[k] != deg) return false;
    return true;
  };
  auto wrap = [&](int deg) { return a.grading == Grading::Z2 ? ((deg % 2) + 2) % 2 : deg; };

  const Vector one = a.one();
  if (one.size() != n) return bad("unit", {});
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = a.basis_vector(i);
    if (a.multiply(one, x) != x || a.multiply(x, one) != x) return bad("unit", {i});
    if (!one[i].is_zero() && a.degrees[i] != 0) return bad("degree", {i});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (!homogeneous_of(a.mult[i][j], wrap(a.degrees[i] + a.degrees[j]))) return bad("degree", {i, j});
    if (!homogeneous_of(a.differential(a.basis_vector(i)), wrap(a.degrees[i] + 1))) return bad("degree", {i});
  }
  if (!homogeneous_of(a.curvature, wrap(2))) return bad("degree", {});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& ij = a.mult[i][j];
      for (std::size_t k = 0; k < n; ++k) {
        const Vector left = a.multiply(ij, a.basis_vector(k));
        const Vector right = a.multiply(a.basis_vector(i), a.mult[j][k]);
        if (left != right) return bad("associativity", {i, j, k});
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = a.basis_vector(i), y = a.basis_vector(j);
      Vector rhs = a.multiply(a.differential(x), y);
      const Vector t = a.multiply(x, a.differential(y));
      const Scalar s(f, a.parity(i) ? -1 : 1);
      for (std::size_t k = 0; k < n; ++k) rhs[k] += s * t[k];
      const Vector lhs = a.differential(a.mult[i][j]);
      for (std::size_t k = 0; k < n; ++k)
        if (lhs[k] != rhs[k]) return bad("leibniz", {i, j, k});
    }
  if (!is_zero_vector(a.differential(a.curvature))) return bad("dh", {});
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = a.basis_vector(i);
    Vector comm = a.multiply(a.curvature, x);
    const Vector xh = a.multiply(x, a.curvature);
    for (std::size_t k = 0; k < n; ++k) comm[k] -= xh[k];
    if (a.differential(a.differential(x)) != comm) return bad("d2", {i});
  }
  return {};
}

}  // namespace singlab
