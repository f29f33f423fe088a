#include "singlab/hochschild.hpp"

#include <set>

namespace singlab {

namespace {

struct Ops {
  const CurvedAlgebra& a;
  bool reduced;
  std::vector<long> letter_pos;  // basis index -> position in letters, or −1
  std::vector<Vector> m1;        // M1(s e_i) as A-coordinates of s(·)
  std::vector<std::vector<Vector>> m2;
  Vector m0;

  Ops(const CurvedAlgebra& alg, bool red, const std::vector<std::size_t>& letters) : a(alg), reduced(red) {
    const std::size_t n = a.dim();
    letter_pos.assign(n, -1);
    for (std::size_t i = 0; i < letters.size(); ++i) letter_pos[letters[i]] = static_cast<long>(i);
    for (std::size_t i = 0; i < n; ++i) {
      Vector v = a.differential(a.basis_vector(i));
      for (auto& c : v) c = -c;
      m1.push_back(std::move(v));
    }
    m2.assign(n, std::vector<Vector>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector v = a.mult[i][j];
        if (shifted_parity(i))
          for (auto& c : v) c = -c;
        m2[i][j] = std::move(v);
      }
    m0 = a.curvature;
  }

  int shifted_parity(std::size_t i) const { return a.parity(i) ^ 1; }
  int shifted_degree(std::size_t i) const { return a.grading == Grading::Z2 ? shifted_parity(i) : a.degrees[i] - 1; }
};

int wrap(Grading g, int d) { return g == Grading::Z2 ? ((d % 2) + 2) % 2 : d; }

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::size_t HochschildComplex::index(int length, const std::vector<std::size_t>& word, std::size_t slot) const {
  const std::size_t dim = spec.algebra.dim(), nl = letters.size();
  std::size_t off = 0;
  for (int m = 0; m < length; ++m) off += ipow(nl, m) * dim;
  std::size_t w = 0;
  for (std::size_t l : word) w = w * nl + l;
  return off + w * dim + slot;
}

HochschildComplex hochschild_complex(const HochschildSpec& spec) {
  const CurvedAlgebra& a = spec.algebra;
  if (spec.length_bound < 1) fail(ErrorCode::InvalidInput, "hochschild: length bound must be at least 1");
  if (a.unit == CurvedAlgebra::npos) fail(ErrorCode::InvalidInput, "hochschild: the unit must be a basis element");
  const CurvedCheck check = validate_curved(a);
  if (!check.ok) fail(ErrorCode::InvalidInput, "hochschild: algebra fails the " + check.failure + " check");

  HochschildComplex hc;
  hc.spec = spec;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!spec.reduced || i != a.unit) hc.letters.push_back(i);
  hc.length_graded = !a.has_curvature() && !a.has_differential();
  const Ops ops(a, spec.reduced, hc.letters);
  const Field f = a.field;
  const int L = spec.length_bound;
  const std::size_t nl = hc.letters.size(), dim = a.dim();
  const bool cochain = spec.variant == HHVariant::Cochain;

  // Enumerate cells in index order.
  for (int n = 0; n <= L; ++n) {
    const std::size_t count = ipow(nl, n);
    if (count == 0 && n > 0) break;
    std::vector<std::size_t> word(n, 0);
    for (std::size_t w = 0; w < count; ++w) {
      std::size_t rest = w;
      for (int t = n - 1; t >= 0; --t) {
        word[t] = rest % nl;
        rest /= nl;
      }
      int inputs = 0;
      for (std::size_t l : word) inputs += ops.shifted_degree(hc.letters[l]);
      for (std::size_t o = 0; o < dim; ++o) {
        const int sd = ops.shifted_degree(o);
        const int deg = cochain ? sd - inputs + 1 : -(sd + inputs) - 1;
        hc.cells.push_back({n, word, o, wrap(a.grading, deg)});
      }
    }
  }
  const std::size_t N = hc.cells.size();
  std::vector<Matrix::Row> cols(N);
  auto add = [&](std::size_t col, int length, const std::vector<std::size_t>& word, std::size_t slot, const Scalar& c) {
    if (c.is_zero() || length > L) return;
    cols[col].push_back({hc.index(length, word, slot), c});
  };
  auto sign = [&](int parity) { return Scalar(f, parity % 2 ? -1 : 1); };
  // Bar-slot coordinates of an A-vector: drop non-letters (the unit, when reduced).
  auto letter_coords = [&](const Vector& v) {
    std::vector<std::pair<std::size_t, Scalar>> out;
    for (std::size_t i = 0; i < dim; ++i)
      if (!v[i].is_zero() && ops.letter_pos[i] >= 0) out.emplace_back(static_cast<std::size_t>(ops.letter_pos[i]), v[i]);
    return out;
  };
  auto prefix_parity = [&](const std::vector<std::size_t>& w, std::size_t upto) {
    int p = 0;
    for (std::size_t t = 0; t < upto; ++t) p += ops.shifted_parity(hc.letters[w[t]]);
    return p;
  };

  for (std::size_t col = 0; col < N; ++col) {
    const auto& cell = hc.cells[col];
    const int n = cell.length;
    const std::vector<std::size_t>& w = cell.word;
    const std::size_t o = cell.slot;
    if (cochain) {
      int phi_parity = ops.shifted_parity(o) + prefix_parity(w, w.size());
      phi_parity %= 2;
      // M∘φ.
      for (std::size_t p = 0; p < dim; ++p) add(col, n, w, p, ops.m1[o][p]);
      for (std::size_t b = 0; b < nl; ++b) {
        const std::size_t eb = hc.letters[b];
        std::vector<std::size_t> wb = w, bw;
        wb.push_back(b);
        bw.push_back(b);
        bw.insert(bw.end(), w.begin(), w.end());
        const Scalar s2 = sign(phi_parity * ops.shifted_parity(eb));
        for (std::size_t p = 0; p < dim; ++p) {
          add(col, n + 1, wb, p, ops.m2[o][eb][p]);
          add(col, n + 1, bw, p, s2 * ops.m2[eb][o][p]);
        }
      }
      // −(−1)^{|φ|} φ∘M: cells u whose M-image contains w.
      const Scalar outer = sign(phi_parity + 1);
      for (int j = 0; j < n; ++j) {
        const Scalar s = outer * sign(prefix_parity(w, j));
        std::vector<std::size_t> u = w;
        u.erase(u.begin() + j);
        for (auto [l, c] : letter_coords(ops.m0))
          if (l == w[j]) add(col, n - 1, u, o, s * c);
        for (std::size_t x = 0; x < nl; ++x) {
          std::vector<std::size_t> u1 = w;
          u1[j] = x;
          for (auto [l, c] : letter_coords(ops.m1[hc.letters[x]]))
            if (l == w[j]) add(col, n, u1, o, s * c);
          for (std::size_t y = 0; y < nl; ++y) {
            std::vector<std::size_t> u2 = u;
            u2.insert(u2.begin() + j, {x, y});
            for (auto [l, c] : letter_coords(ops.m2[hc.letters[x]][hc.letters[y]]))
              if (l == w[j]) add(col, n + 1, u2, o, s * c);
          }
        }
      }
      continue;
    }
    // Chains x0 ⊗ x1 ⊗ … ⊗ xn.
    for (std::size_t p = 0; p < dim; ++p) add(col, n, w, p, ops.m1[o][p]);
    if (n >= 1) {
      const std::vector<std::size_t> tail(w.begin() + 1, w.end());
      for (std::size_t p = 0; p < dim; ++p) add(col, n - 1, tail, p, ops.m2[o][hc.letters[w[0]]][p]);
      const std::size_t last = hc.letters[w[n - 1]];
      const std::vector<std::size_t> head(w.begin(), w.end() - 1);
      const Scalar s = sign(ops.shifted_parity(last) * (ops.shifted_parity(o) + prefix_parity(w, n - 1)));
      for (std::size_t p = 0; p < dim; ++p) add(col, n - 1, head, p, s * ops.m2[last][o][p]);
    }
    for (int i = 0; i < n; ++i) {
      const Scalar s = sign(ops.shifted_parity(o) + prefix_parity(w, i));
      for (auto [l, c] : letter_coords(ops.m1[hc.letters[w[i]]])) {
        std::vector<std::size_t> u = w;
        u[i] = l;
        add(col, n, u, o, s * c);
      }
      if (i + 1 < n)
        for (auto [l, c] : letter_coords(ops.m2[hc.letters[w[i]]][hc.letters[w[i + 1]]])) {
          std::vector<std::size_t> u = w;
          u.erase(u.begin() + i + 1);
          u[i] = l;
          add(col, n - 1, u, o, s * c);
        }
    }
    for (int t = 0; t <= n; ++t) {
      const Scalar s = sign(ops.shifted_parity(o) + prefix_parity(w, t));
      for (auto [l, c] : letter_coords(ops.m0)) {
        std::vector<std::size_t> u = w;
        u.insert(u.begin() + t, l);
        add(col, n + 1, u, o, s * c);
      }
    }
  }
  Matrix d(f, N, N);
  for (std::size_t col = 0; col < N; ++col)
    for (const auto& e : cols[col]) d.add_to(e.col, col, e.value);
  hc.differential = std::move(d);
  return hc;
}

std::size_t HHResult::total(int degree) const {
  std::size_t s = 0;
  for (const auto& [k, v] : dims)
    if (k.second == degree) s += v;
  return s;
}

namespace {

using Group = std::pair<int, int>;

struct GroupData {
  std::vector<std::size_t> members;
};

// Restriction of columns `cols` of m to rows `rows`.
Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  std::vector<long> col_pos(m.cols(), -1);
  for (std::size_t j = 0; j < cols.size(); ++j) col_pos[cols[j]] = static_cast<long>(j);
  Matrix out(m.field(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Matrix::Row row;
    for (const auto& e : m.row(rows[i]))
      if (col_pos[e.col] >= 0) row.push_back({static_cast<std::size_t>(col_pos[e.col]), e.value});
    out.set_row(i, std::move(row));
  }
  return out;
}

std::vector<std::size_t> all_rows(std::size_t n) {
  std::vector<std::size_t> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = i;
  return r;
}

HHResult compute(const HochschildSpec& spec, int window_max) {
  if (window_max < 0) fail(ErrorCode::InvalidInput, "hochschild: window must be nonnegative");
  if (window_max >= spec.length_bound - 1)
    fail(ErrorCode::WindowExceedsBound, "hochschild: window max " + std::to_string(window_max) +
                                            " needs length bound > " + std::to_string(window_max + 1));
  const HochschildComplex hc = hochschild_complex(spec);
  const CurvedAlgebra& a = spec.algebra;
  const Field f = a.field;
  const bool cochain = spec.variant == HHVariant::Cochain;
  const Matrix& d = hc.differential;

  HHResult res;
  res.length_graded = hc.length_graded;
  // δ² vanishes on the whole truncated complex exactly when the result is a complex.
  res.exact = (d * d).is_zero();

  std::map<Group, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < hc.cells.size(); ++i) {
    const auto& c = hc.cells[i];
    groups[{hc.length_graded ? c.length : -1, c.degree}].push_back(i);
  }
  const int step = cochain ? 1 : -1;
  auto predecessor = [&](const Group& g) -> Group {
    const int len = hc.length_graded ? g.first - step : -1;
    return {len, wrap(a.grading, g.second - step)};
  };
  const std::vector<std::size_t> rows = all_rows(hc.cells.size());

  struct Slice {
    std::vector<Vector> kernel;  // in group coordinates
    std::vector<Vector> image;   // incoming image, in group coordinates
  };
  auto slice = [&](const Group& g) {
    Slice s;
    const auto& mem = groups.at(g);
    s.kernel = kernel_basis(submatrix(d, rows, mem));
    const auto it = groups.find(predecessor(g));
    if (it != groups.end()) {
      const Matrix in = submatrix(d, mem, it->second);
      for (std::size_t j = 0; j < in.cols(); ++j) {
        Vector v = in.column(j);
        if (!is_zero_vector(v)) s.image.push_back(std::move(v));
      }
    }
    return s;
  };
  auto cohomology_dim = [&](const Group& g, const Slice& s) {
    const std::size_t n = groups.at(g).size();
    const std::size_t rk_im = s.image.empty() ? 0 : rank(Matrix::from_columns(f, s.image, n));
    std::vector<Vector> both = s.kernel;
    both.insert(both.end(), s.image.begin(), s.image.end());
    const std::size_t rk_both = both.empty() ? 0 : rank(Matrix::from_columns(f, both, n));
    const std::size_t meet = rk_im + s.kernel.size() - rk_both;
    return s.kernel.size() - meet;
  };

  for (const auto& [g, mem] : groups) {
    if (hc.length_graded && g.first > window_max) continue;
    res.dims[g] = cohomology_dim(g, slice(g));
  }
  if (!cochain) return res;

  // HH⁰: classes supported on length-0 cochains of degree 0.
  const Group g0{hc.length_graded ? 0 : -1, 0};
  if (!groups.count(g0)) return res;
  const auto& mem = groups.at(g0);
  const Slice s = slice(g0);
  std::vector<Vector> candidates;
  for (const Vector& k : s.kernel) {
    bool length0 = true;
    for (std::size_t i = 0; i < mem.size(); ++i)
      if (!k[i].is_zero() && hc.cells[mem[i]].length != 0) length0 = false;
    if (length0) candidates.push_back(k);
  }
  const auto picked = independent_modulo(f, mem.size(), s.image, candidates);
  auto to_algebra = [&](const Vector& k) {
    Vector v = zero_vector(f, a.dim());
    for (std::size_t i = 0; i < mem.size(); ++i)
      if (!k[i].is_zero()) v[hc.cells[mem[i]].slot] = k[i];
    return v;
  };
  auto to_group = [&](const Vector& v) {
    Vector k = zero_vector(f, mem.size());
    for (std::size_t i = 0; i < mem.size(); ++i)
      if (hc.cells[mem[i]].length == 0) k[i] = v[hc.cells[mem[i]].slot];
    return k;
  };
  std::vector<Vector> reps;
  for (std::size_t i : picked) {
    res.hh0_basis.push_back(to_algebra(candidates[i]));
    reps.push_back(candidates[i]);
  }
  std::vector<Vector> system = reps;
  system.insert(system.end(), s.image.begin(), s.image.end());
  if (system.empty()) return res;
  const Matrix sys = Matrix::from_columns(f, system, mem.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const Vector prod = a.multiply(res.hh0_basis[i], res.hh0_basis[j]);
      const auto x = solve(sys, to_group(prod));
      if (!x) continue;
      res.hh0_products[{i, j}] = Vector(x->begin(), x->begin() + static_cast<long>(reps.size()));
    }
  return res;
}

}  // namespace

HHResult hochschild_cohomology(const HochschildSpec& spec, int window_max) {
  HochschildSpec s = spec;
  s.variant = HHVariant::Cochain;
  return compute(s, window_max);
}

HHResult hochschild_homology(const HochschildSpec& spec, int window_max) {
  HochschildSpec s = spec;
  s.variant = HHVariant::Chain;
  return compute(s, window_max);
}

bool curvature_term_check(const HochschildSpec& spec) {
  const HochschildComplex hc = hochschild_complex(spec);
  const Matrix sq = hc.differential * hc.differential;
  for (std::size_t r = 0; r < sq.rows(); ++r)
    for (const auto& e : sq.row(r))
      if (hc.cells[e.col].length <= spec.length_bound - 1) return false;
  return true;
}

}  // namespace singlab
