#include "singlab/matfac.hpp"

#include <deque>
#include <map>

namespace singlab {

namespace {

void require_square_pair(const PolyMatrix& phi, const PolyMatrix& psi) {
  if (phi.rows() != phi.cols() || psi.rows() != psi.cols() || phi.rows() != psi.rows())
    fail(ErrorCode::InvalidInput, "phi and psi must be square of equal size");
}

void require_same_target(const MatrixFactorisation& a, const MatrixFactorisation& b) {
  if (!(a.ring == b.ring)) fail(ErrorCode::RingMismatch, "matrix factorisations over different rings");
  if (!(a.sigma == b.sigma))
    fail(ErrorCode::SigmaMismatch, "factorisations of " + a.sigma.to_string() + " and " + b.sigma.to_string());
}

PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

PolyMatrix zero(const Ring& r, std::size_t n) { return PolyMatrix(r, n, n); }

// All exponent vectors in n variables of total degree ≤ d, by degree then descending.
std::vector<Monomial> monomials_up_to(std::size_t n, long d) {
  std::vector<Monomial> out;
  Monomial cur(n, 0);
  for (long deg = 0; deg <= d; ++deg) {
    auto rec = [&](auto&& self, std::size_t i, long left) -> void {
      if (i + 1 == n) {
        cur[i] = static_cast<int>(left);
        out.push_back(cur);
        return;
      }
      for (long e = left; e >= 0; --e) {
        cur[i] = static_cast<int>(e);
        self(self, i + 1, left - e);
      }
    };
    if (n == 0) {
      if (deg == 0) out.push_back(cur);
    } else {
      rec(rec, 0, deg);
    }
  }
  return out;
}

// Coordinates of vectors of polynomials in a growing (row, monomial) basis.
class CoordIndex {
 public:
  std::size_t at(std::size_t row, const Monomial& m) {
    auto [it, fresh] = index_.emplace(std::make_pair(row, m), index_.size());
    return it->second;
  }
  std::size_t size() const { return index_.size(); }

  // Sparse column for a vector of polynomials.
  std::vector<std::pair<std::size_t, Scalar>> column(const std::vector<Poly>& v) {
    std::vector<std::pair<std::size_t, Scalar>> col;
    for (std::size_t r = 0; r < v.size(); ++r)
      for (const auto& t : v[r].terms()) col.emplace_back(at(r, t.mono), t.coef);
    return col;
  }

 private:
  std::map<std::pair<std::size_t, Monomial>, std::size_t> index_;
};

Matrix assemble(Field f, std::size_t rows, const std::vector<std::vector<std::pair<std::size_t, Scalar>>>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) m.add_to(r, c, v);
  return m;
}

std::vector<Poly> times_column(const PolyMatrix& a, std::size_t col, const Poly& p, const GroebnerBasis* gb) {
  std::vector<Poly> out(a.rows(), Poly(a.ring()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (a.at(r, col).is_zero()) continue;
    out[r] = a.at(r, col) * p;
    if (gb) out[r] = normal_form(out[r], *gb);
  }
  return out;
}

Matrix constant_part(const PolyMatrix& m) {
  const Field F = m.ring().field();
  Matrix c(F, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t s = 0; s < m.cols(); ++s) c.set(r, s, m.at(r, s).constant_term());
  return c;
}

std::optional<GroebnerBasis> sigma_quotient(const MatrixFactorisation& m) {
  if (m.sigma.is_zero()) return std::nullopt;
  return buchberger(m.ring, {m.sigma});
}

}  // namespace

MatrixFactorisation make_mf(const Poly& sigma, PolyMatrix phi, PolyMatrix psi) {
  require_square_pair(phi, psi);
  if (!(phi.ring() == sigma.ring()) || !(psi.ring() == sigma.ring()))
    fail(ErrorCode::RingMismatch, "phi, psi and sigma must share a ring");
  return MatrixFactorisation{sigma.ring(), sigma, std::move(phi), std::move(psi)};
}

MFCheck mf_verify(const MatrixFactorisation& m) {
  MFCheck out;
  const std::size_t n = m.rank();
  const PolyMatrix products[2] = {m.phi * m.psi, m.psi * m.phi};
  const char* names[2] = {"phi*psi", "psi*phi"};
  for (int k = 0; k < 2; ++k)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const Poly want = r == c ? m.sigma : Poly(m.ring);
        if (!(products[k].at(r, c) == want)) {
          out.ok = false;
          out.product = names[k];
          out.row = r;
          out.col = c;
          out.expected = want;
          out.got = products[k].at(r, c);
          return out;
        }
      }
  return out;
}

MatrixFactorisation mf_shift(const MatrixFactorisation& m) { return {m.ring, m.sigma, m.psi, m.phi}; }

MatrixFactorisation mf_sum(const MatrixFactorisation& a, const MatrixFactorisation& b) {
  require_same_target(a, b);
  return {a.ring, a.sigma, block_diag(a.phi, b.phi), block_diag(a.psi, b.psi)};
}

MatrixFactorisation mf_tensor(const MatrixFactorisation& a, const MatrixFactorisation& b) {
  const Ring r = Ring::join(a.ring, b.ring);
  const PolyMatrix pa = a.phi.to_ring(r), qa = a.psi.to_ring(r);
  const PolyMatrix pb = b.phi.to_ring(r), qb = b.psi.to_ring(r);
  const PolyMatrix ia = PolyMatrix::identity(r, a.rank()), ib = PolyMatrix::identity(r, b.rank());
  // Even: X0⊗Y0, X1⊗Y1. Odd: X0⊗Y1, X1⊗Y0. d(x⊗y) = dx⊗y + (−1)^{|x|} x⊗dy.
  const PolyMatrix phi = PolyMatrix::blocks({{kronecker(ia, pb), kronecker(pa, ib)},
                                             {kronecker(qa, ib), -kronecker(ia, qb)}});
  const PolyMatrix psi = PolyMatrix::blocks({{kronecker(ia, qb), kronecker(pa, ib)},
                                             {kronecker(qa, ib), -kronecker(ia, pb)}});
  return {r, a.sigma.to_ring(r) + b.sigma.to_ring(r), phi, psi};
}

MatrixFactorisation knoerrer_G(const MatrixFactorisation& m, const std::string& y, int y_weight) {
  const Ring r = m.ring.adjoin({y}, {y_weight});
  const Poly Y = Poly::variable(r, r.nvars() - 1);
  const std::size_t n = m.rank();
  const PolyMatrix omega = PolyMatrix::blocks(
      {{PolyMatrix::scalar(Y, n), m.psi.to_ring(r)}, {m.phi.to_ring(r), PolyMatrix::scalar(-Y, n)}});
  return {r, m.sigma.to_ring(r) + Y * Y, omega, omega};
}

MatrixFactorisation knoerrer_H(const MatrixFactorisation& m, const std::string& u, const std::string& v,
                               int u_weight, int v_weight) {
  const Ring r = m.ring.adjoin({u, v}, {u_weight, v_weight});
  const Poly U = Poly::variable(r, r.nvars() - 2), V = Poly::variable(r, r.nvars() - 1);
  const std::size_t n = m.rank();
  const PolyMatrix phi = m.phi.to_ring(r), psi = m.psi.to_ring(r);
  return {r, m.sigma.to_ring(r) + U * V,
          PolyMatrix::blocks({{PolyMatrix::scalar(U, n), psi}, {phi, PolyMatrix::scalar(-V, n)}}),
          PolyMatrix::blocks({{PolyMatrix::scalar(V, n), psi}, {phi, PolyMatrix::scalar(-U, n)}})};
}

MatrixFactorisation restrict_rho(const MatrixFactorisation& m, const std::string& var) {
  const auto idx = m.ring.index_of(var);
  if (!idx) fail(ErrorCode::InvalidInput, "no variable named " + var);
  const Ring r = m.ring.without(*idx);
  const Poly z(m.ring);
  auto f = [&](const Poly& p) { return p.substitute(*idx, z).to_ring(r); };
  return {r, f(m.sigma), m.phi.map(r, f), m.psi.map(r, f)};
}

MatrixFactorisation tau(const MatrixFactorisation& m, const std::string& var) {
  const auto idx = m.ring.index_of(var);
  if (!idx) fail(ErrorCode::InvalidInput, "no variable named " + var);
  const Poly minus = -Poly::variable(m.ring, *idx);
  auto f = [&](const Poly& p) { return p.substitute(*idx, minus); };
  return {m.ring, f(m.sigma), m.phi.map(m.ring, f), m.psi.map(m.ring, f)};
}

std::optional<MFGrading> infer_grading(const MatrixFactorisation& m) {
  long ws = 0;
  if (!m.sigma.is_zero()) {
    auto w = m.sigma.homogeneous_weight();
    if (!w) return std::nullopt;
    ws = *w;
  }
  const std::size_t n = m.rank();
  // Nodes 0..n−1 are even generators, n..2n−1 odd. Edge (a, b, δ) means g_a − g_b = δ.
  std::vector<std::vector<std::pair<std::size_t, long>>> adj(2 * n);
  auto add = [&](const PolyMatrix& mat, std::size_t row_off, std::size_t col_off) {
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t s = 0; s < n; ++s) {
        const Poly& e = mat.at(t, s);
        if (e.is_zero()) continue;
        auto w = e.homogeneous_weight();
        if (!w) return false;
        const long delta = ws - 2 * *w;
        adj[row_off + t].emplace_back(col_off + s, delta);
        adj[col_off + s].emplace_back(row_off + t, -delta);
      }
    return true;
  };
  // ψ : X0 → X1 has rows odd, columns even; φ the other way.
  if (!add(m.psi, n, 0) || !add(m.phi, 0, n)) return std::nullopt;
  std::vector<std::optional<long>> g(2 * n);
  for (std::size_t start = 0; start < 2 * n; ++start) {
    if (g[start]) continue;
    g[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (auto [b, delta] : adj[a]) {
        const long want = *g[a] - delta;
        if (!g[b]) {
          g[b] = want;
          queue.push_back(b);
        } else if (*g[b] != want) {
          return std::nullopt;
        }
      }
    }
  }
  MFGrading out;
  out.dweight = ws;
  for (std::size_t k = 0; k < n; ++k) {
    out.even.push_back(*g[k]);
    out.odd.push_back(*g[n + k]);
  }
  return out;
}

FreeComplex mf_to_complex(const MatrixFactorisation& m) {
  FreeComplex c;
  c.ring = m.ring;
  c.grading = Grading::Z2;
  c.weight_scale = 2;
  const auto g = infer_grading(m);
  if (g) {
    c.dweight = g->dweight;
    c.set_module(0, g->even);
    c.set_module(1, g->odd);
  } else {
    c.set_rank(0, m.rank());
    c.set_rank(1, m.rank());
  }
  c.set_differential(0, m.psi);
  c.set_differential(1, m.phi);
  if (!m.sigma.is_zero()) c.curvature = m.sigma;
  return c;
}

FreeComplex mf_hom_complex(const MatrixFactorisation& x, const MatrixFactorisation& y) {
  require_same_target(x, y);
  FreeComplex cx = mf_to_complex(x), cy = mf_to_complex(y);
  if (!infer_grading(x) || !infer_grading(y)) {
    // No common grading: hom is still a complex, just not sliceable.
    for (auto* c : {&cx, &cy}) {
      c->dweight = 0;
      for (auto& [i, w] : c->weights) std::fill(w.begin(), w.end(), 0);
    }
  }
  return hom_complex(cx, cy);
}

FreeComplex mf_unfold(const MatrixFactorisation& m, int n) {
  if (n < 0) fail(ErrorCode::InvalidInput, "unfolding window must be non-negative");
  FreeComplex c;
  c.ring = m.ring;
  c.weight_scale = 2;
  c.quotient = sigma_quotient(m);
  const auto g = infer_grading(m);
  if (g) c.dweight = g->dweight;
  for (int i = -n; i <= n; ++i) {
    const bool even = (i % 2) == 0;
    if (g) c.set_module(i, even ? g->even : g->odd);
    else c.set_rank(i, m.rank());
  }
  for (int i = -n; i < n; ++i) c.set_differential(i, c.reduce((i % 2) == 0 ? m.psi : m.phi));
  return c;
}

bool UnfoldExactness::all() const {
  if (!is_complex) return false;
  for (bool b : exact_at_even)
    if (!b) return false;
  for (bool b : exact_at_odd)
    if (!b) return false;
  return true;
}

UnfoldExactness unfold_exactness(const MatrixFactorisation& m, long degree_bound) {
  UnfoldExactness out;
  const auto gb = sigma_quotient(m);
  const GroebnerBasis* q = gb ? &*gb : nullptr;
  const Field F = m.ring.field();
  const std::size_t n = m.rank();
  {
    const PolyMatrix a = m.phi * m.psi, b = m.psi * m.phi;
    out.is_complex = q ? a.reduced(*q).is_zero() && b.reduced(*q).is_zero() : a.is_zero() && b.is_zero();
  }
  const long deg_sigma = m.sigma.is_zero() ? 0 : m.sigma.weighted_degree();
  auto entry_degree = [](const PolyMatrix& a) {
    long e = 0;
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (!a.at(r, c).is_zero()) e = std::max(e, a.at(r, c).weighted_degree());
    return e;
  };
  // Standard monomials (normal forms) of weighted degree ≤ d.
  auto filtered = [&](long d) {
    std::vector<Monomial> monos;
    for (long w = 0; w <= d; ++w) {
      auto part = q ? standard_monomials_of_weight(*q, w) : monomials_of_weight(m.ring, w);
      monos.insert(monos.end(), part.begin(), part.end());
    }
    return monos;
  };
  // ker(a̅ on F_d) ⊆ b̅(F_{d+s}), where a̅ b̅ = 0 and both land in the same free module.
  auto exact_at = [&](const PolyMatrix& a, const PolyMatrix& b, long d) {
    const long s = std::max(0L, entry_degree(a) - deg_sigma);
    const Scalar one = Scalar::one(F);
    CoordIndex src, img, ker_target;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> acols;
    std::vector<std::vector<Poly>> elements;
    for (std::size_t col = 0; col < n; ++col)
      for (const auto& mono : filtered(d)) {
        const Poly p = Poly::monomial(m.ring, mono, one);
        std::vector<Poly> e(n, Poly(m.ring));
        e[col] = p;
        elements.push_back(e);
        acols.push_back(ker_target.column(times_column(a, col, p, q)));
      }
    const Matrix A = assemble(F, ker_target.size(), acols);
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
    for (std::size_t col = 0; col < n; ++col)
      for (const auto& mono : filtered(d + s))
        cols.push_back(img.column(times_column(b, col, Poly::monomial(m.ring, mono, one), q)));
    const std::size_t image_rank = rank(assemble(F, img.size(), cols));
    for (const auto& v : kernel_basis(A)) {
      std::vector<Poly> x(n, Poly(m.ring));
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero())
          for (std::size_t j = 0; j < n; ++j) x[j] += elements[k][j].scaled(v[k]);
      cols.push_back(img.column(x));
    }
    return rank(assemble(F, img.size(), cols)) == image_rank;
  };
  for (long d = 0; d <= degree_bound; ++d) {
    // At X̄0: ker ψ̄ = im φ̄. At X̄1: ker φ̄ = im ψ̄.
    out.exact_at_even.push_back(exact_at(m.psi, m.phi, d));
    out.exact_at_odd.push_back(exact_at(m.phi, m.psi, d));
  }
  return out;
}

Presentation mf_cokernel(const MatrixFactorisation& m) {
  auto gb = sigma_quotient(m);
  if (!gb) gb = buchberger(m.ring, {});
  return {*gb, m.phi.reduced(*gb)};
}

std::size_t local_cokernel_dim(const PolyMatrix& matrix, long n_order) {
  const Ring& r = matrix.ring();
  const Scalar one = Scalar::one(r.field());
  const auto monos = monomials_up_to(r.nvars(), n_order - 1);
  CoordIndex idx;
  for (std::size_t row = 0; row < matrix.rows(); ++row)
    for (const auto& mo : monos) idx.at(row, mo);
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
  for (std::size_t c = 0; c < matrix.cols(); ++c)
    for (const auto& mo : monos) {
      std::vector<Poly> v = times_column(matrix, c, Poly::monomial(r, mo, one), nullptr);
      for (auto& p : v) p = p.truncate_order(n_order);
      cols.push_back(idx.column(v));
    }
  const std::size_t ambient = idx.size();
  return ambient - rank(assemble(r.field(), ambient, cols));
}

bool is_closed_morphism(const MatrixFactorisation& x, const MatrixFactorisation& y, const MFMorphism& f) {
  require_same_target(x, y);
  const std::size_t nx = x.rank(), ny = y.rank();
  if (f.f0.rows() != ny || f.f0.cols() != nx || f.f1.rows() != ny || f.f1.cols() != nx) return false;
  if (f.parity % 2 == 0) return y.phi * f.f1 == f.f0 * x.phi && y.psi * f.f0 == f.f1 * x.psi;
  // Odd: ∂f = d_Y f + f d_X vanishes on X0 and on X1.
  return (y.phi * f.f0 + f.f1 * x.psi).is_zero() && (y.psi * f.f1 + f.f0 * x.phi).is_zero();
}

bool is_isomorphism(const MatrixFactorisation& x, const MatrixFactorisation& y, const MFMorphism& f) {
  if (f.parity % 2 != 0 || x.rank() != y.rank()) return false;
  if (!is_closed_morphism(x, y, f)) return false;
  const std::size_t n = x.rank();
  return rank(constant_part(f.f0)) == n && rank(constant_part(f.f1)) == n;
}

IsoSearch find_isomorphism(const MatrixFactorisation& x, const MatrixFactorisation& y, int degree_bound) {
  require_same_target(x, y);
  IsoSearch out;
  const std::size_t n = x.rank();
  if (y.rank() != n) return out;
  const Ring& r = x.ring;
  const Field F = r.field();
  const Scalar one = Scalar::one(F);
  const auto monos = monomials_up_to(r.nvars(), degree_bound);
  // Unknown k: (component, row a, col b, monomial). Equations: φ_Y f1 − f0 φ_X = 0 and
  // ψ_Y f0 − f1 ψ_X = 0, indexed by (equation, row, col, monomial).
  struct Unknown {
    int comp;
    std::size_t a, b;
    Monomial mono;
  };
  std::vector<Unknown> unknowns;
  for (int comp = 0; comp < 2; ++comp)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (const auto& mo : monos) unknowns.push_back({comp, a, b, mo});
  std::map<std::tuple<int, std::size_t, std::size_t, Monomial>, std::size_t> eq_index;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
  auto put = [&](std::vector<std::pair<std::size_t, Scalar>>& col, int eq, std::size_t row, std::size_t c,
                 const Poly& p) {
    for (const auto& t : p.terms()) {
      auto [it, fresh] = eq_index.emplace(std::make_tuple(eq, row, c, t.mono), eq_index.size());
      col.emplace_back(it->second, t.coef);
    }
  };
  for (const auto& u : unknowns) {
    std::vector<std::pair<std::size_t, Scalar>> col;
    const Poly m = Poly::monomial(r, u.mono, one);
    // f_comp = m·E_ab.
    const PolyMatrix& left_first = u.comp == 1 ? y.phi : y.psi;   // φ_Y f1 or ψ_Y f0
    const PolyMatrix& right_second = u.comp == 0 ? x.phi : x.psi; // f0 φ_X or f1 ψ_X
    const int eq_left = u.comp == 1 ? 0 : 1, eq_right = u.comp == 0 ? 0 : 1;
    for (std::size_t row = 0; row < n; ++row)
      if (!left_first.at(row, u.a).is_zero()) put(col, eq_left, row, u.b, left_first.at(row, u.a) * m);
    for (std::size_t c = 0; c < n; ++c)
      if (!right_second.at(u.b, c).is_zero()) put(col, eq_right, u.a, c, -(right_second.at(u.b, c) * m));
    cols.push_back(std::move(col));
  }
  const auto kernel = kernel_basis(assemble(F, eq_index.size(), cols));
  if (kernel.empty()) return out;
  auto build = [&](const Vector& v) {
    MFMorphism f{0, PolyMatrix(r, n, n), PolyMatrix(r, n, n)};
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
      if (v[k].is_zero()) continue;
      const auto& u = unknowns[k];
      (u.comp == 0 ? f.f0 : f.f1).at(u.a, u.b) += Poly::monomial(r, u.mono, v[k]);
    }
    return f;
  };
  std::vector<Vector> trials(kernel.begin(), kernel.end());
  for (long t = 1; t <= 12; ++t) {
    Vector v = zero_vector(F, unknowns.size());
    for (std::size_t k = 0; k < kernel.size(); ++k) {
      const Scalar c(F, ((static_cast<long>(k) + 1) * (t + 2) * 7919) % 23 - 11);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * kernel[k][j];
    }
    trials.push_back(std::move(v));
  }
  for (const auto& v : trials) {
    MFMorphism f = build(v);
    if (is_isomorphism(x, y, f)) {
      out.status = IsoStatus::Found;
      out.iso = std::move(f);
      return out;
    }
  }
  return out;
}

MFMorphism rho_G_certificate(const MatrixFactorisation& x) {
  const Ring& r = x.ring;
  const std::size_t n = x.rank();
  const PolyMatrix I = PolyMatrix::identity(r, n);
  return {0, PolyMatrix::blocks({{zero(r, n), I}, {I, zero(r, n)}}), PolyMatrix::identity(r, 2 * n)};
}

MFMorphism rho_H_certificate(const MatrixFactorisation& x) { return rho_G_certificate(x); }

MFMorphism sigma_G_certificate(const MatrixFactorisation& x, const Ring& ring) {
  const Scalar i = Scalar::imaginary_unit(ring.field());
  const std::size_t n = x.rank();
  const PolyMatrix I = PolyMatrix::identity(ring, n);
  const PolyMatrix M = PolyMatrix::blocks({{zero(ring, n), I.scaled(i)}, {I.scaled(-i), zero(ring, n)}});
  return {0, M, -M};
}

}  // namespace singlab
