#include "singlab/stabilize.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

#include "singlab/koszul.hpp"

namespace singlab {

namespace {

std::vector<std::size_t> bits(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

// Koszul basis order: by size, then lexicographic on the sorted index lists.
bool subset_less(Mask a, Mask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return bits(a) < bits(b);
}

bool key_less(const std::pair<Mask, Mask>& a, const std::pair<Mask, Mask>& b) {
  if (a.first != b.first) return subset_less(a.first, b.first);
  return subset_less(a.second, b.second);
}

using Word = std::vector<int>;
using NormalForm = std::map<std::pair<Mask, Mask>, long>;

// Normal-orders a word in θ_i (code i) and T_i (code r + i) using the Weyl relations.
const NormalForm& normal_order(const Word& w, int r) {
  thread_local std::map<std::pair<int, Word>, NormalForm> memo;
  const auto key = std::make_pair(r, w);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  NormalForm out;
  std::size_t k = 0;
  while (k + 1 < w.size() && w[k] < w[k + 1]) ++k;
  if (k + 1 >= w.size()) {
    Mask s = 0, u = 0;
    for (int c : w) (c < r ? s : u) |= Mask{1} << (c < r ? c : c - r);
    out[{s, u}] = 1;
  } else if (w[k] != w[k + 1]) {
    Word swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    for (const auto& [m, c] : normal_order(swapped, r)) out[m] -= c;
    // T_i θ_i = 1 − θ_i T_i.
    if (w[k] >= r && w[k + 1] < r && w[k] - r == w[k + 1]) {
      Word shorter = w;
      shorter.erase(shorter.begin() + static_cast<long>(k), shorter.begin() + static_cast<long>(k) + 2);
      for (const auto& [m, c] : normal_order(shorter, r)) out[m] += c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return memo.emplace(key, std::move(out)).first->second;
}

const NormalForm& multiply_basis(Mask s1, Mask u1, Mask s2, Mask u2, int r) {
  Word w;
  for (auto i : bits(s1)) w.push_back(static_cast<int>(i));
  for (auto i : bits(u1)) w.push_back(r + static_cast<int>(i));
  for (auto i : bits(s2)) w.push_back(static_cast<int>(i));
  for (auto i : bits(u2)) w.push_back(r + static_cast<int>(i));
  return normal_order(w, r);
}

std::vector<Mask> all_masks(std::size_t r) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << r); ++m) out.push_back(m);
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

}  // namespace

PolyR::PolyR(Ring ring, std::size_t r) : ring_(std::move(ring)), r_(r) {
  if (r > 16) fail(ErrorCode::InvalidInput, "Poly(r) supports r ≤ 16");
}

PolyR PolyR::scalar(const Ring& ring, std::size_t r, const Poly& p) { return basis(ring, r, 0, 0, p); }
PolyR PolyR::theta(const Ring& ring, std::size_t r, std::size_t i) {
  return basis(ring, r, Mask{1} << i, 0, Poly::constant(ring, 1));
}
PolyR PolyR::T(const Ring& ring, std::size_t r, std::size_t i) {
  return basis(ring, r, 0, Mask{1} << i, Poly::constant(ring, 1));
}
PolyR PolyR::basis(const Ring& ring, std::size_t r, Mask s, Mask u, const Poly& p) {
  PolyR a(ring, r);
  a.add_term(s, u, p);
  return a;
}

void PolyR::add_term(Mask s, Mask u, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, fresh] = terms_.emplace(std::make_pair(s, u), p);
  if (!fresh) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> PolyR::parity() const {
  std::optional<int> p;
  for (const auto& [k, c] : terms_) {
    const int q = (std::popcount(k.first) + std::popcount(k.second)) % 2;
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p;
}

PolyR PolyR::part(int parity) const {
  PolyR out(ring_, r_);
  for (const auto& [k, c] : terms_)
    if ((std::popcount(k.first) + std::popcount(k.second)) % 2 == parity) out.terms_.emplace(k, c);
  return out;
}

Poly PolyR::coefficient(Mask s, Mask u) const {
  auto it = terms_.find({s, u});
  return it == terms_.end() ? Poly(ring_) : it->second;
}

PolyR PolyR::operator-() const {
  PolyR out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

PolyR& PolyR::operator+=(const PolyR& o) {
  if (r_ == 0 && terms_.empty()) {
    ring_ = o.ring_;
    r_ = o.r_;
  }
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

PolyR operator*(const PolyR& a, const PolyR& b) {
  if (a.r_ != b.r_) fail(ErrorCode::InvalidInput, "Poly(r) elements with different r");
  PolyR out(a.ring_, a.r_);
  const int r = static_cast<int>(a.r_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      const Poly c = ca * cb;
      for (const auto& [k, n] : multiply_basis(ka.first, ka.second, kb.first, kb.second, r))
        out.add_term(k.first, k.second, c.scaled(Scalar(a.ring_.field(), n)));
    }
  return out;
}

PolyR PolyR::scaled(const Poly& p) const {
  PolyR out(ring_, r_);
  for (const auto& [k, c] : terms_) out.add_term(k.first, k.second, c * p);
  return out;
}

PolyR PolyR::scaled(const Scalar& s) const {
  PolyR out(ring_, r_);
  for (const auto& [k, c] : terms_) out.add_term(k.first, k.second, c.scaled(s));
  return out;
}

bool operator==(const PolyR& a, const PolyR& b) { return a.r_ == b.r_ && a.terms_ == b.terms_; }

std::string PolyR::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Mask, Mask>> keys;
  for (const auto& [k, c] : terms_) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), key_less);
  std::string out;
  for (const auto& k : keys) {
    std::string gens;
    for (auto i : bits(k.first)) gens += (gens.empty() ? "" : "*") + std::string("th") + std::to_string(i + 1);
    for (auto i : bits(k.second)) gens += (gens.empty() ? "" : "*") + std::string("T") + std::to_string(i + 1);
    std::string coef = terms_.at(k).to_string();
    bool negative = false;
    if (terms_.at(k).terms().size() == 1 && coef[0] == '-') {
      negative = true;
      coef = coef.substr(1);
    } else if (terms_.at(k).terms().size() > 1 && !gens.empty()) {
      coef = "(" + coef + ")";
    }
    std::string term;
    if (gens.empty()) term = coef;
    else if (coef == "1") term = gens;
    else term = coef + "*" + gens;
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

PolyR poly_r_multiply(const PolyR& a, const PolyR& b) { return a * b; }

PolyMatrix poly_r_action(const PolyR& a) {
  const Ring& ring = a.ring();
  const std::size_t r = a.r();
  const std::size_t n = std::size_t{1} << r;
  std::vector<PolyMatrix> theta, t;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Poly> unit(r, Poly(ring));
    unit[i] = Poly::constant(ring, 1);
    theta.push_back(wedge_operator(ring, unit));
    t.push_back(contraction_operator(ring, unit));
  }
  PolyMatrix out(ring, n, n);
  for (const auto& [k, c] : a.terms()) {
    PolyMatrix m = PolyMatrix::identity(ring, n);
    for (auto i : bits(k.first)) m = m * theta[i];
    for (auto i : bits(k.second)) m = m * t[i];
    out = out + m.scaled(c);
  }
  return out;
}

Stabilisation stabilise(const Ring& ring, const std::vector<Poly>& fs, const Poly& sigma,
                        const std::optional<std::vector<Poly>>& coeffs) {
  const KoszulComplex k = koszul_complex(ring, fs);
  Stabilisation s{ring, fs, sigma, {}, !coeffs.has_value(), {}};
  s.coeffs = coeffs ? *coeffs : division_coefficients(sigma, fs);
  sigma_homotopy(k, sigma, s.coeffs);  // validates the cofactors
  const PolyMatrix full = contraction_operator(ring, fs) + wedge_operator(ring, s.coeffs);
  const auto basis = exterior_basis_all(fs.size());
  std::vector<std::size_t> even, odd;
  for (std::size_t i = 0; i < basis.size(); ++i) (basis[i].size() % 2 ? odd : even).push_back(i);
  PolyMatrix phi(ring, even.size(), odd.size()), psi(ring, odd.size(), even.size());
  for (std::size_t a = 0; a < even.size(); ++a)
    for (std::size_t b = 0; b < odd.size(); ++b) {
      phi.at(a, b) = full.at(even[a], odd[b]);
      psi.at(b, a) = full.at(odd[b], even[a]);
    }
  s.mf = make_mf(sigma, std::move(phi), std::move(psi));
  return s;
}

PolyR EndDGAlgebra::delta(const PolyR& a) const {
  PolyR out(ring, r);
  for (int p = 0; p < 2; ++p) {
    const PolyR ap = a.part(p);
    if (ap.is_zero()) continue;
    out += D * ap;
    out += p ? ap * D : -(ap * D);
  }
  return out;
}

long EndDGAlgebra::weight(Mask s, Mask u) const {
  long w = 0;
  for (auto i : bits(s)) w += theta_weight[i];
  for (auto i : bits(u)) w += t_weight[i];
  return w;
}

EndDGAlgebra end_dg_algebra(const Ring& ring, const std::vector<Poly>& fs, const std::vector<Poly>& coeffs) {
  if (fs.empty()) fail(ErrorCode::InvalidInput, "Poly(r) needs r >= 1");
  if (coeffs.size() != fs.size()) fail(ErrorCode::BadCoefficients, "one cofactor per generator required");
  EndDGAlgebra e;
  e.ring = ring;
  e.r = fs.size();
  e.fs = fs;
  e.coeffs = coeffs;
  e.sigma = Poly(ring);
  for (std::size_t i = 0; i < fs.size(); ++i) e.sigma += fs[i] * coeffs[i];
  e.D = PolyR(ring, e.r);
  for (std::size_t i = 0; i < e.r; ++i) {
    e.D += PolyR::T(ring, e.r, i).scaled(fs[i]);
    e.D += PolyR::theta(ring, e.r, i).scaled(coeffs[i]);
  }
  // Weights in doubled units.
  e.homogeneous = true;
  std::optional<long> ws = e.sigma.is_zero() ? std::optional<long>(0) : e.sigma.homogeneous_weight();
  if (!ws) e.homogeneous = false;
  for (std::size_t i = 0; i < e.r && e.homogeneous; ++i) {
    auto wf = fs[i].homogeneous_weight();
    if (!wf) {
      e.homogeneous = false;
      break;
    }
    if (!coeffs[i].is_zero()) {
      auto wc = coeffs[i].homogeneous_weight();
      if (!wc || *wc + *wf != *ws) {
        e.homogeneous = false;
        break;
      }
    }
    e.theta_weight.push_back(2 * *wf - *ws);
    e.t_weight.push_back(*ws - 2 * *wf);
  }
  if (e.homogeneous) {
    e.dweight = *ws;
  } else {
    e.theta_weight.assign(e.r, 0);
    e.t_weight.assign(e.r, 0);
  }
  return e;
}

EndDGAlgebra end_dg_algebra(const Stabilisation& s) { return end_dg_algebra(s.ring, s.fs, s.coeffs); }

namespace {

// Monomials of weighted degree ≤ w (homogeneous) or total degree < n (truncated).
std::vector<Monomial> monomials_upto_weight(const Ring& ring, long w) {
  std::vector<Monomial> out;
  for (long k = 0; k <= w; ++k)
    for (auto& m : monomials_of_weight(ring, k)) out.push_back(std::move(m));
  return out;
}

std::vector<Monomial> monomials_below_order(const Ring& ring, long n) {
  std::vector<Monomial> out;
  for (long k = 0; k <= n * (ring.nvars() ? *std::max_element(ring.weights().begin(), ring.weights().end()) : 1); ++k)
    for (auto& m : monomials_of_weight(ring, k))
      if (Ring::total_degree(m) < n) out.push_back(std::move(m));
  return out;
}

struct BasisKey {
  Monomial mono;
  Mask s, u;
  bool operator<(const BasisKey& o) const { return std::tie(mono, s, u) < std::tie(o.mono, o.s, o.u); }
};

struct Slice {
  std::vector<BasisKey> basis;
  std::map<BasisKey, std::size_t> index;
};

class SliceEngine {
 public:
  SliceEngine(const EndDGAlgebra& e, std::optional<long> order) : e_(e), order_(order) {
    if (!e.homogeneous && !order)
      fail(ErrorCode::NotHomogeneous, "f_i and σ_i are not weight-homogeneous; give an order bound");
  }

  bool truncated() const { return order_.has_value(); }
  long target(long w) const { return truncated() ? 0 : w + e_.dweight; }
  long source(long w) const { return truncated() ? 0 : w - e_.dweight; }

  long min_weight() const {
    if (truncated()) return 0;
    long lo = 0;
    for (Mask s : all_masks(e_.r))
      for (Mask u : all_masks(e_.r)) lo = std::min(lo, e_.weight(s, u));
    return lo;
  }

  const Slice& slice(int p, long w) {
    auto key = std::make_pair(p, w);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Slice sl;
    const auto masks = all_masks(e_.r);
    std::vector<std::tuple<Monomial, Mask, Mask>> items;
    for (Mask s : masks)
      for (Mask u : masks) {
        if ((std::popcount(s) + std::popcount(u)) % 2 != p) continue;
        if (truncated()) {
          for (auto& m : monomials_below_order(e_.ring, *order_)) items.emplace_back(m, s, u);
          continue;
        }
        const long rest = w - e_.weight(s, u);
        if (rest < 0 || rest % 2) continue;
        for (auto& m : monomials_of_weight(e_.ring, rest / 2)) items.emplace_back(m, s, u);
      }
    // x-monomial in ring order (descending), then θ-subset, then T-subset.
    std::stable_sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
      const int c = e_.ring.compare(std::get<0>(a), std::get<0>(b));
      if (c != 0) return c > 0;
      return key_less({std::get<1>(a), std::get<2>(a)}, {std::get<1>(b), std::get<2>(b)});
    });
    for (auto& [m, s, u] : items) {
      sl.index.emplace(BasisKey{m, s, u}, sl.basis.size());
      sl.basis.push_back({m, s, u});
    }
    return cache_.emplace(key, std::move(sl)).first->second;
  }

  PolyR element(int p, long w, const Vector& v) {
    const Slice& sl = slice(p, w);
    PolyR out(e_.ring, e_.r);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero())
        out += PolyR::basis(e_.ring, e_.r, sl.basis[k].s, sl.basis[k].u, Poly::monomial(e_.ring, sl.basis[k].mono, v[k]));
    return out;
  }

  PolyR truncate(const PolyR& a) const {
    if (!truncated()) return a;
    PolyR out(e_.ring, e_.r);
    for (const auto& [k, c] : a.terms()) out += PolyR::basis(e_.ring, e_.r, k.first, k.second, c.truncate_order(*order_));
    return out;
  }

  std::optional<Vector> coords(int p, long w, const PolyR& a) {
    const Slice& sl = slice(p, w);
    Vector v = zero_vector(e_.ring.field(), sl.basis.size());
    const PolyR t = truncate(a);
    for (const auto& [k, c] : t.terms())
      for (const auto& t : c.terms()) {
        auto it = sl.index.find(BasisKey{t.mono, k.first, k.second});
        if (it == sl.index.end()) return std::nullopt;
        v[it->second] += t.coef;
      }
    return v;
  }

  // δ from slice (p, w) to (1−p, target(w)), one column per source basis element.
  const Matrix& delta(int p, long w) {
    auto key = std::make_pair(p, w);
    if (auto it = dcache_.find(key); it != dcache_.end()) return it->second;
    const Slice& src = slice(p, w);
    const std::size_t rows = slice(1 - p, target(w)).basis.size();
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < src.basis.size(); ++k) {
      Vector unit = zero_vector(e_.ring.field(), src.basis.size());
      unit[k] = Scalar::one(e_.ring.field());
      auto c = coords(1 - p, target(w), e_.delta(element(p, w, unit)));
      if (!c) fail(ErrorCode::NotHomogeneous, "δ leaves its weight slice");
      cols.push_back(std::move(*c));
    }
    return dcache_.emplace(key, Matrix::from_columns(e_.ring.field(), cols, rows)).first->second;
  }

  std::vector<Vector> image(int p, long w) {
    const Matrix& m = delta(1 - p, source(w));
    std::vector<Vector> out;
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
    return out;
  }

 private:
  const EndDGAlgebra& e_;
  std::optional<long> order_;
  std::map<std::pair<int, long>, Slice> cache_;
  std::map<std::pair<int, long>, Matrix> dcache_;
};

void normalise_leading(Vector& v) {
  for (const auto& c : v)
    if (!c.is_zero()) {
      const Scalar inv = c.inverse();
      for (auto& x : v) x *= inv;
      return;
    }
}

// Weight of a nonzero element whose terms share one weight.
long element_weight(const EndDGAlgebra& e, const PolyR& z) {
  const auto& [k, c] = *z.terms().begin();
  return 2 * e.ring.weighted_degree(c.terms().front().mono) + e.weight(k.first, k.second);
}

// The classes living in slice (p, w), as (index into h.classes, coordinates).
std::vector<std::pair<std::size_t, Vector>> slice_reps(SliceEngine& eng, const EndCohomology& h, int p, long w) {
  std::vector<std::pair<std::size_t, Vector>> out;
  for (std::size_t k = 0; k < h.classes.size(); ++k)
    if (h.classes[k].parity == p && h.classes[k].weight == w) out.emplace_back(k, *eng.coords(p, w, h.classes[k].rep));
  return out;
}

std::optional<Vector> class_coords(const EndDGAlgebra& e, SliceEngine& eng, const EndCohomology& h, const PolyR& z0) {
  const Field F = e.ring.field();
  Vector out = zero_vector(F, h.classes.size());
  const PolyR z = eng.truncate(z0);
  if (z.is_zero()) return out;
  const auto par = z.parity();
  if (!par) return std::nullopt;
  const long w = eng.truncated() ? 0 : element_weight(e, z);
  if (w < h.min_weight || w > h.max_weight) return std::nullopt;
  const auto v = eng.coords(*par, w, z);
  if (!v) return std::nullopt;
  // Must be a cocycle.
  if (!is_zero_vector(eng.delta(*par, w).apply(*v))) return std::nullopt;
  const auto reps = slice_reps(eng, h, *par, w);
  std::vector<Vector> cols;
  for (const auto& [k, rv] : reps) cols.push_back(rv);
  for (auto& im : eng.image(*par, w)) cols.push_back(std::move(im));
  const auto sol = solve(Matrix::from_columns(F, cols, v->size()), *v);
  if (!sol) return std::nullopt;
  for (std::size_t j = 0; j < reps.size(); ++j) out[reps[j].first] = (*sol)[j];
  return out;
}

}  // namespace

bool verify_delta_squared(const EndDGAlgebra& e, long bound) {
  const auto masks = all_masks(e.r);
  for (Mask s : masks)
    for (Mask u : masks) {
      const long rest = e.homogeneous ? bound - e.weight(s, u) : bound;
      if (rest < 0) continue;
      const auto monos = e.homogeneous ? monomials_upto_weight(e.ring, rest / 2) : monomials_below_order(e.ring, bound + 1);
      for (const auto& m : monos) {
        const PolyR b = PolyR::basis(e.ring, e.r, s, u, Poly::monomial(e.ring, m, Scalar::one(e.ring.field())));
        if (!e.delta(e.delta(b)).is_zero()) return false;
      }
    }
  return true;
}

}  // namespace singlab

namespace singlab {

EndCohomology end_cohomology(const EndDGAlgebra& e, long weight_bound, std::optional<long> order_bound) {
  const std::optional<long> order = e.homogeneous ? std::nullopt : order_bound;
  SliceEngine eng(e, order);
  EndCohomology h;
  h.truncated_at = order;
  h.min_weight = eng.min_weight();
  h.max_weight = order ? 0 : weight_bound;
  const Field F = e.ring.field();
  for (long w = h.min_weight; w <= h.max_weight; ++w)
    for (int p = 0; p < 2; ++p) {
      const std::size_t dim = eng.slice(p, w).basis.size();
      if (dim == 0) {
        h.dims[{p, w}] = 0;
        continue;
      }
      const auto kernel = kernel_basis(eng.delta(p, w));
      const auto image = eng.image(p, w);
      const auto picked = independent_modulo(F, dim, image, kernel);
      h.dims[{p, w}] = picked.size();
      for (auto k : picked) {
        Vector v = kernel[k];
        normalise_leading(v);
        h.classes.push_back({p, w, eng.element(p, w, v)});
      }
    }
  for (std::size_t i = 0; i < h.classes.size(); ++i)
    for (std::size_t j = 0; j < h.classes.size(); ++j) {
      auto c = class_coords(e, eng, h, h.classes[i].rep * h.classes[j].rep);
      if (c) h.products[{i, j}] = std::move(*c);
    }
  return h;
}

std::optional<Vector> cohomology_class(const EndDGAlgebra& e, const EndCohomology& h, const PolyR& z) {
  SliceEngine eng(e, h.truncated_at);
  return class_coords(e, eng, h, z);
}

CliffordPresentation clifford_of_quadratic(const Poly& sigma) {
  const Ring& ring = sigma.ring();
  const std::size_t n = ring.nvars();
  if (sigma.is_zero() || n == 0) fail(ErrorCode::NotQuadratic, "σ must be a nonzero quadratic form");
  const Field F = ring.field();
  std::vector<std::vector<Scalar>> c(n, std::vector<Scalar>(n, Scalar::zero(F)));
  for (const auto& t : sigma.terms()) {
    if (Ring::total_degree(t.mono) != 2) fail(ErrorCode::NotQuadratic, sigma.to_string() + " is not a quadratic form");
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < n; ++j)
      for (int e = 0; e < t.mono[j]; ++e) idx.push_back(j);
    c[idx[0]][idx[1]] += t.coef;
  }
  CliffordPresentation out;
  out.dimension = std::size_t{1} << n;
  out.gram.assign(n, std::vector<Scalar>(n, Scalar::zero(F)));
  for (std::size_t i = 0; i < n; ++i) {
    Poly si(ring);
    PolyR g = PolyR::T(ring, n, i);
    for (std::size_t j = 0; j < n; ++j) {
      si += Poly::variable(ring, j).scaled(c[i][j]);
      g += -PolyR::theta(ring, n, j).scaled(c[i][j]);
      out.gram[i][j] = -(c[i][j] + c[j][i]);
    }
    out.coeffs.push_back(si);
    out.generators.push_back(g);
  }
  return out;
}

}  // namespace singlab
