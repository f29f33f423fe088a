#include "singlab/complex.hpp"

#include <algorithm>
#include <set>

namespace singlab {

namespace {

int sign_of(int n) { return (n % 2 == 0) ? 1 : -1; }

int mod2(int i) { return ((i % 2) + 2) % 2; }

Scalar signed_one(Field f, int sign) { return Scalar(f, static_cast<long>(sign)); }

PolyMatrix get_or_zero(const std::map<int, PolyMatrix>& maps, int i, const Ring& ring, std::size_t rows,
                       std::size_t cols) {
  auto it = maps.find(i);
  if (it == maps.end()) return PolyMatrix(ring, rows, cols);
  return it->second;
}

void check_compatible(const FreeComplex& m, const FreeComplex& n) {
  if (!(m.ring == n.ring)) fail(ErrorCode::RingMismatch, "complexes over different rings");
  if (m.grading != n.grading) fail(ErrorCode::InvalidInput, "mixing Z and Z/2 graded complexes");
  if (m.dweight != n.dweight || m.weight_scale != n.weight_scale)
    fail(ErrorCode::InvalidInput, "complexes use different weight conventions");
}

std::optional<GroebnerBasis> common_quotient(const FreeComplex& m, const FreeComplex& n) {
  if (m.quotient && n.quotient) {
    std::vector<std::string> a, b;
    for (const auto& g : m.quotient->gens) a.push_back(g.to_string());
    for (const auto& g : n.quotient->gens) b.push_back(g.to_string());
    if (a != b) fail(ErrorCode::RingMismatch, "complexes over different quotient rings");
  }
  return n.quotient ? n.quotient : m.quotient;
}

}  // namespace

// ----------------------------------------------------------------------------- FreeComplex

std::size_t FreeComplex::rank(int i) const {
  auto it = weights.find(i);
  return it == weights.end() ? 0 : it->second.size();
}

std::vector<int> FreeComplex::degrees() const {
  std::vector<int> out;
  for (const auto& [i, w] : weights) out.push_back(i);
  return out;
}

PolyMatrix FreeComplex::differential(int i) const {
  return get_or_zero(d, i, ring, rank(next(i)), rank(i));
}

void FreeComplex::set_module(int i, std::vector<long> gen_weights) {
  if (grading == Grading::Z2 && (i < 0 || i > 1)) fail(ErrorCode::InvalidInput, "Z/2 degrees are 0 and 1");
  weights[i] = std::move(gen_weights);
}

void FreeComplex::set_differential(int i, PolyMatrix m) {
  if (m.rows() != rank(next(i)) || m.cols() != rank(i))
    fail(ErrorCode::InvalidInput, "differential in degree " + std::to_string(i) + " has the wrong shape");
  if (m.rows() * m.cols() > 0 && !(m.ring() == ring)) fail(ErrorCode::RingMismatch, "differential ring");
  d[i] = std::move(m);
}

Poly FreeComplex::reduce(const Poly& p) const { return quotient ? normal_form(p, *quotient) : p; }

PolyMatrix FreeComplex::reduce(const PolyMatrix& m) const { return quotient ? m.reduced(*quotient) : m; }

// ----------------------------------------------------------------------------- checks

DSquareReport check_d_squared(const FreeComplex& c) {
  for (int i : c.degrees()) {
    const int j = c.next(i);
    PolyMatrix sq = c.differential(j) * c.differential(i);
    if (c.curvature && c.grading == Grading::Z2) sq = sq - PolyMatrix::scalar(*c.curvature, c.rank(i));
    sq = c.reduce(sq);
    for (std::size_t r = 0; r < sq.rows(); ++r)
      for (std::size_t k = 0; k < sq.cols(); ++k)
        if (!sq.at(r, k).is_zero()) return {false, i, r, k};
  }
  return {};
}

void check_homogeneous(const FreeComplex& c) {
  for (const auto& [i, m] : c.d) {
    if (m.rows() == 0 || m.cols() == 0) continue;
    const auto& src = c.weights.at(i);
    const auto& tgt = c.weights.at(c.next(i));
    for (std::size_t t = 0; t < m.rows(); ++t)
      for (std::size_t s = 0; s < m.cols(); ++s)
        for (const auto& term : m.at(t, s).terms()) {
          const long need = src[s] - tgt[t] + c.dweight;
          if (c.weight_scale * c.ring.weighted_degree(term.mono) != need)
            fail(ErrorCode::NotHomogeneous, "entry (" + std::to_string(t) + "," + std::to_string(s) + ") of d^" +
                                                std::to_string(i) + " = " + m.at(t, s).to_string() +
                                                " is not of weight " + std::to_string(need));
        }
  }
}

// ----------------------------------------------------------------------------- shift

FreeComplex shift(const FreeComplex& c, int n) {
  FreeComplex out = c;
  out.weights.clear();
  out.d.clear();
  const Scalar s = signed_one(c.ring.field(), sign_of(n));
  for (const auto& [i, w] : c.weights) out.weights[c.grading == Grading::Z2 ? mod2(i - n) : i - n] = w;
  for (const auto& [i, m] : c.d) out.d[c.grading == Grading::Z2 ? mod2(i - n) : i - n] = m.scaled(s);
  return out;
}

// ----------------------------------------------------------------------------- chain maps

bool is_chain_map(const FreeComplex& m, const FreeComplex& n, const ChainMap& f) {
  const int deg = f.degree;
  auto tgt = [&](int i) { return n.grading == Grading::Z2 ? mod2(i + deg) : i + deg; };
  auto fmap = [&](int i) { return get_or_zero(f.f, i, m.ring, n.rank(tgt(i)), m.rank(i)); };
  std::set<int> degs;
  for (int i : m.degrees()) degs.insert(i);
  for (int j : n.degrees()) degs.insert(n.grading == Grading::Z2 ? mod2(j - deg) : j - deg);
  const Scalar sg = signed_one(m.ring.field(), sign_of(deg));
  for (int i : degs) {
    const PolyMatrix lhs = n.differential(tgt(i)) * fmap(i);
    const PolyMatrix rhs = (fmap(m.next(i)) * m.differential(i)).scaled(sg);
    if (!n.reduce(lhs - rhs).is_zero()) return false;
  }
  return true;
}

ChainMap identity_map(const FreeComplex& c) {
  ChainMap f;
  for (int i : c.degrees()) f.f[i] = PolyMatrix::identity(c.ring, c.rank(i));
  return f;
}

ChainMap zero_map(const FreeComplex& m, const FreeComplex& n, int degree) {
  ChainMap f;
  f.degree = degree;
  for (int i : m.degrees()) {
    const int j = m.grading == Grading::Z2 ? mod2(i + degree) : i + degree;
    f.f[i] = PolyMatrix(m.ring, n.rank(j), m.rank(i));
  }
  return f;
}

// ----------------------------------------------------------------------------- cone

FreeComplex cone(const FreeComplex& m, const FreeComplex& n, const ChainMap& f) {
  if (f.degree != 0) fail(ErrorCode::DegreeMismatch, "cone needs a degree 0 map");
  check_compatible(m, n);
  FreeComplex c;
  c.ring = n.ring;
  c.grading = n.grading;
  c.dweight = n.dweight;
  c.weight_scale = n.weight_scale;
  c.quotient = common_quotient(m, n);
  auto up = [&](int i) { return m.next(i); };  // M^{i+1}
  std::set<int> degs;
  for (int i : m.degrees()) degs.insert(m.prev(i));
  for (int i : n.degrees()) degs.insert(i);
  for (int i : degs) {
    std::vector<long> w;
    for (long g : m.weights.count(up(i)) ? m.weights.at(up(i)) : std::vector<long>{}) w.push_back(g - m.dweight);
    for (long g : n.weights.count(i) ? n.weights.at(i) : std::vector<long>{}) w.push_back(g);
    c.set_module(i, std::move(w));
  }
  const Scalar minus = signed_one(n.ring.field(), -1);
  for (int i : degs) {
    const int j = c.next(i);
    const std::size_t mi = m.rank(up(i)), ni = n.rank(i), mj = m.rank(up(j)), nj = n.rank(j);
    PolyMatrix D(c.ring, mj + nj, mi + ni);
    D.set_block(0, 0, m.differential(up(i)));
    D.set_block(mj, 0, get_or_zero(f.f, up(i), c.ring, nj, mi));
    D.set_block(mj, mi, n.differential(i).scaled(minus));
    c.d[i] = std::move(D);
  }
  return c;
}

// ----------------------------------------------------------------------------- hom

namespace {

struct HomLayout {
  // For each hom degree: list of (source degree i, target degree j, offset).
  struct Piece {
    int i, j;
    std::size_t offset;
  };
  std::map<int, std::vector<Piece>> pieces;
  std::map<int, std::size_t> size;
};

HomLayout hom_layout(const FreeComplex& m, const FreeComplex& n) {
  HomLayout L;
  std::map<int, std::vector<std::pair<int, int>>> by_deg;
  for (int i : m.degrees())
    for (int j : n.degrees()) {
      const int deg = m.grading == Grading::Z2 ? mod2(j - i) : j - i;
      by_deg[deg].emplace_back(i, j);
    }
  if (m.grading == Grading::Z2) {
    by_deg[0];
    by_deg[1];
  }
  for (auto& [deg, list] : by_deg) {
    std::sort(list.begin(), list.end());
    std::size_t off = 0;
    for (auto [i, j] : list) {
      L.pieces[deg].push_back({i, j, off});
      off += n.rank(j) * m.rank(i);
    }
    L.size[deg] = off;
  }
  return L;
}

const HomLayout::Piece* find_piece(const HomLayout& L, int deg, int i) {
  auto it = L.pieces.find(deg);
  if (it == L.pieces.end()) return nullptr;
  for (const auto& p : it->second)
    if (p.i == i) return &p;
  return nullptr;
}

}  // namespace

FreeComplex hom_complex(const FreeComplex& m, const FreeComplex& n) {
  check_compatible(m, n);
  const HomLayout L = hom_layout(m, n);
  FreeComplex h;
  h.ring = n.ring;
  h.grading = n.grading;
  h.dweight = n.dweight;
  h.weight_scale = n.weight_scale;
  h.quotient = common_quotient(m, n);
  if (m.curvature || n.curvature) {
    Poly c = (n.curvature ? *n.curvature : Poly(n.ring)) - (m.curvature ? *m.curvature : Poly(n.ring));
    if (!c.is_zero()) h.curvature = c;
  }
  for (const auto& [deg, list] : L.pieces) {
    std::vector<long> w;
    for (const auto& p : list) {
      const auto& gn = n.weights.at(p.j);
      const auto& gm = m.weights.at(p.i);
      for (std::size_t t = 0; t < gn.size(); ++t)
        for (std::size_t s = 0; s < gm.size(); ++s) w.push_back(gn[t] - gm[s]);
    }
    h.set_module(deg, std::move(w));
  }
  const Field F = n.ring.field();
  for (const auto& [deg, list] : L.pieces) {
    const int ndeg = h.next(deg);
    PolyMatrix D(h.ring, L.size.count(ndeg) ? L.size.at(ndeg) : 0, L.size.at(deg));
    const Scalar sg = signed_one(F, -sign_of(deg));
    for (const auto& p : list) {
      const std::size_t rm = m.rank(p.i), rn = n.rank(p.j);
      // d_N ∘ E_ts lands in Hom(M^i, N^{j+1}).
      const HomLayout::Piece* a = find_piece(L, ndeg, p.i);
      const int jn = n.next(p.j);
      // E_ts ∘ d_M lands in Hom(M^{i−1}, N^j).
      const HomLayout::Piece* b = find_piece(L, ndeg, m.prev(p.i));
      const PolyMatrix dN = n.differential(p.j);
      const int ip = m.prev(p.i);
      const PolyMatrix dM = m.differential(ip);
      for (std::size_t t = 0; t < rn; ++t)
        for (std::size_t s = 0; s < rm; ++s) {
          const std::size_t col = p.offset + t * rm + s;
          if (a && n.weights.count(jn)) {
            for (std::size_t u = 0; u < n.rank(jn); ++u)
              if (!dN.at(u, t).is_zero()) D.at(a->offset + u * rm + s, col) += dN.at(u, t);
          }
          if (b && m.weights.count(ip) && (b->j == p.j)) {
            const std::size_t rmp = m.rank(ip);
            for (std::size_t v = 0; v < rmp; ++v)
              if (!dM.at(s, v).is_zero()) D.at(b->offset + t * rmp + v, col) += dM.at(s, v).scaled(sg);
          }
        }
    }
    h.d[deg] = std::move(D);
  }
  return h;
}

std::vector<Poly> hom_coordinates(const FreeComplex& m, const FreeComplex& n, const ChainMap& f) {
  const HomLayout L = hom_layout(m, n);
  const int deg = m.grading == Grading::Z2 ? mod2(f.degree) : f.degree;
  std::vector<Poly> out(L.size.count(deg) ? L.size.at(deg) : 0, Poly(n.ring));
  if (!L.pieces.count(deg)) return out;
  for (const auto& p : L.pieces.at(deg)) {
    auto it = f.f.find(p.i);
    if (it == f.f.end()) continue;
    const std::size_t rm = m.rank(p.i);
    for (std::size_t t = 0; t < n.rank(p.j); ++t)
      for (std::size_t s = 0; s < rm; ++s) out[p.offset + t * rm + s] = it->second.at(t, s);
  }
  return out;
}

ChainMap hom_element(const FreeComplex& m, const FreeComplex& n, int degree, const std::vector<Poly>& coords) {
  const HomLayout L = hom_layout(m, n);
  const int deg = m.grading == Grading::Z2 ? mod2(degree) : degree;
  ChainMap f = zero_map(m, n, degree);
  if (!L.pieces.count(deg)) return f;
  for (const auto& p : L.pieces.at(deg)) {
    const std::size_t rm = m.rank(p.i);
    PolyMatrix& target = f.f[p.i];
    for (std::size_t t = 0; t < n.rank(p.j); ++t)
      for (std::size_t s = 0; s < rm; ++s) target.at(t, s) = coords[p.offset + t * rm + s];
  }
  return f;
}

// ----------------------------------------------------------------------------- tensor

FreeComplex tensor(const FreeComplex& m, const FreeComplex& n) {
  check_compatible(m, n);
  FreeComplex c;
  c.ring = n.ring;
  c.grading = n.grading;
  c.dweight = n.dweight;
  c.weight_scale = n.weight_scale;
  c.quotient = common_quotient(m, n);
  if (m.curvature || n.curvature) {
    Poly k = (n.curvature ? *n.curvature : Poly(n.ring)) + (m.curvature ? *m.curvature : Poly(n.ring));
    if (!k.is_zero()) c.curvature = k;
  }
  const bool z2 = c.grading == Grading::Z2;
  auto total = [&](int p, int q) { return z2 ? mod2(p + q) : p + q; };
  struct Piece {
    int p, q;
    std::size_t offset;
  };
  std::map<int, std::vector<Piece>> pieces;
  std::map<int, std::size_t> sizes;
  for (int p : m.degrees())
    for (int q : n.degrees()) pieces[total(p, q)].push_back({p, q, 0});
  if (z2) {
    pieces[0];
    pieces[1];
  }
  for (auto& [deg, list] : pieces) {
    std::sort(list.begin(), list.end(), [](const Piece& a, const Piece& b) { return a.p < b.p; });
    std::size_t off = 0;
    std::vector<long> w;
    for (auto& pc : list) {
      pc.offset = off;
      off += m.rank(pc.p) * n.rank(pc.q);
      for (long a : m.weights.at(pc.p))
        for (long b : n.weights.at(pc.q)) w.push_back(a + b);
    }
    sizes[deg] = off;
    c.set_module(deg, std::move(w));
  }
  auto offset_of = [&](int p, int q) -> std::optional<std::size_t> {
    auto it = pieces.find(total(p, q));
    if (it == pieces.end()) return std::nullopt;
    for (const auto& pc : it->second)
      if (pc.p == p && pc.q == q) return pc.offset;
    return std::nullopt;
  };
  for (const auto& [deg, list] : pieces) {
    const int nd = c.next(deg);
    PolyMatrix D(c.ring, sizes.count(nd) ? sizes.at(nd) : 0, sizes.at(deg));
    for (const auto& pc : list) {
      const int p1 = m.next(pc.p), q1 = n.next(pc.q);
      if (m.weights.count(p1)) {
        if (auto off = offset_of(p1, pc.q))
          D.set_block(*off, pc.offset, kronecker(m.differential(pc.p), PolyMatrix::identity(c.ring, n.rank(pc.q))));
      }
      if (n.weights.count(q1)) {
        if (auto off = offset_of(pc.p, q1)) {
          PolyMatrix blk = kronecker(PolyMatrix::identity(c.ring, m.rank(pc.p)), n.differential(pc.q));
          if (pc.p % 2) blk = -blk;
          // Blocks may coincide for Z/2 when both land on the same piece; accumulate.
          PolyMatrix cur = D.block(*off, pc.offset, blk.rows(), blk.cols());
          D.set_block(*off, pc.offset, cur + blk);
        }
      }
    }
    c.d[deg] = std::move(D);
  }
  return c;
}

// ----------------------------------------------------------------------------- slices

long min_weight(const FreeComplex& c) {
  bool any = false;
  long best = 0;
  for (const auto& [i, ws] : c.weights)
    for (long w : ws) {
      if (!any || w < best) best = w;
      any = true;
    }
  return best;
}

std::vector<std::pair<std::size_t, Monomial>> slice_basis(const FreeComplex& c, int i, long w) {
  std::vector<std::pair<std::size_t, Monomial>> out;
  auto it = c.weights.find(i);
  if (it == c.weights.end()) return out;
  for (std::size_t j = 0; j < it->second.size(); ++j) {
    const long rest = w - it->second[j];
    if (rest < 0 || rest % c.weight_scale != 0) continue;
    const auto monos = c.quotient ? standard_monomials_of_weight(*c.quotient, rest / c.weight_scale)
                                  : monomials_of_weight(c.ring, rest / c.weight_scale);
    for (const auto& mo : monos) out.emplace_back(j, mo);
  }
  return out;
}

Matrix slice_differential(const FreeComplex& c, int i, long w) {
  const auto src = slice_basis(c, i, w);
  const int j = c.next(i);
  const auto tgt = slice_basis(c, j, w + c.dweight);
  const Field F = c.ring.field();
  Matrix out(F, tgt.size(), src.size());
  if (src.empty() || tgt.empty()) return out;
  std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
  for (std::size_t k = 0; k < tgt.size(); ++k) index.emplace(tgt[k], k);
  const PolyMatrix D = c.differential(i);
  const Scalar one = Scalar::one(F);
  for (std::size_t col = 0; col < src.size(); ++col) {
    const auto& [s, mono] = src[col];
    for (std::size_t t = 0; t < D.rows(); ++t) {
      const Poly& a = D.at(t, s);
      if (a.is_zero()) continue;
      const Poly img = c.reduce(a.times_monomial(mono, one));
      for (const auto& term : img.terms()) {
        auto it = index.find({t, term.mono});
        if (it == index.end())
          fail(ErrorCode::NotHomogeneous, "d^" + std::to_string(i) + " entry " + a.to_string() + " leaves its weight slice");
        out.add_to(it->second, col, term.coef);
      }
    }
  }
  return out;
}

std::vector<Poly> slice_element(const FreeComplex& c, int i, long w, const Vector& v) {
  const auto basis = slice_basis(c, i, w);
  std::vector<Poly> out(c.rank(i), Poly(c.ring));
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!v[k].is_zero()) out[basis[k].first] += Poly::monomial(c.ring, basis[k].second, v[k]);
  return out;
}

std::vector<Poly> apply_differential(const FreeComplex& c, int i, const std::vector<Poly>& x) {
  const PolyMatrix D = c.differential(i);
  std::vector<Poly> out(D.rows(), Poly(c.ring));
  for (std::size_t t = 0; t < D.rows(); ++t) {
    for (std::size_t s = 0; s < D.cols(); ++s)
      if (!D.at(t, s).is_zero() && !x[s].is_zero()) out[t] += D.at(t, s) * x[s];
    out[t] = c.reduce(out[t]);
  }
  return out;
}

SliceComplex slice(const FreeComplex& c, long weight) {
  if (c.grading != Grading::Z) fail(ErrorCode::InvalidInput, "slices are defined for Z-graded complexes");
  SliceComplex s;
  s.weight = weight;
  for (int i : c.degrees()) {
    const long w = weight + static_cast<long>(i) * c.dweight;
    s.dims[i] = slice_basis(c, i, w).size();
    if (c.weights.count(i + 1)) s.d[i] = slice_differential(c, i, w);
  }
  return s;
}

CohomologyTable slice_cohomology(const FreeComplex& c, long weight_bound) {
  if (c.curvature) fail(ErrorCode::InvalidInput, "cohomology of a curved object is undefined");
  check_homogeneous(c);
  CohomologyTable table;
  std::map<std::pair<int, long>, std::size_t> rank_cache;
  auto rank_at = [&](int i, long w) -> std::size_t {
    if (!c.weights.count(i) || !c.weights.count(c.next(i))) return 0;
    auto key = std::make_pair(i, w);
    auto it = rank_cache.find(key);
    if (it != rank_cache.end()) return it->second;
    const std::size_t r = rank(slice_differential(c, i, w));
    rank_cache.emplace(key, r);
    return r;
  };
  const long lo = min_weight(c);
  for (int i : c.degrees())
    for (long w = lo; w <= weight_bound; ++w) {
      const std::size_t dim = slice_basis(c, i, w).size();
      const std::size_t out_rank = rank_at(i, w);
      const int p = c.prev(i);
      const std::size_t in_rank = (c.weights.count(p) && c.next(p) == i) ? rank_at(p, w - c.dweight) : 0;
      table[{i, w}] = dim - out_rank - in_rank;
    }
  return table;
}

}  // namespace singlab
