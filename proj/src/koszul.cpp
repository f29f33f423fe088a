#include "singlab/koszul.hpp"

#include <algorithm>

namespace singlab {

std::vector<Subset> exterior_basis(std::size_t r, std::size_t j) {
  std::vector<Subset> out;
  Subset cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == j) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < r; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Subset> exterior_basis_all(std::size_t r) {
  std::vector<Subset> out;
  for (std::size_t j = 0; j <= r; ++j)
    for (auto& s : exterior_basis(r, j)) out.push_back(std::move(s));
  return out;
}

namespace {

std::size_t index_in(const std::vector<Subset>& basis, const Subset& s) {
  return static_cast<std::size_t>(std::find(basis.begin(), basis.end(), s) - basis.begin());
}

// Fills `m` (rows indexed by `tgt`, columns by `src`) with the contraction by fs.
void fill_contraction(PolyMatrix& m, const std::vector<Subset>& src, const std::vector<Subset>& tgt,
                      const std::vector<Poly>& fs, std::size_t row0 = 0, std::size_t col0 = 0) {
  for (std::size_t c = 0; c < src.size(); ++c) {
    const Subset& S = src[c];
    for (std::size_t k = 0; k < S.size(); ++k) {
      Subset T = S;
      T.erase(T.begin() + static_cast<long>(k));
      const std::size_t r = index_in(tgt, T);
      m.at(row0 + r, col0 + c) += k % 2 ? -fs[S[k]] : fs[S[k]];
    }
  }
}

// Fills `m` with left multiplication by Σ σ_i e_i.
void fill_wedge(PolyMatrix& m, const std::vector<Subset>& src, const std::vector<Subset>& tgt,
                const std::vector<Poly>& coeffs, std::size_t row0 = 0, std::size_t col0 = 0) {
  for (std::size_t c = 0; c < src.size(); ++c) {
    const Subset& S = src[c];
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (std::find(S.begin(), S.end(), i) != S.end() || coeffs[i].is_zero()) continue;
      Subset T = S;
      auto pos = std::lower_bound(T.begin(), T.end(), i);
      const long before = pos - T.begin();
      T.insert(pos, i);
      const std::size_t r = index_in(tgt, T);
      m.at(row0 + r, col0 + c) += before % 2 ? -coeffs[i] : coeffs[i];
    }
  }
}

}  // namespace

KoszulComplex koszul_complex(const Ring& ring, const std::vector<Poly>& fs) {
  if (fs.empty()) fail(ErrorCode::InvalidInput, "Koszul complex needs r >= 1");
  for (const auto& f : fs)
    if (!(f.ring() == ring)) fail(ErrorCode::RingMismatch, "Koszul sequence ring");
  KoszulComplex k{ring, fs, {}};
  k.complex.ring = ring;
  const std::size_t r = fs.size();
  std::vector<long> fw(r, 0);
  bool homogeneous = true;
  for (std::size_t i = 0; i < r; ++i) {
    auto w = fs[i].homogeneous_weight();
    if (w) fw[i] = *w;
    else if (!fs[i].is_zero()) homogeneous = false;
  }
  for (std::size_t j = 0; j <= r; ++j) {
    std::vector<long> w;
    for (const auto& S : exterior_basis(r, j)) {
      long s = 0;
      for (auto i : S) s += fw[i];
      w.push_back(homogeneous ? s : 0);
    }
    k.complex.set_module(-static_cast<int>(j), std::move(w));
  }
  for (std::size_t j = 1; j <= r; ++j) {
    const auto src = exterior_basis(r, j), tgt = exterior_basis(r, j - 1);
    PolyMatrix m(ring, tgt.size(), src.size());
    fill_contraction(m, src, tgt, fs);
    k.complex.set_differential(-static_cast<int>(j), std::move(m));
  }
  return k;
}

SigmaHomotopy sigma_homotopy(const KoszulComplex& k, const Poly& sigma, const std::vector<Poly>& coeffs) {
  if (coeffs.size() != k.fs.size()) fail(ErrorCode::BadCoefficients, "one cofactor per generator required");
  Poly sum(k.ring);
  for (std::size_t i = 0; i < coeffs.size(); ++i) sum += coeffs[i] * k.fs[i];
  if (!(sum == sigma))
    fail(ErrorCode::BadCoefficients, "Σ σ_i f_i = " + sum.to_string() + " differs from σ = " + sigma.to_string());
  SigmaHomotopy s{k, sigma, coeffs, {}};
  const std::size_t r = k.fs.size();
  for (std::size_t j = 0; j < r; ++j) {
    const auto src = exterior_basis(r, j), tgt = exterior_basis(r, j + 1);
    PolyMatrix m(k.ring, tgt.size(), src.size());
    fill_wedge(m, src, tgt, coeffs);
    s.h[-static_cast<int>(j)] = std::move(m);
  }
  return s;
}

bool verify_null_homotopy(const SigmaHomotopy& s) {
  const FreeComplex& K = s.koszul.complex;
  const int r = static_cast<int>(s.koszul.fs.size());
  for (int i = -r; i <= 0; ++i) {
    const std::size_t n = K.rank(i);
    PolyMatrix acc(s.koszul.ring, n, n);
    // d^{i−1} h^i : K^i → K^{i−1} → K^i, and h^{i+1} d^i : K^i → K^{i+1} → K^i.
    if (i > -r) acc = acc + K.differential(i - 1) * s.h.at(i);
    if (i < 0) acc = acc + s.h.at(i + 1) * K.differential(i);
    if (!(acc == PolyMatrix::scalar(s.sigma, n))) return false;
  }
  return true;
}

bool verify_h_squared_zero(const SigmaHomotopy& s) {
  const int r = static_cast<int>(s.koszul.fs.size());
  for (int i = 0; i > -r + 1; --i)
    if (!(s.h.at(i - 1) * s.h.at(i)).is_zero()) return false;
  return true;
}

PolyMatrix contraction_operator(const Ring& ring, const std::vector<Poly>& fs) {
  const auto basis = exterior_basis_all(fs.size());
  PolyMatrix m(ring, basis.size(), basis.size());
  fill_contraction(m, basis, basis, fs);
  return m;
}

PolyMatrix wedge_operator(const Ring& ring, const std::vector<Poly>& coeffs) {
  const auto basis = exterior_basis_all(coeffs.size());
  PolyMatrix m(ring, basis.size(), basis.size());
  fill_wedge(m, basis, basis, coeffs);
  return m;
}

}  // namespace singlab
