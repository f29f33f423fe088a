#include "singlab/koszuldual.hpp"

#include <algorithm>
#include <functional>

namespace singlab {

namespace {

int sign_of(long e) { return e % 2 == 0 ? 1 : -1; }

// Basis indices of Ā, after checking that they span a dg ideal complementary to k·1.
std::vector<std::size_t> augmentation_letters(const CurvedAlgebra& a) {
  if (a.unit == CurvedAlgebra::npos) fail(ErrorCode::NotAugmented, "augmentation: the unit must be a basis element");
  if (a.grading != Grading::Z) fail(ErrorCode::InvalidInput, "bar construction needs a Z-graded algebra");
  if (a.has_curvature()) fail(ErrorCode::NotAugmented, "augmentation: curved algebras are not augmented");
  std::vector<std::size_t> letters;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (i != a.unit) letters.push_back(i);
  for (std::size_t i : letters) {
    if (!a.d.at(a.unit, i).is_zero())
      fail(ErrorCode::NotAugmented, "augmentation: d(" + a.names[i] + ") has a unit component");
    for (std::size_t j : letters)
      if (!a.mult[i][j][a.unit].is_zero())
        fail(ErrorCode::NotAugmented, "augmentation: " + a.names[i] + "*" + a.names[j] + " has a unit component");
  }
  if (!is_zero_vector(a.differential(a.basis_vector(a.unit))))
    fail(ErrorCode::NotAugmented, "augmentation: d(1) must vanish");
  return letters;
}

// All words over `letters` of length n, lexicographic in letter position.
std::vector<Word> words_of_length(const std::vector<std::size_t>& letters, std::size_t n) {
  std::vector<Word> out;
  Word cur(n);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t l : letters) {
      cur[k] = l;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

int shifted_degree(const CurvedAlgebra& a, std::size_t i) { return a.degrees[i] - 1; }

int bar_degree(const CurvedAlgebra& a, const Word& w) {
  int d = 0;
  for (std::size_t i : w) d += shifted_degree(a, i);
  return d;
}

// d_I(w) and d_E(w) as (word, coefficient) lists.
void bar_terms(const CurvedAlgebra& a, const std::vector<std::size_t>& letters, const Word& w,
               const std::function<void(const Word&, const Scalar&)>& internal,
               const std::function<void(const Word&, const Scalar&)>& external) {
  const Field f = a.field;
  int before = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int outer = sign_of(before);
    for (std::size_t k : letters) {
      const Scalar c = a.d.at(k, w[i]);
      if (c.is_zero()) continue;
      Word u = w;
      u[i] = k;
      internal(u, c * Scalar(f, -outer));
    }
    if (i + 1 < w.size()) {
      const int inner = sign_of(shifted_degree(a, w[i]));
      const Vector& prod = a.mult[w[i]][w[i + 1]];
      for (std::size_t k : letters) {
        if (prod[k].is_zero()) continue;
        Word u(w.begin(), w.begin() + static_cast<long>(i));
        u.push_back(k);
        u.insert(u.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        external(u, prod[k] * Scalar(f, outer * inner));
      }
    }
    before += shifted_degree(a, w[i]);
  }
}

// Block of a square sparse matrix between two index subsets.
Matrix block_of(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  std::map<std::size_t, std::size_t> rpos, cpos;
  for (std::size_t i = 0; i < rows.size(); ++i) rpos[rows[i]] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cpos[cols[j]] = j;
  Matrix out(m.field(), rows.size(), cols.size());
  for (std::size_t r : rows)
    for (const auto& e : m.row(r)) {
      auto it = cpos.find(e.col);
      if (it != cpos.end()) out.set(rpos[r], it->second, e.value);
    }
  return out;
}

// Coordinates of z over reps modulo the column space of `image`.
Vector class_coordinates(Field f, const std::vector<Vector>& reps, const std::vector<Vector>& image, const Vector& z) {
  if (reps.empty()) return {};
  std::vector<Vector> cols = reps;
  cols.insert(cols.end(), image.begin(), image.end());
  const auto x = solve(Matrix::from_columns(f, cols, z.size()), z);
  if (!x) fail(ErrorCode::InvalidInput, "koszul dual: product is not a cocycle");
  return Vector(x->begin(), x->begin() + static_cast<long>(reps.size()));
}

}  // namespace

std::vector<BarPiece> bar(const CurvedAlgebra& a, int max_length) {
  if (max_length < 1) fail(ErrorCode::InvalidInput, "bar: word length bound must be at least 1");
  const auto letters = augmentation_letters(a);
  const Field f = a.field;
  std::vector<BarPiece> pieces;
  std::vector<std::map<Word, std::size_t>> index;
  for (int n = 0; n <= max_length; ++n) {
    BarPiece p;
    p.length = static_cast<std::size_t>(n);
    p.words = words_of_length(letters, p.length);
    std::map<Word, std::size_t> idx;
    for (std::size_t k = 0; k < p.words.size(); ++k) {
      idx.emplace(p.words[k], k);
      p.degrees.push_back(bar_degree(a, p.words[k]));
    }
    index.push_back(std::move(idx));
    pieces.push_back(std::move(p));
  }
  for (int n = 0; n <= max_length; ++n) {
    BarPiece& p = pieces[n];
    p.internal = Matrix(f, p.words.size(), p.words.size());
    p.external = Matrix(f, n == 0 ? 0 : pieces[n - 1].words.size(), p.words.size());
    for (std::size_t c = 0; c < p.words.size(); ++c)
      bar_terms(
          a, letters, p.words[c], [&](const Word& u, const Scalar& s) { p.internal.add_to(index[n].at(u), c, s); },
          [&](const Word& u, const Scalar& s) { p.external.add_to(index[n - 1].at(u), c, s); });
  }
  return pieces;
}

bool bar_d_squared(const std::vector<BarPiece>& pieces) {
  for (std::size_t n = 0; n < pieces.size(); ++n) {
    if (!(pieces[n].internal * pieces[n].internal).is_zero()) return false;
    if (n >= 1) {
      const Matrix mixed = pieces[n].external * pieces[n].internal + pieces[n - 1].internal * pieces[n].external;
      if (!mixed.is_zero()) return false;
    }
    if (n >= 2 && !(pieces[n - 1].external * pieces[n].external).is_zero()) return false;
  }
  return true;
}

Vector KoszulDualResult::product(int p, const Vector& x, int q, const Vector& y) const {
  const std::size_t n = dims.count(p + q) ? dims.at(p + q) : 0;
  if (!dims.count(p + q)) fail(ErrorCode::WindowExceedsBound, "koszul dual: product leaves the window");
  const Field f = x.empty() ? (y.empty() ? Field::rationals() : y[0].field()) : x[0].field();
  Vector out = zero_vector(f, n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      const Vector& c = products.at({p, i, q, j});
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * c[k];
    }
  }
  return out;
}

std::vector<Vector> KoszulDualResult::powers(int p, const Vector& x) const {
  std::vector<Vector> out{x};
  if (p <= 0) return out;
  const int top = dims.empty() ? 0 : dims.rbegin()->first;
  for (int k = 2; k * p <= top; ++k) out.push_back(product((k - 1) * p, out.back(), p, x));
  return out;
}

KoszulDualResult koszul_dual_cohomology(const CurvedAlgebra& a, int max_length, int window_max) {
  if (window_max < 0) fail(ErrorCode::InvalidInput, "koszul dual: window must be nonnegative");
  if (window_max >= max_length - 1)
    fail(ErrorCode::WindowExceedsBound, "koszul dual: window " + std::to_string(window_max) +
                                            " needs word length bound > " + std::to_string(window_max + 1));
  const auto pieces = bar(a, max_length);
  const Field f = a.field;

  // Global numbering of all words, and the total differential.
  std::vector<Word> all;
  std::vector<int> deg;
  std::map<Word, std::size_t> global;
  std::vector<std::size_t> offset;
  for (const auto& p : pieces) {
    offset.push_back(all.size());
    for (std::size_t k = 0; k < p.words.size(); ++k) {
      global.emplace(p.words[k], all.size());
      all.push_back(p.words[k]);
      deg.push_back(p.degrees[k]);
    }
  }
  Matrix d(f, all.size(), all.size());
  for (std::size_t n = 0; n < pieces.size(); ++n) {
    d.set_block(offset[n], offset[n], pieces[n].internal);
    if (n >= 1) d.set_block(offset[n - 1], offset[n], pieces[n].external);
  }
  std::map<int, std::vector<std::size_t>> by_degree;  // keyed by dual degree p = −bar degree
  for (std::size_t i = 0; i < all.size(); ++i) by_degree[-deg[i]].push_back(i);
  auto members = [&](int p) { return by_degree.count(p) ? by_degree.at(p) : std::vector<std::size_t>{}; };
  // δ_p : C^p → C^{p+1} is the transpose of d from bar degree −p−1 to −p.
  auto delta = [&](int p) { return block_of(d, members(p), members(p + 1)).transpose(); };

  KoszulDualResult res;
  std::map<int, std::vector<Vector>> images;
  for (int p = 0; p <= window_max; ++p) {
    const auto mem = members(p);
    for (std::size_t i : mem) res.words[p].push_back(all[i]);
    const Matrix out = delta(p);
    const Matrix in = delta(p - 1);
    const auto ker = mem.empty() ? std::vector<Vector>{} : kernel_basis(out);
    std::vector<Vector> img;
    for (std::size_t c = 0; c < in.cols(); ++c) {
      Vector v = in.column(c);
      if (!is_zero_vector(v)) img.push_back(std::move(v));
    }
    for (std::size_t k : independent_modulo(f, mem.size(), img, ker)) res.representatives[p].push_back(ker[k]);
    res.dims[p] = res.representatives[p].size();
    images[p] = std::move(img);
  }

  // Convolution products on representatives.
  std::map<int, std::map<Word, std::size_t>> local;
  for (const auto& [p, ws] : res.words)
    for (std::size_t k = 0; k < ws.size(); ++k) local[p].emplace(ws[k], k);
  for (int p = 0; p <= window_max; ++p)
    for (int q = 0; p + q <= window_max; ++q)
      for (std::size_t i = 0; i < res.dims[p]; ++i)
        for (std::size_t j = 0; j < res.dims[q]; ++j) {
          const Vector& fi = res.representatives[p][i];
          const Vector& gj = res.representatives[q][j];
          Vector z = zero_vector(f, res.words[p + q].size());
          const Scalar sign(f, sign_of(static_cast<long>(p) * q));
          for (std::size_t w = 0; w < res.words[p + q].size(); ++w) {
            const Word& word = res.words[p + q][w];
            for (std::size_t cut = 0; cut <= word.size(); ++cut) {
              const Word w1(word.begin(), word.begin() + static_cast<long>(cut));
              const Word w2(word.begin() + static_cast<long>(cut), word.end());
              const auto i1 = local[p].find(w1);
              const auto i2 = local[q].find(w2);
              if (i1 == local[p].end() || i2 == local[q].end()) continue;
              z[w] += sign * fi[i1->second] * gj[i2->second];
            }
          }
          res.products[{p, i, q, j}] = class_coordinates(f, res.representatives[p + q], images[p + q], z);
        }
  return res;
}

namespace {

using Tensor2 = std::map<std::pair<std::size_t, std::size_t>, Scalar>;
using Tensor3 = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar>;

void add(Tensor2& t, std::size_t i, std::size_t j, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t.emplace(std::pair{i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

void add(Tensor3& t, std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t.emplace(std::tuple{i, j, k}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

Tensor2 coproduct(const ConilpotentCoalgebra& c, const Vector& x) {
  Tensor2 out;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& [l, r, s] : c.comult[i]) add(out, l, r, s * x[i]);
  }
  return out;
}

void check_conilpotent(const ConilpotentCoalgebra& c) {
  // Iterate the reduced coproduct on the last factor; it must die within dim C̄ steps.
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (i == c.coaugmentation) continue;
    std::map<Word, Scalar> cur{{Word{i}, Scalar::one(c.field)}};
    for (std::size_t step = 0; !cur.empty(); ++step) {
      if (step > c.dim())
        fail(ErrorCode::NotConilpotent, "cobar: the reduced coproduct of " + c.names[i] + " never vanishes");
      std::map<Word, Scalar> next;
      for (const auto& [w, s] : cur)
        for (const auto& [l, r, t] : c.comult[w.back()]) {
          if (l == c.coaugmentation || r == c.coaugmentation) continue;
          Word u = w;
          u.back() = l;
          u.push_back(r);
          auto [it, fresh] = next.emplace(u, s * t);
          if (!fresh) {
            it->second += s * t;
            if (it->second.is_zero()) next.erase(it);
          }
        }
      cur = std::move(next);
    }
  }
}

}  // namespace

void validate_coalgebra(const ConilpotentCoalgebra& c) {
  const std::size_t n = c.dim();
  const Field f = c.field;
  auto bad = [](const std::string& what) { fail(ErrorCode::InvalidInput, "coalgebra: " + what); };
  if (c.comult.size() != n || c.names.size() != n || c.d.rows() != n || c.d.cols() != n) bad("inconsistent sizes");
  if (c.coaugmentation >= n) bad("coaugmentation out of range");
  if (!c.weights.empty() && c.weights.size() != n) bad("one weight per basis element is required");
  for (std::size_t i = 0; i < n; ++i) {
    Vector left = zero_vector(f, n), right = zero_vector(f, n);
    for (const auto& [l, r, s] : c.comult[i]) {
      if (l >= n || r >= n) bad("coproduct index out of range");
      if (c.degrees[l] + c.degrees[r] != c.degrees[i]) bad("coproduct of " + c.names[i] + " is not homogeneous");
      if (l == c.coaugmentation) right[r] += s;
      if (r == c.coaugmentation) left[l] += s;
    }
    const Vector e = [&] {
      Vector v = zero_vector(f, n);
      v[i] = Scalar::one(f);
      return v;
    }();
    if (left != e || right != e) bad("counit fails on " + c.names[i]);
    if (i != c.coaugmentation && !c.weights.empty() && c.weights[i] < 1) bad("weights must be positive");
  }
  // Coassociativity.
  for (std::size_t i = 0; i < n; ++i) {
    Tensor3 lhs, rhs;
    for (const auto& [l, r, s] : c.comult[i]) {
      for (const auto& [ll, lr, t] : c.comult[l]) add(lhs, ll, lr, r, s * t);
      for (const auto& [rl, rr, t] : c.comult[r]) add(rhs, l, rl, rr, s * t);
    }
    if (lhs != rhs) bad("coassociativity fails on " + c.names[i]);
  }
  // d: degree +1, d² = 0, d(1) = 0, coderivation.
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& e : c.d.row(j))
      if (c.degrees[j] != c.degrees[e.col] + 1) bad("d does not raise degree by one");
  if (!(c.d * c.d).is_zero()) bad("d^2 != 0");
  if (!is_zero_vector(c.d.column(c.coaugmentation))) bad("d of the coaugmentation is nonzero");
  const Matrix dt = c.d.transpose();
  for (std::size_t i = 0; i < n; ++i) {
    const Tensor2 lhs = coproduct(c, c.d.column(i));
    Tensor2 rhs;
    for (const auto& [l, r, s] : c.comult[i]) {
      for (const auto& e : dt.row(l)) add(rhs, e.col, r, s * e.value);
      const Scalar sign(f, sign_of(c.degrees[l]));
      for (const auto& e : dt.row(r)) add(rhs, l, e.col, s * e.value * sign);
    }
    if (lhs != rhs) bad("d is not a coderivation on " + c.names[i]);
  }
  check_conilpotent(c);
}

ConilpotentCoalgebra dual_coalgebra(const CurvedAlgebra& a) {
  augmentation_letters(a);
  const std::size_t n = a.dim();
  const Field f = a.field;
  ConilpotentCoalgebra c;
  c.field = f;
  for (std::size_t i = 0; i < n; ++i) {
    c.degrees.push_back(-a.degrees[i]);
    c.names.push_back(a.names[i] + "*");
  }
  c.comult.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.mult[i][j][k].is_zero()) c.comult[k].emplace_back(i, j, a.mult[i][j][k]);
  // (df)(x) = −(−1)^{|f|} f(dx).
  c.d = Matrix(f, n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& e : a.d.row(k)) c.d.set(e.col, k, e.value * Scalar(f, -sign_of(c.degrees[k])));
  c.coaugmentation = a.unit;
  c.weights.assign(n, 1);
  c.weights[a.unit] = 0;
  return c;
}

CurvedAlgebra dual_algebra(const ConilpotentCoalgebra& c) {
  const std::size_t n = c.dim();
  const Field f = c.field;
  std::vector<int> degrees;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    degrees.push_back(-c.degrees[i]);
    const std::string& nm = c.names[i];
    names.push_back(nm.size() > 1 && nm.back() == '*' ? nm.substr(0, nm.size() - 1) : nm + "*");
  }
  CurvedAlgebra a = make_algebra(f, Grading::Z, degrees, names, c.coaugmentation);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [l, r, s] : c.comult[k]) a.mult[l][r][k] += s;
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& e : c.d.row(k)) a.d.set(e.col, k, e.value * Scalar(f, -sign_of(c.degrees[e.col])));
  return a;
}

namespace {

std::vector<Word> bar_basis(const std::vector<std::size_t>& letters, int max_length) {
  std::vector<Word> out;
  for (int n = 0; n <= max_length; ++n)
    for (Word& w : words_of_length(letters, static_cast<std::size_t>(n))) out.push_back(std::move(w));
  return out;
}

}  // namespace

ConilpotentCoalgebra bar_coalgebra(const CurvedAlgebra& a, int max_length) {
  if (max_length < 1) fail(ErrorCode::InvalidInput, "bar: word length bound must be at least 1");
  const auto letters = augmentation_letters(a);
  const Field f = a.field;
  const auto words = bar_basis(letters, max_length);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);

  ConilpotentCoalgebra c;
  c.field = f;
  c.coaugmentation = 0;
  c.d = Matrix(f, words.size(), words.size());
  c.comult.resize(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Word& w = words[i];
    c.degrees.push_back(bar_degree(a, w));
    c.weights.push_back(static_cast<int>(w.size()));
    std::string name = "[";
    for (std::size_t k = 0; k < w.size(); ++k) name += (k ? "|" : "") + a.names[w[k]];
    c.names.push_back(name + "]");
    for (std::size_t cut = 0; cut <= w.size(); ++cut)
      c.comult[i].emplace_back(index.at(Word(w.begin(), w.begin() + static_cast<long>(cut))),
                               index.at(Word(w.begin() + static_cast<long>(cut), w.end())), Scalar::one(f));
    auto put = [&](const Word& u, const Scalar& s) { c.d.add_to(index.at(u), i, s); };
    bar_terms(a, letters, w, put, put);
  }
  return c;
}

std::size_t CobarComplex::index(const Word& w) const {
  const auto it = lookup.find(w);
  if (it == lookup.end()) fail(ErrorCode::InvalidInput, "cobar: word outside the truncation");
  return it->second;
}

CobarComplex cobar(const ConilpotentCoalgebra& c, int max_weight) {
  if (max_weight < 0) fail(ErrorCode::InvalidInput, "cobar: weight bound must be nonnegative");
  validate_coalgebra(c);
  const Field f = c.field;
  std::vector<std::size_t> letters;
  for (std::size_t i = 0; i < c.dim(); ++i)
    if (i != c.coaugmentation) letters.push_back(i);
  auto weight = [&](std::size_t i) { return c.weights.empty() ? 1 : c.weights[i]; };

  CobarComplex out;
  // Words by total weight, then lexicographically.
  std::vector<std::vector<Word>> by_weight(max_weight + 1);
  by_weight[0].push_back({});
  for (int w = 1; w <= max_weight; ++w)
    for (std::size_t l : letters)
      if (weight(l) <= w)
        for (const Word& rest : by_weight[w - weight(l)]) {
          Word u{l};
          u.insert(u.end(), rest.begin(), rest.end());
          by_weight[w].push_back(std::move(u));
        }
  for (auto& ws : by_weight) {
    std::sort(ws.begin(), ws.end());
    for (Word& w : ws) {
      int d = 0;
      for (std::size_t l : w) d += c.degrees[l] + 1;
      out.lookup.emplace(w, out.words.size());
      out.degrees.push_back(d);
      out.words.push_back(std::move(w));
    }
  }
  const Matrix dt = c.d.transpose();
  out.differential = Matrix(f, out.words.size(), out.words.size());
  for (std::size_t col = 0; col < out.words.size(); ++col) {
    const Word& w = out.words[col];
    int before = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Scalar outer(f, sign_of(before));
      auto emit = [&](Word u, const Scalar& s) {
        const auto it = out.lookup.find(u);
        if (it != out.lookup.end()) out.differential.add_to(it->second, col, s);
      };
      for (const auto& e : dt.row(w[i])) {
        if (e.col == c.coaugmentation) continue;
        Word u = w;
        u[i] = e.col;
        emit(std::move(u), -outer * e.value);
      }
      for (const auto& [l, r, s] : c.comult[w[i]]) {
        if (l == c.coaugmentation || r == c.coaugmentation) continue;
        Word u(w.begin(), w.begin() + static_cast<long>(i));
        u.push_back(l);
        u.push_back(r);
        u.insert(u.end(), w.begin() + static_cast<long>(i) + 1, w.end());
        emit(std::move(u), outer * s * Scalar(f, sign_of(c.degrees[l])));
      }
      before += c.degrees[w[i]] + 1;
    }
  }
  return out;
}

std::map<int, std::size_t> cobar_cohomology(const CobarComplex& c) {
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < c.words.size(); ++i) by_degree[c.degrees[i]].push_back(i);
  auto members = [&](int p) { return by_degree.count(p) ? by_degree.at(p) : std::vector<std::size_t>{}; };
  std::map<int, std::size_t> out;
  for (const auto& [p, mem] : by_degree) {
    const std::size_t r_out = rank(block_of(c.differential, members(p + 1), mem));
    const std::size_t r_in = rank(block_of(c.differential, mem, members(p - 1)));
    out[p] = mem.size() - r_out - r_in;
  }
  return out;
}

bool cobar_d_squared(const CobarComplex& c) { return (c.differential * c.differential).is_zero(); }

CounitCheck counit_h0_check(const CurvedAlgebra& a, int max_length) {
  const auto letters = augmentation_letters(a);
  for (int d : a.degrees)
    if (d != 0) fail(ErrorCode::InvalidInput, "counit check: the algebra must sit in degree 0");
  const Field f = a.field;
  const ConilpotentCoalgebra bc = bar_coalgebra(a, max_length);
  const auto words = bar_basis(letters, max_length);
  const CobarComplex om = cobar(bc, max_length);

  std::vector<std::size_t> zero, minus_one;
  for (std::size_t i = 0; i < om.words.size(); ++i) {
    if (om.degrees[i] == 0) zero.push_back(i);
    if (om.degrees[i] == -1) minus_one.push_back(i);
  }
  // Counit on degree 0: s⁻¹[a₁] ⋯ s⁻¹[a_k] ↦ a₁⋯a_k, the empty word ↦ 1.
  Matrix eps(f, a.dim(), zero.size());
  for (std::size_t k = 0; k < zero.size(); ++k) {
    Vector v = a.basis_vector(a.unit);
    for (std::size_t l : om.words[zero[k]]) v = a.multiply(v, a.basis_vector(words[l].front()));
    for (std::size_t r = 0; r < a.dim(); ++r)
      if (!v[r].is_zero()) eps.set(r, k, v[r]);
  }
  const Matrix dm1 = block_of(om.differential, zero, minus_one);
  CounitCheck out;
  out.algebra_dim = a.dim();
  const std::size_t rd = rank(dm1);
  out.h0_dim = zero.size() - rd;
  out.surjective = rank(eps) == a.dim();
  out.kernel_is_image = (eps * dm1).is_zero() && rd + a.dim() == zero.size();
  out.ok = out.surjective && out.kernel_is_image && out.h0_dim == a.dim();
  return out;
}

}  // namespace singlab
