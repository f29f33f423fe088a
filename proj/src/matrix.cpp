#include "singlab/matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace singlab {

Vector zero_vector(Field f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Scalar::one(f)});
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!rows[r][c].is_zero()) m.data_[r].push_back({c, rows[r][c]});
  return m;
}

Matrix Matrix::from_columns(Field f, const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(f, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r)
      if (!columns[c][r].is_zero()) m.data_[r].push_back({c, columns[c][r]});
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  const Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return Scalar::zero(field_);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (!(v.field() == field_)) fail(ErrorCode::FieldMismatch, "matrix entry field");
  Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (v.is_zero()) row.erase(it);
    else it->value = v;
  } else if (!v.is_zero()) {
    row.insert(it, Entry{c, v});
  }
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& v) {
  if (v.is_zero()) return;
  Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    it->value += v;
    if (it->value.is_zero()) row.erase(it);
  } else {
    if (!(v.field() == field_)) fail(ErrorCode::FieldMismatch, "matrix entry field");
    row.insert(it, Entry{c, v});
  }
}

void Matrix::set_row(std::size_t r, Row entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  Row merged;
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().col == e.col) merged.back().value += e.value;
    else merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const Entry& e) { return e.value.is_zero(); });
  data_[r] = std::move(merged);
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r]) t.data_[e.col].push_back({r, e.value});
  return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r])
      if (!v[e.col].is_zero()) out[r] += e.value * v[e.col];
  return out;
}

Vector Matrix::column(std::size_t c) const {
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Vector Matrix::dense_row(std::size_t r) const {
  Vector out = zero_vector(field_, cols_);
  for (const auto& e : data_[r]) out[e.col] = e.value;
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (const auto& e : data_[r0 + r])
      if (e.col >= c0 && e.col < c0 + nc) b.data_[r].push_back({e.col - c0, e.value});
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  check_same_field(m);
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (const auto& e : m.data_[r]) set(r0 + r, c0 + e.col, e.value);
}

void Matrix::check_same_field(const Matrix& o) const {
  if (!(field_ == o.field_)) fail(ErrorCode::FieldMismatch, "matrix fields " + field_.name() + " vs " + o.field_.name());
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.check_same_field(b);
  if (a.cols_ != b.rows_) fail(ErrorCode::InvalidInput, "matrix product dimension mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::map<std::size_t, Scalar> acc;
    for (const auto& ea : a.data_[r])
      for (const auto& eb : b.data_[ea.col]) {
        auto [it, inserted] = acc.try_emplace(eb.col, ea.value * eb.value);
        if (!inserted) it->second += ea.value * eb.value;
      }
    for (auto& [c, v] : acc)
      if (!v.is_zero()) out.data_[r].push_back({c, std::move(v)});
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  a.check_same_field(b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::InvalidInput, "matrix sum dimension mismatch");
  Matrix out = a;
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (const auto& e : b.data_[r]) out.add_to(r, e.col, e.value);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.scaled(-Scalar::one(b.field_)); }

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(field_, rows_, cols_);
  if (s.is_zero()) return out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r]) out.data_[r].push_back({e.col, e.value * s});
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    if (a.data_[r].size() != b.data_[r].size()) return false;
    for (std::size_t k = 0; k < a.data_[r].size(); ++k)
      if (a.data_[r][k].col != b.data_[r][k].col || !(a.data_[r][k].value == b.data_[r][k].value)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Elimination.
//
// Both engines build an echelon basis incrementally (each new row is reduced at
// its leading column against existing pivots), then clear above the pivots from
// the bottom up and finally normalise leading entries to 1.

namespace {

/// Integer rows for fraction-free elimination over ℚ.
struct IntEntry {
  std::size_t col;
  mpz_class value;
};
using IntRow = std::vector<IntEntry>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().value < 0) g = -g;
  if (g != 1)
    for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
}

/// a·x − b·y, merged by column.
IntRow combine(const mpz_class& a, const IntRow& x, const mpz_class& b, const IntRow& y) {
  IntRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
      out.push_back({x[i].col, a * x[i].value});
      ++i;
    } else if (i == x.size() || y[j].col < x[i].col) {
      out.push_back({y[j].col, -b * y[j].value});
      ++j;
    } else {
      mpz_class v = a * x[i].value - b * y[j].value;
      if (v != 0) out.push_back({x[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

/// Eliminates column `col` of `row` using `pivot` whose entry at `col` is `pv`.
void eliminate(IntRow& row, const mpz_class& rv, const IntRow& pivot, const mpz_class& pv) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), rv.get_mpz_t(), pv.get_mpz_t());
  const mpz_class a = pv / g;
  const mpz_class b = rv / g;
  row = combine(a, row, b, pivot);
  make_primitive(row);
}

IntRow to_int_row(const Matrix::Row& row) {
  mpz_class l = 1;
  for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.re().get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& e : row) out.push_back({e.col, e.value.re().get_num() * (l / e.value.re().get_den())});
  make_primitive(out);
  return out;
}

RrefResult rref_rational(const Matrix& m) {
  const Field f = m.field();
  std::vector<IntRow> pivots;
  std::map<std::size_t, std::size_t> pivot_of_col;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntRow row = to_int_row(m.row(r));
    while (!row.empty()) {
      auto it = pivot_of_col.find(row.front().col);
      if (it == pivot_of_col.end()) break;
      const IntRow& p = pivots[it->second];
      const mpz_class rv = row.front().value;
      eliminate(row, rv, p, p.front().value);
    }
    if (!row.empty()) {
      pivot_of_col.emplace(row.front().col, pivots.size());
      pivots.push_back(std::move(row));
    }
  }
  // Order by leading column, then clear above pivots bottom-up.
  std::vector<std::size_t> order;
  for (const auto& [col, idx] : pivot_of_col) order.push_back(idx);
  std::vector<IntRow> sorted;
  sorted.reserve(order.size());
  for (std::size_t idx : order) sorted.push_back(std::move(pivots[idx]));
  std::map<std::size_t, std::size_t> pos_of_col;
  for (std::size_t k = 0; k < sorted.size(); ++k) pos_of_col.emplace(sorted[k].front().col, k);
  for (std::size_t k = sorted.size(); k-- > 0;) {
    IntRow& row = sorted[k];
    std::size_t scan = 1;
    while (scan < row.size()) {
      auto it = pos_of_col.find(row[scan].col);
      if (it == pos_of_col.end()) {
        ++scan;
        continue;
      }
      const IntRow& p = sorted[it->second];
      const std::size_t col = row[scan].col;
      const mpz_class rv = row[scan].value;
      eliminate(row, rv, p, p.front().value);
      scan = 1;
      while (scan < row.size() && row[scan].col <= col) ++scan;
    }
  }
  RrefResult out{Matrix(f, m.rows(), m.cols()), {}};
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const mpz_class lead = sorted[k].front().value;
    Matrix::Row row;
    row.reserve(sorted[k].size());
    for (const auto& e : sorted[k]) row.push_back({e.col, Scalar(f, mpq_class(e.value, lead))});
    out.reduced.set_row(k, std::move(row));
    out.pivots.push_back(sorted[k].front().col);
  }
  return out;
}

/// row := row − c·pivot.
Matrix::Row axpy(const Matrix::Row& row, const Scalar& c, const Matrix::Row& pivot) {
  Matrix::Row out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].col < pivot[j].col)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].col < row[i].col) {
      out.push_back({pivot[j].col, -(c * pivot[j].value)});
      ++j;
    } else {
      Scalar v = row[i].value - c * pivot[j].value;
      if (!v.is_zero()) out.push_back({row[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

RrefResult rref_field(const Matrix& m) {
  const Field f = m.field();
  std::vector<Matrix::Row> pivots;
  std::map<std::size_t, std::size_t> pivot_of_col;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Matrix::Row row = m.row(r);
    while (!row.empty()) {
      auto it = pivot_of_col.find(row.front().col);
      if (it == pivot_of_col.end()) break;
      row = axpy(row, row.front().value, pivots[it->second]);
    }
    if (!row.empty()) {
      const Scalar inv = row.front().value.inverse();
      for (auto& e : row) e.value *= inv;
      pivot_of_col.emplace(row.front().col, pivots.size());
      pivots.push_back(std::move(row));
    }
  }
  std::vector<Matrix::Row> sorted;
  for (const auto& [col, idx] : pivot_of_col) sorted.push_back(std::move(pivots[idx]));
  std::map<std::size_t, std::size_t> pos_of_col;
  for (std::size_t k = 0; k < sorted.size(); ++k) pos_of_col.emplace(sorted[k].front().col, k);
  for (std::size_t k = sorted.size(); k-- > 0;) {
    Matrix::Row& row = sorted[k];
    std::size_t scan = 1;
    while (scan < row.size()) {
      auto it = pos_of_col.find(row[scan].col);
      if (it == pos_of_col.end()) {
        ++scan;
        continue;
      }
      const std::size_t col = row[scan].col;
      row = axpy(row, row[scan].value, sorted[it->second]);
      scan = 1;
      while (scan < row.size() && row[scan].col <= col) ++scan;
    }
  }
  RrefResult out{Matrix(f, m.rows(), m.cols()), {}};
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    out.pivots.push_back(sorted[k].front().col);
    out.reduced.set_row(k, std::move(sorted[k]));
  }
  return out;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  if (m.field().kind() == FieldKind::Rat) return rref_rational(m);
  return rref_field(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
      const Scalar c = r.reduced.at(k, free);
      if (!c.is_zero()) v[r.pivots[k]] = -c;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Matrix::Row row = m.row(r);
    if (!b[r].is_zero()) row.push_back({m.cols(), b[r]});
    aug.set_row(r, std::move(row));
  }
  const RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.reduced.at(k, m.cols());
  return x;
}

std::vector<std::size_t> independent_modulo(Field f, std::size_t dim, const std::vector<Vector>& base,
                                            const std::vector<Vector>& candidates) {
  // Incremental echelon basis; a candidate is kept when it survives reduction.
  std::vector<Matrix::Row> pivots;
  std::map<std::size_t, std::size_t> pivot_of_col;
  auto reduce_in = [&](const Vector& v) {
    Matrix::Row row;
    for (std::size_t c = 0; c < dim; ++c)
      if (!v[c].is_zero()) row.push_back({c, v[c]});
    while (!row.empty()) {
      auto it = pivot_of_col.find(row.front().col);
      if (it == pivot_of_col.end()) break;
      row = axpy(row, row.front().value, pivots[it->second]);
    }
    if (row.empty()) return false;
    const Scalar inv = row.front().value.inverse();
    for (auto& e : row) e.value *= inv;
    pivot_of_col.emplace(row.front().col, pivots.size());
    pivots.push_back(std::move(row));
    return true;
  };
  (void)f;
  for (const auto& v : base) reduce_in(v);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < candidates.size(); ++k)
    if (reduce_in(candidates[k])) keep.push_back(k);
  return keep;
}

}  // namespace singlab
