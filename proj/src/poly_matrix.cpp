#include "singlab/poly_matrix.hpp"

namespace singlab {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Poly(ring_)) {}

PolyMatrix PolyMatrix::identity(const Ring& ring, std::size_t n) { return scalar(Poly::constant(ring, 1), n); }

PolyMatrix PolyMatrix::scalar(const Poly& p, std::size_t n) {
  PolyMatrix m(p.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = p;
  return m;
}

PolyMatrix PolyMatrix::parse(const Ring& ring, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows[0].size();
  PolyMatrix m(ring, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) fail(ErrorCode::InvalidInput, "ragged matrix");
    for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = parse_poly(ring, rows[r][c]);
  }
  return m;
}

void PolyMatrix::set(std::size_t r, std::size_t c, Poly p) {
  if (!(p.ring() == ring_)) fail(ErrorCode::RingMismatch, "matrix entry ring");
  at(r, c) = std::move(p);
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  PolyMatrix b(ring_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b.at(r, c) = at(r0 + r, c0 + c);
  return b;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& m) {
  if (m.rows_ * m.cols_ > 0 && !(m.ring_ == ring_)) fail(ErrorCode::RingMismatch, "block ring");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) at(r0 + r, c0 + c) = m.at(r, c);
}

PolyMatrix PolyMatrix::map(const Ring& target, const std::function<Poly(const Poly&)>& f) const {
  PolyMatrix m(target, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = f(data_[k]);
  return m;
}

PolyMatrix PolyMatrix::reduced(const GroebnerBasis& gb) const {
  return map(ring_, [&](const Poly& p) { return normal_form(p, gb); });
}

PolyMatrix PolyMatrix::to_ring(const Ring& target) const {
  return map(target, [&](const Poly& p) { return p.to_ring(target); });
}

PolyMatrix PolyMatrix::operator-() const {
  return map(ring_, [](const Poly& p) { return -p; });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::InvalidInput, "matrix product dimension mismatch");
  PolyMatrix m(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) m.at(i, j) += x * b.at(k, j);
    }
  return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::InvalidInput, "matrix sum dimension mismatch");
  PolyMatrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
  return m;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

PolyMatrix PolyMatrix::scaled(const Poly& p) const {
  return map(ring_, [&](const Poly& x) { return x * p; });
}

PolyMatrix PolyMatrix::scaled(const Scalar& s) const {
  return map(ring_, [&](const Poly& x) { return x.scaled(s); });
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back(at(r, c).to_string());
  return out;
}

PolyMatrix PolyMatrix::blocks(const std::vector<std::vector<PolyMatrix>>& grid) {
  std::size_t total_rows = 0, total_cols = 0;
  for (const auto& b : grid[0]) total_cols += b.cols();
  for (const auto& row : grid) total_rows += row[0].rows();
  PolyMatrix m(grid[0][0].ring(), total_rows, total_cols);
  std::size_t r0 = 0;
  for (const auto& row : grid) {
    std::size_t c0 = 0;
    for (const auto& b : row) {
      if (b.rows() != row[0].rows()) fail(ErrorCode::InvalidInput, "block heights disagree");
      m.set_block(r0, c0, b);
      c0 += b.cols();
    }
    r0 += row[0].rows();
  }
  return m;
}

PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix m(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      m.set_block(i * b.rows(), j * b.cols(), b.scaled(a.at(i, j)));
    }
  return m;
}

}  // namespace singlab
