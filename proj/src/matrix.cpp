#include "charloci/matrix.hpp"

#include "charloci/errors.hpp"

namespace charloci {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::InvalidArgument, "QMatrix product: shape mismatch");
  QMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (charloci::is_zero(a)) continue;
      for (int j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool QMatrix::is_zero() const {
  for (const auto& q : data_)
    if (!charloci::is_zero(q)) return false;
  return true;
}

std::vector<int> row_reduce(QMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!charloci::is_zero(m(r, col))) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || charloci::is_zero(m(r, col))) continue;
      Rational f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int QMatrix::rank() const {
  QMatrix copy = *this;
  return static_cast<int>(row_reduce(copy).size());
}

QMatrix QMatrix::kernel() const {
  QMatrix copy = *this;
  auto pivots = row_reduce(copy);
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMatrix k(cols_, static_cast<int>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    int fc = free_cols[f];
    k(fc, static_cast<int>(f)) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], static_cast<int>(f)) = -copy(static_cast<int>(r), fc);
  }
  return k;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::NonInvertible, "non-square matrix");
  const int n = rows_;
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = row_reduce(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::NonInvertible, "singular matrix");
  }
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Poly(ring_)) {}

PolyMatrix PolyMatrix::identity(RingPtr ring, int n) {
  PolyMatrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Poly::constant(ring, 1);
  return m;
}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, const std::vector<std::vector<Poly>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  PolyMatrix m(ring, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, int rows, const std::vector<std::vector<Poly>>& cols) {
  PolyMatrix m(ring, rows, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(static_cast<int>(j), cols[j]);
  return m;
}

PolyMatrix PolyMatrix::from_rational(RingPtr ring, const QMatrix& q) {
  PolyMatrix m(ring, q.rows(), q.cols());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) m(i, j) = Poly::constant(ring, q(i, j));
  return m;
}

std::vector<Poly> PolyMatrix::column(int c) const {
  std::vector<Poly> v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, c));
  return v;
}

void PolyMatrix::set_column(int c, const std::vector<Poly>& v) {
  if (static_cast<int>(v.size()) != rows_) throw Error(ErrorCode::InvalidArgument, "column length mismatch");
  for (int i = 0; i < rows_; ++i) (*this)(i, c) = v[i].is_zero() ? Poly(ring_) : v[i];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product: shape mismatch");
  PolyMatrix out(ring_ ? ring_ : other.ring_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Poly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const Poly& b = other(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::InvalidArgument, "matrix sum: shape mismatch");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::InvalidArgument, "matrix difference: shape mismatch");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& p : out.data_) p = -p;
  return out;
}

PolyMatrix PolyMatrix::scaled(const Poly& p) const {
  PolyMatrix out = *this;
  for (auto& e : out.data_) e = e * p;
  return out;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<int>& rows) const {
  PolyMatrix out(ring_, static_cast<int>(rows.size()), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols_; ++j) out(static_cast<int>(i), j) = (*this)(rows[i], j);
  return out;
}

PolyMatrix PolyMatrix::select_cols(const std::vector<int>& cols) const {
  PolyMatrix out(ring_, rows_, static_cast<int>(cols.size()));
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, static_cast<int>(j)) = (*this)(i, cols[j]);
  return out;
}

PolyMatrix PolyMatrix::row_range(int begin, int end) const {
  std::vector<int> idx;
  for (int i = begin; i < end; ++i) idx.push_back(i);
  return select_rows(idx);
}

PolyMatrix PolyMatrix::col_range(int begin, int end) const {
  std::vector<int> idx;
  for (int i = begin; i < end; ++i) idx.push_back(i);
  return select_cols(idx);
}

PolyMatrix PolyMatrix::hconcat(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "hconcat: row mismatch");
  PolyMatrix out(a.ring_ ? a.ring_ : b.ring_, a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
    for (int j = 0; j < b.cols_; ++j) out(i, a.cols_ + j) = b(i, j);
  }
  return out;
}

PolyMatrix PolyMatrix::vconcat(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.cols_) throw Error(ErrorCode::InvalidArgument, "vconcat: column mismatch");
  PolyMatrix out(a.ring_ ? a.ring_ : b.ring_, a.rows_ + b.rows_, a.cols_);
  for (int j = 0; j < a.cols_; ++j) {
    for (int i = 0; i < a.rows_; ++i) out(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i) out(a.rows_ + i, j) = b(i, j);
  }
  return out;
}

PolyMatrix PolyMatrix::block_diag(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.ring_ ? a.ring_ : b.ring_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) out(a.rows_ + i, a.cols_ + j) = b(i, j);
  return out;
}

PolyMatrix PolyMatrix::kron_identity(int n) const {
  PolyMatrix out(ring_, rows_ * n, cols_ * n);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      for (int k = 0; k < n; ++k) out(i * n + k, j * n + k) = (*this)(i, j);
  return out;
}

QMatrix PolyMatrix::evaluate(const std::vector<Rational>& point) const {
  QMatrix q(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) q(i, j) = (*this)(i, j).evaluate(point);
  return q;
}

}  // namespace charloci
