#ifndef CHARLOCI_MATRIX_HPP
#define CHARLOCI_MATRIX_HPP

#include <vector>

#include "charloci/poly.hpp"

namespace charloci {

// Dense matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  QMatrix operator*(const QMatrix& other) const;
  QMatrix operator-(const QMatrix& other) const;
  bool operator==(const QMatrix& other) const = default;
  QMatrix transpose() const;
  bool is_zero() const;

  int rank() const;
  // Columns span the right kernel.
  QMatrix kernel() const;
  // Inverse of a square matrix; throws NonInvertible when singular.
  QMatrix inverse() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(QMatrix& m);

// Dense matrix of polynomials sharing one ring. Columns are module elements:
// a rows x cols matrix is a map R^cols -> R^rows.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, int rows, int cols);

  static PolyMatrix identity(RingPtr ring, int n);
  static PolyMatrix from_rows(RingPtr ring, const std::vector<std::vector<Poly>>& rows);
  static PolyMatrix from_columns(RingPtr ring, int rows, const std::vector<std::vector<Poly>>& cols);
  static PolyMatrix from_rational(RingPtr ring, const QMatrix& q);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Poly& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<Poly> column(int c) const;
  void set_column(int c, const std::vector<Poly>& v);

  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix operator+(const PolyMatrix& other) const;
  PolyMatrix operator-(const PolyMatrix& other) const;
  PolyMatrix operator-() const;
  PolyMatrix scaled(const Poly& p) const;
  bool operator==(const PolyMatrix& other) const;
  bool operator!=(const PolyMatrix& other) const { return !(*this == other); }

  PolyMatrix transpose() const;
  bool is_zero() const;
  PolyMatrix select_rows(const std::vector<int>& rows) const;
  PolyMatrix select_cols(const std::vector<int>& cols) const;
  PolyMatrix row_range(int begin, int end) const;
  PolyMatrix col_range(int begin, int end) const;
  static PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b);
  static PolyMatrix vconcat(const PolyMatrix& a, const PolyMatrix& b);
  static PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b);
  // Kronecker product with the identity: each entry p becomes p * I_n.
  PolyMatrix kron_identity(int n) const;

  QMatrix evaluate(const std::vector<Rational>& point) const;
  PolyMatrix map_entries(const auto& fn, RingPtr ring = nullptr) const {
    PolyMatrix out(ring ? ring : ring_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = fn(data_[i]);
    return out;
  }

 private:
  RingPtr ring_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Poly> data_;
};

}  // namespace charloci

#endif
