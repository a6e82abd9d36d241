#include "galdist/quad_matrix.hpp"

#include <utility>

#include "galdist/errors.hpp"

namespace galdist {

QuadMatrix::QuadMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimension");
}

QuadMatrix QuadMatrix::identity(int n) {
  QuadMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = QuadScalar(Rational(1));
  return m;
}

QuadScalar& QuadMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw OutOfRange("matrix index out of range");
  return data_[static_cast<std::size_t>(i) * cols_ + j];
}

const QuadScalar& QuadMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw OutOfRange("matrix index out of range");
  return data_[static_cast<std::size_t>(i) * cols_ + j];
}

QuadMatrix QuadMatrix::conj() const {
  QuadMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].conj();
  return m;
}

QuadMatrix QuadMatrix::transpose() const {
  QuadMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

QuadMatrix QuadMatrix::left_columns(int count) const {
  if (count < 0 || count > cols_) throw OutOfRange("column count out of range");
  QuadMatrix m(rows_, count);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < count; ++j) m.at(i, j) = at(i, j);
  return m;
}

QuadMatrix mat_mul(const QuadField& field, const QuadMatrix& x,
                   const QuadMatrix& y) {
  if (x.cols() != y.rows())
    throw DimensionMismatch("matrix product shape mismatch");
  QuadMatrix out(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int k = 0; k < x.cols(); ++k) {
      const QuadScalar& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < y.cols(); ++j) {
        out.at(i, j) = out.at(i, j) + field.mul(xik, y.at(k, j));
      }
    }
  }
  return out;
}

QuadMatrix hstack(const QuadMatrix& x, const QuadMatrix& y) {
  if (x.rows() != y.rows()) throw DimensionMismatch("hstack row mismatch");
  QuadMatrix out(x.rows(), x.cols() + y.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols(); ++j) out.at(i, x.cols() + j) = y.at(i, j);
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.  Pivot
// choice is the first row with a nonzero entry, no reordering beyond the
// swap that brings it up.
std::vector<int> reduce(const QuadField& field, QuadMatrix& m) {
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    QuadScalar scale = field.inv(m.at(row, col));
    for (int j = col; j < m.cols(); ++j)
      m.at(row, j) = field.mul(scale, m.at(row, j));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      QuadScalar factor = m.at(i, col);
      for (int j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - field.mul(factor, m.at(row, j));
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

QuadMatrix mat_inverse(const QuadField& field, const QuadMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square");
  int n = m.rows();
  QuadMatrix work = hstack(m, QuadMatrix::identity(n));
  std::vector<int> pivots = reduce(field, work);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
    throw SingularMatrix("matrix is singular");
  QuadMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = work.at(i, n + j);
  return inv;
}

int mat_rank(const QuadField& field, QuadMatrix m) {
  return static_cast<int>(reduce(field, m).size());
}

int subspace_intersect_dim(const QuadField& field, const QuadMatrix& a,
                           const QuadMatrix& b) {
  if (a.rows() != b.rows())
    throw DimensionMismatch("subspaces of different ambient spaces");
  return mat_rank(field, a) + mat_rank(field, b) -
         mat_rank(field, hstack(a, b));
}

}  // namespace galdist
