#pragma once

#include <vector>

#include "galdist/quad.hpp"

namespace galdist {

// Dense matrix over F(δ).  Row-major storage, 0-based indexing, exact
// entries throughout; there is no floating point anywhere in this library.
class QuadMatrix {
 public:
  QuadMatrix() : rows_(0), cols_(0) {}
  QuadMatrix(int rows, int cols);

  static QuadMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  QuadScalar& at(int i, int j);
  const QuadScalar& at(int i, int j) const;

  // Entrywise Galois conjugate.
  QuadMatrix conj() const;
  QuadMatrix transpose() const;

  // Matrix made of columns [0, count) of this one.
  QuadMatrix left_columns(int count) const;

  friend bool operator==(const QuadMatrix& x, const QuadMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }
  friend bool operator!=(const QuadMatrix& x, const QuadMatrix& y) {
    return !(x == y);
  }

 private:
  int rows_, cols_;
  std::vector<QuadScalar> data_;
};

// Throws DimensionMismatch unless x.cols() == y.rows().
QuadMatrix mat_mul(const QuadField& field, const QuadMatrix& x,
                   const QuadMatrix& y);

// Side-by-side concatenation; throws DimensionMismatch on row count.
QuadMatrix hstack(const QuadMatrix& x, const QuadMatrix& y);

// Gauss-Jordan over the exact field, first nonzero pivot in each column.
// Throws SingularMatrix when no inverse exists and DimensionMismatch when
// the input is not square.
QuadMatrix mat_inverse(const QuadField& field, const QuadMatrix& m);

int mat_rank(const QuadField& field, QuadMatrix m);

// dim(span A ∩ span B) = rank A + rank B - rank [A|B], where the spans are
// taken over columns.  Throws DimensionMismatch when the ambient spaces
// differ.
int subspace_intersect_dim(const QuadField& field, const QuadMatrix& a,
                           const QuadMatrix& b);

}  // namespace galdist
