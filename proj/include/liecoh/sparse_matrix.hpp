#ifndef LIECOH_SPARSE_MATRIX_HPP
#define LIECOH_SPARSE_MATRIX_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

/// Sparse matrix over the rationals, row-major storage. Rows hold only
/// nonzero entries, sorted by column. Immutable once built; construction
/// goes through MatrixBuilder or the from_* factories.
class SparseMatrix {
public:
  struct Entry {
    int col;
    Rational value;
    bool operator==(const Entry& o) const { return col == o.col && value == o.value; }
  };
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  /// Builds from per-column entry lists (row, value); duplicates within a
  /// column are accumulated, zeros dropped. This is the shape the cochain
  /// assembly produces.
  static SparseMatrix from_columns(int rows, int cols,
                                   std::vector<std::vector<std::pair<int, Rational>>> columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Row& row(int r) const { return data_[r]; }
  std::int64_t nnz() const;
  bool is_zero() const;

  Rational at(int r, int c) const;

  /// Exact matrix-vector product; throws on length mismatch.
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  SparseMatrix transpose() const;
  SparseMatrix multiply(const SparseMatrix& rhs) const;

  /// Vertical concatenation: all blocks share the column count.
  static SparseMatrix stack_rows(const std::vector<const SparseMatrix*>& blocks);

  bool operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

private:
  friend class MatrixBuilder;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Row> data_;
};

/// Accumulating builder for hand-written and test matrices.
class MatrixBuilder {
public:
  MatrixBuilder(int rows, int cols) : rows_(rows), cols_(cols) {}
  MatrixBuilder& add(int r, int c, const Rational& v);
  SparseMatrix build() const;

private:
  int rows_, cols_;
  std::map<std::pair<int, int>, Rational> acc_;
};

}  // namespace liecoh

#endif
