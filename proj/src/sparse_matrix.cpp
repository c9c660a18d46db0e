#include "liecoh/sparse_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace liecoh {

static void check_index(int v, int bound, const char* what) {
  if (v < 0 || v >= bound) throw std::out_of_range(std::string("SparseMatrix: ") + what);
}

SparseMatrix SparseMatrix::from_columns(int rows, int cols,
                                        std::vector<std::vector<std::pair<int, Rational>>> columns) {
  if (static_cast<int>(columns.size()) != cols)
    throw std::invalid_argument("from_columns: column count mismatch");
  SparseMatrix m(rows, cols);
  // Merge duplicates per column, then scatter into rows. Row entries come out
  // sorted by column because the columns are visited in increasing order.
  for (int c = 0; c < cols; ++c) {
    auto& col = columns[c];
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < col.size();) {
      int r = col[i].first;
      check_index(r, rows, "row out of bounds");
      Rational sum = col[i].second;
      std::size_t j = i + 1;
      while (j < col.size() && col[j].first == r) sum += col[j++].second;
      if (!sum.is_zero()) col[w++] = {r, sum};
      i = j;
    }
    col.resize(w);
    for (const auto& [r, v] : col) m.data_[r].push_back({c, v});
  }
  return m;
}

std::int64_t SparseMatrix::nnz() const {
  std::int64_t n = 0;
  for (const auto& row : data_) n += static_cast<std::int64_t>(row.size());
  return n;
}

bool SparseMatrix::is_zero() const {
  for (const auto& row : data_)
    if (!row.empty()) return false;
  return true;
}

Rational SparseMatrix::at(int r, int c) const {
  check_index(r, rows_, "row out of bounds");
  check_index(c, cols_, "col out of bounds");
  const Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, int col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return Rational(0);
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("apply: length mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (int r = 0; r < rows_; ++r)
    for (const Entry& e : data_[r]) out[r] += e.value * v[e.col];
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const Entry& e : data_[r]) t.data_[e.col].push_back({r, e.value});
  return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("multiply: dimension mismatch");
  SparseMatrix out(rows_, rhs.cols_);
  std::vector<Rational> acc(rhs.cols_, Rational(0));
  std::vector<int> touched;
  for (int r = 0; r < rows_; ++r) {
    touched.clear();
    for (const Entry& e : data_[r]) {
      for (const Entry& f : rhs.data_[e.col]) {
        if (acc[f.col].is_zero()) touched.push_back(f.col);
        acc[f.col] += e.value * f.value;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (int c : touched) {
      if (!acc[c].is_zero()) out.data_[r].push_back({c, acc[c]});
      acc[c] = Rational(0);
    }
  }
  return out;
}

SparseMatrix SparseMatrix::stack_rows(const std::vector<const SparseMatrix*>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("stack_rows: no blocks");
  int cols = blocks.front()->cols();
  int rows = 0;
  for (const SparseMatrix* b : blocks) {
    if (b->cols() != cols) throw std::invalid_argument("stack_rows: column mismatch");
    rows += b->rows();
  }
  SparseMatrix out(rows, cols);
  int base = 0;
  for (const SparseMatrix* b : blocks) {
    for (int r = 0; r < b->rows(); ++r) out.data_[base + r] = b->data_[r];
    base += b->rows();
  }
  return out;
}

MatrixBuilder& MatrixBuilder::add(int r, int c, const Rational& v) {
  check_index(r, rows_, "row out of bounds");
  check_index(c, cols_, "col out of bounds");
  if (v.is_zero()) return *this;
  auto [it, inserted] = acc_.try_emplace({r, c}, v);
  if (!inserted) it->second += v;
  return *this;
}

SparseMatrix MatrixBuilder::build() const {
  SparseMatrix m(rows_, cols_);
  for (const auto& [rc, v] : acc_)
    if (!v.is_zero()) m.data_[rc.first].push_back({rc.second, v});
  return m;
}

}  // namespace liecoh
