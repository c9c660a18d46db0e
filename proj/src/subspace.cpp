#include "liecoh/subspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "liecoh/elimination.hpp"
#include "liecoh/sparse_matrix.hpp"

namespace liecoh {

namespace {

using SparseRow = SubspaceBasis::SparseRow;

const Rational* find_col(const SparseRow& row, int c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) return &it->second;
  return nullptr;
}

// target -= f * src, merging sorted sparse rows.
SparseRow axpy(const SparseRow& target, const Rational& f, const SparseRow& src) {
  SparseRow out;
  out.reserve(target.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < src.size()) {
    int ci = i < target.size() ? target[i].first : -1;
    int cj = j < src.size() ? src[j].first : -1;
    if (cj < 0 || (ci >= 0 && ci < cj)) {
      out.push_back(target[i++]);
    } else if (ci < 0 || cj < ci) {
      out.emplace_back(cj, -(f * src[j].second));
      ++j;
    } else {
      Rational v = target[i].second - f * src[j].second;
      if (!v.is_zero()) out.emplace_back(ci, v);
      ++i;
      ++j;
    }
  }
  return out;
}

// In-place Gauss-Jordan to the unique reduced row-echelon form. Pivot for
// each column is the first remaining row with a nonzero there; after the
// sweep the surviving rows are sorted by pivot column.
void rref(std::vector<SparseRow>& rows, int ambient, std::vector<int>& pivots) {
  pivots.clear();
  std::size_t next = 0;
  for (int c = 0; c < ambient && next < rows.size(); ++c) {
    std::size_t sel = rows.size();
    for (std::size_t i = next; i < rows.size(); ++i) {
      if (!rows[i].empty() && rows[i].front().first == c) {
        sel = i;
        break;
      }
    }
    if (sel == rows.size()) continue;
    std::swap(rows[next], rows[sel]);
    SparseRow& prow = rows[next];
    const Rational lead = prow.front().second;
    if (lead != Rational(1))
      for (auto& [col, v] : prow) v /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next) continue;
      if (const Rational* f = find_col(rows[i], c)) rows[i] = axpy(rows[i], *f, prow);
    }
    pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
}

}  // namespace

SubspaceBasis SubspaceBasis::from_sparse_rows(int ambient_dim, std::vector<SparseRow> spanning) {
  for (const auto& row : spanning)
    for (const auto& [c, v] : row)
      if (c < 0 || c >= ambient_dim) throw std::out_of_range("SubspaceBasis: index out of bounds");
  SubspaceBasis b(ambient_dim);
  rref(spanning, ambient_dim, b.pivots_);
  b.rows_ = std::move(spanning);
  return b;
}

SubspaceBasis SubspaceBasis::from_vectors(int ambient_dim,
                                          const std::vector<std::vector<Rational>>& spanning) {
  std::vector<SparseRow> rows;
  rows.reserve(spanning.size());
  for (const auto& v : spanning) {
    if (static_cast<int>(v.size()) != ambient_dim)
      throw std::invalid_argument("SubspaceBasis: vector length mismatch");
    SparseRow row;
    for (int c = 0; c < ambient_dim; ++c)
      if (!v[c].is_zero()) row.emplace_back(c, v[c]);
    rows.push_back(std::move(row));
  }
  return from_sparse_rows(ambient_dim, std::move(rows));
}

std::vector<Rational> SubspaceBasis::vector(int i) const {
  std::vector<Rational> out(ambient_, Rational(0));
  for (const auto& [c, v] : rows_.at(i)) out[c] = v;
  return out;
}

bool SubspaceBasis::contains(std::vector<Rational> v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("SubspaceBasis: vector length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational& f = v[pivots_[i]];
    if (f.is_zero()) continue;
    const Rational coeff = f;  // row leads with 1
    for (const auto& [c, w] : rows_[i]) v[c] -= coeff * w;
  }
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  const int n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return SubspaceBasis(n);

  // Solve A^T u = B^T w: the kernel of [A^T | -B^T] parameterizes the
  // intersection, and u -> A^T u is injective because each basis is
  // independent.
  std::vector<std::vector<std::pair<int, Rational>>> columns(a.dim() + b.dim());
  for (int j = 0; j < a.dim(); ++j) columns[j] = a.rows()[j];
  for (int j = 0; j < b.dim(); ++j) {
    columns[a.dim() + j] = b.rows()[j];
    for (auto& [c, v] : columns[a.dim() + j]) v = -v;
  }
  SparseMatrix system = SparseMatrix::from_columns(n, a.dim() + b.dim(), std::move(columns));
  SubspaceBasis coeffs = kernel_basis(system);

  std::vector<std::vector<Rational>> vectors;
  vectors.reserve(coeffs.dim());
  for (int k = 0; k < coeffs.dim(); ++k) {
    std::vector<Rational> w(n, Rational(0));
    for (const auto& [j, u] : coeffs.rows()[k]) {
      if (j >= a.dim()) continue;
      for (const auto& [c, v] : a.rows()[j]) w[c] += u * v;
    }
    vectors.push_back(std::move(w));
  }
  return SubspaceBasis::from_vectors(n, vectors);
}

}  // namespace liecoh
