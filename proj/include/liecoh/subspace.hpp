#ifndef LIECOH_SUBSPACE_HPP
#define LIECOH_SUBSPACE_HPP

#include <utility>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

/// Basis of a linear subspace of Q^n in reduced row-echelon normal form:
/// each vector leads with 1, that column is zero in every other basis
/// vector, and pivot columns strictly increase. The normal form is unique
/// for a given subspace, so equality of bases is equality of subspaces.
class SubspaceBasis {
public:
  using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by index

  explicit SubspaceBasis(int ambient_dim) : ambient_(ambient_dim) {}

  /// Reduces the given spanning set to the normal form; dependent or zero
  /// vectors are dropped.
  static SubspaceBasis from_vectors(int ambient_dim, const std::vector<std::vector<Rational>>& spanning);
  static SubspaceBasis from_sparse_rows(int ambient_dim, std::vector<SparseRow> spanning);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  std::vector<Rational> vector(int i) const;

  /// Membership test by reduction against the basis.
  bool contains(std::vector<Rational> v) const;

  bool operator==(const SubspaceBasis& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
  }

private:
  int ambient_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivots_;
};

/// Exact intersection of two subspaces of the same ambient space.
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace liecoh

#endif
