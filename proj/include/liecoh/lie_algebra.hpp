#ifndef LIECOH_LIE_ALGEBRA_HPP
#define LIECOH_LIE_ALGEBRA_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

/// Sparse coefficient vector: (basis index, value), sorted by index,
/// no zero values.
using SparseVec = std::vector<std::pair<int, Rational>>;

struct JacobiViolation {
  int i, j, k;                    // basis triple, i < j < k
  std::vector<Rational> residual;  // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
};

/// Thrown by validating constructors; carries the offending triples.
class JacobiError : public std::runtime_error {
public:
  JacobiError(std::string msg, std::vector<JacobiViolation> v)
      : std::runtime_error(std::move(msg)), violations(std::move(v)) {}
  std::vector<JacobiViolation> violations;
};

/// Finite-dimensional Lie algebra over Q presented by structure constants.
/// Only pairs i < j are stored; [ej, ei] is the negation and [ei, ei] = 0
/// by construction. Immutable after construction.
class LieAlgebra {
public:
  using BracketTable = std::map<std::pair<int, int>, SparseVec>;

  /// Validates indices and (unless deferred) the Jacobi identity on every
  /// basis triple. Throws JacobiError with the violation list otherwise.
  static LieAlgebra make(int dim, std::vector<std::string> labels, BracketTable brackets,
                         bool defer_validation = false);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const BracketTable& brackets() const { return brackets_; }

  /// [e_i, e_j] for arbitrary i, j (antisymmetry applied structurally).
  SparseVec bracket_basis(int i, int j) const;

  /// Bilinear bracket of coefficient vectors.
  std::vector<Rational> bracket(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;

  /// Empty iff the Jacobi identity holds on all basis triples i < j < k.
  std::vector<JacobiViolation> jacobi_violations() const;

  /// The subalgebra spanned by the given basis indices, re-indexed in the
  /// given order. Throws if the span is not closed under the bracket.
  LieAlgebra subalgebra(const std::vector<int>& indices) const;

  bool is_abelian_on(const std::vector<int>& indices) const;

  bool operator==(const LieAlgebra& o) const {
    return dim_ == o.dim_ && brackets_ == o.brackets_;
  }

private:
  int dim_ = 0;
  std::vector<std::string> labels_;
  BracketTable brackets_;
};

/// Declared Levi split: a semisimple subalgebra and the radical ideal.
/// Semisimplicity of the first part is not verified.
struct LeviData {
  std::vector<int> semisimple;
  std::vector<int> radical;
};

struct LeviReport {
  bool partition_ok = false;
  bool s_closed = false;
  bool r_ideal = false;
  std::string detail;
  bool valid() const { return partition_ok && s_closed && r_ideal; }
};

LeviReport check_levi(const LieAlgebra& L, const LeviData& levi);

}  // namespace liecoh

#endif
