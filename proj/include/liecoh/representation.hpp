#ifndef LIECOH_REPRESENTATION_HPP
#define LIECOH_REPRESENTATION_HPP

#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/sparse_matrix.hpp"

namespace liecoh {

/// A module over a Lie algebra: one module_dim x module_dim action matrix
/// per algebra basis element. Owns a copy of the algebra so that values
/// stay self-contained and shareable across workers.
class Representation {
public:
  Representation(LieAlgebra algebra, int module_dim, std::vector<SparseMatrix> actions);

  const LieAlgebra& algebra() const { return algebra_; }
  int module_dim() const { return module_dim_; }
  const SparseMatrix& action(int i) const { return actions_.at(i); }

  /// Pairs (i, j), i < j, where rho([ei,ej]) != rho(ei)rho(ej) - rho(ej)rho(ei).
  std::vector<std::pair<int, int>> violations() const;

private:
  LieAlgebra algebra_;
  int module_dim_;
  std::vector<SparseMatrix> actions_;
};

/// The algebra acting on itself by the bracket: column j of rho(e_i) is
/// [e_i, e_j].
Representation adjoint_rep(const LieAlgebra& L);

/// All action matrices zero.
Representation trivial_rep(const LieAlgebra& L, int module_dim);

/// Restriction to a subalgebra (re-indexed basis), same module space.
/// Throws if the index set is not closed under the bracket.
Representation restrict_rep(const Representation& R, const std::vector<int>& sub);

/// The algebra acting on an ideal subspace: module basis is the ideal's,
/// actions are the bracket coefficients, which land in the ideal by
/// definition. Throws if they do not.
Representation ideal_rep(const LieAlgebra& L, const std::vector<int>& ideal);

}  // namespace liecoh

#endif
