#ifndef LIECOH_EQUIVARIANCE_HPP
#define LIECOH_EQUIVARIANCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "liecoh/cochain.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/representation.hpp"

namespace liecoh {

/// Matrix of the transform w -> x.w on C^n(r, M), where r is an ideal of
/// L listed by basis indices, R is a module over L, and x indexes a basis
/// element of L:
///   (x.w)(e_1..e_n) = x.w(e_1..e_n) - sum_i w(e_1.., [x, e_i], .., e_n).
/// Degree 0 is the module action alone. Throws if r is not an ideal.
SparseMatrix action_matrix(const LieAlgebra& L, const std::vector<int>& ideal,
                           const Representation& R, int degree, int x);

struct InvariantReport {
  int degree = 0;
  std::int64_t dim_Z_inv = 0;  // dim of Z^q(r,M) cut with every s-kernel
  std::int64_t dim_B_inv = 0;  // dim of B^q(r,M) meet that space
  std::int64_t dim_H_inv = 0;
  std::optional<SubspaceBasis> invariant_cocycle_basis;
};

/// Invariant cocycle/coboundary/cohomology dimensions of the radical with
/// values in M: the invariant cocycles come from one elimination of the
/// differential stacked with all semisimple-generator action matrices, and
/// the coboundary part is cut out with the exact subspace intersection.
InvariantReport invariant_cohomology(const LieAlgebra& L, const LeviData& levi,
                                     const Representation& R, int q,
                                     const ComputeOptions& opts = {});

struct HSTerm {
  int s_degree = 0;       // m
  int inv_degree = 0;     // n = p - m
  std::int64_t dim_s = 0;    // dim H^m(s, C)
  std::int64_t dim_inv = 0;  // dim H^n(r, M)^s
};

struct HSReport {
  int degree = 0;
  std::int64_t predicted_dim = 0;  // sum over m+n=p of dim_s * dim_inv
  std::int64_t direct_dim = 0;     // dim H^p(g, M)
  bool match = false;
  std::vector<HSTerm> terms;
};

/// Cross-check of the semidirect-product factorization: the predicted
/// dimension from the semisimple part's trivial cohomology and the
/// invariant cohomology of the radical, against the directly computed
/// dim H^p(g, M).
HSReport hochschild_serre_check(const LieAlgebra& L, const LeviData& levi,
                                const Representation& R, int p,
                                const ComputeOptions& opts = {});

/// dim of the s-invariant k-cochains of the abelian radical V valued in V
/// itself, i.e. Hom_s(Lambda^k V, V). Requires the radical to be abelian,
/// which makes the differential on those cochains vanish.
std::int64_t hom_invariants_dim(const LieAlgebra& L, const LeviData& levi, int k,
                                const ComputeOptions& opts = {});

}  // namespace liecoh

#endif
