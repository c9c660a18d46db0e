#ifndef LIECOH_COCHAIN_HPP
#define LIECOH_COCHAIN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "liecoh/elimination.hpp"
#include "liecoh/representation.hpp"
#include "liecoh/sparse_matrix.hpp"
#include "liecoh/subspace.hpp"

namespace liecoh {

/// Exact binomial coefficient; throws on overflow past 2^62.
std::int64_t binomial(int n, int k);

/// Colexicographic rank of a strictly increasing k-subset: sum of
/// C(S[t], t+1). The rank does not depend on the ambient size; n_total is
/// taken for bounds checking only.
std::int64_t combo_rank(const std::vector<int>& subset, int n_total);

/// Inverse of combo_rank for k-subsets.
std::vector<int> combo_unrank(std::int64_t rank, int k, int n_total);

/// All k-subsets of {0..n_total-1} in colexicographic order.
std::vector<std::vector<int>> all_subsets(int k, int n_total);

/// Flat indexing of the cochain basis of C^n(g, M): basis element (S, a)
/// with S an n-subset of the algebra basis in colex-ranked order and a a
/// module index maps to combo_rank(S) * module_dim + a.
struct CochainIndexing {
  int algebra_dim;
  int module_dim;
  int degree;

  std::int64_t dim() const;
  std::int64_t index(const std::vector<int>& subset, int a) const;
  std::pair<std::vector<int>, int> unindex(std::int64_t flat) const;
};

struct ComputeOptions {
  bool emit_bases = false;
  bool fast_rank = false;  // modular accelerator for rank-only quantities
  int threads = 0;
};

/// Matrix of the Chevalley-Eilenberg differential d^n : C^n(g,M) ->
/// C^(n+1)(g,M) under the canonical indexing. Assembled column by column;
/// columns are independent and run on OpenMP workers.
SparseMatrix differential_matrix(const LieAlgebra& L, const Representation& R, int n,
                                 const ComputeOptions& opts = {});

/// Exact sparse check that d^(n+1) after d^n is the zero map.
bool d_squared_is_zero(const LieAlgebra& L, const Representation& R, int n,
                       const ComputeOptions& opts = {});

struct DegreeReport {
  std::int64_t dim_C = 0;
  std::int64_t dim_Z = 0;
  std::int64_t dim_B = 0;
  std::int64_t dim_H = 0;
  std::optional<SubspaceBasis> cocycle_basis;
  std::optional<SubspaceBasis> coboundary_basis;
};

struct CohomologyReport {
  std::map<int, DegreeReport> degrees;
};

/// Dimension report per requested degree: dim_Z = dim C^n - rank d^n,
/// dim_B = rank d^(n-1) (zero in degree 0), dim_H their difference.
CohomologyReport cohomology(const LieAlgebra& L, const Representation& R,
                            const std::set<int>& degrees, const ComputeOptions& opts = {});

/// Der(g) = Z^1(g, ad): kernel basis of the degree-1 adjoint differential.
SubspaceBasis derivation_space(const LieAlgebra& L, const ComputeOptions& opts = {});

}  // namespace liecoh

#endif
