#ifndef LIECOH_ELIMINATION_HPP
#define LIECOH_ELIMINATION_HPP

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "liecoh/sparse_matrix.hpp"
#include "liecoh/subspace.hpp"

namespace liecoh {

struct ElimOptions {
  int threads = 0;  // 0 = resolve via LIECOH_THREADS / OpenMP default
};

/// Result of fraction-free forward elimination. Pivot rows are frozen at
/// the moment they were chosen: row t has zeros at the pivot columns of
/// steps 0..t-1 and an exact nonzero integer at pivot_cols[t].
struct EchelonForm {
  int rows = 0;
  int cols = 0;
  int rank = 0;
  std::vector<int> pivot_cols;  // elimination order
  std::vector<int> pivot_rows;  // original row indices, elimination order
  std::vector<std::vector<std::pair<int, mpz_class>>> pivot_data;

  bool operator==(const EchelonForm& o) const {
    return rows == o.rows && cols == o.cols && rank == o.rank &&
           pivot_cols == o.pivot_cols && pivot_rows == o.pivot_rows &&
           pivot_data == o.pivot_data;
  }
};

/// Sparse fraction-free (one-step Bareiss) elimination over the integers
/// after clearing row denominators. Pivots minimize the Markowitz fill
/// count (row_nnz-1)*(col_nnz-1); ties break on the smallest original
/// (row, col) pair, so the result is deterministic. Row updates within a
/// step run on OpenMP workers and are bit-identical to the serial pass.
EchelonForm eliminate(const SparseMatrix& m, const ElimOptions& opts = {});

/// Straight-line serial implementation of the same elimination, kept as
/// the reference the parallel kernel is tested and benchmarked against.
EchelonForm eliminate_reference(const SparseMatrix& m);

/// Exact rank over Q.
int rank(const SparseMatrix& m, const ElimOptions& opts = {});

/// Rank accelerator: Gaussian elimination modulo three fixed 62-bit primes
/// (4611686018427387847, 4611686018427387817, 4611686018427387787).
/// Returns the common value when all three agree and every denominator is
/// invertible; otherwise nullopt, and the caller falls back to the exact
/// path. Modular rank can only undershoot, never exceed, the true rank.
std::optional<int> rank_mod_primes(const SparseMatrix& m, const ElimOptions& opts = {});

/// Rank with the accelerator enabled: unanimous modular agreement is
/// accepted, anything else falls back to exact elimination.
int rank_fast(const SparseMatrix& m, const ElimOptions& opts = {});

/// Basis of {v : m v = 0} in reduced row-echelon normal form; its size is
/// cols - rank(m).
SubspaceBasis kernel_basis(const SparseMatrix& m, const ElimOptions& opts = {});

/// Reduced row-echelon basis of the row space / column space.
SubspaceBasis row_space_basis(const SparseMatrix& m, const ElimOptions& opts = {});
SubspaceBasis image_basis(const SparseMatrix& m, const ElimOptions& opts = {});

}  // namespace liecoh

#endif
