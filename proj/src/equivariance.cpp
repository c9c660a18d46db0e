#include "liecoh/equivariance.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecoh {

namespace {

int checked_int(std::int64_t v, const char* what) {
  if (v > std::numeric_limits<int>::max()) throw std::overflow_error(what);
  return static_cast<int>(v);
}

int insertion_pos(const std::vector<int>& s, int x) {
  return static_cast<int>(std::lower_bound(s.begin(), s.end(), x) - s.begin());
}

}  // namespace

SparseMatrix action_matrix(const LieAlgebra& L, const std::vector<int>& ideal,
                           const Representation& R, int degree, int x) {
  if (!(R.algebra() == L)) throw std::invalid_argument("action_matrix: R is not over L");
  if (x < 0 || x >= L.dim()) throw std::out_of_range("action_matrix: basis index");
  if (degree < 0) throw std::invalid_argument("action_matrix: negative degree");
  const int Nr = static_cast<int>(ideal.size());
  const int M = R.module_dim();

  std::vector<int> pos(L.dim(), -1);
  for (int t = 0; t < Nr; ++t) {
    if (ideal[t] < 0 || ideal[t] >= L.dim())
      throw std::out_of_range("action_matrix: ideal index out of bounds");
    pos[ideal[t]] = t;
  }
  // whole-algebra ideality, not just closure under the given x
  for (int v = 0; v < L.dim(); ++v)
    for (int t = 0; t < Nr; ++t)
      for (const auto& [k, c] : L.bracket_basis(v, ideal[t]))
        if (pos[k] < 0) throw std::invalid_argument("action_matrix: index set is not an ideal");
  // [x, e_t] expanded in the ideal's own coordinates
  std::vector<SparseVec> slide(Nr);
  for (int t = 0; t < Nr; ++t)
    for (const auto& [k, c] : L.bracket_basis(x, ideal[t])) slide[t].emplace_back(pos[k], c);

  const CochainIndexing ix{Nr, M, degree};
  const int dim = checked_int(ix.dim(), "action_matrix: cochain space too large");
  const SparseMatrix action_t = R.action(x).transpose();

  const auto subsets = all_subsets(degree, Nr);
  std::vector<std::vector<std::pair<int, Rational>>> columns(dim);
  std::vector<int> T;
  for (std::int64_t sr = 0; sr < static_cast<std::int64_t>(subsets.size()); ++sr) {
    const std::vector<int>& S = subsets[sr];
    std::vector<char> in_S(Nr, 0);
    for (int s : S) in_S[s] = 1;
    const std::int64_t self = sr * M;

    for (int a = 0; a < M; ++a) {
      auto& col = columns[self + a];
      // module action term, diagonal in the subset
      for (const auto& e : action_t.row(a)) col.emplace_back(static_cast<int>(self + e.col), e.value);
      // substitution terms: -sum_i w(.., [x, e_i], ..). Each coefficient
      // of [x, e_t] landing on s in S moves the cochain to (S \ s) u {t}.
      for (int t = 0; t < Nr; ++t)
        for (const auto& [s, c] : slide[t]) {
          if (!in_S[s]) continue;
          if (in_S[t] && t != s) continue;
          T.clear();
          for (int e : S)
            if (e != s) T.push_back(e);
          const int i = insertion_pos(T, t);
          T.insert(T.begin() + i, t);
          const int q = insertion_pos(S, s + 1) - 1;
          const std::int64_t row = combo_rank(T, Nr) * M + a;
          const bool neg = (i - q) % 2 == 0;  // overall minus times (-1)^(i-q)
          col.emplace_back(static_cast<int>(row), neg ? -c : c);
        }
    }
  }
  return SparseMatrix::from_columns(dim, dim, std::move(columns));
}

InvariantReport invariant_cohomology(const LieAlgebra& L, const LeviData& levi,
                                     const Representation& R, int q,
                                     const ComputeOptions& opts) {
  LeviReport check = check_levi(L, levi);
  if (!check.valid())
    throw std::invalid_argument("invariant_cohomology: invalid Levi data: " + check.detail);
  if (q < 0 || q > static_cast<int>(levi.radical.size()))
    throw std::invalid_argument("invariant_cohomology: degree out of range");

  const ElimOptions elim{opts.threads};
  const Representation R_r = restrict_rep(R, levi.radical);
  const SparseMatrix d_q = differential_matrix(R_r.algebra(), R_r, q, opts);

  // One kernel for Z^q cut with all invariance conditions.
  std::vector<SparseMatrix> gen_actions;
  std::vector<const SparseMatrix*> blocks{&d_q};
  gen_actions.reserve(levi.semisimple.size());
  for (int x : levi.semisimple) {
    gen_actions.push_back(action_matrix(L, levi.radical, R, q, x));
    blocks.push_back(&gen_actions.back());
  }
  const SubspaceBasis z_inv = kernel_basis(SparseMatrix::stack_rows(blocks), elim);

  InvariantReport rep;
  rep.degree = q;
  rep.dim_Z_inv = z_inv.dim();
  if (q == 0) {
    rep.dim_B_inv = 0;  // no coboundaries in degree 0
  } else {
    const SparseMatrix d_prev = differential_matrix(R_r.algebra(), R_r, q - 1, opts);
    const SubspaceBasis b = image_basis(d_prev, elim);
    rep.dim_B_inv = intersect(b, z_inv).dim();
  }
  rep.dim_H_inv = rep.dim_Z_inv - rep.dim_B_inv;
  if (opts.emit_bases) rep.invariant_cocycle_basis = z_inv;
  return rep;
}

HSReport hochschild_serre_check(const LieAlgebra& L, const LeviData& levi,
                                const Representation& R, int p, const ComputeOptions& opts) {
  LeviReport check = check_levi(L, levi);
  if (!check.valid())
    throw std::invalid_argument("hochschild_serre_check: invalid Levi data: " + check.detail);

  // Trivial cohomology of the semisimple part, computed from scratch
  // rather than assumed to vanish.
  const LieAlgebra s = L.subalgebra(levi.semisimple);
  std::set<int> s_degrees;
  for (int m = 0; m <= p; ++m)
    if (m <= s.dim()) s_degrees.insert(m);
  ComputeOptions sub = opts;
  sub.emit_bases = false;
  const CohomologyReport s_rep = cohomology(s, trivial_rep(s, 1), s_degrees, sub);

  HSReport rep;
  rep.degree = p;
  for (int m = 0; m <= p; ++m) {
    const int n = p - m;
    HSTerm term;
    term.s_degree = m;
    term.inv_degree = n;
    term.dim_s = m <= s.dim() ? s_rep.degrees.at(m).dim_H : 0;
    // every factor is computed, so the report exposes each term even when
    // the product vanishes
    if (n <= static_cast<int>(levi.radical.size()))
      term.dim_inv = invariant_cohomology(L, levi, R, n, sub).dim_H_inv;
    rep.predicted_dim += term.dim_s * term.dim_inv;
    rep.terms.push_back(term);
  }
  rep.direct_dim = cohomology(L, R, {p}, sub).degrees.at(p).dim_H;
  rep.match = rep.predicted_dim == rep.direct_dim;
  return rep;
}

std::int64_t hom_invariants_dim(const LieAlgebra& L, const LeviData& levi, int k,
                                const ComputeOptions& opts) {
  LeviReport check = check_levi(L, levi);
  if (!check.valid())
    throw std::invalid_argument("hom_invariants_dim: invalid Levi data: " + check.detail);
  if (!L.is_abelian_on(levi.radical))
    throw std::invalid_argument("hom_invariants_dim: radical is not abelian");
  if (k < 0 || k > static_cast<int>(levi.radical.size())) return 0;

  // V abelian and acting trivially on itself kills the differential on
  // C^*(V, V), so invariant cochains are exactly Hom_s(Lambda^k V, V).
  const Representation R_V = ideal_rep(L, levi.radical);
  const CochainIndexing ix{static_cast<int>(levi.radical.size()),
                           static_cast<int>(levi.radical.size()), k};
  if (levi.semisimple.empty()) return ix.dim();

  std::vector<SparseMatrix> gen_actions;
  std::vector<const SparseMatrix*> blocks;
  gen_actions.reserve(levi.semisimple.size());
  for (int x : levi.semisimple) {
    gen_actions.push_back(action_matrix(L, levi.radical, R_V, k, x));
    blocks.push_back(&gen_actions.back());
  }
  const SparseMatrix stacked = SparseMatrix::stack_rows(blocks);
  return ix.dim() - rank(stacked, ElimOptions{opts.threads});
}

}  // namespace liecoh
