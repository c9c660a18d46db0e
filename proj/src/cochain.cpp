#include "liecoh/cochain.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "liecoh/threads.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liecoh {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > (static_cast<unsigned __int128>(1) << 62))
      throw std::overflow_error("binomial: value exceeds 2^62");
  }
  return static_cast<std::int64_t>(acc);
}

std::int64_t combo_rank(const std::vector<int>& subset, int n_total) {
  std::int64_t r = 0;
  int prev = -1;
  for (std::size_t t = 0; t < subset.size(); ++t) {
    if (subset[t] <= prev || subset[t] >= n_total)
      throw std::invalid_argument("combo_rank: malformed subset");
    prev = subset[t];
    r += binomial(subset[t], static_cast<int>(t) + 1);
  }
  return r;
}

std::vector<int> combo_unrank(std::int64_t rank, int k, int n_total) {
  if (k < 0 || rank < 0 || rank >= binomial(n_total, k))
    throw std::invalid_argument("combo_unrank: rank out of range");
  std::vector<int> out(k);
  for (int t = k - 1; t >= 0; --t) {
    // largest c with C(c, t+1) <= rank
    int c = t;  // C(t, t+1) = 0
    while (binomial(c + 1, t + 1) <= rank) ++c;
    out[t] = c;
    rank -= binomial(c, t + 1);
  }
  return out;
}

std::vector<std::vector<int>> all_subsets(int k, int n_total) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n_total) return out;
  std::int64_t count = binomial(n_total, k);
  out.reserve(count);
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (std::int64_t r = 0; r < count; ++r) {
    out.push_back(cur);
    // colex successor: bump the lowest slot that has room before the next
    // entry, resetting everything below it
    int t = 0;
    while (t + 1 < k && cur[t] + 1 == cur[t + 1]) ++t;
    if (t < k) {
      ++cur[t];
      for (int i = 0; i < t; ++i) cur[i] = i;
    }
  }
  return out;
}

std::int64_t CochainIndexing::dim() const {
  const std::int64_t subsets = binomial(algebra_dim, degree);
  const std::int64_t d = subsets * module_dim;
  if (module_dim != 0 && d / module_dim != subsets)
    throw std::overflow_error("CochainIndexing: dimension overflow");
  return d;
}

std::int64_t CochainIndexing::index(const std::vector<int>& subset, int a) const {
  if (static_cast<int>(subset.size()) != degree)
    throw std::invalid_argument("CochainIndexing: wrong subset size");
  if (a < 0 || a >= module_dim) throw std::out_of_range("CochainIndexing: module index");
  return combo_rank(subset, algebra_dim) * module_dim + a;
}

std::pair<std::vector<int>, int> CochainIndexing::unindex(std::int64_t flat) const {
  if (flat < 0 || flat >= dim()) throw std::out_of_range("CochainIndexing: flat index");
  return {combo_unrank(flat / module_dim, degree, algebra_dim),
          static_cast<int>(flat % module_dim)};
}

namespace {

int checked_int(std::int64_t v, const char* what) {
  if (v > std::numeric_limits<int>::max()) throw std::overflow_error(what);
  return static_cast<int>(v);
}

// Position the element x would occupy in the sorted set S (x not in S).
int insertion_pos(const std::vector<int>& s, int x) {
  return static_cast<int>(std::lower_bound(s.begin(), s.end(), x) - s.begin());
}

}  // namespace

SparseMatrix differential_matrix(const LieAlgebra& L, const Representation& R, int n,
                                 const ComputeOptions& opts) {
  if (!(R.algebra() == L)) throw std::invalid_argument("differential_matrix: R is not over L");
  if (n < 0 || n > L.dim()) throw std::invalid_argument("differential_matrix: bad degree");
  const int N = L.dim();
  const int M = R.module_dim();
  const CochainIndexing src{N, M, n};
  const CochainIndexing dst{N, M, n + 1};
  const int cols = checked_int(src.dim(), "differential_matrix: source too large");
  const int rows = checked_int(dst.dim(), "differential_matrix: target too large");

  // column access into the module actions
  std::vector<SparseMatrix> actions_t;
  actions_t.reserve(N);
  for (int x = 0; x < N; ++x) actions_t.push_back(R.action(x).transpose());

  const auto subsets = all_subsets(n, N);
  std::vector<std::vector<std::pair<int, Rational>>> columns(cols);

  const int threads = resolve_threads(opts.threads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads) \
    if (subsets.size() > 1 && threads > 1)
#endif
  for (std::int64_t sr = 0; sr < static_cast<std::int64_t>(subsets.size()); ++sr) {
    const std::vector<int>& S = subsets[sr];
    std::vector<char> in_S(N, 0);
    for (int s : S) in_S[s] = 1;
    std::vector<int> T(n + 1);

    for (int a = 0; a < M; ++a) {
      auto& col = columns[sr * M + a];

      // action term: sum over i of (-1)^i e_i . phi(... without e_i ...),
      // i.e. for each x outside S the (n+1)-set S u {x} picks up the
      // module action of x on the values.
      for (int x = 0; x < N; ++x) {
        if (in_S[x]) continue;
        const int pos = insertion_pos(S, x);
        T.assign(S.begin(), S.end());
        T.insert(T.begin() + pos, x);
        const std::int64_t base = combo_rank(T, N) * M;
        const bool neg = pos % 2 != 0;
        for (const auto& e : actions_t[x].row(a)) {
          // e = (module row b, value)
          col.emplace_back(static_cast<int>(base + e.col), neg ? -e.value : e.value);
        }
      }

      // bracket term: phi([e_u,e_v], rest). The basis cochain (S, a) is hit
      // when the bracket coefficient lands on some k in S and the target
      // set is (S \ k) u {u, v}.
      for (const auto& [uv, terms] : L.brackets()) {
        const auto& [u, v] = uv;
        for (const auto& [k, c] : terms) {
          if (!in_S[k]) continue;
          if ((in_S[u] && u != k) || (in_S[v] && v != k)) continue;
          if (u == k && v == k) continue;  // impossible, u < v
          T.clear();
          for (int s : S)
            if (s != k) T.push_back(s);
          T.insert(T.begin() + insertion_pos(T, u), u);
          T.insert(T.begin() + insertion_pos(T, v), v);
          const int i = insertion_pos(T, u);      // u's position in sorted T
          const int j = insertion_pos(T, v + 1) - 1;  // v's position
          const int q = insertion_pos(S, k + 1) - 1;  // k's position in S
          const std::int64_t row = combo_rank(T, N) * M + a;
          const bool neg = (i + j + q) % 2 != 0;
          col.emplace_back(static_cast<int>(row), neg ? -c : c);
        }
      }
    }
  }
  return SparseMatrix::from_columns(rows, cols, std::move(columns));
}

bool d_squared_is_zero(const LieAlgebra& L, const Representation& R, int n,
                       const ComputeOptions& opts) {
  SparseMatrix dn = differential_matrix(L, R, n, opts);
  SparseMatrix dn1 = differential_matrix(L, R, n + 1, opts);
  return dn1.multiply(dn).is_zero();
}

CohomologyReport cohomology(const LieAlgebra& L, const Representation& R,
                            const std::set<int>& degrees, const ComputeOptions& opts) {
  for (int n : degrees)
    if (n < 0 || n > L.dim())
      throw std::invalid_argument("cohomology: degree out of range");
  const ElimOptions elim{opts.threads};

  std::map<int, SparseMatrix> diffs;
  auto diff_of = [&](int k) -> const SparseMatrix& {
    auto it = diffs.find(k);
    if (it == diffs.end()) it = diffs.emplace(k, differential_matrix(L, R, k, opts)).first;
    return it->second;
  };
  std::map<int, std::int64_t> ranks;
  auto rank_of = [&](int k) -> std::int64_t {
    if (k < 0) return 0;
    if (CochainIndexing{L.dim(), R.module_dim(), k}.dim() == 0) return 0;
    auto it = ranks.find(k);
    if (it == ranks.end()) {
      const SparseMatrix& d = diff_of(k);
      it = ranks.emplace(k, opts.fast_rank ? rank_fast(d, elim) : rank(d, elim)).first;
    }
    return it->second;
  };

  CohomologyReport rep;
  for (int n : degrees) {
    DegreeReport r;
    r.dim_C = CochainIndexing{L.dim(), R.module_dim(), n}.dim();
    r.dim_Z = r.dim_C - rank_of(n);
    r.dim_B = rank_of(n - 1);
    r.dim_H = r.dim_Z - r.dim_B;
    if (opts.emit_bases) {
      r.cocycle_basis = kernel_basis(diff_of(n), elim);
      if (n > 0 && CochainIndexing{L.dim(), R.module_dim(), n - 1}.dim() > 0)
        r.coboundary_basis = image_basis(diff_of(n - 1), elim);
      else
        r.coboundary_basis = SubspaceBasis(checked_int(r.dim_C, "cohomology: space too large"));
    }
    rep.degrees.emplace(n, std::move(r));
  }
  return rep;
}

SubspaceBasis derivation_space(const LieAlgebra& L, const ComputeOptions& opts) {
  return kernel_basis(differential_matrix(L, adjoint_rep(L), 1, opts), ElimOptions{opts.threads});
}

}  // namespace liecoh
