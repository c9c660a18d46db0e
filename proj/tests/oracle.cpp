#include "oracle.hpp"

#include <algorithm>

namespace oracle {

namespace {

std::int64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All k-subsets in plain lexicographic order (not the engine's colex).
std::vector<std::vector<int>> lex_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out = {{}};
  return out;
}

// Evaluates the basis cochain (S, value placeholder) on an arbitrary
// argument tuple: 0 on repeats, otherwise the sorting sign if the sorted
// tuple equals S.
int alternating_sign(std::vector<int> args, const std::vector<int>& S) {
  int sign = 1;
  for (std::size_t i = 0; i < args.size(); ++i)
    for (std::size_t j = i + 1; j < args.size(); ++j) {
      if (args[i] == args[j]) return 0;
      if (args[i] > args[j]) {
        std::swap(args[i], args[j]);
        sign = -sign;
      }
    }
  return args == S ? sign : 0;
}

}  // namespace

int dense_rank(Mat m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (int cc = 0; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

Mat to_dense(const liecoh::SparseMatrix& m) {
  Mat out(m.rows(), std::vector<Rational>(m.cols(), Rational(0)));
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r)) out[r][e.col] = e.value;
  return out;
}

Mat dense_differential(const LieAlgebra& L, const Representation& R, int n) {
  const int N = L.dim();
  const int M = R.module_dim();
  const auto src = lex_subsets(N, n);
  const auto dst = lex_subsets(N, n + 1);
  const std::int64_t cols = choose(N, n) * M;
  const std::int64_t rows = choose(N, n + 1) * M;
  Mat out(rows, std::vector<Rational>(cols, Rational(0)));

  for (std::size_t ti = 0; ti < dst.size(); ++ti) {
    const std::vector<int>& T = dst[ti];
    for (std::size_t si = 0; si < src.size(); ++si) {
      const std::vector<int>& S = src[si];
      for (int a = 0; a < M; ++a) {
        // value of (d phi_{S,a})(T) as a dense module vector
        std::vector<Rational> val(M, Rational(0));

        for (int i = 0; i <= n; ++i) {
          std::vector<int> rest;
          for (int j = 0; j <= n; ++j)
            if (j != i) rest.push_back(T[j]);
          const int s = alternating_sign(rest, S);
          if (s == 0) continue;
          for (int b = 0; b < M; ++b) {
            const Rational c = R.action(T[i]).at(b, a);
            if (!c.is_zero()) val[b] += Rational(s * ((i % 2) ? -1 : 1)) * c;
          }
        }

        for (int i = 0; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            std::vector<int> rest;
            for (int t = 0; t <= n; ++t)
              if (t != i && t != j) rest.push_back(T[t]);
            for (const auto& [k, c] : L.bracket_basis(T[i], T[j])) {
              std::vector<int> args{k};
              args.insert(args.end(), rest.begin(), rest.end());
              const int s = alternating_sign(args, S);
              if (s == 0) continue;
              val[a] += Rational(s * (((i + j) % 2) ? -1 : 1)) * c;
            }
          }

        for (int b = 0; b < M; ++b)
          if (!val[b].is_zero()) out[ti * M + b][si * M + a] = val[b];
      }
    }
  }
  return out;
}

DenseDims dense_cohomology(const LieAlgebra& L, const Representation& R, int n) {
  DenseDims d{};
  d.dim_C = choose(L.dim(), n) * R.module_dim();
  const std::int64_t rank_n = dense_rank(dense_differential(L, R, n));
  const std::int64_t rank_prev = n == 0 ? 0 : dense_rank(dense_differential(L, R, n - 1));
  d.dim_Z = d.dim_C - rank_n;
  d.dim_B = rank_prev;
  d.dim_H = d.dim_Z - d.dim_B;
  return d;
}

}  // namespace oracle
