#include "liecoh/elimination.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "liecoh/threads.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liecoh {

namespace {

using IntRow = std::vector<std::pair<int, mpz_class>>;

// Quotient with a hard exactness check. The fraction-free update divides
// by the pivot of the last step that touched the row; a nonzero remainder
// would mean the elimination invariant was broken.
void exact_div_assign(mpz_class& n, const mpz_class& d) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (r != 0) throw std::logic_error("elimination: inexact fraction-free division");
  mpz_swap(n.get_mpz_t(), q.get_mpz_t());
}

// Clears denominators and strips the integer content of each row. Both are
// row scalings, so rank and kernel are unchanged.
std::vector<IntRow> integerize(const SparseMatrix& m) {
  std::vector<IntRow> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    const auto& src = m.row(r);
    if (src.empty()) continue;
    mpz_class lcm = 1;
    for (const auto& e : src) {
      mpz_class den = e.value.denominator();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    IntRow row;
    row.reserve(src.size());
    mpz_class g = 0;
    for (const auto& e : src) {
      mpz_class v = e.value.numerator() * (lcm / e.value.denominator());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      row.emplace_back(e.col, std::move(v));
    }
    if (g > 1)
      for (auto& [c, v] : row) exact_div_assign(v, g);
    rows[r] = std::move(row);
  }
  return rows;
}

// out = (p*row - a*prow) / content, the pivot column skipped (it cancels
// exactly). Cross-multiplication keeps the arithmetic fraction-free;
// stripping the row content afterwards is a row scaling, so rank and
// kernel are untouched, and it removes at least the factor a one-step
// Bareiss division would (rows that skip steps need not stay divisible
// by the last pivot that touched them, the gcd always is).
IntRow fraction_free_update(const IntRow& row, const IntRow& prow, const mpz_class& p,
                            const mpz_class& a, int pivot_col) {
  IntRow out;
  out.reserve(row.size() + prow.size());
  std::size_t i = 0, j = 0;
  mpz_class v, g = 0;
  while (i < row.size() || j < prow.size()) {
    int ci = i < row.size() ? row[i].first : std::numeric_limits<int>::max();
    int cj = j < prow.size() ? prow[j].first : std::numeric_limits<int>::max();
    int c;
    if (ci < cj) {
      c = ci;
      v = p * row[i].second;
      ++i;
    } else if (cj < ci) {
      c = cj;
      v = -(a * prow[j].second);
      ++j;
    } else {
      c = ci;
      v = p * row[i].second - a * prow[j].second;
      ++i;
      ++j;
    }
    if (c == pivot_col) continue;
    if (v == 0) continue;
    if (g != 1) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.emplace_back(c, v);
  }
  if (g > 1)
    for (auto& [c, w] : out) exact_div_assign(w, g);
  return out;
}

struct PivotChoice {
  std::int64_t cost = -1;
  int row = -1;
  int col = -1;
};

struct ElimState {
  std::vector<IntRow> rows;
  std::vector<int> active;     // ascending original row indices
  std::vector<int> col_count;  // structural nonzeros per column among active rows

  explicit ElimState(const SparseMatrix& m)
      : rows(integerize(m)), col_count(m.cols(), 0) {
    for (int r = 0; r < m.rows(); ++r) {
      if (rows[r].empty()) continue;
      active.push_back(r);
      for (const auto& [c, v] : rows[r]) ++col_count[c];
    }
  }

  void drop_zero_rows() {
    active.erase(std::remove_if(active.begin(), active.end(),
                                [&](int r) { return rows[r].empty(); }),
                 active.end());
  }

  void deactivate(int r) {
    for (const auto& [c, v] : rows[r]) --col_count[c];
    active.erase(std::find(active.begin(), active.end(), r));
  }
};

}  // namespace

EchelonForm eliminate_reference(const SparseMatrix& m) {
  ElimState st(m);
  EchelonForm out;
  out.rows = m.rows();
  out.cols = m.cols();
  for (;;) {
    PivotChoice best;
    for (int r : st.active) {
      std::int64_t rn = static_cast<std::int64_t>(st.rows[r].size()) - 1;
      for (const auto& [c, v] : st.rows[r]) {
        std::int64_t cost = rn * (st.col_count[c] - 1);
        if (best.cost < 0 || cost < best.cost) best = {cost, r, c};
      }
    }
    if (best.cost < 0) break;

    const IntRow prow = st.rows[best.row];
    mpz_class p;
    for (const auto& [c, v] : prow)
      if (c == best.col) p = v;
    st.deactivate(best.row);

    for (int r : st.active) {
      const IntRow& row = st.rows[r];
      auto it = std::lower_bound(row.begin(), row.end(), best.col,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it == row.end() || it->first != best.col) continue;
      IntRow updated = fraction_free_update(row, prow, p, it->second, best.col);
      for (const auto& [c, v] : row) --st.col_count[c];
      for (const auto& [c, v] : updated) ++st.col_count[c];
      st.rows[r] = std::move(updated);
    }
    st.drop_zero_rows();

    out.pivot_cols.push_back(best.col);
    out.pivot_rows.push_back(best.row);
    out.pivot_data.push_back(prow);
    ++out.rank;
  }
  return out;
}

EchelonForm eliminate(const SparseMatrix& m, const ElimOptions& opts) {
  const int threads = resolve_threads(opts.threads);
  ElimState st(m);
  EchelonForm out;
  out.rows = m.rows();
  out.cols = m.cols();

  std::vector<int> update_rows;
  std::vector<IntRow> update_results;
  std::vector<const mpz_class*> update_vals;

  for (;;) {
    // Cheapest possible Markowitz cost for any entry of a row bounds the
    // scan: rows that cannot beat the current best are skipped outright.
    // The skip never changes the chosen pivot because later (row, col)
    // pairs lose ties anyway.
    int min_col = std::numeric_limits<int>::max();
    for (int c = 0; c < out.cols; ++c)
      if (st.col_count[c] > 0) min_col = std::min(min_col, st.col_count[c]);

    PivotChoice best;
    for (int r : st.active) {
      std::int64_t rn = static_cast<std::int64_t>(st.rows[r].size()) - 1;
      if (best.cost >= 0 && rn * (min_col - 1) >= best.cost) continue;
      for (const auto& [c, v] : st.rows[r]) {
        std::int64_t cost = rn * (st.col_count[c] - 1);
        if (best.cost < 0 || cost < best.cost) best = {cost, r, c};
      }
    }
    if (best.cost < 0) break;

    const IntRow prow = st.rows[best.row];
    mpz_class p;
    for (const auto& [c, v] : prow)
      if (c == best.col) p = v;
    st.deactivate(best.row);

    update_rows.clear();
    update_vals.clear();
    for (int r : st.active) {
      const IntRow& row = st.rows[r];
      auto it = std::lower_bound(row.begin(), row.end(), best.col,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it != row.end() && it->first == best.col) {
        update_rows.push_back(r);
        update_vals.push_back(&it->second);
      }
    }

    const int n_upd = static_cast<int>(update_rows.size());
    update_results.assign(n_upd, {});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (n_upd > 1 && threads > 1)
#endif
    for (int k = 0; k < n_upd; ++k) {
      int r = update_rows[k];
      update_results[k] = fraction_free_update(st.rows[r], prow, p, *update_vals[k], best.col);
    }
    for (int k = 0; k < n_upd; ++k) {
      int r = update_rows[k];
      for (const auto& [c, v] : st.rows[r]) --st.col_count[c];
      for (const auto& [c, v] : update_results[k]) ++st.col_count[c];
      st.rows[r] = std::move(update_results[k]);
    }
    st.drop_zero_rows();

    out.pivot_cols.push_back(best.col);
    out.pivot_rows.push_back(best.row);
    out.pivot_data.push_back(prow);
    ++out.rank;
  }
  return out;
}

int rank(const SparseMatrix& m, const ElimOptions& opts) { return eliminate(m, opts).rank; }

SubspaceBasis row_space_basis(const SparseMatrix& m, const ElimOptions& opts) {
  EchelonForm ech = eliminate(m, opts);
  std::vector<SubspaceBasis::SparseRow> rows(ech.rank);
  for (int t = 0; t < ech.rank; ++t) {
    rows[t].reserve(ech.pivot_data[t].size());
    for (const auto& [c, v] : ech.pivot_data[t]) rows[t].emplace_back(c, Rational(v));
  }
  return SubspaceBasis::from_sparse_rows(m.cols(), std::move(rows));
}

SubspaceBasis image_basis(const SparseMatrix& m, const ElimOptions& opts) {
  return row_space_basis(m.transpose(), opts);
}

SubspaceBasis kernel_basis(const SparseMatrix& m, const ElimOptions& opts) {
  EchelonForm ech = eliminate(m, opts);
  const int n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (int c : ech.pivot_cols) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  if (free_cols.empty()) return SubspaceBasis(n);

  // One kernel vector per free column: unit there, zero at the other free
  // columns, pivot coordinates solved in reverse elimination order. Row t
  // has no pivot columns of earlier steps, so the sweep closes the system.
  const int threads = resolve_threads(opts.threads);
  std::vector<std::vector<Rational>> vectors(free_cols.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) \
    if (free_cols.size() > 1 && threads > 1)
#endif
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::vector<Rational> x(n, Rational(0));
    x[free_cols[fi]] = Rational(1);
    for (int t = ech.rank - 1; t >= 0; --t) {
      const int pc = ech.pivot_cols[t];
      Rational dot(0);
      Rational pivot;
      for (const auto& [c, v] : ech.pivot_data[t]) {
        if (c == pc)
          pivot = Rational(v);
        else if (!x[c].is_zero())
          dot += Rational(v) * x[c];
      }
      x[pc] = -dot / pivot;
    }
    vectors[fi] = std::move(x);
  }
  return SubspaceBasis::from_vectors(n, vectors);
}

// ---------------------------------------------------------------------------
// Modular rank accelerator.

namespace {

constexpr std::uint64_t kRankPrimes[3] = {4611686018427387847ULL, 4611686018427387817ULL,
                                          4611686018427387787ULL};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

using ModRow = std::vector<std::pair<int, std::uint64_t>>;

// Residue of a rational; nullopt when the denominator vanishes mod p.
// mpz_fdiv_ui uses floor semantics, so negative numerators already come
// back as proper nonnegative residues.
std::optional<std::uint64_t> residue(const Rational& q, std::uint64_t p) {
  mpz_class den = q.denominator();
  std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
  if (d == 0) return std::nullopt;
  mpz_class num = q.numerator();
  std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
  return mulmod(n, powmod(d, p - 2, p), p);
}

std::optional<int> rank_mod(const SparseMatrix& m, std::uint64_t p) {
  std::vector<ModRow> rows(m.rows());
  std::vector<int> col_count(m.cols(), 0);
  std::vector<int> active;
  for (int r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) {
      auto v = residue(e.value, p);
      if (!v) return std::nullopt;
      if (*v != 0) rows[r].emplace_back(e.col, *v);
    }
    if (!rows[r].empty()) {
      active.push_back(r);
      for (const auto& [c, v] : rows[r]) ++col_count[c];
    }
  }

  int rank = 0;
  for (;;) {
    PivotChoice best;
    for (int r : active) {
      std::int64_t rn = static_cast<std::int64_t>(rows[r].size()) - 1;
      for (const auto& [c, v] : rows[r]) {
        std::int64_t cost = rn * (col_count[c] - 1);
        if (best.cost < 0 || cost < best.cost) best = {cost, r, c};
      }
    }
    if (best.cost < 0) break;

    ModRow prow = rows[best.row];
    std::uint64_t pval = 0;
    for (const auto& [c, v] : prow)
      if (c == best.col) pval = v;
    for (const auto& [c, v] : prow) --col_count[c];
    active.erase(std::find(active.begin(), active.end(), best.row));
    const std::uint64_t inv = powmod(pval, p - 2, p);

    for (int r : active) {
      ModRow& row = rows[r];
      auto it = std::lower_bound(row.begin(), row.end(), best.col,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it == row.end() || it->first != best.col) continue;
      const std::uint64_t f = mulmod(it->second, inv, p);
      ModRow out;
      out.reserve(row.size() + prow.size());
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < prow.size()) {
        int ci = i < row.size() ? row[i].first : std::numeric_limits<int>::max();
        int cj = j < prow.size() ? prow[j].first : std::numeric_limits<int>::max();
        int c;
        std::uint64_t v;
        if (ci < cj) {
          c = ci;
          v = row[i++].second;
        } else if (cj < ci) {
          c = cj;
          v = p - mulmod(f, prow[j++].second, p);
          if (v == p) v = 0;
        } else {
          c = ci;
          std::uint64_t sub = mulmod(f, prow[j++].second, p);
          v = row[i++].second;
          v = v >= sub ? v - sub : v + p - sub;
        }
        if (c != best.col && v != 0) out.emplace_back(c, v);
      }
      for (const auto& [c, v] : row) --col_count[c];
      for (const auto& [c, v] : out) ++col_count[c];
      row = std::move(out);
    }
    active.erase(std::remove_if(active.begin(), active.end(),
                                [&](int r) { return rows[r].empty(); }),
                 active.end());
    ++rank;
  }
  return rank;
}

}  // namespace

std::optional<int> rank_mod_primes(const SparseMatrix& m, const ElimOptions& opts) {
  const int threads = resolve_threads(opts.threads);
  std::optional<int> results[3];
#ifdef _OPENMP
#pragma omp parallel for num_threads(std::min(threads, 3)) if (threads > 1)
#endif
  for (int i = 0; i < 3; ++i) results[i] = rank_mod(m, kRankPrimes[i]);
  for (int i = 0; i < 3; ++i)
    if (!results[i]) return std::nullopt;
  if (*results[0] != *results[1] || *results[1] != *results[2]) return std::nullopt;
  return results[0];
}

int rank_fast(const SparseMatrix& m, const ElimOptions& opts) {
  if (auto r = rank_mod_primes(m, opts)) return *r;
  return rank(m, opts);
}

}  // namespace liecoh
