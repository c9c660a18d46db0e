#include "liecoh/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace liecoh {

namespace {

void add_scaled(std::vector<Rational>& acc, const Rational& f, const SparseVec& v) {
  if (f.is_zero()) return;
  for (const auto& [k, c] : v) acc[k] += f * c;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace

LieAlgebra LieAlgebra::make(int dim, std::vector<std::string> labels, BracketTable brackets,
                            bool defer_validation) {
  if (dim < 0) throw std::invalid_argument("LieAlgebra: negative dimension");
  if (labels.empty()) {
    labels.reserve(dim);
    for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != dim)
    throw std::invalid_argument("LieAlgebra: label count mismatch");

  for (auto it = brackets.begin(); it != brackets.end();) {
    const auto& [i, j] = it->first;
    if (i < 0 || j >= dim || i >= j)
      throw std::invalid_argument("LieAlgebra: bracket key must satisfy 0 <= i < j < dim");
    SparseVec& terms = it->second;
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [k, c] : terms)
      if (k < 0 || k >= dim) throw std::invalid_argument("LieAlgebra: coefficient index out of bounds");
    terms.erase(std::remove_if(terms.begin(), terms.end(),
                               [](const auto& t) { return t.second.is_zero(); }),
                terms.end());
    it = terms.empty() ? brackets.erase(it) : std::next(it);
  }

  LieAlgebra L;
  L.dim_ = dim;
  L.labels_ = std::move(labels);
  L.brackets_ = std::move(brackets);

  if (!defer_validation) {
    auto violations = L.jacobi_violations();
    if (!violations.empty()) {
      std::ostringstream msg;
      msg << "Jacobi identity fails on " << violations.size() << " basis triple(s); first at ("
          << violations[0].i << "," << violations[0].j << "," << violations[0].k << ")";
      throw JacobiError(msg.str(), std::move(violations));
    }
  }
  return L;
}

SparseVec LieAlgebra::bracket_basis(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
    throw std::out_of_range("bracket_basis: index out of bounds");
  if (i == j) return {};
  const bool flip = i > j;
  auto it = brackets_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == brackets_.end()) return {};
  SparseVec v = it->second;
  if (flip)
    for (auto& [k, c] : v) c = -c;
  return v;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& x,
                                          const std::vector<Rational>& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("bracket: length mismatch");
  std::vector<Rational> out(dim_, Rational(0));
  for (const auto& [ij, terms] : brackets_) {
    const auto& [i, j] = ij;
    const Rational f = x[i] * y[j] - x[j] * y[i];
    add_scaled(out, f, terms);
  }
  return out;
}

std::vector<JacobiViolation> LieAlgebra::jacobi_violations() const {
  std::vector<JacobiViolation> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      const SparseVec bij = bracket_basis(i, j);
      for (int k = j + 1; k < dim_; ++k) {
        std::vector<Rational> res(dim_, Rational(0));
        // [[ei,ej],ek]
        for (const auto& [m, c] : bij) add_scaled(res, c, bracket_basis(m, k));
        // [[ej,ek],ei]
        for (const auto& [m, c] : bracket_basis(j, k)) add_scaled(res, c, bracket_basis(m, i));
        // [[ek,ei],ej]
        for (const auto& [m, c] : bracket_basis(k, i)) add_scaled(res, c, bracket_basis(m, j));
        if (!all_zero(res)) out.push_back({i, j, k, std::move(res)});
      }
    }
  return out;
}

LieAlgebra LieAlgebra::subalgebra(const std::vector<int>& indices) const {
  std::vector<int> pos(dim_, -1);
  for (std::size_t a = 0; a < indices.size(); ++a) {
    int idx = indices[a];
    if (idx < 0 || idx >= dim_) throw std::out_of_range("subalgebra: index out of bounds");
    if (pos[idx] >= 0) throw std::invalid_argument("subalgebra: duplicate index");
    pos[idx] = static_cast<int>(a);
  }
  const int n = static_cast<int>(indices.size());
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) labels[a] = labels_[indices[a]];

  BracketTable table;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      SparseVec terms;
      for (const auto& [k, c] : bracket_basis(indices[a], indices[b])) {
        if (pos[k] < 0)
          throw std::invalid_argument("subalgebra: index set not closed under bracket");
        terms.emplace_back(pos[k], c);
      }
      if (terms.empty()) continue;
      std::sort(terms.begin(), terms.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      table[{a, b}] = std::move(terms);
    }
  // Closure of a Lie algebra is a Lie algebra; skip re-validation.
  return LieAlgebra::make(n, std::move(labels), std::move(table), /*defer_validation=*/true);
}

bool LieAlgebra::is_abelian_on(const std::vector<int>& indices) const {
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a + 1; b < indices.size(); ++b)
      if (!bracket_basis(indices[a], indices[b]).empty()) return false;
  return true;
}

LeviReport check_levi(const LieAlgebra& L, const LeviData& levi) {
  LeviReport rep;
  std::ostringstream detail;

  std::vector<int> seen(L.dim(), 0);
  bool in_range = true;
  for (int i : levi.semisimple)
    if (i < 0 || i >= L.dim()) in_range = false; else ++seen[i];
  for (int i : levi.radical)
    if (i < 0 || i >= L.dim()) in_range = false; else ++seen[i];
  rep.partition_ok = in_range && std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
  if (!rep.partition_ok) detail << "index sets do not partition the basis; ";

  std::vector<char> in_r(L.dim(), 0);
  for (int i : levi.radical)
    if (i >= 0 && i < L.dim()) in_r[i] = 1;

  rep.s_closed = true;
  for (std::size_t a = 0; a < levi.semisimple.size() && rep.s_closed; ++a)
    for (std::size_t b = a + 1; b < levi.semisimple.size() && rep.s_closed; ++b)
      for (const auto& [k, c] : L.bracket_basis(levi.semisimple[a], levi.semisimple[b]))
        if (in_r[k]) {
          rep.s_closed = false;
          detail << "s not closed at pair (" << levi.semisimple[a] << "," << levi.semisimple[b]
                 << "); ";
        }

  rep.r_ideal = true;
  for (int i = 0; i < L.dim() && rep.r_ideal; ++i)
    for (int j : levi.radical) {
      bool bad = false;
      for (const auto& [k, c] : L.bracket_basis(i, j))
        if (!in_r[k]) bad = true;
      if (bad) {
        rep.r_ideal = false;
        detail << "radical not an ideal at pair (" << i << "," << j << "); ";
        break;
      }
    }

  rep.detail = detail.str();
  return rep;
}

}  // namespace liecoh
