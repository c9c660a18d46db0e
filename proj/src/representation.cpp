#include "liecoh/representation.hpp"

#include <stdexcept>

namespace liecoh {

Representation::Representation(LieAlgebra algebra, int module_dim,
                               std::vector<SparseMatrix> actions)
    : algebra_(std::move(algebra)), module_dim_(module_dim), actions_(std::move(actions)) {
  if (module_dim_ < 0) throw std::invalid_argument("Representation: negative module dimension");
  if (static_cast<int>(actions_.size()) != algebra_.dim())
    throw std::invalid_argument("Representation: one action matrix per basis element required");
  for (const auto& a : actions_)
    if (a.rows() != module_dim_ || a.cols() != module_dim_)
      throw std::invalid_argument("Representation: action matrix shape mismatch");
}

std::vector<std::pair<int, int>> Representation::violations() const {
  std::vector<std::pair<int, int>> out;
  const int n = algebra_.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      SparseMatrix lhs = actions_[i].multiply(actions_[j]);
      SparseMatrix rhs = actions_[j].multiply(actions_[i]);
      MatrixBuilder residual(module_dim_, module_dim_);
      for (int r = 0; r < module_dim_; ++r) {
        for (const auto& e : lhs.row(r)) residual.add(r, e.col, e.value);
        for (const auto& e : rhs.row(r)) residual.add(r, e.col, -e.value);
      }
      for (const auto& [k, c] : algebra_.bracket_basis(i, j))
        for (int r = 0; r < module_dim_; ++r)
          for (const auto& e : actions_[k].row(r)) residual.add(r, e.col, -(c * e.value));
      if (!residual.build().is_zero()) out.emplace_back(i, j);
    }
  return out;
}

Representation adjoint_rep(const LieAlgebra& L) {
  const int n = L.dim();
  std::vector<SparseMatrix> actions;
  actions.reserve(n);
  for (int i = 0; i < n; ++i) {
    MatrixBuilder b(n, n);
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : L.bracket_basis(i, j)) b.add(k, j, c);
    actions.push_back(b.build());
  }
  return Representation(L, n, std::move(actions));
}

Representation trivial_rep(const LieAlgebra& L, int module_dim) {
  std::vector<SparseMatrix> actions(L.dim(), SparseMatrix(module_dim, module_dim));
  return Representation(L, module_dim, std::move(actions));
}

Representation restrict_rep(const Representation& R, const std::vector<int>& sub) {
  LieAlgebra s = R.algebra().subalgebra(sub);  // validates closure
  std::vector<SparseMatrix> actions;
  actions.reserve(sub.size());
  for (int i : sub) actions.push_back(R.action(i));
  return Representation(std::move(s), R.module_dim(), std::move(actions));
}

Representation ideal_rep(const LieAlgebra& L, const std::vector<int>& ideal) {
  std::vector<int> pos(L.dim(), -1);
  for (std::size_t a = 0; a < ideal.size(); ++a) {
    if (ideal[a] < 0 || ideal[a] >= L.dim())
      throw std::out_of_range("ideal_rep: index out of bounds");
    pos[ideal[a]] = static_cast<int>(a);
  }
  const int m = static_cast<int>(ideal.size());
  std::vector<SparseMatrix> actions;
  actions.reserve(L.dim());
  for (int x = 0; x < L.dim(); ++x) {
    MatrixBuilder b(m, m);
    for (int a = 0; a < m; ++a)
      for (const auto& [k, c] : L.bracket_basis(x, ideal[a])) {
        if (pos[k] < 0) throw std::invalid_argument("ideal_rep: index set is not an ideal");
        b.add(pos[k], a, c);
      }
    actions.push_back(b.build());
  }
  return Representation(L, m, std::move(actions));
}

}  // namespace liecoh
