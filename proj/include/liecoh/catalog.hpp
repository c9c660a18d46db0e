#ifndef LIECOH_CATALOG_HPP
#define LIECOH_CATALOG_HPP

#include <string>
#include <utility>

#include "liecoh/lie_algebra.hpp"

namespace liecoh {

/// Parameters selecting a built-in algebra. The spin parameter is carried
/// as the integer two_ell = 2*l to keep half-integers out of interfaces.
struct CatalogSpec {
  enum class Family { sl2, so, cga, cga_mass, cga_exotic, heisenberg, abelian, schrodinger };

  Family family = Family::cga;
  int d = 0;         // spatial dimension (cga families, so, schrodinger)
  int two_ell = 0;   // 2*l (cga families)
  int n = 0;         // size parameter (abelian: dimension, heisenberg: odd dimension)

  /// Parses the family name and validates the parameter combination.
  static CatalogSpec parse(const std::string& family, int d, int two_ell, int n);
  std::string label() const;
};

struct CatalogAlgebra {
  LieAlgebra algebra;
  LeviData levi;
  std::string label;
};

CatalogAlgebra build(const CatalogSpec& spec);

/// Conformal Galilei algebra cga_l(d): sl2 + so(d) rotations + the abelian
/// translation ideal P_{n,i}, n = 0..2l, i = 1..d. Canonical basis order is
/// H, D, C, M_{i,j} (i<j lexicographic), then P_{n,i} ordered by (n, i).
/// Levi split: s = {H,D,C} u {M} for d >= 3; for d <= 2, s = {H,D,C} and
/// any rotation goes to the radical.
std::pair<LieAlgebra, LeviData> build_cga(int d, int two_ell);

/// Central extension by the mass element M (half-integer spin only):
/// [P_{m,i}, P_{n,j}] = delta_{ij} delta_{m+n,2l} b_m M.
std::pair<LieAlgebra, LeviData> build_mass_extension(int d, int two_ell);

/// d = 2, integer spin: [P_{m,i}, P_{n,j}] = eps_{ij} delta_{m+n,2l} q_m Theta.
std::pair<LieAlgebra, LeviData> build_exotic_extension(int two_ell);

/// Alias for build_cga(1, two_ell): sl2 acting on its irreducible
/// (2l+1)-dimensional module.
std::pair<LieAlgebra, LeviData> build_d1_cga(int two_ell);

LieAlgebra build_sl2();
LieAlgebra build_so(int d);
LieAlgebra build_abelian(int n);
LieAlgebra build_heisenberg(int k);  // k = odd dimension >= 3

/// b_m = (-1)^(m+l+1/2) (2l-m)! m!; requires two_ell odd, 0 <= m <= two_ell.
Rational mass_coefficient(int m, int two_ell);

/// q_m = (-1)^m (2l-m)! m!; requires two_ell even, 0 <= m <= two_ell.
Rational exotic_coefficient(int m, int two_ell);

}  // namespace liecoh

#endif
