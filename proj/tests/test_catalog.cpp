#include <doctest.h>

#include "liecoh/catalog.hpp"
#include "liecoh/lie_algebra.hpp"

using namespace liecoh;

TEST_CASE("cga dimension formula over the parameter grid") {
  for (int d = 1; d <= 5; ++d)
    for (int two_ell = 0; two_ell <= 6; ++two_ell) {
      auto [L, levi] = build_cga(d, two_ell);
      CHECK(L.dim() == d * (d - 1) / 2 + (two_ell + 1) * d + 3);
    }
  CHECK(build_cga(2, 0).first.dim() == 6);
  CHECK(build_cga(2, 5).first.dim() == 16);
  CHECK(build_cga(3, 1).first.dim() == 12);
}

TEST_CASE("every catalog constructor passes the Jacobi check") {
  // construction validates by default; jacobi_violations re-checked on top
  for (int d = 1; d <= 4; ++d)
    for (int two_ell = 0; two_ell <= 6; ++two_ell) {
      CHECK(build_cga(d, two_ell).first.jacobi_violations().empty());
      if (two_ell % 2 == 1)
        CHECK(build_mass_extension(d, two_ell).first.jacobi_violations().empty());
      if (two_ell % 2 == 0 && d == 2)
        CHECK(build_exotic_extension(two_ell).first.jacobi_violations().empty());
    }
  CHECK(build_sl2().jacobi_violations().empty());
  for (int d = 2; d <= 5; ++d) CHECK(build_so(d).jacobi_violations().empty());
  CHECK(build_abelian(4).jacobi_violations().empty());
  for (int k = 3; k <= 7; k += 2) CHECK(build_heisenberg(k).jacobi_violations().empty());
}

TEST_CASE("declared Levi data is valid for every catalog algebra") {
  for (int d = 1; d <= 4; ++d)
    for (int two_ell = 0; two_ell <= 5; ++two_ell) {
      auto [L, levi] = build_cga(d, two_ell);
      CHECK(check_levi(L, levi).valid());
      if (two_ell % 2 == 1) {
        auto [Lm, lm] = build_mass_extension(d, two_ell);
        CHECK(check_levi(Lm, lm).valid());
      }
    }
  auto [Le, le] = build_exotic_extension(2);
  CHECK(check_levi(Le, le).valid());
}

TEST_CASE("levi placement by spatial dimension") {
  auto [c3, l3] = build_cga(3, 2);
  CHECK(l3.semisimple == std::vector<int>{0, 1, 2, 3, 4, 5});  // sl2 + so(3)
  auto [c2, l2] = build_cga(2, 2);
  CHECK(l2.semisimple == std::vector<int>{0, 1, 2});  // M_{1,2} in the radical
  CHECK(l2.radical.front() == 3);
  auto [c1, l1] = build_cga(1, 2);
  CHECK(l1.semisimple == std::vector<int>{0, 1, 2});
  CHECK(l1.radical.size() == 3);
}

TEST_CASE("mass coefficients") {
  CHECK(mass_coefficient(0, 1) == Rational(-1));
  CHECK(mass_coefficient(1, 1) == Rational(1));
  CHECK(mass_coefficient(0, 3) == Rational(6));
  CHECK_THROWS_AS(mass_coefficient(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(mass_coefficient(0, 2), std::invalid_argument);

  // antisymmetry b_m = -b_{2l-m}, which is what makes the central bracket
  // antisymmetric
  for (int two_ell = 1; two_ell <= 7; two_ell += 2)
    for (int m = 0; m <= two_ell; ++m)
      CHECK(mass_coefficient(m, two_ell) == -mass_coefficient(two_ell - m, two_ell));
}

TEST_CASE("exotic coefficients") {
  CHECK(exotic_coefficient(0, 2) == Rational(2));
  CHECK(exotic_coefficient(1, 2) == Rational(-1));
  CHECK(exotic_coefficient(2, 2) == Rational(2));
  for (int two_ell = 0; two_ell <= 6; two_ell += 2)
    for (int m = 0; m <= two_ell; ++m)
      CHECK(exotic_coefficient(m, two_ell) == exotic_coefficient(two_ell - m, two_ell));
}

TEST_CASE("mass extension structure") {
  auto [s2, levi] = build_mass_extension(2, 1);  // the Schrodinger algebra
  CHECK(s2.dim() == 9);
  CHECK(levi.radical.back() == 8);  // central element joins the radical
  CHECK(build_mass_extension(1, 1).first.dim() == 6);
  CHECK(build_mass_extension(3, 1).first.dim() == 13);
  CHECK_THROWS_AS(build_mass_extension(2, 2), std::invalid_argument);

  // [P_{0,i}, P_{1,i}] = b_0 M = -M
  const int center = 8;
  auto p = [&](int n, int i) { return 4 + 2 * n + (i - 1); };
  CHECK(s2.bracket_basis(p(0, 1), p(1, 1)) == SparseVec{{center, Rational(-1)}});
  CHECK(s2.bracket_basis(p(0, 2), p(1, 2)) == SparseVec{{center, Rational(-1)}});
  CHECK(s2.bracket_basis(p(0, 1), p(1, 2)).empty());

  // the center really is central
  for (int i = 0; i < s2.dim(); ++i) CHECK(s2.bracket_basis(i, center).empty());
}

TEST_CASE("exotic extension structure") {
  auto [e0, l0] = build_exotic_extension(0);
  CHECK(e0.dim() == 7);
  // [P_{0,1}, P_{0,2}] = q_0 Theta = Theta
  CHECK(e0.bracket_basis(4, 5) == SparseVec{{6, Rational(1)}});
  CHECK_THROWS_AS(build_exotic_extension(1), std::invalid_argument);

  auto [e2, l2] = build_exotic_extension(2);
  CHECK(e2.dim() == (2 + 1) * 2 + 4 + 1);
  const int theta = e2.dim() - 1;
  auto p = [&](int n, int i) { return 4 + 2 * n + (i - 1); };
  // [P_{0,1}, P_{2,2}] = q_0 Theta, [P_{1,1}, P_{1,2}] = q_1 Theta
  CHECK(e2.bracket_basis(p(0, 1), p(2, 2)) == SparseVec{{theta, Rational(2)}});
  CHECK(e2.bracket_basis(p(1, 1), p(1, 2)) == SparseVec{{theta, Rational(-1)}});
  CHECK(e2.bracket_basis(p(0, 1), p(2, 1)).empty());  // eps_{1,1} = 0
}

TEST_CASE("radical structure: abelian for plain cga, solvable for d = 2") {
  for (int d = 1; d <= 4; ++d) {
    auto [L, levi] = build_cga(d, 2);
    if (d != 2) {
      CHECK(L.is_abelian_on(levi.radical));
    } else {
      CHECK(!L.is_abelian_on(levi.radical));  // rotation acts on translations
      // derived algebra of the radical is abelian: [r, r] lands in the P span
      LieAlgebra r = L.subalgebra(levi.radical);
      std::vector<int> derived;
      for (const auto& [ij, terms] : r.brackets())
        for (const auto& [k, c] : terms) derived.push_back(k);
      CHECK(r.is_abelian_on(derived));
    }
  }
}

TEST_CASE("mass extension modulo its center is the plain algebra") {
  for (int d = 1; d <= 3; ++d)
    for (int two_ell = 1; two_ell <= 5; two_ell += 2) {
      auto [ext, le] = build_mass_extension(d, two_ell);
      auto [plain, lp] = build_cga(d, two_ell);
      const int center = ext.dim() - 1;
      // delete the center row/col of every bracket
      LieAlgebra::BracketTable t;
      for (const auto& [ij, terms] : ext.brackets()) {
        if (ij.second == center) continue;
        SparseVec kept;
        for (const auto& [k, c] : terms)
          if (k != center) kept.emplace_back(k, c);
        if (!kept.empty()) t[ij] = kept;
      }
      LieAlgebra quotient = LieAlgebra::make(center, {}, t);
      CHECK(quotient == plain);
    }
}

TEST_CASE("d1 alias and degenerate parameters") {
  auto [a, la] = build_d1_cga(2);
  auto [b, lb] = build_cga(1, 2);
  CHECK(a == b);
  CHECK(a.dim() == 6);
  CHECK(build_d1_cga(4).first.dim() == 8);
  CHECK(la.semisimple == std::vector<int>{0, 1, 2});
  CHECK(la.radical == std::vector<int>{3, 4, 5});
  CHECK(a.is_abelian_on(la.radical));

  // l = 0 with d = 1 is permitted: sl2 plus a trivial line
  auto [z, lz] = build_cga(1, 0);
  CHECK(z.dim() == 4);
  CHECK(z.jacobi_violations().empty());
}

TEST_CASE("so(d) brackets") {
  LieAlgebra so3 = build_so(3);
  CHECK(so3.dim() == 3);
  // [M_{1,2}, M_{1,3}] = -M_{2,3}
  CHECK(so3.bracket_basis(0, 1) == SparseVec{{2, Rational(-1)}});
  CHECK(build_so(4).dim() == 6);
  CHECK_THROWS_AS(build_so(1), std::invalid_argument);
}

TEST_CASE("heisenberg and abelian") {
  LieAlgebra h3 = build_heisenberg(3);
  CHECK(h3.bracket_basis(0, 1) == SparseVec{{2, Rational(1)}});  // [p1, q1] = z
  for (int i = 0; i < 3; ++i) CHECK(h3.bracket_basis(i, 2).empty());
  CHECK_THROWS_AS(build_heisenberg(4), std::invalid_argument);

  LieAlgebra a4 = build_abelian(4);
  CHECK(a4.dim() == 4);
  CHECK(a4.brackets().empty());
}

TEST_CASE("catalog spec parsing and labels") {
  CatalogSpec s = CatalogSpec::parse("cga", 2, 3, 0);
  CHECK(s.label() == "cga(d=2,2l=3)");
  CHECK(build(s).algebra.dim() == 12);

  CHECK_THROWS_AS(CatalogSpec::parse("cga-mass", 2, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(CatalogSpec::parse("cga-exotic", 2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(CatalogSpec::parse("nope", 0, 0, 0), std::invalid_argument);

  CatalogAlgebra sch = build(CatalogSpec::parse("schrodinger", 2, 0, 0));
  CHECK(sch.algebra.dim() == 9);
  CHECK(sch.algebra == build_mass_extension(2, 1).first);

  CatalogAlgebra so2 = build(CatalogSpec::parse("so", 2, 0, 0));
  CHECK(so2.levi.semisimple.empty());  // so(2) is abelian
}
