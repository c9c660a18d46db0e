#include "liecoh/catalog.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace liecoh {

namespace {

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

std::string rot_label(int i, int j) {
  std::ostringstream os;
  os << "M_{" << i << "," << j << "}";
  return os.str();
}

std::string trans_label(int n, int i) {
  std::ostringstream os;
  os << "P_{" << n << "," << i << "}";
  return os.str();
}

void push_sorted(SparseVec& v, int k, const Rational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(v.begin(), v.end(), k,
                             [](const auto& e, int idx) { return e.first < idx; });
  if (it != v.end() && it->first == k)
    it->second += c;
  else
    v.insert(it, {k, c});
}

void add_term(LieAlgebra::BracketTable& table, int a, int b, int k, const Rational& c) {
  if (c.is_zero()) return;
  if (a < b)
    push_sorted(table[{a, b}], k, c);
  else
    push_sorted(table[{b, a}], k, -c);
}

// so(d) blocks shared by build_so and build_cga. rot(i,j) maps the
// 1-based physical pair i<j to its basis index.
template <typename RotIndex>
void add_so_brackets(LieAlgebra::BracketTable& table, int d, RotIndex rot) {
  auto add_rot = [&](int a, int b, int x, int y, const Rational& c) {
    // coefficient c on M_{x,y} with arbitrary x, y
    if (x == y) return;
    if (x < y)
      add_term(table, a, b, rot(x, y), c);
    else
      add_term(table, a, b, rot(y, x), -c);
  };
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int r = k + 1; r <= d; ++r) {
          const int a = rot(i, j), b = rot(k, r);
          if (a >= b) continue;
          if (i == k) add_rot(a, b, j, r, Rational(-1));
          if (j == r) add_rot(a, b, i, k, Rational(-1));
          if (i == r) add_rot(a, b, j, k, Rational(1));
          if (j == k) add_rot(a, b, i, r, Rational(1));
        }
}

}  // namespace

Rational mass_coefficient(int m, int two_ell) {
  if (two_ell < 1 || two_ell % 2 == 0)
    throw std::invalid_argument("mass_coefficient: two_ell must be odd");
  if (m < 0 || m > two_ell) throw std::invalid_argument("mass_coefficient: m out of range");
  // exponent m + l + 1/2 = m + (two_ell+1)/2
  const int exponent = m + (two_ell + 1) / 2;
  mpz_class v = factorial(two_ell - m) * factorial(m);
  if (exponent % 2 != 0) v = -v;
  return Rational(v);
}

Rational exotic_coefficient(int m, int two_ell) {
  if (two_ell < 0 || two_ell % 2 != 0)
    throw std::invalid_argument("exotic_coefficient: two_ell must be even");
  if (m < 0 || m > two_ell) throw std::invalid_argument("exotic_coefficient: m out of range");
  mpz_class v = factorial(two_ell - m) * factorial(m);
  if (m % 2 != 0) v = -v;
  return Rational(v);
}

LieAlgebra build_sl2() {
  LieAlgebra::BracketTable t;
  t[{0, 1}] = {{0, Rational(-2)}};  // [H,D] = -2H
  t[{0, 2}] = {{1, Rational(-1)}};  // [H,C] = -D
  t[{1, 2}] = {{2, Rational(-2)}};  // [D,C] = -2C
  return LieAlgebra::make(3, {"H", "D", "C"}, std::move(t));
}

LieAlgebra build_so(int d) {
  if (d < 2) throw std::invalid_argument("build_so: d >= 2 required");
  std::vector<std::string> labels;
  std::vector<std::vector<int>> idx(d + 1, std::vector<int>(d + 1, -1));
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      idx[i][j] = static_cast<int>(labels.size());
      labels.push_back(rot_label(i, j));
    }
  LieAlgebra::BracketTable t;
  add_so_brackets(t, d, [&](int i, int j) { return idx[i][j]; });
  const int dim = static_cast<int>(labels.size());
  return LieAlgebra::make(dim, std::move(labels), std::move(t));
}

LieAlgebra build_abelian(int n) {
  if (n < 0) throw std::invalid_argument("build_abelian: n >= 0 required");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
  return LieAlgebra::make(n, std::move(labels), {});
}

LieAlgebra build_heisenberg(int k) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("build_heisenberg: odd dimension >= 3 required");
  const int n = (k - 1) / 2;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("p" + std::to_string(i));
  for (int i = 1; i <= n; ++i) labels.push_back("q" + std::to_string(i));
  labels.push_back("z");
  LieAlgebra::BracketTable t;
  for (int i = 0; i < n; ++i) t[{i, n + i}] = {{2 * n, Rational(1)}};  // [p_i, q_i] = z
  return LieAlgebra::make(k, std::move(labels), std::move(t));
}

namespace {

struct CgaLayout {
  int d, two_ell;
  int n_rot;
  int dim;
  std::vector<std::vector<int>> rot;  // 1-based pair -> index
  int trans_base;

  CgaLayout(int d_, int two_ell_) : d(d_), two_ell(two_ell_) {
    n_rot = d * (d - 1) / 2;
    trans_base = 3 + n_rot;
    dim = trans_base + (two_ell + 1) * d;
    rot.assign(d + 1, std::vector<int>(d + 1, -1));
    int next = 3;
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j) rot[i][j] = next++;
  }
  int trans(int n, int i) const { return trans_base + n * d + (i - 1); }  // i is 1-based
};

// Shared core: sl2, rotations, and their action on the translations.
void cga_skeleton(const CgaLayout& ly, std::vector<std::string>& labels,
                  LieAlgebra::BracketTable& t) {
  labels = {"H", "D", "C"};
  for (int i = 1; i <= ly.d; ++i)
    for (int j = i + 1; j <= ly.d; ++j) labels.push_back(rot_label(i, j));
  for (int n = 0; n <= ly.two_ell; ++n)
    for (int i = 1; i <= ly.d; ++i) labels.push_back(trans_label(n, i));

  t[{0, 1}] = {{0, Rational(-2)}};
  t[{0, 2}] = {{1, Rational(-1)}};
  t[{1, 2}] = {{2, Rational(-2)}};
  add_so_brackets(t, ly.d, [&](int i, int j) { return ly.rot[i][j]; });

  for (int n = 0; n <= ly.two_ell; ++n)
    for (int i = 1; i <= ly.d; ++i) {
      const int p = ly.trans(n, i);
      // [H, P_{n,i}] = -n P_{n-1,i}
      if (n > 0) add_term(t, 0, p, ly.trans(n - 1, i), Rational(-n));
      // [D, P_{n,i}] = 2(l-n) P_{n,i}
      add_term(t, 1, p, p, Rational(ly.two_ell - 2 * n));
      // [C, P_{n,i}] = (2l-n) P_{n+1,i}
      if (n < ly.two_ell) add_term(t, 2, p, ly.trans(n + 1, i), Rational(ly.two_ell - n));
      // [M_{a,b}, P_{n,k}] = -delta_{a,k} P_{n,b} + delta_{b,k} P_{n,a}
      for (int a = 1; a <= ly.d; ++a)
        for (int b = a + 1; b <= ly.d; ++b) {
          if (a == i) add_term(t, ly.rot[a][b], p, ly.trans(n, b), Rational(-1));
          if (b == i) add_term(t, ly.rot[a][b], p, ly.trans(n, a), Rational(1));
        }
    }
}

LeviData cga_levi(const CgaLayout& ly, int extra_central) {
  LeviData levi;
  levi.semisimple = {0, 1, 2};
  if (ly.d >= 3)
    for (int k = 3; k < ly.trans_base; ++k) levi.semisimple.push_back(k);
  else
    for (int k = 3; k < ly.trans_base; ++k) levi.radical.push_back(k);
  for (int k = ly.trans_base; k < ly.dim + extra_central; ++k) levi.radical.push_back(k);
  return levi;
}

}  // namespace

std::pair<LieAlgebra, LeviData> build_cga(int d, int two_ell) {
  if (d < 1) throw std::invalid_argument("build_cga: d >= 1 required");
  if (two_ell < 0) throw std::invalid_argument("build_cga: two_ell >= 0 required");
  CgaLayout ly(d, two_ell);
  std::vector<std::string> labels;
  LieAlgebra::BracketTable t;
  cga_skeleton(ly, labels, t);
  return {LieAlgebra::make(ly.dim, std::move(labels), std::move(t)), cga_levi(ly, 0)};
}

std::pair<LieAlgebra, LeviData> build_d1_cga(int two_ell) { return build_cga(1, two_ell); }

std::pair<LieAlgebra, LeviData> build_mass_extension(int d, int two_ell) {
  if (d < 1) throw std::invalid_argument("build_mass_extension: d >= 1 required");
  if (two_ell < 1 || two_ell % 2 == 0)
    throw std::invalid_argument(
        "build_mass_extension: the mass extension exists only for half-integer spin (two_ell odd)");
  CgaLayout ly(d, two_ell);
  std::vector<std::string> labels;
  LieAlgebra::BracketTable t;
  cga_skeleton(ly, labels, t);
  const int center = ly.dim;
  labels.push_back("M");
  // [P_{m,i}, P_{n,j}] = delta_{ij} delta_{m+n,2l} b_m M; m+n = two_ell
  // forces m != n, so m < n indexes each pair once.
  for (int m = 0; 2 * m < two_ell; ++m) {
    const int n = two_ell - m;
    const Rational bm = mass_coefficient(m, two_ell);
    for (int i = 1; i <= d; ++i) add_term(t, ly.trans(m, i), ly.trans(n, i), center, bm);
  }
  return {LieAlgebra::make(ly.dim + 1, std::move(labels), std::move(t)), cga_levi(ly, 1)};
}

std::pair<LieAlgebra, LeviData> build_exotic_extension(int two_ell) {
  if (two_ell < 0 || two_ell % 2 != 0)
    throw std::invalid_argument(
        "build_exotic_extension: the exotic extension exists only for integer spin (two_ell even)");
  const int d = 2;
  CgaLayout ly(d, two_ell);
  std::vector<std::string> labels;
  LieAlgebra::BracketTable t;
  cga_skeleton(ly, labels, t);
  const int center = ly.dim;
  labels.push_back("Theta");
  // [P_{m,i}, P_{n,j}] = eps_{ij} delta_{m+n,2l} q_m Theta, eps_{1,2} = 1.
  for (int m = 0; m <= two_ell; ++m) {
    const int n = two_ell - m;
    const Rational qm = exotic_coefficient(m, two_ell);
    // (m,1) vs (n,2): stored once per unordered pair
    if (m < n) {
      add_term(t, ly.trans(m, 1), ly.trans(n, 2), center, qm);   // eps_{1,2}
      add_term(t, ly.trans(m, 2), ly.trans(n, 1), center, -qm);  // eps_{2,1}
    } else if (m == n) {
      add_term(t, ly.trans(m, 1), ly.trans(m, 2), center, qm);
    }
  }
  return {LieAlgebra::make(ly.dim + 1, std::move(labels), std::move(t)), cga_levi(ly, 1)};
}

CatalogSpec CatalogSpec::parse(const std::string& family, int d, int two_ell, int n) {
  CatalogSpec s;
  s.d = d;
  s.two_ell = two_ell;
  s.n = n;
  if (family == "sl2") {
    s.family = Family::sl2;
  } else if (family == "so") {
    s.family = Family::so;
    if (d < 2) throw std::invalid_argument("so: d >= 2 required");
  } else if (family == "cga") {
    s.family = Family::cga;
    if (d < 1) throw std::invalid_argument("cga: d >= 1 required");
    if (two_ell < 0) throw std::invalid_argument("cga: two_ell >= 0 required");
  } else if (family == "cga-mass") {
    s.family = Family::cga_mass;
    if (d < 1) throw std::invalid_argument("cga-mass: d >= 1 required");
    if (two_ell < 1 || two_ell % 2 == 0)
      throw std::invalid_argument("cga-mass: two_ell must be odd");
  } else if (family == "cga-exotic") {
    s.family = Family::cga_exotic;
    if (d != 0 && d != 2) throw std::invalid_argument("cga-exotic: d is fixed at 2");
    s.d = 2;
    if (two_ell < 0 || two_ell % 2 != 0)
      throw std::invalid_argument("cga-exotic: two_ell must be even");
  } else if (family == "heisenberg") {
    s.family = Family::heisenberg;
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("heisenberg: odd dimension >= 3 required");
  } else if (family == "abelian") {
    s.family = Family::abelian;
    if (n < 0) throw std::invalid_argument("abelian: n >= 0 required");
  } else if (family == "schrodinger") {
    s.family = Family::schrodinger;
    if (d < 1) throw std::invalid_argument("schrodinger: d >= 1 required");
    s.two_ell = 1;
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  return s;
}

std::string CatalogSpec::label() const {
  std::ostringstream os;
  switch (family) {
    case Family::sl2: return "sl2";
    case Family::so: os << "so(" << d << ")"; break;
    case Family::cga: os << "cga(d=" << d << ",2l=" << two_ell << ")"; break;
    case Family::cga_mass: os << "cga-mass(d=" << d << ",2l=" << two_ell << ")"; break;
    case Family::cga_exotic: os << "cga-exotic(2l=" << two_ell << ")"; break;
    case Family::heisenberg: os << "heisenberg(" << n << ")"; break;
    case Family::abelian: os << "abelian(" << n << ")"; break;
    case Family::schrodinger: os << "schrodinger(d=" << d << ")"; break;
  }
  return os.str();
}

CatalogAlgebra build(const CatalogSpec& spec) {
  CatalogAlgebra out;
  out.label = spec.label();
  auto whole_semisimple = [](const LieAlgebra& L) {
    LeviData levi;
    for (int i = 0; i < L.dim(); ++i) levi.semisimple.push_back(i);
    return levi;
  };
  auto whole_radical = [](const LieAlgebra& L) {
    LeviData levi;
    for (int i = 0; i < L.dim(); ++i) levi.radical.push_back(i);
    return levi;
  };
  switch (spec.family) {
    case CatalogSpec::Family::sl2:
      out.algebra = build_sl2();
      out.levi = whole_semisimple(out.algebra);
      break;
    case CatalogSpec::Family::so:
      out.algebra = build_so(spec.d);
      // so(2) is abelian, not semisimple
      out.levi = spec.d >= 3 ? whole_semisimple(out.algebra) : whole_radical(out.algebra);
      break;
    case CatalogSpec::Family::cga:
      std::tie(out.algebra, out.levi) = build_cga(spec.d, spec.two_ell);
      break;
    case CatalogSpec::Family::cga_mass:
      std::tie(out.algebra, out.levi) = build_mass_extension(spec.d, spec.two_ell);
      break;
    case CatalogSpec::Family::cga_exotic:
      std::tie(out.algebra, out.levi) = build_exotic_extension(spec.two_ell);
      break;
    case CatalogSpec::Family::heisenberg:
      out.algebra = build_heisenberg(spec.n);
      out.levi = whole_radical(out.algebra);
      break;
    case CatalogSpec::Family::abelian:
      out.algebra = build_abelian(spec.n);
      out.levi = whole_radical(out.algebra);
      break;
    case CatalogSpec::Family::schrodinger:
      std::tie(out.algebra, out.levi) = build_mass_extension(spec.d, 1);
      break;
  }
  return out;
}

}  // namespace liecoh
