// Benchmark: serial reference elimination vs the OpenMP kernel on the
// degree-2 adjoint differential of a catalog algebra. The two paths must
// produce identical echelon forms; the point of the comparison is timing.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "liecoh/catalog.hpp"
#include "liecoh/cochain.hpp"
#include "liecoh/elimination.hpp"

using namespace liecoh;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int d = 2;
  int two_ell = 5;
  int degree = 2;
  std::vector<int> thread_counts{1, 2, 4};
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    auto next = [&] { return std::atoi(argv[++i]); };
    if (a == "--d" && i + 1 < argc) d = next();
    else if (a == "--two-ell" && i + 1 < argc) two_ell = next();
    else if (a == "--degree" && i + 1 < argc) degree = next();
    else {
      std::fprintf(stderr, "usage: bench_elim [--d D] [--two-ell L] [--degree N]\n");
      return 2;
    }
  }

  auto [L, levi] = build_cga(d, two_ell);
  Representation ad = adjoint_rep(L);

  auto t0 = Clock::now();
  SparseMatrix dn = differential_matrix(L, ad, degree, ComputeOptions{false, false, 1});
  std::printf("cga(d=%d,2l=%d) degree %d: %dx%d, %lld nonzeros (assembled in %.3fs)\n", d,
              two_ell, degree, dn.rows(), dn.cols(), static_cast<long long>(dn.nnz()),
              seconds_since(t0));

  t0 = Clock::now();
  EchelonForm ref = eliminate_reference(dn);
  const double t_ref = seconds_since(t0);
  std::printf("%-22s %8.3fs   rank %d\n", "serial reference", t_ref, ref.rank);

  for (int threads : thread_counts) {
    t0 = Clock::now();
    EchelonForm got = eliminate(dn, ElimOptions{threads});
    const double t_par = seconds_since(t0);
    const bool same = got == ref;
    std::printf("%-14s %2d thr %8.3fs   rank %d   speedup %.2fx   %s\n", "openmp kernel",
                threads, t_par, got.rank, t_ref / t_par, same ? "identical" : "DIVERGED");
    if (!same) return 1;
  }

  t0 = Clock::now();
  auto fast = rank_mod_primes(dn);
  std::printf("%-22s %8.3fs   rank %s\n", "modular (3 primes)", seconds_since(t0),
              fast ? std::to_string(*fast).c_str() : "disagreement");
  return 0;
}
