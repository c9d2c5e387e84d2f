// Builds an SPD matrix with eigenvalues k^-2, selects a maximal-volume
// principal block, and compares the pseudo-skeleton error with its bounds.

#include <cstdio>

#include "skelcur/skelcur.hpp"

int main() {
  using namespace skelcur;
  const Spectrum eigs = spectrum(SpectrumModel{PowerModel{2.0}, 10});
  const DenseMatrix m = spd_with_spectrum(eigs, Seed{42});

  std::printf("%3s %14s %14s %14s %14s\n", "r", "cur error", "zeta bound", "(r+1)sigma", "tsvd error");
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto search = exhaustive_principal_maxvol(m, r);
    const auto approx = cur(m, search.selection);
    const auto tsvd = truncated_svd_approx(m, r);
    std::printf("%3zu %14.6e %14.6e %14.6e %14.6e\n", r, approx.chebyshev_error, bounds::spd_zeta_bound(eigs, r),
                bounds::gt_bound(eigs, r), tsvd.chebyshev_error);
  }

  // Rank-2 truncation of a rank-4 skeleton approximation.
  const auto sel = exhaustive_principal_maxvol(m, 4).selection;
  const auto trunc = cur_then_truncate(m, sel, 2);
  std::printf("cur_then_truncate r=2 p=4: error %.6e, bound %.6e\n", trunc.chebyshev_error,
              bounds::spd_truncated_bound(eigs, 2, 4));
  return 0;
}
