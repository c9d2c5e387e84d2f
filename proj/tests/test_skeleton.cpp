#include <gtest/gtest.h>

#include <random>

#include "skelcur/bounds.hpp"
#include "skelcur/generators.hpp"
#include "skelcur/maxvol.hpp"
#include "skelcur/skeleton.hpp"
#include "test_support.hpp"

using namespace skelcur;
using skelcur::testing::max_abs_diff;

namespace {

SkeletonSelection pick(IndexSet rows, IndexSet cols) { return {std::move(rows), std::move(cols)}; }

}  // namespace

TEST(Cur, RankOneIsReproducedExactly) {
  const DenseMatrix m{{1, 2, 3}, {2, 4, 6}, {-1, -2, -3}};
  const auto res = cur(m, pick({1}, {2}));
  EXPECT_LT(res.chebyshev_error, 1e-14);
  EXPECT_EQ(res.target_rank, 1u);
  EXPECT_EQ(res.method, Method::MaxVolCur);
}

TEST(Cur, IdentityLeavesUnitError) {
  const auto res = cur(DenseMatrix::identity(3), pick({0}, {0}));
  EXPECT_EQ(res.chebyshev_error, 1.0);
  EXPECT_NEAR(res.spectral_error, 1.0, 1e-14);
}

TEST(Cur, TwoByTwoSchurComplementOracle) {
  const double a = 3, b = 2, d = 2;
  const auto res = cur(DenseMatrix{{a, b}, {b, d}}, pick({0}, {0}));
  EXPECT_NEAR(res.chebyshev_error, d - b * b / a, 1e-15);
  EXPECT_NEAR(res.chebyshev_error, 2.0 / 3.0, 1e-15);
}

TEST(Cur, SelectedRowsAndColumnsAreReproduced) {
  std::mt19937_64 gen(3);
  for (int t = 0; t < 50; ++t) {
    const DenseMatrix m = skelcur::testing::gaussian_matrix(6, 7, gen);
    const std::size_t p = 1 + t % 3;
    const auto sel = exhaustive_maxvol(m, p, p + t % 2).selection;
    const DenseMatrix err = residual_blocks(m, sel);
    for (std::size_t i : sel.rows)
      for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_NEAR(err(i, j), 0.0, 1e-11);
    if (sel.rows.size() == sel.cols.size()) {
      for (std::size_t j : sel.cols)
        for (std::size_t i = 0; i < m.rows(); ++i) EXPECT_NEAR(err(i, j), 0.0, 1e-11);
    }
  }
}

TEST(Cur, ResidualIsSchurComplementAndNegativeSemidefiniteOnSpd) {
  std::mt19937_64 gen(21);
  for (int t = 0; t < 40; ++t) {
    const DenseMatrix m = skelcur::testing::random_spd(6, gen);
    const std::size_t p = 1 + t % 4;
    const auto sel = exhaustive_principal_maxvol(m, p).selection;
    const DenseMatrix err = residual_blocks(m, sel);

    // Oracle: -(M22 - M21 M11^{-1} M12) via Gauss-Jordan inverse.
    const IndexSet rest = sel.rows.complement(6);
    const DenseMatrix schur = submatrix(m, rest, rest) - submatrix(m, rest, sel.rows) *
                                                             skelcur::testing::inverse(submatrix(m, sel.rows, sel.rows)) *
                                                             submatrix(m, sel.rows, rest);
    EXPECT_LT(max_abs_diff(submatrix(err, rest, rest), -1.0 * schur), 1e-10);

    const auto ev = symmetric_eigen(err);
    EXPECT_LE(ev.values[0], 1e-12);
    // The largest entry of an NSD matrix sits on the diagonal.
    double diag = 0.0;
    for (std::size_t i = 0; i < 6; ++i) diag = std::max(diag, std::abs(err(i, i)));
    EXPECT_NEAR(chebyshev_norm(err), diag, 1e-14);
  }
}

TEST(Cur, ApproximantEigenvaluesDoNotExceedTarget) {
  std::mt19937_64 gen(30);
  for (int t = 0; t < 100; ++t) {
    const DenseMatrix m = skelcur::testing::random_spd(7, gen);
    const std::size_t p = 1 + t % 5;
    const auto sel = exhaustive_principal_maxvol(m, p).selection;
    DenseMatrix approx = cur(m, sel).approximant;
    approx = 0.5 * (approx + approx.transpose());
    const auto lh = symmetric_eigen(approx).values;
    const auto lm = symmetric_eigen(m).values;
    for (std::size_t k = 0; k < 7; ++k) EXPECT_LE(lh[k], lm[k] * (1 + 1e-9) + 1e-12);
  }
}

TEST(RankRCur, Examples) {
  const DenseMatrix m = DenseMatrix::diagonal(std::vector<double>{2, 1, 0.5});
  auto res = rank_r_cur(m, pick({0, 1}, {0, 1}), 1);
  EXPECT_LT(max_abs_diff(res.approximant, DenseMatrix::diagonal(std::vector<double>{2, 0, 0})), 1e-15);
  EXPECT_NEAR(res.chebyshev_error, 1.0, 1e-15);
  res = rank_r_cur(m, pick({0, 1}, {0, 1}), 0);
  EXPECT_EQ(res.chebyshev_error, chebyshev_norm(m));
  try {
    rank_r_cur(m, pick({0, 1}, {0, 1}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankOutOfRange);
  }
}

TEST(CurThenTruncate, Examples) {
  auto res = cur_then_truncate(DenseMatrix::identity(4), pick({0, 1, 2}, {0, 1, 2}), 2);
  EXPECT_NEAR(res.chebyshev_error, 1.0, 1e-14);
  EXPECT_EQ(res.target_rank, 2u);

  const Spectrum eigs = spectrum(SpectrumModel{PowerModel{2.0}, 8});
  const DenseMatrix m = spd_with_spectrum(eigs, Seed{7});
  const auto sel = exhaustive_principal_maxvol(m, 4).selection;
  res = cur_then_truncate(m, sel, 2);
  EXPECT_LE(res.chebyshev_error, bounds::spd_truncated_bound(eigs, 2, 4) * (1 + 1e-9));
  EXPECT_LE(numerical_rank(res.approximant), 2u);
}

TEST(Methods, NestingAtFullBlockRank) {
  std::mt19937_64 gen(41);
  for (int t = 0; t < 30; ++t) {
    const DenseMatrix m = skelcur::testing::gaussian_matrix(6, 6, gen);
    const std::size_t p = 1 + t % 4;
    const auto sel = exhaustive_maxvol(m, p, p).selection;
    const auto base = cur(m, sel);
    EXPECT_LT(max_abs_diff(rank_r_cur(m, sel, p).approximant, base.approximant), 1e-10);
    EXPECT_LT(max_abs_diff(cur_then_truncate(m, sel, p).approximant, base.approximant), 1e-9);
  }
}

TEST(Methods, ScalingEquivariance) {
  std::mt19937_64 gen(5);
  for (int t = 0; t < 20; ++t) {
    const DenseMatrix m = skelcur::testing::gaussian_matrix(5, 5, gen);
    const double c = t % 2 ? 3.5 : -0.25;
    const auto sel = pick({0, 2}, {1, 3});
    const DenseMatrix a = cur(c * m, sel).approximant;
    const DenseMatrix b = c * cur(m, sel).approximant;
    EXPECT_LT(max_abs_diff(a, b), 1e-12 * std::max(1.0, std::abs(c)) * chebyshev_norm(m));
  }
}

TEST(TruncatedSvdApprox, MatchesTruncation) {
  const auto res = truncated_svd_approx(paper_2x2(1.0, 0.25), 1);
  EXPECT_EQ(res.method, Method::TruncatedSvd);
  EXPECT_FALSE(res.selection.has_value());
  EXPECT_NEAR(res.spectral_error, 0.25, 1e-14);
}

TEST(MethodNames, RoundTrip) {
  for (Method m : {Method::MaxVolCur, Method::RankRCur, Method::CurThenTruncate, Method::TruncatedSvd})
    EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_FALSE(parse_method("svd").has_value());
}
