#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "skelcur/generators.hpp"
#include "skelcur/linalg.hpp"
#include "skelcur/matrix.hpp"
#include "test_support.hpp"

using namespace skelcur;
using skelcur::testing::max_abs_diff;
using skelcur::testing::orthonormality_defect;

namespace {

void expect_error(ErrorKind kind, const auto& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

void expect_svd_invariants(const DenseMatrix& m, const SvdFactorization& f) {
  const std::size_t k = std::min(m.rows(), m.cols());
  ASSERT_EQ(f.singular.size(), k);
  ASSERT_EQ(f.left.rows(), m.rows());
  ASSERT_EQ(f.left.cols(), k);
  ASSERT_EQ(f.right.rows(), m.cols());
  ASSERT_EQ(f.right.cols(), k);
  for (std::size_t i = 0; i < k; ++i) {
    EXPECT_GE(f.singular[i], 0.0);
    if (i > 0) {
      EXPECT_LE(f.singular[i], f.singular[i - 1]);
    }
  }
  EXPECT_LE(orthonormality_defect(f.left), 1e-10);
  EXPECT_LE(orthonormality_defect(f.right), 1e-10);
  const DenseMatrix rebuilt = reconstruct(f, k);
  EXPECT_LE(frobenius_norm(rebuilt - m), 1e-9 * std::max(frobenius_norm(m), 1e-300));
}

}  // namespace

TEST(DenseMatrix, RejectsNonFiniteAndBadShapes) {
  expect_error(ErrorKind::InvalidArgument, [] { DenseMatrix(1, 1, {NAN}); });
  expect_error(ErrorKind::DimensionMismatch, [] { DenseMatrix(2, 2, {1.0, 2.0, 3.0}); });
  expect_error(ErrorKind::DimensionMismatch, [] { DenseMatrix(0, 2); });
}

TEST(ChebyshevNorm, Examples) {
  EXPECT_EQ(chebyshev_norm(DenseMatrix{{0.75, 0.25}, {0.25, 0.75}}), 0.75);
  EXPECT_EQ(chebyshev_norm(DenseMatrix::zeros(3, 3)), 0.0);
  EXPECT_EQ(chebyshev_norm(DenseMatrix{{1, -2}, {3, -4}}), 4.0);
}

TEST(SpectralNorm, Examples) {
  EXPECT_NEAR(spectral_norm(DenseMatrix::identity(3)), 1.0, 1e-14);
  EXPECT_NEAR(spectral_norm(DenseMatrix{{3, 0}, {0, 1}}), 3.0, 1e-14);
  EXPECT_NEAR(spectral_norm(DenseMatrix{{0, 2}, {0, 0}}), 2.0, 1e-14);
}

TEST(Svd, Examples) {
  EXPECT_EQ(singular_values(DenseMatrix{{2, 0}, {0, 1}}), (Spectrum{2.0, 1.0}));

  const auto s = singular_values(DenseMatrix{{0.75, 0.25}, {0.25, 0.75}});
  EXPECT_NEAR(s[0], 1.0, 1e-15);
  EXPECT_NEAR(s[1], 0.5, 1e-15);

  // Oracle: eigenvalues of the 2x2 Gram matrix G = M^T M by the quadratic formula.
  const DenseMatrix m{{1, 2}, {2, 4}};
  const DenseMatrix g = m.transpose() * m;
  const double tr = g(0, 0) + g(1, 1), det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  const double disc = std::sqrt(tr * tr - 4 * det);
  const double oracle1 = std::sqrt((tr + disc) / 2), oracle2 = std::sqrt(std::max(0.0, (tr - disc) / 2));
  EXPECT_DOUBLE_EQ(oracle1, 5.0);
  const auto f = svd(m);
  EXPECT_NEAR(f.singular[0], oracle1, 1e-14);
  EXPECT_NEAR(f.singular[1], oracle2, 1e-14);
  expect_svd_invariants(m, f);
}

TEST(Svd, InvariantsOnRandomAndDegenerateShapes) {
  std::mt19937_64 gen(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t m = 1 + gen() % 9, n = 1 + gen() % 9;
    const DenseMatrix a = skelcur::testing::gaussian_matrix(m, n, gen);
    expect_svd_invariants(a, svd(a));
  }
  // Zero matrix and a matrix with an exact zero column.
  expect_svd_invariants(DenseMatrix::zeros(3, 2), svd(DenseMatrix::zeros(3, 2)));
  const DenseMatrix z{{1, 0, 2}, {3, 0, 4}};
  expect_svd_invariants(z, svd(z));
}

TEST(TruncateSvd, TwoByTwoExample) {
  const DenseMatrix m{{0.75, 0.25}, {0.25, 0.75}};
  const DenseMatrix m1 = truncate_svd(m, 1);
  EXPECT_LE(max_abs_diff(m1, DenseMatrix{{0.5, 0.5}, {0.5, 0.5}}), 1e-15);
  EXPECT_NEAR(chebyshev_norm(m1 - m), 0.25, 1e-15);
}

TEST(TruncateSvd, EndpointsAndErrors) {
  std::mt19937_64 gen(3);
  const DenseMatrix a = skelcur::testing::gaussian_matrix(4, 6, gen);
  EXPECT_LE(max_abs_diff(truncate_svd(a, 4), a), 1e-12);
  EXPECT_EQ(truncate_svd(a, 0), DenseMatrix::zeros(4, 6));
  expect_error(ErrorKind::RankOutOfRange, [&] { truncate_svd(a, 5); });
}

TEST(TruncateSvd, SpectralOptimalityOnRandomMatrices) {
  std::mt19937_64 gen(2024);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + gen() % 12, n = 1 + gen() % 12;
    const DenseMatrix a = skelcur::testing::gaussian_matrix(m, n, gen);
    const std::size_t k = std::min(m, n);
    const std::size_t r = gen() % k;  // r < k so sigma_{r+1} exists
    const Spectrum s = singular_values(a);
    const double err = spectral_norm(a - truncate_svd(a, r));
    EXPECT_NEAR(err, s[r], 1e-9 * s[r]) << "trial " << t;
  }
}

TEST(PseudoInverse, Examples) {
  EXPECT_LE(max_abs_diff(pseudo_inverse(DenseMatrix{{2, 0}, {0, 0}}), DenseMatrix{{0.5, 0}, {0, 0}}), 1e-15);
  EXPECT_LE(max_abs_diff(pseudo_inverse(DenseMatrix{{2, 0}, {0, 4}}), DenseMatrix{{0.5, 0}, {0, 0.25}}), 1e-15);
  // Rank-1 oracle: A^+ = A^T / ||A||^2.
  const DenseMatrix col{{3}, {4}};
  const DenseMatrix oracle = (1.0 / 25.0) * col.transpose();
  EXPECT_LE(max_abs_diff(pseudo_inverse(col), oracle), 1e-16);
  EXPECT_NEAR(oracle(0, 0), 3.0 / 25.0, 1e-17);
}

TEST(PseudoInverse, MoorePenroseIdentities) {
  std::mt19937_64 gen(99);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 1 + gen() % 8, n = 1 + gen() % 8;
    DenseMatrix a = skelcur::testing::gaussian_matrix(m, n, gen);
    if (t % 2 == 1) {
      // Rank-deficient: sum of k < min(m,n) outer products.
      const std::size_t k = std::min(m, n) > 1 ? 1 + gen() % (std::min(m, n) - 1) : 1;
      a = skelcur::testing::gaussian_matrix(m, k, gen) * skelcur::testing::gaussian_matrix(k, n, gen);
    }
    const DenseMatrix p = pseudo_inverse(a);
    const double tol = 1e-8 * spectral_norm(a);
    EXPECT_LE(max_abs_diff(a * p * a, a), tol);
    EXPECT_LE(max_abs_diff(p * a * p, p), 1e-8 * spectral_norm(p));
    const DenseMatrix ap = a * p, pa = p * a;
    EXPECT_LE(max_abs_diff(ap.transpose(), ap), tol);
    EXPECT_LE(max_abs_diff(pa.transpose(), pa), tol);
  }
}

TEST(Volume, Examples) {
  EXPECT_EQ(volume(DenseMatrix::identity(2), 2), 0.0);
  EXPECT_NEAR(volume(DenseMatrix{{2, 0}, {0, 3}}, 2), std::log(6.0), 1e-15);
  EXPECT_EQ(volume(DenseMatrix{{1, 2}, {2, 4}}, 2), kZeroLogVolume);
  expect_error(ErrorKind::RankOutOfRange, [] { volume(DenseMatrix::identity(2), 3); });
  expect_error(ErrorKind::RankOutOfRange, [] { volume(DenseMatrix::identity(2), 0); });
}

TEST(Volume, MatchesDeterminantOracle) {
  std::mt19937_64 gen(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + gen() % 6;
    const DenseMatrix a = skelcur::testing::gaussian_matrix(n, n, gen);
    EXPECT_NEAR(volume(a, n), std::log(std::abs(skelcur::testing::determinant(a))), 1e-10);
  }
}

TEST(NumericalRank, Examples) {
  EXPECT_EQ(numerical_rank(DenseMatrix::identity(4)), 4u);
  EXPECT_EQ(numerical_rank(DenseMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(numerical_rank(DenseMatrix::zeros(2, 3)), 0u);
  EXPECT_EQ(numerical_rank(DenseMatrix{{1, 0}, {0, 1e-12}}, 1e-10), 1u);
  EXPECT_EQ(numerical_rank(DenseMatrix{{1, 0}, {0, 1e-12}}, 1e-13), 2u);
}

TEST(SymmetricEigen, Examples) {
  EXPECT_EQ(symmetric_eigen(DenseMatrix::identity(3)).values, (Spectrum{1, 1, 1}));
  const auto e = symmetric_eigen(DenseMatrix{{0.75, 0.25}, {0.25, 0.75}});
  EXPECT_NEAR(e.values[0], 1.0, 1e-15);
  EXPECT_NEAR(e.values[1], 0.5, 1e-15);
  const std::vector<double> d{1.0, 0.25, 1.0 / 9.0};
  const auto ed = symmetric_eigen(DenseMatrix::diagonal(d));
  for (int i = 0; i < 3; ++i) EXPECT_EQ(ed.values[i], d[i]);
  expect_error(ErrorKind::NotSymmetric, [] { symmetric_eigen(DenseMatrix{{1, 2}, {0, 1}}); });
}

TEST(SymmetricEigen, ReconstructionAndOrthonormality) {
  std::mt19937_64 gen(17);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + gen() % 9;
    DenseMatrix a = skelcur::testing::gaussian_matrix(n, n, gen);
    a = a + a.transpose();  // indefinite symmetric
    const auto e = symmetric_eigen(a);
    EXPECT_LE(orthonormality_defect(e.vectors), 1e-10);
    std::vector<double> lam(e.values.begin(), e.values.end());
    const DenseMatrix rebuilt = e.vectors * DenseMatrix::diagonal(lam) * e.vectors.transpose();
    EXPECT_LE(frobenius_norm(rebuilt - a), 1e-9 * frobenius_norm(a));
  }
}

TEST(SymmetricEigen, InterlacingOnPrincipalSubmatrices) {
  std::mt19937_64 gen(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + gen() % 7;
    const DenseMatrix m = skelcur::testing::random_spd(n, gen);
    const Spectrum lm = symmetric_eigen(m).values;
    for (std::size_t drop = 0; drop < n; ++drop) {
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < n; ++i)
        if (i != drop) keep.push_back(i);
      const IndexSet k(keep);
      const Spectrum ly = symmetric_eigen(submatrix(m, k, k)).values;
      for (std::size_t i = 0; i < ly.size(); ++i) EXPECT_LE(ly[i], lm[i] * (1 + 1e-12));
    }
  }
}

TEST(SymmetricEigen, AgreesWithSvdOnSpd) {
  std::mt19937_64 gen(31);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + gen() % 10;
    const DenseMatrix m = skelcur::testing::random_spd(n, gen);
    const Spectrum e = symmetric_eigen(m).values;
    const Spectrum s = singular_values(m);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(e[i], s[i], 1e-9 * s[i]);
  }
}

TEST(Norms, ChebyshevBelowSpectral) {
  std::mt19937_64 gen(41);
  for (int t = 0; t < 100; ++t) {
    const DenseMatrix a = skelcur::testing::gaussian_matrix(1 + gen() % 8, 1 + gen() % 8, gen);
    EXPECT_LE(chebyshev_norm(a), spectral_norm(a) * (1 + 1e-14));
  }
}

TEST(Submatrix, Examples) {
  const DenseMatrix m{{1, 2}, {3, 4}};
  EXPECT_EQ(submatrix(m, IndexSet{1}, IndexSet{1}), (DenseMatrix{{4}}));
  EXPECT_EQ(submatrix(m, IndexSet::range(2), IndexSet::range(2)), m);
  EXPECT_EQ(submatrix(DenseMatrix{{1, 2, 3}, {4, 5, 6}}, IndexSet{0}, IndexSet{0, 2}), (DenseMatrix{{1, 3}}));
  expect_error(ErrorKind::IndexOutOfRange, [&] { submatrix(m, IndexSet{2}, IndexSet{0}); });
}

TEST(IndexSet, RequiresStrictlyIncreasing) {
  expect_error(ErrorKind::InvalidArgument, [] { IndexSet{1, 1}; });
  expect_error(ErrorKind::InvalidArgument, [] { IndexSet{2, 1}; });
  EXPECT_EQ(IndexSet({0, 2}).complement(4), (IndexSet{1, 3}));
}
