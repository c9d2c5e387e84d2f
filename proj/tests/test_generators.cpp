#include <gtest/gtest.h>

#include <cmath>
#include <thread>

#include "skelcur/generators.hpp"
#include "test_support.hpp"

using namespace skelcur;
using skelcur::testing::max_abs_diff;

namespace {
std::vector<double> vec(const Spectrum& s) { return {s.values().begin(), s.values().end()}; }
}  // namespace

TEST(CounterRng, MatchesReferenceSplitMix64) {
  // Published SplitMix64 outputs for state 0.
  CounterRng rng(Seed{0});
  EXPECT_EQ(rng.next_u64(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next_u64(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.next_u64(), 0x06C45D188009454FULL);
}

TEST(CounterRng, UniformAndGaussianMoments) {
  CounterRng rng(Seed{9});
  double mean = 0, sq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double g = rng.gaussian();
    mean += g;
    sq += g * g;
  }
  EXPECT_NEAR(mean / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.02);
  EXPECT_EQ(derive_seed(Seed{0b1100}, 0b1010).value, 0b0110u);
}

TEST(Spectrum, ModelExamples) {
  const Spectrum p = spectrum(SpectrumModel{PowerModel{2.0}, 4});
  EXPECT_EQ(vec(p), (std::vector<double>{1, 0.25, 1.0 / 9, 1.0 / 16}));
  const Spectrum g = spectrum(SpectrumModel{GeometricModel{0.5}, 3});
  EXPECT_EQ(vec(g), (std::vector<double>{0.5, 0.25, 0.125}));
  const Spectrum e = spectrum(SpectrumModel{ExplicitModel{{3, 2, 2}}, 3});
  EXPECT_EQ(vec(e), (std::vector<double>{3, 2, 2}));
  const Spectrum c = spectrum(SpectrumModel{PowerModel{1.0, 5.0}, 2});
  EXPECT_EQ(vec(c), (std::vector<double>{5, 2.5}));

  for (const SpectrumModel& bad :
       {SpectrumModel{PowerModel{0.0}, 3}, SpectrumModel{GeometricModel{1.0}, 3},
        SpectrumModel{GeometricModel{0.0}, 3}, SpectrumModel{ExplicitModel{{1, 2}}, 2}}) {
    try {
      spectrum(bad);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidDecayParams);
    }
  }
}

TEST(HaarOrthogonal, IsOrthogonal) {
  CounterRng rng(Seed{3});
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_LT(skelcur::testing::orthonormality_defect(haar_orthogonal(n, rng)), 1e-13);
}

TEST(SpdWithSpectrum, Examples) {
  EXPECT_LT(max_abs_diff(spd_with_spectrum(Spectrum{1, 1, 1}, Seed{5}), DenseMatrix::identity(3)), 1e-14);
  try {
    spd_with_spectrum(Spectrum{1, 0}, Seed{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonPositiveValue);
  }
}

TEST(SpdWithSpectrum, RoundTripAndSymmetry) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Spectrum e = spectrum(SpectrumModel{PowerModel{1.0 + seed % 3}, 3 + seed % 8});
    const DenseMatrix m = spd_with_spectrum(e, Seed{seed});
    EXPECT_TRUE(is_symmetric(m, 0.0));
    const auto got = symmetric_eigen(m).values;
    for (std::size_t k = 0; k < e.size(); ++k) EXPECT_NEAR(got[k], e[k], 1e-13);
  }
}

TEST(SpdWithSpectrum, DeterministicBitwise) {
  const Spectrum e = spectrum(SpectrumModel{PowerModel{2.0}, 8});
  EXPECT_EQ(spd_with_spectrum(e, Seed{11}), spd_with_spectrum(e, Seed{11}));
  EXPECT_FALSE(spd_with_spectrum(e, Seed{11}) == spd_with_spectrum(e, Seed{12}));
}

TEST(GeneralWithSpectrum, Examples) {
  const DenseMatrix m = general_with_spectrum(5, 4, Spectrum{3, 2, 0, 0}, Seed{2});
  EXPECT_EQ(numerical_rank(m), 2u);
  const DenseMatrix o = general_with_spectrum(4, 4, Spectrum{1, 1, 1, 1}, Seed{2});
  EXPECT_LT(skelcur::testing::orthonormality_defect(o), 1e-13);
  try {
    general_with_spectrum(3, 4, Spectrum{1, 1}, Seed{0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(GeneralWithSpectrum, SingularValueRoundTrip) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t m = 3 + seed % 5, n = 2 + (seed / 5) % 7;
    const Spectrum s = spectrum(SpectrumModel{PowerModel{0.5 + (seed % 4) * 0.5}, std::min(m, n)});
    const Spectrum got = singular_values(general_with_spectrum(m, n, s, Seed{seed}));
    for (std::size_t k = 0; k < s.size(); ++k) EXPECT_NEAR(got[k], s[k], 1e-13);
  }
}

TEST(GeneralWithSpectrum, IndependentOfThreadCount) {
  const Spectrum s = spectrum(SpectrumModel{PowerModel{1.0}, 7});
  const DenseMatrix ref = general_with_spectrum(7, 9, s, Seed{99});
  std::vector<DenseMatrix> got(4, DenseMatrix(1, 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < got.size(); ++t)
      pool.emplace_back([&, t] { got[t] = general_with_spectrum(7, 9, s, Seed{99}); });
  }
  for (const auto& g : got) EXPECT_EQ(g, ref);
}

TEST(SpecialMatrices, Examples) {
  const DenseMatrix m = paper_2x2(1.0, 0.25);
  EXPECT_EQ(m, (DenseMatrix{{0.625, 0.375}, {0.375, 0.625}}));
  const Spectrum s = singular_values(m);
  EXPECT_NEAR(s[0], 1.0, 1e-15);
  EXPECT_NEAR(s[1], 0.25, 1e-15);
  const DenseMatrix h = hilbert(3);
  EXPECT_EQ(h(0, 0), 1.0);
  EXPECT_EQ(h(1, 2), 0.25);
  EXPECT_EQ(h(2, 2), 0.2);
}
