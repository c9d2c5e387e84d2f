#pragma once
//
// Seeded test-matrix generators with prescribed spectra.
//
// Randomness comes from CounterRng: SplitMix64's finalizer applied to
// seed + counter * 0x9E3779B97F4A7C15. The stream is a pure function of
// (seed, counter), so outputs are identical across platforms and thread counts.
//

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <variant>
#include <vector>

#include "skelcur/error.hpp"
#include "skelcur/linalg.hpp"
#include "skelcur/matrix.hpp"

namespace skelcur {

struct Seed {
  std::uint64_t value = 0;
  friend bool operator==(Seed, Seed) = default;
};

/// Per-trial seed: base XOR trial index.
inline Seed derive_seed(Seed base, std::uint64_t trial) { return {base.value ^ trial}; }

class CounterRng {
 public:
  explicit CounterRng(Seed seed) : seed_(seed.value) {}

  std::uint64_t next_u64() {
    std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on the open interval (0, 1).
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; the second variate of each pair is cached.
  double gaussian() {
    if (spare_) {
      const double v = *spare_;
      spare_.reset();
      return v;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    spare_ = rad * std::sin(ang);
    return rad * std::cos(ang);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::optional<double> spare_;
};

struct PowerModel {
  double s;
  double scale = 1.0;
};
struct GeometricModel {
  double q;
  double scale = 1.0;
};
struct ExplicitModel {
  std::vector<double> values;
};

/// Decay class of a prescribed spectrum of the given length.
struct SpectrumModel {
  std::variant<PowerModel, GeometricModel, ExplicitModel> kind;
  std::size_t length = 0;
};

/// Power: C k^-s; Geometric: C q^k; Explicit: copied. k = 1..length.
inline Spectrum spectrum(const SpectrumModel& model) {
  std::vector<double> out;
  if (const auto* pw = std::get_if<PowerModel>(&model.kind)) {
    detail::require(pw->s > 0.0 && pw->scale > 0.0, ErrorKind::InvalidDecayParams, "power model needs s > 0, C > 0");
    for (std::size_t k = 1; k <= model.length; ++k) out.push_back(pw->scale * std::pow(static_cast<double>(k), -pw->s));
  } else if (const auto* ge = std::get_if<GeometricModel>(&model.kind)) {
    detail::require(ge->q > 0.0 && ge->q < 1.0 && ge->scale > 0.0, ErrorKind::InvalidDecayParams,
                    "geometric model needs 0 < q < 1, C > 0");
    for (std::size_t k = 1; k <= model.length; ++k)
      out.push_back(ge->scale * std::pow(ge->q, static_cast<double>(k)));
  } else {
    out = std::get<ExplicitModel>(model.kind).values;
    for (std::size_t k = 0; k < out.size(); ++k) {
      detail::require(out[k] > 0.0, ErrorKind::InvalidDecayParams, "explicit spectrum must be positive");
      if (k > 0)
        detail::require(out[k] <= out[k - 1], ErrorKind::InvalidDecayParams, "explicit spectrum must be non-increasing");
    }
  }
  return Spectrum(std::move(out));
}

/// Haar-distributed orthogonal matrix: Gram-Schmidt QR of a Gaussian matrix
/// with positive R diagonal.
inline DenseMatrix haar_orthogonal(std::size_t n, CounterRng& rng) {
  detail::Columns cols(n, std::vector<double>(n));
  for (auto& c : cols)
    for (double& x : c) x = rng.gaussian();
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < j; ++k) {
        const double proj = detail::dot(cols[k], cols[j]);
        for (std::size_t i = 0; i < n; ++i) cols[j][i] -= proj * cols[k][i];
      }
    const double nrm = std::sqrt(detail::dot(cols[j], cols[j]));
    for (double& x : cols[j]) x /= nrm;
  }
  return detail::from_columns(cols, n);
}

/// Q diag(eigs) Q^T with Haar Q, exactly symmetrized.
inline DenseMatrix spd_with_spectrum(const Spectrum& eigs, Seed seed) {
  detail::require(eigs.size() >= 1, ErrorKind::InvalidArgument, "empty spectrum");
  for (double v : eigs) detail::require(v > 0.0, ErrorKind::NonPositiveValue, "SPD spectrum must be positive");
  const std::size_t n = eigs.size();
  CounterRng rng(seed);
  const DenseMatrix q = haar_orthogonal(n, rng);
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += q(i, k) * eigs[k] * q(j, k);
      m(i, j) = m(j, i) = s;
    }
  return m;
}

/// U diag(sigma) V^T with independent Haar U (m x m) and V (n x n).
inline DenseMatrix general_with_spectrum(std::size_t m, std::size_t n, const Spectrum& sigma, Seed seed) {
  detail::require(m >= 1 && n >= 1 && sigma.size() == std::min(m, n), ErrorKind::DimensionMismatch,
                  "spectrum length must equal min(m, n)");
  for (double v : sigma) detail::require(v >= 0.0, ErrorKind::NonPositiveValue, "singular values must be >= 0");
  CounterRng rng(seed);
  const DenseMatrix u = haar_orthogonal(m, rng);
  const DenseMatrix v = haar_orthogonal(n, rng);
  DenseMatrix out(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < sigma.size(); ++k) s += u(i, k) * sigma[k] * v(j, k);
      out(i, j) = s;
    }
  return out;
}

/// (1/2) [1 1; 1 -1] diag(s1, s2) [1 1; 1 -1]; its rank-1 truncation has
/// Chebyshev error s2/2 but spectral error s2.
inline DenseMatrix paper_2x2(double sigma1, double sigma2) {
  detail::require(sigma1 >= sigma2 && sigma2 >= 0.0, ErrorKind::InvalidDecayParams, "need sigma1 >= sigma2 >= 0");
  const double a = 0.5 * (sigma1 + sigma2);
  const double b = 0.5 * (sigma1 - sigma2);
  return DenseMatrix{{a, b}, {b, a}};
}

inline DenseMatrix hilbert(std::size_t n) {
  DenseMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 1.0 / static_cast<double>(i + j + 1);
  return h;
}

}  // namespace skelcur
