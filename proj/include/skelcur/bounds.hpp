#pragma once
//
// Chebyshev-norm error bounds for pseudo-skeleton approximations, evaluated
// from a spectrum. Indices in comments are 1-based (lambda_1 >= lambda_2 ...);
// the Spectrum accessor is 0-based.
//

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>

#include "skelcur/error.hpp"
#include "skelcur/matrix.hpp"

namespace skelcur::bounds {

namespace detail {

using skelcur::detail::require;

inline void require_positive_prefix(const Spectrum& v, std::size_t count) {
  require(v.size() >= count, ErrorKind::RankOutOfRange,
          "spectrum has " + std::to_string(v.size()) + " values, need " + std::to_string(count));
  for (std::size_t k = 0; k < count; ++k)
    require(v[k] > 0.0, ErrorKind::NonPositiveValue, "spectrum value " + std::to_string(k + 1) + " is not positive");
}

}  // namespace detail

/// H(v_1, ..., v_count) = count / sum(1 / v_k).
inline double harmonic_mean(const Spectrum& values, std::size_t count) {
  detail::require(count >= 1, ErrorKind::InvalidArgument, "harmonic mean needs at least one value");
  detail::require_positive_prefix(values, count);
  // Largest reciprocals first.
  long double acc = 0.0L;
  for (std::size_t k = count; k-- > 0;) acc += 1.0L / static_cast<long double>(values[k]);
  return static_cast<double>(static_cast<long double>(count) / acc);
}

/// zeta_r = H(v_1..v_{r+1}) / v_{r+1}, always in [1, r+1].
inline double zeta(const Spectrum& values, std::size_t r) {
  detail::require_positive_prefix(values, r + 1);
  return harmonic_mean(values, r + 1) / values[r];
}

/// (r+1) sigma_{r+1}; classical maximal-volume bound for p = q.
inline double gt_bound(const Spectrum& sigma, std::size_t r) {
  detail::require(sigma.size() >= r + 1, ErrorKind::RankOutOfRange, "sigma_{r+1} not available");
  return static_cast<double>(r + 1) * sigma[r];
}

/// sqrt((1 + r/(p-r+1)) (1 + r/(q-r+1))) sigma_{r+1}; maximal r-projective volume.
/// Kept out of line: GCC 11 folds the precondition wrongly when p is an affine
/// function of a caller's loop index (p = 2r - 1).
[[gnu::noinline]] inline double oz_bound(const Spectrum& sigma, std::size_t r, std::size_t p, std::size_t q) {
  detail::require(r <= p && p <= q, ErrorKind::RankOutOfRange, "requires r <= p <= q");
  detail::require(sigma.size() >= r + 1, ErrorKind::RankOutOfRange, "sigma_{r+1} not available");
  const double rr = static_cast<double>(r);
  const double fp = 1.0 + rr / (static_cast<double>(p - r) + 1.0);
  const double fq = 1.0 + rr / (static_cast<double>(q - r) + 1.0);
  return std::sqrt(fp * fq) * sigma[r];
}

/// zeta_r(M) lambda_{r+1}; symmetric positive definite M, principal maximal volume.
inline double spd_zeta_bound(const Spectrum& eigs, std::size_t r) { return zeta(eigs, r) * eigs[r]; }

/// (zeta_p lambda_{p+1} / lambda_{r+1} + 1) lambda_{r+1}; rank-r truncation of the
/// rank-p maximal-volume approximation, r < p.
inline double spd_truncated_bound(const Spectrum& eigs, std::size_t r, std::size_t p) {
  detail::require(r < p, ErrorKind::RankOutOfRange, "requires r < p");
  detail::require_positive_prefix(eigs, p + 1);
  return (zeta(eigs, p) * eigs[p] / eigs[r] + 1.0) * eigs[r];
}

/// sqrt(zeta_r(M^T M) / (1 - r/(q+1))) sigma_{r+1}; general M, p <= q.
inline double general_zeta_bound(const Spectrum& sigma, std::size_t r, std::size_t q) {
  detail::require(r <= q, ErrorKind::RankOutOfRange, "requires r <= q");
  detail::require_positive_prefix(sigma, r + 1);
  const double z = zeta(sigma.squared(), r);
  const double denom = 1.0 - static_cast<double>(r) / (static_cast<double>(q) + 1.0);
  return std::sqrt(z / denom) * sigma[r];
}

namespace detail {
inline void check_decay(double s, double c1, double c2) {
  require(s > 0.0 && c1 > 0.0 && c1 <= c2 && std::isfinite(s) && std::isfinite(c2), ErrorKind::InvalidDecayParams,
          "need s > 0 and 0 < C1 <= C2");
}
}  // namespace detail

/// c = (s+1) C2/C1 with ||M_hat - M||_C <= c lambda_{r+1} when C1 k^-s <= lambda_k <= C2 k^-s.
inline double spd_decay_constant(double s, double c1, double c2) {
  detail::check_decay(s, c1, c2);
  return (s + 1.0) * c2 / c1;
}

/// alpha/(alpha-1) (C2/C1) (2s+1): bounds the squared ratio ||M_hat - M||_C^2 / sigma_{r+1}^2
/// for q = alpha r - 1 and C1 k^-2s <= sigma_k^2 <= C2 k^-2s.
inline double general_decay_constant(double s, double c1, double c2, double alpha) {
  detail::check_decay(s, c1, c2);
  detail::require(alpha > 1.0, ErrorKind::InvalidDecayParams, "need alpha > 1");
  return alpha / (alpha - 1.0) * (c2 / c1) * (2.0 * s + 1.0);
}

struct PowerDecay {
  double alpha;  // p = alpha (r+1) - 1
};
struct GeometricDecay {
  std::size_t r;  // p = 2r
};

/// Power: (C2/C1)^2 (s+1) alpha^-s + 1.
inline double truncated_decay_constant(double s, double c1, double c2, PowerDecay mode) {
  detail::check_decay(s, c1, c2);
  detail::require(mode.alpha > 1.0, ErrorKind::InvalidDecayParams, "need alpha > 1");
  const double ratio = c2 / c1;
  return ratio * ratio * (s + 1.0) * std::pow(mode.alpha, -s) + 1.0;
}

/// Geometric: (C2/C1) (2r+1) q^r + 1.
inline double truncated_decay_constant(double q, double c1, double c2, GeometricDecay mode) {
  detail::require(q > 0.0 && q < 1.0, ErrorKind::InvalidDecayParams, "need 0 < q < 1");
  detail::require(c1 > 0.0 && c1 <= c2, ErrorKind::InvalidDecayParams, "need 0 < C1 <= C2");
  const double rr = static_cast<double>(mode.r);
  return (c2 / c1) * (2.0 * rr + 1.0) * std::pow(q, rr) + 1.0;
}

/// Every bound evaluable for one (r, p, q) point; absent fields had failing preconditions.
struct BoundReport {
  std::size_t r = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  double sigma_r_plus_1 = 0.0;
  double gt_bound = 0.0;
  std::optional<double> oz_bound;
  std::optional<double> spd_zeta_bound;
  std::optional<double> spd_truncated_bound;
  std::optional<double> general_zeta_bound;
  std::optional<double> actual_error;
};

namespace detail {
template <typename F>
std::optional<double> try_bound(F&& f) {
  try {
    return f();
  } catch (const Error&) {
    return std::nullopt;
  }
}
}  // namespace detail

/// `sigma` are singular values; `eigs` (present only for SPD matrices) are eigenvalues.
inline BoundReport evaluate(const Spectrum& sigma, const std::optional<Spectrum>& eigs, std::size_t r,
                            std::size_t p, std::size_t q) {
  BoundReport b;
  b.r = r;
  b.p = p;
  b.q = q;
  detail::require(sigma.size() >= r + 1, ErrorKind::RankOutOfRange, "sigma_{r+1} not available");
  b.sigma_r_plus_1 = sigma[r];
  b.gt_bound = gt_bound(sigma, r);
  b.oz_bound = detail::try_bound([&] { return oz_bound(sigma, r, p, q); });
  b.general_zeta_bound = detail::try_bound([&] { return general_zeta_bound(sigma, r, q); });
  if (eigs) {
    b.spd_zeta_bound = detail::try_bound([&] { return spd_zeta_bound(*eigs, r); });
    b.spd_truncated_bound = detail::try_bound([&] { return spd_truncated_bound(*eigs, r, p); });
  }
  return b;
}

}  // namespace skelcur::bounds
