#pragma once

// Coherent-state algebra: overlaps, rank-2 mixture parameters and the
// normalization constants of the two-mode even/odd cat states.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "catentropy/errors.hpp"

namespace catentropy {

// Coherent-state label (dimensionless field amplitude).
using amplitude = std::complex<double>;

inline bool is_finite(amplitude z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(amplitude z, const char* name) {
  if (!is_finite(z))
    throw non_finite_input(std::string(name) + " has a non-finite component");
}

inline void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) throw non_finite_input(std::string(name) + " is not finite");
}

// <bra|ket> = exp(-|ket|^2/2 - |bra|^2/2 + conj(bra) * ket).
// The first argument is the ket. Exponents below about -745 underflow to 0.
inline std::complex<double> overlap(amplitude ket, amplitude bra) noexcept {
  return std::exp(-0.5 * std::norm(ket) - 0.5 * std::norm(bra) + std::conj(bra) * ket);
}

// |<bra|ket>|^2 = exp(-|ket - bra|^2), evaluated without going through overlap().
inline double overlap_modulus_squared(amplitude ket, amplitude bra) noexcept {
  return std::exp(-std::norm(ket - bra));
}

inline constexpr double trace_tolerance = 1e-12;
inline constexpr double positivity_tolerance = 1e-12;

// rho = a|alpha><alpha| + c|alpha><beta| + conj(c)|beta><alpha| + b|beta><beta|
struct two_state_mixture {
  double a = 1.0;
  double b = 0.0;
  std::complex<double> c{};
  amplitude alpha{};
  amplitude beta{};

  // Tr rho = a + b + 2 Re(c <beta|alpha>).
  double trace() const noexcept {
    return a + b + 2.0 * (c * overlap(alpha, beta)).real();
  }
  // ab - |c|^2; nonnegative for a valid mixture.
  double determinant() const noexcept { return a * b - std::norm(c); }
};

// Returns the mixture unchanged when it describes a unit-trace positive mixture.
inline two_state_mixture validate_mixture(const two_state_mixture& raw) {
  require_finite(raw.a, "a");
  require_finite(raw.b, "b");
  require_finite(raw.c, "c");
  require_finite(raw.alpha, "alpha");
  require_finite(raw.beta, "beta");
  if (raw.a < 0.0 || raw.b < 0.0)
    throw negativity_violation("mixture weights a and b must be nonnegative");
  if (raw.determinant() < -positivity_tolerance)
    throw negativity_violation("mixture requires ab - |c|^2 >= 0");
  const double tr = raw.trace();
  if (std::abs(tr - 1.0) > trace_tolerance)
    throw trace_violation("trace condition a + b + 2 Re(c <beta|alpha>) = 1 violated (trace = " +
                          std::to_string(tr) + ")");
  return raw;
}

// Rescales (a, b, c) by the computed trace, then validates.
inline two_state_mixture normalized_mixture(double a_raw, double b_raw, std::complex<double> c_raw,
                                            amplitude alpha, amplitude beta) {
  two_state_mixture m{a_raw, b_raw, c_raw, alpha, beta};
  const double tr = m.trace();
  if (!(tr > 0.0) || !std::isfinite(tr))
    throw trace_violation("cannot normalize a mixture with nonpositive trace");
  m.a /= tr;
  m.b /= tr;
  m.c /= tr;
  return validate_mixture(m);
}

enum class cat_sign { even, odd };

// Mode index of a two-mode system.
enum class subsystem { first = 1, second = 2 };

// Joint weight sum |alpha1|^2 + |alpha2|^2 below which an odd cat is rejected.
inline constexpr double odd_cat_min_intensity = 1e-8;

// E = exp(-2|alpha1|^2 - 2|alpha2|^2) = <-alpha1,-alpha2|alpha1,alpha2>.
inline double cat_overlap(amplitude alpha1, amplitude alpha2) noexcept {
  return std::exp(-2.0 * (std::norm(alpha1) + std::norm(alpha2)));
}

// N_+- = 2^{-1/2} (1 +- E)^{-1/2}.
inline double cat_norm(cat_sign sign, amplitude alpha1, amplitude alpha2) {
  require_finite(alpha1, "alpha1");
  require_finite(alpha2, "alpha2");
  const double intensity = std::norm(alpha1) + std::norm(alpha2);
  if (sign == cat_sign::even)
    return std::numbers::sqrt2 / 2.0 / std::sqrt(1.0 + std::exp(-2.0 * intensity));
  if (intensity < odd_cat_min_intensity)
    throw degenerate_cat_state("odd cat state vanishes at alpha1 = alpha2 = 0");
  // 1 - E via expm1 keeps precision for small amplitudes.
  return std::numbers::sqrt2 / 2.0 / std::sqrt(-std::expm1(-2.0 * intensity));
}

}  // namespace catentropy
