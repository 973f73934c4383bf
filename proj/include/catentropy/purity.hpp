#pragma once

// Purity parameters mu = Tr rho^2 of a bipartite state and its two
// reductions, and the gap 1 + mu(1,2) - mu(1) - mu(2) of the purity inequality.

#include <cmath>
#include <stdexcept>

#include "catentropy/coherent.hpp"
#include "catentropy/errors.hpp"

namespace catentropy {

struct purity_triple {
  double mu12 = 1.0;
  double mu1 = 1.0;
  double mu2 = 1.0;

  double gap() const noexcept { return 1.0 + mu12 - mu1 - mu2; }
};

// a |alpha1, alpha2><alpha1, alpha2| + b |-alpha1, -alpha2><-alpha1, -alpha2|
struct cat_separable {
  double a = 0.5;
  double b = 0.5;
  amplitude alpha1{};
  amplitude alpha2{};
};

// 1/2 |alpha1><alpha1| (x) rho_T + 1/2 rho_T (x) |alpha2><alpha2|
struct thermal_mixture {
  amplitude alpha1{};
  amplitude alpha2{};
  double mean_photons = 0.0;
};

inline cat_separable validate_separable(const cat_separable& spec) {
  require_finite(spec.a, "a");
  require_finite(spec.b, "b");
  require_finite(spec.alpha1, "alpha1");
  require_finite(spec.alpha2, "alpha2");
  if (spec.a < 0.0 || spec.b < 0.0 || std::abs(spec.a + spec.b - 1.0) > 1e-12)
    throw weight_violation("separable cat weights must be nonnegative with a + b = 1");
  return spec;
}

inline thermal_mixture validate_thermal(const thermal_mixture& spec) {
  require_finite(spec.alpha1, "alpha1");
  require_finite(spec.alpha2, "alpha2");
  require_finite(spec.mean_photons, "mean_photons");
  if (spec.mean_photons < 0.0) throw std::invalid_argument("mean photon number must be >= 0");
  return spec;
}

// N = 1 / (e^{1/T} - 1).
inline double thermal_mean_photon(double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw invalid_temperature("temperature must be positive and finite");
  return 1.0 / std::expm1(1.0 / temperature);
}

// <alpha| rho_T |alpha> = e^{-|alpha|^2 / (1+N)} / (1+N).
inline double thermal_coherent_overlap(amplitude alpha, double mean_photons) {
  if (!(mean_photons >= 0.0)) throw std::invalid_argument("mean photon number must be >= 0");
  const double scale = 1.0 + mean_photons;
  return std::exp(-std::norm(alpha) / scale) / scale;
}

// Tr rho_T^2 for the geometric photon distribution.
inline double thermal_purity(double mean_photons) { return 1.0 / (1.0 + 2.0 * mean_photons); }

// Both components differ by a sign flip, so every cross term carries
// |<-x|x>|^2 = e^{-4|x|^2} for the modes involved.
inline purity_triple purity_triple_cat(const cat_separable& raw) {
  const auto spec = validate_separable(raw);
  const double diag = spec.a * spec.a + spec.b * spec.b;
  const double cross = 2.0 * spec.a * spec.b;
  const double s1 = std::norm(spec.alpha1);
  const double s2 = std::norm(spec.alpha2);
  return purity_triple{diag + cross * std::exp(-4.0 * (s1 + s2)), diag + cross * std::exp(-4.0 * s1),
                       diag + cross * std::exp(-4.0 * s2)};
}

// 2ab (1 - e^{-4|alpha1|^2}) (1 - e^{-4|alpha2|^2})
inline double purity_gap_cat(const cat_separable& raw) {
  const auto spec = validate_separable(raw);
  return 2.0 * spec.a * spec.b * -std::expm1(-4.0 * std::norm(spec.alpha1)) *
         -std::expm1(-4.0 * std::norm(spec.alpha2));
}

inline purity_triple purity_triple_thermal(const thermal_mixture& raw) {
  const auto spec = validate_thermal(raw);
  const double pt = thermal_purity(spec.mean_photons);
  const double q1 = thermal_coherent_overlap(spec.alpha1, spec.mean_photons);
  const double q2 = thermal_coherent_overlap(spec.alpha2, spec.mean_photons);
  return purity_triple{0.25 * (2.0 * pt + 2.0 * q1 * q2), 0.25 * (1.0 + 2.0 * q1 + pt),
                       0.25 * (1.0 + 2.0 * q2 + pt)};
}

// 1/2 (1 - q1)(1 - q2) with qi = <alpha_i| rho_T |alpha_i>.
inline double purity_gap_thermal(const thermal_mixture& raw) {
  const auto spec = validate_thermal(raw);
  const double q1 = thermal_coherent_overlap(spec.alpha1, spec.mean_photons);
  const double q2 = thermal_coherent_overlap(spec.alpha2, spec.mean_photons);
  return 0.5 * (1.0 - q1) * (1.0 - q2);
}

}  // namespace catentropy
