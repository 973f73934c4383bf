#pragma once

// Mixture of two-mode even and odd cat states
//   rho(1,2) = a |cat+><cat+| + b |cat-><cat-|,
//   |cat+-> = N+- (|alpha1, alpha2> +- |-alpha1, -alpha2>).
//
// Tracing out mode 2 gives a rank-2 mixture of |alpha1> and |-alpha1> with
// diagonal weight A/2 and coherence e^{-2|alpha2|^2} B/2, where
// A = a/(1+E) + b/(1-E), B = a/(1+E) - b/(1-E), E = e^{-2|alpha1|^2 - 2|alpha2|^2}.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "catentropy/coherent.hpp"
#include "catentropy/errors.hpp"
#include "catentropy/replica.hpp"

namespace catentropy {

struct cat_mixture {
  double a = 0.5;
  double b = 0.5;
  amplitude alpha1{};
  amplitude alpha2{};

  double intensity() const noexcept { return std::norm(alpha1) + std::norm(alpha2); }
};

inline constexpr double weight_tolerance = 1e-12;

inline cat_mixture validate_cat(const cat_mixture& spec) {
  require_finite(spec.a, "a");
  require_finite(spec.b, "b");
  require_finite(spec.alpha1, "alpha1");
  require_finite(spec.alpha2, "alpha2");
  if (spec.a < 0.0 || spec.b < 0.0)
    throw weight_violation("cat mixture weights must be nonnegative");
  if (std::abs(spec.a + spec.b - 1.0) > weight_tolerance)
    throw weight_violation("cat mixture weights must satisfy a + b = 1");
  if (spec.b > 0.0 && spec.intensity() < odd_cat_min_intensity)
    throw degenerate_cat_state("odd cat component requires |alpha1|^2 + |alpha2|^2 > 0");
  return spec;
}

// -a ln a - b ln b; the two cat states are orthogonal.
inline double joint_entropy(const cat_mixture& spec) {
  validate_cat(spec);
  return entropy_term(spec.a) + entropy_term(spec.b);
}

// D of the reduced state of subsystem 1:
//   D = 1/4 (1 - e^{-4|alpha1|^2}) (A^2 - e^{-4|alpha2|^2} B^2),
// evaluated as the product (A - eB)(A + eB), e = e^{-2|alpha2|^2}, whose two
// factors are sums of nonnegative terms.
inline d_parameter d_cat(const cat_mixture& spec) {
  validate_cat(spec);
  const double s1 = std::norm(spec.alpha1);
  const double s2 = std::norm(spec.alpha2);
  const double one_minus_e1 = -std::expm1(-4.0 * s1);
  if (one_minus_e1 == 0.0) return d_parameter{0.0};

  const double big_e = std::exp(-2.0 * (s1 + s2));
  const double one_minus_big_e = -std::expm1(-2.0 * (s1 + s2));
  const double e2 = std::exp(-2.0 * s2);
  const double one_minus_e2 = -std::expm1(-2.0 * s2);

  const double even = spec.a / (1.0 + big_e);
  // Odd contribution vanishes with b; skip the division when the odd cat is absent.
  const double odd_over = spec.b > 0.0 ? spec.b / one_minus_big_e : 0.0;

  const double minus = even * one_minus_e2 + odd_over * (1.0 + e2);
  const double plus = even * (1.0 + e2) + odd_over * one_minus_e2;
  return clamp_d(0.25 * one_minus_e1 * minus * plus);
}

inline cat_mixture swap_modes(const cat_mixture& spec) {
  return cat_mixture{spec.a, spec.b, spec.alpha2, spec.alpha1};
}

inline spectral_pair reduced_spectrum(const cat_mixture& spec, subsystem which) {
  return spectral_pair_of(d_cat(which == subsystem::first ? spec : swap_modes(spec)));
}

inline double reduced_entropy(const cat_mixture& spec, subsystem which) {
  return binary_entropy(reduced_spectrum(spec, which));
}

struct photon_weights {
  double vacuum = 1.0;
  double single = 0.0;
};

// Leading-order reduced state of subsystem 1 for small amplitudes:
// w0 |0><0| + w1 |1><1|.
inline photon_weights small_alpha_reduced_weights(const cat_mixture& spec) {
  validate_cat(spec);
  const double s1 = std::norm(spec.alpha1);
  const double s2 = std::norm(spec.alpha2);
  if (s1 + s2 < odd_cat_min_intensity)
    throw degenerate_cat_state("small-amplitude limit depends on the direction of approach to 0");
  const double w1 = spec.b * s1 / (s1 + s2);
  return photon_weights{spec.a + spec.b * s2 / (s1 + s2), w1};
}

inline double small_alpha_entropy(const cat_mixture& spec) {
  const auto w = small_alpha_reduced_weights(spec);
  return entropy_term(w.vacuum) + entropy_term(w.single);
}

struct sweep_row {
  double ratio = 1.0;
  double abs_alpha1 = 0.0;
  double entropy1 = 0.0;
};

// Reduced entropy of subsystem 1 at real alpha1 = x, alpha2 = ratio * x for
// every (ratio, x); rows are ratio-major, then in grid order.
inline std::vector<sweep_row> sweep_fig1(const std::vector<double>& ratios,
                                         const std::vector<double>& alpha1_grid, double a,
                                         double b) {
  std::vector<sweep_row> rows;
  rows.reserve(ratios.size() * alpha1_grid.size());
  for (double ratio : ratios) {
    if (!(ratio > 0.0) || !std::isfinite(ratio))
      throw std::invalid_argument("sweep ratios must be positive");
    for (double x : alpha1_grid) {
      if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument("sweep grid values must be nonnegative");
      const cat_mixture spec{a, b, amplitude{x, 0.0}, amplitude{ratio * x, 0.0}};
      rows.push_back(sweep_row{ratio, x, reduced_entropy(spec, subsystem::first)});
    }
  }
  return rows;
}

// n uniformly spaced points on [lo, hi]; a single point sits at lo, and the
// last of several points is hi exactly.
inline std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n == 0) throw std::invalid_argument("grid needs at least one point");
  if (!(hi >= lo)) throw std::invalid_argument("grid requires hi >= lo");
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i)
    grid[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  if (n > 1) grid.back() = hi;
  return grid;
}

}  // namespace catentropy
