#pragma once

// Replica-method entropy of a rank-2 coherent mixture.
//
// rho^n stays inside span{|alpha>, |beta>}, so Tr rho^n equals the trace of
// the n-th power of a 2x2 transfer matrix T. Its eigenvalues solve
// lambda^2 - lambda + D = 0 with D = (ab - |c|^2)(1 - |<beta|alpha>|^2), and
// S = -d/dn Tr rho^n at n = 1 = -lambda1 ln lambda1 - lambda2 ln lambda2.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "catentropy/coherent.hpp"
#include "catentropy/errors.hpp"

namespace catentropy {

// Product lambda1 * lambda2 of the two nonzero eigenvalues, in [0, 1/4].
struct d_parameter {
  double value = 0.0;
};

// The two nonzero eigenvalues, lambda1 >= lambda2.
struct spectral_pair {
  double lambda1 = 1.0;
  double lambda2 = 0.0;
};

// Slack allowed outside [0, 1/4] before a raw D is treated as a broken input.
inline constexpr double d_clamp_slack = 1e-9;

inline d_parameter clamp_d(double raw) {
  if (!(raw >= -d_clamp_slack && raw <= 0.25 + d_clamp_slack))
    throw clamp_exceeded("D = " + std::to_string(raw) + " lies outside [0, 1/4]");
  return d_parameter{std::clamp(raw, 0.0, 0.25)};
}

inline d_parameter d_parameter_of(const two_state_mixture& spec) {
  // 1 - exp(-|alpha - beta|^2) via expm1 for nearby amplitudes.
  const double distinguishability = -std::expm1(-std::norm(spec.alpha - spec.beta));
  return clamp_d(spec.determinant() * distinguishability);
}

inline spectral_pair spectral_pair_of(d_parameter d) {
  const double root = std::sqrt(std::max(0.0, 1.0 - 4.0 * d.value));
  const double lambda1 = 0.5 * (1.0 + root);
  // lambda1 * lambda2 = D avoids cancellation in (1 - root) / 2.
  return spectral_pair{lambda1, d.value / lambda1};
}

inline spectral_pair spectral_pair_of(const two_state_mixture& spec) {
  return spectral_pair_of(d_parameter_of(spec));
}

// 2x2 complex matrix, row-major.
using transfer_matrix = std::array<std::complex<double>, 4>;

// Transfer matrix acting on the coefficient pairs (C1, C2) and (C3, C4):
//   [ a + c* <alpha|beta>   a <beta|alpha> + c* ]
//   [ c + b <alpha|beta>    c <beta|alpha> + b  ]
inline transfer_matrix transfer_matrix_of(const two_state_mixture& spec) {
  const auto s = overlap(spec.alpha, spec.beta);  // <beta|alpha>
  const auto s_conj = std::conj(s);                // <alpha|beta>
  const auto c_conj = std::conj(spec.c);
  return {spec.a + c_conj * s_conj, spec.a * s + c_conj, spec.c + spec.b * s_conj,
          spec.c * s + spec.b};
}

inline transfer_matrix multiply(const transfer_matrix& x, const transfer_matrix& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

// Tr rho^n from the coefficient recurrence. rho^n = C1|a><a| + C2|a><b| +
// C3|b><a| + C4|b><b| with (C1, C2) and (C3, C4) each advanced by T, starting
// at (a, c) and (c*, b). No eigendecomposition is involved.
inline double trace_power_recurrence(const two_state_mixture& spec, unsigned n) {
  if (n == 0) throw std::invalid_argument("trace_power_recurrence requires n >= 1");
  const auto t = transfer_matrix_of(spec);
  std::complex<double> c1 = spec.a, c2 = spec.c, c3 = std::conj(spec.c), c4 = spec.b;
  for (unsigned k = 1; k < n; ++k) {
    const auto n1 = t[0] * c1 + t[1] * c2;
    const auto n2 = t[2] * c1 + t[3] * c2;
    const auto n3 = t[0] * c3 + t[1] * c4;
    const auto n4 = t[2] * c3 + t[3] * c4;
    c1 = n1, c2 = n2, c3 = n3, c4 = n4;
  }
  const auto s = overlap(spec.alpha, spec.beta);
  return (c1 + c4 + s * c2 + std::conj(s) * c3).real();
}

// lambda1^n + lambda2^n for real n >= 1 (0^n = 0).
inline double trace_power_spectral(const spectral_pair& pair, double n) {
  const auto pow0 = [n](double x) { return x > 0.0 ? std::pow(x, n) : 0.0; };
  return pow0(pair.lambda1) + pow0(pair.lambda2);
}

inline constexpr double default_replica_step = 1e-5;

// -d/dn Tr rho^n at n = 1 by finite differences of the continued trace.
inline double replica_entropy(const two_state_mixture& spec, double step = default_replica_step) {
  if (!(step > 0.0 && step <= 1e-3))
    throw std::invalid_argument("replica step must lie in (0, 1e-3]");
  const auto pair = spectral_pair_of(spec);
  const auto f = [&pair](double n) { return trace_power_spectral(pair, n); };
  if (pair.lambda2 == 0.0) return -(f(1.0 + step) - f(1.0)) / step;
  return -(f(1.0 + step) - f(1.0 - step)) / (2.0 * step);
}

// -x ln x with 0 ln 0 = 0.
inline double entropy_term(double x) { return x > 0.0 ? -x * std::log(x) : 0.0; }

// -lambda1 ln lambda1 - lambda2 ln lambda2 in nats.
inline double binary_entropy(const spectral_pair& pair) {
  // ln lambda1 = log1p(-lambda2) keeps precision when lambda1 is close to 1.
  const double first = pair.lambda1 > 0.0 ? -pair.lambda1 * std::log1p(-pair.lambda2) : 0.0;
  return first + entropy_term(pair.lambda2);
}

inline double entropy_closed(const two_state_mixture& spec) {
  return binary_entropy(spectral_pair_of(spec));
}

inline double nats_to_bits(double nats) { return nats / std::numbers::ln2; }

}  // namespace catentropy
