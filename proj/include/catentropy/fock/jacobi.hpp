#pragma once

// Cyclic Jacobi eigenvalues of a complex Hermitian matrix.
//
// Each rotation first removes the phase of a_pq with diag(1, e^{-i phi}) and
// then applies the real symmetric Jacobi rotation to the (p, q) block, so the
// unitary is U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on columns p, q.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "catentropy/errors.hpp"
#include "catentropy/fock/fock.hpp"

namespace catentropy::fock {

struct jacobi_options {
  double off_diagonal_tol = 1e-13;
  int max_sweeps = 100;
};

namespace detail {

inline double off_diagonal_norm(const fock_matrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (i != j) sum += std::norm(m(i, j));
  return std::sqrt(sum);
}

inline double frobenius_norm(const fock_matrix& m) {
  double sum = 0.0;
  for (const auto& e : m.entries()) sum += std::norm(e);
  return std::sqrt(sum);
}

inline void rotate(fock_matrix& m, std::size_t p, std::size_t q) {
  const cplx apq = m(p, q);
  const double g = std::abs(apq);
  const double app = m(p, p).real();
  const double aqq = m(q, q).real();

  // NR-style guard: an element negligible against both diagonals is dropped.
  if (g == 0.0) return;
  if (std::abs(app) + 100.0 * g == std::abs(app) && std::abs(aqq) + 100.0 * g == std::abs(aqq)) {
    m(p, q) = m(q, p) = 0.0;
    return;
  }

  const cplx phase = apq / g;  // e^{i phi}
  const double theta = (aqq - app) / (2.0 * g);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const cplx s_conj_phase = s * std::conj(phase);
  const cplx s_phase = s * phase;
  const cplx c_conj_phase = c * std::conj(phase);
  const cplx c_phase = c * phase;

  const std::size_t n = m.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx kp = m(k, p), kq = m(k, q);
    m(k, p) = c * kp - s_conj_phase * kq;
    m(k, q) = s * kp + c_conj_phase * kq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cplx pk = m(p, k), qk = m(q, k);
    m(p, k) = c * pk - s_phase * qk;
    m(q, k) = s * pk + c_phase * qk;
  }
  m(p, p) = app - t * g;
  m(q, q) = aqq + t * g;
  m(p, q) = m(q, p) = 0.0;
}

}  // namespace detail

// Full real spectrum in descending order.
inline std::vector<double> hermitian_eigenvalues(fock_matrix m, const jacobi_options& opts = {}) {
  const double defect = m.hermiticity_defect();
  const double scale = std::max(1.0, detail::frobenius_norm(m));
  if (defect > hermiticity_tolerance * scale)
    throw hermiticity_violation("eigensolver input is not Hermitian (defect " +
                                std::to_string(defect) + ")");
  const std::size_t n = m.dim();
  const double tol = opts.off_diagonal_tol * scale;

  double residual = detail::off_diagonal_norm(m);
  int sweep = 0;
  while (residual >= tol) {
    if (sweep == opts.max_sweeps)
      throw no_convergence("Jacobi did not converge in " + std::to_string(opts.max_sweeps) +
                               " sweeps (off-diagonal norm " + std::to_string(residual) + ")",
                           residual);
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) detail::rotate(m, p, q);
    residual = detail::off_diagonal_norm(m);
    ++sweep;
  }

  std::vector<double> eigenvalues(n);
  for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = m(i, i).real();
  std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>{});
  return eigenvalues;
}

inline double von_neumann_entropy(const fock_matrix& rho) {
  const auto eigs = hermitian_eigenvalues(rho);
  return entropy_from_spectrum(eigs);
}

}  // namespace catentropy::fock
