#pragma once

// Truncated Fock-space representations used as an independent brute-force
// check of the closed forms. Multi-mode indices are row-major with mode 1
// as the slow index: i = i1 * dim2 + i2.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catentropy/coherent.hpp"
#include "catentropy/errors.hpp"

namespace catentropy::fock {

using cplx = std::complex<double>;

inline constexpr std::size_t max_cutoff = 256;

struct fock_vector {
  std::vector<cplx> amplitudes;
  std::vector<std::size_t> mode_dims;
  // 1 - sum |c_n|^2 for vectors that represent a normalized state.
  double deficit = 0.0;

  std::size_t dim() const noexcept { return amplitudes.size(); }
};

class fock_matrix {
 public:
  fock_matrix() = default;
  fock_matrix(std::size_t dim, std::vector<std::size_t> mode_dims)
      : dim_(dim), entries_(dim * dim), mode_dims_(std::move(mode_dims)) {
    const auto product = std::accumulate(mode_dims_.begin(), mode_dims_.end(), std::size_t{1},
                                         std::multiplies<>{});
    if (product != dim_) throw std::invalid_argument("mode dimensions do not multiply to dim");
  }
  explicit fock_matrix(std::size_t dim) : fock_matrix(dim, {dim}) {}

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::size_t>& mode_dims() const noexcept { return mode_dims_; }

  cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  std::span<cplx> entries() noexcept { return entries_; }
  std::span<const cplx> entries() const noexcept { return entries_; }

  cplx trace() const {
    cplx t{};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  // max |M_ij - conj(M_ji)|
  double hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> entries_;
  std::vector<std::size_t> mode_dims_;
};

// Smallest cutoff whose Poisson tail (mean |alpha|^2) and geometric tail
// (N / (1 + N))^cutoff both fall below tail_tol.
inline std::size_t choose_cutoff(double max_abs_alpha, double mean_photons, double tail_tol) {
  if (!(tail_tol > 0.0)) throw std::invalid_argument("tail tolerance must be positive");
  if (!(max_abs_alpha >= 0.0) || !(mean_photons >= 0.0))
    throw std::invalid_argument("amplitude and mean photon number must be nonnegative");
  const double mu = max_abs_alpha * max_abs_alpha;
  const double ratio = mean_photons / (1.0 + mean_photons);

  // Suffix sums of the Poisson weights, accumulated from far beyond the cap.
  const auto upper = max_cutoff + 64 + static_cast<std::size_t>(mu + 40.0 * std::sqrt(mu) + 40.0);
  std::vector<double> tail(upper + 2, 0.0);
  for (std::size_t n = upper + 1; n-- > 0;) {
    double p = 0.0;
    if (mu == 0.0) {
      p = n == 0 ? 1.0 : 0.0;
    } else {
      p = std::exp(-mu + static_cast<double>(n) * std::log(mu) - std::lgamma(static_cast<double>(n) + 1.0));
    }
    tail[n] = tail[n + 1] + p;
  }
  for (std::size_t cutoff = 1; cutoff <= max_cutoff; ++cutoff) {
    if (tail[cutoff] < tail_tol && std::pow(ratio, static_cast<double>(cutoff)) < tail_tol)
      return cutoff;
  }
  throw cutoff_exceeded("no Fock cutoff <= " + std::to_string(max_cutoff) +
                        " meets tail tolerance " + std::to_string(tail_tol) +
                        " for |alpha| = " + std::to_string(max_abs_alpha) +
                        ", N = " + std::to_string(mean_photons));
}

// c_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!) by the recurrence c_n = c_{n-1} alpha / sqrt(n).
inline fock_vector coherent_fock(amplitude alpha, std::size_t cutoff) {
  if (cutoff == 0) throw std::invalid_argument("cutoff must be >= 1");
  require_finite(alpha, "alpha");
  fock_vector v{std::vector<cplx>(cutoff), {cutoff}, 0.0};
  v.amplitudes[0] = std::exp(-0.5 * std::norm(alpha));
  for (std::size_t n = 1; n < cutoff; ++n)
    v.amplitudes[n] = v.amplitudes[n - 1] * alpha / std::sqrt(static_cast<double>(n));
  double norm2 = 0.0;
  for (const auto& c : v.amplitudes) norm2 += std::norm(c);
  v.deficit = std::max(0.0, 1.0 - norm2);
  return v;
}

// <bra|ket> over matching dimensions.
inline cplx inner(const fock_vector& bra, const fock_vector& ket) {
  if (bra.dim() != ket.dim()) throw std::invalid_argument("inner product of mismatched vectors");
  cplx sum{};
  for (std::size_t i = 0; i < ket.dim(); ++i) sum += std::conj(bra.amplitudes[i]) * ket.amplitudes[i];
  return sum;
}

// Diagonal geometric distribution p_n = N^n / (1 + N)^{n+1}.
inline fock_matrix thermal_fock(double mean_photons, std::size_t cutoff) {
  if (!(mean_photons >= 0.0)) throw std::invalid_argument("mean photon number must be >= 0");
  if (cutoff == 0) throw std::invalid_argument("cutoff must be >= 1");
  fock_matrix rho(cutoff);
  const double ratio = mean_photons / (1.0 + mean_photons);
  double p = 1.0 / (1.0 + mean_photons);
  for (std::size_t n = 0; n < cutoff; ++n, p *= ratio) rho(n, n) = p;
  return rho;
}

struct outer_term {
  cplx weight;
  const fock_vector* ket;
  const fock_vector* bra;
};

inline constexpr double hermiticity_tolerance = 1e-13;

// Replaces M by (M + M^dagger) / 2 after checking the defect.
inline void symmetrize(fock_matrix& m) {
  const double defect = m.hermiticity_defect();
  if (defect > hermiticity_tolerance)
    throw hermiticity_violation("matrix asymmetry " + std::to_string(defect) +
                                " exceeds tolerance");
  for (std::size_t i = 0; i < m.dim(); ++i) {
    m(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = avg;
      m(j, i) = std::conj(avg);
    }
  }
}

// sum_k w_k |ket_k><bra_k|; cross terms must come with their conjugates.
inline fock_matrix assemble_mixture(std::span<const outer_term> terms) {
  if (terms.empty()) throw std::invalid_argument("mixture needs at least one term");
  const auto& dims = terms.front().ket->mode_dims;
  const std::size_t dim = terms.front().ket->dim();
  fock_matrix rho(dim, dims);
  for (const auto& term : terms) {
    if (term.ket->dim() != dim || term.bra->dim() != dim)
      throw std::invalid_argument("mixture terms have mismatched dimensions");
    for (std::size_t i = 0; i < dim; ++i) {
      const cplx left = term.weight * term.ket->amplitudes[i];
      if (left == cplx{}) continue;
      for (std::size_t j = 0; j < dim; ++j) rho(i, j) += left * std::conj(term.bra->amplitudes[j]);
    }
  }
  symmetrize(rho);
  return rho;
}

inline fock_matrix assemble_mixture(std::initializer_list<outer_term> terms) {
  return assemble_mixture(std::span<const outer_term>(terms.begin(), terms.size()));
}

// sum_k w_k M_k for matrices of identical shape.
inline fock_matrix weighted_sum(std::initializer_list<std::pair<double, const fock_matrix*>> terms) {
  if (terms.size() == 0) throw std::invalid_argument("weighted_sum needs at least one term");
  const auto& first = *terms.begin()->second;
  fock_matrix out(first.dim(), first.mode_dims());
  for (const auto& [w, m] : terms) {
    if (m->dim() != out.dim() || m->mode_dims() != out.mode_dims())
      throw std::invalid_argument("weighted_sum of mismatched matrices");
    auto dst = out.entries();
    auto src = m->entries();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += w * src[k];
  }
  return out;
}

inline std::vector<std::size_t> concat_dims(const std::vector<std::size_t>& x,
                                            const std::vector<std::size_t>& y) {
  std::vector<std::size_t> dims = x;
  dims.insert(dims.end(), y.begin(), y.end());
  return dims;
}

// Kronecker product; the first factor carries the slow index.
inline fock_vector tensor_product(const fock_vector& x, const fock_vector& y) {
  fock_vector out{std::vector<cplx>(x.dim() * y.dim()), concat_dims(x.mode_dims, y.mode_dims),
                  1.0 - (1.0 - x.deficit) * (1.0 - y.deficit)};
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j) out.amplitudes[i * y.dim() + j] = x.amplitudes[i] * y.amplitudes[j];
  return out;
}

inline fock_matrix tensor_product(const fock_matrix& x, const fock_matrix& y) {
  const std::size_t dx = x.dim(), dy = y.dim();
  fock_matrix out(dx * dy, concat_dims(x.mode_dims(), y.mode_dims()));
  for (std::size_t i1 = 0; i1 < dx; ++i1)
    for (std::size_t j1 = 0; j1 < dx; ++j1) {
      const cplx xij = x(i1, j1);
      if (xij == cplx{}) continue;
      for (std::size_t i2 = 0; i2 < dy; ++i2)
        for (std::size_t j2 = 0; j2 < dy; ++j2) out(i1 * dy + i2, j1 * dy + j2) = xij * y(i2, j2);
    }
  return out;
}

// Sums over the basis of the other mode of a two-mode matrix.
inline fock_matrix partial_trace(const fock_matrix& rho, subsystem keep) {
  if (rho.mode_dims().size() != 2)
    throw mode_count_mismatch("partial_trace expects exactly two modes, got " +
                              std::to_string(rho.mode_dims().size()));
  const std::size_t d1 = rho.mode_dims()[0], d2 = rho.mode_dims()[1];
  if (keep == subsystem::first) {
    fock_matrix out(d1);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j) {
        cplx sum{};
        for (std::size_t k = 0; k < d2; ++k) sum += rho(i * d2 + k, j * d2 + k);
        out(i, j) = sum;
      }
    return out;
  }
  fock_matrix out(d2);
  for (std::size_t i = 0; i < d2; ++i)
    for (std::size_t j = 0; j < d2; ++j) {
      cplx sum{};
      for (std::size_t k = 0; k < d1; ++k) sum += rho(k * d2 + i, k * d2 + j);
      out(i, j) = sum;
    }
  return out;
}

// |psi> = sum_j coefficient_j |first_j> (x) |second_j>, kept in factored form.
struct product_superposition {
  struct component {
    cplx coefficient;
    fock_vector first;
    fock_vector second;
  };
  std::vector<component> components;
};

// Partial trace of sum_k w_k |psi_k><psi_k| computed from the factors, without
// forming the joint matrix. Used when the joint dimension is too large.
inline fock_matrix partial_trace_factored(
    std::span<const std::pair<double, product_superposition>> mixture, subsystem keep) {
  if (mixture.empty() || mixture.front().second.components.empty())
    throw std::invalid_argument("empty mixture");
  const auto kept = [keep](const product_superposition::component& c) -> const fock_vector& {
    return keep == subsystem::first ? c.first : c.second;
  };
  const auto traced = [keep](const product_superposition::component& c) -> const fock_vector& {
    return keep == subsystem::first ? c.second : c.first;
  };
  const std::size_t dim = kept(mixture.front().second.components.front()).dim();
  fock_matrix out(dim);
  for (const auto& [weight, psi] : mixture) {
    for (const auto& cj : psi.components) {
      for (const auto& cl : psi.components) {
        const cplx w = weight * cj.coefficient * std::conj(cl.coefficient) * inner(traced(cl), traced(cj));
        const auto& ket = kept(cj);
        const auto& bra = kept(cl);
        if (ket.dim() != dim || bra.dim() != dim) throw std::invalid_argument("mismatched factors");
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j) out(i, j) += w * ket.amplitudes[i] * std::conj(bra.amplitudes[j]);
      }
    }
  }
  symmetrize(out);
  return out;
}

inline fock_vector scaled_sum(cplx x_coef, const fock_vector& x, cplx y_coef, const fock_vector& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("scaled_sum of mismatched vectors");
  fock_vector out{std::vector<cplx>(x.dim()), x.mode_dims, 0.0};
  for (std::size_t i = 0; i < x.dim(); ++i) out.amplitudes[i] = x_coef * x.amplitudes[i] + y_coef * y.amplitudes[i];
  return out;
}

inline double norm_squared(const fock_vector& v) {
  double s = 0.0;
  for (const auto& c : v.amplitudes) s += std::norm(c);
  return s;
}

// sum_ij |M_ij|^2, which is Tr M^2 for Hermitian M.
inline double purity_from_matrix(const fock_matrix& rho) {
  double sum = 0.0;
  for (const auto& e : rho.entries()) sum += std::norm(e);
  return sum;
}

inline constexpr double eigenvalue_clamp = 1e-10;

// -sum lambda ln lambda; eigenvalues in [-1e-10, 0) count as 0.
inline double entropy_from_spectrum(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < -eigenvalue_clamp)
      throw negative_eigenvalue("eigenvalue " + std::to_string(lambda) + " below clamp window");
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

}  // namespace catentropy::fock
