#pragma once

// Fock-space realizations of the states handled in closed form elsewhere, and
// the brute-force quantities computed from them. Nothing here calls the
// closed-form entropy or purity code; cat normalizations are computed from
// the truncated vectors themselves.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "catentropy/coherent.hpp"
#include "catentropy/fock/fock.hpp"
#include "catentropy/fock/jacobi.hpp"
#include "catentropy/purity.hpp"
#include "catentropy/two_mode_cat.hpp"

namespace catentropy::fock {

inline constexpr double default_tail_tol = 1e-12;

struct mode_cutoffs {
  std::size_t first = 1;
  std::size_t second = 1;
};

// Independent per-mode cutoffs for amplitudes alpha1, alpha2 and thermal occupation N.
inline mode_cutoffs choose_mode_cutoffs(amplitude alpha1, amplitude alpha2, double mean_photons,
                                        double tail_tol) {
  return {choose_cutoff(std::abs(alpha1), mean_photons, tail_tol),
          choose_cutoff(std::abs(alpha2), mean_photons, tail_tol)};
}

inline fock_matrix two_state_matrix(const two_state_mixture& spec, std::size_t cutoff) {
  const auto va = coherent_fock(spec.alpha, cutoff);
  const auto vb = coherent_fock(spec.beta, cutoff);
  return assemble_mixture({{spec.a, &va, &va},
                           {spec.c, &va, &vb},
                           {std::conj(spec.c), &vb, &va},
                           {spec.b, &vb, &vb}});
}

inline double two_state_entropy(const two_state_mixture& spec, std::size_t cutoff) {
  return von_neumann_entropy(two_state_matrix(spec, cutoff));
}

inline double two_state_entropy(const two_state_mixture& spec, double tail_tol = default_tail_tol) {
  const double reach = std::max(std::abs(spec.alpha), std::abs(spec.beta));
  return two_state_entropy(spec, choose_cutoff(reach, 0.0, tail_tol));
}

// |alpha1, alpha2> +- |-alpha1, -alpha2> as factored components, normalized
// by the norm of the truncated superposition.
inline product_superposition cat_components(cat_sign sign, amplitude alpha1, amplitude alpha2,
                                            mode_cutoffs cutoffs) {
  product_superposition psi;
  const double s = sign == cat_sign::even ? 1.0 : -1.0;
  psi.components.push_back({1.0, coherent_fock(alpha1, cutoffs.first), coherent_fock(alpha2, cutoffs.second)});
  psi.components.push_back({s, coherent_fock(-alpha1, cutoffs.first), coherent_fock(-alpha2, cutoffs.second)});
  double norm2 = 0.0;
  for (const auto& cj : psi.components)
    for (const auto& cl : psi.components)
      norm2 += (std::conj(cl.coefficient) * cj.coefficient * inner(cl.first, cj.first) *
                inner(cl.second, cj.second))
                   .real();
  if (!(norm2 > 0.0)) throw degenerate_cat_state("truncated cat vector has zero norm");
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : psi.components) c.coefficient *= scale;
  return psi;
}

inline fock_vector joint_vector(const product_superposition& psi) {
  fock_vector out;
  for (const auto& c : psi.components) {
    auto term = tensor_product(c.first, c.second);
    if (out.amplitudes.empty()) {
      out = fock_vector{std::vector<cplx>(term.dim()), term.mode_dims, 0.0};
    }
    for (std::size_t i = 0; i < term.dim(); ++i) out.amplitudes[i] += c.coefficient * term.amplitudes[i];
  }
  return out;
}

// Normalized truncated cat vector N(|alpha1,alpha2> +- |-alpha1,-alpha2>) and its norm constant.
struct cat_vector {
  fock_vector joint;
  double norm_constant = 0.0;
};

inline cat_vector cat_state(cat_sign sign, amplitude alpha1, amplitude alpha2, mode_cutoffs cutoffs) {
  auto psi = cat_components(sign, alpha1, alpha2, cutoffs);
  return {joint_vector(psi), std::abs(psi.components.front().coefficient)};
}

inline std::vector<std::pair<double, product_superposition>> cat_mixture_factored(
    const cat_mixture& spec, mode_cutoffs cutoffs) {
  std::vector<std::pair<double, product_superposition>> mixture;
  if (spec.a > 0.0)
    mixture.emplace_back(spec.a, cat_components(cat_sign::even, spec.alpha1, spec.alpha2, cutoffs));
  if (spec.b > 0.0)
    mixture.emplace_back(spec.b, cat_components(cat_sign::odd, spec.alpha1, spec.alpha2, cutoffs));
  return mixture;
}

// Joint two-mode matrix a|cat+><cat+| + b|cat-><cat-|.
inline fock_matrix cat_mixture_matrix(const cat_mixture& spec, mode_cutoffs cutoffs) {
  std::vector<fock_vector> vectors;
  std::vector<double> weights;
  for (const auto& [w, psi] : cat_mixture_factored(spec, cutoffs)) {
    vectors.push_back(joint_vector(psi));
    weights.push_back(w);
  }
  std::vector<outer_term> terms;
  for (std::size_t k = 0; k < vectors.size(); ++k) terms.push_back({weights[k], &vectors[k], &vectors[k]});
  return assemble_mixture(std::span<const outer_term>(terms));
}

inline mode_cutoffs cat_cutoffs(const cat_mixture& spec, double tail_tol) {
  return choose_mode_cutoffs(spec.alpha1, spec.alpha2, 0.0, tail_tol);
}

// Reduced entropy from the dense joint matrix and partial_trace.
inline double cat_reduced_entropy(const cat_mixture& spec, subsystem keep, mode_cutoffs cutoffs) {
  return von_neumann_entropy(partial_trace(cat_mixture_matrix(spec, cutoffs), keep));
}

// Reduced entropy from the factored partial trace; no joint matrix is formed.
inline double cat_reduced_entropy_factored(const cat_mixture& spec, subsystem keep,
                                           mode_cutoffs cutoffs) {
  const auto mixture = cat_mixture_factored(spec, cutoffs);
  return von_neumann_entropy(partial_trace_factored(mixture, keep));
}

inline double cat_joint_entropy(const cat_mixture& spec, mode_cutoffs cutoffs) {
  return von_neumann_entropy(cat_mixture_matrix(spec, cutoffs));
}

// a |a1,a2><a1,a2| + b |-a1,-a2><-a1,-a2|
inline fock_matrix separable_cat_matrix(const cat_separable& spec, mode_cutoffs cutoffs) {
  const auto plus = tensor_product(coherent_fock(spec.alpha1, cutoffs.first),
                                   coherent_fock(spec.alpha2, cutoffs.second));
  const auto minus = tensor_product(coherent_fock(-spec.alpha1, cutoffs.first),
                                    coherent_fock(-spec.alpha2, cutoffs.second));
  return assemble_mixture({{spec.a, &plus, &plus}, {spec.b, &minus, &minus}});
}

// Level budget per mode for the thermal mixture. The truncated thermal trace
// 1 - delta enters the purity gap linearly, as about delta (1 + (q1 + q2) / 2),
// so at N = 2 and 48 levels the error stays below 5e-9.
inline constexpr std::size_t thermal_level_cap = 48;

inline mode_cutoffs thermal_cutoffs(const thermal_mixture& spec, double tail_tol,
                                    std::size_t cap = thermal_level_cap) {
  // Modes that would need more levels are truncated at the cap.
  const auto per_mode = [&](amplitude alpha) {
    std::size_t needed = cap;
    try {
      needed = choose_cutoff(std::abs(alpha), spec.mean_photons, tail_tol);
    } catch (const cutoff_exceeded&) {
    }
    return std::min(needed, cap);
  };
  return {per_mode(spec.alpha1), per_mode(spec.alpha2)};
}

// 1/2 |a1><a1| (x) rho_T + 1/2 rho_T (x) |a2><a2|
inline fock_matrix thermal_mixture_matrix(const thermal_mixture& spec, mode_cutoffs cutoffs) {
  const auto v1 = coherent_fock(spec.alpha1, cutoffs.first);
  const auto v2 = coherent_fock(spec.alpha2, cutoffs.second);
  const auto p1 = assemble_mixture({{1.0, &v1, &v1}});
  const auto p2 = assemble_mixture({{1.0, &v2, &v2}});
  const auto left = tensor_product(p1, thermal_fock(spec.mean_photons, cutoffs.second));
  const auto right = tensor_product(thermal_fock(spec.mean_photons, cutoffs.first), p2);
  return weighted_sum({{0.5, &left}, {0.5, &right}});
}

inline purity_triple purities_of(const fock_matrix& joint) {
  return purity_triple{purity_from_matrix(joint),
                       purity_from_matrix(partial_trace(joint, subsystem::first)),
                       purity_from_matrix(partial_trace(joint, subsystem::second))};
}

}  // namespace catentropy::fock
