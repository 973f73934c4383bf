#pragma once

// Predefined closed-form vs Fock-space comparison grids for `oracle-compare`.

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "catentropy/catentropy.hpp"
#include "records.hpp"

namespace catentropy::cli {

struct comparison_case {
  std::string quantity;
  std::vector<std::pair<std::string, double>> inputs;
  std::function<double()> closed_form;
  std::function<double()> oracle;
};

// Uniform point in the disk |z| <= radius.
inline amplitude random_amplitude(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

// Random valid two-state mixture with |alpha|, |beta| <= radius.
inline two_state_mixture random_mixture(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double a = weight(rng);
  const double b = weight(rng);
  const auto c = std::polar(unit(rng) * std::sqrt(a * b), 2.0 * std::numbers::pi * unit(rng));
  const auto alpha = random_amplitude(rng, radius);
  const auto beta = random_amplitude(rng, radius);
  return normalized_mixture(a, b, c, alpha, beta);
}

inline constexpr double cat_tail_tol = 1e-12;

inline comparison_case two_state_case(const two_state_mixture& spec) {
  return {"entropy_two_state",
          {{"a", spec.a},
           {"b", spec.b},
           {"c_re", spec.c.real()},
           {"c_im", spec.c.imag()},
           {"alpha_re", spec.alpha.real()},
           {"alpha_im", spec.alpha.imag()},
           {"beta_re", spec.beta.real()},
           {"beta_im", spec.beta.imag()}},
          [spec] { return entropy_closed(spec); },
          [spec] { return fock::two_state_entropy(spec, fock::default_tail_tol); }};
}

inline comparison_case reduced_case(double a, double abs1, double abs2, subsystem keep) {
  const cat_mixture spec{a, 1.0 - a, amplitude{abs1, 0.0}, amplitude{abs2, 0.0}};
  return {"reduced_entropy",
          {{"a", a}, {"abs_alpha1", abs1}, {"abs_alpha2", abs2}, {"subsystem", keep == subsystem::first ? 1.0 : 2.0}},
          [spec, keep] { return reduced_entropy(spec, keep); },
          [spec, keep] { return fock::cat_reduced_entropy(spec, keep, fock::cat_cutoffs(spec, cat_tail_tol)); }};
}

inline comparison_case joint_case(double a, double abs1, double abs2) {
  const cat_mixture spec{a, 1.0 - a, amplitude{abs1, 0.0}, amplitude{abs2, 0.0}};
  return {"joint_entropy",
          {{"a", a}, {"abs_alpha1", abs1}, {"abs_alpha2", abs2}},
          [spec] { return joint_entropy(spec); },
          [spec] { return fock::cat_joint_entropy(spec, fock::cat_cutoffs(spec, cat_tail_tol)); }};
}

inline comparison_case purity_cat_case(double a, double abs1, double abs2) {
  const cat_separable spec{a, 1.0 - a, amplitude{abs1, 0.0}, amplitude{abs2, 0.0}};
  return {"purity_gap_cat",
          {{"a", a}, {"abs_alpha1", abs1}, {"abs_alpha2", abs2}},
          [spec] { return purity_gap_cat(spec); },
          [spec] {
            const auto cutoffs = fock::choose_mode_cutoffs(spec.alpha1, spec.alpha2, 0.0, cat_tail_tol);
            return fock::purities_of(fock::separable_cat_matrix(spec, cutoffs)).gap();
          }};
}

inline comparison_case purity_thermal_case(double n, double abs1, double abs2) {
  const thermal_mixture spec{amplitude{abs1, 0.0}, amplitude{abs2, 0.0}, n};
  return {"purity_gap_thermal",
          {{"mean_photons", n}, {"abs_alpha1", abs1}, {"abs_alpha2", abs2}},
          [spec] { return purity_gap_thermal(spec); },
          [spec] {
            const auto cutoffs = fock::thermal_cutoffs(spec, fock::default_tail_tol);
            return fock::purities_of(fock::thermal_mixture_matrix(spec, cutoffs)).gap();
          }};
}

inline std::vector<comparison_case> quick_suite() {
  std::vector<comparison_case> cases;
  cases.push_back(two_state_case(validate_mixture({1.0, 0.0, 0.0, {0.0, 0.0}, {0.0, 0.0}})));
  cases.push_back(two_state_case(validate_mixture({0.5, 0.5, 0.0, {1.0, 0.0}, {-1.0, 0.0}})));
  cases.push_back(two_state_case(normalized_mixture(0.5, 0.5, 0.0, {0.0, 0.5}, {-0.3, 0.0})));
  cases.push_back(two_state_case(normalized_mixture(0.7, 0.3, {0.2, 0.1}, {1.0, 0.5}, {-0.5, 0.0})));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 4; ++i) cases.push_back(two_state_case(random_mixture(rng, 2.0)));

  cases.push_back(reduced_case(0.5, 1.0, 1.0, subsystem::first));
  cases.push_back(reduced_case(0.2, 0.5, 1.0, subsystem::first));
  cases.push_back(reduced_case(0.8, 2.0, 1.0, subsystem::first));
  cases.push_back(reduced_case(0.5, 0.5, 0.25, subsystem::first));
  cases.push_back(reduced_case(0.5, 1.0, 0.5, subsystem::second));
  cases.push_back(reduced_case(0.3, 0.25, 0.5, subsystem::second));

  cases.push_back(joint_case(0.3, 0.5, 0.5));

  cases.push_back(purity_cat_case(0.5, 1.0, 1.0));
  cases.push_back(purity_cat_case(0.5, 0.0, 1.0));
  cases.push_back(purity_cat_case(0.2, 0.5, 2.0));
  cases.push_back(purity_cat_case(0.8, 1.0, 0.5));

  cases.push_back(purity_thermal_case(1.0, 1.0, 1.0));
  cases.push_back(purity_thermal_case(0.0, 0.0, 1.0));
  cases.push_back(purity_thermal_case(0.5, 0.5, 2.0));
  cases.push_back(purity_thermal_case(2.0, 1.0, 0.0));
  return cases;
}

inline std::vector<comparison_case> full_suite() {
  std::vector<comparison_case> cases;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 50; ++i) cases.push_back(two_state_case(random_mixture(rng, 3.0)));

  constexpr std::array abs_grid{0.25, 0.5, 1.0, 2.0};
  constexpr std::array ratios{0.5, 1.0, 2.0};
  constexpr std::array weights{0.2, 0.5, 0.8};
  for (double x : abs_grid)
    for (double r : ratios)
      for (double a : weights) cases.push_back(reduced_case(a, x, r * x, subsystem::first));

  for (double a : {0.3, 0.5, 0.9}) cases.push_back(joint_case(a, 1.0, 1.0));

  constexpr std::array purity_grid{0.0, 0.5, 1.0, 2.0};
  for (double x1 : purity_grid)
    for (double x2 : purity_grid)
      for (double a : weights) cases.push_back(purity_cat_case(a, x1, x2));

  for (double n : {0.0, 0.5, 1.0, 2.0})
    for (double x1 : purity_grid)
      for (double x2 : purity_grid) cases.push_back(purity_thermal_case(n, x1, x2));
  return cases;
}

}  // namespace catentropy::cli
