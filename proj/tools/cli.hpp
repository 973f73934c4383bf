#pragma once

// Subcommands: entropy-two-state, fig1-sweep, purity cat|thermal, oracle-compare.
// Exit codes: 0 success, 2 usage/validation, 3 cutoff exceeded,
// 4 purity inequality violated, 5 oracle comparison failed.

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catentropy/catentropy.hpp"
#include "oracle_suite.hpp"
#include "records.hpp"

namespace catentropy::cli {

enum exit_code : int {
  exit_ok = 0,
  exit_usage = 2,
  exit_cutoff = 3,
  exit_inequality = 4,
  exit_comparison = 5,
};

// Tolerated negative purity gap before it is reported as a violation.
inline constexpr double gap_violation_tol = 1e-12;

namespace detail {

struct two_state_flags {
  double a = 0.0, b = 0.0, c_re = 0.0, c_im = 0.0;
  double alpha_re = 0.0, alpha_im = 0.0, beta_re = 0.0, beta_im = 0.0;
  bool bits = false, oracle = false, json = false;
  double tail_tol = fock::default_tail_tol;
};

struct sweep_flags {
  std::vector<double> ratios{0.5, 1.0, 2.0};
  double grid_min = 0.01, grid_max = 4.0;
  std::size_t points = 200;
  double a = 0.5, b = 0.5;
  std::string fmt = "csv";
  bool json = false;
  std::size_t oracle_every = 0;
  double tail_tol = 1e-10;
};

struct purity_flags {
  double a = 0.5, b = 0.5;
  double alpha1_re = 0.0, alpha1_im = 0.0, alpha2_re = 0.0, alpha2_im = 0.0;
  std::optional<double> mean_photons;
  std::optional<double> temperature;
  bool json = false;
};

struct compare_flags {
  std::string suite = "quick";
  double tol = 1e-8;
  bool json = false;
};

inline int run_entropy_two_state(const two_state_flags& f, std::ostream& out) {
  const auto spec = validate_mixture(two_state_mixture{
      f.a, f.b, {f.c_re, f.c_im}, {f.alpha_re, f.alpha_im}, {f.beta_re, f.beta_im}});
  const std::vector<std::pair<std::string, double>> inputs{
      {"a", f.a}, {"b", f.b}, {"c_re", f.c_re}, {"c_im", f.c_im},
      {"alpha_re", f.alpha_re}, {"alpha_im", f.alpha_im}, {"beta_re", f.beta_re}, {"beta_im", f.beta_im}};
  const auto d = d_parameter_of(spec);
  const auto pair = spectral_pair_of(d);
  const double unit = f.bits ? std::numbers::ln2 : 1.0;

  record_writer writer(out, f.json ? format::json : format::csv);
  writer.write({"d_parameter", inputs, d.value, {}, {}});
  writer.write({"lambda1", inputs, pair.lambda1, {}, {}});
  writer.write({"lambda2", inputs, pair.lambda2, {}, {}});
  output_record entropy{f.bits ? "entropy_bits" : "entropy_nats", inputs, binary_entropy(pair) / unit, {}, {}};
  if (f.oracle) entropy.with_oracle(fock::two_state_entropy(spec, f.tail_tol) / unit);
  writer.write(entropy);
  return exit_ok;
}

inline int run_fig1_sweep(const sweep_flags& f, std::ostream& out, std::ostream& err) {
  if (f.fmt != "csv" && f.fmt != "json") throw CLI::ValidationError("--format", "must be csv or json");
  const bool json = f.json || f.fmt == "json";
  if (f.a < 0.0 || f.b < 0.0 || std::abs(f.a + f.b - 1.0) > weight_tolerance)
    throw weight_violation("sweep weights must be nonnegative with a + b = 1");
  for (double r : f.ratios)
    if (!(r > 0.0)) throw std::invalid_argument("--ratios must be positive");
  if (f.grid_min < 0.0) throw std::invalid_argument("--grid-min must be >= 0");
  const auto grid = uniform_grid(f.grid_min, f.grid_max, f.points);

  const bool with_oracle = f.oracle_every > 0;
  if (!json) {
    out << "ratio,abs_alpha1,entropy_nats";
    if (with_oracle) out << ",oracle_entropy,abs_diff";
    out << '\n';
  }
  std::size_t row_index = 0;
  for (double ratio : f.ratios) {
    for (double x : grid) {
      const cat_mixture spec{f.a, f.b, amplitude{x, 0.0}, amplitude{ratio * x, 0.0}};
      double entropy = 0.0;
      try {
        entropy = reduced_entropy(spec, subsystem::first);
      } catch (const degenerate_cat_state& e) {
        err << "warning: skipping ratio=" << format_number(ratio) << " abs_alpha1=" << format_number(x)
            << ": " << e.what() << '\n';
        continue;
      }
      ++row_index;
      std::optional<double> oracle;
      if (with_oracle && row_index % f.oracle_every == 0) {
        const auto cutoffs = fock::cat_cutoffs(spec, f.tail_tol);
        oracle = fock::cat_reduced_entropy_factored(spec, subsystem::first, cutoffs);
      }
      if (json) {
        nlohmann::json j{{"ratio", ratio}, {"abs_alpha1", x}, {"entropy_nats", entropy + 0.0}};
        if (oracle) {
          j["oracle_entropy"] = *oracle + 0.0;
          j["abs_diff"] = std::abs(entropy - *oracle);
        }
        out << j.dump() << '\n';
      } else {
        out << format_number(ratio) << ',' << format_number(x) << ',' << format_number(entropy);
        if (with_oracle) {
          out << ',';
          if (oracle) out << format_number(*oracle) << ',' << format_number(std::abs(entropy - *oracle));
          else out << ',';
        }
        out << '\n';
      }
    }
  }
  return exit_ok;
}

inline int emit_purity(const purity_triple& mu, double gap, const std::vector<std::pair<std::string, double>>& inputs,
                       bool json, std::ostream& out, std::ostream& err) {
  record_writer writer(out, json ? format::json : format::csv);
  writer.write({"mu12", inputs, mu.mu12, {}, {}});
  writer.write({"mu1", inputs, mu.mu1, {}, {}});
  writer.write({"mu2", inputs, mu.mu2, {}, {}});
  writer.write({"gap", inputs, gap, {}, {}});
  if (gap < -gap_violation_tol) {
    err << "error: purity inequality 1 + mu12 >= mu1 + mu2 violated (gap " << format_number(gap) << ")\n";
    return exit_inequality;
  }
  return exit_ok;
}

inline int run_purity_cat(const purity_flags& f, std::ostream& out, std::ostream& err) {
  const cat_separable spec{f.a, f.b, {f.alpha1_re, f.alpha1_im}, {f.alpha2_re, f.alpha2_im}};
  const auto mu = purity_triple_cat(spec);
  return emit_purity(mu, purity_gap_cat(spec),
                     {{"a", f.a}, {"b", f.b}, {"alpha1_re", f.alpha1_re}, {"alpha1_im", f.alpha1_im},
                      {"alpha2_re", f.alpha2_re}, {"alpha2_im", f.alpha2_im}},
                     f.json, out, err);
}

inline int run_purity_thermal(const purity_flags& f, std::ostream& out, std::ostream& err) {
  double n = 0.0;
  if (f.temperature) n = thermal_mean_photon(*f.temperature);
  else if (f.mean_photons) n = *f.mean_photons;
  const thermal_mixture spec{{f.alpha1_re, f.alpha1_im}, {f.alpha2_re, f.alpha2_im}, n};
  const auto mu = purity_triple_thermal(spec);
  return emit_purity(mu, purity_gap_thermal(spec),
                     {{"mean_photons", n}, {"alpha1_re", f.alpha1_re}, {"alpha1_im", f.alpha1_im},
                      {"alpha2_re", f.alpha2_re}, {"alpha2_im", f.alpha2_im}},
                     f.json, out, err);
}

inline int run_oracle_compare(const compare_flags& f, std::ostream& out, std::ostream& err) {
  if (!(f.tol >= 0.0)) throw std::invalid_argument("--tol must be nonnegative");
  const auto cases = f.suite == "full" ? full_suite() : quick_suite();
  record_writer writer(out, f.json ? format::json : format::csv);
  std::vector<std::size_t> failing;
  double worst = 0.0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    output_record r{c.quantity, c.inputs, c.closed_form(), {}, {}};
    r.with_oracle(c.oracle());
    worst = std::max(worst, *r.abs_diff);
    if (!(*r.abs_diff <= f.tol)) failing.push_back(i);
    writer.write(r);
  }
  writer.write({"summary",
                {{"cases", static_cast<double>(cases.size())},
                 {"failures", static_cast<double>(failing.size())},
                 {"tol", f.tol}},
                worst, {}, {}});
  if (failing.empty()) return exit_ok;
  err << "error: " << failing.size() << " of " << cases.size() << " comparisons exceed tol "
      << format_number(f.tol) << '\n';
  for (auto i : failing) {
    err << "  case " << i << " " << cases[i].quantity;
    for (const auto& [k, v] : cases[i].inputs) err << ' ' << k << '=' << format_number(v);
    err << '\n';
  }
  return exit_comparison;
}

}  // namespace detail

// Parses args (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropies and purities of coherent-state mixtures and two-mode cat states"};
  app.name("catentropy");
  app.require_subcommand(1);

  detail::two_state_flags ts;
  auto* two_state = app.add_subcommand("entropy-two-state",
                                       "von Neumann entropy of a|alpha><alpha| + c|alpha><beta| + h.c. + b|beta><beta|");
  two_state->add_option("--a", ts.a, "weight of |alpha><alpha|")->required();
  two_state->add_option("--b", ts.b, "weight of |beta><beta|")->required();
  two_state->add_option("--c-re", ts.c_re, "Re c");
  two_state->add_option("--c-im", ts.c_im, "Im c");
  two_state->add_option("--alpha-re", ts.alpha_re);
  two_state->add_option("--alpha-im", ts.alpha_im);
  two_state->add_option("--beta-re", ts.beta_re);
  two_state->add_option("--beta-im", ts.beta_im);
  two_state->add_flag("--bits", ts.bits, "report entropy in bits instead of nats");
  two_state->add_flag("--oracle", ts.oracle, "also diagonalize the truncated Fock matrix");
  two_state->add_flag("--json", ts.json, "emit JSON Lines");
  two_state->add_option("--tail-tol", ts.tail_tol, "Fock truncation tail tolerance")->capture_default_str();

  detail::sweep_flags sw;
  auto* sweep = app.add_subcommand("fig1-sweep", "reduced entropy of mode 1 versus |alpha1| for several |alpha2|/|alpha1|");
  sweep->add_option("--ratios", sw.ratios, "comma-separated |alpha2|/|alpha1| values")->delimiter(',')->capture_default_str();
  sweep->add_option("--grid-min", sw.grid_min)->capture_default_str();
  sweep->add_option("--grid-max", sw.grid_max)->capture_default_str();
  sweep->add_option("--points", sw.points)->capture_default_str()->check(CLI::PositiveNumber);
  sweep->add_option("--a", sw.a)->capture_default_str();
  sweep->add_option("--b", sw.b)->capture_default_str();
  sweep->add_option("--format", sw.fmt, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  sweep->add_flag("--json", sw.json, "same as --format json");
  sweep->add_option("--oracle-every", sw.oracle_every, "add a Fock-space check on every K-th row");
  sweep->add_option("--tail-tol", sw.tail_tol, "Fock truncation tail tolerance")->capture_default_str();

  detail::purity_flags pf;
  auto* purity = app.add_subcommand("purity", "purity parameters and the purity-inequality gap");
  purity->require_subcommand(1);
  auto* cat = purity->add_subcommand("cat", "a|a1,a2><a1,a2| + b|-a1,-a2><-a1,-a2|");
  auto* thermal = purity->add_subcommand("thermal", "1/2 |a1><a1| x rho_T + 1/2 rho_T x |a2><a2|");
  for (auto* sub : {cat, thermal}) {
    sub->add_option("--alpha1-re", pf.alpha1_re);
    sub->add_option("--alpha1-im", pf.alpha1_im);
    sub->add_option("--alpha2-re", pf.alpha2_re);
    sub->add_option("--alpha2-im", pf.alpha2_im);
    sub->add_flag("--json", pf.json, "emit JSON Lines");
  }
  cat->add_option("--a", pf.a)->capture_default_str();
  cat->add_option("--b", pf.b)->capture_default_str();
  auto* n_opt = thermal->add_option("--mean-photons", pf.mean_photons, "thermal mean photon number N");
  auto* t_opt = thermal->add_option("--temperature", pf.temperature, "temperature T, N = 1/(e^{1/T} - 1)");
  n_opt->excludes(t_opt);

  detail::compare_flags cf;
  auto* compare = app.add_subcommand("oracle-compare", "closed forms against Fock-space brute force");
  compare->add_option("--suite", cf.suite)->capture_default_str()->check(CLI::IsMember({"quick", "full"}));
  compare->add_option("--tol", cf.tol)->capture_default_str();
  compare->add_flag("--json", cf.json, "emit JSON Lines");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*two_state) return detail::run_entropy_two_state(ts, out);
    if (*sweep) return detail::run_fig1_sweep(sw, out, err);
    if (*cat) return detail::run_purity_cat(pf, out, err);
    if (*thermal) return detail::run_purity_thermal(pf, out, err);
    if (*compare) return detail::run_oracle_compare(cf, out, err);
  } catch (const cutoff_exceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_cutoff;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace catentropy::cli
