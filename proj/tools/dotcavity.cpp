// dotcavity: verification, dynamics validation, budget and noise studies for
// the coupled-dot/microcavity scheme. Subcommands: verify | adiabatic |
// budget | sweep | noise.
#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "dotcavity/budget.hpp"
#include "dotcavity/config.hpp"
#include "dotcavity/dotmodel.hpp"
#include "dotcavity/gates.hpp"
#include "dotcavity/noise.hpp"
#include "dotcavity/threelevel.hpp"
#include "dotcavity/units.hpp"

namespace dc = dotcavity;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitToleranceFailure = 1;
constexpr int kExitInvalidInput = 2;

constexpr std::array<std::string_view, 26> kConfigKeys = {
    "cutoff", "phi", "steps", "tolerance",
    "omega2", "omegac", "delta",
    "gamma", "omega1_intra", "omegac_intra", "detuning", "tau_d_intra",
    "freq_convention",
    "t_min", "t_max", "t_points", "delta_min", "delta_max", "delta_points",
    "gammas", "rate_e_v", "rate_e_etilde_rad", "rate_e_etilde_ph", "kappa",
    "omega1", "omega_eff",
};

struct GlobalArgs {
  std::string config_path;
  std::string out_path;
  bool json = false;
  bool verbose = false;
  dc::RunConfig config;
};

// Flags beat the config file; the config file beats built-in defaults.
std::string resolve(const GlobalArgs& g, const CLI::Option* opt, const std::string& flag_value,
                    std::string_view key, const char* fallback) {
  const bool flag_set = opt != nullptr && opt->count() > 0;
  if (flag_set) {
    if (g.config.has(key) && g.verbose)
      std::cerr << "note: flag value overrides config key '" << key << "'\n";
    return flag_value;
  }
  if (g.config.has(key)) return g.config.raw(key);
  if (fallback) return fallback;
  throw std::invalid_argument("missing value for '" + std::string(key) +
                              "' (flag or config)");
}

dc::Quantity resolve_quantity(const GlobalArgs& g, const CLI::Option* opt,
                              const std::string& flag_value, std::string_view key,
                              const char* fallback) {
  return dc::parse_quantity(resolve(g, opt, flag_value, key, fallback));
}

long resolve_integer(const GlobalArgs& g, const CLI::Option* opt, const std::string& flag_value,
                     std::string_view key, const char* fallback) {
  const std::string text = resolve(g, opt, flag_value, key, fallback);
  return static_cast<long>(dc::require_scalar(dc::parse_quantity(text), key));
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write to '" + path + "'");
  out << content;
}

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

dc::FrequencyToEnergy parse_convention(const std::string& name) {
  if (name == "2pi_hbar_f") return dc::FrequencyToEnergy::TwoPiHbarF;
  if (name == "hbar_f") return dc::FrequencyToEnergy::HbarF;
  throw std::invalid_argument("freq_convention must be 2pi_hbar_f or hbar_f");
}

std::vector<double> parse_scalar_list(const std::string& text) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    if (!item.empty()) out.push_back(dc::require_scalar(dc::parse_quantity(item), "list item"));
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty list '" + text + "'");
  return out;
}

std::vector<double> log_grid(double lo, double hi, long points) {
  if (points < 1 || lo <= 0.0 || hi < lo)
    throw std::invalid_argument("grid needs 0 < min <= max and points >= 1");
  std::vector<double> out;
  if (points == 1) {
    out.push_back(lo);
    return out;
  }
  const double step = std::log(hi / lo) / static_cast<double>(points - 1);
  for (long i = 0; i < points; ++i) out.push_back(lo * std::exp(step * i));
  return out;
}

// ---------------------------------------------------------------- verify ---

int cmd_verify(const GlobalArgs& g, long cutoff) {
  const dc::VerificationReport report =
      dc::verify_protocol(dc::two_qubit_cavity_layout(static_cast<int>(cutoff)));
  std::string out;
  if (g.json) {
    ordered_json j;
    j["checks"] = ordered_json::array();
    for (const dc::CheckResult& c : report.checks)
      j["checks"].push_back({{"check", c.name}, {"deviation", c.deviation},
                             {"tolerance", c.tolerance}, {"pass", c.pass}});
    j["all_pass"] = report.all_pass();
    out = j.dump(2) + "\n";
  } else {
    char buf[160];
    for (const dc::CheckResult& c : report.checks) {
      std::snprintf(buf, sizeof buf, "%-4s %-58s max_dev=%-12.3e tol=%.0e\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.deviation, c.tolerance);
      out += buf;
    }
    out += report.all_pass() ? "all checks passed\n" : "CHECKS FAILED\n";
  }
  write_output(g.out_path, out);
  return report.all_pass() ? kExitOk : kExitToleranceFailure;
}

// ------------------------------------------------------------- adiabatic ---

int cmd_adiabatic(const GlobalArgs& g, const dc::ThreeLevelParams& params, long steps,
                  double tolerance) {
  const dc::EliminationReport report = dc::validate_elimination(params);

  const dc::SpaceLayout layout = dc::three_level_layout(params.fock_cutoff);
  const dc::OperatorM h = dc::build_rwa_hamiltonian(params, layout);
  const double duration = report.omega_eff_mev > 0.0
                              ? std::numbers::pi * dc::kHbarMeVPs / (2.0 * report.omega_eff_mev)
                              : 200.0 * dc::kHbarMeVPs / params.detuning_mev;
  const dc::Trajectory traj =
      dc::propagate(h, dc::Ket::basis_state(layout, {dc::kLevelV, 1}), duration,
                    static_cast<int>(steps));
  if (!g.out_path.empty()) write_output(g.out_path, dc::trajectory_csv(traj));

  const bool pass = report.rel_deviation <= tolerance;
  if (g.json) {
    ordered_json j{{"omega_eff_mev", report.omega_eff_mev},
                   {"omega_fit_mev", report.omega_fit_mev},
                   {"rel_deviation", report.rel_deviation},
                   {"max_etilde_population", report.max_etilde_population},
                   {"tolerance", tolerance},
                   {"pass", pass}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "omega_eff        " << format_double(report.omega_eff_mev) << " meV\n"
              << "omega_fit        " << format_double(report.omega_fit_mev) << " meV\n"
              << "rel_deviation    " << format_double(report.rel_deviation) << "\n"
              << "max_pop_etilde   " << format_double(report.max_etilde_population) << "\n"
              << (pass ? "within tolerance\n" : "DEVIATION EXCEEDS TOLERANCE\n");
  }
  return pass ? kExitOk : kExitToleranceFailure;
}

// ---------------------------------------------------------------- budget ---

int cmd_budget(const GlobalArgs& g, const dc::BudgetParams& params) {
  const dc::BudgetReport report = dc::make_report(params);
  std::string out;
  if (g.json) {
    ordered_json j{{"gamma", report.gamma},
                   {"omega1_mev", report.omega1_mev},
                   {"omegac_mev", report.omegac_mev},
                   {"omega_eff_mev", report.omega_eff_mev},
                   {"t_gate_direct_ps", report.t_gate_direct_ps},
                   {"t_gate_cavity_ps", report.t_gate_cavity_ps},
                   {"tau_d_ps", report.tau_d_ps},
                   {"rho_direct", report.rho_direct},
                   {"rho_cavity", report.rho_cavity},
                   {"enhancement", report.enhancement}};
    out = j.dump(2) + "\n";
  } else {
    out = dc::budget_table(report);
  }
  write_output(g.out_path, out);
  return kExitOk;
}

// ----------------------------------------------------------------- sweep ---

int cmd_sweep(const GlobalArgs& g, const dc::BudgetParams& fixed,
              const std::vector<double>& t_values, const std::vector<double>& d_values) {
  const auto rows = dc::sweep(t_values, d_values, fixed);
  write_output(g.out_path, dc::sweep_csv(rows));
  return kExitOk;
}

// ----------------------------------------------------------------- noise ---

int cmd_noise(const GlobalArgs& g, const std::vector<double>& gammas,
              const dc::NoiseChannels& channels, double omega1_mev, double omega_eff_mev,
              double phi, long cutoff) {
  const auto plan = dc::timed_cnot_plan("j", "k", phi, omega1_mev, omega_eff_mev);
  std::vector<std::pair<double, double>> rows;
  rows.reserve(gammas.size());
  for (double gamma : gammas) {
    if (g.verbose) std::cerr << "noise: gamma = " << gamma << "\n";
    rows.emplace_back(gamma, dc::cnot_fidelity_under_noise(gamma, channels, plan,
                                                           static_cast<int>(cutoff)));
  }
  write_output(g.out_path, dc::fidelity_csv(rows));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coupled-dot / microcavity gate and budget toolkit"};
  app.require_subcommand(1);

  GlobalArgs g;
  auto* config_opt = app.add_option("--config", g.config_path, "key = value config file")
                         ->envname("DOTCAVITY_CONFIG");
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--out", g.out_path, "write primary output to a file");
  app.add_flag("--verbose", g.verbose, "diagnostic notes on stderr");

  // verify
  auto* verify = app.add_subcommand("verify", "check the pulse-gate protocol identities");
  std::string v_cutoff;
  auto* v_cutoff_opt = verify->add_option("--cutoff", v_cutoff, "cavity fock cutoff (default 3)");

  // adiabatic
  auto* adiabatic =
      app.add_subcommand("adiabatic", "validate the effective two-photon coupling");
  std::string a_omega2, a_omegac, a_delta, a_phi, a_steps, a_cutoff, a_tolerance;
  auto* a_omega2_opt = adiabatic->add_option("--omega2", a_omega2, "laser coupling, e.g. 0.1meV");
  auto* a_omegac_opt = adiabatic->add_option("--omegac", a_omegac, "cavity coupling, e.g. 0.1meV");
  auto* a_delta_opt = adiabatic->add_option("--delta", a_delta, "detuning, e.g. 1meV");
  auto* a_phi_opt = adiabatic->add_option("--phi", a_phi, "laser phase (radians)");
  auto* a_steps_opt = adiabatic->add_option("--steps", a_steps, "trajectory samples");
  auto* a_cutoff_opt = adiabatic->add_option("--cutoff", a_cutoff, "fock cutoff (default 2)");
  auto* a_tol_opt =
      adiabatic->add_option("--tolerance", a_tolerance, "allowed frequency deviation (default 0.05)");

  // budget
  auto* budget = app.add_subcommand("budget", "gate-time / decoherence budget report");
  std::string b_preset, b_gamma, b_omega1, b_omega2, b_omegac, b_detuning, b_tau, b_conv;
  budget->add_option("--preset", b_preset, "named parameter preset: paper");
  auto* b_gamma_opt = budget->add_option("--gamma", b_gamma, "separation factor in (0,1]");
  auto* b_omega1_opt =
      budget->add_option("--omega1-intra", b_omega1, "intra-dot direct Rabi, e.g. 0.1meV");
  auto* b_omega2_opt = budget->add_option("--omega2", b_omega2, "laser leg coupling, e.g. 0.1meV");
  auto* b_omegac_opt =
      budget->add_option("--omegac-intra", b_omegac, "intra-dot cavity coupling, e.g. 300MHz");
  auto* b_detuning_opt = budget->add_option("--detuning", b_detuning, "laser detuning, e.g. 1meV");
  auto* b_tau_opt =
      budget->add_option("--tau-d-intra", b_tau, "intra-dot decoherence time, e.g. 1ns");
  auto* b_conv_opt =
      budget->add_option("--freq-convention", b_conv, "2pi_hbar_f (default) or hbar_f");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "budget table over a (t, Delta) grid");
  std::string s_tmin, s_tmax, s_tpoints, s_dmin, s_dmax, s_dpoints;
  std::string s_omega2, s_omegac, s_detuning, s_tau, s_conv, s_omega1;
  auto* s_tmin_opt = sweep_cmd->add_option("--t-min", s_tmin, "smallest t, e.g. 0.001meV");
  auto* s_tmax_opt = sweep_cmd->add_option("--t-max", s_tmax, "largest t, e.g. 0.1meV");
  auto* s_tpoints_opt = sweep_cmd->add_option("--t-points", s_tpoints, "grid points in t");
  auto* s_dmin_opt = sweep_cmd->add_option("--delta-min", s_dmin, "smallest Delta, e.g. 1meV");
  auto* s_dmax_opt = sweep_cmd->add_option("--delta-max", s_dmax, "largest Delta, e.g. 20meV");
  auto* s_dpoints_opt = sweep_cmd->add_option("--delta-points", s_dpoints, "grid points in Delta");
  auto* s_omega1_opt = sweep_cmd->add_option("--omega1-intra", s_omega1, "intra-dot direct Rabi");
  auto* s_omega2_opt = sweep_cmd->add_option("--omega2", s_omega2, "laser leg coupling");
  auto* s_omegac_opt = sweep_cmd->add_option("--omegac-intra", s_omegac, "intra-dot cavity coupling");
  auto* s_detuning_opt = sweep_cmd->add_option("--detuning", s_detuning, "laser detuning");
  auto* s_tau_opt = sweep_cmd->add_option("--tau-d-intra", s_tau, "intra-dot decoherence time");
  auto* s_conv_opt = sweep_cmd->add_option("--freq-convention", s_conv, "2pi_hbar_f or hbar_f");

  // noise
  auto* noise_cmd = app.add_subcommand("noise", "CNOT fidelity vs gamma under Lindblad noise");
  std::string n_gammas, n_rate1, n_rate2, n_rate3, n_kappa, n_omega1, n_omegaeff, n_phi, n_cutoff;
  auto* n_gammas_opt = noise_cmd->add_option("--gammas", n_gammas, "comma list, e.g. 1e-2,1e-4");
  auto* n_rate1_opt = noise_cmd->add_option("--rate-e-v", n_rate1, "intra-dot |e>->|v| rate, e.g. 1e-3/ps");
  auto* n_rate2_opt =
      noise_cmd->add_option("--rate-e-etilde-rad", n_rate2, "intra-dot radiative |e>->|~e| rate");
  auto* n_rate3_opt =
      noise_cmd->add_option("--rate-e-etilde-ph", n_rate3, "intra-dot phonon |e>->|~e| rate");
  auto* n_kappa_opt = noise_cmd->add_option("--kappa", n_kappa, "cavity loss rate, e.g. 1e-5/ps");
  auto* n_omega1_opt = noise_cmd->add_option("--omega1", n_omega1, "carrier coupling for timing");
  auto* n_omegaeff_opt =
      noise_cmd->add_option("--omega-eff", n_omegaeff, "red-sideband coupling for timing");
  auto* n_phi_opt = noise_cmd->add_option("--phi", n_phi, "swap laser phase");
  auto* n_cutoff_opt = noise_cmd->add_option("--cutoff", n_cutoff, "fock cutoff (default 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    (void)config_opt;
    if (!g.config_path.empty())
      g.config = dc::RunConfig::load_file(g.config_path, kConfigKeys);

    if (verify->parsed()) {
      return cmd_verify(g, resolve_integer(g, v_cutoff_opt, v_cutoff, "cutoff", "3"));
    }

    if (adiabatic->parsed()) {
      dc::ThreeLevelParams p;
      p.omega2_mev = dc::require_mev(resolve_quantity(g, a_omega2_opt, a_omega2, "omega2", nullptr), "omega2");
      p.omegac_mev = dc::require_mev(resolve_quantity(g, a_omegac_opt, a_omegac, "omegac", nullptr), "omegac");
      p.detuning_mev = dc::require_mev(resolve_quantity(g, a_delta_opt, a_delta, "delta", nullptr), "delta");
      p.phi = dc::require_scalar(resolve_quantity(g, a_phi_opt, a_phi, "phi", "0"), "phi");
      p.fock_cutoff = static_cast<int>(resolve_integer(g, a_cutoff_opt, a_cutoff, "cutoff", "2"));
      const long steps = resolve_integer(g, a_steps_opt, a_steps, "steps", "2000");
      const double tolerance = dc::require_scalar(
          resolve_quantity(g, a_tol_opt, a_tolerance, "tolerance", "0.05"), "tolerance");
      return cmd_adiabatic(g, p, steps, tolerance);
    }

    if (budget->parsed() || sweep_cmd->parsed()) {
      const bool is_sweep = sweep_cmd->parsed();
      dc::BudgetParams params;
      const std::string preset = is_sweep ? "paper" : b_preset;
      if (!preset.empty() && preset != "paper")
        throw std::invalid_argument("unknown preset '" + preset + "'");

      const auto conv_opt = is_sweep ? s_conv_opt : b_conv_opt;
      const auto conv_text = is_sweep ? s_conv : b_conv;
      const dc::FrequencyToEnergy conv =
          parse_convention(resolve(g, conv_opt, conv_text, "freq_convention", "2pi_hbar_f"));

      if (!is_sweep && b_preset.empty()) {
        params = dc::BudgetParams::from_quantities(
            resolve_quantity(g, b_gamma_opt, b_gamma, "gamma", nullptr),
            resolve_quantity(g, b_omega1_opt, b_omega1, "omega1_intra", nullptr),
            resolve_quantity(g, b_omega2_opt, b_omega2, "omega2", nullptr),
            resolve_quantity(g, b_omegac_opt, b_omegac, "omegac_intra", nullptr),
            resolve_quantity(g, b_detuning_opt, b_detuning, "detuning", nullptr),
            std::nullopt, std::nullopt, conv);
      } else {
        params = dc::paper_preset();
        params.freq_convention = conv;
        // preset fields still overridable one by one
        const auto maybe_mev = [&](const CLI::Option* opt, const std::string& text,
                                   std::string_view key, double current) {
          if ((opt && opt->count() > 0) || g.config.has(key))
            return dc::require_mev(resolve_quantity(g, opt, text, key, nullptr), key);
          return current;
        };
        if (is_sweep) {
          params.omega1_intra_mev = maybe_mev(s_omega1_opt, s_omega1, "omega1_intra", params.omega1_intra_mev);
          params.omega2_mev = maybe_mev(s_omega2_opt, s_omega2, "omega2", params.omega2_mev);
          params.detuning_mev = maybe_mev(s_detuning_opt, s_detuning, "detuning", params.detuning_mev);
          if (s_omegac_opt->count() > 0 || g.config.has("omegac_intra"))
            params.omegac_intra = resolve_quantity(g, s_omegac_opt, s_omegac, "omegac_intra", nullptr);
        } else {
          params.omega1_intra_mev = maybe_mev(b_omega1_opt, b_omega1, "omega1_intra", params.omega1_intra_mev);
          params.omega2_mev = maybe_mev(b_omega2_opt, b_omega2, "omega2", params.omega2_mev);
          params.detuning_mev = maybe_mev(b_detuning_opt, b_detuning, "detuning", params.detuning_mev);
          if (b_omegac_opt->count() > 0 || g.config.has("omegac_intra"))
            params.omegac_intra = resolve_quantity(g, b_omegac_opt, b_omegac, "omegac_intra", nullptr);
          if (b_gamma_opt->count() > 0 || g.config.has("gamma"))
            params.gamma = dc::require_scalar(
                resolve_quantity(g, b_gamma_opt, b_gamma, "gamma", nullptr), "gamma");
        }
      }

      const auto tau_opt = is_sweep ? s_tau_opt : b_tau_opt;
      const auto tau_text = is_sweep ? s_tau : b_tau;
      if ((tau_opt && tau_opt->count() > 0) || g.config.has("tau_d_intra")) {
        params.tau_d_intra_ps = dc::require_ps(
            resolve_quantity(g, tau_opt, tau_text, "tau_d_intra", nullptr), "tau_d_intra");
      }

      if (!is_sweep) return cmd_budget(g, params);

      const auto t_values = log_grid(
          dc::require_mev(resolve_quantity(g, s_tmin_opt, s_tmin, "t_min", "0.001meV"), "t_min"),
          dc::require_mev(resolve_quantity(g, s_tmax_opt, s_tmax, "t_max", "0.1meV"), "t_max"),
          resolve_integer(g, s_tpoints_opt, s_tpoints, "t_points", "10"));
      const auto d_values = log_grid(
          dc::require_mev(resolve_quantity(g, s_dmin_opt, s_dmin, "delta_min", "1meV"), "delta_min"),
          dc::require_mev(resolve_quantity(g, s_dmax_opt, s_dmax, "delta_max", "20meV"), "delta_max"),
          resolve_integer(g, s_dpoints_opt, s_dpoints, "delta_points", "10"));
      return cmd_sweep(g, params, t_values, d_values);
    }

    if (noise_cmd->parsed()) {
      const auto gammas =
          parse_scalar_list(resolve(g, n_gammas_opt, n_gammas, "gammas", "1e-2,1e-4"));
      dc::NoiseChannels channels;
      channels.rate_e_to_v = dc::require_per_ps(
          resolve_quantity(g, n_rate1_opt, n_rate1, "rate_e_v", "0/ps"), "rate_e_v");
      channels.rate_e_to_etilde_rad = dc::require_per_ps(
          resolve_quantity(g, n_rate2_opt, n_rate2, "rate_e_etilde_rad", "0/ps"), "rate_e_etilde_rad");
      channels.rate_e_to_etilde_ph = dc::require_per_ps(
          resolve_quantity(g, n_rate3_opt, n_rate3, "rate_e_etilde_ph", "0/ps"), "rate_e_etilde_ph");
      channels.kappa_cavity =
          dc::require_per_ps(resolve_quantity(g, n_kappa_opt, n_kappa, "kappa", "0/ps"), "kappa");
      const double omega1 = dc::require_mev(
          resolve_quantity(g, n_omega1_opt, n_omega1, "omega1", "0.1meV"), "omega1");
      const double omega_eff = dc::require_mev(
          resolve_quantity(g, n_omegaeff_opt, n_omegaeff, "omega_eff", "0.01meV"), "omega_eff");
      const double phi =
          dc::require_scalar(resolve_quantity(g, n_phi_opt, n_phi, "phi", "0"), "phi");
      const long cutoff = resolve_integer(g, n_cutoff_opt, n_cutoff, "cutoff", "2");
      return cmd_noise(g, gammas, channels, omega1, omega_eff, phi, cutoff);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
