#include "dotcavity/budget.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "dotcavity/dotmodel.hpp"

namespace dotcavity {

BudgetParams BudgetParams::from_quantities(
    const Quantity& gamma, const Quantity& omega1_intra, const Quantity& omega2,
    const Quantity& omegac_intra, const Quantity& detuning,
    std::optional<Quantity> tau_d_intra, std::optional<IntraDotRates> intra_rates,
    FrequencyToEnergy conv) {
  BudgetParams p;
  p.gamma = require_scalar(gamma, "gamma");
  if (!(p.gamma > 0.0) || p.gamma > 1.0)
    throw std::invalid_argument("gamma must lie in (0, 1]");
  p.omega1_intra_mev = require_mev(omega1_intra, "omega1_intra");
  p.omega2_mev = require_mev(omega2, "omega2");
  if (omegac_intra.unit != Unit::MegaHz && omegac_intra.unit != Unit::MilliEV)
    throw std::invalid_argument("omegac_intra: expected MHz or meV");
  p.omegac_intra = omegac_intra;
  p.detuning_mev = require_mev(detuning, "detuning");
  if (p.omega1_intra_mev < 0.0 || p.omega2_mev < 0.0 || p.omegac_intra.value < 0.0)
    throw std::invalid_argument("couplings must be >= 0");
  if (tau_d_intra) {
    p.tau_d_intra_ps = require_ps(*tau_d_intra, "tau_d_intra");
    if (*p.tau_d_intra_ps <= 0.0)
      throw std::invalid_argument("tau_d_intra must be > 0");
  }
  if (intra_rates) {
    if (intra_rates->e_to_v < 0.0 || intra_rates->e_to_etilde_rad < 0.0 ||
        intra_rates->e_to_etilde_ph < 0.0)
      throw std::invalid_argument("channel rates must be >= 0");
    p.intra_rates = *intra_rates;
  }
  p.freq_convention = conv;
  return p;
}

std::pair<Quantity, Quantity> scale_couplings(double gamma, const Quantity& omega1_intra,
                                              const Quantity& omegac_intra) {
  const double root = std::sqrt(gamma);
  return {{root * omega1_intra.value, omega1_intra.unit},
          {root * omegac_intra.value, omegac_intra.unit}};
}

IntraDotRates scale_rates(double gamma, const IntraDotRates& intra) {
  return {gamma * intra.e_to_v, gamma * intra.e_to_etilde_rad, gamma * intra.e_to_etilde_ph};
}

double decoherence_time(double gamma, double tau_d_intra_ps) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  return tau_d_intra_ps / gamma;
}

double decoherence_time_from_rates(double gamma, const IntraDotRates& intra) {
  const double total = intra.total();
  if (total <= 0.0) throw std::invalid_argument("total intra-dot rate must be > 0");
  return decoherence_time(gamma, 1.0 / total);
}

std::pair<double, double> gate_times(const Quantity& omega1, const Quantity& omega_eff) {
  const double o1 = require_mev(omega1, "omega1");
  const double oe = require_mev(omega_eff, "omega_eff");
  if (o1 <= 0.0 || oe <= 0.0)
    throw std::invalid_argument("gate_times: couplings must be > 0");
  const double pi_hbar = std::numbers::pi * kHbarMeVPs;
  return {pi_hbar / o1, pi_hbar / oe};
}

double gate_ratio(double tau_d_ps, double t_gate_ps) {
  if (t_gate_ps <= 0.0) throw std::invalid_argument("gate time must be > 0");
  return tau_d_ps / t_gate_ps;
}

namespace {

BudgetReport report_at(const BudgetParams& params, double gamma) {
  BudgetReport r;
  r.gamma = gamma;
  const auto [omega1, omegac] =
      scale_couplings(gamma, mev(params.omega1_intra_mev), params.omegac_intra);
  r.omega1_mev = omega1.value;
  r.omegac_mev = require_mev(to_energy(omegac, params.freq_convention, "omegac"), "omegac");
  r.omega_eff_mev = params.omega2_mev * r.omegac_mev / params.detuning_mev;
  const auto [t_direct, t_cavity] = gate_times(mev(r.omega1_mev), mev(r.omega_eff_mev));
  r.t_gate_direct_ps = t_direct;
  r.t_gate_cavity_ps = t_cavity;
  r.tau_d_ps = decoherence_time(gamma, *params.tau_d_intra_ps);
  r.rho_direct = gate_ratio(r.tau_d_ps, r.t_gate_direct_ps);
  r.rho_cavity = gate_ratio(r.tau_d_ps, r.t_gate_cavity_ps);
  return r;
}

}  // namespace

BudgetReport make_report(const BudgetParams& params) {
  if (!params.tau_d_intra_ps)
    throw std::invalid_argument(
        "budget report needs tau_d_intra (intra-dot decoherence time); "
        "pass e.g. 1ns");
  if (params.detuning_mev <= 0.0)
    throw std::invalid_argument("detuning must be > 0");
  BudgetReport r = report_at(params, params.gamma);
  const BudgetReport unseparated = report_at(params, 1.0);
  r.enhancement = r.rho_cavity / unseparated.rho_cavity;
  return r;
}

BudgetParams paper_preset() {
  const double gamma = separation_factor(kPresetTCouplingMeV, kPresetDeltaSeparationMeV);
  return BudgetParams::from_quantities(scalar(gamma), mev(0.1), mev(0.1),
                                       megahertz(300.0), mev(1.0));
}

std::vector<SweepRow> sweep(std::span<const double> t_values_mev,
                            std::span<const double> delta_values_mev,
                            const BudgetParams& fixed) {
  if (t_values_mev.empty() || delta_values_mev.empty())
    throw std::invalid_argument("sweep: empty grid");
  if (!fixed.tau_d_intra_ps)
    throw std::invalid_argument("sweep needs tau_d_intra");
  std::vector<SweepRow> rows;
  rows.reserve(t_values_mev.size() * delta_values_mev.size());
  for (double t : t_values_mev)
    for (double delta : delta_values_mev) {
      SweepRow row;
      row.t_mev = t;
      row.delta_mev = delta;
      row.gamma = separation_factor(t, delta);
      BudgetParams point = fixed;
      point.gamma = row.gamma;
      const BudgetReport r = report_at(point, row.gamma);
      row.omega_eff_mev = r.omega_eff_mev;
      row.tau_g_ps = r.t_gate_cavity_ps;
      row.tau_d_ps = r.tau_d_ps;
      row.rho = r.rho_cavity;
      rows.push_back(row);
    }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "t_mev,delta_mev,gamma,omega_eff_mev,tau_g_ps,tau_d_ps,rho\n";
  char buf[256];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  r.t_mev, r.delta_mev, r.gamma, r.omega_eff_mev, r.tau_g_ps,
                  r.tau_d_ps, r.rho);
    out += buf;
  }
  return out;
}

std::string budget_table(const BudgetReport& r) {
  std::string out;
  char buf[128];
  const auto line = [&](const char* name, double value, const char* unit) {
    std::snprintf(buf, sizeof buf, "%-16s %.9g %s\n", name, value, unit);
    out += buf;
  };
  line("gamma", r.gamma, "");
  line("omega1", r.omega1_mev, "meV");
  line("omegac", r.omegac_mev, "meV");
  line("omega_eff", r.omega_eff_mev, "meV");
  line("t_gate_direct", r.t_gate_direct_ps, "ps");
  line("t_gate_cavity", r.t_gate_cavity_ps, "ps");
  line("tau_d", r.tau_d_ps, "ps");
  line("rho_direct", r.rho_direct, "");
  line("rho_cavity", r.rho_cavity, "");
  line("enhancement", r.enhancement, "(rho vs gamma=1; ~1/sqrt(gamma) in this model)");
  return out;
}

}  // namespace dotcavity
