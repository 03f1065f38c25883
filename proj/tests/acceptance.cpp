// Acceptance suite: one pass/fail line per criterion.
// Usage: acceptance --cli <path-to-dotcavity>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "dotcavity/budget.hpp"
#include "dotcavity/dotmodel.hpp"
#include "dotcavity/gates.hpp"
#include "dotcavity/noise.hpp"
#include "dotcavity/threelevel.hpp"
#include "dotcavity/units.hpp"

using namespace dotcavity;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct Harness {
  int failures = 0;

  void criterion(int number, const std::string& title, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %2d. %s%s%s\n", ok ? "PASS" : "FAIL", number, title.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string g_cli;
fs::path g_tmp;

std::string run_capture(const std::string& args, int& exit_code) {
  const fs::path out = g_tmp / "acc_stdout.txt";
  const std::string cmd = g_cli + " " + args + " >" + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  exit_code = status == -1 ? -1 : WEXITSTATUS(status);
  std::ifstream in(out, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
  g_tmp = fs::temp_directory_path() / "dotcavity_acceptance";
  fs::create_directories(g_tmp);

  Harness h;
  const SpaceLayout layout = two_qubit_cavity_layout(3);
  const GateConstants gc;

  h.criterion(1, "CNOT truth table, phase exact, phi-independent, < 1 s", [&](std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double phi : {0.0, kPi / 3.0, 1.7}) {
      const OperatorM u = cnot(layout, "j", "k", phi);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const Ket in = Ket::basis_state(layout, {a, b, 0});
          const Ket out = Ket::basis_state(layout, {a, a ^ b, 0});
          worst = std::max(worst, (u.entries * in.amplitudes - out.amplitudes).cwiseAbs().maxCoeff());
        }
    }
    const double elapsed = seconds_since(t0);
    detail = "max deviation " + fmt(worst) + ", " + fmt(elapsed) + " s";
    return worst <= 1e-9 && elapsed < 1.0;
  });

  h.criterion(2, "composite-pulse diagonal (1, e^{-i pi/sqrt2}, e^{i pi/sqrt2}, -1)", [&](std::string& detail) {
    const OperatorM p = p_gate(layout, "k");
    const int sub[4] = {basis_index(layout, {0, 0, 0}), basis_index(layout, {0, 0, 1}),
                        basis_index(layout, {0, 1, 0}), basis_index(layout, {0, 1, 1})};
    const Complex want[4] = {1.0, std::polar(1.0, -kPi / std::numbers::sqrt2),
                             std::polar(1.0, kPi / std::numbers::sqrt2), -1.0};
    double diag_dev = 0.0, leak = 0.0;
    for (int i = 0; i < 4; ++i) {
      diag_dev = std::max(diag_dev, std::abs(p.entries(sub[i], sub[i]) - want[i]));
      for (int m = 0; m < layout.dimension(); ++m) {
        if (m == sub[i]) continue;
        leak = std::max({leak, std::abs(p.entries(m, sub[i])), std::abs(p.entries(sub[i], m))});
      }
    }
    detail = "diag dev " + fmt(diag_dev) + ", leakage " + fmt(leak);
    return diag_dev <= 1e-9 && leak <= 1e-10;
  });

  h.criterion(3, "photon-conditional gate action; alternate phi0 reading fails", [&](std::string& detail) {
    const OperatorM g = g_gate(layout, "k");
    const auto in = [&](int b, int n) { return Ket::basis_state(layout, {0, b, n}); };
    const Complex dg = gc.delta_g;
    double dev = 0.0;
    const auto check_map = [&](const Ket& from, const Complex& amp, const Ket& to) {
      dev = std::max(dev, (g.entries * from.amplitudes - amp * to.amplitudes).cwiseAbs().maxCoeff());
    };
    check_map(in(0, 0), dg, in(0, 0));
    check_map(in(0, 1), -std::conj(dg), in(1, 1));
    check_map(in(1, 0), dg, in(1, 0));
    check_map(in(1, 1), -std::conj(dg), in(0, 1));

    // negative control: phi0 = pi*sqrt2/2 instead of pi/(2 sqrt2)
    const double phi0_alt = kPi * std::numbers::sqrt2 / 2.0;
    const Matrix g_alt = hadamard(layout, "k").entries * p_gate(layout, "k").entries *
                         phase_z(layout, "k", phi0_alt).entries * hadamard(layout, "k").entries;
    double alt_dev = 0.0;
    for (int b1 = 0; b1 < 2; ++b1)
      for (int b2 = 0; b2 < 2; ++b2) {
        const int row = basis_index(layout, {0, b1, 0});
        const int col = basis_index(layout, {0, b2, 0});
        const Complex want = b1 == b2 ? std::polar(1.0, phi0_alt) : Complex{0.0, 0.0};
        alt_dev = std::max(alt_dev, std::abs(g_alt(row, col) - want));
      }
    detail = "mapping dev " + fmt(dev) + ", alternate-reading margin " + fmt(alt_dev);
    return dev <= 1e-9 && alt_dev > 1e-2;
  });

  h.criterion(4, "red-sideband swap identities over 5 phases", [&](std::string& detail) {
    double worst = 0.0;
    for (double phi : {0.0, 0.5, kPi / 3.0, 1.7, 2.0 * kPi - 0.3}) {
      const OperatorM r = red_sideband(layout, "j", kPi, phi);
      const Ket e0 = Ket::basis_state(layout, {1, 0, 0});
      const Ket v1 = Ket::basis_state(layout, {0, 0, 1});
      worst = std::max(worst, (r.entries * e0.amplitudes -
                               Complex{0.0, 1.0} * std::polar(1.0, -phi) * v1.amplitudes)
                                  .cwiseAbs().maxCoeff());
      worst = std::max(worst, (r.entries * v1.amplitudes -
                               Complex{0.0, 1.0} * std::polar(1.0, phi) * e0.amplitudes)
                                  .cwiseAbs().maxCoeff());
    }
    detail = "max deviation " + fmt(worst);
    return worst <= 1e-10;
  });

  h.criterion(5, "no population above two photons during the CNOT sequence", [&](std::string& detail) {
    double worst = 0.0;
    std::vector<OperatorM> compiled;
    for (const PulseSpec& ps : cnot_pulse_sequence("j", "k", 0.0))
      compiled.push_back(compile_pulse(layout, ps));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        Ket state = Ket::basis_state(layout, {a, b, 0});
        for (const OperatorM& u : compiled) {
          state = apply(u, state);
          worst = std::max(worst, population(state, "cav", 3));
        }
      }
    detail = "max population " + fmt(worst);
    return worst <= 1e-10;
  });

  h.criterion(6, "adiabatic elimination: 5% / 0.05 bounds, both tighten 4x at delta=4meV, < 5 s",
              [&](std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const EliminationReport near = validate_elimination({0.1, 0.1, 1.0, 0.0, 2});
    const EliminationReport far = validate_elimination({0.1, 0.1, 4.0, 0.0, 2});
    const double elapsed = seconds_since(t0);
    detail = "dev " + fmt(near.rel_deviation) + " -> " + fmt(far.rel_deviation) +
             ", pop " + fmt(near.max_etilde_population) + " -> " + fmt(far.max_etilde_population) +
             ", " + fmt(elapsed) + " s";
    return near.rel_deviation <= 0.05 && near.max_etilde_population <= 0.05 &&
           far.rel_deviation <= 0.05 / 4.0 && far.max_etilde_population <= 0.05 / 4.0 &&
           far.rel_deviation * 4.0 <= near.rel_deviation &&
           far.max_etilde_population * 4.0 <= near.max_etilde_population && elapsed < 5.0;
  });

  h.criterion(7, "separation factor 1e-6 within 0.1%; enhancement identity to 1e-9", [&](std::string& detail) {
    const double gamma = separation_factor(0.01, 10.0);
    const double gamma_rel = std::abs(gamma - 1e-6) / 1e-6;

    BudgetParams params = paper_preset();
    params.tau_d_intra_ps = 1000.0;
    params.gamma = 1e-6;
    const BudgetReport report = make_report(params);
    const double enh_rel = std::abs(report.enhancement - 1e3) / 1e3;

    BudgetParams at_preset_gamma = params;
    at_preset_gamma.gamma = gamma;
    const double identity_rel =
        std::abs(make_report(at_preset_gamma).enhancement - 1.0 / std::sqrt(gamma)) *
        std::sqrt(gamma);
    detail = "gamma rel " + fmt(gamma_rel) + ", enhancement rel " + fmt(enh_rel) +
             ", identity rel " + fmt(identity_rel);
    return gamma_rel <= 1e-3 && enh_rel <= 1e-9 && identity_rel <= 1e-9;
  });

  h.criterion(8, "rate/time duality exact; mis-united input rejected at construction", [&](std::string& detail) {
    const IntraDotRates rates{0.37e-3, 0.21e-3, 0.42e-3};
    const bool bitwise = decoherence_time_from_rates(3.7e-5, rates) ==
                         decoherence_time(3.7e-5, 1.0 / rates.total());
    const IntraDotRates pow2{0.25, 0.125, 0.125};
    const double gamma = std::pow(2.0, -20);
    const bool exact =
        decoherence_time(gamma, 1.0 / pow2.total()) == 1.0 / scale_rates(gamma, pow2).total();

    bool rejected = false;
    try {
      BudgetParams::from_quantities(scalar(0.5), mev(0.1), mev(0.1), megahertz(300.0),
                                    megahertz(1.0));  // MHz where meV expected
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    detail = std::string("bitwise ") + (bitwise ? "yes" : "no") + ", pow2-exact " +
             (exact ? "yes" : "no") + ", rejection " + (rejected ? "yes" : "no");
    return bitwise && exact && rejected;
  });

  h.criterion(9, "noise sanity: noiseless fidelity, exponential decay, gamma trend, < 30 s",
              [&](std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto plan = timed_cnot_plan("j", "k", 0.3, 0.1, 0.01);
    const double f_clean = cnot_fidelity_under_noise(1.0, NoiseChannels{}, plan);

    const SpaceLayout nlayout = noise_layout(2);
    const double rate = 2e-3;
    const OperatorM h0{nlayout, Matrix::Zero(nlayout.dimension(), nlayout.dimension())};
    const int e_index = basis_index(nlayout, {kLevelE, kLevelV, 0});
    const DensityOp decayed =
        lindblad_evolve(h0, NoiseChannels{rate, 0, 0, 0},
                        DensityOp::pure(Ket::basis_state(nlayout, {kLevelE, kLevelV, 0})),
                        500.0, 10.0);
    const double decay_err =
        std::abs(decayed.entries(e_index, e_index).real() - std::exp(-rate * 500.0));

    const NoiseChannels intra{1e-3, 5e-4, 5e-4, 0.0};
    const double f_gamma = cnot_fidelity_under_noise(1e-2, intra, plan);
    const double f_separated = cnot_fidelity_under_noise(1e-4, intra, plan);
    const double elapsed = seconds_since(t0);
    detail = "1-f " + fmt(1.0 - f_clean) + ", decay err " + fmt(decay_err) + ", trend " +
             fmt(f_gamma) + " -> " + fmt(f_separated) + ", " + fmt(elapsed) + " s";
    return f_clean >= 1.0 - 1e-6 && decay_err <= 1e-6 && f_separated > f_gamma && elapsed < 30.0;
  });

  h.criterion(10, "byte-identical verify / budget / 10x10 sweep reruns", [&](std::string& detail) {
    if (g_cli.empty()) {
      detail = "no --cli path given";
      return false;
    }
    const std::string sweep_flags =
        "sweep --tau-d-intra 1ns --t-min 0.001meV --t-max 0.1meV --t-points 10 "
        "--delta-min 1meV --delta-max 20meV --delta-points 10";
    int code_a = 0, code_b = 0;
    for (const std::string& args :
         {std::string("verify"), std::string("budget --preset paper --tau-d-intra 1ns"),
          sweep_flags}) {
      const std::string a = run_capture(args, code_a);
      const std::string b = run_capture(args, code_b);
      if (a != b || a.empty() || code_a != code_b) {
        detail = "mismatch for: " + args;
        return false;
      }
    }
    detail = "3 commands, 2 runs each";
    return true;
  });

  if (h.failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", h.failures);
  return 1;
}
