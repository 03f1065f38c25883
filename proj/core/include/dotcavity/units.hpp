#pragma once

#include <string>
#include <string_view>

namespace dotcavity {

/// hbar in meV*ps; the bridge between meV energies and ps times.
inline constexpr double kHbarMeVPs = 0.6582119569;

/// Unit tag carried by every dimensional quantity entering the budget
/// pipeline. Mixed-unit arithmetic without an explicit conversion is a
/// construction-time error, not a silent scale bug.
enum class Unit {
  MilliEV,       // energy, meV
  MegaHz,        // ordinary (non-angular) frequency, MHz
  Picosecond,    // time, ps
  PerPicosecond, // rate, 1/ps
  Scalar,        // dimensionless
};

std::string_view unit_name(Unit u);

struct Quantity {
  double value = 0.0;
  Unit unit = Unit::Scalar;
};

inline Quantity mev(double v) { return {v, Unit::MilliEV}; }
inline Quantity megahertz(double v) { return {v, Unit::MegaHz}; }
inline Quantity picoseconds(double v) { return {v, Unit::Picosecond}; }
inline Quantity per_picosecond(double v) { return {v, Unit::PerPicosecond}; }
inline Quantity scalar(double v) { return {v, Unit::Scalar}; }

/// Tag-checked accessors. `what` names the offending field in the error.
double require_mev(const Quantity& q, std::string_view what);
double require_mhz(const Quantity& q, std::string_view what);
double require_ps(const Quantity& q, std::string_view what);
double require_per_ps(const Quantity& q, std::string_view what);
double require_scalar(const Quantity& q, std::string_view what);

/// How a coupling quoted as an ordinary frequency f maps to an energy.
/// Quoted vacuum Rabi frequencies are conventionally ordinary frequencies,
/// so E = 2*pi*hbar*f is the default; HbarF (E = hbar*f) is selectable for
/// sensitivity analysis.
enum class FrequencyToEnergy { TwoPiHbarF, HbarF };

double mev_from_mhz(double mhz, FrequencyToEnergy conv);

/// MHz -> meV under the given convention; meV passes through unchanged.
Quantity to_energy(const Quantity& q, FrequencyToEnergy conv, std::string_view what);

/// Parses "0.1meV", "300MHz", "2.5GHz", "1ns", "17ps", "1e-3/ps", "4/ns" or a
/// bare number (dimensionless). GHz and ns are sugar for MHz*1000 and ps*1000.
Quantity parse_quantity(std::string_view text);

std::string format_quantity(const Quantity& q);

}  // namespace dotcavity
